#include <algorithm>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

#include "tkklab/ueval.hpp"

namespace tkklab::ueval {

using exactnum::Rational;

int PBW::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

void PBW::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

PBW& PBW::operator+=(const PBW& o) {
  for (const auto& [m, c] : o.terms) add(m, c);
  return *this;
}

PBW& PBW::operator-=(const PBW& o) {
  for (const auto& [m, c] : o.terms) add(m, Scalar(-1) * c);
  return *this;
}

PBW& PBW::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

std::size_t Enveloping::Hash::operator()(const Monomial& m) const { return boost::hash_range(m.begin(), m.end()); }

Enveloping::Enveloping(std::shared_ptr<const lie::LieAlgebra> g) : g_(std::move(g)) {
  if (g_->dim() > 65535) throw std::invalid_argument("Lie algebra too large for 16-bit monomials");
}

PBW Enveloping::one() const { return constant(Scalar(1)); }

PBW Enveloping::constant(const Scalar& c) const {
  PBW p;
  p.add({}, c);
  return p;
}

PBW Enveloping::gen(std::size_t i) const {
  PBW p;
  p.add({static_cast<std::uint16_t>(i)}, Scalar(1));
  return p;
}

PBW Enveloping::lie(const SparseVec& x) const {
  PBW p;
  for (const auto& [k, c] : x) p.add({static_cast<std::uint16_t>(k)}, c);
  return p;
}

// m x with m normal: if x fits at the end, append; otherwise m = m' y with
// y > x and m' y x = (m' x) y + m' [y, x].
const PBW& Enveloping::insert(const Monomial& m, std::uint16_t x) const {
  Monomial key = m;
  key.push_back(x);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  PBW out;
  if (m.empty() || x >= m.back()) {
    out.add(key, Scalar(1));
  } else {
    const std::uint16_t y = m.back();
    Monomial head(m.begin(), m.end() - 1);
    PBW left = insert(head, x);
    out = mul_right(left, y);
    for (const auto& [k, c] : g_->bracket[y][x]) {
      PBW t = insert(head, static_cast<std::uint16_t>(k));
      out += t * c;
    }
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

PBW Enveloping::mul_right(const PBW& a, std::size_t x) const {
  PBW out;
  for (const auto& [m, c] : a.terms) {
    const PBW& t = insert(m, static_cast<std::uint16_t>(x));
    for (const auto& [mm, cc] : t.terms) out.add(mm, c * cc);
  }
  return out;
}

PBW Enveloping::mul(const PBW& a, const PBW& b) const {
  PBW out;
  for (const auto& [m, c] : b.terms) {
    PBW t = a;
    for (auto x : m) t = mul_right(t, x);
    out += t * c;
  }
  return out;
}

PBW Enveloping::commutator(const PBW& a, const PBW& b) const { return mul(a, b) - mul(b, a); }

PBW Enveloping::anticommutator(const PBW& a, const PBW& b) const { return mul(a, b) + mul(b, a); }

PBW Enveloping::normal_form(const std::vector<std::uint16_t>& word) const {
  PBW t = one();
  for (auto x : word) t = mul_right(t, x);
  return t;
}

PBW Enveloping::normal_form_random(const std::vector<std::uint16_t>& word, std::mt19937_64& rng) const {
  std::map<std::vector<std::uint16_t>, Scalar> work{{word, Scalar(1)}};
  PBW done;
  auto add = [&](const std::vector<std::uint16_t>& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = work.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const auto& w = node.key();
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) bad.push_back(i);
    if (bad.empty()) {
      done.add(w, node.mapped());
      continue;
    }
    std::size_t i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
    auto swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    add(swapped, node.mapped());
    for (const auto& [k, c] : g_->bracket[w[i]][w[i + 1]]) {
      std::vector<std::uint16_t> v(w.begin(), w.begin() + i);
      v.push_back(static_cast<std::uint16_t>(k));
      v.insert(v.end(), w.begin() + i + 2, w.end());
      add(v, node.mapped() * c);
    }
  }
  return done;
}

PBW Enveloping::map(const PBW& p, const Enveloping& source, const std::function<SparseVec(std::size_t)>& image) const {
  (void)source;
  std::map<std::size_t, PBW> cache;
  auto img = [&](std::size_t i) -> const PBW& {
    auto it = cache.find(i);
    if (it == cache.end()) it = cache.emplace(i, lie(image(i))).first;
    return it->second;
  };
  PBW out;
  for (const auto& [m, c] : p.terms) {
    PBW t = one();
    for (auto x : m) t = mul(t, img(x));
    out += t * c;
  }
  return out;
}

std::string Enveloping::format(const PBW& p) const {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (auto x : m) s += "*" + g_->labels[x];
  }
  return s;
}

// ---------------------------------------------------------------------------

TkkGenerators::TkkGenerators(std::shared_ptr<const tkk::Tkk> t)
    : T(std::move(t)), U(std::make_shared<Enveloping>(std::make_shared<lie::LieAlgebra>(T->g))),
      rho(jordan::rank_degree(*T->J).rho), weights(jordan::orthonormal_weights(*T->J)) {}

PBW TkkGenerators::osum(const std::function<PBW(const Vec&)>& f) const {
  PBW out;
  for (std::size_t a = 0; a < D(); ++a) out += f(basis(a)) * weights[a];
  return out;
}

Vec TkkGenerators::tri(const Vec& u, const Vec& v, const Vec& z) const { return tkk::triple(*T->J, u, v, z); }

Vec TkkGenerators::jmul(const Vec& u, const Vec& v) const { return jordan::jmul(*T->J, u, v); }

QElements q_elements(const TkkGenerators& G, const Scalar& a, const std::optional<Vec>& u) {
  const Enveloping& U = *G.U;
  const Scalar rho(G.rho);
  const Scalar half(Rational(1, 2));
  const Vec e = G.e();
  QElements q;
  q.Q1 = G.osum([&](const Vec& b) { return U.square(G.L(b)); }) * Scalar(Rational(2, G.rho)) - U.square(G.L(e)) -
         U.anticommutator(G.X(e), G.Y(e)) * half + U.constant(a);
  q.Q1prime = G.osum([&](const Vec& b) { return U.anticommutator(G.X(b), G.Y(b)); }) -
              (U.square(G.L(e)) + U.constant(a)) * (Scalar(2) * rho);
  q.Q2 = G.osum([&](const Vec& b) { return U.square(G.X(b)); }) - U.square(G.X(e)) * rho;
  if (u) {
    const Vec& x = *u;
    q.Q3 = G.osum([&](const Vec& b) { return U.anticommutator(G.X(b), G.X(G.jmul(b, x))); }) -
           U.anticommutator(G.X(e), G.X(x)) * rho;
    const Vec x2 = G.jmul(x, x);
    PBW t1 = G.osum([&](const Vec& b) {
      Vec w = exactnum::sub(G.jmul(b, x2), G.jmul(x, G.jmul(x, b)));
      return U.anticommutator(G.L(b), G.L(w));
    });
    PBW t2 = G.osum([&](const Vec& b) { return U.square(U.commutator(G.L(x), G.L(b))); });
    q.Q4 = t1 * Scalar(Rational(2, G.rho)) + t2 * Scalar(Rational(4, G.rho)) + U.anticommutator(G.X(x), G.Y(x)) -
           U.anticommutator(G.X(x2), G.Y(e)) * half - U.anticommutator(G.X(e), G.Y(x2)) * half;
  }
  return q;
}

Report verify_q1_relations(const TkkGenerators& G) {
  const Enveloping& U = *G.U;
  Report rep;
  auto q = q_elements(G, Scalar(Rational(1, 3)));
  const Vec e = G.e();
  PBW lhs = U.commutator(q.Q1, G.X(e));
  PBW sum = G.osum([&](const Vec& b) { return U.anticommutator(G.L(b), G.X(b)); });
  PBW rhs = (sum - U.anticommutator(G.L(e), G.X(e)) * Scalar(G.rho)) * Scalar(Rational(2, G.rho));
  std::string detail;
  if (lhs != rhs) detail = "difference " + U.format(lhs - rhs);
  rep.add("ueval.q1_xe_identity", lhs == rhs, detail);

  const PBW both = q.Q1prime + q.Q1 * Scalar(2 * G.rho);
  auto xy = [&](const PBW& p) { return U.commutator(U.commutator(p, G.X(e)), G.Y(e)); };
  auto eq = [&](const std::string& name, const PBW& l, const PBW& r) {
    rep.add(name, l == r, l == r ? "" : "difference " + U.format(l - r));
  };
  eq("ueval.q1_to_q1prime", xy(q.Q1), both * Scalar(Rational(-2, G.rho)));
  eq("ueval.q1prime_to_q1", xy(q.Q1prime), both * Scalar(-2));
  return rep;
}

// ---------------------------------------------------------------------------

AdaptedU::AdaptedU(std::shared_ptr<const cartan::CartanBasis> C)
    : C_(std::move(C)), U_(std::make_shared<Enveloping>(std::make_shared<lie::LieAlgebra>(C_->g))), G_(C_->T) {}

PBW AdaptedU::adapt(const PBW& p) const {
  return U_->map(p, *G_.U, [&](std::size_t i) { return C_->to_adapted[i]; });
}

HwEvalResult hw_eval(const AdaptedU& A, const PBW& p) {
  using Part = cartan::CartanBasis::Part;
  const auto& C = A.C();
  const std::size_t nv = C.coords;
  HwEvalResult r;
  r.scalar_part = Poly(nv);
  std::map<std::uint16_t, Poly> forms;
  auto form = [&](std::uint16_t i) -> const Poly& {
    auto it = forms.find(i);
    if (it == forms.end()) {
      std::vector<Scalar> c;
      for (const auto& x : C.cartan_form(i)) c.push_back(Scalar(x));
      it = forms.emplace(i, Poly::linear(c)).first;
    }
    return it->second;
  };
  for (const auto& [m, c] : p.terms) {
    if (!m.empty() && C.part[m.back()] == Part::Positive) {
      r.annihilated.add(m, c);
      continue;
    }
    if (!m.empty() && C.part[m.front()] == Part::Negative) {
      r.residual.add(m, c);
      continue;
    }
    Poly t = Poly::constant(nv, c);
    for (auto x : m) t = t * form(x);
    r.scalar_part += t;
  }
  return r;
}

Scalar hw_value(const HwEvalResult& r, const std::vector<Rational>& lambda) {
  std::vector<Scalar> x;
  for (const auto& v : lambda) x.push_back(Scalar(v));
  return r.scalar_part.eval(x);
}

// ---------------------------------------------------------------------------

namespace {

struct Lemma {
  const TkkGenerators& G;
  const Enveloping& U;
  Scalar rho;

  PBW X(const Vec& u) const { return G.X(u); }
  PBW Y(const Vec& u) const { return G.Y(u); }
  PBW S(const Vec& u, const Vec& v) const { return G.S(u, v); }
  PBW ac(const PBW& a, const PBW& b) const { return U.anticommutator(a, b); }
  PBW m(const PBW& a, const PBW& b) const { return U.mul(a, b); }
  Vec t(const Vec& u, const Vec& v, const Vec& z) const { return G.tri(u, v, z); }
  PBW os(const std::function<PBW(const Vec&)>& f) const { return G.osum(f); }
  PBW L(const Vec& u) const { return G.L(u); }
  Vec e() const { return G.e(); }

  PBW A1(const Vec& b) const {
    return os([&](const Vec& a) { return ac(X(a), S(b, a)); }) * Scalar(2) - ac(L(e()), X(b)) * (Scalar(2) * rho);
  }
  PBW A2(const Vec& g) const {
    return os([&](const Vec& a) { return ac(Y(a), S(a, g)); }) * Scalar(-2) + ac(L(e()), Y(g)) * (Scalar(2) * rho);
  }
  PBW A11(const Vec& b, const Vec& b1) const {
    return os([&](const Vec& a) { return m(X(a), X(t(b, a, b1))); }) * Scalar(4) - m(X(b), X(b1)) * (Scalar(4) * rho);
  }
  PBW A22(const Vec& g, const Vec& g1) const {
    return os([&](const Vec& a) { return m(Y(a), Y(t(g, a, g1))); }) * Scalar(4) - m(Y(g), Y(g1)) * (Scalar(4) * rho);
  }
  // literal: Y_{S_{beta alpha}(gamma)} as printed; otherwise S'_{beta alpha}(gamma) = {alpha beta gamma}
  PBW A12(const Vec& b, const Vec& g, bool literal) const {
    return os([&](const Vec& a) { return ac(X(a), Y(literal ? t(b, a, g) : t(a, b, g))); }) * Scalar(-2) -
           os([&](const Vec& a) { return ac(S(a, g), S(b, a)); }) * Scalar(4) + ac(X(b), Y(g)) * (Scalar(2) * rho) +
           ac(S(b, g), L(e())) * (Scalar(4) * rho);
  }
  PBW A122(const Vec& b, const Vec& g, const Vec& g1) const {
    return (os([&](const Vec& a) { return ac(S(a, g), Y(t(a, b, g1))); }) +
            os([&](const Vec& a) { return ac(S(a, g1), Y(t(a, b, g))); }) +
            os([&](const Vec& a) { return ac(S(b, a), Y(t(g, a, g1))); })) *
               Scalar(4) -
           (ac(S(b, g1), Y(g)) + ac(S(b, g), Y(g1)) + ac(L(e()), Y(t(g, b, g1)))) * (Scalar(4) * rho);
  }
  PBW A1222(const Vec& b, const Vec& g, const Vec& g1, const Vec& g2) const {
    return (os([&](const Vec& a) { return m(Y(t(g, a, g2)), Y(t(a, b, g1))); }) +
            os([&](const Vec& a) { return m(Y(t(g1, a, g2)), Y(t(a, b, g))); }) +
            os([&](const Vec& a) { return m(Y(t(a, b, g2)), Y(t(g, a, g1))); })) *
               Scalar(-8) +
           (m(Y(t(g1, b, g2)), Y(g)) + m(Y(t(g, b, g2)), Y(g1)) + m(Y(g2), Y(t(g, b, g1)))) * (Scalar(8) * rho);
  }
  PBW A112(const Vec& b, const Vec& b1, const Vec& g) const {
    return (os([&](const Vec& a) { return ac(X(a), S(t(b, a, b1), g)); }) +
            os([&](const Vec& a) { return ac(X(t(b, a, b1)), S(a, g)); })) *
               Scalar(-4) +
           (ac(X(b), S(b1, g)) + ac(X(b1), S(b, g))) * (Scalar(4) * rho);
  }
  PBW A1122(const Vec& b, const Vec& b1, const Vec& g, const Vec& g1) const {
    auto bab = [&](const Vec& a) { return t(b, a, b1); };
    return os([&](const Vec& a) { return ac(X(a), Y(t(g, bab(a), g1))); }) * Scalar(4) +
           os([&](const Vec& a) { return ac(S(a, g1), S(bab(a), g)); }) * Scalar(8) +
           os([&](const Vec& a) { return ac(X(bab(a)), Y(t(g, a, g1))); }) * Scalar(4) +
           os([&](const Vec& a) { return ac(S(bab(a), g1), S(a, g)); }) * Scalar(8) -
           ac(X(b), Y(t(g, b1, g1))) * (Scalar(4) * rho) - ac(S(b, g1), S(b1, g)) * (Scalar(8) * rho) -
           ac(X(b1), Y(t(g, b, g1))) * (Scalar(4) * rho) - ac(S(b1, g1), S(b, g)) * (Scalar(8) * rho);
  }
  PBW A11222(const Vec& b, const Vec& b1, const Vec& g, const Vec& g1, const Vec& g2) const {
    auto bab = [&](const Vec& a) { return t(b, a, b1); };
    return (os([&](const Vec& a) { return ac(S(a, g2), Y(t(g, bab(a), g1))); }) +
            os([&](const Vec& a) { return ac(S(a, g1), Y(t(g, bab(a), g2))); }) +
            os([&](const Vec& a) { return ac(S(bab(a), g), Y(t(g1, a, g2))); }) +
            os([&](const Vec& a) { return ac(S(bab(a), g2), Y(t(g, a, g1))); }) +
            os([&](const Vec& a) { return ac(S(bab(a), g1), Y(t(g, a, g2))); }) +
            os([&](const Vec& a) { return ac(S(a, g), Y(t(g1, bab(a), g2))); })) *
               Scalar(-8) +
           (ac(S(b, g2), Y(t(g, b1, g1))) + ac(S(b, g1), Y(t(g, b1, g2))) + ac(S(b1, g), Y(t(g1, b, g2))) +
            ac(S(b1, g2), Y(t(g, b, g1))) + ac(S(b1, g1), Y(t(g, b, g2))) + ac(S(b, g), Y(t(g1, b1, g2)))) *
               (Scalar(8) * rho);
  }
  PBW A112222(const Vec& b, const Vec& b1, const Vec& g, const Vec& g1, const Vec& g2, const Vec& g3) const {
    auto bab = [&](const Vec& a) { return t(b, a, b1); };
    return (os([&](const Vec& a) { return m(Y(t(g2, a, g3)), Y(t(g, bab(a), g1))); }) +
            os([&](const Vec& a) { return m(Y(t(g1, a, g3)), Y(t(g, bab(a), g2))); }) +
            os([&](const Vec& a) { return m(Y(t(g, bab(a), g3)), Y(t(g1, a, g2))); }) +
            os([&](const Vec& a) { return m(Y(t(g2, bab(a), g3)), Y(t(g, a, g1))); }) +
            os([&](const Vec& a) { return m(Y(t(g1, bab(a), g3)), Y(t(g, a, g2))); }) +
            os([&](const Vec& a) { return m(Y(t(g, a, g3)), Y(t(g1, bab(a), g2))); })) *
               Scalar(16) -
           (m(Y(t(g2, b, g3)), Y(t(g, b1, g1))) + m(Y(t(g1, b, g3)), Y(t(g, b1, g2))) +
            m(Y(t(g, b1, g3)), Y(t(g1, b, g2))) + m(Y(t(g2, b1, g3)), Y(t(g, b, g1))) +
            m(Y(t(g1, b1, g3)), Y(t(g, b, g2))) + m(Y(t(g, b, g3)), Y(t(g1, b1, g2)))) *
               (Scalar(16) * rho);
  }
};

std::string tuple_str(const TkkGenerators& G, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  for (auto i : idx) s += (s.size() > 1 ? "," : "") + G.T->J->labels[i];
  return s + ")";
}

// One report line per identity: first failing tuple as witness.
struct Tally {
  std::size_t checked = 0;
  std::string witness;
  void check(bool ok, const std::function<std::string()>& w) {
    ++checked;
    if (!ok && witness.empty()) witness = w();
  }
  void report(Report& rep, const std::string& name) const {
    rep.add(name, witness.empty(), witness, {{"tuples", checked}});
  }
};

}  // namespace

Report verify_nested_brackets(const TkkGenerators& G, const NestedBracketOptions& opt) {
  const Enveloping& U = *G.U;
  Report rep;
  Lemma lm{G, U, Scalar(G.rho)};
  const std::size_t D = G.D();
  auto q = q_elements(G, Scalar(Rational(1, 3)));  // the constant drops out of every bracket
  const PBW& Q = q.Q1prime;
  auto b = [&](std::size_t i) { return G.basis(i); };
  auto br = [&](const PBW& p, const PBW& x) { return U.commutator(p, x); };
  const std::string pre = "brackets.";

  Tally tl;
  std::vector<PBW> A1(D), A2(D);
  for (std::size_t i = 0; i < D; ++i) {
    tl.check(br(Q, G.L(b(i))).is_zero(), [&] { return "beta=" + tuple_str(G, {i}); });
  }
  tl.report(rep, pre + "Q1p_L");

  Tally t1, t2;
  for (std::size_t i = 0; i < D; ++i) {
    A1[i] = br(Q, G.X(b(i)));
    A2[i] = br(Q, G.Y(b(i)));
    t1.check(A1[i] == lm.A1(b(i)), [&] { return "beta=" + tuple_str(G, {i}); });
    t2.check(A2[i] == lm.A2(b(i)), [&] { return "gamma=" + tuple_str(G, {i}); });
  }
  t1.report(rep, pre + "A1");
  t2.report(rep, pre + "A2");

  Tally t11, t22, t12, z11, z22, t122, t112;
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) {
      PBW a11 = br(A1[i], G.X(b(j)));
      PBW a22 = br(A2[i], G.Y(b(j)));
      PBW a12 = br(A1[i], G.Y(b(j)));
      t11.check(a11 == lm.A11(b(i), b(j)), [&] { return "(beta,beta1)=" + tuple_str(G, {i, j}); });
      t22.check(a22 == lm.A22(b(i), b(j)), [&] { return "(gamma,gamma1)=" + tuple_str(G, {i, j}); });
      t12.check(a12 == lm.A12(b(i), b(j), opt.literal_a12), [&] { return "(beta,gamma)=" + tuple_str(G, {i, j}); });
      for (std::size_t k = 0; k < D; ++k) {
        z11.check(br(a11, G.X(b(k))).is_zero(), [&] { return "(beta,beta1,beta2)=" + tuple_str(G, {i, j, k}); });
        z22.check(br(a22, G.Y(b(k))).is_zero(), [&] { return "(gamma,gamma1,gamma2)=" + tuple_str(G, {i, j, k}); });
        if (opt.deep) {
          t122.check(br(a12, G.Y(b(k))) == lm.A122(b(i), b(j), b(k)),
                     [&] { return "(beta,gamma,gamma1)=" + tuple_str(G, {i, j, k}); });
          t112.check(br(a11, G.Y(b(k))) == lm.A112(b(i), b(j), b(k)),
                     [&] { return "(beta,beta1,gamma)=" + tuple_str(G, {i, j, k}); });
        }
      }
    }
  t11.report(rep, pre + "A11");
  t22.report(rep, pre + "A22");
  t12.report(rep, pre + "A12");
  z11.report(rep, pre + "A11_X_vanishes");
  z22.report(rep, pre + "A22_Y_vanishes");
  if (!opt.deep) return rep;
  t122.report(rep, pre + "A122");
  t112.report(rep, pre + "A112");

  // Sampled tuples for four or more indices.
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, D - 1);
  Tally t1222, z1222, t1122, t11222, t112222, z112222;
  for (int s = 0; s < opt.samples; ++s) {
    std::size_t i = pick(rng), i1 = pick(rng), j = pick(rng), j1 = pick(rng), j2 = pick(rng), j3 = pick(rng),
                j4 = pick(rng);
    PBW a12 = br(A1[i], G.Y(b(j)));
    PBW a1222 = br(br(a12, G.Y(b(j1))), G.Y(b(j2)));
    t1222.check(a1222 == lm.A1222(b(i), b(j), b(j1), b(j2)),
                [&] { return "(beta,gamma,gamma1,gamma2)=" + tuple_str(G, {i, j, j1, j2}); });
    z1222.check(br(a1222, G.Y(b(j3))).is_zero(),
                [&] { return "(beta,gamma,gamma1,gamma2,gamma3)=" + tuple_str(G, {i, j, j1, j2, j3}); });
    PBW a112 = br(br(A1[i], G.X(b(i1))), G.Y(b(j)));
    PBW a1122 = br(a112, G.Y(b(j1)));
    t1122.check(a1122 == lm.A1122(b(i), b(i1), b(j), b(j1)),
                [&] { return "(beta,beta1,gamma,gamma1)=" + tuple_str(G, {i, i1, j, j1}); });
    PBW a11222 = br(a1122, G.Y(b(j2)));
    t11222.check(a11222 == lm.A11222(b(i), b(i1), b(j), b(j1), b(j2)),
                 [&] { return "(beta,beta1,gamma,gamma1,gamma2)=" + tuple_str(G, {i, i1, j, j1, j2}); });
    PBW a112222 = br(a11222, G.Y(b(j3)));
    t112222.check(a112222 == lm.A112222(b(i), b(i1), b(j), b(j1), b(j2), b(j3)),
                  [&] { return "(beta,beta1,gamma,gamma1,gamma2,gamma3)=" + tuple_str(G, {i, i1, j, j1, j2, j3}); });
    z112222.check(br(a112222, G.Y(b(j4))).is_zero(), [&] {
      return "(beta,beta1,gamma,gamma1,gamma2,gamma3,gamma4)=" + tuple_str(G, {i, i1, j, j1, j2, j3, j4});
    });
  }
  t1222.report(rep, pre + "A1222");
  z1222.report(rep, pre + "A1222_Y_vanishes");
  t1122.report(rep, pre + "A1122");
  t11222.report(rep, pre + "A11222");
  t112222.report(rep, pre + "A112222");
  z112222.report(rep, pre + "A112222_Y_vanishes");
  return rep;
}

}  // namespace tkklab::ueval
