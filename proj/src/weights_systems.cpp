#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tkklab/weights.hpp"

namespace tkklab::weights {

namespace {

// Polynomials in lambda_1..lambda_N (1-based) and a.
struct Vars {
  std::size_t N;
  Poly l(std::size_t i) const { return Poly::variable(N + 1, i - 1); }
  Poly a() const { return Poly::variable(N + 1, N); }
  Poly c(const Rational& r) const { return Poly::constant(N + 1, Scalar(r)); }
  Poly zero() const { return Poly(N + 1); }
};

Poly sq(const Poly& p) { return p * p; }
Poly times(const Rational& r, const Poly& p) { return p * Scalar(r); }

std::string ij(std::size_t i, std::size_t j) { return "e" + std::to_string(i) + std::to_string(j); }
std::string off(std::size_t i, std::size_t j) { return ij(i, j) + "^1"; }

Origin o3(std::vector<std::string> u) { return {Origin::Q::Q3, std::move(u)}; }
Origin o4(std::vector<std::string> u) { return {Origin::Q::Q4, std::move(u)}; }

// l_i <= l_j
Inequality le(const Vars& v, std::size_t i, std::size_t j) {
  return {"l" + std::to_string(i) + "<=l" + std::to_string(j), v.l(i) - v.l(j)};
}

void add_integrality(EquationSystem& sys) {
  const Vars v{sys.coords};
  for (const auto& r : cartan::root_system(sys.kind, sys.n)) {
    if (!r.positive || !r.compact) continue;
    Rational norm = cartan::dot(r.v, r.v);
    Poly p = v.zero();
    for (std::size_t i = 0; i < sys.coords; ++i) p += times(Rational(2) * r.v[i] / norm, v.l(i + 1));
    sys.integral.push_back({"coroot(" + cartan::root_str(r.v) + ")", p});
  }
}

EquationSystem sp_system(int n) {
  const std::size_t N = n;
  const Vars v{N};
  EquationSystem s;
  Poly sum = v.zero(), sumsq = v.zero(), tail = v.zero();
  for (std::size_t i = 1; i <= N; ++i) {
    sum += v.l(i);
    sumsq += sq(v.l(i));
    tail += times(Rational(static_cast<std::int64_t>(i - 1)), v.l(i));  // sum_{i<j} l_j
  }
  s.equations.push_back({"q1", sq(sum) + times(n + 1, sum) + times(4, v.a()), {{Origin::Q::Q1, {}}}});
  s.equations.push_back({"q2", sq(sum) - sumsq + tail, {{Origin::Q::Q2, {}}}});
  for (std::size_t i = 1; i <= N; ++i) {
    Poly rest = sum - v.l(i), after = v.zero();
    for (std::size_t j = i + 1; j <= N; ++j) after += v.l(j);
    // i = 1 and i = n are the same shape with an empty term
    Poly p = after + times(static_cast<std::int64_t>(i - 1), v.l(i)) + times(2, v.l(i) * rest);
    s.equations.push_back({"q3[" + ij(i, i) + "]", p, {o3({ij(i, i)})}});
  }
  Poly p = (times(2, v.l(1)) + times(2, v.l(N)) + v.c(1)) * sum + times(3 + n, v.l(N)) - times(3, v.l(1));
  s.equations.push_back({"q4[" + ij(1, N) + "]", p, {o4({off(1, N)})}});
  for (std::size_t i = 1; i < N; ++i) s.chain.push_back(le(v, i + 1, i));
  s.chain.push_back({"l1<=0", v.l(1)});
  return s;
}

EquationSystem su_system(int n) {
  const std::size_t N = 2 * n;
  const Vars v{N};
  EquationSystem s;
  auto D = [&](std::size_t i) { return v.l(i) - v.l(n + i); };
  Poly S = v.zero(), all = v.zero(), sumD2 = v.zero(), cross = v.zero(), first = v.zero();
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
    S += D(i);
    sumD2 += sq(D(i));
    first += v.l(i);
    for (std::size_t j = i + 1; j <= static_cast<std::size_t>(n); ++j) cross += v.l(j) - v.l(n + i);
  }
  for (std::size_t i = 1; i <= N; ++i) all += v.l(i);
  s.equations.push_back({"q1", sq(S) + times(2 * n, S) + times(4, v.a()), {{Origin::Q::Q1, {}}}});
  s.equations.push_back({"q2", sumD2 - sq(S) - times(2, cross), {{Origin::Q::Q2, {}}}});
  s.equations.push_back({"sum_zero", all, {}});
  std::vector<Poly> E(n + 1);
  for (int i = 1; i <= n; ++i) {
    Poly before = v.zero();
    for (int k = 1; k < i; ++k) before += v.l(k) + v.l(n + k);
    E[i] = sq(D(i)) + (v.c(2 - i) - S) * D(i) + times(n + 2 - 2 * i, v.l(n + i)) - first + before;
    s.equations.push_back({"q4[" + ij(i, i) + "]", E[i], {o3({ij(i, i)}), o4({ij(i, i)})}});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const std::string u = ij(i, i) + "+" + ij(j, j);
      s.equations.push_back(
          {"q4[" + u + "]", E[i] + E[j] + times(2, D(i) * D(j)) + times(2, v.l(j) - v.l(n + i)), {o4({ij(i, i), ij(j, j)})}});
      Derived d;
      d.eq = {"product[" + std::to_string(i) + "," + std::to_string(j) + "]", D(i) * D(j) + v.l(j) - v.l(n + i), {}};
      d.combination = {{"q4[" + u + "]", Rational(1, 2)}, {"q4[" + ij(i, i) + "]", Rational(-1, 2)}, {"q4[" + ij(j, j) + "]", Rational(-1, 2)}};
      s.derived.push_back(std::move(d));
    }
  for (int i = 1; i < n; ++i) s.chain.push_back(le(v, i + 1, i));
  s.chain.push_back(le(v, 1, N));
  for (int i = n + 1; i < static_cast<int>(N); ++i) s.chain.push_back(le(v, i + 1, i));
  return s;
}

EquationSystem sostar_system(int n, bool literal_e12) {
  const std::size_t N = 2 * n;
  const Vars v{N};
  EquationSystem s;
  auto P = [&](std::size_t i) { return v.l(i) + v.l(n + i); };
  auto pair_term = [&](std::size_t i, std::size_t j) { return v.l(j) + v.l(n + i) + times(2, v.l(n + j)); };
  Poly S = v.zero(), sumP2 = v.zero(), cross = v.zero(), second = v.zero(), weighted = v.zero();
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
    S += P(i);
    sumP2 += sq(P(i));
    second += v.l(n + i);
    weighted += v.l(i) + times(2, v.l(n + i));
    for (std::size_t j = i + 1; j <= static_cast<std::size_t>(n); ++j) cross += pair_term(i, j);
  }
  s.equations.push_back({"q1", sq(S) + times(4 * n - 2, S) + times(4, v.a()), {{Origin::Q::Q1, {}}}});
  s.equations.push_back({"q2", sumP2 - sq(S) - times(2, cross), {{Origin::Q::Q2, {}}}});
  std::vector<Poly> F(n + 1);
  for (int i = 1; i <= n; ++i) {
    Poly before = v.zero();
    for (int k = 1; k < i; ++k) before += P(k);
    F[i] = sq(P(i)) + (v.c(2 - i) - S) * P(i) - times(n - 2, v.l(n + i)) - second - S + before;
    s.equations.push_back({"q4[" + ij(i, i) + "]", F[i], {o3({ij(i, i)}), o4({ij(i, i)})}});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const std::string u = ij(i, i) + "+" + ij(j, j);
      s.equations.push_back({"q4[" + u + "]", F[i] + F[j] + times(2, P(i) * P(j)) + times(2, pair_term(i, j)),
                             {o4({ij(i, i), ij(j, j)})}});
      Derived d;
      d.eq = {"product[" + std::to_string(i) + "," + std::to_string(j) + "]", P(i) * P(j) + pair_term(i, j), {}};
      d.combination = {{"q4[" + u + "]", Rational(1, 2)}, {"q4[" + ij(i, i) + "]", Rational(-1, 2)}, {"q4[" + ij(j, j) + "]", Rational(-1, 2)}};
      s.derived.push_back(std::move(d));
    }
  const std::size_t a1 = 1, a2 = 2, b1 = n + 1, b2 = n + 2;
  Poly e12 = (v.l(a1) + v.l(a2) + v.l(b1) + v.l(b2)) * (v.c(n + 1) + S) + times(2, weighted) -
             sq(v.l(a1) - v.l(a2) - v.l(b1) + v.l(b2));
  if (literal_e12)
    e12 -= times(n + 1, v.l(a1)) + times(n - 3, v.l(a2)) + times(5, v.l(b1)) + v.l(b2);
  else
    e12 -= times(n + 3, v.l(a1)) + times(n - 1, v.l(a2)) + times(3, v.l(b1)) - v.l(b2);
  s.equations.push_back({literal_e12 ? "q4[e12]" : "q4[e12^1]", e12, {o4({off(1, 2)})}});
  if (!literal_e12) {
    // a second quaternionic direction; this one rules out (0,..,0,-3,..,-3)
    Poly e12j = (v.l(a1) + v.l(a2) + v.l(b1) + v.l(b2)) * (v.c(n + 1) + S) + times(2, weighted) -
                sq(v.l(a1) + v.l(a2) - v.l(b1) - v.l(b2)) - times(n + 3, v.l(a1) + v.l(a2)) + v.l(b1) + v.l(b2);
    s.equations.push_back({"q4[e12^2]", e12j, {o4({ij(1, 2) + "^2"})}});
  }
  for (std::size_t i = N; i > 2; --i) s.chain.push_back(le(v, i, i - 1));
  s.chain.push_back({"l2<=-l1", v.l(2) + v.l(1)});
  s.chain.push_back(le(v, 2, 1));
  return s;
}

EquationSystem e7_system(bool literal) {
  const Vars v{8};
  EquationSystem s;
  Poly T = times(2, v.l(6)) + v.l(8) - v.l(7);
  s.equations.push_back({"q1", sq(T) + times(18, T) + times(4, v.a()), {{Origin::Q::Q1, {}}}});
  Poly q2 = sq(T) - sq(v.l(6) - v.l(3)) - sq(v.l(6) + v.l(3)) - sq(v.l(8) - v.l(7)) +
            (times(24, v.l(6)) - times(4, v.l(3)) - times(2, v.l(4)) - times(2, v.l(5)));
  s.equations.push_back({"q2", q2, {{Origin::Q::Q2, {}}}});
  s.equations.push_back({"q3[e33]", v.l(6) * (v.c(4) - times(2, v.l(7))), {o3({"e33"})}});
  if (literal)
    s.equations.push_back({"q4[e33]", v.l(7) * (v.c(4) + v.l(6)), {o4({"e33"})}});
  else
    s.equations.push_back({"q4[e33]", v.l(6) * (v.c(4) + v.l(8) - v.l(7)), {o4({"e33"})}});
  // e7 + e8 pairs to zero with every root, so the weight is only fixed modulo it
  s.equations.push_back({"l7+l8=0", v.l(7) + v.l(8), {}});
  s.chain.push_back({"l5<=-l6", v.l(5) + v.l(6)});
  for (std::size_t i = 5; i > 2; --i) s.chain.push_back(le(v, i - 1, i));
  s.chain.push_back(le(v, 1, 2));
  s.chain.push_back({"-l1<=l2", -v.l(1) - v.l(2)});
  s.chain.push_back({"l8<=0", v.l(8)});
  s.chain.push_back({"0<=l7", -v.l(7)});
  for (std::size_t i = 1; i <= 5; ++i) {
    // l8 - l7 - sum_{j<=5, j!=i} l_j >= l6 - l_i
    Poly p = v.l(6) - v.l(i) - v.l(8) + v.l(7);
    for (std::size_t j = 1; j <= 5; ++j)
      if (j != i) p += v.l(j);
    s.chain.push_back({"extra[" + std::to_string(i) + "]", p});
  }
  return s;
}

Rational half_k_check(const Rational& k) {
  if (!(k * Rational(2)).is_integer()) throw std::invalid_argument("k must lie in Z/2: " + k.str());
  return k;
}

}  // namespace

std::string Origin::str() const {
  static const char* names[] = {"Q1", "Q2", "Q3", "Q4"};
  std::string s = names[static_cast<int>(q)];
  if (!u.empty()) {
    s += "(";
    for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "+" : "") + u[i];
    s += ")";
  }
  return s;
}

std::vector<std::string> EquationSystem::var_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= coords; ++i) names.push_back("l" + std::to_string(i));
  names.push_back("a");
  return names;
}

const Equation& EquationSystem::equation(const std::string& name) const {
  for (const auto& e : equations)
    if (e.name == name) return e;
  throw std::out_of_range("no equation " + name + " in " + algebra);
}

EquationSystem equations_for(Kind kind, int n, const SystemOptions& opt) {
  EquationSystem s;
  switch (kind) {
    case Kind::HermR:
      if (n < 2) throw std::invalid_argument("sp(n,R) equations need n >= 2");
      s = sp_system(n);
      break;
    case Kind::HermC:
      if (n < 2) throw std::invalid_argument("su(n,n) equations need n >= 2");
      s = su_system(n);
      break;
    case Kind::HermH:
      if (n < 2) throw std::invalid_argument("so*(4n) equations need n >= 2");
      s = sostar_system(n, opt.literal_secondary);
      break;
    case Kind::HermO3:
      s = e7_system(opt.literal_secondary);
      n = 3;
      break;
    case Kind::SpinFactor:
      throw std::invalid_argument("no highest-weight equation system for so(2,m+1)");
  }
  s.kind = kind;
  s.n = n;
  s.algebra = cartan::algebra_name(kind, n);
  s.coords = cartan::coordinate_count(kind, n);
  add_integrality(s);
  return s;
}

Report verify_derived(const EquationSystem& sys) {
  Report rep;
  for (const auto& d : sys.derived) {
    Poly combo(sys.coords + 1);
    for (const auto& [name, c] : d.combination) combo += sys.equation(name).p * Scalar(c);
    const bool ok = combo == d.eq.p;
    rep.add("weights.derived." + d.eq.name, ok, ok ? "" : "difference " + (combo - d.eq.p).str(sys.var_names()));
  }
  return rep;
}

std::vector<Rational> WeightFamily::k_values(const Rational& k_max) const {
  std::vector<Rational> out;
  for (Rational k = -k_max; k <= k_max; k += Rational(1, 2))
    if (admissible(k)) out.push_back(k);
  return out;
}

std::vector<WeightFamily> families(Kind kind, int n, const FamilyOptions& opt) {
  std::vector<WeightFamily> out;
  auto nonneg_int = [](const Rational& k) { return k.is_integer() && k.sign() >= 0; };
  switch (kind) {
    case Kind::SpinFactor: {
      if (n % 2 == 0) {
        const int h = n / 2;
        out.push_back({kind, n, "weight_k", "k=0 or 1/2",
                       [h](const Rational& k) {
                         Weight w(h + 1, k);
                         w[0] = -(Rational(h) + k - Rational(1, 2));
                         return w;
                       },
                       [](const Rational& k) { return k == Rational(0) || k == Rational(1, 2); }});
      } else {
        const int h = (n + 1) / 2;
        const bool integer_k = opt.odd_spin_integer_k;
        out.push_back({kind, n, "weight_k", integer_k ? "k in Z/2" : "k half-odd",
                       [h](const Rational& k) {
                         Weight w(h + 1, k.abs());
                         w[0] = -(Rational(h) + k.abs() - Rational(1));
                         w[h] = k;
                         return w;
                       },
                       [integer_k](const Rational& k) {
                         Rational t = k * Rational(2);
                         if (!t.is_integer()) return false;
                         return integer_k || t.num() % 2 != 0;
                       }});
      }
      break;
    }
    case Kind::HermR:
      out.push_back({kind, n, "weight_k", "k=0,1",
                     [n](const Rational& k) {
                       Weight w(n, Rational(-1, 2));
                       w[n - 1] = Rational(-1, 2) - k;
                       return w;
                     },
                     [](const Rational& k) { return k == Rational(0) || k == Rational(1); }});
      break;
    case Kind::HermC:
      out.push_back({kind, n, "weight_k", "k=0,1,...",
                     [n](const Rational& k) {
                       const Rational two_n(2 * n);
                       Weight w(2 * n, (Rational(n) - k) / two_n);
                       for (int i = 0; i < n; ++i) w[i] = -(Rational(n) + k) / two_n;
                       w[n] += k;
                       return w;
                     },
                     nonneg_int});
      out.push_back({kind, n, "weight_k_mirror", "k=0,1,...",
                     [n](const Rational& k) {
                       const Rational two_n(2 * n);
                       Weight w(2 * n, (Rational(n) + k) / two_n);
                       for (int i = 0; i < n; ++i) w[i] = -(Rational(n) - k) / two_n;
                       w[n - 1] -= k;
                       return w;
                     },
                     nonneg_int});
      break;
    case Kind::HermH:
      out.push_back({kind, n, "weight_k", "k=0,1,...",
                     [n](const Rational& k) {
                       Weight w(2 * n, Rational(-1));
                       w[2 * n - 1] -= k;
                       return w;
                     },
                     nonneg_int});
      break;
    case Kind::HermO3:
      out.push_back({kind, 3, "weight_k", "k=0",
                     [](const Rational&) {
                       return Weight{0, 0, 0, 0, 0, -4, 2, -2};
                     },
                     [](const Rational& k) { return k.is_zero(); }});
      break;
  }
  return out;
}

Rational a_of(Kind kind, int n, const Rational& k, const FamilyOptions& opt) {
  const auto fams = families(kind, n, opt);
  half_k_check(k);
  if (!fams.front().admissible(k))
    throw std::invalid_argument("k=" + k.str() + " is not admissible for " + jordan::kind_name(kind) + "(" + std::to_string(n) +
                                "): " + fams.front().k_domain);
  const Rational N(n);
  switch (kind) {
    case Kind::SpinFactor:
      if (n % 2 == 0) {
        const Rational h(n / 2);
        return -(h - 1) * k + h - Rational(1, 2);
      } else {
        const Rational h((n + 1) / 2);
        return -k * k - (h - 2) * k.abs() + h - 1;
      }
    case Kind::HermR:
      return N * (N + 2) / Rational(16);
    case Kind::HermC:
      return (N * N - k * k) / Rational(4);
    case Kind::HermH:
      return N * N - N - k / Rational(2) - k * k / Rational(4);
    case Kind::HermO3:
      return Rational(18);
  }
  return Rational();
}

Rational joseph_a(Kind kind, int n) {
  const auto J = jordan::build_jordan(kind, n);
  const auto rd = jordan::rank_degree(J);
  const Rational rho(rd.rho), d(rd.d);
  return rho * d / Rational(4) * (Rational(1) + (rho - 2) * d / Rational(4));
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].str();
  return s + ")";
}

Weight parse_weight(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("weight must be a JSON array");
  Weight w;
  for (const auto& x : j) {
    if (x.is_string())
      w.push_back(Rational::parse(x.get<std::string>()));
    else if (x.is_number_integer())
      w.push_back(Rational(x.get<std::int64_t>()));
    else
      throw std::invalid_argument("weight entries must be integers or strings like \"-1/2\"");
  }
  return w;
}

}  // namespace tkklab::weights
