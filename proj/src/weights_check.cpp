#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>
#include <thread>

#include "tkklab/ueval.hpp"
#include "tkklab/weights.hpp"

namespace tkklab::weights {

namespace {

std::vector<Scalar> point(const Weight& lambda, const Rational& a) {
  std::vector<Scalar> x(lambda.begin(), lambda.end());
  x.push_back(Scalar(a));
  return x;
}

// Rational-coefficient polynomial flattened for the search loop.
struct Compiled {
  struct Term {
    Rational c;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> factors;
  };
  std::vector<Term> terms;
  std::size_t level = 0;  // largest lambda index used
  bool has_a = false;

  Compiled(const Poly& p, std::size_t a_var) {
    for (const auto& [e, c] : p.terms()) {
      Term t{c.rational_or_throw(), {}};
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) {
          t.factors.push_back({static_cast<std::uint8_t>(i), e[i]});
          if (i == a_var)
            has_a = true;
          else
            level = std::max(level, i);
        }
      terms.push_back(std::move(t));
    }
  }

  Rational eval(const std::vector<Rational>& x) const {
    Rational s;
    for (const auto& t : terms) {
      Rational m = t.c;
      for (auto [i, k] : t.factors)
        for (int r = 0; r < k; ++r) m *= x[i];
      s += m;
    }
    return s;
  }
};

struct Search {
  const EquationSystem& sys;
  std::vector<Rational> grid;
  // constraints grouped by the depth at which they become decidable
  std::vector<std::vector<Compiled>> eq_at, le_at, int_at;
  std::vector<Compiled> with_a;  // checked once a is known
  std::unique_ptr<Compiled> q1;

  explicit Search(const EquationSystem& s, std::vector<Rational> g) : sys(s), grid(std::move(g)) {
    const std::size_t N = s.coords;
    eq_at.resize(N);
    le_at.resize(N);
    int_at.resize(N);
    q1 = std::make_unique<Compiled>(s.equations.front().p, N);
    for (std::size_t i = 1; i < s.equations.size(); ++i) {
      Compiled c(s.equations[i].p, N);
      if (c.has_a)
        with_a.push_back(std::move(c));
      else
        eq_at[c.level].push_back(std::move(c));
    }
    for (const auto& q : s.chain) {
      Compiled c(q.p, N);
      le_at[c.level].push_back(std::move(c));
    }
    for (const auto& q : s.integral) {
      Compiled c(q.p, N);
      int_at[c.level].push_back(std::move(c));
    }
  }

  bool ok_at(std::size_t d, const std::vector<Rational>& x) const {
    for (const auto& c : le_at[d])
      if (c.eval(x) > Rational(0)) return false;
    for (const auto& c : int_at[d])
      if (!c.eval(x).is_integer()) return false;
    for (const auto& c : eq_at[d])
      if (!c.eval(x).is_zero()) return false;
    return true;
  }

  void run(std::size_t d, std::vector<Rational>& x, std::vector<Solution>& out, std::size_t& leaves) const {
    const std::size_t N = sys.coords;
    if (d == N) {
      ++leaves;
      x[N] = Rational(0);
      Rational c0 = q1->eval(x);
      x[N] = Rational(1);
      Rational c1 = q1->eval(x) - c0;
      if (c1.is_zero()) return;
      Rational a = -c0 / c1;
      if (a.is_zero()) return;
      x[N] = a;
      for (const auto& c : with_a)
        if (!c.eval(x).is_zero()) return;
      out.push_back({Weight(x.begin(), x.begin() + N), a, {}, {}});
      return;
    }
    for (const auto& v : grid) {
      x[d] = v;
      if (ok_at(d, x)) run(d + 1, x, out, leaves);
    }
  }
};

}  // namespace

HwOracle::HwOracle(Kind kind, int n) {
  auto C = std::make_shared<const cartan::CartanBasis>(cartan::cartan_basis(kind, n));
  coords_ = C->coords;
  A_ = std::make_unique<ueval::AdaptedU>(C);
}

HwOracle::~HwOracle() = default;

const Poly& HwOracle::poly(const Origin& o) {
  const std::string key = o.str();
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const auto& G = A_->tkk();
  std::optional<exactnum::Vec> u;
  if (!o.u.empty()) {
    u = exactnum::Vec(G.D());
    for (const auto& label : o.u) *u = exactnum::add(*u, G.T->jelem(label));
  }
  auto q = ueval::q_elements(G, Scalar(), u);
  const ueval::PBW* elem = nullptr;
  switch (o.q) {
    case Origin::Q::Q1: elem = &q.Q1; break;
    case Origin::Q::Q2: elem = &q.Q2; break;
    case Origin::Q::Q3: elem = &q.Q3.value(); break;
    case Origin::Q::Q4: elem = &q.Q4.value(); break;
  }
  Poly p = ueval::hw_eval(*A_, A_->adapt(*elem)).scalar_part.with_vars(coords_ + 1);
  if (o.q == Origin::Q::Q1) p += Poly::variable(coords_ + 1, coords_);
  return cache_.emplace(key, std::move(p)).first->second;
}

namespace {

// Eliminates the last variable of each linear equation without an origin.
Poly reduce_lattice(const EquationSystem& sys, Poly p) {
  for (const auto& e : sys.equations) {
    if (!e.origins.empty() || e.p.degree() != 1) continue;
    std::size_t v = 0;
    Scalar c;
    for (const auto& [ex, coef] : e.p.terms())
      for (std::size_t i = 0; i < sys.coords; ++i)
        if (ex[i] && i >= v) {
          v = i;
          c = coef;
        }
    Poly rest = e.p - Poly::variable(sys.coords + 1, v) * c;
    p = p.substitute(v, rest * (Scalar(-1) / c));
  }
  return p;
}

}  // namespace

Report verify_against_hw(const EquationSystem& sys, HwOracle& hw) {
  Report rep;
  for (const auto& e : sys.equations)
    for (const auto& o : e.origins) {
      const Poly h = reduce_lattice(sys, hw.poly(o));
      const Poly p = reduce_lattice(sys, e.p);
      auto kappa = exactnum::proportionality(p, h);
      nlohmann::json data = nlohmann::json::object();
      bool ok = kappa && !kappa->is_zero();
      if (ok) data["factor"] = kappa->str();
      if (p.is_zero() && h.is_zero()) {
        // u is the unit (n = 2 pair equations): both sides vanish identically
        ok = true;
        data["vacuous"] = true;
      }
      rep.add("weights.hw." + e.name + "." + o.str(), ok, ok ? "" : "hw value " + h.str(sys.var_names()), data);
    }
  return rep;
}

Rational solve_a(const EquationSystem& sys, const Weight& lambda) {
  const Poly& q1 = sys.equations.front().p;
  Scalar c0 = q1.eval(point(lambda, Rational(0)));
  Scalar c1 = q1.eval(point(lambda, Rational(1))) - c0;
  return (-(c0.rational_or_throw()) / c1.rational_or_throw());
}

Report check_weight(const EquationSystem& sys, const Weight& lambda, const Rational& a, const CheckOptions& opt) {
  if (lambda.size() != sys.coords)
    throw std::invalid_argument(sys.algebra + " weights have " + std::to_string(sys.coords) + " coordinates, got " +
                                std::to_string(lambda.size()));
  Report rep;
  const auto x = point(lambda, a);
  rep.add("weights.a_nonzero", !a.is_zero(), a.is_zero() ? "trivial weight: a = 0" : "");
  for (const auto& e : sys.equations) {
    Scalar v = e.p.eval(x);
    nlohmann::json data = {{"value", v.str()}};
    if (&e == &sys.equations.front()) data["solved_a"] = solve_a(sys, lambda).str();
    rep.add("weights.eq." + e.name, v.is_zero(), v.is_zero() ? "" : "value " + v.str(), data);
    if (!opt.hw) continue;
    for (const auto& o : e.origins) {
      Scalar h = opt.hw->poly(o).eval(x);
      const bool agree = h.is_zero() == v.is_zero();
      rep.add("weights.hw." + e.name + "." + o.str(), agree, agree ? "" : "direct " + v.str() + ", hw " + h.str(),
              {{"hw_value", h.str()}});
    }
  }
  for (const auto& q : sys.chain) {
    Scalar v = q.p.eval(x);
    const bool ok = v.rational_or_throw() <= Rational(0);
    rep.add("weights.chain." + q.name, ok, ok ? "" : "violated by " + v.str());
  }
  for (const auto& q : sys.integral) {
    Rational v = q.p.eval(x).rational_or_throw();
    rep.add("weights.integral." + q.name, v.is_integer(), v.is_integer() ? "" : "value " + v.str());
  }
  return rep;
}

std::vector<std::int64_t> lattice_denominators(Kind kind, int n) {
  switch (kind) {
    case Kind::HermR: return {2};
    case Kind::HermC: return {2 * n};
    case Kind::HermH: return {1};
    case Kind::HermO3: return {1, 2};
    case Kind::SpinFactor: return n % 2 == 0 ? std::vector<std::int64_t>{2} : std::vector<std::int64_t>{1, 2};
  }
  return {1};
}

SolveResult solve_weights(Kind kind, int n, const Rational& k_max, const Rational& bound, int threads) {
  return solve_weights(equations_for(kind, n), k_max, bound, threads);
}

SolveResult solve_weights(const EquationSystem& sys, const Rational& k_max, const Rational& bound, int threads) {
  if (bound.sign() <= 0 || k_max.sign() < 0) throw std::invalid_argument("bounds must be positive");
  const Kind kind = sys.kind;
  const int n = sys.n;
  std::int64_t q = 1;
  for (auto d : lattice_denominators(kind, n)) q = std::lcm(q, d);
  std::vector<Rational> grid;
  const std::int64_t top = (bound * Rational(q)).num() / (bound * Rational(q)).den();
  for (std::int64_t p = -top; p <= top; ++p) grid.push_back(Rational(p, q));

  const Search S(sys, grid);
  // partition by the leading coordinate
  std::vector<Rational> leads;
  std::vector<Rational> x0(sys.coords + 1);
  for (const auto& v : grid) {
    x0[0] = v;
    if (S.ok_at(0, x0)) leads.push_back(v);
  }
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  struct Part {
    std::vector<Solution> sols;
    std::size_t leaves = 0;
  };
  std::vector<Part> parts(leads.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < leads.size();) {
      std::vector<Rational> x(sys.coords + 1);
      x[0] = leads[i];
      S.run(1, x, parts[i].sols, parts[i].leaves);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  SolveResult res;
  for (auto& p : parts) {
    res.leaves += p.leaves;
    for (auto& s : p.sols) res.solutions.push_back(std::move(s));
  }
  std::sort(res.solutions.begin(), res.solutions.end(), [](const Solution& a, const Solution& b) { return a.lambda < b.lambda; });

  // members inside the box, matched against the solutions
  const auto fams = families(kind, n);
  const Rational reach = bound * Rational(4) + k_max + Rational(4);
  std::set<Weight> found;
  for (auto& s : res.solutions) {
    found.insert(s.lambda);
    for (const auto& f : fams)
      for (const auto& k : f.k_values(reach))
        if (!s.k && f.at(k) == s.lambda) {
          s.family = f.name;
          s.k = k;
        }
  }
  std::set<Weight> seen;
  for (const auto& f : fams)
    for (const auto& k : f.k_values(k_max)) {
      Weight w = f.at(k);
      bool inside = true;
      for (const auto& x : w) inside = inside && x.abs() <= bound && (x * Rational(q)).is_integer();
      // members with a = 0 are excluded by the system itself
      if (inside && !a_of(kind, n, k).is_zero() && !found.count(w) && seen.insert(w).second) res.missing.push_back({f.name, k});
    }
  return res;
}

}  // namespace tkklab::weights
