#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tkklab/cartan.hpp"
#include "tkklab/polynomial.hpp"
#include "tkklab/report.hpp"

namespace tkklab::ueval {
class AdaptedU;
}

namespace tkklab::weights {

using exactnum::Poly;
using exactnum::Rational;
using exactnum::Scalar;
using jordan::Kind;

using Weight = std::vector<Rational>;

// The quadratic element an equation is the highest-weight value of, with u
// given as a sum of Jordan basis labels.
struct Origin {
  enum class Q { Q1, Q2, Q3, Q4 } q = Q::Q1;
  std::vector<std::string> u;
  std::string str() const;
};

// p == 0, p a polynomial in lambda_1..lambda_N and a (variable N).
struct Equation {
  std::string name;
  Poly p;
  std::vector<Origin> origins;  // empty for lattice conditions
};

// p <= 0, linear in lambda.
struct Inequality {
  std::string name;
  Poly p;
};

// An equation implied by others: p == sum coeff * (named equation).
struct Derived {
  Equation eq;
  std::vector<std::pair<std::string, Rational>> combination;
};

struct EquationSystem {
  Kind kind = Kind::HermR;
  int n = 0;
  std::string algebra;
  std::size_t coords = 0;
  std::vector<Equation> equations;  // the first one is the Q1 relation, linear in a
  std::vector<Inequality> chain;    // unitarity
  // Linear forms that must be integers: coroots of the compact positive roots.
  std::vector<Inequality> integral;
  std::vector<Derived> derived;

  std::size_t a_var() const { return coords; }
  std::vector<std::string> var_names() const;
  const Equation& equation(const std::string& name) const;
};

struct SystemOptions {
  // Two secondary equations as printed instead of the highest-weight values
  // they stand for: the so*(4n) e12 equation (other linear terms, and no
  // second quaternionic direction) and the e7 equation l7(4+l6) = 0 from Q4(e33).
  bool literal_secondary = false;
};

// sp(n,R), su(n,n), so*(4n) for n >= 2 and e7(-25).
EquationSystem equations_for(Kind kind, int n, const SystemOptions& opt = {});

// Each derived equation equals its stated combination as polynomials.
Report verify_derived(const EquationSystem& sys);

struct WeightFamily {
  Kind kind = Kind::HermR;
  int n = 0;
  std::string name;
  std::string k_domain;
  std::function<Weight(const Rational&)> at;
  std::function<bool(const Rational&)> admissible;
  // admissible k with |k| <= k_max, in steps of 1/2, increasing
  std::vector<Rational> k_values(const Rational& k_max) const;
};

struct FamilyOptions {
  // Gamma(2n-1): allow every k in Z/2 instead of only half-odd k.
  bool odd_spin_integer_k = false;
};

// For SpinFactor, n is the dimension parameter m of Gamma(m).
std::vector<WeightFamily> families(Kind kind, int n, const FamilyOptions& opt = {});

// a(J,k); throws std::invalid_argument for inadmissible k.
Rational a_of(Kind kind, int n, const Rational& k, const FamilyOptions& opt = {});
// rho d/4 (1 + (rho-2) d/4)
Rational joseph_a(Kind kind, int n);

// Highest-weight values of the quadratic elements as polynomials in
// (lambda, a), computed with ueval and cached.
class HwOracle {
 public:
  HwOracle(Kind kind, int n);
  ~HwOracle();
  const Poly& poly(const Origin& o);
  std::size_t coords() const { return coords_; }

 private:
  std::unique_ptr<ueval::AdaptedU> A_;
  std::size_t coords_ = 0;
  std::map<std::string, Poly> cache_;
};

// Each equation with an origin is a nonzero multiple of the oracle's
// polynomial, after both are reduced modulo the linear lattice equations.
Report verify_against_hw(const EquationSystem& sys, HwOracle& hw);

struct CheckOptions {
  HwOracle* hw = nullptr;  // cross-check each Q-sourced equation
};

// Evaluates every equation, chain inequality and integrality condition at
// (lambda, a); a must also be nonzero.
Report check_weight(const EquationSystem& sys, const Weight& lambda, const Rational& a, const CheckOptions& opt = {});

// a solved from the Q1 relation.
Rational solve_a(const EquationSystem& sys, const Weight& lambda);

struct Solution {
  Weight lambda;
  Rational a;
  std::string family;  // empty if unmatched
  std::optional<Rational> k;
};

struct SolveResult {
  std::vector<Solution> solutions;  // lexicographic
  // family members with |k| <= k_max inside the box that were not found
  std::vector<std::pair<std::string, Rational>> missing;
  std::size_t leaves = 0;
};

// Exhaustive search over lambda in (1/q)Z, |lambda_i| <= bound, q the case's
// lattice denominator, for solutions of the full system with a != 0.
SolveResult solve_weights(const EquationSystem& sys, const Rational& k_max, const Rational& bound, int threads = 0);
SolveResult solve_weights(Kind kind, int n, const Rational& k_max, const Rational& bound, int threads = 0);
std::vector<std::int64_t> lattice_denominators(Kind kind, int n);

// Tables of rank/degree, derivation/structure/conformal algebras and the
// unitarity constants, rendered as markdown or json.
std::string tables_md();
nlohmann::json tables_json();
// Table cells against the built Jordan and conformal algebras (r = rho and
// 2C = d included), and split rank and (rho, beta^vee) against root systems.
Report verify_tables();

std::string weight_str(const Weight& w);
Weight parse_weight(const std::string& json_array);

}  // namespace tkklab::weights
