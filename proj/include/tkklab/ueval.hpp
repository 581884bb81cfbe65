#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "tkklab/cartan.hpp"
#include "tkklab/polynomial.hpp"

namespace tkklab::ueval {

using exactnum::Poly;
using exactnum::Scalar;
using exactnum::SparseVec;
using exactnum::Vec;

// Nondecreasing sequence of basis indices; the basis index order is the PBW order.
using Monomial = std::vector<std::uint16_t>;

struct PBW {
  std::map<Monomial, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  int degree() const;
  void add(const Monomial& m, const Scalar& c);
  PBW& operator+=(const PBW& o);
  PBW& operator-=(const PBW& o);
  PBW& operator*=(const Scalar& c);
  friend PBW operator+(PBW a, const PBW& b) { return a += b; }
  friend PBW operator-(PBW a, const PBW& b) { return a -= b; }
  friend PBW operator*(PBW a, const Scalar& c) { return a *= c; }
  friend PBW operator*(const Scalar& c, PBW a) { return a *= c; }
  friend bool operator==(const PBW&, const PBW&) = default;
};

// U(g) with the basis order of g. Products are normal ordered by moving each
// new right factor leftwards past larger letters; insertions are memoized.
class Enveloping {
 public:
  explicit Enveloping(std::shared_ptr<const lie::LieAlgebra> g);

  const lie::LieAlgebra& g() const { return *g_; }
  std::size_t dim() const { return g_->dim(); }

  PBW one() const;
  PBW constant(const Scalar& c) const;
  PBW gen(std::size_t i) const;
  PBW lie(const SparseVec& x) const;

  PBW mul(const PBW& a, const PBW& b) const;
  PBW mul_right(const PBW& a, std::size_t x) const;
  PBW commutator(const PBW& a, const PBW& b) const;
  PBW anticommutator(const PBW& a, const PBW& b) const;
  PBW square(const PBW& a) const { return mul(a, a); }

  // Normal form of an arbitrary word.
  PBW normal_form(const std::vector<std::uint16_t>& word) const;
  // Independent rewriter: swaps a randomly chosen out-of-order adjacent pair
  // until no word has one. Used to test confluence.
  PBW normal_form_random(const std::vector<std::uint16_t>& word, std::mt19937_64& rng) const;

  // Image of P under the algebra map induced by a linear map on generators.
  PBW map(const PBW& p, const Enveloping& source, const std::function<SparseVec(std::size_t)>& image) const;

  std::string format(const PBW& p) const;
  std::size_t memo_size() const { return memo_.size(); }

 private:
  const PBW& insert(const Monomial& m, std::uint16_t x) const;

  std::shared_ptr<const lie::LieAlgebra> g_;
  struct Hash {
    std::size_t operator()(const Monomial& m) const;
  };
  mutable std::unordered_map<Monomial, PBW, Hash> memo_;
};

// Generators of co(J) and the orthonormal-basis sums over J.
// The library basis is orthogonal; a sum of terms quadratic in an orthonormal
// e_alpha is the weighted sum over the library basis.
struct TkkGenerators {
  std::shared_ptr<const tkk::Tkk> T;
  std::shared_ptr<const Enveloping> U;
  int rho = 0;
  Vec weights;

  explicit TkkGenerators(std::shared_ptr<const tkk::Tkk> T);
  PBW X(const Vec& u) const { return U->lie(T->X(u)); }
  PBW Y(const Vec& u) const { return U->lie(T->Y(u)); }
  PBW L(const Vec& u) const { return U->lie(T->L(u)); }
  PBW S(const Vec& u, const Vec& v) const { return U->lie(T->S(u, v)); }
  Vec e() const { return T->J->unit; }
  Vec basis(std::size_t a) const { return T->J->basis(a); }
  std::size_t D() const { return T->D(); }
  // sum over an orthonormal basis of f(e_alpha), f quadratic in e_alpha
  PBW osum(const std::function<PBW(const Vec&)>& f) const;
  // {uvz}
  Vec tri(const Vec& u, const Vec& v, const Vec& z) const;
  Vec jmul(const Vec& u, const Vec& v) const;
};

struct QElements {
  PBW Q1, Q1prime, Q2;
  std::optional<PBW> Q3, Q4;
};

// Q1 = (2/rho) sum L_a^2 - L_e^2 - 1/2 {X_e, Y_e} + a,
// Q1' = sum {X_a, Y_a} - 2 rho (L_e^2 + a), Q2 = sum X_a^2 - rho X_e^2,
// Q3(u), Q4(u) as in the secondary relations. Elements of U(co(J)).
QElements q_elements(const TkkGenerators& G, const Scalar& a, const std::optional<Vec>& u = std::nullopt);

// [Q1, X_e] = (2/rho)(sum {L_a, X_a} - rho {L_e, X_e}), and the two brackets
// tying Q1 to Q1': [[Q1, X_e], Y_e] = -(2/rho)(Q1' + 2 rho Q1) and
// [[Q1', X_e], Y_e] = -2 (Q1' + 2 rho Q1).
Report verify_q1_relations(const TkkGenerators& G);

// U(co(J)) elements moved to the adapted (negative, Cartan, positive) basis.
class AdaptedU {
 public:
  explicit AdaptedU(std::shared_ptr<const cartan::CartanBasis> C);
  const cartan::CartanBasis& C() const { return *C_; }
  const Enveloping& U() const { return *U_; }
  const TkkGenerators& tkk() const { return G_; }
  PBW adapt(const PBW& tkk_element) const;

 private:
  std::shared_ptr<const cartan::CartanBasis> C_;
  std::shared_ptr<const Enveloping> U_;
  TkkGenerators G_;
};

struct HwEvalResult {
  Poly scalar_part;  // polynomial in the weight coordinates
  PBW residual;      // monomials with negative factors and no positive ones
  PBW annihilated;   // monomials ending in a positive factor
};

HwEvalResult hw_eval(const AdaptedU& A, const PBW& adapted_element);
Scalar hw_value(const HwEvalResult& r, const std::vector<exactnum::Rational>& lambda);

// Lemma A-identities in U(co(J)): commutation of Q1' with L, the closed forms
// of the nested brackets and their vanishing statements. Deep identities are
// checked on `samples` seeded random index tuples.
struct NestedBracketOptions {
  int samples = 50;
  std::uint64_t seed = 1;
  bool deep = true;
  // A12 with Y_{S_{beta alpha}(gamma)} exactly as printed. The default reads it
  // as S'_{beta alpha}(gamma), which is what [S_uv, Y_z] = -Y_{S'_uv z} produces.
  bool literal_a12 = false;
};
Report verify_nested_brackets(const TkkGenerators& G, const NestedBracketOptions& opt = {});

}  // namespace tkklab::ueval
