#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "tkklab/composition.hpp"
#include "tkklab/linalg.hpp"
#include "tkklab/report.hpp"

namespace tkklab::jordan {

using exactnum::Matrix;
using exactnum::Scalar;
using exactnum::SparseVec;
using exactnum::Vec;

enum class Kind { SpinFactor, HermR, HermC, HermH, HermO3 };

std::string kind_name(Kind k);
// Accepts "spin", "gamma", "hermR", "hermC", "hermH", "hermO" (and a few
// spellings of each).
std::optional<Kind> parse_kind(const std::string& s);

// Where a basis vector sits. Hermitian kinds: diagonal (a == b, mu == 0) or
// off-diagonal e_ab^mu with 1 <= mu <= d. Spin factors: a == 0 is the scalar
// slot, otherwise vector slot a.
struct BasisInfo {
  int a = 0;
  int b = 0;
  int mu = 0;
};

struct JordanAlgebra {
  Kind kind = Kind::HermR;
  int n = 0;
  int D = 0;
  std::vector<std::string> labels;
  std::vector<BasisInfo> info;
  // product[a][b] = coordinates of b_a * b_b
  std::vector<std::vector<SparseVec>> product;
  Vec unit;
  // tr(b_a) for each basis vector
  Vec trace;

  std::size_t dim() const { return static_cast<std::size_t>(D); }
  Vec basis(std::size_t i) const;
  std::optional<std::size_t> index_of(const std::string& label) const;
};

// Throws std::invalid_argument for unsupported (kind, n).
JordanAlgebra build_jordan(Kind kind, int n);
bool admissible(Kind kind, int n);

Vec jmul(const JordanAlgebra& J, const Vec& u, const Vec& v);
Matrix lmul_op(const JordanAlgebra& J, const Vec& u);
Matrix quad_rep(const JordanAlgebra& J, const Vec& x);
Scalar trace_of(const JordanAlgebra& J, const Vec& u);
Scalar tau(const JordanAlgebra& J, const Vec& u, const Vec& v);
Scalar inner(const JordanAlgebra& J, const Vec& u, const Vec& v);

struct RankDegree {
  int rho = 0;
  int d = 0;
};
RankDegree rank_degree(const JordanAlgebra& J);

// Weights w_b with sum over an orthonormal basis of T(e)(x)T(e) equal to
// sum_b w_b T(b)(x)T(b); requires the built-in basis to be orthogonal.
Vec orthonormal_weights(const JordanAlgebra& J);

struct JordanFrame {
  std::vector<Vec> diag;                                  // e_11 .. e_rr
  std::map<std::tuple<int, int, int>, Vec> off;           // (i, j, mu), i < j
};

JordanFrame jordan_frame(const JordanAlgebra& J);
Report verify_frame(const JordanAlgebra& J, const JordanFrame& F);
Report verify_jordan_axioms(const JordanAlgebra& J, int samples, std::uint64_t seed);

// Random element with rational coefficients p/q, |p| <= 9, q in {1,2,3}.
Vec random_element(const JordanAlgebra& J, std::mt19937_64& rng);

}  // namespace tkklab::jordan
