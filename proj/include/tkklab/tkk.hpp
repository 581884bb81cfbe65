#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "tkklab/jordan.hpp"
#include "tkklab/lie.hpp"

namespace tkklab::tkk {

using exactnum::LinearSpan;
using exactnum::Matrix;
using exactnum::Scalar;
using exactnum::SparseVec;
using exactnum::Vec;
using jordan::JordanAlgebra;

// S_uv = [L_u, L_v] + L_uv
Matrix s_op(const JordanAlgebra& J, const Vec& u, const Vec& v);
// {uvz} = S_uv(z)
Vec triple(const JordanAlgebra& J, const Vec& u, const Vec& v, const Vec& z);

// str(J) with a basis of operators picked greedily from
// L_{b_0}, ..., L_{b_{D-1}}, then S_{b_a b_b} for a < b in lexicographic order.
struct StructureAlgebra {
  std::shared_ptr<const JordanAlgebra> J;
  lie::LieAlgebra g;
  // Basis element k is S_{b_a b_b} for source[k] = (a, b); b = -1 marks L_{b_a}.
  std::vector<std::pair<int, int>> source;
  std::vector<Matrix> ops;
  std::vector<Matrix> ops_swapped;  // S_{b_b b_a}
  LinearSpan span{0};
  // pair_coords[a * D + b] = coordinates of S_{b_a b_b}
  std::vector<SparseVec> pair_coords;

  std::size_t dim() const { return ops.size(); }
  // Coordinates of an operator lying in str(J); throws otherwise.
  SparseVec coords(const Matrix& op) const;
  Matrix op(const SparseVec& coords) const;
};

StructureAlgebra build_str(std::shared_ptr<const JordanAlgebra> J);
// dim of span{[L_u, L_v]}
std::size_t der_dimension(const JordanAlgebra& J);

// Dimensions of der(J), str(J), co(J) from the classification table.
struct TableDims {
  int der = 0;
  int str = 0;
  int co = 0;
};
TableDims table_dims(jordan::Kind kind, int n);

// co(J) = X-part + str(J) + Y-part.
struct Tkk {
  std::shared_ptr<const JordanAlgebra> J;
  StructureAlgebra str;
  lie::LieAlgebra g;

  std::size_t D() const { return J->dim(); }
  std::size_t x_index(std::size_t a) const { return a; }
  std::size_t s_index(std::size_t k) const { return J->dim() + k; }
  std::size_t y_index(std::size_t a) const { return J->dim() + str.dim() + a; }

  SparseVec X(const Vec& u) const;
  SparseVec Y(const Vec& u) const;
  SparseVec L(const Vec& u) const;
  SparseVec S(const Vec& u, const Vec& v) const;
  SparseVec from_str(const SparseVec& str_coords) const;
  // [L_u, L_v] as an element of co(J)
  SparseVec LL(const Vec& u, const Vec& v) const;
  SparseVec E_plus(const Vec& u) const;
  SparseVec E_minus(const Vec& u) const;
  SparseVec h(const Vec& u) const;

  Vec jbasis(std::size_t a) const { return J->basis(a); }
  Vec jelem(const std::string& label) const;
};

Tkk build_tkk(std::shared_ptr<const JordanAlgebra> J);
Tkk build_tkk(jordan::Kind kind, int n);

struct EPair {
  SparseVec E_plus, E_minus, h;
};
EPair epm_h(const Tkk& T, const Vec& u);

// Lie algebra axioms plus the structural identities of the construction:
// dimensions against the table, S'_uv as the tau-adjoint of S_uv, the
// [S,S] composition rule and the E/h bracket rules on basis pairs.
Report verify_tkk(const Tkk& T, int samples, std::uint64_t seed, bool jacobi = true);

}  // namespace tkklab::tkk
