#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tkklab/linalg.hpp"
#include "tkklab/report.hpp"

namespace tkklab::lie {

using exactnum::Scalar;
using exactnum::SparseVec;
using exactnum::Vec;

// Finite-dimensional Lie algebra given by structure constants:
// [b_a, b_b] = sum_c bracket[a][b][c] b_c.
struct LieAlgebra {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> bracket;

  std::size_t dim() const { return labels.size(); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  SparseVec br(const SparseVec& x, const SparseVec& y) const;
  Vec br(const Vec& x, const Vec& y) const;
  Vec basis(std::size_t i) const;
};

LieAlgebra empty_algebra(std::string name, std::vector<std::string> labels);

Report verify_antisymmetry(const LieAlgebra& g);
// All triples a < b < c; antisymmetry makes the remaining orderings redundant.
Report verify_jacobi(const LieAlgebra& g);

std::string format(const LieAlgebra& g, const SparseVec& x);
std::string format(const LieAlgebra& g, const Vec& x);

// {basis: [labels], brackets: {"a,b": {"c": scalar}}} with basis indices as keys.
nlohmann::json to_json(const LieAlgebra& g);
LieAlgebra from_json(const nlohmann::json& j);

}  // namespace tkklab::lie
