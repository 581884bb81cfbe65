#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tkklab/tkk.hpp"

namespace tkklab::cartan {

using exactnum::Rational;
using exactnum::Scalar;
using exactnum::SparseVec;
using exactnum::Vec;
using jordan::Kind;

using RootVec = std::vector<Rational>;

struct Root {
  RootVec v;
  bool positive = false;
  bool compact = false;
};

Rational dot(const RootVec& a, const RootVec& b);
RootVec neg(const RootVec& a);
RootVec add(const RootVec& a, const RootVec& b);
std::string root_str(const RootVec& a);

// Name of co(J) and the number of weight coordinates.
std::string algebra_name(Kind kind, int n);
std::size_t coordinate_count(Kind kind, int n);

// All roots of co(J) in the coordinates used for highest weights; sorted
// lexicographically.
std::vector<Root> root_system(Kind kind, int n);

// 2(lambda, alpha)/(alpha, alpha)
Rational eval_weight(const RootVec& lambda, const RootVec& alpha);
Scalar eval_weight(const std::vector<Scalar>& lambda, const RootVec& alpha);

// One displayed element of a Cartan basis, as an element of co(J).
struct Displayed {
  bool is_cartan = false;  // H_alpha if true, E_alpha otherwise
  RootVec root;
  std::string formula;
  SparseVec element;
  // e7: H = +-[E, E_-] by the sign rule, checked only up to a recorded factor
  bool from_rule = false;
};

struct CartanBasis {
  std::string algebra;
  std::shared_ptr<const tkk::Tkk> T;
  std::size_t coords = 0;
  std::size_t rank = 0;

  std::vector<Root> roots;
  std::vector<Displayed> displayed;
  // Root vectors, one per root (index into roots).
  std::vector<SparseVec> E;
  std::vector<std::string> E_origin;  // displayed formula or derivation word
  std::vector<bool> E_displayed;
  // Coroot H_alpha for every root, solved from the eigenvalue data.
  std::vector<SparseVec> H;
  // [E_alpha, E_-alpha] = c_alpha H_alpha for every root.
  std::vector<Scalar> bracket_constant;
  // Roots whose coroots form the Cartan part of the adapted basis.
  std::vector<std::size_t> cartan_roots;

  // Adapted basis: negatives (sorted by root), Cartan, positives.
  enum class Part { Negative, Cartan, Positive };
  lie::LieAlgebra g;
  std::vector<Part> part;
  std::vector<std::size_t> adapted_root;  // root index for E's, cartan_roots index for H's
  // Adapted coordinates of each co(J) basis vector.
  std::vector<SparseVec> to_adapted;

  Report report;

  std::optional<std::size_t> root_index(const RootVec& r) const;
  SparseVec adapt(const SparseVec& tkk_element) const;
  // Linear form lambda -> lambda(H) for the adapted Cartan element at index i.
  RootVec cartan_form(std::size_t adapted_index) const;
};

// Builds co(J), materializes the displayed Cartan basis, completes missing
// root vectors by brackets and verifies the eigenvalue relations.
struct CartanOptions {
  // su(n,n): take the e_jj coefficient of the mixed-type H's exactly as
  // printed (+eta2). The default flips it, which is the only sign for which
  // those H's are coroots.
  bool literal_su_eta = false;
};
CartanBasis cartan_basis(Kind kind, int n, const CartanOptions& opt = {});
CartanBasis cartan_basis(std::shared_ptr<const tkk::Tkk> T, const CartanOptions& opt = {});

// {root: c_alpha} for [E_alpha, E_-alpha] = c_alpha H_alpha, keys in root_str form.
nlohmann::json bracket_constants_json(const CartanBasis& C);

// so(2, m+1) on M_ab, -1 <= a < b <= m+1, eta = diag(1, 1, -1, ..., -1).
struct So2m {
  int m = 0;
  lie::LieAlgebra g;
  std::map<std::pair<int, int>, std::size_t> index;
  // M_ab as an element (antisymmetric in a, b; M_aa = 0)
  SparseVec M(int a, int b) const;
  int eta(int a) const { return a <= 0 ? 1 : -1; }
};

So2m so2m_algebra(int m);

struct PhiIso {
  std::shared_ptr<const tkk::Tkk> T;  // co(Gamma(m))
  So2m so;
  exactnum::Matrix phi;  // columns: images of the co basis
  Report report;
  SparseVec apply(const SparseVec& x) const;
};

// phi: co(Gamma(m)) -> so(2, m+1) with its verification report.
PhiIso phi_iso(int m);

}  // namespace tkklab::cartan
