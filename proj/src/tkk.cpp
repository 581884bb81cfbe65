#include "tkklab/tkk.hpp"

#include <stdexcept>

namespace tkklab::tkk {

using exactnum::axpy;
using exactnum::Rational;
using exactnum::to_dense;
using exactnum::to_sparse;
using jordan::Kind;

namespace {

// Sparse Jordan product through the product tensor.
SparseVec smul(const JordanAlgebra& J, const SparseVec& u, const SparseVec& v) {
  Vec acc(J.dim());
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) {
      const auto& p = J.product[a][b];
      if (!p.empty()) axpy(acc, ca * cb, p);
    }
  return to_sparse(acc);
}

SparseVec unit_sparse(std::size_t a) { return {{static_cast<std::uint32_t>(a), Scalar(1)}}; }

// Operator matrices flattened row-major into sparse vectors of length D*D.
SparseVec flatten(const Matrix& m) { return to_sparse(m.data()); }

// S_{b_a b_b} computed column by column: z -> a(bz) - b(az) + (ab)z
Matrix s_basis(const JordanAlgebra& J, std::size_t a, std::size_t b) {
  const std::size_t D = J.dim();
  Matrix m(D, D);
  SparseVec ua = unit_sparse(a), ub = unit_sparse(b);
  SparseVec ab = J.product[a][b];
  for (std::size_t z = 0; z < D; ++z) {
    SparseVec uz = unit_sparse(z);
    SparseVec col = exactnum::sparse_add(smul(J, ua, J.product[b][z]), Scalar(-1), smul(J, ub, J.product[a][z]));
    col = exactnum::sparse_add(col, Scalar(1), smul(J, ab, uz));
    for (const auto& [r, c] : col) m(r, z) = c;
  }
  return m;
}

Matrix l_basis(const JordanAlgebra& J, std::size_t a) {
  Matrix m(J.dim(), J.dim());
  for (std::size_t z = 0; z < J.dim(); ++z)
    for (const auto& [r, c] : J.product[a][z]) m(r, z) = c;
  return m;
}

std::string str_label(const JordanAlgebra& J, int a, int b) {
  if (b < 0) return "L[" + J.labels[a] + "]";
  return "S[" + J.labels[a] + "," + J.labels[b] + "]";
}

}  // namespace

Matrix s_op(const JordanAlgebra& J, const Vec& u, const Vec& v) {
  Matrix lu = jordan::lmul_op(J, u), lv = jordan::lmul_op(J, v);
  return exactnum::commutator(lu, lv) + jordan::lmul_op(J, jordan::jmul(J, u, v));
}

Vec triple(const JordanAlgebra& J, const Vec& u, const Vec& v, const Vec& z) {
  return exactnum::add(exactnum::sub(jordan::jmul(J, u, jordan::jmul(J, v, z)), jordan::jmul(J, v, jordan::jmul(J, u, z))),
                       jordan::jmul(J, jordan::jmul(J, u, v), z));
}

SparseVec StructureAlgebra::coords(const Matrix& m) const {
  auto c = span.coords(flatten(m));
  if (!c) throw std::logic_error("operator is not in str(J)");
  return to_sparse(*c);
}

Matrix StructureAlgebra::op(const SparseVec& c) const {
  const std::size_t D = J->dim();
  Matrix m(D, D);
  for (const auto& [k, s] : c) m += ops[k] * s;
  return m;
}

StructureAlgebra build_str(std::shared_ptr<const JordanAlgebra> Jp) {
  const JordanAlgebra& J = *Jp;
  const std::size_t D = J.dim();
  StructureAlgebra S;
  S.J = Jp;
  S.span = LinearSpan(D * D);
  auto offer = [&](int a, int b, Matrix m) {
    if (!S.span.add(flatten(m))) return;
    S.source.push_back({a, b});
    S.ops_swapped.push_back(b < 0 ? m : s_basis(J, b, a));
    S.ops.push_back(std::move(m));
  };
  for (std::size_t a = 0; a < D; ++a) offer(static_cast<int>(a), -1, l_basis(J, a));
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = a + 1; b < D; ++b) offer(static_cast<int>(a), static_cast<int>(b), s_basis(J, a, b));

  const std::size_t n = S.ops.size();
  std::vector<std::string> labels;
  for (auto [a, b] : S.source) labels.push_back(str_label(J, a, b));
  S.g = lie::empty_algebra("str(" + jordan::kind_name(J.kind) + std::to_string(J.n) + ")", labels);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      SparseVec c = S.coords(exactnum::commutator(S.ops[k], S.ops[l]));
      S.g.bracket[k][l] = c;
      S.g.bracket[l][k] = exactnum::scaled(c, Scalar(-1));
    }

  S.pair_coords.resize(D * D);
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = 0; b < D; ++b) S.pair_coords[a * D + b] = S.coords(s_basis(J, a, b));
  return S;
}

std::size_t der_dimension(const JordanAlgebra& J) {
  const std::size_t D = J.dim();
  LinearSpan span(D * D);
  std::vector<Matrix> L;
  for (std::size_t a = 0; a < D; ++a) L.push_back(l_basis(J, a));
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = a + 1; b < D; ++b) span.add(flatten(exactnum::commutator(L[a], L[b])));
  return span.size();
}

TableDims table_dims(Kind kind, int n) {
  switch (kind) {
    case Kind::SpinFactor: {
      // so(n), so(n,1)+R, so(2,n+1)
      int der = n * (n - 1) / 2, str = (n + 1) * n / 2 + 1;
      return {der, str, (n + 3) * (n + 2) / 2};
    }
    case Kind::HermR: return {n * (n - 1) / 2, n * n, n * (2 * n + 1)};
    case Kind::HermC: return {n * n - 1, 2 * n * n - 1, 4 * n * n - 1};
    case Kind::HermH: return {n * (2 * n + 1), 4 * n * n, 2 * n * (4 * n - 1)};
    case Kind::HermO3: return {52, 79, 133};
  }
  return {};
}

SparseVec Tkk::from_str(const SparseVec& c) const {
  SparseVec out;
  for (const auto& [k, s] : c) out.push_back({static_cast<std::uint32_t>(s_index(k)), s});
  return out;
}

SparseVec Tkk::X(const Vec& u) const {
  SparseVec out;
  for (std::size_t a = 0; a < D(); ++a)
    if (!u[a].is_zero()) out.push_back({static_cast<std::uint32_t>(x_index(a)), u[a]});
  return out;
}

SparseVec Tkk::Y(const Vec& u) const {
  SparseVec out;
  for (std::size_t a = 0; a < D(); ++a)
    if (!u[a].is_zero()) out.push_back({static_cast<std::uint32_t>(y_index(a)), u[a]});
  return out;
}

SparseVec Tkk::S(const Vec& u, const Vec& v) const {
  Vec acc(str.dim());
  for (std::size_t a = 0; a < D(); ++a) {
    if (u[a].is_zero()) continue;
    for (std::size_t b = 0; b < D(); ++b)
      if (!v[b].is_zero()) axpy(acc, u[a] * v[b], str.pair_coords[a * D() + b]);
  }
  return from_str(to_sparse(acc));
}

SparseVec Tkk::L(const Vec& u) const { return S(u, J->unit); }

SparseVec Tkk::LL(const Vec& u, const Vec& v) const {
  // [L_u, L_v] = (S_uv - S_vu) / 2
  return exactnum::scaled(exactnum::sparse_add(S(u, v), Scalar(-1), S(v, u)), Scalar(Rational(1, 2)));
}

SparseVec Tkk::E_plus(const Vec& u) const {
  // i L_u - (X_u - Y_u)/2
  SparseVec l = L(u);
  for (auto& t : l) t.second *= Scalar::i();
  SparseVec out = exactnum::sparse_add(l, Scalar(Rational(-1, 2)), X(u));
  return exactnum::sparse_add(out, Scalar(Rational(1, 2)), Y(u));
}

SparseVec Tkk::E_minus(const Vec& u) const {
  SparseVec l = L(u);
  for (auto& t : l) t.second *= Scalar::i();
  SparseVec out = exactnum::sparse_add(l, Scalar(Rational(1, 2)), X(u));
  return exactnum::sparse_add(out, Scalar(Rational(-1, 2)), Y(u));
}

SparseVec Tkk::h(const Vec& u) const {
  Scalar mi = -Scalar::i();
  return exactnum::sparse_add(exactnum::scaled(X(u), mi), mi, Y(u));
}

Vec Tkk::jelem(const std::string& label) const {
  auto i = J->index_of(label);
  if (!i) throw std::invalid_argument("no Jordan basis element " + label);
  return J->basis(*i);
}

Tkk build_tkk(std::shared_ptr<const JordanAlgebra> Jp) {
  const JordanAlgebra& J = *Jp;
  Tkk T;
  T.J = Jp;
  T.str = build_str(Jp);
  const std::size_t D = J.dim(), ns = T.str.dim();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < D; ++a) labels.push_back("X[" + J.labels[a] + "]");
  for (const auto& l : T.str.g.labels) labels.push_back(l);
  for (std::size_t a = 0; a < D; ++a) labels.push_back("Y[" + J.labels[a] + "]");
  T.g = lie::empty_algebra("co(" + jordan::kind_name(J.kind) + std::to_string(J.n) + ")", labels);

  auto set = [&](std::size_t p, std::size_t q, const SparseVec& v) {
    T.g.bracket[p][q] = v;
    SparseVec neg = v;
    for (auto& t : neg) t.second = -t.second;
    T.g.bracket[q][p] = std::move(neg);
  };
  // [X_a, Y_b] = -2 S_ab
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = 0; b < D; ++b) {
      SparseVec c = T.from_str(T.str.pair_coords[a * D + b]);
      for (auto& t : c) t.second *= Rational(-2);
      set(T.x_index(a), T.y_index(b), c);
    }
  for (std::size_t k = 0; k < ns; ++k) {
    // [S, X_z] = X_{S z},  [S, Y_z] = -Y_{S' z}
    for (std::size_t z = 0; z < D; ++z) {
      SparseVec xs, ys;
      for (std::size_t r = 0; r < D; ++r) {
        const Scalar& c = T.str.ops[k](r, z);
        if (!c.is_zero()) xs.push_back({static_cast<std::uint32_t>(T.x_index(r)), c});
        const Scalar& c2 = T.str.ops_swapped[k](r, z);
        if (!c2.is_zero()) ys.push_back({static_cast<std::uint32_t>(T.y_index(r)), -c2});
      }
      set(T.s_index(k), T.x_index(z), xs);
      set(T.s_index(k), T.y_index(z), ys);
    }
    for (std::size_t l = k + 1; l < ns; ++l) set(T.s_index(k), T.s_index(l), T.from_str(T.str.g.bracket[k][l]));
  }
  return T;
}

Tkk build_tkk(Kind kind, int n) {
  return build_tkk(std::make_shared<const JordanAlgebra>(jordan::build_jordan(kind, n)));
}

EPair epm_h(const Tkk& T, const Vec& u) { return {T.E_plus(u), T.E_minus(u), T.h(u)}; }

}  // namespace tkklab::tkk

namespace tkklab::tkk {

namespace {

SparseVec combo(std::initializer_list<std::pair<Scalar, SparseVec>> terms) {
  SparseVec out;
  for (const auto& [c, v] : terms) out = exactnum::sparse_add(out, c, v);
  return out;
}

}  // namespace

Report verify_tkk(const Tkk& T, int samples, std::uint64_t seed, bool jacobi) {
  const JordanAlgebra& J = *T.J;
  const std::size_t D = J.dim();
  Report rep;

  TableDims want = table_dims(J.kind, J.n);
  std::size_t der = der_dimension(J);
  rep.add("tkk.dim_der", der == static_cast<std::size_t>(want.der),
          der == static_cast<std::size_t>(want.der) ? "" : "got " + std::to_string(der) + ", table " + std::to_string(want.der),
          {{"dim", der}});
  rep.add("tkk.dim_str", T.str.dim() == static_cast<std::size_t>(want.str),
          T.str.dim() == static_cast<std::size_t>(want.str)
              ? ""
              : "got " + std::to_string(T.str.dim()) + ", table " + std::to_string(want.str),
          {{"dim", T.str.dim()}});
  rep.add("tkk.dim_co", T.g.dim() == static_cast<std::size_t>(want.co) && T.g.dim() == 2 * D + T.str.dim(),
          T.g.dim() == static_cast<std::size_t>(want.co) ? "" : "got " + std::to_string(T.g.dim()), {{"dim", T.g.dim()}});

  rep.append(lie::verify_antisymmetry(T.g));
  if (jacobi) rep.append(lie::verify_jacobi(T.g));

  // S'_uv = S_vu must be the tau-adjoint of S_uv.
  {
    Matrix G(D, D);
    for (std::size_t a = 0; a < D; ++a)
      for (std::size_t b = 0; b < D; ++b) G(a, b) = jordan::tau(J, J.basis(a), J.basis(b));
    std::string bad;
    for (std::size_t k = 0; k < T.str.dim() && bad.empty(); ++k)
      if (!(T.str.ops[k].transpose() * G == G * T.str.ops_swapped[k])) bad = T.str.g.labels[k];
    rep.add("tkk.swapped_is_adjoint", bad.empty(), bad);
  }

  std::mt19937_64 rng(seed);
  {
    std::string bad;
    for (int s = 0; s < samples && bad.empty(); ++s) {
      Vec u = jordan::random_element(J, rng), v = jordan::random_element(J, rng);
      Vec z = jordan::random_element(J, rng), w = jordan::random_element(J, rng);
      Matrix lhs = exactnum::commutator(s_op(J, u, v), s_op(J, z, w));
      Matrix rhs = s_op(J, triple(J, u, v, z), w) - s_op(J, z, triple(J, v, u, w));
      if (!(lhs == rhs)) bad = "sample " + std::to_string(s);
    }
    rep.add("tkk.s_commutator_rule", bad.empty(), bad, {{"samples", samples}});
  }
  {
    std::string bad;
    if (!(T.str.op(T.str.pair_coords[0]) == s_op(J, J.basis(0), J.basis(0)))) bad = "S_b0b0";
    Vec e = J.unit;
    if (!(s_op(J, e, e) == Matrix::identity(D))) bad = "S_ee";
    for (std::size_t a = 0; a < D && bad.empty(); ++a)
      if (!(s_op(J, J.basis(a), e) == jordan::lmul_op(J, J.basis(a)))) bad = "S_{u e} != L_u at " + J.labels[a];
    rep.add("tkk.s_unit_rules", bad.empty(), bad);
  }

  // Bracket rules for E^+, E^-, h on all basis pairs.
  {
    std::string bad;
    const Scalar two(2), mtwo(-2), four(4), one(1), mone(-1);
    std::vector<EPair> e;
    for (std::size_t a = 0; a < D; ++a) e.push_back(epm_h(T, J.basis(a)));
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < D && bad.empty(); ++a)
      for (std::size_t b = 0; b < D && bad.empty(); ++b, ++pairs) {
        Vec ab = jordan::jmul(J, J.basis(a), J.basis(b));
        EPair eab = epm_h(T, ab);
        SparseVec ll = T.LL(J.basis(a), J.basis(b));
        std::string where = " at (" + J.labels[a] + "," + J.labels[b] + ")";
        if (T.g.br(e[a].h, e[b].E_plus) != exactnum::scaled(eab.E_plus, two)) bad = "[h_u,E+_v] != 2E+_uv" + where;
        else if (T.g.br(e[a].h, e[b].E_minus) != exactnum::scaled(eab.E_minus, mtwo))
          bad = "[h_u,E-_v] != -2E-_uv" + where;
        else if (!T.g.br(e[a].E_plus, e[b].E_plus).empty()) bad = "[E+_u,E+_v] != 0" + where;
        else if (!T.g.br(e[a].E_minus, e[b].E_minus).empty()) bad = "[E-_u,E-_v] != 0" + where;
        else if (T.g.br(e[a].E_plus, e[b].E_minus) != combo({{mone, eab.h}, {mtwo, ll}}))
          bad = "[E+_u,E-_v] != -h_uv - 2[L_u,L_v]" + where;
        else if (T.g.br(e[a].h, e[b].h) != exactnum::scaled(ll, four)) bad = "[h_u,h_v] != 4[L_u,L_v]" + where;
      }
    rep.add("tkk.e_h_brackets", bad.empty(), bad, {{"pairs", pairs}});
  }
  return rep;
}

}  // namespace tkklab::tkk
