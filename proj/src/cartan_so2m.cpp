#include <stdexcept>

#include "tkklab/cartan.hpp"

namespace tkklab::cartan {

using exactnum::Matrix;
using exactnum::sparse_add;

namespace {

std::string mlabel(int a, int b) { return "M[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

SparseVec sum(std::initializer_list<std::pair<Scalar, SparseVec>> terms) {
  SparseVec out;
  for (const auto& [c, v] : terms) out = sparse_add(out, c, v);
  return out;
}

}  // namespace

SparseVec So2m::M(int a, int b) const {
  if (a == b) return {};
  if (a > b) return exactnum::scaled(M(b, a), Scalar(-1));
  return {{static_cast<std::uint32_t>(index.at({a, b})), Scalar(1)}};
}

So2m so2m_algebra(int m) {
  if (m < 2) throw std::invalid_argument("so(2,m+1) needs m >= 2");
  So2m so;
  so.m = m;
  std::vector<std::string> labels;
  for (int a = -1; a <= m + 1; ++a)
    for (int b = a + 1; b <= m + 1; ++b) {
      so.index[{a, b}] = labels.size();
      labels.push_back(mlabel(a, b));
    }
  so.g = lie::empty_algebra("so(2," + std::to_string(m + 1) + ")", labels);
  auto eta = [&](int x, int y) { return x == y ? Scalar(so.eta(x)) : Scalar(); };
  const Scalar mi = Scalar(-1) * Scalar::i();
  for (const auto& [p, i] : so.index)
    for (const auto& [q, j] : so.index) {
      auto [a, b] = p;
      auto [c, d] = q;
      // [M_ab, M_cd] = -i(eta_bc M_ad - eta_ac M_bd - eta_bd M_ac + eta_ad M_bc)
      SparseVec v = sum({{eta(b, c), so.M(a, d)},
                         {Scalar(-1) * eta(a, c), so.M(b, d)},
                         {Scalar(-1) * eta(b, d), so.M(a, c)},
                         {eta(a, d), so.M(b, c)}});
      so.g.bracket[i][j] = exactnum::scaled(v, mi);
    }
  return so;
}

SparseVec PhiIso::apply(const SparseVec& x) const {
  Vec out(phi.rows());
  for (const auto& [k, c] : x)
    for (std::size_t r = 0; r < phi.rows(); ++r)
      if (!phi(r, k).is_zero()) out[r] += c * phi(r, k);
  return exactnum::to_sparse(out);
}

PhiIso phi_iso(int m) {
  PhiIso P;
  P.so = so2m_algebra(m);
  P.T = std::make_shared<const tkk::Tkk>(tkk::build_tkk(jordan::Kind::SpinFactor, m));
  const tkk::Tkk& T = *P.T;
  const So2m& so = P.so;
  const jordan::JordanAlgebra& J = *T.J;
  const std::string pre = "phi.m" + std::to_string(m) + ".";
  Report& rep = P.report;
  const Scalar mi = Scalar(-1) * Scalar::i();

  {
    const std::size_t want = static_cast<std::size_t>((m + 3) * (m + 2) / 2);
    bool ok = T.g.dim() == want && so.g.dim() == want;
    rep.add(pre + "dims", ok, ok ? "" : "co " + std::to_string(T.g.dim()) + ", so " + std::to_string(so.g.dim()),
            {{"dim", T.g.dim()}, {"expected", want}});
  }
  rep.add(pre + "so_jacobi", lie::verify_jacobi(so.g).ok());

  // Given images: X_e, Y_e and L_(lambda, u) on the basis (l0 = (1,0), u_i = (0, e_i)).
  auto phiL = [&](const Vec& x) {
    SparseVec v = exactnum::scaled(so.M(-1, m + 1), Scalar(-1) * x[0]);
    for (int i = 1; i <= m; ++i) v = sparse_add(v, x[i], so.M(0, i));
    return exactnum::scaled(v, mi);
  };
  const SparseVec Xe = exactnum::scaled(sparse_add(so.M(-1, 0), Scalar(1), so.M(0, m + 1)), mi);
  const SparseVec Ye = exactnum::scaled(sparse_add(so.M(-1, 0), Scalar(-1), so.M(0, m + 1)), mi);
  // [L_u, X_e] = X_u and [L_u, Y_e] = -Y_u fix the rest of the grading pieces;
  // S_uv = [L_u, L_v] + L_uv fixes str(J).
  auto phiX = [&](const Vec& u) { return so.g.br(phiL(u), Xe); };
  auto phiY = [&](const Vec& u) { return exactnum::scaled(so.g.br(phiL(u), Ye), Scalar(-1)); };

  const std::size_t D = T.D();
  P.phi = Matrix(so.g.dim(), T.g.dim());
  auto set_col = [&](std::size_t c, const SparseVec& v) {
    for (const auto& [k, s] : v) P.phi(k, c) = s;
  };
  for (std::size_t a = 0; a < D; ++a) {
    set_col(T.x_index(a), phiX(J.basis(a)));
    set_col(T.y_index(a), phiY(J.basis(a)));
  }
  for (std::size_t k = 0; k < T.str.dim(); ++k) {
    auto [a, b] = T.str.source[k];
    SparseVec v;
    if (b < 0) v = phiL(J.basis(a));
    else
      v = sparse_add(so.g.br(phiL(J.basis(a)), phiL(J.basis(b))), Scalar(1),
                     phiL(jordan::jmul(J, J.basis(a), J.basis(b))));
    set_col(T.s_index(k), v);
  }
  // Sanity: X_e and Y_e through the derived formula agree with the given images.
  rep.add(pre + "unit_images", phiX(J.unit) == Xe && phiY(J.unit) == Ye);

  {
    std::size_t r = exactnum::rank(P.phi);
    rep.add(pre + "bijective", r == T.g.dim() && r == so.g.dim(),
            r == T.g.dim() && r == so.g.dim() ? "" : "rank " + std::to_string(r), {{"rank", r}});
  }
  {
    std::string bad;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < T.g.dim() && bad.empty(); ++a)
      for (std::size_t b = 0; b < T.g.dim() && bad.empty(); ++b) {
        ++pairs;
        SparseVec lhs = P.apply(T.g.bracket[a][b]);
        SparseVec ea = P.apply({{static_cast<std::uint32_t>(a), Scalar(1)}});
        SparseVec eb = P.apply({{static_cast<std::uint32_t>(b), Scalar(1)}});
        if (lhs != so.g.br(ea, eb)) bad = "[" + T.g.labels[a] + ", " + T.g.labels[b] + "]";
      }
    rep.add(pre + "homomorphism", bad.empty(), bad.empty() ? "" : "phi fails on " + bad, {{"pairs", pairs}});
  }

  // The six displayed images on the frame e11 = (1/2, 1/2, 0..), e22 = (1/2, -1/2, 0..),
  // e12^mu = u_{mu+1} / sqrt2.
  const Scalar half(Rational(1, 2));
  const Scalar inv_sqrt2 = Scalar::sqrt(2) * half;
  Vec e11(D), e22(D);
  e11[0] = half, e11[1] = half, e22[0] = half, e22[1] = Scalar(-1) * half;
  const Scalar mhi = mi * half, mis = mi * inv_sqrt2;
  auto check = [&](const std::string& name, const SparseVec& got, const SparseVec& want) {
    rep.add(pre + "image[" + name + "]", got == want,
            got == want ? "" : "got " + lie::format(so.g, got) + ", expected " + lie::format(so.g, want));
  };
  auto M = [&](int a, int b) { return so.M(a, b); };
  check("X_e11", P.apply(T.X(e11)), exactnum::scaled(sum({{Scalar(1), M(-1, 0)}, {Scalar(1), M(-1, 1)}, {Scalar(1), M(0, m + 1)}, {Scalar(1), M(1, m + 1)}}), mhi));
  check("X_e22", P.apply(T.X(e22)), exactnum::scaled(sum({{Scalar(1), M(-1, 0)}, {Scalar(-1), M(-1, 1)}, {Scalar(1), M(0, m + 1)}, {Scalar(-1), M(1, m + 1)}}), mhi));
  check("Y_e11", P.apply(T.Y(e11)), exactnum::scaled(sum({{Scalar(1), M(-1, 0)}, {Scalar(-1), M(-1, 1)}, {Scalar(-1), M(0, m + 1)}, {Scalar(1), M(1, m + 1)}}), mhi));
  check("Y_e22", P.apply(T.Y(e22)), exactnum::scaled(sum({{Scalar(1), M(-1, 0)}, {Scalar(1), M(-1, 1)}, {Scalar(-1), M(0, m + 1)}, {Scalar(-1), M(1, m + 1)}}), mhi));
  bool x12 = true, y12 = true;
  std::string xd, yd;
  for (int mu = 1; mu <= m - 1; ++mu) {
    Vec e12(D);
    e12[mu + 1] = inv_sqrt2;
    SparseVec wx = exactnum::scaled(sparse_add(M(-1, mu + 1), Scalar(1), M(mu + 1, m + 1)), mis);
    SparseVec wy = exactnum::scaled(sparse_add(M(-1, mu + 1), Scalar(-1), M(mu + 1, m + 1)), Scalar(-1) * mis);
    if (x12 && P.apply(T.X(e12)) != wx) x12 = false, xd = "mu=" + std::to_string(mu);
    if (y12 && P.apply(T.Y(e12)) != wy) y12 = false, yd = "mu=" + std::to_string(mu);
  }
  rep.add(pre + "image[X_e12^mu]", x12, xd);
  rep.add(pre + "image[Y_e12^mu]", y12, yd);
  return P;
}

}  // namespace tkklab::cartan
