#include "tkklab/jordan.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tkklab::jordan {

using exactnum::CompElement;
using exactnum::CompTag;
using exactnum::Rational;

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::SpinFactor: return "spin";
    case Kind::HermR: return "hermR";
    case Kind::HermC: return "hermC";
    case Kind::HermH: return "hermH";
    case Kind::HermO3: return "hermO";
  }
  return "?";
}

std::optional<Kind> parse_kind(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "spin" || t == "gamma" || t == "spinfactor") return Kind::SpinFactor;
  if (t == "hermr" || t == "sp") return Kind::HermR;
  if (t == "hermc" || t == "su") return Kind::HermC;
  if (t == "hermh" || t == "so*" || t == "sostar") return Kind::HermH;
  if (t == "hermo" || t == "hermo3" || t == "e7") return Kind::HermO3;
  return std::nullopt;
}

bool admissible(Kind kind, int n) {
  switch (kind) {
    case Kind::SpinFactor: return n >= 2 && n <= 64;
    case Kind::HermR: return n >= 1 && n <= 12;
    case Kind::HermC:
    case Kind::HermH: return n >= 2 && n <= 12;
    case Kind::HermO3: return n == 3;
  }
  return false;
}

Vec JordanAlgebra::basis(std::size_t i) const {
  Vec v(dim());
  v.at(i) = Scalar(1);
  return v;
}

std::optional<std::size_t> JordanAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

namespace {

CompTag tag_of(Kind k) {
  switch (k) {
    case Kind::HermR: return CompTag::R;
    case Kind::HermC: return CompTag::C;
    case Kind::HermH: return CompTag::H;
    default: return CompTag::O;
  }
}

void build_spin(JordanAlgebra& J) {
  const int n = J.n;
  J.D = n + 1;
  J.labels.push_back("l0");
  J.info.push_back({0, 0, 0});
  for (int k = 1; k <= n; ++k) {
    J.labels.push_back("u" + std::to_string(k));
    J.info.push_back({k, 0, 0});
  }
  J.product.assign(J.dim(), std::vector<SparseVec>(J.dim()));
  // (l, u)(m, v) = (lm + u.v, l v + m u)
  for (std::uint32_t a = 0; a < J.dim(); ++a)
    for (std::uint32_t b = 0; b < J.dim(); ++b) {
      if (a == 0) J.product[a][b] = {{b, Scalar(1)}};
      else if (b == 0) J.product[a][b] = {{a, Scalar(1)}};
      else if (a == b) J.product[a][b] = {{0u, Scalar(1)}};
    }
  J.unit = J.basis(0);
  J.trace = Vec(J.dim());
  J.trace[0] = Scalar(2);
}

using HermMatrix = std::vector<std::vector<CompElement>>;

void build_hermitian(JordanAlgebra& J) {
  const int n = J.n;
  const CompTag tag = tag_of(J.kind);
  const int d = exactnum::comp_dim(tag);
  for (int p = 1; p <= n; ++p) {
    J.labels.push_back("e" + std::to_string(p) + std::to_string(p));
    J.info.push_back({p, p, 0});
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int mu = 1; mu <= d; ++mu) {
        J.labels.push_back("e" + std::to_string(a) + std::to_string(b) + "^" + std::to_string(mu));
        J.info.push_back({a, b, mu});
      }
  J.D = static_cast<int>(J.labels.size());

  // Work with f = sqrt(2) e off the diagonal (f = e on it): f_ab^mu has
  // entries a_mu at (a,b) and conj(a_mu) at (b,a), so everything is rational.
  // Quaternion matrices are transposed (unit at (b,a)); only that orientation
  // makes the so*(4n) root labels consistent across index pairs once n >= 3.
  const bool below = J.kind == Kind::HermH;
  auto matrix_of = [&](const BasisInfo& bi) {
    HermMatrix m(n, std::vector<CompElement>(n, CompElement(tag)));
    if (bi.a == bi.b) {
      m[bi.a - 1][bi.a - 1] = CompElement(tag, Rational(1));
    } else {
      CompElement unit = CompElement::unit(tag, bi.mu - 1);
      m[bi.a - 1][bi.b - 1] = below ? unit.conj() : unit;
      m[bi.b - 1][bi.a - 1] = below ? unit : unit.conj();
    }
    return m;
  };
  // Row-by-column products; each entry is a sum of single products, so the
  // bracketing of octonion factors never arises.
  auto mat_mul = [&](const HermMatrix& x, const HermMatrix& y) {
    HermMatrix z(n, std::vector<CompElement>(n, CompElement(tag)));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r) z[p][q] += x[p][r] * y[r][q];
    return z;
  };
  std::vector<int> offset(J.dim());
  std::vector<HermMatrix> mats;
  for (const auto& bi : J.info) mats.push_back(matrix_of(bi));

  const Scalar half_sqrt2 = Scalar::sqrt(2) * Scalar(Rational(1, 2));  // 1/sqrt(2)
  auto s_of = [&](const BasisInfo& bi) { return bi.a == bi.b ? Scalar(1) : half_sqrt2; };

  std::map<std::tuple<int, int, int>, std::uint32_t> index;
  for (std::uint32_t k = 0; k < J.dim(); ++k) index[{J.info[k].a, J.info[k].b, J.info[k].mu}] = k;

  J.product.assign(J.dim(), std::vector<SparseVec>(J.dim()));
  for (std::size_t a = 0; a < J.dim(); ++a)
    for (std::size_t b = a; b < J.dim(); ++b) {
      HermMatrix xy = mat_mul(mats[a], mats[b]);
      HermMatrix yx = mat_mul(mats[b], mats[a]);
      Vec coords(J.dim());
      const Scalar sab = s_of(J.info[a]) * s_of(J.info[b]);
      for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
          CompElement z = below && p != q ? xy[q][p] + yx[q][p] : xy[p][q] + yx[p][q];
          z = Rational(1, 2) * z;
          if (p == q) {
            for (int s = 1; s < d; ++s)
              if (!z[s].is_zero()) throw std::logic_error("Hermitian product has non-real diagonal");
            if (!z[0].is_zero()) coords[index.at({p + 1, p + 1, 0})] += sab * Scalar(z[0]);
          } else {
            for (int s = 0; s < d; ++s) {
              if (z[s].is_zero()) continue;
              // coordinate along f_pq^(s+1), then back to e = s_gamma f
              coords[index.at({p + 1, q + 1, s + 1})] += sab * Scalar(z[s]) * Scalar::sqrt(2);
            }
          }
        }
      J.product[a][b] = exactnum::to_sparse(coords);
      J.product[b][a] = J.product[a][b];
    }
  J.unit = Vec(J.dim());
  J.trace = Vec(J.dim());
  for (int p = 1; p <= n; ++p) {
    J.unit[index.at({p, p, 0})] = Scalar(1);
    J.trace[index.at({p, p, 0})] = Scalar(1);
  }
}

}  // namespace

JordanAlgebra build_jordan(Kind kind, int n) {
  if (!admissible(kind, n))
    throw std::invalid_argument("unsupported Jordan algebra " + kind_name(kind) + "(" + std::to_string(n) + ")");
  JordanAlgebra J;
  J.kind = kind;
  J.n = n;
  if (kind == Kind::SpinFactor) build_spin(J);
  else build_hermitian(J);
  return J;
}

Vec jmul(const JordanAlgebra& J, const Vec& u, const Vec& v) {
  if (u.size() != J.dim() || v.size() != J.dim()) throw std::invalid_argument("jmul: element of another algebra");
  Vec out(J.dim());
  for (std::size_t a = 0; a < J.dim(); ++a) {
    if (u[a].is_zero()) continue;
    for (std::size_t b = 0; b < J.dim(); ++b) {
      if (v[b].is_zero()) continue;
      const auto& p = J.product[a][b];
      if (p.empty()) continue;
      exactnum::axpy(out, u[a] * v[b], p);
    }
  }
  return out;
}

Matrix lmul_op(const JordanAlgebra& J, const Vec& u) {
  Matrix m(J.dim(), J.dim());
  for (std::size_t b = 0; b < J.dim(); ++b) m.set_column(b, jmul(J, u, J.basis(b)));
  return m;
}

Matrix quad_rep(const JordanAlgebra& J, const Vec& x) {
  Matrix L = lmul_op(J, x);
  return (L * L) * Scalar(2) - lmul_op(J, jmul(J, x, x));
}

Scalar trace_of(const JordanAlgebra& J, const Vec& u) {
  Scalar s;
  for (std::size_t a = 0; a < J.dim(); ++a)
    if (!u[a].is_zero() && !J.trace[a].is_zero()) s += u[a] * J.trace[a];
  return s;
}

Scalar tau(const JordanAlgebra& J, const Vec& u, const Vec& v) {
  // Tr L_w is linear in w; Tr L_{b_a} is the sum of the diagonal entries
  // of the product tensor row a.
  Vec w = jmul(J, u, v);
  Scalar total;
  for (std::size_t a = 0; a < J.dim(); ++a) {
    if (w[a].is_zero()) continue;
    Scalar tr;
    for (std::size_t b = 0; b < J.dim(); ++b)
      for (const auto& [k, c] : J.product[a][b])
        if (k == b) tr += c;
    total += w[a] * tr;
  }
  return total;
}

Scalar inner(const JordanAlgebra& J, const Vec& u, const Vec& v) {
  return tau(J, u, v) * Scalar(Rational(1, J.D));
}

RankDegree rank_degree(const JordanAlgebra& J) {
  Rational rho = trace_of(J, J.unit).rational_or_throw();
  if (!rho.is_integer()) throw std::logic_error("rank is not an integer");
  RankDegree rd;
  rd.rho = static_cast<int>(rho.num());
  if (rd.rho == 1) {
    rd.d = 1;  // conventional value for H_1(R) = R
    return rd;
  }
  Rational d = Rational(2 * (J.D - rd.rho), rd.rho * (rd.rho - 1));
  if (!d.is_integer() || d.num() <= 0) throw std::logic_error("degree is not a positive integer");
  rd.d = static_cast<int>(d.num());
  return rd;
}

Vec orthonormal_weights(const JordanAlgebra& J) {
  Vec w(J.dim());
  for (std::size_t a = 0; a < J.dim(); ++a) {
    for (std::size_t b = a + 1; b < J.dim(); ++b)
      if (!inner(J, J.basis(a), J.basis(b)).is_zero())
        throw std::logic_error("basis of " + kind_name(J.kind) + " is not orthogonal");
    w[a] = inner(J, J.basis(a), J.basis(a)).inverse();
  }
  return w;
}

JordanFrame jordan_frame(const JordanAlgebra& J) {
  JordanFrame F;
  if (J.kind == Kind::SpinFactor) {
    const Scalar half(Rational(1, 2));
    Vec e11(J.dim()), e22(J.dim());
    e11[0] = half;
    e11[1] = half;
    e22[0] = half;
    e22[1] = -half;
    F.diag = {e11, e22};
    const Scalar inv_sqrt2 = Scalar::sqrt(2) * half;
    for (int mu = 1; mu <= J.n - 1; ++mu) {
      Vec v(J.dim());
      v[mu + 1] = inv_sqrt2;
      F.off[{1, 2, mu}] = v;
    }
    return F;
  }
  for (std::size_t k = 0; k < J.dim(); ++k) {
    const auto& bi = J.info[k];
    if (bi.a == bi.b) F.diag.push_back(J.basis(k));
    else F.off[{bi.a, bi.b, bi.mu}] = J.basis(k);
  }
  return F;
}

Report verify_frame(const JordanAlgebra& J, const JordanFrame& F) {
  Report rep;
  const auto rd = rank_degree(J);
  const Scalar inv_rho(Rational(1, rd.rho));
  const Scalar half(Rational(1, 2));
  std::vector<std::pair<std::string, Vec>> all;
  for (std::size_t i = 0; i < F.diag.size(); ++i)
    all.push_back({"e" + std::to_string(i + 1) + std::to_string(i + 1), F.diag[i]});
  for (const auto& [key, v] : F.off) {
    auto [i, j, mu] = key;
    all.push_back({"e" + std::to_string(i) + std::to_string(j) + "^" + std::to_string(mu), v});
  }

  // 1. orthogonal basis of length 1/sqrt(rho)
  {
    bool ok = all.size() == J.dim();
    std::string witness = ok ? "" : "frame has wrong size";
    for (std::size_t a = 0; a < all.size() && ok; ++a)
      for (std::size_t b = a; b < all.size() && ok; ++b) {
        Scalar ip = inner(J, all[a].second, all[b].second);
        Scalar want = a == b ? inv_rho : Scalar();
        if (ip != want) {
          ok = false;
          witness = "<" + all[a].first + "|" + all[b].first + "> = " + ip.str();
        }
      }
    rep.add("frame.orthogonal_length", ok, witness);
  }
  // 2. e_ii idempotent and mutually orthogonal
  {
    bool ok = F.diag.size() == static_cast<std::size_t>(rd.rho);
    std::string witness = ok ? "" : "number of idempotents differs from rank";
    for (std::size_t i = 0; i < F.diag.size() && ok; ++i)
      for (std::size_t j = i; j < F.diag.size() && ok; ++j) {
        Vec p = jmul(J, F.diag[i], F.diag[j]);
        Vec want = i == j ? F.diag[i] : Vec(J.dim());
        if (p != want) {
          ok = false;
          witness = "e" + std::to_string(i + 1) + std::to_string(i + 1) + " * e" + std::to_string(j + 1) +
                    std::to_string(j + 1);
        }
      }
    rep.add("frame.idempotents", ok, witness);
  }
  // 3. sum e_ii = e
  {
    Vec s(J.dim());
    for (const auto& v : F.diag) s = exactnum::add(s, v);
    rep.add("frame.sum_is_unit", s == J.unit, s == J.unit ? "" : "sum of e_ii differs from e");
  }
  // 4. off-diagonal squares and half-actions
  {
    bool ok = true;
    std::string witness;
    for (const auto& [key, v] : F.off) {
      auto [j, k, mu] = key;
      Vec sq = jmul(J, v, v);
      Vec want = exactnum::scaled(exactnum::add(F.diag[j - 1], F.diag[k - 1]), half);
      if (sq != want) {
        ok = false;
        witness = "square of e" + std::to_string(j) + std::to_string(k) + "^" + std::to_string(mu);
        break;
      }
      for (int i = 1; i <= rd.rho; ++i) {
        Vec p = jmul(J, F.diag[i - 1], v);
        Vec target = (i == j || i == k) ? exactnum::scaled(v, half) : Vec(J.dim());
        if (p != target) {
          ok = false;
          witness = "e" + std::to_string(i) + std::to_string(i) + " * e" + std::to_string(j) + std::to_string(k) +
                    "^" + std::to_string(mu);
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("frame.off_diagonal_rules", ok, witness);
  }
  // 5. traces
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < F.diag.size(); ++i)
      if (trace_of(J, F.diag[i]) != Scalar(1)) {
        ok = false;
        witness = "tr e" + std::to_string(i + 1) + std::to_string(i + 1);
      }
    for (const auto& [key, v] : F.off)
      if (!trace_of(J, v).is_zero()) {
        ok = false;
        witness = "tr of off-diagonal frame vector";
      }
    rep.add("frame.traces", ok, witness);
  }
  // 6. x0 = e_11 satisfies x0^2 = tr(x0) x0 and x0 = tr(x0) e_11
  {
    const Vec& x0 = F.diag.at(0);
    Scalar t = trace_of(J, x0);
    bool ok = jmul(J, x0, x0) == exactnum::scaled(x0, t) && exactnum::scaled(F.diag[0], t) == x0;
    rep.add("frame.primitive_x0", ok, ok ? "" : "x0 = e11 fails x0^2 = tr(x0) x0");
  }
  return rep;
}

Vec random_element(const JordanAlgebra& J, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  Vec v(J.dim());
  for (auto& x : v) x = Scalar(Rational(num(rng), den(rng)));
  return v;
}

Report verify_jordan_axioms(const JordanAlgebra& J, int samples, std::uint64_t seed) {
  Report rep;
  {
    bool ok = true;
    std::string witness;
    for (std::size_t a = 0; a < J.dim() && ok; ++a)
      for (std::size_t b = a + 1; b < J.dim() && ok; ++b)
        if (J.product[a][b] != J.product[b][a]) {
          ok = false;
          witness = J.labels[a] + " * " + J.labels[b] + " != " + J.labels[b] + " * " + J.labels[a];
        }
    rep.add("jordan.commutative_tensor", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t a = 0; a < J.dim() && ok; ++a)
      if (jmul(J, J.unit, J.basis(a)) != J.basis(a)) {
        ok = false;
        witness = "e * " + J.labels[a];
      }
    rep.add("jordan.unit", ok, witness);
  }
  std::mt19937_64 rng(seed);
  int fails_comm = 0, fails_jordan = 0, fails_ops = 0;
  std::string w_comm, w_jordan, w_ops;
  for (int s = 0; s < samples; ++s) {
    Vec x = random_element(J, rng);
    Vec y = random_element(J, rng);
    if (jmul(J, x, y) != jmul(J, y, x)) {
      if (!fails_comm++) w_comm = "sample " + std::to_string(s);
    }
    Vec x2 = jmul(J, x, x);
    if (jmul(J, x, jmul(J, x2, y)) != jmul(J, x2, jmul(J, x, y))) {
      if (!fails_jordan++) w_jordan = "sample " + std::to_string(s);
    }
    if (!exactnum::commutator(lmul_op(J, x), lmul_op(J, x2)).is_zero()) {
      if (!fails_ops++) w_ops = "sample " + std::to_string(s);
    }
  }
  rep.add("jordan.commutative_samples", fails_comm == 0, w_comm, {{"samples", samples}});
  rep.add("jordan.jordan_identity", fails_jordan == 0, w_jordan, {{"samples", samples}});
  rep.add("jordan.L_u_L_u2_commute", fails_ops == 0, w_ops, {{"samples", samples}});

  Matrix gram(J.dim(), J.dim());
  for (std::size_t a = 0; a < J.dim(); ++a)
    for (std::size_t b = 0; b < J.dim(); ++b) gram(a, b) = tau(J, J.basis(a), J.basis(b));
  bool symmetric = gram == gram.transpose();
  bool positive = true;
  std::string witness;
  // Elimination without pivoting: the k-th pivot is minor_k / minor_{k-1}, so
  // all pivots positive is the leading-minor test without the huge products.
  Matrix m = gram;
  for (std::size_t k = 0; k < m.rows() && positive; ++k) {
    auto r = m(k, k).rational();
    if (!r || r->sign() <= 0) {
      positive = false;
      witness = "pivot " + std::to_string(k + 1) + " = " + m(k, k).str();
      break;
    }
    Scalar inv = Scalar(1) / m(k, k);
    for (std::size_t i = k + 1; i < m.rows(); ++i) {
      if (m(i, k).is_zero()) continue;
      Scalar f = m(i, k) * inv;
      for (std::size_t j = k; j < m.cols(); ++j) m(i, j) -= f * m(k, j);
    }
  }
  rep.add("jordan.trace_form_positive_definite", symmetric && positive, symmetric ? witness : "Gram matrix not symmetric");
  return rep;
}

}  // namespace tkklab::jordan
