#include <algorithm>
#include <functional>
#include <stdexcept>

#include "tkklab/cartan.hpp"

namespace tkklab::cartan {

using exactnum::LinearSpan;
using exactnum::Matrix;
using exactnum::sparse_add;
using exactnum::to_sparse;

namespace {

std::string idx(int i) { return std::to_string(i); }

// Helpers shared by the per-case tables of displayed elements.
struct Builder {
  const tkk::Tkk& T;
  std::size_t c;
  std::vector<Displayed> out;

  const Scalar I = Scalar::i();
  const Scalar sqrt2 = Scalar::sqrt(2);
  const Scalar inv_sqrt2 = Scalar::sqrt(2) * Scalar(Rational(1, 2));
  const Scalar inv_2sqrt2 = Scalar::sqrt(2) * Scalar(Rational(1, 4));

  Vec d(int i) const { return T.jelem("e" + idx(i) + idx(i)); }
  // e_ij^mu for any i != j; e_ji^mu = -e_ij^mu for imaginary mu.
  Vec off(int i, int j, int mu) const {
    if (i < j) return T.jelem("e" + idx(i) + idx(j) + "^" + idx(mu));
    Vec v = T.jelem("e" + idx(j) + idx(i) + "^" + idx(mu));
    return mu == 1 ? v : exactnum::scaled(v, Scalar(-1));
  }
  Vec lin(const Scalar& a, const Vec& u, const Scalar& b, const Vec& v) const {
    return exactnum::add(exactnum::scaled(u, a), exactnum::scaled(v, b));
  }
  SparseVec h(const Vec& u) const { return T.h(u); }
  SparseVec Ep(const Vec& u) const { return T.E_plus(u); }
  SparseVec Em(const Vec& u) const { return T.E_minus(u); }
  SparseVec LL(const Vec& u, const Vec& v) const { return T.LL(u, v); }
  SparseVec L(const Vec& u) const { return T.L(u); }
  SparseVec br(const SparseVec& x, const SparseVec& y) const { return T.g.br(x, y); }
  static SparseVec sc(const Scalar& s, const SparseVec& x) { return exactnum::scaled(x, s); }
  static SparseVec plus(const SparseVec& x, const Scalar& s, const SparseVec& y) { return sparse_add(x, s, y); }

  RootVec r1(int i, Rational si) const {
    RootVec v(c);
    v[i - 1] += si;
    return v;
  }
  RootVec r2(int i, int si, int j, int sj) const {
    RootVec v(c);
    v[i - 1] += Rational(si);
    v[j - 1] += Rational(sj);
    return v;
  }
  void H(const RootVec& r, std::string f, SparseVec x) { out.push_back({true, r, std::move(f), std::move(x)}); }
  void E(const RootVec& r, std::string f, SparseVec x) { out.push_back({false, r, std::move(f), std::move(x)}); }
};

void sp_table(Builder& b, int n) {
  for (int i = 1; i <= n; ++i) {
    std::string ii = "e" + idx(i) + idx(i);
    b.H(b.r1(i, Rational(2)), "H_{2e" + idx(i) + "} = h_{" + ii + "}", b.h(b.d(i)));
    b.E(b.r1(i, Rational(2)), "E_{2e" + idx(i) + "} = E+_{" + ii + "}", b.Ep(b.d(i)));
    b.E(b.r1(i, Rational(-2)), "E_{-2e" + idx(i) + "} = E-_{" + ii + "}", b.Em(b.d(i)));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::string ij = "e" + idx(i) + idx(j), jj = "e" + idx(j) + idx(j), ii = "e" + idx(i) + idx(i);
      std::string sfx = idx(i) + "," + idx(j);
      Vec e = b.off(i, j, 1), dj = b.d(j);
      b.H(b.r2(i, 1, j, 1), "H_{e" + idx(i) + "+e" + idx(j) + "} = h_{" + ii + "} + h_{" + jj + "}",
          b.plus(b.h(b.d(i)), Scalar(1), b.h(dj)));
      b.H(b.r2(i, 1, j, -1), "H_{e" + idx(i) + "-e" + idx(j) + "} = h_{" + ii + "} - h_{" + jj + "}",
          b.plus(b.h(b.d(i)), Scalar(-1), b.h(dj)));
      b.E(b.r2(i, 1, j, 1), "E_{e" + idx(i) + "+e" + idx(j) + "} = sqrt2 E+_{" + ij + "}", b.sc(b.sqrt2, b.Ep(e)));
      b.E(b.r2(i, -1, j, -1), "E_{-e" + idx(i) + "-e" + idx(j) + "} = sqrt2 E-_{" + ij + "}", b.sc(b.sqrt2, b.Em(e)));
      b.E(b.r2(i, 1, j, -1), "E_{e" + idx(i) + "-e" + idx(j) + "} = (h_{" + ij + "} + 4[L_{" + ij + "},L_{" + jj + "}])/sqrt2",
          b.sc(b.inv_sqrt2, b.plus(b.h(e), Scalar(4), b.LL(e, dj))));
      b.E(b.r2(i, -1, j, 1), "E_{-e" + idx(i) + "+e" + idx(j) + "} = (h_{" + ij + "} - 4[L_{" + ij + "},L_{" + jj + "}])/sqrt2",
          b.sc(b.inv_sqrt2, b.plus(b.h(e), Scalar(-4), b.LL(e, dj))));
    }
}

void su_table(Builder& b, int n, bool literal_eta) {
  for (int i = 1; i <= n; ++i) {
    std::string ii = "e" + idx(i) + idx(i), r = "e" + idx(i) + "-e" + idx(n + i);
    b.H(b.r2(i, 1, n + i, -1), "H_{" + r + "} = h_{" + ii + "}", b.h(b.d(i)));
    b.E(b.r2(i, 1, n + i, -1), "E_{" + r + "} = E+_{" + ii + "}", b.Ep(b.d(i)));
    b.E(b.r2(i, -1, n + i, 1), "E_{-(" + r + ")} = E-_{" + ii + "}", b.Em(b.d(i)));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::string ij = "e" + idx(i) + idx(j), jj = "e" + idx(j) + idx(j);
      Vec e1 = b.off(i, j, 1), ea = b.off(i, j, 2), dj = b.d(j);
      SparseVec comm = b.LL(e1, ea);
      for (int b1 : {0, n})
        for (int b2 : {0, n}) {
          int eta1 = b1 == 0 ? 1 : -1, eta2 = b2 == 0 ? 1 : -1;
          // The displayed sign convention puts eta on e_jj directly; the
          // alternative flips it (e_jj enters with -eta).
          int cj = literal_eta ? eta2 : -eta2;
          Vec u = b.lin(Scalar(eta1), b.d(i), Scalar(cj), dj);
          SparseVec x = b.sc(Scalar(Rational(1, 2)), b.plus(b.h(u), Scalar(-4) * b.I, comm));
          std::string root = "e" + idx(i + b1) + "-e" + idx(j + b2);
          b.H(b.r2(i + b1, 1, j + b2, -1),
              "H_{" + root + "} = (h_{" + std::to_string(eta1) + "e" + idx(i) + idx(i) + (cj > 0 ? "+" : "-") + jj +
                  "} - 4i[L_{" + ij + "},L_{" + ij + "^2}])/2",
              x);
        }
      Vec z = b.lin(Scalar(1), e1, b.I, ea), zb = b.lin(Scalar(1), e1, -b.I, ea);
      std::string zs = "(" + ij + "+i" + ij + "^2)", zbs = "(" + ij + "-i" + ij + "^2)";
      b.E(b.r2(i, 1, j, -1), "E_{e" + idx(i) + "-e" + idx(j) + "} = (h_" + zs + " + 4[L_" + zs + ",L_{" + jj + "}])/(2sqrt2)",
          b.sc(b.inv_2sqrt2, b.plus(b.h(z), Scalar(4), b.LL(z, dj))));
      b.E(b.r2(i, -1, j, 1), "E_{-e" + idx(i) + "+e" + idx(j) + "} = (h_" + zbs + " - 4[L_" + zbs + ",L_{" + jj + "}])/(2sqrt2)",
          b.sc(b.inv_2sqrt2, b.plus(b.h(zb), Scalar(-4), b.LL(zb, dj))));
      b.E(b.r2(n + i, 1, n + j, -1),
          "E_{e" + idx(n + i) + "-e" + idx(n + j) + "} = (h_" + zs + " - 4[L_" + zs + ",L_{" + jj + "}])/(2sqrt2)",
          b.sc(b.inv_2sqrt2, b.plus(b.h(z), Scalar(-4), b.LL(z, dj))));
      b.E(b.r2(n + i, -1, n + j, 1),
          "E_{-e" + idx(n + i) + "+e" + idx(n + j) + "} = (h_" + zbs + " + 4[L_" + zbs + ",L_{" + jj + "}])/(2sqrt2)",
          b.sc(b.inv_2sqrt2, b.plus(b.h(zb), Scalar(4), b.LL(zb, dj))));
      b.E(b.r2(i, 1, n + j, -1), "E_{e" + idx(i) + "-e" + idx(n + j) + "} = E+_" + zs + "/sqrt2", b.sc(b.inv_sqrt2, b.Ep(z)));
      b.E(b.r2(i, -1, n + j, 1), "E_{-e" + idx(i) + "+e" + idx(n + j) + "} = E-_" + zbs + "/sqrt2",
          b.sc(b.inv_sqrt2, b.Em(zb)));
      b.E(b.r2(j, 1, n + i, -1), "E_{e" + idx(j) + "-e" + idx(n + i) + "} = E+_" + zbs + "/sqrt2",
          b.sc(b.inv_sqrt2, b.Ep(zb)));
      b.E(b.r2(j, -1, n + i, 1), "E_{-e" + idx(j) + "+e" + idx(n + i) + "} = E-_" + zs + "/sqrt2", b.sc(b.inv_sqrt2, b.Em(z)));
    }
}

void sostar_table(Builder& b, int n) {
  const Scalar I = b.I;
  for (int i = 1; i <= n; ++i) {
    std::string ii = "e" + idx(i) + idx(i);
    b.H(b.r2(i, 1, n + i, 1), "H_{e" + idx(i) + "+e" + idx(n + i) + "} = h_{" + ii + "}", b.h(b.d(i)));
    b.E(b.r2(i, 1, n + i, 1), "E_{e" + idx(i) + "+e" + idx(n + i) + "} = E+_{" + ii + "}", b.Ep(b.d(i)));
    b.E(b.r2(i, -1, n + i, -1), "E_{-e" + idx(i) + "-e" + idx(n + i) + "} = E-_{" + ii + "}", b.Em(b.d(i)));
    // The displayed lines use e_ij-operators with j unbound; every j != i is tried.
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      std::string ij = "e" + idx(i) + idx(j), tagj = " [j=" + idx(j) + "]";
      Vec e1 = b.off(i, j, 1), e2 = b.off(i, j, 2), e3 = b.off(i, j, 3), e4 = b.off(i, j, 4);
      SparseVec h = b.sc(Scalar(2) * I, b.plus(b.LL(e1, e4), Scalar(-1), b.LL(e2, e3)));
      b.H(b.r2(i, 1, n + i, -1),
          "H_{e" + idx(i) + "-e" + idx(n + i) + "} = 2i([L_{" + ij + "},L_{" + ij + "^4}] - [L_{" + ij + "^2},L_{" + ij + "^3}])" + tagj,
          h);
      SparseVec a = b.plus(b.L(e2), I, b.L(e3)), c = b.plus(b.L(e1), -I, b.L(e4));
      b.E(b.r2(i, 1, n + i, -1),
          "E_{e" + idx(i) + "-e" + idx(n + i) + "} = [L_{" + ij + "^2}+iL_{" + ij + "^3}, L_{" + ij + "}-iL_{" + ij + "^4}]" + tagj,
          b.br(a, c));
      SparseVec a2 = b.plus(b.L(e1), I, b.L(e4)), c2 = b.plus(b.L(e2), -I, b.L(e3));
      b.E(b.r2(i, -1, n + i, 1),
          "E_{-e" + idx(i) + "+e" + idx(n + i) + "} = [L_{" + ij + "}+iL_{" + ij + "^4}, L_{" + ij + "^2}-iL_{" + ij + "^3}]" + tagj,
          b.br(a2, c2));
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::string ij = "e" + idx(i) + idx(j), jj = "e" + idx(j) + idx(j);
      Vec e1 = b.off(i, j, 1), e2 = b.off(i, j, 2), e3 = b.off(i, j, 3), e4 = b.off(i, j, 4), di = b.d(i), dj = b.d(j);
      SparseVec l14 = b.LL(e1, e4), l23 = b.LL(e2, e3);
      for (int nb : {0, n}) {
        int eta = nb == 0 ? 1 : -1;
        Scalar ie = I * Scalar(eta);
        std::string es = eta > 0 ? "" : "-";
        std::string pm = eta > 0 ? "+" : "-", mp = eta > 0 ? "-" : "+";
        // e_{nb+i} - e_{nb+j}
        RootVec r = b.r2(nb + i, 1, nb + j, -1);
        std::string rs = "e" + idx(nb + i) + "-e" + idx(nb + j);
        b.H(r, "H_{" + rs + "} = (h_{" + "e" + idx(i) + idx(i) + "-" + jj + "} + 4i" + es + "[L_{" + ij + "},L_{" + ij + "^4}])/2",
            b.sc(Scalar(Rational(1, 2)), b.plus(b.h(b.lin(Scalar(1), di, Scalar(-1), dj)), Scalar(4) * ie, l14)));
        Vec w = b.lin(Scalar(1), e1, -ie, e4), wb = b.lin(Scalar(1), e1, ie, e4);
        std::string ws = "(" + ij + mp + "i" + ij + "^4)", wbs = "(" + ij + pm + "i" + ij + "^4)";
        b.E(r, "E_{" + rs + "} = (h_" + ws + " + 4[L_" + ws + ",L_{" + jj + "}])/(2sqrt2)",
            b.sc(b.inv_2sqrt2, b.plus(b.h(w), Scalar(4), b.LL(w, dj))));
        b.E(neg(r), "E_{-(" + rs + ")} = (h_" + wbs + " - 4[L_" + wbs + ",L_{" + jj + "}])/(2sqrt2)",
            b.sc(b.inv_2sqrt2, b.plus(b.h(wb), Scalar(-4), b.LL(wb, dj))));
        // e_{nb+i} - e_{n+j-nb}
        r = b.r2(nb + i, 1, n + j - nb, -1);
        rs = "e" + idx(nb + i) + "-e" + idx(n + j - nb);
        b.H(r, "H_{" + rs + "} = (h_{e" + idx(i) + idx(i) + "-" + jj + "} - 4i" + es + "[L_{" + ij + "^2},L_{" + ij + "^3}])/2",
            b.sc(Scalar(Rational(1, 2)), b.plus(b.h(b.lin(Scalar(1), di, Scalar(-1), dj)), Scalar(-4) * ie, l23)));
        Vec v = b.lin(Scalar(1), e2, ie, e3), vb = b.lin(Scalar(1), e2, -ie, e3);
        std::string vs = "(" + ij + "^2" + pm + "i" + ij + "^3)", vbs = "(" + ij + "^2" + mp + "i" + ij + "^3)";
        b.E(r, "E_{" + rs + "} = (h_" + vs + " + 4[L_" + vs + ",L_{" + jj + "}])/(2sqrt2)",
            b.sc(b.inv_2sqrt2, b.plus(b.h(v), Scalar(4), b.LL(v, dj))));
        b.E(neg(r), "E_{-(" + rs + ")} = (h_" + vbs + " - 4[L_" + vbs + ",L_{" + jj + "}])/(2sqrt2)",
            b.sc(b.inv_2sqrt2, b.plus(b.h(vb), Scalar(-4), b.LL(vb, dj))));
        // e_{i+nb} + e_{nb+j}
        r = b.r2(nb + i, 1, nb + j, 1);
        rs = "e" + idx(nb + i) + "+e" + idx(nb + j);
        b.H(r, "H_{" + rs + "} = (h_{e" + idx(i) + idx(i) + "+" + jj + "} - 4i" + es + "[L_{" + ij + "^2},L_{" + ij + "^3}])/2",
            b.sc(Scalar(Rational(1, 2)), b.plus(b.h(b.lin(Scalar(1), di, Scalar(1), dj)), Scalar(-4) * ie, l23)));
        b.E(r, "E_{" + rs + "} = E+_" + vs + "/sqrt2", b.sc(b.inv_sqrt2, b.Ep(v)));
        b.E(neg(r), "E_{-(" + rs + ")} = E-_" + vbs + "/sqrt2", b.sc(b.inv_sqrt2, b.Em(vb)));
        // e_{nb+i} + e_{n+j-nb}
        r = b.r2(nb + i, 1, n + j - nb, 1);
        rs = "e" + idx(nb + i) + "+e" + idx(n + j - nb);
        b.E(r, "E_{" + rs + "} = E+_" + ws + "/sqrt2", b.sc(b.inv_sqrt2, b.Ep(w)));
        b.E(neg(r), "E_{-(" + rs + ")} = E-_" + wbs + "/sqrt2", b.sc(b.inv_sqrt2, b.Em(wb)));
        b.H(r, "H_{" + rs + "} = (h_{e" + idx(i) + idx(i) + "+" + jj + "} + 4i" + es + "[L_{" + ij + "},L_{" + ij + "^4}])/2",
            b.sc(Scalar(Rational(1, 2)), b.plus(b.h(b.lin(Scalar(1), di, Scalar(1), dj)), Scalar(4) * ie, l14)));
      }
    }
}

void e7_table(Builder& b) {
  const Scalar I = b.I;
  const Rational h(1, 2);
  auto half = [&](int s6, int s3, int s5, int s4, int s2, int s1) {
    RootVec v(8);
    v[7] = h;
    v[6] = -h;
    v[5] = h * Rational(s6);
    v[2] = h * Rational(s3);
    v[4] = h * Rational(s5);
    v[3] = h * Rational(s4);
    v[1] = h * Rational(s2);
    v[0] = h * Rational(s1);
    return v;
  };
  // e_12 family: z_i with slot pairs (1,2), (3,4), (5,6), (7,8); z5 carries a minus sign.
  auto o = [&](int a, int c, int mu) { return b.off(a, c, mu); };
  struct Z {
    int idx, s1, s2, sign;
  };
  const Z zs[] = {{1, 1, 2, 1}, {2, 3, 4, 1}, {4, 5, 6, 1}, {5, 7, 8, -1}};
  std::map<int, Vec> z, zb;
  std::map<int, std::string> zn, zbn;
  const char* unit_name[] = {"", "", "i", "j", "k", "l", "il", "jl", "kl"};
  auto lbl = [&](int a, int c, int mu) {
    return "e" + idx(a) + idx(c) + (mu == 1 ? std::string() : std::string("^") + unit_name[mu]);
  };
  for (const auto& q : zs) {
    Scalar s = I * Scalar(q.sign);
    z[q.idx] = exactnum::scaled(b.lin(Scalar(1), o(1, 2, q.s1), s, o(1, 2, q.s2)), b.inv_sqrt2);
    zb[q.idx] = exactnum::scaled(b.lin(Scalar(1), o(1, 2, q.s1), -s, o(1, 2, q.s2)), b.inv_sqrt2);
    std::string p = q.sign > 0 ? "+" : "-", m = q.sign > 0 ? "-" : "+";
    zn[q.idx] = "z" + idx(q.idx);
    zbn[q.idx] = "zbar" + idx(q.idx);
  }
  Vec d1 = b.d(1), d2 = b.d(2);
  b.E(b.r2(6, 1, 3, 1), "E_{e6+e3} = E+_{e22}", b.Ep(d2));
  b.E(b.r2(6, 1, 3, -1), "E_{e6-e3} = E+_{e11}", b.Ep(d1));
  b.E(b.r2(6, -1, 3, -1), "E_{-e6-e3} = E-_{e22}", b.Em(d2));
  b.E(b.r2(6, -1, 3, 1), "E_{-e6+e3} = E-_{e11}", b.Em(d1));
  for (const auto& q : zs) {
    int i = q.idx;
    b.E(b.r2(6, 1, i, 1), "E_{e6+e" + idx(i) + "} = E+_{z" + idx(i) + "}", b.Ep(z[i]));
    b.E(b.r2(6, 1, i, -1), "E_{e6-e" + idx(i) + "} = E+_{zbar" + idx(i) + "}", b.Ep(zb[i]));
    b.E(b.r2(6, -1, i, -1), "E_{-e6-e" + idx(i) + "} = E-_{zbar" + idx(i) + "}", b.Em(zb[i]));
    b.E(b.r2(6, -1, i, 1), "E_{-e6+e" + idx(i) + "} = E-_{z" + idx(i) + "}", b.Em(z[i]));
  }
  for (const auto& qi : zs)
    for (const auto& qj : zs) {
      int i = qi.idx, j = qj.idx;
      if (i >= j) continue;
      std::string si = idx(i), sj = idx(j);
      b.E(b.r2(i, 1, j, 1), "E_{e" + si + "+e" + sj + "} = [L_{z" + si + "},L_{z" + sj + "}]", b.LL(z[i], z[j]));
      b.E(b.r2(i, -1, j, 1), "E_{-e" + si + "+e" + sj + "} = [L_{zbar" + si + "},L_{z" + sj + "}]", b.LL(zb[i], z[j]));
      b.E(b.r2(i, -1, j, -1), "E_{-e" + si + "-e" + sj + "} = [L_{zbar" + si + "},L_{zbar" + sj + "}]", b.LL(zb[i], zb[j]));
      b.E(b.r2(i, 1, j, -1), "E_{e" + si + "-e" + sj + "} = [L_{z" + si + "},L_{zbar" + sj + "}]", b.LL(z[i], zb[j]));
    }
  for (const auto& q : zs) {
    int i = q.idx;
    std::string si = idx(i);
    for (int s : {1, -1}) {
      std::string ps = s > 0 ? "+" : "-";
      b.E(b.r2(i, 1, 3, s), "E_{e" + si + ps + "e3} = (h_{z" + si + "} " + ps + " 4[L_{z" + si + "},L_{e11}])/2",
          b.sc(Scalar(Rational(1, 2)), b.plus(b.h(z[i]), Scalar(4 * s), b.LL(z[i], d1))));
      b.E(b.r2(i, -1, 3, s), "E_{-e" + si + ps + "e3} = (h_{zbar" + si + "} " + ps + " 4[L_{zbar" + si + "},L_{e11}])/2",
          b.sc(Scalar(Rational(1, 2)), b.plus(b.h(zb[i]), Scalar(4 * s), b.LL(zb[i], d1))));
    }
  }
  // Noncompact half-roots. beta family on e23 (coefficient of e3 is +), mu family on e13.
  struct HalfRow {
    std::string name;
    int a, c, mu1, mu2, sign;
    int s5, s4, s2, s1;
    bool shown;  // root coordinates displayed next to the formula
  };
  const HalfRow rows[] = {
      {"beta(-5)", 2, 3, 7, 8, 1, -1, 1, 1, 1, true},   {"beta(+5)", 2, 3, 7, 8, -1, 1, -1, -1, -1, true},
      {"beta(-4)", 2, 3, 5, 6, -1, 1, -1, 1, 1, true},  {"beta(+4)", 2, 3, 5, 6, 1, -1, 1, -1, -1, true},
      {"beta(-2)", 2, 3, 3, 4, -1, 1, 1, -1, 1, false}, {"beta(+2)", 2, 3, 3, 4, 1, -1, -1, 1, -1, false},
      {"beta(-1)", 2, 3, 1, 2, 1, 1, 1, 1, -1, false},  {"beta(+1)", 2, 3, 1, 2, -1, -1, -1, -1, 1, false},
      {"mu(4-)", 1, 3, 1, 2, -1, -1, -1, -1, -1, true}, {"mu(4+)", 1, 3, 1, 2, 1, 1, 1, 1, 1, true},
      {"mu(+1+2)", 1, 3, 3, 4, 1, -1, -1, 1, 1, true},  {"mu(-1-2)", 1, 3, 3, 4, -1, 1, 1, -1, -1, true},
      {"mu(+1+4)", 1, 3, 5, 6, 1, -1, 1, -1, 1, true},  {"mu(-1-4)", 1, 3, 5, 6, -1, 1, -1, 1, -1, true},
      {"mu(+2+4)", 1, 3, 7, 8, 1, -1, 1, 1, -1, true},  {"mu(-2-4)", 1, 3, 7, 8, -1, 1, -1, -1, 1, true},
  };
  for (const auto& r : rows) {
    int s3 = r.a == 2 ? 1 : -1;
    RootVec root = half(1, s3, r.s5, r.s4, r.s2, r.s1);
    Scalar s = I * Scalar(r.sign);
    Vec w = b.lin(Scalar(1), o(r.a, r.c, r.mu1), s, o(r.a, r.c, r.mu2));
    Vec wb = b.lin(Scalar(1), o(r.a, r.c, r.mu1), -s, o(r.a, r.c, r.mu2));
    std::string ws = "(" + lbl(r.a, r.c, r.mu1) + (r.sign > 0 ? "+" : "-") + "i" + lbl(r.a, r.c, r.mu2) + ")";
    std::string wbs = "(" + lbl(r.a, r.c, r.mu1) + (r.sign > 0 ? "-" : "+") + "i" + lbl(r.a, r.c, r.mu2) + ")";
    std::string note = r.shown ? "" : " [root inferred]";
    b.E(root, "E_{" + r.name + "} = E+_" + ws + "/sqrt2" + note, b.sc(b.inv_sqrt2, b.Ep(w)));
    b.E(neg(root), "E_{-" + r.name + "} = E-_" + wbs + "/sqrt2" + note, b.sc(b.inv_sqrt2, b.Em(wb)));
  }
}

// [H, E] = c E; returns c or nullopt when E is not an eigenvector.
std::optional<Scalar> eigenvalue(const lie::LieAlgebra& g, const SparseVec& H, const SparseVec& E) {
  if (E.empty()) return std::nullopt;
  SparseVec b = g.br(H, E);
  Scalar c;
  for (const auto& [k, v] : b)
    if (k == E[0].first) c = v / E[0].second;
  if (b != exactnum::scaled(E, c)) return std::nullopt;
  return c;
}

bool is_e7(Kind k) { return k == Kind::HermO3; }

}  // namespace

std::optional<std::size_t> CartanBasis::root_index(const RootVec& r) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), r, [](const Root& a, const RootVec& v) { return a.v < v; });
  if (it == roots.end() || it->v != r) return std::nullopt;
  return static_cast<std::size_t>(it - roots.begin());
}

SparseVec CartanBasis::adapt(const SparseVec& x) const {
  Vec acc(g.dim());
  for (const auto& [k, c] : x) exactnum::axpy(acc, c, to_adapted[k]);
  return to_sparse(acc);
}

RootVec CartanBasis::cartan_form(std::size_t i) const {
  if (part.at(i) != Part::Cartan) throw std::invalid_argument("not a Cartan element");
  const RootVec& beta = roots[cartan_roots[adapted_root[i]]].v;
  RootVec f = beta;
  Rational s = Rational(2) / dot(beta, beta);
  for (auto& x : f) x *= s;
  return f;
}

CartanBasis cartan_basis(Kind kind, int n, const CartanOptions& opt) {
  return cartan_basis(std::make_shared<const tkk::Tkk>(tkk::build_tkk(kind, n)), opt);
}

CartanBasis cartan_basis(std::shared_ptr<const tkk::Tkk> Tp, const CartanOptions& opt) {
  const tkk::Tkk& T = *Tp;
  const Kind kind = T.J->kind;
  const int n = T.J->n;
  if (kind == Kind::SpinFactor) throw std::invalid_argument("spin factors use the so(2,m+1) model (phi_iso)");

  CartanBasis C;
  C.T = Tp;
  C.algebra = algebra_name(kind, n);
  C.coords = coordinate_count(kind, n);
  C.roots = root_system(kind, n);
  Report& rep = C.report;
  const std::string pre = "cartan." + C.algebra + ".";

  Builder b{T, C.coords, {}};
  switch (kind) {
    case Kind::HermR: sp_table(b, n); break;
    case Kind::HermC: su_table(b, n, opt.literal_su_eta); break;
    case Kind::HermH: sostar_table(b, n); break;
    case Kind::HermO3: e7_table(b); break;
    default: break;
  }
  C.displayed = b.out;

  // Root labels of displayed elements must be roots.
  for (const auto& d : C.displayed)
    if (!C.root_index(d.root)) rep.add(pre + "label", false, d.formula + ": " + root_str(d.root) + " is not a root");

  std::vector<const Displayed*> Es, Hs;
  for (const auto& d : C.displayed) (d.is_cartan ? Hs : Es).push_back(&d);

  // e7 lists no H formulas: H_alpha = +-[E_alpha, E_-alpha] (sign + for compact roots).
  std::vector<Displayed> e7H;
  if (is_e7(kind)) {
    for (const auto* e : Es) {
      auto ri = C.root_index(e->root);
      if (!ri || !C.roots[*ri].positive) continue;
      for (const auto* f : Es)
        if (f->root == neg(e->root)) {
          bool compact = C.roots[*ri].compact;
          SparseVec x = T.g.br(e->element, f->element);
          if (!compact) x = exactnum::scaled(x, Scalar(-1));
          e7H.push_back({true, e->root, std::string("H_{") + root_str(e->root) + "} = " + (compact ? "" : "-") + "[E_{" +
                                            root_str(e->root) + "},E_{-(" + root_str(e->root) + ")}]",
                         x, true});
          break;
        }
    }
    for (const auto& h : e7H) Hs.push_back(&h);
  }

  // Cartan subalgebra spanned by the H's.
  LinearSpan hspan(T.g.dim());
  std::vector<SparseVec> cbasis;
  for (const auto* h : Hs)
    if (hspan.add(h->element)) cbasis.push_back(h->element);
  C.rank = cbasis.size();
  {
    std::string bad;
    for (std::size_t a = 0; a < cbasis.size() && bad.empty(); ++a)
      for (std::size_t c = a + 1; c < cbasis.size() && bad.empty(); ++c)
        if (!T.g.br(cbasis[a], cbasis[c]).empty()) bad = "basis elements " + std::to_string(a) + "," + std::to_string(c);
    rep.add(pre + "cartan_abelian", bad.empty(), bad, {{"rank", C.rank}});
  }
  const std::size_t want_rank = kind == Kind::HermR ? n : kind == Kind::HermC ? 2 * n - 1 : kind == Kind::HermH ? 2 * n : 7;
  rep.add(pre + "cartan_rank", C.rank == want_rank,
          C.rank == want_rank ? "" : "rank " + std::to_string(C.rank) + ", expected " + std::to_string(want_rank));

  // Joint eigenvalues of each displayed E on the Cartan basis.
  std::vector<std::optional<std::vector<Scalar>>> ev(Es.size());
  for (std::size_t k = 0; k < Es.size(); ++k) {
    std::vector<Scalar> vals;
    bool ok = true;
    for (const auto& H : cbasis) {
      auto c = eigenvalue(T.g, H, Es[k]->element);
      if (!c) {
        ok = false;
        break;
      }
      vals.push_back(*c);
    }
    if (ok) ev[k] = vals;
  }

  // Basis roots among eigenvector E's; solve for every coroot in the Cartan basis.
  std::vector<std::size_t> basis_e;
  {
    LinearSpan rspan(C.coords);
    for (std::size_t k = 0; k < Es.size() && basis_e.size() < C.rank; ++k) {
      if (!ev[k]) continue;
      SparseVec rv;
      for (std::size_t i = 0; i < C.coords; ++i)
        if (!Es[k]->root[i].is_zero()) rv.push_back({static_cast<std::uint32_t>(i), Scalar(Es[k]->root[i])});
      if (rspan.add(rv)) basis_e.push_back(k);
    }
  }
  if (basis_e.size() != C.rank) {
    rep.add(pre + "root_basis", false, "displayed root vectors do not span the dual of the Cartan subalgebra");
    return C;
  }
  Matrix M(C.rank, C.rank);
  for (std::size_t i = 0; i < C.rank; ++i)
    for (std::size_t k = 0; k < C.rank; ++k) M(i, k) = (*ev[basis_e[i]])[k];
  auto Minv = exactnum::inverse(M);
  if (!Minv) {
    rep.add(pre + "root_basis", false, "eigenvalue matrix is singular");
    return C;
  }
  auto coroot = [&](const RootVec& beta) {
    Vec t(C.rank);
    Rational nb = dot(beta, beta);
    for (std::size_t i = 0; i < C.rank; ++i) t[i] = Scalar(Rational(2) * dot(Es[basis_e[i]]->root, beta) / nb);
    Vec x = Minv->apply(t);
    SparseVec H;
    for (std::size_t k = 0; k < C.rank; ++k) H = sparse_add(H, x[k], cbasis[k]);
    return H;
  };
  C.H.resize(C.roots.size());
  for (std::size_t r = 0; r < C.roots.size(); ++r) C.H[r] = coroot(C.roots[r].v);

  // Every displayed E must carry the eigenvalues its root label predicts.
  auto check_root_vector = [&](const SparseVec& E, const RootVec& alpha) -> std::string {
    for (std::size_t r = 0; r < C.roots.size(); ++r) {
      if (!C.roots[r].positive) continue;
      auto c = eigenvalue(T.g, C.H[r], E);
      if (!c) return "not an eigenvector of H_{" + root_str(C.roots[r].v) + "}";
      Scalar want(eval_weight(alpha, C.roots[r].v));
      if (!(*c == want))
        return "[H_{" + root_str(C.roots[r].v) + "}, E] = (" + c->str() + ") E, expected " + want.str();
    }
    return {};
  };
  std::size_t e_ok = 0, e_total = 0;
  for (std::size_t k = 0; k < Es.size(); ++k) {
    ++e_total;
    std::string bad = ev[k] ? check_root_vector(Es[k]->element, Es[k]->root) : "not a joint eigenvector of the Cartan subalgebra";
    if (bad.empty()) ++e_ok;
    rep.add(pre + "E[" + root_str(Es[k]->root) + "]", bad.empty(), bad.empty() ? "" : Es[k]->formula + ": " + bad,
            {{"formula", Es[k]->formula}});
  }
  // Displayed H formulas must equal the coroots.
  for (const auto* h : Hs) {
    auto r = C.root_index(h->root);
    if (h->from_rule && r) {
      const SparseVec& want = C.H[*r];
      Scalar f = h->element.empty() || want.empty() ? Scalar() : [&] {
        for (const auto& [k, v] : want)
          if (k == h->element[0].first) return h->element[0].second / v;
        return Scalar();
      }();
      bool ok = !f.is_zero() && h->element == exactnum::scaled(want, f);
      rep.add(pre + "H[" + root_str(h->root) + "]", ok, ok ? "" : h->formula + ": not proportional to the coroot",
              {{"formula", h->formula}, {"factor", f.str()}});
      continue;
    }
    bool ok = r && h->element == C.H[*r];
    std::string detail;
    if (!ok && r) {
      std::string witness;
      for (std::size_t k = 0; k < Es.size() && witness.empty(); ++k) {
        auto c = eigenvalue(T.g, h->element, Es[k]->element);
        Scalar want(eval_weight(Es[k]->root, h->root));
        if (!c) witness = "E_{" + root_str(Es[k]->root) + "} is not an eigenvector";
        else if (!(*c == want))
          witness = "[H, E_{" + root_str(Es[k]->root) + "}] = (" + c->str() + ") E, expected " + want.str();
      }
      detail = h->formula + ": " + (witness.empty() ? "differs from the coroot" : witness);
    }
    rep.add(pre + "H[" + root_str(h->root) + "]", ok, detail, {{"formula", h->formula}});
  }

  // Root vectors: first passing displayed element per root; the rest by brackets.
  C.E.assign(C.roots.size(), {});
  C.E_origin.assign(C.roots.size(), {});
  C.E_displayed.assign(C.roots.size(), false);
  for (std::size_t k = 0; k < Es.size(); ++k) {
    auto r = C.root_index(Es[k]->root);
    if (!r || !C.E[*r].empty() || !ev[k] || !check_root_vector(Es[k]->element, Es[k]->root).empty()) continue;
    C.E[*r] = Es[k]->element;
    C.E_origin[*r] = Es[k]->formula;
    C.E_displayed[*r] = true;
  }
  std::size_t derived = 0;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t g = 0; g < C.roots.size(); ++g) {
      if (!C.E[g].empty()) continue;
      for (std::size_t a = 0; a < C.roots.size(); ++a) {
        if (C.E[a].empty()) continue;
        auto bi = C.root_index(add(C.roots[g].v, neg(C.roots[a].v)));
        if (!bi || C.E[*bi].empty()) continue;
        SparseVec x = T.g.br(C.E[a], C.E[*bi]);
        if (x.empty()) continue;
        C.E[g] = x;
        C.E_origin[g] = "[E_{" + root_str(C.roots[a].v) + "},E_{" + root_str(C.roots[*bi].v) + "}]";
        ++derived;
        progress = true;
        break;
      }
    }
  }
  {
    std::string bad;
    for (std::size_t r = 0; r < C.roots.size() && bad.empty(); ++r) {
      if (C.E[r].empty()) bad = "no root vector for " + root_str(C.roots[r].v);
      else if (!C.E_displayed[r]) {
        std::string w = check_root_vector(C.E[r], C.roots[r].v);
        if (!w.empty()) bad = C.E_origin[r] + ": " + w;
      }
    }
    rep.add(pre + "root_vectors_complete", bad.empty(), bad, {{"derived", derived}, {"displayed_roots", C.roots.size() - derived}});
  }
  if (!rep.ok() && std::any_of(C.E.begin(), C.E.end(), [](const SparseVec& v) { return v.empty(); })) return C;

  // [E_alpha, E_-alpha] = c_alpha H_alpha
  C.bracket_constant.assign(C.roots.size(), Scalar());
  {
    std::string bad;
    for (std::size_t r = 0; r < C.roots.size(); ++r) {
      auto m = C.root_index(neg(C.roots[r].v));
      SparseVec x = T.g.br(C.E[r], C.E[*m]);
      const SparseVec& H = C.H[r];
      Scalar c = x.empty() ? Scalar() : x[0].second / [&] {
        for (const auto& [k, v] : H)
          if (k == x[0].first) return v;
        return Scalar(1);
      }();
      if (x.empty() || exactnum::scaled(H, c) != x) {
        if (bad.empty()) bad = "[E_{" + root_str(C.roots[r].v) + "},E_{-}] is not a multiple of H";
      }
      C.bracket_constant[r] = c;
    }
    rep.add(pre + "bracket_proportional", bad.empty(), bad);
  }

  // Adapted basis.
  {
    LinearSpan rspan(C.coords);
    std::vector<const Displayed*> order = Hs;
    for (const auto* h : order) {
      auto r = C.root_index(h->root);
      if (!r) continue;
      std::size_t pr = C.roots[*r].positive ? *r : *C.root_index(neg(h->root));
      SparseVec rv;
      for (std::size_t i = 0; i < C.coords; ++i)
        if (!C.roots[pr].v[i].is_zero()) rv.push_back({static_cast<std::uint32_t>(i), Scalar(C.roots[pr].v[i])});
      if (rspan.add(rv)) C.cartan_roots.push_back(pr);
    }
  }
  std::vector<SparseVec> cols;
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < C.roots.size(); ++r)
    if (!C.roots[r].positive) {
      cols.push_back(C.E[r]);
      labels.push_back("E[" + root_str(C.roots[r].v) + "]");
      C.part.push_back(CartanBasis::Part::Negative);
      C.adapted_root.push_back(r);
    }
  for (std::size_t k = 0; k < C.cartan_roots.size(); ++k) {
    cols.push_back(C.H[C.cartan_roots[k]]);
    labels.push_back("H[" + root_str(C.roots[C.cartan_roots[k]].v) + "]");
    C.part.push_back(CartanBasis::Part::Cartan);
    C.adapted_root.push_back(k);
  }
  for (std::size_t r = 0; r < C.roots.size(); ++r)
    if (C.roots[r].positive) {
      cols.push_back(C.E[r]);
      labels.push_back("E[" + root_str(C.roots[r].v) + "]");
      C.part.push_back(CartanBasis::Part::Positive);
      C.adapted_root.push_back(r);
    }
  const std::size_t N = T.g.dim();
  if (cols.size() != N) {
    rep.add(pre + "adapted_basis", false, "basis has " + std::to_string(cols.size()) + " elements, algebra " + std::to_string(N));
    return C;
  }
  Matrix B(N, N);
  for (std::size_t c = 0; c < N; ++c)
    for (const auto& [r, v] : cols[c]) B(r, c) = v;
  auto Binv = exactnum::inverse(B);
  rep.add(pre + "adapted_basis", Binv.has_value(), Binv ? "" : "root vectors and coroots are linearly dependent");
  if (!Binv) return C;
  C.to_adapted.resize(N);
  for (std::size_t k = 0; k < N; ++k) C.to_adapted[k] = to_sparse(Binv->column(k));
  C.g = lie::empty_algebra(C.algebra, labels);
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = p + 1; q < N; ++q) {
      SparseVec x = C.adapt(T.g.br(cols[p], cols[q]));
      C.g.bracket[p][q] = x;
      C.g.bracket[q][p] = exactnum::scaled(x, Scalar(-1));
    }
  rep.add(pre + "summary", true, {},
          {{"displayed_E_passing", e_ok}, {"displayed_E", e_total}, {"rank", C.rank}, {"roots", C.roots.size()}});
  return C;
}

nlohmann::json bracket_constants_json(const CartanBasis& C) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t r = 0; r < C.bracket_constant.size(); ++r) j[root_str(C.roots[r].v)] = C.bracket_constant[r].str();
  return j;
}

}  // namespace tkklab::cartan
