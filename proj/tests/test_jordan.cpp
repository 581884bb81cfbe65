#include <gtest/gtest.h>

#include "tkklab/jordan.hpp"

using namespace tkklab;
using namespace tkklab::jordan;
using exactnum::Rational;

namespace {

Scalar q(std::int64_t p, std::int64_t d = 1) { return Scalar(Rational(p, d)); }

Vec elem(const JordanAlgebra& J, const std::string& label) { return J.basis(*J.index_of(label)); }

}  // namespace

TEST(Jordan, DimensionsRankDegree) {
  struct Row {
    Kind kind;
    int n, D, rho, d;
  };
  const Row rows[] = {
      {Kind::SpinFactor, 3, 4, 2, 2}, {Kind::SpinFactor, 4, 5, 2, 3}, {Kind::HermR, 3, 6, 3, 1},
      {Kind::HermR, 4, 10, 4, 1},     {Kind::HermC, 3, 9, 3, 2},      {Kind::HermC, 4, 16, 4, 2},
      {Kind::HermH, 2, 6, 2, 4},      {Kind::HermH, 3, 15, 3, 4},     {Kind::HermO3, 3, 27, 3, 8},
  };
  for (const auto& r : rows) {
    auto J = build_jordan(r.kind, r.n);
    auto rd = rank_degree(J);
    EXPECT_EQ(J.D, r.D) << kind_name(r.kind) << r.n;
    EXPECT_EQ(rd.rho, r.rho) << kind_name(r.kind) << r.n;
    EXPECT_EQ(rd.d, r.d) << kind_name(r.kind) << r.n;
    EXPECT_EQ(J.D, rd.rho + rd.d * rd.rho * (rd.rho - 1) / 2);
  }
  EXPECT_THROW(build_jordan(Kind::HermO3, 2), std::invalid_argument);
  EXPECT_THROW(build_jordan(Kind::SpinFactor, 1), std::invalid_argument);
}

TEST(Jordan, ProductExamples) {
  auto G = build_jordan(Kind::SpinFactor, 3);
  auto F = jordan_frame(G);
  EXPECT_TRUE(exactnum::is_zero(jmul(G, F.diag[0], F.diag[1])));
  auto R = build_jordan(Kind::HermR, 3);
  Vec e12 = elem(R, "e12^1");
  Vec want = exactnum::scaled(exactnum::add(elem(R, "e11"), elem(R, "e22")), q(1, 2));
  EXPECT_EQ(jmul(R, e12, e12), want);
  for (std::size_t a = 0; a < R.dim(); ++a) EXPECT_EQ(jmul(R, R.unit, R.basis(a)), R.basis(a));
  // e12 e23 = e13 / (2 sqrt 2)
  Vec p = jmul(R, e12, elem(R, "e23^1"));
  EXPECT_EQ(p, exactnum::scaled(elem(R, "e13^1"), Scalar::sqrt(2) * q(1, 4)));
}

TEST(Jordan, OperatorsAndTraces) {
  auto G = build_jordan(Kind::SpinFactor, 2);
  EXPECT_EQ(lmul_op(G, G.unit), exactnum::Matrix::identity(G.dim()));
  EXPECT_EQ(quad_rep(G, G.unit), exactnum::Matrix::identity(G.dim()));
  auto F = jordan_frame(G);
  // L_{e11} on e11, e22, e12: eigenvalues 1, 0, 1/2
  auto L = lmul_op(G, F.diag[0]);
  EXPECT_EQ(L.apply(F.diag[0]), F.diag[0]);
  EXPECT_TRUE(exactnum::is_zero(L.apply(F.diag[1])));
  Vec e12 = F.off.at({1, 2, 1});
  EXPECT_EQ(L.apply(e12), exactnum::scaled(e12, q(1, 2)));

  auto C4 = build_jordan(Kind::HermC, 4);
  EXPECT_EQ(trace_of(C4, C4.unit), q(4));
  auto G3 = build_jordan(Kind::SpinFactor, 3);
  EXPECT_EQ(tau(G3, G3.unit, G3.unit), q(4));
  EXPECT_EQ(lmul_op(G3, G3.unit).trace(), q(4));
}

TEST(Jordan, InnerProductIdentities) {
  for (auto [kind, n] : {std::pair{Kind::SpinFactor, 3}, {Kind::HermR, 3}, {Kind::HermC, 3}, {Kind::HermH, 3}}) {
    auto J = build_jordan(kind, n);
    auto rd = rank_degree(J);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
      Vec u = random_element(J, rng), v = random_element(J, rng);
      EXPECT_EQ(inner(J, u, v), trace_of(J, jmul(J, u, v)) * q(1, rd.rho));
      EXPECT_EQ(trace_of(J, u), lmul_op(J, u).trace() * q(rd.rho, J.D));
    }
    auto F = jordan_frame(J);
    EXPECT_EQ(inner(J, F.diag[0], F.diag[0]), q(1, rd.rho));
  }
}

TEST(Jordan, FrameProperties) {
  for (auto [kind, n] : {std::pair{Kind::SpinFactor, 2}, {Kind::SpinFactor, 5}, {Kind::HermR, 3}, {Kind::HermC, 3},
                         {Kind::HermH, 3}, {Kind::HermO3, 3}}) {
    auto J = build_jordan(kind, n);
    auto rep = verify_frame(J, jordan_frame(J));
    for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << kind_name(kind) << n << " " << c.name << " " << c.detail;
  }
  auto G = build_jordan(Kind::SpinFactor, 4);
  auto F = jordan_frame(G);
  EXPECT_EQ(F.diag[0], (Vec{q(1, 2), q(1, 2), q(0), q(0), q(0)}));
  EXPECT_EQ(F.diag[1], (Vec{q(1, 2), q(-1, 2), q(0), q(0), q(0)}));
}

TEST(Jordan, AxiomsHold) {
  for (auto [kind, n] : {std::pair{Kind::SpinFactor, 4}, {Kind::HermR, 3}, {Kind::HermC, 3}, {Kind::HermH, 3}, {Kind::HermO3, 3}}) {
    auto J = build_jordan(kind, n);
    auto rep = verify_jordan_axioms(J, 10, 1);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << kind_name(kind) << " " << c.name << " " << c.detail;
  }
}

TEST(Jordan, CorruptedTensorIsCaught) {
  auto J = build_jordan(Kind::HermR, 3);
  auto& cell = J.product[3][4];
  ASSERT_FALSE(cell.empty());
  cell[0].second = -cell[0].second;
  J.product[4][3] = cell;
  auto rep = verify_jordan_axioms(J, 5, 1);
  EXPECT_FALSE(rep.ok());
}
