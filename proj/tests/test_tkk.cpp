#include <gtest/gtest.h>

#include <chrono>

#include "tkklab/tkk.hpp"

using namespace tkklab;
using namespace tkklab::tkk;
using exactnum::Rational;
using jordan::Kind;

namespace {

void expect_report_ok(const Report& rep, const std::string& ctx) {
  for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << ctx << " " << c.name << ": " << c.detail;
}

}  // namespace

TEST(Tkk, DimensionsMatchTable) {
  struct Row {
    Kind kind;
    int n;
    std::size_t str, co;
  };
  const Row rows[] = {{Kind::SpinFactor, 2, 4, 10}, {Kind::SpinFactor, 3, 7, 15}, {Kind::HermR, 3, 9, 21},
                      {Kind::HermC, 3, 17, 35},      {Kind::HermH, 3, 36, 66}};
  for (const auto& r : rows) {
    auto T = build_tkk(r.kind, r.n);
    EXPECT_EQ(T.str.dim(), r.str) << jordan::kind_name(r.kind) << r.n;
    EXPECT_EQ(T.g.dim(), r.co) << jordan::kind_name(r.kind) << r.n;
  }
}

TEST(Tkk, SOperatorUnitRules) {
  auto J = jordan::build_jordan(Kind::HermR, 3);
  Vec u = J.basis(4);
  EXPECT_EQ(s_op(J, u, J.unit), jordan::lmul_op(J, u));
  EXPECT_EQ(s_op(J, J.unit, J.unit), exactnum::Matrix::identity(J.dim()));
}

TEST(Tkk, FullVerificationSmallAlgebras) {
  for (auto [kind, n] : {std::pair{Kind::SpinFactor, 2}, {Kind::SpinFactor, 3}, {Kind::HermR, 3}, {Kind::HermC, 2}}) {
    auto T = build_tkk(kind, n);
    expect_report_ok(verify_tkk(T, 5, 3), jordan::kind_name(kind) + std::to_string(n));
  }
}

TEST(Tkk, JacobiTripleCount) {
  auto T = build_tkk(Kind::SpinFactor, 2);
  auto rep = lie::verify_jacobi(T.g);
  ASSERT_TRUE(rep.ok());
  EXPECT_EQ(rep.checks[0].data["triples"], 120);
}

TEST(Tkk, SignFlippedTensorFailsJacobi) {
  auto T = build_tkk(Kind::HermR, 2);
  auto g = T.g;
  auto& cell = g.bracket[T.x_index(0)][T.y_index(0)];
  for (auto& t : cell) t.second = -t.second;
  for (auto& t : g.bracket[T.y_index(0)][T.x_index(0)]) t.second = -t.second;
  EXPECT_TRUE(lie::verify_antisymmetry(g).ok());
  EXPECT_FALSE(lie::verify_jacobi(g).ok());
}

TEST(Tkk, EhBracketExamples) {
  auto T = build_tkk(Kind::HermC, 3);
  Vec e = T.J->unit;
  auto p = epm_h(T, e);
  EXPECT_EQ(T.g.br(p.E_plus, p.E_minus), exactnum::scaled(p.h, Scalar(-1)));
}

TEST(Tkk, JsonRoundTrip) {
  auto T = build_tkk(Kind::HermR, 2);
  auto j = lie::to_json(T.g);
  auto g = lie::from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(g.labels, T.g.labels);
  EXPECT_EQ(g.bracket, T.g.bracket);
}
