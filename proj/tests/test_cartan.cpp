#include <gtest/gtest.h>

#include <fstream>

#include "tkklab/cartan.hpp"

using namespace tkklab;
using namespace tkklab::cartan;
using exactnum::Rational;
using jordan::Kind;

namespace {

void expect_report_ok(const Report& rep, const std::string& ctx) {
  for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << ctx << " " << c.name << ": " << c.detail;
}

RootVec rv(std::initializer_list<int> xs) {
  RootVec v;
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

std::size_t count_if(const std::vector<Root>& rs, bool positive, bool compact) {
  std::size_t k = 0;
  for (const auto& r : rs) k += r.positive == positive && r.compact == compact;
  return k;
}

}  // namespace

TEST(Roots, Sp3) {
  auto rs = root_system(Kind::HermR, 3);
  EXPECT_EQ(rs.size(), 18u);
  std::size_t long_roots = 0;
  for (const auto& r : rs)
    if (dot(r.v, r.v) == Rational(4)) {
      ++long_roots;
      EXPECT_FALSE(r.compact);
    }
  EXPECT_EQ(long_roots, 6u);
}

TEST(Roots, Su22NoncompactPositives) {
  std::vector<RootVec> got;
  for (const auto& r : root_system(Kind::HermC, 2))
    if (r.positive && !r.compact) got.push_back(r.v);
  std::vector<RootVec> want = {rv({1, 0, -1, 0}), rv({1, 0, 0, -1}), rv({0, 1, -1, 0}), rv({0, 1, 0, -1})};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(Roots, E7Counts) {
  auto rs = root_system(Kind::HermO3, 3);
  EXPECT_EQ(rs.size(), 126u);
  EXPECT_EQ(count_if(rs, true, false) + count_if(rs, false, false), 54u);
}

TEST(Roots, NoncompactPositivesMatchJordanDimension) {
  const std::pair<Kind, int> cases[] = {{Kind::HermR, 3}, {Kind::HermR, 4}, {Kind::HermC, 2}, {Kind::HermC, 3},
                                        {Kind::HermH, 2}, {Kind::HermH, 3}, {Kind::HermO3, 3}};
  for (auto [k, n] : cases) {
    auto J = jordan::build_jordan(k, n);
    EXPECT_EQ(count_if(root_system(k, n), true, false), J.dim()) << algebra_name(k, n);
  }
}

TEST(Roots, EvalWeight) {
  EXPECT_EQ(eval_weight(RootVec(3, Rational(-1, 2)), rv({2, 0, 0})), Rational(-1, 2));
  EXPECT_EQ(eval_weight(RootVec(4), rv({1, -1, 0, 0})), Rational(0));
  RootVec lam = {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(-4), Rational(2), Rational(-2)};
  EXPECT_EQ(eval_weight(lam, rv({0, 0, 0, 0, 0, 0, -1, 1})), Rational(-4));
  EXPECT_THROW(eval_weight(RootVec(3), rv({1, 1})), std::invalid_argument);
}

TEST(CartanBasis, ClassicalCasesVerify) {
  const std::pair<Kind, int> cases[] = {{Kind::HermR, 3}, {Kind::HermC, 2}, {Kind::HermC, 3}, {Kind::HermH, 2}, {Kind::HermH, 3}};
  for (auto [k, n] : cases) {
    auto C = cartan_basis(k, n);
    expect_report_ok(C.report, C.algebra);
    EXPECT_EQ(C.g.dim(), C.T->g.dim());
    // Coroots act on every root vector by the Cartan integers.
    for (std::size_t a = 0; a < C.roots.size(); ++a)
      for (std::size_t b = 0; b < C.roots.size(); b += 3) {
        Scalar want(eval_weight(C.roots[b].v, C.roots[a].v));
        EXPECT_EQ(C.T->g.br(C.H[a], C.E[b]), exactnum::scaled(C.E[b], want));
      }
  }
}

TEST(CartanBasis, SpExampleBracket) {
  auto C = cartan_basis(Kind::HermR, 3);
  auto r = C.root_index(rv({2, 0, 0}));
  ASSERT_TRUE(r);
  EXPECT_EQ(C.T->g.br(C.H[*r], C.E[*r]), exactnum::scaled(C.E[*r], Scalar(2)));
  // H_{2e_1} is the displayed h_{e11}
  EXPECT_EQ(C.H[*r], C.T->h(C.T->jelem("e11")));
}

TEST(CartanBasis, SuLiteralReadingFails) {
  CartanOptions opt;
  opt.literal_su_eta = true;
  auto C = cartan_basis(Kind::HermC, 2, opt);
  EXPECT_FALSE(C.report.ok());
  const Check* f = C.report.first_failure();
  ASSERT_NE(f, nullptr);
  EXPECT_NE(f->detail.find("E_{e2-e4}"), std::string::npos) << f->detail;
}

TEST(CartanBasis, E7Verifies) {
  auto C = cartan_basis(Kind::HermO3, 3);
  expect_report_ok(C.report, C.algebra);
  EXPECT_EQ(C.rank, 7u);
}

TEST(CartanBasis, BracketConstantsMatchGolden) {
  std::ifstream in(std::string(TKKLAB_GOLDEN_DIR) + "/bracket_constants.json");
  ASSERT_TRUE(in.good());
  auto golden = nlohmann::json::parse(in);
  const std::pair<Kind, int> cases[] = {{Kind::HermR, 3}, {Kind::HermC, 2}, {Kind::HermC, 3},
                                        {Kind::HermH, 2}, {Kind::HermH, 3}, {Kind::HermO3, 3}};
  for (auto [k, n] : cases) {
    auto C = cartan_basis(k, n);
    EXPECT_EQ(bracket_constants_json(C), golden.at(C.algebra)) << C.algebra;
  }
}

TEST(Phi, IsomorphismForSmallM) {
  for (int m = 2; m <= 5; ++m) {
    auto P = phi_iso(m);
    expect_report_ok(P.report, "m=" + std::to_string(m));
    EXPECT_EQ(P.report.checks.size(), 11u);
  }
}

TEST(Phi, So2mBracketSample) {
  auto so = so2m_algebra(3);
  // [M_{-1,1}, M_{1,2}] = -i(eta_11 M_{-1,2}) = i M_{-1,2}
  EXPECT_EQ(so.g.br(so.M(-1, 1), so.M(1, 2)), exactnum::scaled(so.M(-1, 2), Scalar::i()));
  EXPECT_EQ(so.g.br(so.M(-1, 0), so.M(1, 2)), exactnum::SparseVec{});
}

TEST(Phi, CorruptedColumnIsCaught) {
  auto P = phi_iso(3);
  P.phi(0, P.T->x_index(1)) += Scalar(1);
  std::string bad;
  for (std::size_t a = 0; a < P.T->g.dim() && bad.empty(); ++a)
    for (std::size_t b = 0; b < P.T->g.dim() && bad.empty(); ++b) {
      auto ea = P.apply({{static_cast<std::uint32_t>(a), Scalar(1)}});
      auto eb = P.apply({{static_cast<std::uint32_t>(b), Scalar(1)}});
      if (P.apply(P.T->g.bracket[a][b]) != P.so.g.br(ea, eb)) bad = "x";
    }
  EXPECT_FALSE(bad.empty());
}
