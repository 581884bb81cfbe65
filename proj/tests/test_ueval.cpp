#include <gtest/gtest.h>

#include "tkklab/ueval.hpp"

using namespace tkklab;
using namespace tkklab::ueval;
using exactnum::Rational;
using jordan::Kind;

namespace {

void expect_report_ok(const Report& rep, const std::string& ctx) {
  for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << ctx << " " << c.name << ": " << c.detail;
}

std::shared_ptr<const tkk::Tkk> tkk_of(Kind k, int n) { return std::make_shared<const tkk::Tkk>(tkk::build_tkk(k, n)); }

std::shared_ptr<const cartan::CartanBasis> cartan_of(Kind k, int n) {
  return std::make_shared<const cartan::CartanBasis>(cartan::cartan_basis(k, n));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST(Pbw, RandomRewriteOrderIsConfluent) {
  TkkGenerators G(tkk_of(Kind::HermR, 3));
  const Enveloping& U = *G.U;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint16_t> letter(0, static_cast<std::uint16_t>(U.dim() - 1));
  std::uniform_int_distribution<int> len(0, 4);
  for (int s = 0; s < 100; ++s) {
    std::vector<std::uint16_t> w(len(rng));
    for (auto& x : w) x = letter(rng);
    PBW a = U.normal_form(w);
    PBW b = U.normal_form_random(w, rng);
    EXPECT_EQ(a, b) << "sample " << s;
    EXPECT_LE(a.degree(), static_cast<int>(w.size()));
    // idempotent
    PBW again;
    for (const auto& [m, c] : a.terms) again += U.normal_form(m) * c;
    EXPECT_EQ(again, a);
  }
}

TEST(Pbw, CommutatorOfGeneratorsIsTheBracket) {
  TkkGenerators G(tkk_of(Kind::HermR, 3));
  const Enveloping& U = *G.U;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, U.dim() - 1);
  for (int s = 0; s < 100; ++s) {
    std::size_t x = pick(rng), y = pick(rng);
    EXPECT_EQ(U.commutator(U.gen(x), U.gen(y)), U.lie(U.g().bracket[x][y]));
  }
}

TEST(Pbw, XeYeReorders) {
  TkkGenerators G(tkk_of(Kind::HermR, 3));
  const Enveloping& U = *G.U;
  const Vec e = G.e();
  // X_e Y_e = Y_e X_e - 2 S_ee, and S_ee = L_e
  EXPECT_EQ(U.mul(G.X(e), G.Y(e)), U.mul(G.Y(e), G.X(e)) - G.L(e) * Scalar(2));
  PBW p = U.mul(G.X(e), G.L(e)) + U.constant(Scalar(3));
  EXPECT_TRUE(U.commutator(p, p).is_zero());
  // an ordered monomial is left alone
  EXPECT_EQ(U.normal_form({1, 2, 2, 5}).terms.size(), 1u);
}

TEST(Pbw, Q2TermCountHermR3) {
  TkkGenerators G(tkk_of(Kind::HermR, 3));
  auto q = q_elements(G, Scalar());
  // X's commute; the diagonal squares cancel against rho X_e^2, leaving three
  // off-diagonal squares and three cross terms X_ii X_jj.
  EXPECT_EQ(q.Q2.terms.size(), 6u);
  EXPECT_EQ(q.Q2.degree(), 2);
  EXPECT_THROW(q.Q3.value(), std::bad_optional_access);
}

TEST(QElements, Q1Relations) {
  const std::pair<Kind, int> cases[] = {{Kind::HermR, 3}, {Kind::HermC, 2}, {Kind::HermH, 2}, {Kind::SpinFactor, 3}};
  for (auto [k, n] : cases) {
    TkkGenerators G(tkk_of(k, n));
    auto rep = verify_q1_relations(G);
    EXPECT_EQ(rep.checks.size(), 3u);
    expect_report_ok(rep, jordan::kind_name(k) + std::to_string(n));
  }
}

TEST(QElements, Q1IsSo2mCasimirUnderPhi) {
  for (int m = 2; m <= 5; ++m) {
    auto P = cartan::phi_iso(m);
    TkkGenerators G(P.T);
    Enveloping V(std::make_shared<lie::LieAlgebra>(P.so.g));
    const Scalar a(Rational(5, 7));
    auto q = q_elements(G, a);
    PBW img = V.map(q.Q1, *G.U, [&](std::size_t i) { return P.apply({{static_cast<std::uint32_t>(i), Scalar(1)}}); });
    PBW cas;
    for (int l = -1; l <= m + 1; ++l)
      if (l != 0) cas += V.anticommutator(V.lie(P.so.M(0, l)), V.lie(P.so.M(l, 0))) * Scalar(P.so.eta(l));
    // phi(Q1) = -1/2 sum_l {M_0l, M^l_0} + a
    EXPECT_EQ(img, cas * Scalar(Rational(-1, 2)) + V.constant(a)) << "m=" << m;
  }
}

TEST(NestedBrackets, HermR3AndHermC2) {
  for (auto [k, n] : {std::pair{Kind::HermR, 3}, std::pair{Kind::HermC, 2}}) {
    TkkGenerators G(tkk_of(k, n));
    auto rep = verify_nested_brackets(G);
    EXPECT_EQ(rep.checks.size(), 16u);
    expect_report_ok(rep, jordan::kind_name(k) + std::to_string(n));
  }
}

TEST(NestedBrackets, A11VanishingIsExhaustive) {
  TkkGenerators G(tkk_of(Kind::HermR, 3));
  NestedBracketOptions opt;
  opt.deep = false;
  auto rep = verify_nested_brackets(G, opt);
  for (const auto& c : rep.checks)
    if (c.name == "brackets.A11_X_vanishes") EXPECT_EQ(c.data.at("tuples"), 216);
}

TEST(NestedBrackets, LiteralA12Fails) {
  TkkGenerators G(tkk_of(Kind::HermC, 2));
  NestedBracketOptions opt;
  opt.deep = false;
  opt.literal_a12 = true;
  auto rep = verify_nested_brackets(G, opt);
  const Check* f = rep.first_failure();
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->name, "brackets.A12");
  EXPECT_EQ(f->detail, "(beta,gamma)=(e11,e11)");
}

TEST(HwEval, Q1VanishesAtSp3Weight) {
  AdaptedU A(cartan_of(Kind::HermR, 3));
  auto q = q_elements(A.tkk(), Scalar(Rational(15, 16)));
  auto r = hw_eval(A, A.adapt(q.Q1));
  EXPECT_EQ(hw_value(r, {Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)}), Scalar(0));
  EXPECT_NE(hw_value(r, {Rational(-1, 2), Rational(-1, 2), Rational(1, 2)}), Scalar(0));
}

TEST(HwEval, CorootsGiveCartanIntegers) {
  auto C = cartan_of(Kind::HermC, 2);
  AdaptedU A(C);
  std::mt19937_64 rng(3);
  for (std::size_t r = 0; r < C->roots.size(); ++r) {
    std::vector<Rational> lam(C->coords);
    for (auto& x : lam) x = random_rational(rng);
    auto res = hw_eval(A, A.adapt(A.tkk().U->lie(C->H[r])));
    EXPECT_EQ(hw_value(res, lam), Scalar(cartan::eval_weight(lam, C->roots[r].v)));
  }
}

TEST(HwEval, PositivesAnnihilateAndPartsReassemble) {
  auto C = cartan_of(Kind::HermR, 3);
  AdaptedU A(C);
  const Enveloping& U = A.U();
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < U.dim(); ++i)
    if (C->part[i] == cartan::CartanBasis::Part::Positive) pos.push_back(i);
  ASSERT_GE(pos.size(), 2u);
  auto q = q_elements(A.tkk(), Scalar(1));
  PBW p = A.adapt(q.Q1);
  PBW pe = U.mul(p, U.gen(pos[0]));
  EXPECT_TRUE(hw_eval(A, pe).scalar_part.is_zero());
  EXPECT_TRUE(hw_eval(A, U.mul(U.gen(pos[0]), U.gen(pos[1]))).scalar_part.is_zero());

  auto r = hw_eval(A, p);
  PBW cartan_only = p - r.residual - r.annihilated;
  for (const auto& [m, c] : cartan_only.terms)
    for (auto x : m) EXPECT_EQ(C->part[x], cartan::CartanBasis::Part::Cartan);
  // linear
  auto r2 = hw_eval(A, p * Scalar(3) + pe);
  EXPECT_EQ(r2.scalar_part, r.scalar_part * Scalar(3));
}

TEST(HwEval, Q2MatchesQuadraticRelationForSp3) {
  AdaptedU A(cartan_of(Kind::HermR, 3));
  auto q = q_elements(A.tkk(), Scalar());
  auto r = hw_eval(A, A.adapt(q.Q2));
  std::mt19937_64 rng(5);
  for (int s = 0; s < 20; ++s) {
    std::vector<Rational> l(3);
    for (auto& x : l) x = random_rational(rng);
    Rational sum = l[0] + l[1] + l[2];
    Rational sq = l[0] * l[0] + l[1] * l[1] + l[2] * l[2];
    // (sum l)^2 - sum l^2 + sum_{i<j} l_j
    Rational lhs = sum * sum - sq + l[1] + Rational(2) * l[2];
    EXPECT_EQ(hw_value(r, l), Scalar(Rational(3, 4) * lhs));
  }
}
