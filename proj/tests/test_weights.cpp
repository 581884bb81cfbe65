#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tkklab/weights.hpp"

using namespace tkklab;
using namespace tkklab::weights;
using jordan::Kind;

namespace {

void expect_report_ok(const Report& rep, const std::string& ctx) {
  for (const auto& c : rep.checks) EXPECT_TRUE(c.ok) << ctx << " " << c.name << ": " << c.detail;
}

const Check* find(const Report& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Weight w(std::initializer_list<Rational> xs) { return Weight(xs); }

const std::pair<Kind, int> kSystems[] = {{Kind::HermR, 3}, {Kind::HermR, 4}, {Kind::HermC, 2}, {Kind::HermC, 3},
                                         {Kind::HermH, 2}, {Kind::HermH, 3}, {Kind::HermO3, 3}};

}  // namespace

TEST(Equations, Sp3Q1Instance) {
  auto sys = equations_for(Kind::HermR, 3);
  Poly sum(4);
  for (std::size_t i = 0; i < 3; ++i) sum += Poly::variable(4, i);
  // (sum l)^2 + 4 sum l + 4a
  Poly want = sum * sum + sum * Scalar(4) + Poly::variable(4, 3) * Scalar(4);
  EXPECT_EQ(sys.equation("q1").p, want);
  EXPECT_EQ(sys.coords, 3u);
}

TEST(Equations, SuHasCoordinateSumAndE7Q1) {
  auto su = equations_for(Kind::HermC, 3);
  Poly all(7);
  for (std::size_t i = 0; i < 6; ++i) all += Poly::variable(7, i);
  EXPECT_EQ(su.equation("sum_zero").p, all);

  auto e7 = equations_for(Kind::HermO3, 3);
  auto l = [](std::size_t i) { return Poly::variable(9, i - 1); };
  Poly T = l(6) * Scalar(2) + l(8) - l(7);
  EXPECT_EQ(e7.equation("q1").p, T * T + T * Scalar(18) + Poly::variable(9, 8) * Scalar(4));
  EXPECT_THROW(equations_for(Kind::SpinFactor, 4), std::invalid_argument);
}

TEST(Equations, DerivedProductsFollow) {
  for (auto [k, n] : {std::pair{Kind::HermC, 2}, {Kind::HermC, 3}, {Kind::HermC, 4}, {Kind::HermH, 2}, {Kind::HermH, 3},
                      {Kind::HermH, 4}}) {
    auto sys = equations_for(k, n);
    auto rep = verify_derived(sys);
    EXPECT_EQ(rep.checks.size(), static_cast<std::size_t>(n * (n - 1) / 2));
    expect_report_ok(rep, sys.algebra);
  }
}

TEST(Equations, EveryQEquationIsAHighestWeightValue) {
  for (auto [k, n] : kSystems) {
    auto sys = equations_for(k, n);
    HwOracle hw(k, n);
    expect_report_ok(verify_against_hw(sys, hw), sys.algebra);
  }
}

TEST(Equations, PrintedSecondaryFormsAreNotHighestWeightValues) {
  SystemOptions opt;
  opt.literal_secondary = true;
  {
    auto sys = equations_for(Kind::HermH, 3, opt);
    HwOracle hw(Kind::HermH, 3);
    auto rep = verify_against_hw(sys, hw);
    const Check* c = find(rep, "weights.hw.q4[e12].Q4(e12^1)");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->ok);
    // the printed line still vanishes on the family
    for (int k = 0; k <= 3; ++k) {
      Weight lam = families(Kind::HermH, 3).front().at(Rational(k));
      EXPECT_TRUE(find(check_weight(sys, lam, a_of(Kind::HermH, 3, k)), "weights.eq.q4[e12]")->ok);
    }
    // and it is the one that excludes (0,0,0,-3,-3,-3), with value 12
    auto rep0 = check_weight(sys, w({0, 0, 0, -3, -3, -3}), Rational(9, 4));
    EXPECT_EQ(find(rep0, "weights.eq.q4[e12]")->detail, "value 12");
  }
  {
    auto sys = equations_for(Kind::HermO3, 3, opt);
    HwOracle hw(Kind::HermO3, 3);
    auto rep = verify_against_hw(sys, hw);
    EXPECT_FALSE(find(rep, "weights.hw.q4[e33].Q4(e33)")->ok);
    EXPECT_TRUE(find(rep, "weights.hw.q3[e33].Q3(e33)")->ok);
  }
}

TEST(Families, MembersSatisfyTheirSystem) {
  for (auto [k, n] : kSystems) {
    auto sys = equations_for(k, n);
    for (const auto& f : families(k, n))
      for (const auto& kk : f.k_values(Rational(4))) {
        Weight lam = f.at(kk);
        Rational a = a_of(k, n, kk);
        const std::string ctx = sys.algebra + " " + f.name + " k=" + kk.str();
        auto rep = check_weight(sys, lam, a);
        if (a.is_zero()) {
          // su(n,n) at k = n
          EXPECT_FALSE(find(rep, "weights.a_nonzero")->ok) << ctx;
          continue;
        }
        expect_report_ok(rep, ctx);
        EXPECT_EQ(solve_a(sys, lam), a) << ctx;
      }
  }
}

TEST(Families, DomainsAndShapes) {
  auto g4 = families(Kind::SpinFactor, 4).front();
  EXPECT_EQ(g4.k_values(Rational(3)), (std::vector<Rational>{0, Rational(1, 2)}));
  EXPECT_EQ(g4.at(Rational(1, 2)), w({-2, Rational(1, 2), Rational(1, 2)}));
  auto g5 = families(Kind::SpinFactor, 5).front();
  EXPECT_EQ(g5.at(Rational(-3, 2)), w({Rational(-7, 2), Rational(3, 2), Rational(3, 2), Rational(-3, 2)}));
  EXPECT_EQ(g5.k_values(Rational(1)), (std::vector<Rational>{Rational(-1, 2), Rational(1, 2)}));
  FamilyOptions opt;
  opt.odd_spin_integer_k = true;
  EXPECT_EQ(families(Kind::SpinFactor, 5, opt).front().k_values(Rational(1)).size(), 5u);

  auto c3 = families(Kind::HermC, 3);
  ASSERT_EQ(c3.size(), 2u);
  EXPECT_EQ(c3[0].at(1), w({Rational(-2, 3), Rational(-2, 3), Rational(-2, 3), Rational(4, 3), Rational(1, 3), Rational(1, 3)}));
  EXPECT_EQ(c3[1].at(1), w({Rational(-1, 3), Rational(-1, 3), Rational(-4, 3), Rational(2, 3), Rational(2, 3), Rational(2, 3)}));
}

TEST(AValues, ClosedForms) {
  EXPECT_EQ(a_of(Kind::HermC, 3, 0), Rational(9, 4));
  EXPECT_EQ(a_of(Kind::HermH, 3, 1), Rational(21, 4));
  EXPECT_EQ(joseph_a(Kind::HermO3, 3), Rational(18));
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(joseph_a(Kind::HermR, n), Rational(n * (n + 2), 16));
    EXPECT_EQ(a_of(Kind::HermR, n, 1), joseph_a(Kind::HermR, n));
  }
  EXPECT_THROW(a_of(Kind::HermR, 3, 2), std::invalid_argument);
  EXPECT_THROW(a_of(Kind::HermC, 3, Rational(1, 2)), std::invalid_argument);
}

TEST(AValues, JosephAtZero) {
  FamilyOptions integer_k;
  integer_k.odd_spin_integer_k = true;
  for (auto k : {Kind::HermR, Kind::HermC, Kind::HermH})
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(a_of(k, n, 0), joseph_a(k, n)) << jordan::kind_name(k) << n;
  for (int m = 2; m <= 6; ++m) EXPECT_EQ(a_of(Kind::SpinFactor, m, 0, integer_k), joseph_a(Kind::SpinFactor, m)) << m;
  EXPECT_EQ(a_of(Kind::HermO3, 3, 0), joseph_a(Kind::HermO3, 3));
}

TEST(AValues, OddSpinFactorReadings) {
  // Gamma(2n-1), n = 3: k = 0 is not half-odd, and integer k = 1 gives a = 0
  EXPECT_THROW(a_of(Kind::SpinFactor, 5, 0), std::invalid_argument);
  FamilyOptions integer_k;
  integer_k.odd_spin_integer_k = true;
  EXPECT_EQ(a_of(Kind::SpinFactor, 5, 1, integer_k), Rational(0));
  EXPECT_EQ(a_of(Kind::SpinFactor, 5, Rational(1, 2)), Rational(5, 4));
}

TEST(CheckWeight, ExamplesAndTrivialWeight) {
  auto so = equations_for(Kind::HermH, 3);
  expect_report_ok(check_weight(so, Weight(6, Rational(-1)), 6), "so*(12)");

  auto e7 = equations_for(Kind::HermO3, 3);
  HwOracle hw(Kind::HermO3, 3);
  CheckOptions opt;
  opt.hw = &hw;
  auto rep = check_weight(e7, w({0, 0, 0, 0, 0, -4, 2, -2}), 18, opt);
  expect_report_ok(rep, "e7");
  EXPECT_NE(find(rep, "weights.hw.q1.Q1"), nullptr);

  auto sp = equations_for(Kind::HermR, 3);
  auto zero = check_weight(sp, Weight(3), 0);
  EXPECT_FALSE(find(zero, "weights.a_nonzero")->ok);
  EXPECT_TRUE(find(zero, "weights.eq.q1")->ok);
  EXPECT_FALSE(find(check_weight(sp, Weight(3, Rational(-1, 2)), 1), "weights.eq.q1")->ok);
  EXPECT_THROW(check_weight(sp, Weight(2), 1), std::invalid_argument);
}

TEST(CheckWeight, DirectAndHwPathsAgreeOffTheFamilies) {
  auto sys = equations_for(Kind::HermC, 3);
  HwOracle hw(Kind::HermC, 3);
  CheckOptions opt;
  opt.hw = &hw;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num(-6, 6);
  for (int s = 0; s < 20; ++s) {
    Weight lam(6);
    for (auto& x : lam) x = Rational(num(rng), 6);
    auto rep = check_weight(sys, lam, Rational(num(rng), 4), opt);
    for (const auto& c : rep.checks)
      if (c.name.rfind("weights.hw.", 0) == 0) EXPECT_TRUE(c.ok) << c.name << " " << c.detail;
  }
}

TEST(Solver, Sp3AndSostar12) {
  auto sp = solve_weights(Kind::HermR, 3, 2, 3);
  ASSERT_EQ(sp.solutions.size(), 2u);
  EXPECT_EQ(sp.solutions[0].lambda, w({Rational(-1, 2), Rational(-1, 2), Rational(-3, 2)}));
  EXPECT_EQ(sp.solutions[1].lambda, w({Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)}));
  EXPECT_EQ(sp.solutions[0].a, Rational(15, 16));
  EXPECT_TRUE(sp.missing.empty());

  auto so = solve_weights(Kind::HermH, 3, 3, 4);
  ASSERT_EQ(so.solutions.size(), 4u);
  for (const auto& s : so.solutions) {
    EXPECT_EQ(s.family, "weight_k");
    ASSERT_TRUE(s.k);
    EXPECT_EQ(s.a, a_of(Kind::HermH, 3, *s.k));
  }
  EXPECT_TRUE(so.missing.empty());
}

TEST(Solver, E7AndSu33) {
  auto e7 = solve_weights(Kind::HermO3, 3, 0, 5);
  ASSERT_EQ(e7.solutions.size(), 1u);
  EXPECT_EQ(e7.solutions[0].lambda, w({0, 0, 0, 0, 0, -4, 2, -2}));
  EXPECT_EQ(e7.solutions[0].a, Rational(18));

  auto su = solve_weights(Kind::HermC, 3, 2, 3);
  EXPECT_EQ(su.solutions.size(), 5u);
  EXPECT_TRUE(su.missing.empty());
  auto sys = equations_for(Kind::HermC, 3);
  for (const auto& s : su.solutions) {
    EXPECT_FALSE(s.family.empty()) << weight_str(s.lambda);
    expect_report_ok(check_weight(sys, s.lambda, s.a), weight_str(s.lambda));
  }
}

TEST(Solver, Sostar8HasAWeightOutsideTheFamily) {
  auto r = solve_weights(Kind::HermH, 2, 2, 3);
  std::vector<Weight> unmatched;
  for (const auto& s : r.solutions)
    if (s.family.empty()) unmatched.push_back(s.lambda);
  ASSERT_EQ(unmatched.size(), 1u);
  EXPECT_EQ(unmatched[0], w({1, -3, -3, -3}));
}

TEST(Solver, LiteralE12ChangesSostar8) {
  SystemOptions opt;
  opt.literal_secondary = true;
  auto r = solve_weights(equations_for(Kind::HermH, 2, opt), 2, 3);
  // the printed line rejects the k = 1 member
  for (const auto& s : r.solutions) EXPECT_NE(s.lambda, w({-1, -1, -1, -2}));
  ASSERT_EQ(r.missing.size(), 1u);
  EXPECT_EQ(r.missing[0].second, Rational(1));
}

TEST(Tables, GoldenAndIdentities) {
  EXPECT_EQ(tables_md(), slurp(std::string(TKKLAB_GOLDEN_DIR) + "/tables.md"));
  EXPECT_EQ(tables_json().dump() + "\n", slurp(std::string(TKKLAB_GOLDEN_DIR) + "/tables.json"));
  auto rep = verify_tables();
  expect_report_ok(rep, "tables");
  EXPECT_NE(find(rep, "tables.split_rank[e7(-25)]"), nullptr);
}

TEST(Weights, ParseAndFormat) {
  EXPECT_EQ(parse_weight("[0, \"-1/2\", 3]"), w({0, Rational(-1, 2), 3}));
  EXPECT_EQ(weight_str(w({Rational(-1, 2), 2})), "(-1/2,2)");
  EXPECT_THROW(parse_weight("{}"), std::invalid_argument);
  EXPECT_THROW(parse_weight("[0.5]"), std::invalid_argument);
}
