#include "cli.hpp"

#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tkklab/cartan.hpp"
#include "tkklab/jordan.hpp"
#include "tkklab/lie.hpp"
#include "tkklab/tkk.hpp"
#include "tkklab/ueval.hpp"
#include "tkklab/weights.hpp"

namespace tkklab::cli {

namespace {

using exactnum::Rational;
using exactnum::Scalar;
using jordan::Kind;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Tier { Small, Large };

// Everything a leaf command may read; each leaf binds the fields it uses.
struct Opts {
  std::string kind;
  int n = -1;
  int m = 0;
  std::uint64_t seed = 1;
  int samples = -1;
  std::string format = "json";
  std::string tier;
  std::string out_file;
  bool tensor = false;
  bool verify = false;
  bool shallow = false;
  bool no_hw = false;
  bool literal_su_eta = false;
  bool literal_a12 = false;
  bool literal_secondary = false;
  bool integer_k = false;
  std::string weight;
  std::string a;
  std::string k = "0";
  std::string relation = "Q1";
  std::string u;
  std::string k_max = "2";
  std::string bound = "3";
  int threads = 0;
};

struct Ctx {
  std::ostream& out;
  std::ostream& err;
};

Tier tier_of(const Opts& o) {
  std::string t = o.tier;
  if (t.empty())
    if (const char* env = std::getenv("TKKLAB_TIER")) t = env;
  if (t.empty() || t == "small") return Tier::Small;
  if (t == "large") return Tier::Large;
  throw UsageError("tier must be small or large, got '" + t + "'");
}

struct Target {
  Kind kind;
  int n;
};

Target target_of(const Opts& o) {
  if (o.kind.empty()) throw UsageError("--kind is required");
  auto kind = jordan::parse_kind(o.kind);
  if (!kind) throw UsageError("unknown kind '" + o.kind + "'");
  int n = o.n;
  if (n == -1 && *kind == Kind::HermO3) n = 3;
  if (n == -1) throw UsageError("--n is required");
  if (!jordan::admissible(*kind, n))
    throw UsageError("no algebra of kind " + jordan::kind_name(*kind) + " with n = " + std::to_string(n));
  return {*kind, n};
}

Rational parse_rational(const std::string& s, const std::string& what) {
  try {
    return Rational::parse(s);
  } catch (const std::exception& e) {
    throw UsageError("bad " + what + " '" + s + "': " + e.what());
  }
}

std::string md_cell(std::string s) {
  for (auto& c : s)
    if (c == '|' || c == '\n') c = ' ';
  return s;
}

int emit(const Ctx& ctx, const Opts& o, const Report& rep) {
  if (o.format == "md") {
    ctx.out << "| identity | status | witness |\n|---|---|---|\n";
    for (const auto& c : rep.checks)
      ctx.out << "| " << md_cell(c.name) << " | " << (c.ok ? "pass" : "fail") << " | " << md_cell(c.detail) << " |\n";
  } else {
    for (const auto& c : rep.checks) ctx.out << to_json(c).dump() << '\n';
  }
  return rep.ok() ? 0 : 1;
}

std::shared_ptr<const tkk::Tkk> tkk_of(const Target& t) {
  return std::make_shared<const tkk::Tkk>(tkk::build_tkk(t.kind, t.n));
}

bool has_weight_system(Kind k) { return k != Kind::SpinFactor; }

// --- jordan

int jordan_info(const Ctx& ctx, const Opts& o) {
  Target t = target_of(o);
  auto J = jordan::build_jordan(t.kind, t.n);
  auto rd = jordan::rank_degree(J);
  nlohmann::json j = {{"kind", jordan::kind_name(t.kind)}, {"n", t.n}, {"D", J.D},
                      {"rho", rd.rho},                     {"d", rd.d}, {"basis", J.labels}};
  if (o.tensor) {
    nlohmann::json prod = nlohmann::json::object();
    for (std::size_t a = 0; a < J.dim(); ++a)
      for (std::size_t b = 0; b < J.dim(); ++b) {
        if (J.product[a][b].empty()) continue;
        nlohmann::json cell = nlohmann::json::object();
        for (const auto& [c, s] : J.product[a][b]) cell[J.labels[c]] = s.to_json();
        prod[J.labels[a] + "," + J.labels[b]] = std::move(cell);
      }
    j["product"] = std::move(prod);
  }
  ctx.out << j.dump() << '\n';
  return 0;
}

int jordan_verify(const Ctx& ctx, const Opts& o) {
  Target t = target_of(o);
  auto J = jordan::build_jordan(t.kind, t.n);
  Report rep = jordan::verify_jordan_axioms(J, o.samples < 0 ? 50 : o.samples, o.seed);
  rep.append(jordan::verify_frame(J, jordan::jordan_frame(J)));
  return emit(ctx, o, rep);
}

// --- tkk

int tkk_build(const Ctx& ctx, const Opts& o) {
  auto T = tkk_of(target_of(o));
  std::string text = lie::to_json(T->g).dump() + "\n";
  if (o.out_file.empty()) {
    ctx.out << text;
  } else {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.out_file);
    f << text;
  }
  return 0;
}

int tkk_verify(const Ctx& ctx, const Opts& o) {
  Target t = target_of(o);
  auto T = tkk_of(t);
  bool jacobi = !(t.kind == Kind::HermO3 && tier_of(o) == Tier::Small);
  if (!jacobi) ctx.err << "note: Jacobi over all triples of e7 runs only with TKKLAB_TIER=large\n";
  return emit(ctx, o, tkk::verify_tkk(*T, o.samples < 0 ? 5 : o.samples, o.seed, jacobi));
}

// --- cartan

cartan::CartanOptions cartan_opts(const Opts& o) {
  cartan::CartanOptions c;
  c.literal_su_eta = o.literal_su_eta;
  return c;
}

void require_cartan_kind(const Target& t) {
  if (t.kind == Kind::SpinFactor)
    throw UsageError("Cartan bases exist for hermR, hermC, hermH and e7; use 'cartan phi' for spin factors");
}

int cartan_verify(const Ctx& ctx, const Opts& o) {
  Target t = target_of(o);
  require_cartan_kind(t);
  auto C = cartan::cartan_basis(t.kind, t.n, cartan_opts(o));
  Report rep = C.report;
  rep.add("cartan.bracket_constants", true, {}, {{"constants", cartan::bracket_constants_json(C)}});
  return emit(ctx, o, rep);
}

int cartan_roots(const Ctx& ctx, const Opts& o) {
  Target t = target_of(o);
  require_cartan_kind(t);
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : cartan::root_system(t.kind, t.n)) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : r.v) v.push_back(x.str());
    list.push_back({{"root", v}, {"positive", r.positive}, {"compact", r.compact}});
  }
  ctx.out << nlohmann::json{{"algebra", cartan::algebra_name(t.kind, t.n)}, {"roots", list}}.dump() << '\n';
  return 0;
}

int cartan_phi(const Ctx& ctx, const Opts& o) {
  if (o.m < 2 || o.m > 64) throw UsageError("--m must be between 2 and 64");
  return emit(ctx, o, cartan::phi_iso(o.m).report);
}

// --- ueval

int ueval_brackets(const Ctx& ctx, const Opts& o) {
  Target t = target_of(o);
  ueval::TkkGenerators G(tkk_of(t));
  ueval::NestedBracketOptions opt;
  if (o.samples >= 0) opt.samples = o.samples;
  opt.seed = o.seed;
  opt.deep = !o.shallow;
  opt.literal_a12 = o.literal_a12;
  return emit(ctx, o, ueval::verify_nested_brackets(G, opt));
}

int ueval_q1(const Ctx& ctx, const Opts& o) {
  ueval::TkkGenerators G(tkk_of(target_of(o)));
  return emit(ctx, o, ueval::verify_q1_relations(G));
}

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+'))
    if (!part.empty()) out.push_back(part);
  return out;
}

weights::Weight weight_of(const Opts& o, std::size_t coords) {
  if (o.weight.empty()) throw UsageError("--weight is required");
  weights::Weight w;
  try {
    w = weights::parse_weight(o.weight);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --weight: ") + e.what());
  }
  if (w.size() != coords)
    throw UsageError("--weight needs " + std::to_string(coords) + " coordinates, got " + std::to_string(w.size()));
  return w;
}

int ueval_hw(const Ctx& ctx, const Opts& o) {
  Target t = target_of(o);
  if (!has_weight_system(t.kind)) throw UsageError("highest-weight evaluation needs a Cartan basis; not for spin factors");
  weights::Origin origin;
  if (o.relation == "Q1") origin.q = weights::Origin::Q::Q1;
  else if (o.relation == "Q2") origin.q = weights::Origin::Q::Q2;
  else if (o.relation == "Q3") origin.q = weights::Origin::Q::Q3;
  else if (o.relation == "Q4") origin.q = weights::Origin::Q::Q4;
  else throw UsageError("--relation must be Q1, Q2, Q3 or Q4");
  bool needs_u = origin.q == weights::Origin::Q::Q3 || origin.q == weights::Origin::Q::Q4;
  if (needs_u && o.u.empty()) throw UsageError(o.relation + " needs --u");
  if (needs_u) origin.u = split_labels(o.u);

  auto J = jordan::build_jordan(t.kind, t.n);
  for (const auto& l : origin.u)
    if (!J.index_of(l)) throw UsageError("unknown basis label '" + l + "'");

  weights::HwOracle hw(t.kind, t.n);
  weights::Weight lambda = weight_of(o, hw.coords());
  Rational a = o.a.empty() ? Rational(0) : parse_rational(o.a, "--a");
  if (origin.q == weights::Origin::Q::Q1 && o.a.empty()) throw UsageError("Q1 needs --a");

  const auto& p = hw.poly(origin);
  std::vector<Scalar> x(lambda.begin(), lambda.end());
  x.push_back(a);
  Scalar value = p.eval(x);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < hw.coords(); ++i) names.push_back("l" + std::to_string(i + 1));
  names.push_back("a");
  Report rep;
  rep.add("ueval.hw." + origin.str(), value.is_zero(), value.is_zero() ? "" : "scalar part " + value.str(),
          {{"weight", weights::weight_str(lambda)}, {"a", a.str()}, {"value", value.str()}, {"polynomial", p.str(names)}});
  return emit(ctx, o, rep);
}

// --- weights

weights::SystemOptions system_opts(const Opts& o) {
  weights::SystemOptions s;
  s.literal_secondary = o.literal_secondary;
  return s;
}

weights::EquationSystem system_of(const Target& t, const Opts& o) {
  if (!has_weight_system(t.kind)) throw UsageError("weight systems exist for sp (hermR), su (hermC), so* (hermH) and e7");
  return weights::equations_for(t.kind, t.n, system_opts(o));
}

int weights_check(const Ctx& ctx, const Opts& o) {
  Target t = target_of(o);
  auto sys = system_of(t, o);
  weights::Weight lambda = weight_of(o, sys.coords);
  Rational a = o.a.empty() ? weights::solve_a(sys, lambda) : parse_rational(o.a, "--a");
  std::unique_ptr<weights::HwOracle> hw;
  weights::CheckOptions opt;
  if (!o.no_hw) {
    hw = std::make_unique<weights::HwOracle>(t.kind, t.n);
    opt.hw = hw.get();
  }
  return emit(ctx, o, weights::check_weight(sys, lambda, a, opt));
}

int weights_solve(const Ctx& ctx, const Opts& o) {
  Target t = target_of(o);
  auto sys = system_of(t, o);
  Rational k_max = parse_rational(o.k_max, "--k-max");
  Rational bound = parse_rational(o.bound, "--bound");
  if (k_max.sign() < 0 || bound.sign() < 0) throw UsageError("--k-max and --bound must be nonnegative");
  auto r = weights::solve_weights(sys, k_max, bound, o.threads);
  Report rep;
  for (const auto& s : r.solutions) {
    nlohmann::json data = {{"a", s.a.str()}, {"family", s.family}};
    if (s.k) data["k"] = s.k->str();
    rep.add("weights.solution" + weights::weight_str(s.lambda), !s.family.empty(),
            s.family.empty() ? "not a member of any weight family" : "", data);
  }
  for (const auto& [fam, k] : r.missing)
    rep.add("weights.missing[" + fam + ",k=" + k.str() + "]", false, "family member inside the box not found");
  rep.add("weights.search", true, {},
          {{"solutions", r.solutions.size()}, {"leaves", r.leaves}, {"k_max", k_max.str()}, {"bound", bound.str()}});
  return emit(ctx, o, rep);
}

int weights_tables(const Ctx& ctx, const Opts& o) {
  if (o.verify) return emit(ctx, o, weights::verify_tables());
  if (o.format == "md") ctx.out << weights::tables_md();
  else ctx.out << weights::tables_json().dump() << '\n';
  return 0;
}

int weights_a(const Ctx& ctx, const Opts& o) {
  Target t = target_of(o);
  weights::FamilyOptions fo;
  fo.odd_spin_integer_k = o.integer_k;
  Rational k = parse_rational(o.k, "--k");
  Rational a;
  try {
    a = weights::a_of(t.kind, t.n, k, fo);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Rational joseph = weights::joseph_a(t.kind, t.n);
  Report rep;
  rep.add("weights.a_of", true, {}, {{"k", k.str()}, {"a", a.str()}});
  if (k.is_zero())
    rep.add("weights.joseph_constant", a == joseph, a == joseph ? "" : "joseph value " + joseph.str(),
            {{"joseph", joseph.str()}});
  return emit(ctx, o, rep);
}

// --- wiring

using Action = std::function<int(const Ctx&, const Opts&)>;

struct Builder {
  std::deque<Opts> store;
  Action chosen;
  Opts* chosen_opts = nullptr;

  // A leaf command with its own option set.
  Opts& leaf(CLI::App* parent, const std::string& name, const std::string& help, Action act, CLI::App** out = nullptr) {
    Opts& o = store.emplace_back();
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([this, &o, act] {
      chosen = act;
      chosen_opts = &o;
    });
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md"}));
    if (out) *out = c;
    return o;
  }
};

void kind_n(CLI::App* c, Opts& o) {
  c->add_option("--kind", o.kind, "spin|hermR|hermC|hermH|hermO (also sp, su, sostar, e7)")->required();
  c->add_option("--n", o.n, "Matrix size, or m for the spin factor Gamma(m); optional for hermO");
}

void add_jordan_verify(Builder& b, CLI::App* parent, const std::string& name) {
  CLI::App* c;
  Opts& o = b.leaf(parent, name,
                   "Commutativity, Jordan identity and [L_u, L_u^2] = 0 on seeded samples, positive definite trace "
                   "form, and the Jordan frame properties",
                   jordan_verify, &c);
  kind_n(c, o);
  c->add_option("--samples", o.samples, "Random elements (default 50)");
  c->add_option("--seed", o.seed, "Sampling seed");
}

void add_tkk_verify(Builder& b, CLI::App* parent, const std::string& name) {
  CLI::App* c;
  Opts& o = b.leaf(parent, name,
                   "Jacobi identity over all basis triples of co(J), dimensions of der/str/co, the S-operator rules "
                   "and the E+/E-/h bracket rules on all basis pairs",
                   tkk_verify, &c);
  kind_n(c, o);
  c->add_option("--samples", o.samples, "Random quadruples for the [S,S] rule (default 5)");
  c->add_option("--seed", o.seed, "Sampling seed");
  c->add_option("--tier", o.tier, "small|large (default from TKKLAB_TIER)");
}

void add_cartan_verify(Builder& b, CLI::App* parent, const std::string& name) {
  CLI::App* c;
  Opts& o = b.leaf(parent, name,
                   "Displayed Cartan basis elements: [H, E_alpha] = alpha(H) E_alpha and [E_alpha, E_-alpha] "
                   "proportional to H_alpha, with the recorded constants",
                   cartan_verify, &c);
  kind_n(c, o);
  c->add_flag("--literal-su-eta", o.literal_su_eta, "su(n,n): use the printed sign of the e_jj term in mixed H's");
}

void add_cartan_phi(Builder& b, CLI::App* parent, const std::string& name) {
  CLI::App* c;
  Opts& o = b.leaf(parent, name, "The isomorphism co(Gamma(m)) -> so(2, m+1): bijectivity, all basis brackets, and "
                                 "the displayed images", cartan_phi, &c);
  c->add_option("--m", o.m, "Spin factor parameter m")->required();
}

void add_brackets(Builder& b, CLI::App* parent, const std::string& name) {
  CLI::App* c;
  Opts& o = b.leaf(parent, name,
                   "In U(co(J)): [Q1', L_b] = 0, closed forms of the nested brackets A_1, A_2, A_11, A_22, A_12 and "
                   "deeper ones, and their vanishing against X and Y",
                   ueval_brackets, &c);
  kind_n(c, o);
  c->add_option("--samples", o.samples, "Sampled tuples for the deep identities (default 50)");
  c->add_option("--seed", o.seed, "Sampling seed");
  c->add_flag("--shallow", o.shallow, "Skip the sampled deep identities");
  c->add_flag("--literal-a12", o.literal_a12, "Use the printed Y-term of A_12");
}

void add_tables(Builder& b, CLI::App* parent, const std::string& name, bool verify_only) {
  CLI::App* c;
  Opts& o = b.leaf(parent, name,
                   verify_only ? "Table cells against the built algebras and root systems, with r = rho and 2C = d"
                               : "Emit the rank/degree, dimension and unitarity-constant tables, or verify them",
                   weights_tables, &c);
  if (verify_only) o.verify = true;
  else c->add_flag("--verify", o.verify, "Check the cells instead of printing them");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Ctx ctx{out, err};
  CLI::App app{"Exact computations with Euclidean Jordan algebras, their conformal Lie algebras and the highest "
               "weights of small unitary modules",
               "tkklab"};
  app.require_subcommand(1);
  Builder b;

  CLI::App* jordan = app.add_subcommand("jordan", "Simple Euclidean Jordan algebras")->require_subcommand(1);
  {
    CLI::App* c;
    Opts& o = b.leaf(jordan, "info", "Dimension, rank, degree and basis labels; --tensor adds the product tensor",
                     jordan_info, &c);
    kind_n(c, o);
    c->add_flag("--tensor", o.tensor, "Include the product tensor");
  }
  add_jordan_verify(b, jordan, "verify");

  CLI::App* tkk = app.add_subcommand("tkk", "The conformal algebra co(J)")->require_subcommand(1);
  {
    CLI::App* c;
    Opts& o = b.leaf(tkk, "build", "Structure constants of co(J) as JSON {basis, brackets}", tkk_build, &c);
    kind_n(c, o);
    c->add_option("--out", o.out_file, "Write to this file instead of stdout");
  }
  add_tkk_verify(b, tkk, "verify");

  CLI::App* cartan = app.add_subcommand("cartan", "Root systems and Cartan bases")->require_subcommand(1);
  add_cartan_verify(b, cartan, "verify");
  {
    CLI::App* c;
    Opts& o = b.leaf(cartan, "roots", "Roots with positivity and compactness, as JSON", cartan_roots, &c);
    kind_n(c, o);
  }
  add_cartan_phi(b, cartan, "phi");

  CLI::App* ueval = app.add_subcommand("ueval", "Computations in the enveloping algebra")->require_subcommand(1);
  add_brackets(b, ueval, "brackets");
  {
    CLI::App* c;
    Opts& o = b.leaf(ueval, "q1",
                     "[Q1, X_e] as the sum of anticommutators, and the two brackets relating Q1 and Q1'", ueval_q1, &c);
    kind_n(c, o);
  }
  {
    CLI::App* c;
    Opts& o = b.leaf(ueval, "hw",
                     "Scalar part of a quadratic element on a highest weight vector; passes when it vanishes", ueval_hw,
                     &c);
    kind_n(c, o);
    c->add_option("--weight", o.weight, "JSON array of coordinates, fractions as strings")->required();
    c->add_option("--a", o.a, "The constant a (required for Q1)");
    c->add_option("--relation", o.relation, "Q1|Q2|Q3|Q4")->check(CLI::IsMember({"Q1", "Q2", "Q3", "Q4"}));
    c->add_option("--u", o.u, "Jordan element for Q3/Q4 as a sum of basis labels, e.g. e11 or e11+e22");
  }

  CLI::App* weights = app.add_subcommand("weights", "Highest-weight equation systems and tables")->require_subcommand(1);
  {
    CLI::App* c;
    Opts& o = b.leaf(weights, "solve",
                     "Exhaustive bounded search for the weights solving the full system; fails on weights outside "
                     "the families and on family members not found",
                     weights_solve, &c);
    kind_n(c, o);
    c->add_option("--k-max", o.k_max, "Largest |k| of family members expected in the box");
    c->add_option("--bound", o.bound, "Search |lambda_i| <= bound");
    c->add_option("--threads", o.threads, "Worker threads (0: hardware)");
    c->add_flag("--literal-secondary", o.literal_secondary, "Printed forms of the so* e12 and e7 Q4 equations");
  }
  {
    CLI::App* c;
    Opts& o = b.leaf(weights, "check",
                     "Every equation, unitarity inequality and integrality condition at one weight, with each "
                     "equation cross-checked against its highest-weight value",
                     weights_check, &c);
    kind_n(c, o);
    c->add_option("--weight,--weight-json", o.weight, "JSON array of coordinates")->required();
    c->add_option("--a", o.a, "The constant a (default: solved from the Q1 equation)");
    c->add_flag("--no-hw", o.no_hw, "Skip the highest-weight cross-check");
    c->add_flag("--literal-secondary", o.literal_secondary, "Printed forms of the so* e12 and e7 Q4 equations");
  }
  add_tables(b, weights, "tables", false);
  {
    CLI::App* c;
    Opts& o = b.leaf(weights, "a", "The constant a(J,k); at k = 0 also compared with rho d/4 (1 + (rho-2) d/4)",
                     weights_a, &c);
    kind_n(c, o);
    c->add_option("--k", o.k, "Family parameter");
    c->add_flag("--integer-k", o.integer_k, "Gamma(odd): accept every k in Z/2");
  }

  CLI::App* verify = app.add_subcommand("verify", "Shorthand for the verification commands")->require_subcommand(1);
  add_jordan_verify(b, verify, "jordan");
  add_tkk_verify(b, verify, "tkk");
  add_cartan_verify(b, verify, "cartan");
  add_cartan_phi(b, verify, "phi");
  add_brackets(b, verify, "brackets");
  add_tables(b, verify, "tables", true);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!b.chosen) {
    err << app.help();
    return 2;
  }
  try {
    return b.chosen(ctx, *b.chosen_opts);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    // e.g. a coefficient outside 64 bits: the run could not certify anything
    err << "error: computation aborted: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace tkklab::cli
