#include <functional>
#include <set>
#include <sstream>

#include "tkklab/tkk.hpp"
#include "tkklab/weights.hpp"

namespace tkklab::weights {

namespace {

using cartan::RootVec;

struct RankDegreeRow {
  Kind kind;
  std::string J, rho, d;
  std::function<int(int)> rho_at, d_at;
};

const std::vector<RankDegreeRow>& rank_degree_rows() {
  static const std::vector<RankDegreeRow> rows = {
      {Kind::SpinFactor, "Gamma(n)", "2", "n-1", [](int) { return 2; }, [](int n) { return n - 1; }},
      {Kind::HermR, "H_n(R)", "n", "1", [](int n) { return n; }, [](int) { return 1; }},
      {Kind::HermC, "H_n(C)", "n", "2", [](int n) { return n; }, [](int) { return 2; }},
      {Kind::HermH, "H_n(H)", "n", "4", [](int n) { return n; }, [](int) { return 4; }},
      {Kind::HermO3, "H_3(O)", "3", "8", [](int) { return 3; }, [](int) { return 8; }},
  };
  return rows;
}

struct AlgebraRow {
  Kind kind;
  std::string J, der, str, co;
};

const std::vector<AlgebraRow>& algebra_rows() {
  static const std::vector<AlgebraRow> rows = {
      {Kind::SpinFactor, "Gamma(n)", "so(n)", "so(n,1)+R", "so(2,n+1)"},
      {Kind::HermR, "H_n(R)", "so(n)", "sl(n,R)+R", "sp(n,R)"},
      {Kind::HermC, "H_n(C)", "su(n)", "sl(n,C)+R", "su(n,n)"},
      {Kind::HermH, "H_n(H)", "sp(n)", "su*(2n)+R", "so*(4n)"},
      {Kind::HermO3, "H_3(O)", "f4", "e6(-26)+R", "e7(-25)"},
  };
  return rows;
}

// Roots of a real form with compactness; positivity is lexicographic unless
// the builder sets it.
struct RealRoots {
  std::vector<cartan::Root> roots;
};

RootVec unit(std::size_t dim, std::size_t i, int s = 1) {
  RootVec v(dim);
  v[i] = Rational(s);
  return v;
}

bool lex_positive(const RootVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return x.sign() > 0;
  return false;
}

RealRoots with_lex(std::vector<std::pair<RootVec, bool>> rs) {
  RealRoots out;
  for (auto& [v, compact] : rs) out.roots.push_back({v, lex_positive(v), compact});
  return out;
}

// su(p,q): e_i - e_j, noncompact iff exactly one index is among the first p
RealRoots su_pq(int p, int q) {
  const std::size_t N = p + q;
  std::vector<std::pair<RootVec, bool>> rs;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) {
        RootVec v = cartan::add(unit(N, i), unit(N, j, -1));
        rs.push_back({v, (i < static_cast<std::size_t>(p)) == (j < static_cast<std::size_t>(p))});
      }
  return with_lex(rs);
}

// sp(n,R): compact e_i - e_j; noncompact +-(e_i + e_j), +-2e_i
RealRoots sp_n(int n) {
  std::vector<std::pair<RootVec, bool>> rs;
  for (int i = 0; i < n; ++i) {
    rs.push_back({unit(n, i, 2), false});
    rs.push_back({unit(n, i, -2), false});
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      rs.push_back({cartan::add(unit(n, i), unit(n, j, -1)), true});
      if (i < j) {
        rs.push_back({cartan::add(unit(n, i), unit(n, j)), false});
        rs.push_back({cartan::add(unit(n, i, -1), unit(n, j, -1)), false});
      }
    }
  }
  return with_lex(rs);
}

// so*(2n): compact e_i - e_j; noncompact +-(e_i + e_j)
RealRoots sostar_2n(int n) {
  std::vector<std::pair<RootVec, bool>> rs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      rs.push_back({cartan::add(unit(n, i), unit(n, j, -1)), true});
      if (i < j) {
        rs.push_back({cartan::add(unit(n, i), unit(n, j)), false});
        rs.push_back({cartan::add(unit(n, i, -1), unit(n, j, -1)), false});
      }
    }
  return with_lex(rs);
}

// so(2,N): B or D roots of rank floor((N+2)/2); e_1 spans the so(2) part, so a
// root is noncompact iff it involves e_1.
RealRoots so_2N(int N) {
  const int rank = (N + 2) / 2;
  const bool odd = (N + 2) % 2 == 1;
  std::vector<std::pair<RootVec, bool>> rs;
  for (int i = 0; i < rank; ++i) {
    if (odd) {
      rs.push_back({unit(rank, i), i != 0});
      rs.push_back({unit(rank, i, -1), i != 0});
    }
    for (int j = i + 1; j < rank; ++j)
      for (int s : {1, -1})
        for (int t : {1, -1}) rs.push_back({cartan::add(unit(rank, i, s), unit(rank, j, t)), i != 0});
  }
  return with_lex(rs);
}

RealRoots e7_roots() { return {cartan::root_system(Kind::HermO3, 3)}; }

struct RootData {
  Rational rho_beta;
  int split_rank = 0;
};

RootData root_data(const RealRoots& R) {
  std::set<RootVec> all;
  for (const auto& r : R.roots) all.insert(r.v);
  RootVec rho(R.roots.front().v.size());
  std::vector<RootVec> pos, pos_noncompact;
  for (const auto& r : R.roots)
    if (r.positive) {
      pos.push_back(r.v);
      if (!r.compact) pos_noncompact.push_back(r.v);
      for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += r.v[i] / Rational(2);
    }
  // highest root: no positive root can be added to it
  std::optional<RootVec> beta;
  for (const auto& a : pos) {
    bool top = true;
    for (const auto& g : pos) top = top && !all.count(cartan::add(a, g));
    if (top) {
      if (beta) throw std::logic_error("two maximal roots");
      beta = a;
    }
  }
  RootData out;
  out.rho_beta = Rational(2) * cartan::dot(rho, *beta) / cartan::dot(*beta, *beta);

  // largest strongly orthogonal set of noncompact positive roots
  auto strongly_orth = [&](const RootVec& a, const RootVec& b) {
    return cartan::dot(a, b).is_zero() && !all.count(cartan::add(a, b)) && !all.count(cartan::add(a, cartan::neg(b)));
  };
  std::vector<RootVec> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    out.split_rank = std::max(out.split_rank, static_cast<int>(chosen.size()));
    for (std::size_t i = from; i < pos_noncompact.size(); ++i) {
      bool ok = true;
      for (const auto& c : chosen) ok = ok && strongly_orth(c, pos_noncompact[i]);
      if (!ok) continue;
      chosen.push_back(pos_noncompact[i]);
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return out;
}

// Unitarity-constant columns. params: {p, q} for su(p,q), {n} otherwise.
struct UnitarityCol {
  std::string g, C, r, rho_beta;
  std::function<Rational(const std::vector<int>&)> C_at;
  std::function<int(const std::vector<int>&)> r_at, rho_beta_at;
  std::function<RealRoots(const std::vector<int>&)> roots;  // empty: not built
  std::vector<std::vector<int>> samples;
};

const std::vector<UnitarityCol>& unitarity_cols() {
  using P = const std::vector<int>&;
  static const std::vector<UnitarityCol> cols = {
      {"su(p,q)", "1", "min{p,q}", "p+q-1", [](P) { return Rational(1); }, [](P p) { return std::min(p[0], p[1]); },
       [](P p) { return p[0] + p[1] - 1; }, [](P p) { return su_pq(p[0], p[1]); },
       {{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}, {2, 5}, {4, 4}}},
      {"sp(n,R)", "1/2", "n", "n", [](P) { return Rational(1, 2); }, [](P p) { return p[0]; }, [](P p) { return p[0]; },
       [](P p) { return sp_n(p[0]); }, {{2}, {3}, {4}, {5}}},
      {"so*(2n)", "2", "[n/2]", "2n-3", [](P) { return Rational(2); }, [](P p) { return p[0] / 2; },
       [](P p) { return 2 * p[0] - 3; }, [](P p) { return sostar_2n(p[0]); }, {{3}, {4}, {5}, {6}, {7}, {8}}},
      {"so(2,2n-2)", "n-2", "2", "2n-3", [](P p) { return Rational(p[0] - 2); }, [](P) { return 2; },
       [](P p) { return 2 * p[0] - 3; }, [](P p) { return so_2N(2 * p[0] - 2); }, {{3}, {4}, {5}, {6}}},
      {"so(2,2n-1)", "n-3/2", "2", "2n-2", [](P p) { return Rational(2 * p[0] - 3, 2); }, [](P) { return 2; },
       [](P p) { return 2 * p[0] - 2; }, [](P p) { return so_2N(2 * p[0] - 1); }, {{2}, {3}, {4}, {5}, {6}}},
      {"e6(-14)", "3", "2", "11", [](P) { return Rational(3); }, [](P) { return 2; }, [](P) { return 11; }, nullptr, {{}}},
      {"e7(-25)", "4", "3", "17", [](P) { return Rational(4); }, [](P) { return 3; }, [](P) { return 17; },
       [](P) { return e7_roots(); }, {{}}},
  };
  return cols;
}

// The unitarity column and parameters for co(J).
std::pair<const UnitarityCol*, std::vector<int>> column_for(Kind kind, int n) {
  const auto& cols = unitarity_cols();
  switch (kind) {
    case Kind::SpinFactor:
      // so(2, n+1)
      if ((n + 1) % 2 == 0) return {&cols[3], {(n + 3) / 2}};
      return {&cols[4], {(n + 2) / 2}};
    case Kind::HermR: return {&cols[1], {n}};
    case Kind::HermC: return {&cols[0], {n, n}};
    case Kind::HermH: return {&cols[2], {2 * n}};
    case Kind::HermO3: return {&cols[6], {}};
  }
  return {nullptr, {}};
}

std::string params_str(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::vector<int> jordan_sizes(Kind kind) {
  switch (kind) {
    case Kind::SpinFactor: return {2, 3, 4, 5, 6};
    case Kind::HermO3: return {3};
    default: return {2, 3, 4};
  }
}

}  // namespace

std::string tables_md() {
  std::ostringstream os;
  os << "Rank and degree\n\n| J |";
  for (const auto& r : rank_degree_rows()) os << " " << r.J << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < rank_degree_rows().size(); ++i) os << "---|";
  os << "\n| rho |";
  for (const auto& r : rank_degree_rows()) os << " " << r.rho << " |";
  os << "\n| d |";
  for (const auto& r : rank_degree_rows()) os << " " << r.d << " |";
  os << "\n\nDerivation, structure and conformal algebras\n\n| J | der | str | co |\n|---|---|---|---|\n";
  for (const auto& r : algebra_rows()) os << "| " << r.J << " | " << r.der << " | " << r.str << " | " << r.co << " |\n";
  os << "\nUnitarity constants\n\n| g |";
  for (const auto& c : unitarity_cols()) os << " " << c.g << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < unitarity_cols().size(); ++i) os << "---|";
  os << "\n| C |";
  for (const auto& c : unitarity_cols()) os << " " << c.C << " |";
  os << "\n| r |";
  for (const auto& c : unitarity_cols()) os << " " << c.r << " |";
  os << "\n| (rho,beta^vee) |";
  for (const auto& c : unitarity_cols()) os << " " << c.rho_beta << " |";
  os << "\n";
  return os.str();
}

nlohmann::json tables_json() {
  nlohmann::json t1 = nlohmann::json::array(), t2 = nlohmann::json::array(), t3 = nlohmann::json::array();
  for (const auto& r : rank_degree_rows()) t1.push_back({{"J", r.J}, {"rho", r.rho}, {"d", r.d}});
  for (const auto& r : algebra_rows()) t2.push_back({{"J", r.J}, {"der", r.der}, {"str", r.str}, {"co", r.co}});
  for (const auto& c : unitarity_cols()) t3.push_back({{"g", c.g}, {"C", c.C}, {"r", c.r}, {"rho_beta", c.rho_beta}});
  return {{"rank_degree", t1}, {"algebras", t2}, {"unitarity", t3}};
}

Report verify_tables() {
  Report rep;
  for (const auto& row : rank_degree_rows())
    for (int n : jordan_sizes(row.kind)) {
      auto rd = jordan::rank_degree(jordan::build_jordan(row.kind, n));
      const bool ok = rd.rho == row.rho_at(n) && rd.d == row.d_at(n);
      rep.add("tables.rank_degree[" + row.J + "]", ok,
              ok ? "" : "n=" + std::to_string(n) + ": built (" + std::to_string(rd.rho) + "," + std::to_string(rd.d) + ")",
              {{"n", n}});
    }
  for (const auto& row : algebra_rows())
    for (int n : jordan_sizes(row.kind)) {
      auto J = std::make_shared<const jordan::JordanAlgebra>(jordan::build_jordan(row.kind, n));
      auto T = tkk::build_tkk(J);
      auto want = tkk::table_dims(row.kind, n);
      const int der = static_cast<int>(tkk::der_dimension(*J)), str = static_cast<int>(T.str.dim()),
                co = static_cast<int>(T.g.dim());
      const bool ok = der == want.der && str == want.str && co == want.co;
      rep.add("tables.dims[" + row.J + "]", ok,
              ok ? ""
                 : "n=" + std::to_string(n) + ": built " + std::to_string(der) + "/" + std::to_string(str) + "/" +
                       std::to_string(co),
              {{"n", n}, {"der", der}, {"str", str}, {"co", co}});
    }
  // r = rho and 2C = d for every co(J)
  for (const auto& row : rank_degree_rows())
    for (int n : jordan_sizes(row.kind)) {
      auto rd = jordan::rank_degree(jordan::build_jordan(row.kind, n));
      auto [col, p] = column_for(row.kind, n);
      const std::string where = row.J + " n=" + std::to_string(n) + " -> " + col->g + "(" + params_str(p) + ")";
      rep.add("tables.r_eq_rho[" + row.J + "]", col->r_at(p) == rd.rho, col->r_at(p) == rd.rho ? "" : where, {{"n", n}});
      const bool c_ok = Rational(2) * col->C_at(p) == Rational(rd.d);
      rep.add("tables.two_c_eq_d[" + row.J + "]", c_ok, c_ok ? "" : where, {{"n", n}});
    }
  // split rank and (rho, beta^vee) from root systems
  for (const auto& col : unitarity_cols()) {
    if (!col.roots) continue;
    for (const auto& p : col.samples) {
      auto data = root_data(col.roots(p));
      const std::string at = col.g + "(" + params_str(p) + ")";
      const bool rb = data.rho_beta == Rational(col.rho_beta_at(p));
      rep.add("tables.rho_beta[" + col.g + "]", rb, rb ? "" : at + ": roots give " + data.rho_beta.str(),
              {{"params", p}});
      const bool sr = data.split_rank == col.r_at(p);
      rep.add("tables.split_rank[" + col.g + "]", sr, sr ? "" : at + ": roots give " + std::to_string(data.split_rank),
              {{"params", p}});
    }
  }
  return rep;
}

}  // namespace tkklab::weights
