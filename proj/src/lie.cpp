#include "tkklab/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace tkklab::lie {

using exactnum::axpy;
using exactnum::sparse_add;

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

SparseVec LieAlgebra::br(const SparseVec& x, const SparseVec& y) const {
  Vec acc(dim());
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      const auto& t = bracket[a][b];
      if (t.empty()) continue;
      axpy(acc, ca * cb, t);
    }
  return exactnum::to_sparse(acc);
}

Vec LieAlgebra::br(const Vec& x, const Vec& y) const {
  return exactnum::to_dense(br(exactnum::to_sparse(x), exactnum::to_sparse(y)), dim());
}

Vec LieAlgebra::basis(std::size_t i) const {
  Vec v(dim());
  v[i] = Scalar(1);
  return v;
}

LieAlgebra empty_algebra(std::string name, std::vector<std::string> labels) {
  LieAlgebra g;
  g.name = std::move(name);
  g.labels = std::move(labels);
  g.bracket.assign(g.dim(), std::vector<SparseVec>(g.dim()));
  return g;
}

std::string format(const LieAlgebra& g, const SparseVec& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << g.labels[i];
  }
  return os.str();
}

std::string format(const LieAlgebra& g, const Vec& x) { return format(g, exactnum::to_sparse(x)); }

Report verify_antisymmetry(const LieAlgebra& g) {
  Report rep;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (!g.bracket[a][a].empty()) {
      rep.add(g.name + ".antisymmetry", false, "[" + g.labels[a] + "," + g.labels[a] + "] != 0");
      return rep;
    }
    for (std::size_t b = a + 1; b < g.dim(); ++b, ++pairs) {
      if (!sparse_add(g.bracket[a][b], Scalar(1), g.bracket[b][a]).empty()) {
        rep.add(g.name + ".antisymmetry", false, "[" + g.labels[a] + "," + g.labels[b] + "] + [" + g.labels[b] + "," +
                                                     g.labels[a] + "] != 0");
        return rep;
      }
    }
  }
  rep.add(g.name + ".antisymmetry", true, {}, {{"pairs", pairs}});
  return rep;
}

Report verify_jacobi(const LieAlgebra& g) {
  Report rep;
  const std::size_t n = g.dim();
  std::uint64_t triples = 0;
  Vec acc(n);
  auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    // [[a,b],c]
    for (const auto& [k, ck] : g.bracket[a][b])
      if (!g.bracket[k][c].empty()) axpy(acc, ck, g.bracket[k][c]);
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        ++triples;
        add_nested(a, b, c);
        add_nested(b, c, a);
        add_nested(c, a, b);
        bool bad = false;
        for (auto& s : acc)
          if (!s.is_zero()) {
            bad = true;
            break;
          }
        if (bad) {
          std::string w = "(" + g.labels[a] + ", " + g.labels[b] + ", " + g.labels[c] + ") -> " + format(g, acc);
          rep.add(g.name + ".jacobi", false, w, {{"triples_checked", triples}});
          return rep;
        }
      }
  rep.add(g.name + ".jacobi", true, {}, {{"triples", triples}});
  return rep;
}

nlohmann::json to_json(const LieAlgebra& g) {
  nlohmann::json br = nlohmann::json::object();
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (g.bracket[a][b].empty()) continue;
      nlohmann::json cell = nlohmann::json::object();
      for (const auto& [c, s] : g.bracket[a][b]) cell[std::to_string(c)] = s.to_json();
      br[std::to_string(a) + "," + std::to_string(b)] = std::move(cell);
    }
  return {{"name", g.name}, {"basis", g.labels}, {"brackets", br}};
}

LieAlgebra from_json(const nlohmann::json& j) {
  LieAlgebra g = empty_algebra(j.value("name", std::string()), j.at("basis").get<std::vector<std::string>>());
  for (const auto& [key, cell] : j.at("brackets").items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad bracket key " + key);
    std::size_t a = std::stoul(key.substr(0, comma)), b = std::stoul(key.substr(comma + 1));
    if (a >= g.dim() || b >= g.dim()) throw std::invalid_argument("bracket index out of range " + key);
    Vec v(g.dim());
    for (const auto& [c, s] : cell.items()) v.at(std::stoul(c)) = Scalar::from_json(s);
    g.bracket[a][b] = exactnum::to_sparse(v);
  }
  return g;
}

}  // namespace tkklab::lie
