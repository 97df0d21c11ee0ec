#pragma once

// Coxeter diagrams: storage, the text file format, and the combinatorial
// predicates on vertex subsets (components, perpendicularity, odd classes).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flatrank/error.hpp"

namespace flatrank {

using Vertex = int;
/// Bitmask over the vertices of a diagram (bit i = vertex i, 0-based).
using VertexSet = std::uint32_t;

inline constexpr int kMaxRank = 16;
/// Edge label sentinel for m_st = infinity. Never compared as a number.
inline constexpr int kInfinity = 0;

inline bool contains(VertexSet set, Vertex v) { return (set >> v) & 1U; }
inline VertexSet singleton(Vertex v) { return VertexSet{1} << v; }
inline int cardinality(VertexSet set) { return std::popcount(set); }
inline Vertex lowest(VertexSet set) { return std::countr_zero(set); }

inline std::vector<Vertex> members(VertexSet set) {
  std::vector<Vertex> out;
  for (; set != 0; set &= set - 1) out.push_back(lowest(set));
  return out;
}

struct Edge {
  Vertex s;
  Vertex t;
  int m;  // >= 2, or kInfinity
};

/// Symmetric matrix of labels m_st over a fixed vertex order. Immutable.
class CoxeterDiagram {
 public:
  explicit CoxeterDiagram(int rank, std::span<const Edge> edges = {},
                          std::vector<std::string> names = {})
      : rank_(rank), labels_(static_cast<std::size_t>(rank) * rank, 2), names_(std::move(names)) {
    if (rank < 1 || rank > kMaxRank)
      throw DomainError("diagram rank must be in 1.." + std::to_string(kMaxRank));
    for (Vertex s = 0; s < rank; ++s) labels_[index(s, s)] = 1;
    std::vector<bool> seen(labels_.size(), false);
    for (const Edge& e : edges) {
      if (e.s < 0 || e.s >= rank || e.t < 0 || e.t >= rank || e.s == e.t)
        throw DomainError("edge endpoints out of range");
      if (e.m != kInfinity && e.m < 2) throw DomainError("edge label below 2");
      if (seen[index(e.s, e.t)]) throw DomainError("duplicate edge");
      seen[index(e.s, e.t)] = seen[index(e.t, e.s)] = true;
      labels_[index(e.s, e.t)] = labels_[index(e.t, e.s)] = e.m;
    }
    if (names_.empty())
      for (Vertex s = 0; s < rank; ++s) names_.push_back(std::to_string(s + 1));
    if (static_cast<int>(names_.size()) != rank) throw DomainError("name count differs from rank");
  }

  int rank() const { return rank_; }
  VertexSet all() const { return rank_ == 32 ? ~VertexSet{0} : (VertexSet{1} << rank_) - 1; }

  /// m_st; 1 on the diagonal, kInfinity for an infinite label.
  int label(Vertex s, Vertex t) const { return labels_[index(s, t)]; }
  bool infinite(Vertex s, Vertex t) const { return s != t && label(s, t) == kInfinity; }
  /// s and t are joined in the diagram (m_st >= 3 or infinite).
  bool joined(Vertex s, Vertex t) const { return s != t && label(s, t) != 2; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex s) const { return names_[s]; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex s = 0; s < rank_; ++s)
      for (Vertex t = s + 1; t < rank_; ++t)
        if (joined(s, t)) out.push_back({s, t, label(s, t)});
    return out;
  }

  /// Vertices joined to some member of `set` (excluding `set` itself).
  VertexSet neighbourhood(VertexSet set) const {
    VertexSet out = 0;
    for (Vertex s : members(set))
      for (Vertex t = 0; t < rank_; ++t)
        if (joined(s, t)) out |= singleton(t);
    return out & ~set;
  }

  /// Serializes in the diagram file format; parse_diagram(to_text()) == *this.
  std::string to_text() const {
    std::ostringstream out;
    out << "rank " << rank_ << '\n';
    for (Vertex s = 0; s < rank_; ++s)
      if (names_[s] != std::to_string(s + 1)) out << "name " << s + 1 << ' ' << names_[s] << '\n';
    for (const Edge& e : edges())
      out << "edge " << e.s + 1 << ' ' << e.t + 1 << ' '
          << (e.m == kInfinity ? std::string("inf") : std::to_string(e.m)) << '\n';
    return out.str();
  }

  friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;

 private:
  std::size_t index(Vertex s, Vertex t) const {
    return static_cast<std::size_t>(s) * rank_ + static_cast<std::size_t>(t);
  }

  int rank_;
  std::vector<int> labels_;
  std::vector<std::string> names_;
};

namespace detail {

inline std::vector<std::string> split_statements(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  bool comment = false;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(current);
      current.clear();
      comment = false;
    } else if (comment) {
      continue;
    } else if (c == '#') {
      comment = true;
    } else if (c == ';') {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

inline std::optional<long> parse_integer(const std::string& token) {
  if (token.empty()) return std::nullopt;
  std::size_t pos = 0;
  try {
    long v = std::stol(token, &pos);
    if (pos != token.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Parses the diagram file format:
///   rank N            (first statement, 1 <= N <= 16)
///   edge i j m        (m an integer >= 2, or `inf`; absent pairs mean m = 2)
///   name i LABEL
/// Statements are separated by newlines or `;`, `#` starts a comment.
/// Vertices are 1-based indices or previously declared names.
inline CoxeterDiagram parse_diagram(std::string_view text) {
  std::optional<int> rank;
  std::vector<Edge> edges;
  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> by_name;
  int statement_no = 0;

  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("statement " + std::to_string(statement_no) + ": " + msg);
  };
  auto vertex = [&](const std::string& token) -> Vertex {
    if (auto it = by_name.find(token); it != by_name.end()) return it->second;
    auto v = detail::parse_integer(token);
    if (!v || *v < 1 || *v > *rank) throw fail("unknown vertex '" + token + "'");
    return static_cast<Vertex>(*v - 1);
  };

  for (const std::string& raw : detail::split_statements(text)) {
    ++statement_no;
    std::istringstream in(raw);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "rank") {
      if (rank) throw fail("rank declared twice");
      if (tok.size() != 2) throw fail("expected 'rank N'");
      auto n = detail::parse_integer(tok[1]);
      if (!n || *n < 1) throw fail("rank must be a positive integer");
      if (*n > kMaxRank)
        throw ResourceError("statement " + std::to_string(statement_no) + ": rank " + tok[1] + " exceeds the cap of " +
                            std::to_string(kMaxRank));
      rank = static_cast<int>(*n);
      for (int s = 0; s < *rank; ++s) names.push_back(std::to_string(s + 1));
      continue;
    }
    if (!rank) throw fail("'rank N' must come first");

    if (tok[0] == "edge") {
      if (tok.size() != 4) throw fail("expected 'edge i j m'");
      Vertex s = vertex(tok[1]);
      Vertex t = vertex(tok[2]);
      if (s == t) throw fail("edge joins a vertex to itself");
      int m = kInfinity;
      if (tok[3] != "inf") {
        auto value = detail::parse_integer(tok[3]);
        if (!value) throw fail("bad edge label '" + tok[3] + "'");
        if (*value < 2) throw fail("edge label " + tok[3] + " is below 2");
        if (*value > 1'000'000) throw fail("edge label " + tok[3] + " is too large");
        m = static_cast<int>(*value);
      }
      for (const Edge& e : edges)
        if ((e.s == s && e.t == t) || (e.s == t && e.t == s)) throw fail("duplicate edge");
      edges.push_back({s, t, m});
    } else if (tok[0] == "name") {
      if (tok.size() != 3) throw fail("expected 'name i LABEL'");
      auto v = detail::parse_integer(tok[1]);
      if (!v || *v < 1 || *v > *rank) throw fail("unknown vertex '" + tok[1] + "'");
      if (detail::parse_integer(tok[2]) || tok[2] == "inf") throw fail("vertex names must not be numbers");
      if (by_name.contains(tok[2])) throw fail("duplicate name '" + tok[2] + "'");
      by_name[tok[2]] = static_cast<Vertex>(*v - 1);
      names[*v - 1] = tok[2];
    } else {
      throw fail("unknown statement '" + tok[0] + "'");
    }
  }
  if (!rank) throw ParseError("missing 'rank N' statement");
  return CoxeterDiagram(*rank, edges, std::move(names));
}

/// Connected components of the subgraph induced on `subset` by the edges
/// with m_st >= 3 (including infinity), ordered by lowest vertex.
inline std::vector<VertexSet> irreducible_components(const CoxeterDiagram& d, VertexSet subset) {
  std::vector<VertexSet> out;
  VertexSet remaining = subset & d.all();
  while (remaining != 0) {
    VertexSet component = singleton(lowest(remaining));
    VertexSet frontier = component;
    while (frontier != 0) {
      VertexSet grown = (d.neighbourhood(frontier) & remaining) & ~component;
      component |= grown;
      frontier = grown;
    }
    out.push_back(component);
    remaining &= ~component;
  }
  return out;
}

inline bool is_irreducible(const CoxeterDiagram& d, VertexSet subset) {
  return subset != 0 && irreducible_components(d, subset).size() == 1;
}

/// Disjoint, and every cross label equals 2.
inline bool perpendicular(const CoxeterDiagram& d, VertexSet a, VertexSet b) {
  if ((a & b) != 0) return false;
  return (d.neighbourhood(a) & b) == 0;
}

/// Classes of the equivalence generated by s ~ t when m_st is odd (finite).
/// Generators in one class are conjugate in W.
inline std::vector<VertexSet> odd_components(const CoxeterDiagram& d) {
  std::vector<int> parent(d.rank());
  for (int i = 0; i < d.rank(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : d.edges())
    if (e.m != kInfinity && e.m % 2 == 1) parent[find(e.s)] = find(e.t);
  std::vector<VertexSet> classes;
  std::vector<int> slot(d.rank(), -1);
  for (Vertex v = 0; v < d.rank(); ++v) {
    int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(classes.size());
      classes.push_back(0);
    }
    classes[slot[root]] |= singleton(v);
  }
  return classes;
}

}  // namespace flatrank
