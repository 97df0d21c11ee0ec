#pragma once

// Chamber combinatorics of a locally finite building with thickness q_s + 1:
// stabiliser indices prod q_{s_j}, the induced chamber metric, ball masses,
// and the (q_s + 1, q_t + 1)-biregular tree as a concrete building of type
// D_infinity.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "flatrank/coxeter.hpp"
#include "flatrank/diagram.hpp"
#include "flatrank/error.hpp"
#include "flatrank/logvalue.hpp"
#include "flatrank/polynomial.hpp"
#include "flatrank/roots.hpp"

namespace flatrank {

/// q_s for every generator s; constant on classes of generators joined by
/// odd labels, since those are conjugate.
class ThicknessAssignment {
 public:
  ThicknessAssignment(const CoxeterDiagram& d, std::vector<std::int64_t> q) : q_(std::move(q)) {
    if (static_cast<int>(q_.size()) != d.rank()) throw DomainError("thickness needs one value per generator");
    for (auto v : q_)
      if (v < 1) throw DomainError("thickness values must be >= 1");
    for (VertexSet cls : odd_components(d))
      for (Vertex s : members(cls))
        if (q_[s] != q_[lowest(cls)])
          throw DomainError("thickness differs on generators " + d.name(lowest(cls)) + " and " + d.name(s) +
                            ", which are joined by odd labels");
  }

  static ThicknessAssignment uniform(const CoxeterDiagram& d, std::int64_t q) {
    return ThicknessAssignment(d, std::vector<std::int64_t>(d.rank(), q));
  }

  /// "name=value,..." or a single integer for every generator. A value given
  /// for one generator applies to its whole odd class; conflicting values and
  /// uncovered classes are errors.
  static ThicknessAssignment parse(const CoxeterDiagram& d, const std::string& text) {
    if (text.find('=') == std::string::npos) {
      const auto v = detail::parse_integer(text);
      if (!v) throw ParseError("bad thickness '" + text + "'");
      return uniform(d, *v);
    }
    std::vector<std::int64_t> q(d.rank(), 0);
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("bad thickness entry '" + item + "'");
      const std::string name = item.substr(0, eq);
      const auto v = detail::parse_integer(item.substr(eq + 1));
      if (!v || *v < 1) throw ParseError("bad thickness value in '" + item + "'");
      Vertex found = -1;
      for (Vertex s = 0; s < d.rank(); ++s)
        if (d.name(s) == name) found = s;
      if (found < 0) throw ParseError("unknown generator '" + name + "' in thickness");
      for (VertexSet cls : odd_components(d)) {
        if (!contains(cls, found)) continue;
        for (Vertex s : members(cls)) {
          if (q[s] != 0 && q[s] != *v)
            throw DomainError("conflicting thickness for the odd class of " + d.name(s));
          q[s] = *v;
        }
      }
    }
    for (Vertex s = 0; s < d.rank(); ++s)
      if (q[s] == 0) throw ParseError("no thickness given for generator " + d.name(s));
    return ThicknessAssignment(d, std::move(q));
  }

  std::int64_t operator[](Vertex s) const { return q_[s]; }
  const std::vector<std::int64_t>& values() const { return q_; }

 private:
  std::vector<std::int64_t> q_;
};

inline BigInt word_weight(const ThicknessAssignment& q, const Word& w) {
  BigInt out = 1;
  for (auto s : w) out *= q[s];
  return out;
}

/// |G_c : G_c cap G_c'| for chambers at W-distance w: prod q_{s_j} over a
/// reduced expression. With `verify` every reduced expression is checked
/// (lengths up to 16).
inline BigInt q_of_element(const CoxeterDiagram& d, const ThicknessAssignment& q, const Element& w,
                           bool verify = true) {
  const BigInt value = word_weight(q, w.word());
  if (verify && w.length() <= 16)
    for (const Word& e : reduced_expressions(d, w))
      if (word_weight(q, e) != value) throw InternalError("q_w depends on the reduced expression");
  return value;
}

/// log(|G_c : G_c cap G_c'| * |G_c' : G_c' cap G_c|) = 2 log q_w.
inline LogValue chamber_distance(const CoxeterDiagram& d, const ThicknessAssignment& q, const Element& w) {
  const BigInt one_way = q_of_element(d, q, w);
  const BigInt other_way = q_of_element(d, q, inverse(d, w));
  if (one_way != other_way) throw InternalError("stabiliser indices differ in the two directions");
  return LogValue(one_way * other_way);
}

/// Number of chambers within gallery distance n: sum of q_w over l(w) <= n,
/// by dynamic programming over the ShortLex automaton.
inline BigInt ball_mass(const CoxeterDiagram& d, const ThicknessAssignment& q, int n) {
  if (n < 0) throw DomainError("negative gallery radius");
  ShortLexAutomaton automaton(d);
  BigInt total = 1;
  std::map<int, BigInt> layer{{automaton.start(), 1}};
  for (int len = 1; len <= n; ++len) {
    std::map<int, BigInt> next;
    for (const auto& [state, mass] : layer)
      for (Vertex s = 0; s < d.rank(); ++s) {
        const int to = automaton.next(state, s);
        if (to == ShortLexAutomaton::kReject) continue;
        const BigInt m = mass * q[s];
        next[to] += m;
        total += m;
      }
    layer = std::move(next);
  }
  return total;
}

/// The tree in which every vertex of colour s has q_s + 1 neighbours of
/// colour t and vice versa. Chambers are edges; two chambers are s-adjacent
/// when they share their s-coloured endpoint. Built out to `radius` galleries
/// from the base chamber.
class BiregularTreeBuilding {
 public:
  BiregularTreeBuilding(std::int64_t q_s, std::int64_t q_t, int radius) : q_{q_s, q_t} {
    if (q_s < 1 || q_t < 1) throw DomainError("thickness values must be >= 1");
    if (radius < 0 || radius > 12) throw ResourceError("biregular tree radius must be in 0..12");
    // Vertex 0 has colour s, vertex 1 colour t; edge 0 is the base chamber.
    add_vertex(0);
    add_vertex(1);
    connect(0, 1);
    std::vector<int> frontier{0, 1};
    for (int level = 0; level < radius; ++level) {
      std::vector<int> next;
      for (int v : frontier) {
        const int colour = colour_[v];
        while (static_cast<std::int64_t>(adjacent_[v].size()) < q_[colour] + 1) {
          const int w = add_vertex(1 - colour);
          connect(v, w);
          next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
  }

  int chamber_count() const { return static_cast<int>(edges_.size()); }

  /// Chambers sharing the colour-`type` endpoint with `chamber`.
  std::vector<int> panel_neighbours(int chamber, int type) const {
    const auto [a, b] = edges_[chamber];
    const int v = colour_[a] == type ? a : b;
    std::vector<int> out;
    for (int e : incident_[v])
      if (e != chamber) out.push_back(e);
    return out;
  }

  /// Number of chambers whose minimal gallery from the base chamber has type
  /// w, keyed by the type word over {0 = s, 1 = t}.
  std::map<Word, std::int64_t> chambers_by_distance(int max_length) const {
    std::map<Word, std::int64_t> out;
    std::vector<Word> type(edges_.size());
    std::vector<bool> seen(edges_.size(), false);
    std::vector<int> layer{0};
    seen[0] = true;
    out[Word{}] = 1;
    for (int len = 1; len <= max_length; ++len) {
      std::vector<int> next;
      for (int c : layer)
        for (int colour = 0; colour < 2; ++colour)
          for (int e : panel_neighbours(c, colour)) {
            if (seen[e]) continue;
            seen[e] = true;
            type[e] = type[c];
            type[e].push_back(static_cast<std::uint8_t>(colour));
            ++out[type[e]];
            next.push_back(e);
          }
      layer = std::move(next);
    }
    return out;
  }

  /// Galleries c_0 = base, c_1, ..., c_n with c_{j-1} != c_j s_{f_j}-adjacent.
  std::int64_t gallery_count(const Word& f) const {
    std::int64_t count = 0;
    walk(0, f, 0, count);
    return count;
  }

 private:
  int add_vertex(int colour) {
    colour_.push_back(colour);
    adjacent_.emplace_back();
    incident_.emplace_back();
    return static_cast<int>(colour_.size()) - 1;
  }

  void connect(int a, int b) {
    adjacent_[a].push_back(b);
    adjacent_[b].push_back(a);
    edges_.push_back({a, b});
    incident_[a].push_back(static_cast<int>(edges_.size()) - 1);
    incident_[b].push_back(static_cast<int>(edges_.size()) - 1);
  }

  void walk(int chamber, const Word& f, std::size_t j, std::int64_t& count) const {
    if (j == f.size()) {
      ++count;
      return;
    }
    for (int e : panel_neighbours(chamber, f[j])) walk(e, f, j + 1, count);
  }

  std::int64_t q_[2];
  std::vector<int> colour_;
  std::vector<std::vector<int>> adjacent_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace flatrank
