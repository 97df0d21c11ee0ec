#pragma once

// The (q+1)-regular tree in axis coordinates, finite subtrees, and the index
// |Fix(A) : Fix(B)| for finite subtrees A within B.
//
// A vertex is (axis index i, off-axis path p). The base axis is the line
// (i, []); the base vertex is (0, []). p[0] ranges over 0..q-2 (the q-1
// off-axis neighbours of an axis vertex), deeper entries over 0..q-1.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "flatrank/error.hpp"
#include "flatrank/logvalue.hpp"

namespace flatrank {

struct TreeVertex {
  int axis = 0;
  std::vector<std::uint8_t> path;

  int depth() const { return static_cast<int>(path.size()); }
  /// Distance to the base vertex.
  int norm() const { return std::abs(axis) + depth(); }

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  /// Nearer the base vertex first, then the positive side of the axis.
  friend bool operator<(const TreeVertex& a, const TreeVertex& b) {
    return std::make_tuple(a.norm(), std::abs(a.axis), a.axis < 0, a.path) <
           std::make_tuple(b.norm(), std::abs(b.axis), b.axis < 0, b.path);
  }

  std::string to_string() const {
    std::string out = "(" + std::to_string(axis);
    if (!path.empty()) {
      out += ";";
      for (std::size_t i = 0; i < path.size(); ++i) out += (i ? "." : "") + std::to_string(path[i]);
    }
    return out + ")";
  }
};

inline TreeVertex axis_vertex(int i) { return {i, {}}; }

using VertexList = std::set<TreeVertex>;

struct TreeSpec {
  int q = 2;
  /// Radius of the ball around the base vertex that every subtree must lie in.
  int depth = 8;

  void validate() const {
    if (q < 2) throw DomainError("tree valence needs q >= 2");
    if (depth < 0) throw DomainError("negative tree depth");
    if (depth > 8) throw ResourceError("tree depth cap is 8");
  }

  bool valid_vertex(const TreeVertex& v) const {
    for (std::size_t k = 0; k < v.path.size(); ++k)
      if (v.path[k] >= (k == 0 ? q - 1 : q)) return false;
    return true;
  }

  std::vector<TreeVertex> neighbours(const TreeVertex& v) const {
    std::vector<TreeVertex> out;
    if (v.path.empty()) {
      out.push_back(axis_vertex(v.axis - 1));
      out.push_back(axis_vertex(v.axis + 1));
      for (int c = 0; c < q - 1; ++c) out.push_back({v.axis, {static_cast<std::uint8_t>(c)}});
    } else {
      TreeVertex parent = v;
      parent.path.pop_back();
      out.push_back(std::move(parent));
      for (int c = 0; c < q; ++c) {
        TreeVertex child = v;
        child.path.push_back(static_cast<std::uint8_t>(c));
        out.push_back(std::move(child));
      }
    }
    return out;
  }

  /// All vertices within distance r of the base vertex.
  std::vector<TreeVertex> ball(int r) const {
    std::vector<TreeVertex> out;
    for (int i = -r; i <= r; ++i) {
      std::vector<TreeVertex> layer{axis_vertex(i)};
      for (int h = 0; h + std::abs(i) <= r; ++h) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<TreeVertex> next;
        for (const auto& v : layer)
          for (int c = 0; c < (h == 0 ? q - 1 : q); ++c) {
            TreeVertex child = v;
            child.path.push_back(static_cast<std::uint8_t>(c));
            next.push_back(std::move(child));
          }
        layer = std::move(next);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline int tree_distance(const TreeVertex& u, const TreeVertex& v) {
  if (u.axis != v.axis) return std::abs(u.axis - v.axis) + u.depth() + v.depth();
  std::size_t common = 0;
  while (common < u.path.size() && common < v.path.size() && u.path[common] == v.path[common]) ++common;
  return u.depth() + v.depth() - 2 * static_cast<int>(common);
}

/// Vertices on the geodesic from u to v, both ends included.
inline std::vector<TreeVertex> geodesic(const TreeVertex& u, const TreeVertex& v) {
  std::size_t common = 0;
  if (u.axis == v.axis)
    while (common < u.path.size() && common < v.path.size() && u.path[common] == v.path[common]) ++common;
  std::vector<TreeVertex> out;
  TreeVertex x = u;
  while (x.path.size() > common) {
    out.push_back(x);
    x.path.pop_back();
  }
  const int step = v.axis > u.axis ? 1 : -1;
  for (; x.axis != v.axis; x.axis += step) out.push_back(x);
  // Climb from v to the meeting point, then reverse onto the output.
  std::vector<TreeVertex> down;
  TreeVertex y = v;
  while (y.path.size() > common) {
    down.push_back(y);
    y.path.pop_back();
  }
  out.push_back(y);
  out.insert(out.end(), down.rbegin(), down.rend());
  return out;
}

/// Smallest subtree containing the given vertices.
inline VertexList hull(const VertexList& vertices) {
  VertexList out;
  if (vertices.empty()) return out;
  const TreeVertex& root = *vertices.begin();
  for (const auto& v : vertices)
    for (auto& x : geodesic(root, v)) out.insert(std::move(x));
  return out;
}

namespace detail {

inline std::uint64_t falling(std::uint64_t n, std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= n - i;
  return out;
}

inline int degree_in(const TreeSpec& t, const VertexList& set, const TreeVertex& v) {
  int d = 0;
  for (const auto& nb : t.neighbours(v)) d += static_cast<int>(set.count(nb));
  return d;
}

}  // namespace detail

/// |Fix(A) : Fix(B)| for subtrees A within B in the full automorphism group:
/// the number of ways to re-embed B \ A around A. Working outward from A, a
/// vertex p of A offers q+1-deg_A(p) free slots to its new neighbours, and a
/// new vertex offers q (its parent slot is taken).
inline LogValue::Int extension_count(const TreeSpec& t, const VertexList& a, const VertexList& b) {
  LogValue::Int out = 1;
  for (const auto& p : b) {
    const int deg_b = detail::degree_in(t, b, p);
    if (a.count(p)) {
      const int deg_a = detail::degree_in(t, a, p);
      out *= detail::falling(t.q + 1 - deg_a, deg_b - deg_a);
    } else {
      out *= detail::falling(t.q, deg_b - 1);
    }
  }
  return out;
}

/// |Fix(F) : Fix(F) cap Fix(F2)|.
inline LogValue::Int fixator_index(const TreeSpec& t, const VertexList& f, const VertexList& f2) {
  VertexList both = f;
  both.insert(f2.begin(), f2.end());
  return extension_count(t, hull(f), hull(both));
}

/// d(Fix F, Fix F2) = log(|V : V cap W| * |W : W cap V|).
inline LogValue co_distance(const TreeSpec& t, const VertexList& f, const VertexList& f2) {
  return LogValue(fixator_index(t, f, f2) * fixator_index(t, f2, f));
}

inline void check_in_ball(const TreeSpec& t, const VertexList& f, const char* what) {
  for (const auto& v : f) {
    if (!t.valid_vertex(v)) throw DomainError(std::string(what) + ": invalid vertex " + v.to_string());
    if (v.norm() > t.depth)
      throw ResourceError(std::string(what) + ": vertex " + v.to_string() + " lies outside the depth-" +
                          std::to_string(t.depth) + " ball");
  }
}

inline std::string to_string(const VertexList& f) {
  std::string out = "{";
  for (const auto& v : f) out += (out.size() > 1 ? " " : "") + v.to_string();
  return out + "}";
}

}  // namespace flatrank
