#pragma once

// Finite and affine irreducible Coxeter diagrams, recognised up to labelled
// graph isomorphism from their shape (path, cycle, star with three arms, ...).

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "flatrank/diagram.hpp"

namespace flatrank {

enum class FamilyKind {
  A, B, D, E, F, H, I2,
  AffineA, AffineB, AffineC, AffineD, AffineE, AffineF, AffineG,
};

/// An irreducible catalog type. `n` is the usual subscript (A_n, ~A_n, ...);
/// `m` is the dihedral label for I_2(m).
struct Family {
  FamilyKind kind;
  int n = 0;
  int m = 0;

  bool affine() const { return kind >= FamilyKind::AffineA; }

  std::string name() const {
    static constexpr std::array<const char*, 14> letters = {
        "A", "B", "D", "E", "F", "H", "I", "A", "B", "C", "D", "E", "F", "G"};
    std::string out = affine() ? "~" : "";
    out += letters[static_cast<int>(kind)];
    out += "_" + std::to_string(n);
    if (kind == FamilyKind::I2) out += "(" + std::to_string(m) + ")";
    return out;
  }

  /// Exponents m_1..m_n of a finite type; the Poincare polynomial is
  /// prod_i (1 + t + ... + t^{m_i}). Empty for affine types.
  std::vector<int> exponents() const {
    std::vector<int> e;
    switch (kind) {
      case FamilyKind::A:
        for (int i = 1; i <= n; ++i) e.push_back(i);
        break;
      case FamilyKind::B:
        for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
        break;
      case FamilyKind::D:
        for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
        e.push_back(n - 1);
        break;
      case FamilyKind::E:
        if (n == 6) e = {1, 4, 5, 7, 8, 11};
        if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
        if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
        break;
      case FamilyKind::F:
        e = {1, 5, 7, 11};
        break;
      case FamilyKind::H:
        if (n == 3) e = {1, 5, 9};
        if (n == 4) e = {1, 11, 19, 29};
        break;
      case FamilyKind::I2:
        e = {1, m - 1};
        break;
      default:
        break;
    }
    std::sort(e.begin(), e.end());
    return e;
  }

  friend bool operator==(const Family&, const Family&) = default;
};

namespace detail {

struct Shape {
  std::vector<Vertex> vertices;
  std::vector<std::vector<Vertex>> adjacent;  // indices into `vertices`
  int edge_count = 0;
};

inline Shape shape_of(const CoxeterDiagram& d, VertexSet subset) {
  Shape sh;
  sh.vertices = members(subset);
  const int k = static_cast<int>(sh.vertices.size());
  sh.adjacent.resize(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (d.joined(sh.vertices[i], sh.vertices[j])) {
        sh.adjacent[i].push_back(j);
        sh.adjacent[j].push_back(i);
        ++sh.edge_count;
      }
  return sh;
}

// Labels along a simple path starting at `start` (a leaf), plus visit order.
inline std::vector<int> walk_path(const CoxeterDiagram& d, const Shape& sh, int start,
                                  std::vector<int>* order = nullptr) {
  std::vector<int> labels;
  int prev = -1;
  int cur = start;
  if (order) order->push_back(cur);
  while (true) {
    int next = -1;
    for (int nb : sh.adjacent[cur])
      if (nb != prev) next = nb;
    if (next < 0) break;
    labels.push_back(d.label(sh.vertices[cur], sh.vertices[next]));
    if (order) order->push_back(next);
    prev = cur;
    cur = next;
  }
  return labels;
}

inline std::optional<Family> match_path(const CoxeterDiagram& d, const Shape& sh) {
  const int k = static_cast<int>(sh.vertices.size());
  int leaf = 0;
  while (sh.adjacent[leaf].size() != 1) ++leaf;
  std::vector<int> labels = walk_path(d, sh, leaf);

  if (k == 2) {
    const int m = labels[0];
    if (m == 3) return Family{FamilyKind::A, 2};
    if (m == 4) return Family{FamilyKind::B, 2};
    return Family{FamilyKind::I2, 2, m};
  }

  std::vector<int> odd_positions;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i] != 3) odd_positions.push_back(i);
  const int last = static_cast<int>(labels.size()) - 1;

  if (odd_positions.empty()) return Family{FamilyKind::A, k};

  if (odd_positions.size() == 1) {
    const int pos = odd_positions[0];
    const int m = labels[pos];
    if (pos == 0 || pos == last) {
      if (m == 4) return Family{FamilyKind::B, k};
      if (m == 5 && (k == 3 || k == 4)) return Family{FamilyKind::H, k};
      if (m == 6 && k == 3) return Family{FamilyKind::AffineG, 2};
      return std::nullopt;
    }
    if (m == 4 && k == 4) return Family{FamilyKind::F, 4};
    // o-o-o=o-o : labels 3,3,4,3 read from either end
    if (m == 4 && k == 5) return Family{FamilyKind::AffineF, 4};
    return std::nullopt;
  }

  if (odd_positions.size() == 2 && odd_positions[0] == 0 && odd_positions[1] == last &&
      labels[0] == 4 && labels[last] == 4)
    return Family{FamilyKind::AffineC, k - 1};
  return std::nullopt;
}

// Trees with a single vertex of degree 3.
inline std::optional<Family> match_star(const CoxeterDiagram& d, const Shape& sh, int centre) {
  const int k = static_cast<int>(sh.vertices.size());
  struct Arm {
    int length;
    std::vector<int> labels;  // from the centre outwards
  };
  std::vector<Arm> arms;
  for (int first : sh.adjacent[centre]) {
    Arm arm{0, {}};
    int prev = centre;
    int cur = first;
    arm.labels.push_back(d.label(sh.vertices[centre], sh.vertices[cur]));
    arm.length = 1;
    while (true) {
      int next = -1;
      for (int nb : sh.adjacent[cur])
        if (nb != prev) next = nb;
      if (next < 0) break;
      arm.labels.push_back(d.label(sh.vertices[cur], sh.vertices[next]));
      ++arm.length;
      prev = cur;
      cur = next;
    }
    arms.push_back(std::move(arm));
  }
  std::sort(arms.begin(), arms.end(), [](const Arm& a, const Arm& b) { return a.length < b.length; });

  int non_three = 0;
  for (const Arm& arm : arms)
    for (int m : arm.labels)
      if (m != 3) ++non_three;

  const int a = arms[0].length, b = arms[1].length, c = arms[2].length;
  if (non_three == 0) {
    if (a == 1 && b == 1) return Family{FamilyKind::D, k};
    if (a == 1 && b == 2 && c >= 2 && c <= 4) return Family{FamilyKind::E, k};
    if (a == 2 && b == 2 && c == 2) return Family{FamilyKind::AffineE, 6};
    if (a == 1 && b == 3 && c == 3) return Family{FamilyKind::AffineE, 7};
    if (a == 1 && b == 2 && c == 5) return Family{FamilyKind::AffineE, 8};
    return std::nullopt;
  }
  // ~B_n: a fork of two leaves, then a path ending in a 4-edge.
  if (non_three == 1 && a == 1 && b == 1 && arms[2].labels.back() == 4)
    return Family{FamilyKind::AffineB, k - 1};
  if (non_three == 1 && a == 1 && b == 1 && c == 1) {
    for (const Arm& arm : arms)
      if (arm.labels.back() == 4) return Family{FamilyKind::AffineB, k - 1};
  }
  return std::nullopt;
}

}  // namespace detail

/// Catalog type of an irreducible subset, or nullopt when it is neither
/// finite nor affine. `subset` must be connected in the diagram.
inline std::optional<Family> match_irreducible(const CoxeterDiagram& d, VertexSet subset) {
  const detail::Shape sh = detail::shape_of(d, subset);
  const int k = static_cast<int>(sh.vertices.size());
  if (k == 0) return std::nullopt;
  if (k == 1) return Family{FamilyKind::A, 1};

  bool any_infinite = false;
  for (Vertex s : sh.vertices)
    for (Vertex t : sh.vertices)
      if (d.infinite(s, t)) any_infinite = true;
  if (any_infinite) {
    if (k == 2) return Family{FamilyKind::AffineA, 1};
    return std::nullopt;
  }

  if (sh.edge_count == k) {
    for (int i = 0; i < k; ++i) {
      if (sh.adjacent[i].size() != 2) return std::nullopt;
      for (int j : sh.adjacent[i])
        if (d.label(sh.vertices[i], sh.vertices[j]) != 3) return std::nullopt;
    }
    return Family{FamilyKind::AffineA, k - 1};
  }
  if (sh.edge_count != k - 1) return std::nullopt;

  std::vector<int> branch;
  std::size_t max_degree = 0;
  for (int i = 0; i < k; ++i) {
    max_degree = std::max(max_degree, sh.adjacent[i].size());
    if (sh.adjacent[i].size() >= 3) branch.push_back(i);
  }
  if (max_degree <= 2) return detail::match_path(d, sh);

  auto all_three = [&] {
    for (int i = 0; i < k; ++i)
      for (int j : sh.adjacent[i])
        if (d.label(sh.vertices[i], sh.vertices[j]) != 3) return false;
    return true;
  };

  if (max_degree == 4) {
    if (k == 5 && all_three()) return Family{FamilyKind::AffineD, 4};
    return std::nullopt;
  }
  if (branch.size() == 1) return detail::match_star(d, sh, branch[0]);
  if (branch.size() == 2 && all_three()) {
    for (int centre : branch) {
      int leaves = 0;
      for (int nb : sh.adjacent[centre])
        if (sh.adjacent[nb].size() == 1) ++leaves;
      if (leaves != 2) return std::nullopt;
    }
    return Family{FamilyKind::AffineD, k - 1};
  }
  return std::nullopt;
}

}  // namespace flatrank
