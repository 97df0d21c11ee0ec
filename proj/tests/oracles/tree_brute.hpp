#pragma once

// Literal enumeration in the (q+1)-regular tree: fixator indices by counting
// embeddings, and tidy minima by visiting every subtree of a ball.

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "flatrank/tdlc.hpp"
#include "flatrank/tree.hpp"

namespace oracle {

using flatrank::TreeSpec;
using flatrank::TreeVertex;
using flatrank::VertexList;

/// Number of isometric embeddings of hull(A u B) into the tree that fix
/// hull(A) pointwise, found by trying every image vertex by vertex. Equals
/// the orbit of B under Fix(A), i.e. |Fix(A) : Fix(A) cap Fix(B)|.
inline std::uint64_t image_count(const TreeSpec& t, const VertexList& a, const VertexList& b) {
  const VertexList base = flatrank::hull(a);
  VertexList all = a;
  all.insert(b.begin(), b.end());
  const VertexList target = flatrank::hull(all);

  // Breadth-first order away from hull(A), each vertex with its parent.
  std::vector<std::pair<TreeVertex, TreeVertex>> order;
  std::set<TreeVertex> placed(base.begin(), base.end());
  std::deque<TreeVertex> queue(base.begin(), base.end());
  while (!queue.empty()) {
    const TreeVertex v = queue.front();
    queue.pop_front();
    for (const auto& nb : t.neighbours(v))
      if (target.count(nb) && !placed.count(nb)) {
        placed.insert(nb);
        order.push_back({nb, v});
        queue.push_back(nb);
      }
  }

  std::map<TreeVertex, TreeVertex> image;
  std::set<TreeVertex> used;
  for (const auto& v : base) {
    image[v] = v;
    used.insert(v);
  }
  std::uint64_t count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == order.size()) {
      ++count;
      return;
    }
    const auto& [v, parent] = order[i];
    for (const auto& c : t.neighbours(image.at(parent))) {
      if (used.count(c)) continue;
      image[v] = c;
      used.insert(c);
      place(i + 1);
      used.erase(c);
      image.erase(v);
    }
  };
  place(0);
  return count;
}

/// Calls `visit` on every nonempty subtree of the radius-r ball.
inline void for_each_subtree(const TreeSpec& t, int r, const std::function<void(const VertexList&)>& visit) {
  const auto ball = t.ball(r);
  auto children = [&](const TreeVertex& v) {
    std::vector<TreeVertex> out;
    for (const auto& nb : t.neighbours(v))
      if (nb.norm() == v.norm() + 1 && nb.norm() <= r) out.push_back(nb);
    return out;
  };
  VertexList current;
  std::function<void(std::vector<TreeVertex>)> grow = [&](std::vector<TreeVertex> frontier) {
    if (frontier.empty()) {
      visit(current);
      return;
    }
    const TreeVertex c = frontier.back();
    frontier.pop_back();
    grow(frontier);
    current.insert(c);
    auto more = frontier;
    for (auto& x : children(c)) more.push_back(std::move(x));
    grow(std::move(more));
    current.erase(c);
  };
  for (const auto& top : ball) {
    current = {top};
    grow(children(top));
  }
}

struct BruteTidy {
  flatrank::LogValue minimum;
  VertexList witness;
  std::uint64_t visited = 0;
};

/// Least co_distance(alpha F, F) over all subtrees F of the ball; witness is
/// the least minimiser of least size.
inline BruteTidy brute_tidy(const TreeSpec& t, const flatrank::TreeAut& alpha, int r) {
  BruteTidy best;
  bool have = false;
  for_each_subtree(t, r, [&](const VertexList& f) {
    ++best.visited;
    const auto d = flatrank::co_distance(t, alpha.apply(f), f);
    const bool better = !have || d < best.minimum ||
                        (d == best.minimum && (f.size() < best.witness.size() ||
                                               (f.size() == best.witness.size() && f < best.witness)));
    if (better) {
      best.minimum = d;
      best.witness = f;
      have = true;
    }
  });
  return best;
}

/// Scale from the limit formula: the ratio of consecutive indices
/// |alpha^n V : alpha^n V cap V| for V = Fix(v0), which is constant once the
/// translates leave the base vertex.
inline flatrank::LogValue::Int limit_scale(const TreeSpec& t, const flatrank::TreeAut& alpha, int n = 1) {
  const VertexList v0{flatrank::axis_vertex(0)};
  auto index = [&](int k) { return image_count(t, alpha.power(k).apply(v0), v0); };
  const auto a = index(n), b = index(n + 1);
  if (b % a != 0) return 0;
  return b / a;
}

}  // namespace oracle
