#pragma once

// Tree automorphisms acting on subtree fixators: displacement, tidy search,
// scale, modular function, the tidying procedure, and flat subgroups of
// finite products of trees.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flatrank/error.hpp"
#include "flatrank/logvalue.hpp"
#include "flatrank/polynomial.hpp"
#include "flatrank/tree.hpp"

namespace flatrank {

/// Translation by `length` along the base axis, reflection of the axis about
/// axis vertex `centre` (fixing every vertex hanging there), or the identity.
struct TreeAut {
  enum class Kind { Translation, Reflection, Identity };
  Kind kind = Kind::Identity;
  int length = 0;
  int centre = 0;

  static TreeAut translation(int length) {
    if (length == 0) return identity();
    return {Kind::Translation, length, 0};
  }
  static TreeAut reflection(int centre) { return {Kind::Reflection, 0, centre}; }
  static TreeAut identity() { return {}; }

  bool elliptic() const { return kind != Kind::Translation; }

  TreeVertex apply(const TreeVertex& v) const {
    switch (kind) {
      case Kind::Translation: return {v.axis + length, v.path};
      case Kind::Reflection: return {2 * centre - v.axis, v.path};
      case Kind::Identity: break;
    }
    return v;
  }

  VertexList apply(const VertexList& f) const {
    VertexList out;
    for (const auto& v : f) out.insert(apply(v));
    return out;
  }

  TreeAut inverse() const { return kind == Kind::Translation ? translation(-length) : *this; }

  TreeAut power(int n) const {
    switch (kind) {
      case Kind::Translation: return translation(n * length);
      case Kind::Reflection: return n % 2 == 0 ? identity() : *this;
      case Kind::Identity: break;
    }
    return *this;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Translation: return "translation(" + std::to_string(length) + ")";
      case Kind::Reflection: return "reflection(" + std::to_string(centre) + ")";
      case Kind::Identity: break;
    }
    return "identity";
  }

  friend bool operator==(const TreeAut&, const TreeAut&) = default;
};

/// d(alpha(Fix F), Fix F).
inline LogValue displacement(const TreeSpec& t, const TreeAut& alpha, const VertexList& f) {
  if (f.empty()) throw DomainError("displacement of an empty subtree");
  check_in_ball(t, f, "displacement");
  const VertexList image = alpha.apply(f);
  check_in_ball(t, image, "displacement image");
  return co_distance(t, image, f);
}

struct TidyResult {
  LogValue minimum;
  VertexList witness;
};

namespace detail {

using Cost = std::uint64_t;
inline constexpr Cost kSaturated = std::numeric_limits<Cost>::max();

inline Cost saturating_mul(Cost a, Cost b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

struct Value {
  Cost cost = kSaturated;
  int size = 0;
  friend bool operator==(const Value&, const Value&) = default;
  friend bool operator<(const Value& a, const Value& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.size < b.size;
  }
};

/// Exact minimiser of displacement for a translation by ell > 0 over the
/// subtrees of the depth-D ball.
///
/// A subtree missing the axis has displacement at least (2 ell + 2) log q: the
/// geodesic from its nearest vertex to the translate's leaves q choices at
/// every step but the first, on either side. So only subtrees meeting the axis
/// in some [a, b] compete. For those, the index formula factorises over the
/// vertices of U = hull(F u alpha F). An off-axis vertex contributes a factor
/// >= 1 that is exactly 1 when it is a leaf, so minimisers (and all minimisers
/// of least size) consist of [a, b] plus depth-1 leaves. The axis vertex at k
/// then depends on which depth-1 leaves F has at k and at k - ell: a chain DP
/// per residue class of k modulo ell, with 2^(q-1) states per position.
class TranslationTidySearch {
 public:
  TranslationTidySearch(int q, int ell, int depth) : q_(q), ell_(ell), depth_(depth) {
    if (ell <= 0) throw InternalError("TranslationTidySearch needs ell > 0");
    if (q - 1 > 8) throw ResourceError("tidy search supports q <= 9");
    states_ = 1 << (q - 1);
  }

  /// Least (cost, size) and every configuration achieving it.
  std::pair<Value, std::vector<VertexList>> run() const {
    Value best;
    for (int a = -depth_; a <= depth_; ++a)
      for (int b = a; b <= depth_; ++b) best = std::min(best, segment_value(a, b));
    std::vector<VertexList> minimisers;
    for (int a = -depth_; a <= depth_; ++a)
      for (int b = a; b <= depth_; ++b)
        if (segment_value(a, b) == best) collect(a, b, minimisers);
    return {best, minimisers};
  }

 private:
  struct Chain {
    std::vector<int> positions;
    // table[t][s]: best value of the prefix ending in state s at position t.
    std::vector<std::vector<Value>> table;
  };

  bool in_f(int p, int a, int b) const { return p >= a && p <= b; }
  bool allowed(int p, int s, int a, int b) const {
    return s == 0 || (in_f(p, a, b) && std::abs(p) + 1 <= depth_);
  }

  Cost term(int p, int cur, int prev, int a, int b) const {
    const int n = std::popcount(static_cast<unsigned>(cur));
    const int n_prev = std::popcount(static_cast<unsigned>(prev));
    const int u = std::popcount(static_cast<unsigned>(cur | prev));
    auto inside = [](int x, int lo, int hi) { return x >= lo && x <= hi ? 1 : 0; };
    const int deg_u = inside(p - 1, a, b + ell_) + inside(p + 1, a, b + ell_) + u;
    auto side = [&](int lo, int hi, int own) -> Cost {
      if (p < lo || p > hi) return falling(q_, deg_u - 1);
      const int deg = inside(p - 1, lo, hi) + inside(p + 1, lo, hi) + own;
      return falling(q_ + 1 - deg, deg_u - deg);
    };
    return saturating_mul(side(a, b, n), side(a + ell_, b + ell_, n_prev));
  }

  Chain chain(int start, int a, int b) const {
    Chain c;
    for (int p = start; p <= b + ell_; p += ell_) c.positions.push_back(p);
    std::vector<Value> prev(states_);
    prev[0] = {1, 0};
    for (int p : c.positions) {
      std::vector<Value> cur(states_);
      for (int s = 0; s < states_; ++s) {
        if (!allowed(p, s, a, b)) continue;
        for (int sp = 0; sp < states_; ++sp) {
          if (prev[sp].cost == kSaturated) continue;
          const Value v{saturating_mul(prev[sp].cost, term(p, s, sp, a, b)),
                        prev[sp].size + std::popcount(static_cast<unsigned>(s))};
          cur[s] = std::min(cur[s], v);
        }
      }
      c.table.push_back(cur);
      prev = std::move(cur);
    }
    return c;
  }

  Value segment_value(int a, int b) const {
    Value total{1, b - a + 1};
    for (int r = 0; r < ell_; ++r) {
      const Value v = chain(a + r, a, b).table.back()[0];
      total = {saturating_mul(total.cost, v.cost), total.size + v.size};
    }
    return total;
  }

  // All optimal state sequences of a chain, walking the table backwards.
  void backtrack(const Chain& c, int a, int b, int t, int s, std::vector<int>& states,
                 std::vector<std::vector<int>>& out) const {
    states[t] = s;
    if (t == 0) {
      out.push_back(states);
      return;
    }
    for (int sp = 0; sp < states_; ++sp) {
      const Value& pv = c.table[t - 1][sp];
      if (pv.cost == kSaturated) continue;
      const Value v{saturating_mul(pv.cost, term(c.positions[t], s, sp, a, b)),
                    pv.size + std::popcount(static_cast<unsigned>(s))};
      if (v == c.table[t][s]) backtrack(c, a, b, t - 1, sp, states, out);
    }
  }

  void collect(int a, int b, std::vector<VertexList>& out) const {
    std::vector<VertexList> partial{VertexList{}};
    for (int p = a; p <= b; ++p) partial[0].insert(axis_vertex(p));
    for (int r = 0; r < ell_; ++r) {
      const Chain c = chain(a + r, a, b);
      std::vector<std::vector<int>> sequences;
      std::vector<int> states(c.positions.size());
      const int last = static_cast<int>(c.positions.size()) - 1;
      // The first position has the empty state before it.
      std::vector<std::vector<int>> raw;
      backtrack(c, a, b, last, 0, states, raw);
      for (auto& seq : raw) {
        const Value first{term(c.positions[0], seq[0], 0, a, b), std::popcount(static_cast<unsigned>(seq[0]))};
        if (first == c.table[0][seq[0]]) sequences.push_back(seq);
      }
      std::vector<VertexList> next;
      for (const auto& base : partial)
        for (const auto& seq : sequences) {
          VertexList f = base;
          for (std::size_t t = 0; t < seq.size(); ++t)
            for (int label = 0; label < q_ - 1; ++label)
              if ((seq[t] >> label) & 1)
                f.insert({c.positions[t], {static_cast<std::uint8_t>(label)}});
          next.push_back(std::move(f));
        }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }

  int q_;
  int ell_;
  int depth_;
  int states_;
};

}  // namespace detail

/// Least displacement over all subtree fixators inside the ball of radius
/// `search_depth`, with the least minimiser of least size as witness.
inline TidyResult tidy_search(const TreeSpec& t, const TreeAut& alpha, int search_depth) {
  t.validate();
  if (search_depth < 0 || search_depth > t.depth) throw DomainError("search depth must be within the tree cap");
  switch (alpha.kind) {
    case TreeAut::Kind::Identity: return {LogValue(1), {axis_vertex(0)}};
    case TreeAut::Kind::Reflection:
      if (std::abs(alpha.centre) > search_depth)
        throw DomainError("reflection centre lies outside the search ball");
      return {LogValue(1), {axis_vertex(alpha.centre)}};
    case TreeAut::Kind::Translation: break;
  }
  const int ell = std::abs(alpha.length);
  auto [best, minimisers] = detail::TranslationTidySearch(t.q, ell, search_depth).run();
  if (alpha.length < 0)
    for (auto& f : minimisers) {
      VertexList mirrored;
      for (const auto& v : f) mirrored.insert({-v.axis, v.path});
      f = std::move(mirrored);
    }
  const VertexList witness = *std::min_element(minimisers.begin(), minimisers.end());
  const LogValue minimum{LogValue::Int(best.cost)};
  if (search_depth >= 1 && minimum >= LogValue(boost::multiprecision::pow(LogValue::Int(t.q), 2 * ell + 2)))
    throw InternalError("axis subtrees no longer dominate; tidy search bound violated");
  if (co_distance(t, alpha.apply(witness), witness) != minimum)
    throw InternalError("tidy witness disagrees with the displacement formula");
  return {minimum, witness};
}

/// |alpha(O) : alpha(O) cap O| at the tidy witness O.
inline LogValue::Int scale(const TreeSpec& t, const TreeAut& alpha, int search_depth) {
  const TidyResult tidy = tidy_search(t, alpha, search_depth);
  return fixator_index(t, alpha.apply(tidy.witness), tidy.witness);
}

inline Rational modular_function(const TreeSpec& t, const TreeAut& alpha, int search_depth) {
  return Rational(scale(t, alpha, search_depth)) / Rational(scale(t, alpha.inverse(), search_depth));
}

struct TidyingStep {
  int k;
  VertexList hull;
  LogValue displacement;
  bool tidy_above;
};

struct TidyingResult {
  std::vector<TidyingStep> trace;
  int n = 0;          // intersection phase stops after alpha^n(O)
  VertexList above;   // O' = Fix(above)
  bool k_alpha_contained = true;  // K_alpha (truncated to the ball) lies in O'
  VertexList output;  // O'' = Fix(output)
  LogValue displacement;
  LogValue minimum;
};

namespace detail {

inline VertexList translates_hull(const TreeAut& alpha, const VertexList& h, int from, int to) {
  VertexList all;
  for (int i = from; i <= to; ++i) {
    const VertexList image = alpha.power(i).apply(h);
    all.insert(image.begin(), image.end());
  }
  return hull(all);
}

/// O = Fix(H) equals O+ O- where O+- = intersection of alpha^{+-i}(O), i >= 0.
/// With O0 = O+ cap O-, that holds iff [O : O0] = [O+ : O0] [O- : O0]. The
/// indices are infinite for a translation, but the index formula is a product
/// of local factors and the three sides differ only near H, so every hull is
/// cut off the same number of periods away from H.
inline bool tidy_above(const TreeSpec& t, const TreeAut& alpha, const VertexList& h) {
  int periods = 2;
  if (alpha.kind == TreeAut::Kind::Translation) {
    int lo = h.begin()->axis, hi = lo;
    for (const auto& v : h) {
      lo = std::min(lo, v.axis);
      hi = std::max(hi, v.axis);
    }
    periods = (hi - lo + 2 * t.depth) / std::abs(alpha.length) + 3;
  }
  const VertexList all = translates_hull(alpha, h, -periods, periods);
  const VertexList plus = translates_hull(alpha, h, 0, periods);
  const VertexList minus = translates_hull(alpha, h, -periods, 0);
  return extension_count(t, h, all) == extension_count(t, plus, all) * extension_count(t, minus, all);
}

}  // namespace detail

/// First intersects alpha^i(O) for i = 0..k, i.e. fixes the hull of the
/// translates of F0, until the result is tidy above. Then the correction: K_alpha is
/// Fix(axis) for a translation and trivial for a finite-order alpha. When it
/// lies in O' nothing changes; otherwise O'' is the closed subgroup generated
/// by O' and K_alpha, the fixator of the part of the hull that K_alpha fixes.
inline TidyingResult tidying_procedure(const TreeSpec& t, const TreeAut& alpha, const VertexList& f0) {
  t.validate();
  if (f0.empty()) throw DomainError("tidying procedure needs a nonempty seed");
  TidyingResult out;
  out.minimum = tidy_search(t, alpha, t.depth).minimum;
  VertexList seeds = f0;
  for (int k = 0;; ++k) {
    if (k > 0) {
      const VertexList image = alpha.power(k).apply(f0);
      seeds.insert(image.begin(), image.end());
    }
    VertexList h = hull(seeds);
    const LogValue d = displacement(t, alpha, h);
    const bool above = detail::tidy_above(t, alpha, h);
    out.trace.push_back({k, h, d, above});
    if (above) {
      out.n = k;
      out.above = std::move(h);
      break;
    }
    if (k >= t.depth) throw InternalError("intersection phase did not converge within the depth cap");
  }
  out.output = out.above;
  if (alpha.kind == TreeAut::Kind::Translation) {
    // Vertices fixed by Fix(axis): the axis, and for q = 2 the single
    // off-axis neighbour of each axis vertex.
    VertexList kept;
    for (const auto& v : out.above)
      if (v.depth() == 0 || (t.q == 2 && v.depth() == 1)) kept.insert(v);
    out.k_alpha_contained = kept.size() == out.above.size();
    if (kept.empty()) throw InternalError("O' misses the axis of a translation");
    out.output = hull(kept);
  }
  out.displacement = displacement(t, alpha, out.output);
  if (out.displacement != out.minimum) throw InternalError("tidying procedure output is not tidy");
  return out;
}

struct FlatFactor {
  TreeSpec tree;
  TreeAut generator;
};

struct FlatSubgroupSpec {
  std::vector<FlatFactor> factors;
};

struct NormEntry {
  std::vector<int> exponents;
  LogValue norm;
};

struct FlatSubgroupReport {
  int rank = 0;
  std::vector<VertexList> tidy;
  std::vector<int> translation_coordinates;
  std::vector<int> elliptic_coordinates;  // generate H(1)
  std::vector<NormEntry> norms;           // lattice |m_i| <= radius
  bool norm_axioms = true;
};

/// d(alpha^m(O), O) for the coordinatewise tidy O.
inline LogValue flat_norm(const FlatSubgroupSpec& h, const std::vector<VertexList>& tidy,
                          const std::vector<int>& m) {
  LogValue total;
  for (std::size_t i = 0; i < h.factors.size(); ++i) {
    const auto& f = h.factors[i];
    total = total + co_distance(f.tree, f.generator.power(m[i]).apply(tidy[i]), tidy[i]);
  }
  return total;
}

inline FlatSubgroupReport flat_rank_flat_subgroup(const FlatSubgroupSpec& h, int radius = 3) {
  if (h.factors.empty() || h.factors.size() > 4) throw DomainError("flat subgroups take 1 to 4 factors");
  FlatSubgroupReport out;
  const int k = static_cast<int>(h.factors.size());
  for (int i = 0; i < k; ++i) {
    const auto& f = h.factors[i];
    out.tidy.push_back(tidy_search(f.tree, f.generator, f.tree.depth).witness);
    (f.generator.elliptic() ? out.elliptic_coordinates : out.translation_coordinates).push_back(i);
  }
  out.rank = static_cast<int>(out.translation_coordinates.size());

  std::vector<std::vector<int>> lattice{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : lattice)
      for (int x = -radius; x <= radius; ++x) {
        auto m = prefix;
        m.push_back(x);
        next.push_back(std::move(m));
      }
    lattice = std::move(next);
  }
  // Per-coordinate displacements, cached: the axiom checks revisit them often.
  std::vector<std::map<int, LogValue>> cache(k);
  auto norm_of = [&](const std::vector<int>& m) {
    LogValue total;
    for (int i = 0; i < k; ++i) {
      auto it = cache[i].find(m[i]);
      if (it == cache[i].end()) {
        const auto& f = h.factors[i];
        it = cache[i].emplace(m[i], co_distance(f.tree, f.generator.power(m[i]).apply(out.tidy[i]), out.tidy[i])).first;
      }
      total = total + it->second;
    }
    return total;
  };
  for (const auto& m : lattice) {
    bool trivial = true;
    for (int i : out.translation_coordinates) trivial = trivial && m[i] == 0;
    const LogValue nm = norm_of(m);
    out.norms.push_back({m, nm});
    if ((nm == LogValue(1)) != trivial) out.norm_axioms = false;
    std::vector<int> neg(m);
    for (auto& x : neg) x = -x;
    if (norm_of(neg) != nm) out.norm_axioms = false;
    for (int c = -radius; c <= radius; ++c) {
      std::vector<int> scaled(m);
      for (auto& x : scaled) x *= c;
      if (norm_of(scaled) != nm.times(static_cast<unsigned>(std::abs(c)))) out.norm_axioms = false;
    }
    for (const auto& n : lattice) {
      std::vector<int> sum(m);
      for (int i = 0; i < k; ++i) sum[i] += n[i];
      if (norm_of(sum) > nm + norm_of(n)) out.norm_axioms = false;
    }
  }
  return out;
}

}  // namespace flatrank
