#pragma once

// Algebraic rank (largest standard free abelian subgroup), Davis-complex
// dimension, the resulting flat-rank bounds, and two diagram families.

#include <string>
#include <vector>

#include "flatrank/classify.hpp"
#include "flatrank/diagram.hpp"
#include "flatrank/error.hpp"

namespace flatrank {

enum class PartClass { Affine, IndefiniteIrreducible };

inline std::string to_string(PartClass c) {
  return c == PartClass::Affine ? "affine" : "indefinite-irreducible";
}

struct WitnessPart {
  VertexSet vertices;
  PartClass kind;
  int contribution;
  friend bool operator==(const WitnessPart&, const WitnessPart&) = default;
};

/// Pairwise perpendicular irreducible non-spherical subsets, ordered by
/// lowest vertex.
struct StandardAbelianWitness {
  std::vector<WitnessPart> parts;
  int total = 0;
  friend bool operator==(const StandardAbelianWitness&, const StandardAbelianWitness&) = default;
};

namespace detail {

inline WitnessPart make_part(const SubsetAtlas& atlas, VertexSet subset) {
  const bool affine = atlas.kind(subset) == SubsetKind::Affine;
  return {subset, affine ? PartClass::Affine : PartClass::IndefiniteIrreducible,
          affine ? cardinality(subset) - 1 : 1};
}

/// Lexicographic order on the vertex lists of the parts.
inline bool witness_less(const std::vector<WitnessPart>& a, const std::vector<WitnessPart>& b) {
  std::vector<std::vector<Vertex>> x, y;
  for (const auto& p : a) x.push_back(members(p.vertices));
  for (const auto& p : b) y.push_back(members(p.vertices));
  return x < y;
}

}  // namespace detail

/// Maximum of sum(|I|-1 for affine I) + sum(1 for other I) over collections
/// of pairwise perpendicular irreducible non-spherical subsets. Ties go to
/// the lexicographically least collection.
///
/// Subset DP: for the lowest vertex v of the remaining set A, either no part
/// contains v, or some part I contains v, after which the rest must avoid I
/// and its neighbours.
inline StandardAbelianWitness alg_rank(const SubsetAtlas& atlas) {
  const CoxeterDiagram& d = atlas.diagram();
  const std::size_t count = std::size_t{1} << d.rank();
  std::vector<int> total(count, 0);
  std::vector<std::vector<WitnessPart>> parts(count);
  for (std::size_t idx = 1; idx < count; ++idx) {
    const auto a = static_cast<VertexSet>(idx);
    const Vertex v = lowest(a);
    const VertexSet rest = a & ~singleton(v);
    int best = total[rest];
    std::vector<WitnessPart> best_parts = parts[rest];
    // Submasks of `rest`, each joined with v.
    for (VertexSet sub = rest;; sub = (sub - 1) & rest) {
      const VertexSet i = sub | singleton(v);
      if (atlas.irreducible(i) && !atlas.spherical(i)) {
        const WitnessPart part = detail::make_part(atlas, i);
        const VertexSet remaining = a & ~i & ~d.neighbourhood(i);
        const int value = part.contribution + total[remaining];
        if (value >= best) {
          std::vector<WitnessPart> candidate{part};
          candidate.insert(candidate.end(), parts[remaining].begin(), parts[remaining].end());
          if (value > best || detail::witness_less(candidate, best_parts)) {
            best = value;
            best_parts = std::move(candidate);
          }
        }
      }
      if (sub == 0) break;
    }
    total[idx] = best;
    parts[idx] = std::move(best_parts);
  }
  return {parts[count - 1], total[count - 1]};
}

inline StandardAbelianWitness alg_rank(const CoxeterDiagram& d) { return alg_rank(SubsetAtlas(d)); }

/// Largest spherical subset size.
inline int davis_dimension(const SubsetAtlas& atlas) {
  int best = 0;
  for (VertexSet t : atlas.spherical_subsets()) best = std::max(best, cardinality(t));
  return best;
}

inline int davis_dimension(const CoxeterDiagram& d) { return davis_dimension(SubsetAtlas(d)); }

enum class UpperSource { Hyperbolic, DavisDimension, Finite };

inline std::string to_string(UpperSource s) {
  switch (s) {
    case UpperSource::Hyperbolic: return "Hyperbolic";
    case UpperSource::DavisDimension: return "DavisDimension";
    case UpperSource::Finite: return "Finite";
  }
  return "?";
}

struct RankBounds {
  int lower = 0;
  int upper = 0;
  bool exact = true;
  StandardAbelianWitness lower_witness;
  UpperSource upper_source = UpperSource::Finite;
};

inline RankBounds flat_rank_bounds(const SubsetAtlas& atlas) {
  RankBounds out;
  out.lower_witness = alg_rank(atlas);
  out.lower = out.lower_witness.total;
  if (atlas.spherical(atlas.diagram().all())) {
    out.upper = 0;
    out.upper_source = UpperSource::Finite;
  } else if (moussong_hyperbolic(atlas)) {
    out.upper = 1;
    out.upper_source = UpperSource::Hyperbolic;
  } else {
    out.upper = davis_dimension(atlas);
    out.upper_source = UpperSource::DavisDimension;
  }
  if (out.lower > out.upper) throw InternalError("algebraic rank exceeds the geometric bound");
  out.exact = out.lower == out.upper;
  return out;
}

inline RankBounds flat_rank_bounds(const CoxeterDiagram& d) { return flat_rank_bounds(SubsetAtlas(d)); }

/// ~A_d: the infinite dihedral group for d = 1, a (d+1)-cycle of 3s above.
inline CoxeterDiagram affine_a_diagram(int d) {
  if (d < 1 || d + 1 > kMaxRank) throw DomainError("~A_d needs 1 <= d <= 15");
  std::vector<Edge> edges;
  if (d == 1) {
    edges.push_back({0, 1, kInfinity});
  } else {
    for (int i = 0; i <= d; ++i) edges.push_back({i, (i + 1) % (d + 1), 3});
  }
  return CoxeterDiagram(d + 1, edges);
}

inline constexpr int kThmCMax = kMaxRank - 6;

/// A 5-cycle c1..c5 with every label infinite; for n >= 2 also an ~A_n cycle
/// a0..an, every c joined to every a by an infinite edge.
inline CoxeterDiagram thmC_diagram(int n) {
  if (n < 1) throw DomainError("thmC_diagram needs n >= 1");
  if (n > kThmCMax) throw ResourceError("thmC_diagram(n) has rank n + 6; the rank cap allows n <= " + std::to_string(kThmCMax));
  std::vector<Edge> edges;
  std::vector<std::string> names;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, kInfinity});
    names.push_back("c" + std::to_string(i + 1));
  }
  if (n == 1) return CoxeterDiagram(5, edges, names);
  for (int i = 0; i <= n; ++i) {
    edges.push_back({5 + i, 5 + (i + 1) % (n + 1), 3});
    names.push_back("a" + std::to_string(i));
    for (int c = 0; c < 5; ++c) edges.push_back({c, 5 + i, kInfinity});
  }
  return CoxeterDiagram(6 + n, edges, names);
}

}  // namespace flatrank
