#pragma once

// Spherical / affine / indefinite classification of vertex subsets, the
// per-subset cache used by the exponential searches, and the Moussong
// hyperbolicity test.

#include <optional>
#include <string>
#include <vector>

#include "flatrank/catalog.hpp"
#include "flatrank/diagram.hpp"

namespace flatrank {

enum class SubsetKind { Spherical, Affine, Indefinite };

inline std::string to_string(SubsetKind k) {
  switch (k) {
    case SubsetKind::Spherical: return "spherical";
    case SubsetKind::Affine: return "affine";
    case SubsetKind::Indefinite: return "indefinite";
  }
  return "?";
}

struct ClassifiedComponent {
  VertexSet vertices;
  std::optional<Family> family;  // nullopt marks an indefinite component
};

struct SubsetClass {
  SubsetKind kind = SubsetKind::Spherical;
  std::vector<ClassifiedComponent> components;
};

/// Spherical iff every component is finite type, Affine iff every component
/// is affine type, Indefinite otherwise. The empty set is Spherical.
inline SubsetClass classify_subset(const CoxeterDiagram& d, VertexSet subset) {
  SubsetClass out;
  bool all_finite = true;
  bool all_affine = true;
  for (VertexSet comp : irreducible_components(d, subset)) {
    auto family = match_irreducible(d, comp);
    all_finite = all_finite && family && !family->affine();
    all_affine = all_affine && family && family->affine();
    out.components.push_back({comp, family});
  }
  if (all_finite)
    out.kind = SubsetKind::Spherical;
  else if (all_affine)
    out.kind = SubsetKind::Affine;
  else
    out.kind = SubsetKind::Indefinite;
  return out;
}

/// Kind of every subset of S, computed once. 2^rank entries.
class SubsetAtlas {
 public:
  explicit SubsetAtlas(const CoxeterDiagram& d) : diagram_(&d) {
    const std::size_t count = std::size_t{1} << d.rank();
    kind_.resize(count);
    irreducible_.resize(count);
    for (std::size_t subset = 0; subset < count; ++subset) {
      const auto set = static_cast<VertexSet>(subset);
      auto comps = irreducible_components(d, set);
      irreducible_[subset] = comps.size() == 1;
      bool all_finite = true, all_affine = true;
      for (VertexSet comp : comps) {
        auto family = match_irreducible(d, comp);
        all_finite = all_finite && family && !family->affine();
        all_affine = all_affine && family && family->affine();
      }
      kind_[subset] = all_finite   ? SubsetKind::Spherical
                      : all_affine ? SubsetKind::Affine
                                   : SubsetKind::Indefinite;
    }
  }

  const CoxeterDiagram& diagram() const { return *diagram_; }
  SubsetKind kind(VertexSet subset) const { return kind_[subset]; }
  bool spherical(VertexSet subset) const { return kind_[subset] == SubsetKind::Spherical; }
  bool irreducible(VertexSet subset) const { return irreducible_[subset]; }

  std::vector<VertexSet> spherical_subsets() const {
    std::vector<VertexSet> out;
    for (std::size_t s = 0; s < kind_.size(); ++s)
      if (kind_[s] == SubsetKind::Spherical) out.push_back(static_cast<VertexSet>(s));
    return out;
  }

 private:
  const CoxeterDiagram* diagram_;
  std::vector<SubsetKind> kind_;
  std::vector<bool> irreducible_;
};

/// W is Gromov-hyperbolic iff (a) no affine subset has 3 or more vertices and
/// (b) no two perpendicular subsets are both non-spherical (Moussong).
inline bool moussong_hyperbolic(const SubsetAtlas& atlas) {
  const CoxeterDiagram& d = atlas.diagram();
  const VertexSet all = d.all();
  for (VertexSet t = 0; t <= all; ++t) {
    if (atlas.kind(t) == SubsetKind::Affine && cardinality(t) >= 3) return false;
    // Every non-spherical subset contains an irreducible non-spherical one,
    // so (b) only needs irreducible I against everything perpendicular to it.
    if (atlas.irreducible(t) && !atlas.spherical(t)) {
      const VertexSet perp = all & ~t & ~d.neighbourhood(t);
      if (!atlas.spherical(perp)) return false;
    }
  }
  return true;
}

inline bool moussong_hyperbolic(const CoxeterDiagram& d) { return moussong_hyperbolic(SubsetAtlas(d)); }

}  // namespace flatrank
