#pragma once

// Spherical / affine / indefinite from the eigenvalues of the cosine matrix
// B_st = -cos(pi / m_st), with B_st = -1 for infinite labels.

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "flatrank/classify.hpp"
#include "flatrank/diagram.hpp"

namespace oracle {

using flatrank::CoxeterDiagram;
using flatrank::SubsetKind;
using flatrank::VertexSet;

inline Eigen::MatrixXd cosine_matrix(const CoxeterDiagram& d, VertexSet subset) {
  const auto v = flatrank::members(subset);
  const int n = static_cast<int>(v.size());
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        b(i, j) = 1.0;
        continue;
      }
      const int m = d.label(v[i], v[j]);
      b(i, j) = m == flatrank::kInfinity ? -1.0 : -std::cos(std::numbers::pi / m);
    }
  return b;
}

/// Kind of one irreducible subset from the signature.
inline SubsetKind irreducible_kind(const CoxeterDiagram& d, VertexSet subset) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cosine_matrix(d, subset));
  const double smallest = solver.eigenvalues().minCoeff();
  constexpr double eps = 1e-9;
  if (smallest > eps) return SubsetKind::Spherical;
  if (smallest > -eps) return SubsetKind::Affine;
  return SubsetKind::Indefinite;
}

/// Same combination rule as the library: all components spherical, or all
/// affine, else indefinite.
inline SubsetKind subset_kind(const CoxeterDiagram& d, VertexSet subset) {
  bool all_spherical = true, all_affine = true;
  for (VertexSet c : flatrank::irreducible_components(d, subset)) {
    const SubsetKind k = irreducible_kind(d, c);
    all_spherical = all_spherical && k == SubsetKind::Spherical;
    all_affine = all_affine && k == SubsetKind::Affine;
  }
  if (all_spherical) return SubsetKind::Spherical;
  if (all_affine) return SubsetKind::Affine;
  return SubsetKind::Indefinite;
}

}  // namespace oracle
