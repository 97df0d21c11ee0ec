#pragma once

// Growth series W(t) = sum_w t^l(w) as an exact rational function, and the
// convergence test at a rational point.

#include <map>
#include <optional>
#include <vector>

#include "flatrank/classify.hpp"
#include "flatrank/diagram.hpp"
#include "flatrank/error.hpp"
#include "flatrank/polynomial.hpp"

namespace flatrank {

/// Poincare polynomial of the finite parabolic subgroup W_T.
inline IntPolynomial spherical_poincare(const CoxeterDiagram& d, VertexSet subset) {
  const SubsetClass cls = classify_subset(d, subset);
  if (cls.kind != SubsetKind::Spherical) throw DomainError("spherical_poincare: subset is not spherical");
  IntPolynomial out = IntPolynomial::constant(1);
  for (const auto& comp : cls.components)
    for (int e : comp.family->exponents()) out = out * IntPolynomial::geometric(e);
  return out;
}

class GrowthSeries {
 public:
  /// Reduces the fraction and scales it so that denominator(0) = 1.
  GrowthSeries(IntPolynomial numerator, IntPolynomial denominator) {
    if (denominator.zero()) throw DomainError("growth series with zero denominator");
    const IntPolynomial g = gcd(numerator, denominator);
    if (g.degree() > 0) {
      numerator = divide_exact(numerator, g);
      denominator = divide_exact(denominator, g);
    }
    if (denominator[0] == 0) throw InternalError("growth series denominator vanishes at 0");
    const BigInt c = boost::multiprecision::gcd(content(numerator), content(denominator));
    const BigInt scale = denominator[0] < 0 ? BigInt(-c) : c;
    std::vector<BigInt> num, den;
    for (const auto& x : numerator.coefficients()) num.push_back(x / scale);
    for (const auto& x : denominator.coefficients()) den.push_back(x / scale);
    numerator_ = IntPolynomial(std::move(num));
    denominator_ = IntPolynomial(std::move(den));
    if (denominator_[0] != 1) throw InternalError("growth series denominator(0) is not 1 after reduction");
  }

  const IntPolynomial& numerator() const { return numerator_; }
  const IntPolynomial& denominator() const { return denominator_; }

  /// Taylor coefficients c_0 .. c_n.
  std::vector<BigInt> coefficients(int n) const {
    std::vector<BigInt> c;
    for (int k = 0; k <= n; ++k) {
      BigInt v = numerator_[k];
      for (int j = 1; j <= std::min(k, denominator_.degree()); ++j) v -= denominator_[j] * c[k - j];
      c.push_back(v);
    }
    return c;
  }

 private:
  IntPolynomial numerator_;
  IntPolynomial denominator_;
};

/// Growth series of W(D). For infinite W uses
///   1/W(t) = sum over spherical T of (-1)^|T| t^{N_T} / W_T(t),
/// N_T = deg W_T, grouping terms with equal W_T before clearing denominators.
inline GrowthSeries growth_series(const CoxeterDiagram& d, std::size_t max_spherical = 1u << 16) {
  const SubsetAtlas atlas(d);
  if (atlas.spherical(d.all())) return GrowthSeries(spherical_poincare(d, d.all()), IntPolynomial::constant(1));

  const auto spherical = atlas.spherical_subsets();
  if (spherical.size() > max_spherical) throw ResourceError("too many spherical subsets");
  std::map<std::vector<BigInt>, IntPolynomial> grouped;
  for (VertexSet t : spherical) {
    const IntPolynomial wt = spherical_poincare(d, t);
    const IntPolynomial term = IntPolynomial::monomial(wt.degree(), cardinality(t) % 2 == 0 ? 1 : -1);
    auto [it, inserted] = grouped.try_emplace(wt.coefficients(), term);
    if (!inserted) it->second = it->second + term;
  }

  IntPolynomial common = IntPolynomial::constant(1);
  for (const auto& [key, numer] : grouped) {
    const IntPolynomial wt(key);
    common = divide_exact(common * wt, gcd(common, wt));
  }
  IntPolynomial inverse_numerator;
  for (const auto& [key, numer] : grouped)
    inverse_numerator = inverse_numerator + numer * divide_exact(common, IntPolynomial(key));
  // 1/W = inverse_numerator / common
  return GrowthSeries(common, inverse_numerator);
}

struct GrowthRadius {
  bool infinite = true;  // no positive root: the series converges everywhere
  Rational lo;           // rho lies in (lo, hi]
  Rational hi;
  bool exact = false;    // rho == hi exactly
};

inline GrowthRadius radius_of_convergence(const GrowthSeries& g) {
  GrowthRadius r;
  if (g.denominator().degree() == 0) return r;
  const RootInterval root = smallest_positive_root(g.denominator());
  if (!root.exists) return r;
  r.infinite = false;
  r.lo = root.lo;
  r.hi = root.hi;
  r.exact = root.exact;
  return r;
}

struct GrowthValue {
  bool finite = false;
  Rational value;  // meaningful when finite
};

/// W(t0) when t0 lies inside the radius of convergence. The coefficients are
/// nonnegative, so the radius is the smallest positive root of the reduced
/// denominator, and t0 is decided exactly by counting roots in (0, t0].
inline GrowthValue evaluate_growth(const GrowthSeries& g, const Rational& t0) {
  if (t0 <= 0) throw DomainError("evaluate_growth needs t0 > 0");
  GrowthValue out;
  if (g.denominator().degree() > 0) {
    const SturmSequence sturm(g.denominator());
    if (sturm.count(Rational(0), t0) > 0) return out;
  }
  out.finite = true;
  out.value = g.numerator().evaluate(t0) / g.denominator().evaluate(t0);
  return out;
}

}  // namespace flatrank
