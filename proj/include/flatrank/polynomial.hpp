#pragma once

// Dense univariate polynomials over arbitrary-precision integers or
// rationals, with gcd and Sturm-sequence root counting.

#include <algorithm>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flatrank/error.hpp"

namespace flatrank {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficients c_0 .. c_d with c_d != 0; the zero polynomial is empty.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Coeff& v) { return Polynomial(std::vector<Coeff>{v}); }
  static Polynomial monomial(int degree, const Coeff& v = Coeff(1)) {
    std::vector<Coeff> c(degree + 1, Coeff(0));
    c[degree] = v;
    return Polynomial(std::move(c));
  }
  /// 1 + t + ... + t^k.
  static Polynomial geometric(int k) { return Polynomial(std::vector<Coeff>(k + 1, Coeff(1))); }

  bool zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const { return c_; }
  Coeff operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }

  template <class Point>
  Point evaluate(const Point& x) const {
    Point acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Point(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Coeff> d;
    for (int i = 1; i < static_cast<int>(c_.size()); ++i) d.push_back(c_[i] * i);
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Coeff> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<Coeff> c(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Coeff& k, const Polynomial& a) { return constant(k) * a; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const {
    if (zero()) return "0";
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
      if (c_[i] == 0) continue;
      const bool neg = c_[i] < 0;
      const Coeff mag = neg ? Coeff(-c_[i]) : c_[i];
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (mag != 1 || i == 0) out += mag.str();
      if (i >= 1) out += "t";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

/// Quotient and remainder over a field.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    const Rational factor = rem[i] / b.leading();
    quot[i - db] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= factor * b[j];
  }
  rem.resize(db);
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
  return g;
}

/// Integer polynomial proportional to a rational one, with content 1 and
/// positive leading coefficient.
inline IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.zero()) return {};
  BigInt lcm_den = 1;
  for (const auto& c : p.coefficients()) {
    const BigInt den = boost::multiprecision::denominator(c);
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, den) * den;
  }
  std::vector<BigInt> ints;
  for (const auto& c : p.coefficients())
    ints.push_back(boost::multiprecision::numerator(c) * (lcm_den / boost::multiprecision::denominator(c)));
  IntPolynomial out(std::move(ints));
  BigInt g = content(out);
  if (out.leading() < 0) g = -g;
  std::vector<BigInt> reduced;
  for (const auto& c : out.coefficients()) reduced.push_back(c / g);
  return IntPolynomial(std::move(reduced));
}

inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  RatPolynomial x = to_rational(a), y = to_rational(b);
  while (!y.zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.zero()) return {};
  return primitive_part(x);
}

/// a / b for b dividing a exactly over Q with an integral result.
inline IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.zero()) throw InternalError("inexact polynomial division");
  std::vector<BigInt> out;
  for (const auto& c : q.coefficients()) {
    if (boost::multiprecision::denominator(c) != 1) throw InternalError("non-integral polynomial quotient");
    out.push_back(boost::multiprecision::numerator(c));
  }
  return IntPolynomial(std::move(out));
}

/// Sturm sequence of the square-free part of p. variations(a) - variations(b)
/// counts the distinct real roots in (a, b] provided p(a) != 0.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p) {
    if (p.zero()) throw DomainError("Sturm sequence of the zero polynomial");
    const IntPolynomial g = gcd(p, p.derivative());
    square_free_ = g.degree() > 0 ? to_rational(divide_exact(p, g)) : to_rational(p);
    seq_.push_back(square_free_);
    seq_.push_back(square_free_.derivative());
    while (!seq_.back().zero()) {
      auto r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
      seq_.push_back(-r);
    }
    seq_.pop_back();
  }

  const RatPolynomial& square_free() const { return square_free_; }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& q : seq_) {
      const Rational v = q.evaluate(x);
      const int sgn = v > 0 ? 1 : v < 0 ? -1 : 0;
      if (sgn == 0) continue;
      if (last != 0 && sgn != last) ++count;
      last = sgn;
    }
    return count;
  }

  /// Distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  RatPolynomial square_free_;
  std::vector<RatPolynomial> seq_;
};

/// Rational with the least denominator in the closed interval [a, b], 0 <= a <= b.
inline Rational simplest_rational_between(const Rational& a, const Rational& b) {
  const BigInt fl = boost::multiprecision::numerator(a) / boost::multiprecision::denominator(a);
  if (Rational(fl) == a) return a;
  if (Rational(fl + 1) <= b) return Rational(fl + 1);
  return Rational(fl) + 1 / simplest_rational_between(1 / (b - Rational(fl)), 1 / (a - Rational(fl)));
}

/// Smallest positive real root of p, isolated to an interval (lo, hi] of
/// width <= tolerance. `exact` is set when hi is itself a root.
struct RootInterval {
  bool exists = false;
  Rational lo;
  Rational hi;
  bool exact = false;
};

inline RootInterval smallest_positive_root(const IntPolynomial& p, const Rational& tolerance = Rational(1, 1'000'000'000)) {
  RootInterval out;
  if (p.zero()) throw DomainError("roots of the zero polynomial");
  if (p[0] == 0) {
    // 0 itself is a root; strip it, positive roots are unchanged.
    std::vector<BigInt> c = p.coefficients();
    while (!c.empty() && c.front() == 0) c.erase(c.begin());
    return smallest_positive_root(IntPolynomial(std::move(c)), tolerance);
  }
  const SturmSequence sturm(p);
  // Cauchy bound: every root has |x| < 1 + max |c_i / c_d|.
  Rational bound = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational ratio = Rational(p[i]) / Rational(p.leading());
    if (ratio < 0) ratio = -ratio;
    bound = std::max(bound, ratio);
  }
  bound += 1;
  const Rational zero(0);
  if (sturm.count(zero, bound) == 0) return out;
  out.exists = true;
  Rational lo = 0, hi = bound;
  while (hi - lo > tolerance) {
    const Rational mid = (lo + hi) / 2;
    if (sturm.count(zero, mid) > 0)
      hi = mid;
    else
      lo = mid;
  }
  // A rational root with a small denominator is the simplest rational in the
  // isolating interval; probe it so such roots are reported exactly.
  const Rational probe = simplest_rational_between(lo, hi);
  if (probe > lo && p.evaluate(probe) == 0) hi = probe;
  out.lo = lo;
  out.hi = hi;
  out.exact = p.evaluate(hi) == 0;
  return out;
}

inline std::string rational_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw ParseError("bad rational '" + text + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad rational '" + text + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw ParseError("bad rational '" + text + "'");
    return BigInt(s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace flatrank
