#pragma once

// log(n) for a positive integer n, stored as n so that sums, multiples and
// comparisons stay exact.

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "flatrank/error.hpp"

namespace flatrank {

class LogValue {
 public:
  using Int = boost::multiprecision::cpp_int;

  LogValue() = default;
  explicit LogValue(Int argument) : arg_(std::move(argument)) {
    if (arg_ < 1) throw DomainError("log of a non-positive integer");
  }

  /// The n with value() == log n.
  const Int& argument() const { return arg_; }

  double value() const {
    const std::size_t bits = boost::multiprecision::msb(arg_);
    if (bits < 60) return std::log(arg_.convert_to<double>());
    const std::size_t shift = bits - 52;
    return std::log(static_cast<Int>(arg_ >> shift).convert_to<double>()) + shift * std::log(2.0);
  }

  friend LogValue operator+(const LogValue& a, const LogValue& b) { return LogValue(a.arg_ * b.arg_); }
  LogValue times(unsigned k) const { return LogValue(boost::multiprecision::pow(arg_, k)); }

  friend bool operator==(const LogValue&, const LogValue&) = default;
  friend bool operator<(const LogValue& a, const LogValue& b) { return a.arg_ < b.arg_; }
  friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
  friend bool operator<=(const LogValue& a, const LogValue& b) { return !(b < a); }
  friend bool operator>=(const LogValue& a, const LogValue& b) { return !(a < b); }

  /// e.g. "4 log 2 + 2 log 3"; "0" for log 1.
  std::string expression() const {
    if (arg_ == 1) return "0";
    std::string out;
    Int rest = arg_;
    auto emit = [&](const Int& base, unsigned exponent) {
      if (!out.empty()) out += " + ";
      if (exponent != 1) out += std::to_string(exponent) + " ";
      out += "log " + base.str();
    };
    for (unsigned p = 2; p < 1000 && rest > 1; ++p) {
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e > 0) emit(Int(p), e);
    }
    if (rest > 1) emit(rest, 1);
    return out;
  }

 private:
  Int arg_ = 1;
};

}  // namespace flatrank
