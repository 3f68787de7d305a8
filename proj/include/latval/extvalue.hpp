#pragma once

// Exact scalars: plain signed rationals, and non-negative rationals extended
// with a top element "inf".  All arithmetic is exact; nothing here rounds.

#include <gmpxx.h>

#include <string>

#include "latval/errors.hpp"

namespace latval {

// Finite signed rational, arbitrary precision, kept canonical (reduced,
// positive denominator).
using Rational = mpq_class;

// Grammar: "p/q", plain integers, optional leading '-'.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
int sign(const Rational& q);

// Value in the extended half-line [0, inf].  Addition absorbs at inf;
// multiplication uses 0 * inf = inf * 0 = 0 so that weights on null sets
// never contribute.  There is no subtraction on this type.
class ExtValue {
 public:
  ExtValue() : q_(0), inf_(false) {}
  ExtValue(long n);
  ExtValue(long num, long den);
  explicit ExtValue(const Rational& q);
  static ExtValue infinity();

  // Grammar: "p/q", plain integers, or "inf".  parse(x.str()) == x bit-exactly.
  static ExtValue parse(const std::string& text);
  std::string str() const;

  bool is_finite() const { return !inf_; }
  bool is_infinite() const { return inf_; }
  const Rational& finite() const;  // requires is_finite

  ExtValue& operator+=(const ExtValue& o);
  ExtValue& operator*=(const ExtValue& o);
  friend ExtValue operator+(ExtValue a, const ExtValue& b) { return a += b; }
  friend ExtValue operator*(ExtValue a, const ExtValue& b) { return a *= b; }

  // Total order with every finite value below inf.
  friend int cmp(const ExtValue& a, const ExtValue& b);
  friend bool operator==(const ExtValue& a, const ExtValue& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const ExtValue& a, const ExtValue& b) { return cmp(a, b) != 0; }
  friend bool operator<(const ExtValue& a, const ExtValue& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const ExtValue& a, const ExtValue& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const ExtValue& a, const ExtValue& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const ExtValue& a, const ExtValue& b) { return cmp(a, b) >= 0; }

  bool is_zero() const { return !inf_ && sgn(q_) == 0; }

 private:
  Rational q_;  // value when finite, 0 when inf_
  bool inf_;
};

}  // namespace latval
