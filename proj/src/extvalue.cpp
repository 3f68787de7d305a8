#include "latval/extvalue.hpp"

namespace latval {

namespace {

// Strict scan for the textual grammar; GMP's own parser is too permissive
// (it skips whitespace), so shapes are vetted here first.
bool well_formed(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (!well_formed(text, true)) throw ParseError("'" + text + "' is not a rational");
  Rational q;
  if (q.set_str(text, 10) != 0) throw ParseError("'" + text + "' is not a rational");
  if (sgn(q.get_den()) == 0) throw ParseError("'" + text + "' has a zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

ExtValue::ExtValue(long n) : q_(n), inf_(false) {
  if (n < 0) throw Error("extended value cannot be negative");
}

ExtValue::ExtValue(long num, long den) : q_(num, den), inf_(false) {
  if (den == 0) throw Error("zero denominator");
  q_.canonicalize();
  if (sgn(q_) < 0) throw Error("extended value cannot be negative");
}

ExtValue::ExtValue(const Rational& q) : q_(q), inf_(false) {
  if (sgn(q_) < 0) throw Error("extended value cannot be negative");
}

ExtValue ExtValue::infinity() {
  ExtValue v;
  v.inf_ = true;
  return v;
}

ExtValue ExtValue::parse(const std::string& text) {
  if (text == "inf") return infinity();
  Rational q = parse_rational(text);
  if (sgn(q) < 0) throw ParseError("'" + text + "' is negative");
  return ExtValue(q);
}

std::string ExtValue::str() const { return inf_ ? "inf" : q_.get_str(); }

const Rational& ExtValue::finite() const {
  if (inf_) throw Error("value is infinite");
  return q_;
}

ExtValue& ExtValue::operator+=(const ExtValue& o) {
  if (inf_ || o.inf_) {
    inf_ = true;
    q_ = 0;
  } else {
    q_ += o.q_;
  }
  return *this;
}

ExtValue& ExtValue::operator*=(const ExtValue& o) {
  // 0 * inf = inf * 0 = 0 keeps integrals of weights over null sets at zero.
  if (is_zero() || o.is_zero()) {
    inf_ = false;
    q_ = 0;
  } else if (inf_ || o.inf_) {
    inf_ = true;
    q_ = 0;
  } else {
    q_ *= o.q_;
  }
  return *this;
}

int cmp(const ExtValue& a, const ExtValue& b) {
  if (a.inf_ && b.inf_) return 0;
  if (a.inf_) return 1;
  if (b.inf_) return -1;
  return ::cmp(a.q_, b.q_);
}

}  // namespace latval
