#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace absconv {

/// Thrown when an exact arithmetic result no longer fits the 64-bit rational
/// representation after reduction.
class ArithmeticOverflow : public std::overflow_error {
 public:
  ArithmeticOverflow() : std::overflow_error("rational arithmetic overflow") {}
};

namespace detail {
using int128 = __int128;

inline int128 iabs128(int128 v) { return v < 0 ? -v : v; }

inline int128 igcd128(int128 a, int128 b) {
  a = iabs128(a);
  b = iabs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

/// Exact rational scalar.  Always reduced to lowest terms with a positive
/// denominator; equality is value equality.  Intermediates are computed in
/// 128 bits; the reduced result must fit back into 64 bits or
/// ArithmeticOverflow is thrown.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) { *this = make(n, d); }

  static Rational make(detail::int128 n, detail::int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) d = 1;
    detail::int128 g = detail::igcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr detail::int128 kMax = INT64_MAX;
    if (n > kMax || n < -kMax || d > kMax) throw ArithmeticOverflow();
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using detail::int128;
    return make(int128(a.num_) * b.den_ + int128(b.num_) * a.den_,
                int128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    using detail::int128;
    return make(int128(a.num_) * b.den_ - int128(b.num_) * a.den_,
                int128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using detail::int128;
    return make(int128(a.num_) * b.num_, int128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    using detail::int128;
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(int128(a.num_) * b.den_, int128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    using detail::int128;
    return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Exact decimal rendering when the denominator is of the form 2^a 5^b,
  /// otherwise "p/q".
  std::string decimal_string() const {
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
      d /= 2;
      ++twos;
    }
    while (d % 5 == 0) {
      d /= 5;
      ++fives;
    }
    if (d != 1) return to_string();
    if (den_ == 1) return std::to_string(num_);
    int k = twos > fives ? twos : fives;
    detail::int128 scaled = detail::int128(num_);
    for (int i = 0; i < k - twos; ++i) scaled *= 2;
    for (int i = 0; i < k - fives; ++i) scaled *= 5;
    bool neg = scaled < 0;
    detail::int128 mag = detail::iabs128(scaled);
    std::string digits;
    if (mag == 0) digits = "0";
    while (mag > 0) {
      digits.insert(digits.begin(), static_cast<char>('0' + int(mag % 10)));
      mag /= 10;
    }
    while (static_cast<int>(digits.size()) <= k) digits.insert(digits.begin(), '0');
    digits.insert(digits.end() - k, '.');
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
    return (neg ? "-" : "") + digits;
  }

  /// Parses "p" or "p/q" with an optional leading minus.  Returns nullopt on
  /// malformed input; throws std::domain_error for a zero denominator.
  static std::optional<Rational> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '-') {
      neg = true;
      ++pos;
    } else if (text[pos] == '+') {
      ++pos;
    }
    auto read_int = [&](detail::int128& out) -> bool {
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') return false;
      detail::int128 v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        if (v > detail::int128(INT64_MAX) * 10) return false;
        ++pos;
      }
      out = v;
      return true;
    };
    detail::int128 n = 0, d = 1;
    if (!read_int(n)) return std::nullopt;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      if (!read_int(d)) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;
    if (neg) n = -n;
    return make(n, d);
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

/// Extended real: a rational, +inf, or -inf, with the usual total order.
/// Opposite infinities may not be added.
class ExtReal {
 public:
  ExtReal() : kind_(0), value_() {}
  ExtReal(Rational v) : kind_(0), value_(v) {}  // NOLINT(google-explicit-constructor)
  static ExtReal pos_infinity() {
    ExtReal e;
    e.kind_ = 1;
    return e;
  }
  static ExtReal neg_infinity() {
    ExtReal e;
    e.kind_ = -1;
    return e;
  }

  bool is_finite() const { return kind_ == 0; }
  bool is_pos_inf() const { return kind_ == 1; }
  bool is_neg_inf() const { return kind_ == -1; }

  const Rational& finite_value() const {
    if (kind_ != 0) throw std::logic_error("finite_value() on an infinite ExtReal");
    return value_;
  }

  ExtReal operator-() const {
    if (kind_ == 0) return ExtReal(-value_);
    return kind_ == 1 ? neg_infinity() : pos_infinity();
  }

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ == 0 && b.kind_ == 0) return ExtReal(a.value_ + b.value_);
    if (a.kind_ == 0) return b;
    if (b.kind_ == 0) return a;
    if (a.kind_ != b.kind_) throw std::logic_error("adding opposite infinities");
    return a;
  }
  friend ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != 0 || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.kind_ == 0 && a.value_ < b.value_;
  }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

  std::string to_string() const {
    if (kind_ == 1) return "+inf";
    if (kind_ == -1) return "-inf";
    return value_.to_string();
  }

 private:
  int kind_;  // -1, 0, +1
  Rational value_;
};

}  // namespace absconv
