#ifndef FAMART_RATIONAL_HPP
#define FAMART_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace famart {

/// Exact arbitrary-precision fraction, always in lowest terms with a positive
/// denominator. Backed by GMP's mpq_t.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
      : q_(from_integral(value)) {}
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "num/den" or a bare integer. Throws InvalidInput on anything else,
  /// including a zero denominator.
  static Rational parse(std::string_view text);

  /// Serializes as "num/den"; integers get an explicit "/1".
  std::string str() const;

  const mpq_class& raw() const { return q_; }
  std::string numerator_str() const { return q_.get_num().get_str(); }
  std::string denominator_str() const { return q_.get_den().get_str(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  template <std::integral T>
  static mpq_class from_integral(T value) {
    if constexpr (std::is_signed_v<T>) {
      return mpq_class(static_cast<long>(value));
    } else {
      return mpq_class(static_cast<unsigned long>(value));
    }
  }

  mpq_class q_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);
/// 2^-k as an exact fraction.
Rational inverse_power_of_two(unsigned k);
Rational binomial_coefficient(unsigned n, unsigned k);

Rational sum(std::span<const Rational> xs);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace famart

#endif  // FAMART_RATIONAL_HPP
