#pragma once

#include <array>
#include <gmpxx.h>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crsym {

using Rational = mpq_class;

/// Raised by Scalar::inv and division when the divisor is exactly zero.
class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero in Q(zeta8)") {}
};

/// Element a + b*sqrt(2) of the real subfield Q(sqrt2).
class RealScalar {
public:
  RealScalar() = default;
  RealScalar(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational &rational_part() const { return a_; }
  const Rational &sqrt2_part() const { return b_; }

  RealScalar operator+(const RealScalar &o) const { return {a_ + o.a_, b_ + o.b_}; }
  RealScalar operator-(const RealScalar &o) const { return {a_ - o.a_, b_ - o.b_}; }
  RealScalar operator-() const { return {-a_, -b_}; }
  RealScalar operator*(const RealScalar &o) const {
    return {a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
  }
  RealScalar operator/(const Rational &q) const;
  bool operator==(const RealScalar &o) const { return a_ == o.a_ && b_ == o.b_; }

  std::string to_string() const;

private:
  Rational a_, b_;
};

/// Exact sign of a + b*sqrt(2): -1, 0 or +1.
int real_sign(const RealScalar &x);

/// a0 + a1 z + a2 z^2 + a3 z^3 with z a primitive 8th root of unity (z^4 = -1).
class Scalar {
public:
  using Coeffs = std::array<Rational, 4>;

  Scalar() = default;
  Scalar(long v) { c_[0] = v; }
  Scalar(Rational v) { c_[0] = std::move(v); }
  explicit Scalar(Coeffs c) : c_(std::move(c)) {}
  Scalar(const RealScalar &r);

  static Scalar zeta() { return Scalar(Coeffs{0, 1, 0, 0}); }
  static Scalar i() { return Scalar(Coeffs{0, 0, 1, 0}); }
  static Scalar sqrt2() { return Scalar(Coeffs{0, 1, 0, -1}); }

  const Coeffs &coeffs() const { return c_; }
  const Rational &coeff(std::size_t k) const { return c_[k]; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q(sqrt2), i.e. conj(x) == x.
  bool is_real() const;
  /// Requires is_real(); throws std::domain_error otherwise.
  RealScalar as_real() const;
  /// True when x is a rational number.
  bool is_rational() const;

  Scalar operator+(const Scalar &o) const;
  Scalar operator-(const Scalar &o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar &o) const;
  Scalar operator/(const Scalar &o) const { return *this * o.inv(); }
  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o) { return *this = *this * o; }

  bool operator==(const Scalar &o) const { return c_ == o.c_; }

  Scalar inv() const;
  Scalar conj() const;
  /// Image under the field automorphism z -> z^k, k odd.
  Scalar galois(int k) const;
  /// x * conj(x), an element of the real subfield.
  RealScalar modulus_squared() const;

  /// Human form over the basis {1, i, sqrt2, i*sqrt2}, e.g. "1/2 + 1/2*i*sqrt2".
  /// parse_scalar accepts it back.
  std::string to_string() const;

private:
  Coeffs c_{};
};

/// Parses a shorthand scalar: a signed sum of terms, each term a product of
/// factors joined by '*' or '/', where a factor is an integer, "i" or "sqrt2".
/// Examples: "1", "-3/4", "i", "1/sqrt2", "i/sqrt2", "2*i*sqrt2", "1/2 - i/2".
/// Throws std::invalid_argument on malformed input.
Scalar parse_scalar(std::string_view text);

std::ostream &operator<<(std::ostream &os, const Scalar &x);
std::ostream &operator<<(std::ostream &os, const RealScalar &x);

} // namespace crsym
