#include "crsym/exactnum.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace crsym {

namespace {

std::string rational_text(const Rational &q) { return q.get_str(); }

void append_term(std::string &out, const Rational &coef, std::string_view unit) {
  if (coef == 0)
    return;
  Rational mag = abs(coef);
  if (out.empty()) {
    if (coef < 0)
      out += "-";
  } else {
    out += coef < 0 ? " - " : " + ";
  }
  if (unit.empty()) {
    out += rational_text(mag);
  } else if (mag == 1) {
    out += unit;
  } else {
    out += rational_text(mag);
    out += "*";
    out += unit;
  }
}

} // namespace

RealScalar RealScalar::operator/(const Rational &q) const {
  if (q == 0)
    throw DivisionByZero();
  return {a_ / q, b_ / q};
}

std::string RealScalar::to_string() const {
  std::string out;
  append_term(out, a_, "");
  append_term(out, b_, "sqrt2");
  return out.empty() ? "0" : out;
}

int real_sign(const RealScalar &x) {
  const int sa = sgn(x.rational_part());
  const int sb = sgn(x.sqrt2_part());
  if (sb == 0)
    return sa;
  if (sa == 0 || sa == sb)
    return sb;
  // Opposite signs: |a| vs |b|sqrt2 decided by a^2 vs 2b^2.
  const Rational a2 = x.rational_part() * x.rational_part();
  const Rational b2 = 2 * x.sqrt2_part() * x.sqrt2_part();
  const int cmp_ab = sgn(a2 - b2);
  if (cmp_ab == 0)
    return 0;
  return cmp_ab > 0 ? sa : sb;
}

Scalar::Scalar(const RealScalar &r) {
  c_[0] = r.rational_part();
  c_[1] = r.sqrt2_part();
  c_[3] = -r.sqrt2_part();
}

bool Scalar::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_one() const {
  return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_real() const { return sgn(c_[2]) == 0 && c_[3] == -c_[1]; }

bool Scalar::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

RealScalar Scalar::as_real() const {
  if (!is_real())
    throw std::domain_error("scalar " + to_string() + " is not real");
  return {c_[0], c_[1]};
}

Scalar Scalar::operator+(const Scalar &o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar &o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (std::size_t k = 0; k < 4; ++k)
    r.c_[k] = -c_[k];
  return r;
}

Scalar &Scalar::operator+=(const Scalar &o) {
  for (std::size_t k = 0; k < 4; ++k)
    c_[k] += o.c_[k];
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
  for (std::size_t k = 0; k < 4; ++k)
    c_[k] -= o.c_[k];
  return *this;
}

Scalar Scalar::operator*(const Scalar &o) const {
  if (is_rational()) {
    Scalar r;
    if (sgn(c_[0]) == 0)
      return r;
    for (std::size_t k = 0; k < 4; ++k)
      r.c_[k] = c_[0] * o.c_[k];
    return r;
  }
  if (o.is_rational())
    return o * *this;
  Scalar r;
  Rational t;
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0)
      continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (sgn(o.c_[j]) == 0)
        continue;
      t = c_[i] * o.c_[j];
      const std::size_t k = i + j;
      if (k < 4)
        r.c_[k] += t;
      else
        r.c_[k - 4] -= t; // z^4 = -1
    }
  }
  return r;
}

Scalar Scalar::galois(int k) const {
  if (k % 2 == 0)
    throw std::invalid_argument("galois: exponent must be odd");
  const int kk = ((k % 8) + 8) % 8;
  Scalar r;
  for (int i = 0; i < 4; ++i) {
    const int j = (i * kk) % 8;
    if (j < 4)
      r.c_[j] += c_[i];
    else
      r.c_[j - 4] -= c_[i];
  }
  return r;
}

Scalar Scalar::conj() const { return galois(7); }

Scalar Scalar::inv() const {
  if (is_zero())
    throw DivisionByZero();
  if (is_rational())
    return Scalar(Rational(1) / c_[0]);
  // Product of the other three conjugates; x * y is the (rational) norm.
  const Scalar y = galois(3) * galois(5) * galois(7);
  const Scalar n = *this * y;
  Scalar r;
  for (std::size_t k = 0; k < 4; ++k)
    r.c_[k] = y.c_[k] / n.c_[0];
  return r;
}

RealScalar Scalar::modulus_squared() const { return (*this * conj()).as_real(); }

std::string Scalar::to_string() const {
  // z = (sqrt2 + i*sqrt2)/2, z^3 = (-sqrt2 + i*sqrt2)/2
  const Rational s2 = (c_[1] - c_[3]) / 2;
  const Rational is2 = (c_[1] + c_[3]) / 2;
  std::string out;
  append_term(out, c_[0], "");
  append_term(out, c_[2], "i");
  append_term(out, s2, "sqrt2");
  append_term(out, is2, "i*sqrt2");
  return out.empty() ? "0" : out;
}

std::ostream &operator<<(std::ostream &os, const Scalar &x) { return os << x.to_string(); }
std::ostream &operator<<(std::ostream &os, const RealScalar &x) { return os << x.to_string(); }

namespace {

class ScalarParser {
public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar parse() {
    skip();
    if (pos_ == s_.size())
      fail("empty scalar");
    Scalar total;
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size())
        break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Scalar t = term();
      total += sign < 0 ? -t : t;
      first = false;
    }
    return total;
  }

private:
  Scalar term() {
    Scalar acc = factor();
    while (true) {
      skip();
      if (pos_ == s_.size())
        return acc;
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        ++pos_;
        const Scalar d = factor();
        if (d.is_zero())
          fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  Scalar factor() {
    skip();
    if (pos_ == s_.size())
      fail("missing factor");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      mpz_class z(std::string(s_.substr(start, pos_ - start)));
      Scalar v{Rational(z)};
      // "2i" style juxtaposition
      skip();
      if (pos_ < s_.size() && (peek() == 'i' || peek() == 's'))
        v *= factor();
      return v;
    }
    if (s_.substr(pos_, 5) == "sqrt2") {
      pos_ += 5;
      return Scalar::sqrt2();
    }
    if (peek() == 'i') {
      ++pos_;
      return Scalar::i();
    }
    fail("unexpected character");
    return {};
  }

  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string &why) const {
    throw std::invalid_argument("cannot parse scalar '" + std::string(s_) + "': " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

} // namespace crsym
