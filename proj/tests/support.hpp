#pragma once

#include "crsym/scan.hpp"

#include <cmath>
#include <complex>
#include <random>

namespace crsym::testing {

using Cplx = std::complex<double>;

/// Floating evaluation, used only as an independent cross-check of exact results.
inline Cplx to_complex(const Scalar &x) {
  const double h = std::sqrt(0.5);
  const Cplx zeta(h, h);
  Cplx acc = 0, p = 1;
  for (std::size_t k = 0; k < 4; ++k, p *= zeta)
    acc += x.coeff(k).get_d() * p;
  return acc;
}

constexpr double float_tol = 1e-9;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long bound = 5) {
    Rational q(integer(-bound, bound), integer(1, 3));
    q.canonicalize();
    return q;
  }

  /// Random element of Q(zeta8) with small rational coordinates.
  Scalar scalar(long bound = 5) {
    return Scalar(Scalar::Coeffs{rational(bound), rational(bound), rational(bound), rational(bound)});
  }

  Scalar nonzero_scalar(long bound = 5) {
    Scalar x;
    while (x.is_zero())
      x = scalar(bound);
    return x;
  }

  Scalar gaussian(long bound = 3) { return Scalar(integer(-bound, bound)) + Scalar(integer(-bound, bound)) * Scalar::i(); }

  Mat gaussian_mat(std::size_t r, std::size_t c, long bound = 3) {
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = gaussian(bound);
    return m;
  }

  Mat invertible_gaussian(std::size_t n, long bound = 3) {
    for (;;) {
      Mat s = gaussian_mat(n, n, bound);
      if (inverse(s))
        return s;
    }
  }

  Vec vec(std::size_t n, long bound = 3) {
    Vec v(n);
    for (auto &x : v)
      x = gaussian(bound);
    return v;
  }

  std::uint64_t seed() { return gen_(); }

  std::mt19937_64 &engine() { return gen_; }

private:
  std::mt19937_64 gen_;
};

/// Random valid symbol via the scan sampler.
inline CRSymbolData random_valid_symbol(Rng &rng, std::size_t m, std::size_t r, Signature sig,
                                        ScanMode mode = ScanMode::dense, std::size_t bound = 4) {
  ScanConfig cfg;
  cfg.m = m;
  cfg.r = r;
  cfg.signature = sig;
  cfg.mode = mode;
  cfg.numerator_bound = bound;
  cfg.seed = rng.seed();
  return random_symbol(cfg, 0);
}

/// Random element of csp(g_{-1}) for the given H.
inline CspElement random_csp(Rng &rng, const Mat &H, long bound = 2) {
  const Subspace basis = build_csp_basis(H);
  const std::size_t m = H.rows();
  Vec acc(csp_ambient(m));
  for (const auto &b : basis.basis())
    acc = acc + rng.gaussian(bound) * b;
  return CspElement::from_coords(acc, m);
}

inline Mat unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat e(n, n);
  e(i, j) = 1;
  return e;
}

inline Vec unit_vec(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = 1;
  return v;
}

inline Subspace span_of(const std::vector<Mat> &ms, std::size_t ambient) {
  std::vector<Vec> v;
  for (const auto &m : ms)
    v.push_back(m.flat());
  return Subspace::span(v, ambient);
}

inline std::vector<Mat> so_basis(std::size_t m) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      out.push_back(unit(m, i, j) - unit(m, j, i));
  return out;
}

/// Closed form of A for nonsingular C_i:
///   A = cap_i ( (span{C_j C_i^{-1}} + so(m) H C_i^{-1}) cap (span{conj(C_i)^{-1} conj(C_j)} + conj(C_i)^{-1} H^{-1} so(m)) ).
inline Subspace closed_form_A(const CRSymbolData &s) {
  const std::size_t m = s.m, mm = m * m;
  const Mat Hinv = *inverse(s.H);
  Subspace acc = Subspace::full(mm);
  for (std::size_t i = 0; i < s.r; ++i) {
    const Mat Ci_inv = *inverse(s.C[i]);
    const Mat Cbi_inv = *inverse(s.C[i].conj());
    std::vector<Mat> first, second;
    for (std::size_t j = 0; j < s.r; ++j) {
      first.push_back(s.C[j] * Ci_inv);
      second.push_back(Cbi_inv * s.C[j].conj());
    }
    for (const auto &b : so_basis(m)) {
      first.push_back(b * s.H * Ci_inv);
      second.push_back(Cbi_inv * Hinv * b);
    }
    acc = acc.intersect(span_of(first, mm)).intersect(span_of(second, mm));
  }
  return acc;
}

/// Rank over C computed from the floating images with a pinned tolerance; an
/// independent check on the exact rank.
inline std::size_t float_rank(const Mat &m) {
  std::vector<std::vector<Cplx>> a(m.rows(), std::vector<Cplx>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = to_complex(m(i, j));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < m.rows(); ++r)
      if (std::abs(a[r][c]) > std::abs(a[best][c]))
        best = r;
    if (std::abs(a[best][c]) < 1e-8)
      continue;
    std::swap(a[best], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank)
        continue;
      const Cplx f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k)
        a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

} // namespace crsym::testing
