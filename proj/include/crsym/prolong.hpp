#pragma once

#include "crsym/symbol.hpp"

#include <utility>
#include <vector>

namespace crsym {

/// g_- = g_{-2} + g_{-1}: central z and C^{2m} with [x, y] = omega(x, y) z.
struct HeisenbergAlg {
  std::size_t m = 0;
  Mat J;

  static HeisenbergAlg from_H(const Mat &H) { return {H.rows(), sympl_form(H)}; }
  /// omega(x, y) = y^T J x
  Scalar omega(std::span<const Scalar> x, std::span<const Scalar> y) const;
};

/// Element (v + z_coeff * z, X) of g_- x| csp(g_{-1}).
struct SemidirectElement {
  Vec v;
  Scalar z;
  CspElement x;

  static SemidirectElement zero(std::size_t m);
  Vec coords() const;
  bool operator==(const SemidirectElement &) const = default;
};

SemidirectElement semidirect_bracket(const HeisenbergAlg &heis, const SemidirectElement &a,
                                     const SemidirectElement &b);

/// A degree-0 space inside csp(g_{-1}) together with its Heisenberg algebra.
struct GradedSpan {
  HeisenbergAlg heis;
  Subspace g0;

  static GradedSpan make(const Mat &H, Subspace g0) { return {HeisenbergAlg::from_H(H), std::move(g0)}; }
};

/// True iff the scale element -I lies in g0.
bool grading_element_check(const GradedSpan &g);

/// One graded piece g_k, k >= -1, stored through its brackets with g_-.
/// eval_v[b][a] = coordinates of [f_b, e_a] in g_{k-1};
/// eval_z[b] = coordinates of [f_b, z] in g_{k-2}.
struct GradedPiece {
  int degree = 0;
  std::vector<std::vector<Vec>> eval_v;
  std::vector<Vec> eval_z;

  std::size_t dim() const { return eval_v.size(); }
};

/// g_{-1}, g_0, g_1, ... as eval tables.
struct TanakaTower {
  std::size_t m = 0;
  std::vector<GradedPiece> pieces; ///< pieces[j] has degree j - 1

  std::size_t dim(int degree) const;
  const GradedPiece &piece(int degree) const { return pieces.at(static_cast<std::size_t>(degree + 1)); }
};

/// Builds g_{-1}, g_0 and the positive pieces up to max_degree, stopping after
/// the first zero piece when stop_at_zero is set.
TanakaTower tanaka_tower(const GradedSpan &g, int max_degree, bool stop_at_zero = true);

struct ProlongReport {
  std::vector<std::pair<int, std::size_t>> dims;
  std::size_t total = 0;
  bool terminated = false;

  std::size_t positive_dim() const;
  std::size_t dim(int degree) const;
};

constexpr int default_max_degree = 10;

ProlongReport tanaka_prolong(const GradedSpan &g, int max_degree = default_max_degree);

} // namespace crsym
