#pragma once

#include "crsym/prolong.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crsym {

enum class CandidateKind { modified, reduced };

/// A degree-0 space g0 inside csp(g_{-1}) proposed as a modified or reduced
/// modified symbol of type base.
struct ModifiedSymbolCandidate {
  CRSymbolData base;
  std::vector<CspElement> generators;
  std::optional<std::vector<Mat>> omegas;
  CandidateKind kind = CandidateKind::reduced;

  Subspace g0() const;
  GradedSpan graded() const { return GradedSpan::make(base.H, g0()); }
};

/// Empty iff the properties of the chosen kind hold.
std::vector<std::string> check_definition(const ModifiedSymbolCandidate &c);

/// g_- + g0 closed under the semidirect bracket, checked on all basis pairs.
bool bracket_closed(const GradedSpan &g);

/// The (0, 2) and (0, -2) generators built from the omegas.
CspElement omega_generator_plus(const Mat &H, const Mat &C, const Mat &omega);
CspElement omega_generator_minus(const Mat &H, const Mat &C, const Mat &omega);

struct SystemResult {
  bool holds = false;
  std::string failure;
  /// eta[k][i]: coefficients for the k-th basis element of A0 and generator i.
  std::vector<std::vector<Vec>> eta;
  /// mu[i][j]: coefficients mu_{i,j}^s.
  std::vector<std::vector<Vec>> mu;
};

/// Items (i)-(iv) for every basis element of A0 (flattened m x m matrices).
/// Throws std::invalid_argument when the candidate has no omegas.
SystemResult verify_system(const ModifiedSymbolCandidate &c, const Subspace &A0);

/// X -> s^{-1} X_{0,2} + X_{0,0} + s X_{0,-2}, then each generator is rescaled
/// so its C-block is unchanged.
ModifiedSymbolCandidate conjugate_by_block_dilation(const ModifiedSymbolCandidate &c,
                                                    const Scalar &s);

bool involution_invariant(const ModifiedSymbolCandidate &c);

enum class Verdict { exists_unknown, no_reduced_symbol };

struct Inequality {
  RealScalar lhs, rhs;
  bool strict = false;
  bool holds = false;
};

struct Certificate {
  Verdict verdict = Verdict::exists_unknown;
  std::vector<std::string> precondition_failures;
  RealScalar max_modulus2;
  RealScalar sum_modulus2;
  RealScalar two_re_mu;
  /// max|l|^2 <= 2 Re mu, forced by the diagonal entries
  Inequality ineq1;
  /// 2m Re mu = sum |l|^2 < m max|l|^2
  Inequality ineq2;
};

/// r = 1, H = h I (h real, nonzero), C diagonal invertible with pairwise
/// distinct moduli: no reduced modified symbol exists.
Certificate obstruction_r1_definite(const CRSymbolData &s);

} // namespace crsym
