#pragma once

#include "crsym/reduced.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crsym {

enum class ScanMode { dense, diagonal };

struct ScanConfig {
  std::size_t m = 3;
  std::size_t r = 1;
  Signature signature{3, 0};
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t numerator_bound = 20;
  ScanMode mode = ScanMode::dense;
  std::size_t workers = 1;
};

/// Empty iff the configuration is usable.
std::vector<std::string> validate(const ScanConfig &cfg);

/// Deterministic in (cfg.seed, trial_index); independent of cfg.workers.
/// Dense mode draws Gaussian integers, diagonal mode integers of Z[zeta8],
/// all coordinates bounded by numerator_bound.
CRSymbolData random_symbol(const ScanConfig &cfg, std::size_t trial_index);

struct TrialResult {
  std::size_t trial = 0;
  bool A_minimal = false;
  bool nonregular = false;
  bool recoverable = false;
  /// Only meaningful when obstruction_applies().
  bool obstructed = false;
};

struct ScanException {
  std::size_t trial = 0;
  std::vector<std::string> reasons;
  CRSymbolData symbol;
};

struct ScanReport {
  std::size_t A_minimal = 0;
  std::size_t nonregular = 0;
  std::size_t recoverable = 0;
  std::size_t obstructed = 0;
  std::size_t total = 0;
  std::uint64_t seed = 0;
  std::vector<ScanException> exceptions; ///< sorted by trial index
};

/// r = 1, definite signature, diagonal mode.
bool obstruction_applies(const ScanConfig &cfg);

TrialResult evaluate_trial(const CRSymbolData &s, bool with_obstruction);

/// Throws std::invalid_argument for an invalid configuration.
ScanReport run_genericity_scan(const ScanConfig &cfg);

} // namespace crsym
