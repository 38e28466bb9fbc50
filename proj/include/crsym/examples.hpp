#pragma once

#include "crsym/reduced.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace crsym {

struct ExpectedValues {
  Signature signature;
  bool regular = false;
  bool recoverable = false;
  std::size_t dimA = 0;
  std::size_t dimG00 = 0;
  std::size_t dim_g0_candidate = 0;
  std::vector<std::pair<int, std::size_t>> prolong_dims;
  std::size_t prolong_total = 0;
  std::size_t positive_dim = 0;
};

/// Worked examples: eg1 (nonregular, m = 2), eg2 (regular, m = 3, reduced
/// g0 of dim 6) and eg3 (the eg2 symbol with g0 = g_0).
struct BuiltinExample {
  std::string id;
  CRSymbolData symbol;
  ModifiedSymbolCandidate candidate;
  ExpectedValues expected;
};

const std::vector<std::string> &builtin_ids();
bool is_builtin(std::string_view id);
/// Throws std::out_of_range for unknown ids.
BuiltinExample builtin(std::string_view id);

struct FieldMismatch {
  std::string field, expected, actual;
};

/// Recomputes every expected field; empty result means a full match.
std::vector<FieldMismatch> verify_builtin(const BuiltinExample &ex);

} // namespace crsym
