#pragma once

#include "crsym/examples.hpp"
#include "crsym/scan.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace crsym {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, missing fields, unparsable scalars.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Scalar &x);
/// Accepts {"a0".."a3"} objects (rational strings or integers), shorthand
/// strings such as "i/sqrt2", and integers.
Scalar scalar_from_json(const Json &j);

Json to_json(const RealScalar &x);
RealScalar real_from_json(const Json &j);

Json to_json(const Mat &m);
Mat mat_from_json(const Json &j);

Json to_json(const CRSymbolData &s);
CRSymbolData symbol_from_json(const Json &j);

Json to_json(const CspElement &x);
/// Either {"block", "scale"} or a plain full 2m x 2m matrix.
CspElement csp_from_json(const Json &j, std::size_t m);

Json to_json(const ModifiedSymbolCandidate &c);
ModifiedSymbolCandidate candidate_from_json(const Json &j);
/// True when the document carries a "g0" field.
bool has_candidate(const Json &j);

Json to_json(const SymbolReport &r);
Json to_json(const ProlongReport &r);
Json to_json(const Certificate &c);
Json to_json(const ScanReport &r);
Json to_json(const ScanConfig &c);

Json parse_json(std::string_view text);
Json read_json_file(const std::string &path);

std::string to_string(CandidateKind k);
std::string to_string(Verdict v);
std::string to_string(ScanMode m);

} // namespace crsym
