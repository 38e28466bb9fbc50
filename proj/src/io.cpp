#include "crsym/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace crsym {

namespace {

Rational rational_from_json(const Json &j) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (!j.is_string())
    throw ParseError("rational must be a string \"p/q\" or an integer");
  const auto s = j.get<std::string>();
  std::size_t k = 0;
  if (k < s.size() && (s[k] == '-' || s[k] == '+'))
    ++k;
  bool digits = false, slash = false, den_digits = false;
  for (; k < s.size(); ++k) {
    if (std::isdigit(static_cast<unsigned char>(s[k])))
      (slash ? den_digits : digits) = true;
    else if (s[k] == '/' && !slash && digits)
      slash = true;
    else
      throw ParseError("malformed rational: " + s);
  }
  if (!digits || (slash && !den_digits))
    throw ParseError("malformed rational: " + s);
  Rational q(s[0] == '+' ? s.substr(1) : s);
  if (q.get_den() == 0)
    throw ParseError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

const Json &field(const Json &j, const char *name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t count_field(const Json &j, const char *name) {
  const Json &v = field(j, name);
  if (!v.is_number_integer() || v.get<long>() < 0)
    throw ParseError(std::string("field \"") + name + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

Json signature_json(const Signature &s) { return Json::array({s.p, s.q}); }

Json dims_json(const std::vector<std::pair<int, std::size_t>> &d) {
  Json a = Json::array();
  for (const auto &[k, v] : d)
    a.push_back(Json::array({k, v}));
  return a;
}

Json inequality_json(const Inequality &q) {
  return {{"lhs", to_json(q.lhs)},
          {"relation", q.strict ? "<" : "<="},
          {"rhs", to_json(q.rhs)},
          {"holds", q.holds}};
}

} // namespace

Json to_json(const Scalar &x) {
  Json j;
  for (std::size_t k = 0; k < 4; ++k)
    j["a" + std::to_string(k)] = x.coeff(k).get_str();
  return j;
}

Scalar scalar_from_json(const Json &j) {
  if (j.is_number_integer())
    return Scalar(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const std::exception &e) {
      throw ParseError(e.what());
    }
  }
  if (!j.is_object())
    throw ParseError("scalar must be an object, a string or an integer");
  Scalar::Coeffs c;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::string key = "a" + std::to_string(k);
    c[k] = j.contains(key) ? rational_from_json(j.at(key)) : Rational(0);
  }
  for (const auto &[key, _] : j.items())
    if (key != "a0" && key != "a1" && key != "a2" && key != "a3")
      throw ParseError("unknown scalar field \"" + key + "\"");
  return Scalar(c);
}

Json to_json(const RealScalar &x) {
  return {{"a", x.rational_part().get_str()}, {"b", x.sqrt2_part().get_str()}};
}

RealScalar real_from_json(const Json &j) {
  return {rational_from_json(field(j, "a")), rational_from_json(field(j, "b"))};
}

Json to_json(const Mat &m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json &j) {
  if (!j.is_array() || j.empty())
    throw ParseError("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array())
    throw ParseError("matrix rows must be arrays");
  const std::size_t cols = j[0].size();
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const CRSymbolData &s) {
  Json cs = Json::array();
  for (const auto &c : s.C)
    cs.push_back(to_json(c));
  return {{"m", s.m}, {"r", s.r}, {"H", to_json(s.H)}, {"C", cs}};
}

CRSymbolData symbol_from_json(const Json &j) {
  CRSymbolData s;
  s.m = count_field(j, "m");
  s.r = count_field(j, "r");
  s.H = mat_from_json(field(j, "H"));
  const Json &cs = field(j, "C");
  if (!cs.is_array())
    throw ParseError("field \"C\" must be an array of matrices");
  for (const auto &c : cs)
    s.C.push_back(mat_from_json(c));
  return s;
}

Json to_json(const CspElement &x) { return {{"block", to_json(x.block)}, {"scale", to_json(x.scale)}}; }

CspElement csp_from_json(const Json &j, std::size_t m) {
  CspElement x;
  if (j.is_object()) {
    x = {mat_from_json(field(j, "block")), scalar_from_json(field(j, "scale"))};
  } else {
    x = CspElement::from_full(mat_from_json(j));
  }
  if (x.block.rows() != 2 * m || x.block.cols() != 2 * m)
    throw ParseError("g0 element must be 2m x 2m");
  return x;
}

std::string to_string(CandidateKind k) { return k == CandidateKind::modified ? "modified" : "reduced"; }
std::string to_string(Verdict v) {
  return v == Verdict::no_reduced_symbol ? "no-reduced-symbol" : "exists-unknown";
}
std::string to_string(ScanMode m) { return m == ScanMode::dense ? "dense" : "diagonal"; }

Json to_json(const ModifiedSymbolCandidate &c) {
  Json j = to_json(c.base);
  Json g0 = Json::array();
  for (const auto &x : c.generators)
    g0.push_back(to_json(x));
  j["g0"] = std::move(g0);
  if (c.omegas) {
    Json om = Json::array();
    for (const auto &o : *c.omegas)
      om.push_back(to_json(o));
    j["omegas"] = std::move(om);
  }
  j["kind"] = to_string(c.kind);
  return j;
}

bool has_candidate(const Json &j) { return j.is_object() && j.contains("g0"); }

ModifiedSymbolCandidate candidate_from_json(const Json &j) {
  ModifiedSymbolCandidate c;
  c.base = symbol_from_json(j);
  const Json &g0 = field(j, "g0");
  if (!g0.is_array())
    throw ParseError("field \"g0\" must be an array");
  for (const auto &x : g0)
    c.generators.push_back(csp_from_json(x, c.base.m));
  if (j.contains("omegas")) {
    std::vector<Mat> om;
    for (const auto &o : j.at("omegas"))
      om.push_back(mat_from_json(o));
    c.omegas = std::move(om);
  }
  const std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "reduced";
  if (kind == "reduced")
    c.kind = CandidateKind::reduced;
  else if (kind == "modified")
    c.kind = CandidateKind::modified;
  else
    throw ParseError("kind must be \"modified\" or \"reduced\"");
  return c;
}

Json to_json(const SymbolReport &r) {
  Json a = Json::array(), g = Json::array();
  std::size_t m = 0;
  while (m * m < r.A_basis.ambient_dim())
    ++m;
  for (const auto &b : r.A_basis.basis())
    a.push_back(to_json(Mat::unflatten(b, m, m)));
  for (const auto &b : r.G00_basis.basis())
    g.push_back(to_json(CspElement::from_coords(b, m)));
  return {{"signature", signature_json(r.signature)},
          {"regular", r.regular},
          {"recoverable", r.recoverable},
          {"dimA", r.dimA},
          {"dimG00", r.dimG00},
          {"A_basis", a},
          {"G00_basis", g}};
}

Json to_json(const ProlongReport &r) {
  return {{"dims", dims_json(r.dims)}, {"total", r.total}, {"terminated", r.terminated}};
}

Json to_json(const Certificate &c) {
  Json j{{"verdict", to_string(c.verdict)}, {"precondition_failures", c.precondition_failures}};
  if (c.precondition_failures.empty()) {
    j["max_modulus2"] = to_json(c.max_modulus2);
    j["sum_modulus2"] = to_json(c.sum_modulus2);
    j["two_re_mu"] = to_json(c.two_re_mu);
    j["ineq1"] = inequality_json(c.ineq1);
    j["ineq2"] = inequality_json(c.ineq2);
  }
  return j;
}

Json to_json(const ScanReport &r) {
  Json ex = Json::array();
  for (const auto &e : r.exceptions)
    ex.push_back({{"trial", e.trial}, {"reasons", e.reasons}, {"symbol", to_json(e.symbol)}});
  return {{"A_minimal", r.A_minimal}, {"nonregular", r.nonregular},
          {"recoverable", r.recoverable}, {"obstructed", r.obstructed},
          {"total", r.total},         {"seed", r.seed},
          {"exceptions", ex}};
}

Json to_json(const ScanConfig &c) {
  return {{"m", c.m},
          {"r", c.r},
          {"signature", signature_json(c.signature)},
          {"trials", c.trials},
          {"seed", c.seed},
          {"numerator_bound", c.numerator_bound},
          {"mode", to_string(c.mode)}};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

} // namespace crsym
