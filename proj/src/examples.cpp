#include "crsym/examples.hpp"

#include <stdexcept>

namespace crsym {

namespace {

Mat unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat e(n, n);
  e(i, j) = 1;
  return e;
}

Mat antidiag(std::size_t n) {
  Mat h(n, n);
  for (std::size_t k = 0; k < n; ++k)
    h(k, n - 1 - k) = 1;
  return h;
}

Mat diag(std::initializer_list<long> d) {
  Vec v;
  for (long x : d)
    v.emplace_back(x);
  return Mat::diagonal(v);
}

BuiltinExample eg1() {
  const Scalar i = Scalar::i();
  const Scalar r = Scalar::sqrt2().inv(); // 1/sqrt2
  BuiltinExample ex;
  ex.id = "eg1";
  ex.symbol = {2, 1, antidiag(2), {Mat{{0, i}, {1, 0}}}};
  const Mat xplus{{0, i * r, 0, i}, {r, 0, 1, 0}, {0, 0, 0, -(i * r)}, {0, 0, -r, 0}};
  const Mat xminus{{0, i * r, 0, 0}, {-r, 0, 0, 0}, {0, -i, 0, -(i * r)}, {1, 0, r, 0}};
  ex.candidate.base = ex.symbol;
  ex.candidate.kind = CandidateKind::reduced;
  ex.candidate.generators = {CspElement::from_full(xplus), CspElement::from_full(xminus),
                             CspElement::scalar(2, 1)};
  ex.candidate.omegas = std::vector<Mat>{ex.symbol.C[0] * r};
  ex.expected = {{1, 1}, false, true, 1, 2, 3, {{-2, 1}, {-1, 4}, {0, 3}, {1, 0}}, 8, 0};
  return ex;
}

CRSymbolData eg2_symbol() {
  return {3, 1, antidiag(3), {unit(3, 0, 1) + unit(3, 1, 2)}};
}

BuiltinExample eg2() {
  BuiltinExample ex;
  ex.id = "eg2";
  ex.symbol = eg2_symbol();
  const Mat &C = ex.symbol.C[0];
  const Mat z(3, 3);
  const Mat xplus = block_matrix(unit(3, 0, 1), C, z, -unit(3, 1, 2));
  const Mat xminus = block_matrix(-unit(3, 1, 2), z, C.conj(), unit(3, 0, 1));
  Mat c4(6, 6);
  c4(0, 2) = 1;
  c4(3, 5) = -1;
  ex.candidate.base = ex.symbol;
  ex.candidate.kind = CandidateKind::reduced;
  ex.candidate.generators = {CspElement::from_full(xplus),
                             CspElement::from_full(xminus),
                             CspElement::scalar(3, 1),
                             CspElement::from_full(diag({1, 0, 0, 0, 0, -1})),
                             CspElement::from_full(diag({0, 0, 1, -1, 0, 0})),
                             CspElement::from_full(c4)};
  ex.candidate.omegas = std::vector<Mat>{unit(3, 0, 1)};
  ex.expected = {{2, 1}, true, true, 4, 5, 6, {{-2, 1}, {-1, 6}, {0, 6}, {1, 1}, {2, 0}}, 14, 1};
  return ex;
}

BuiltinExample eg3() {
  BuiltinExample ex;
  ex.id = "eg3";
  ex.symbol = eg2_symbol();
  const Mat &C = ex.symbol.C[0];
  const Mat &H = ex.symbol.H;
  ex.candidate.base = ex.symbol;
  ex.candidate.kind = CandidateKind::reduced;
  ex.candidate.generators = {generator_plus(C), generator_minus(C), CspElement::scalar(3, 1),
                             g00_element(unit(3, 0, 0), H), g00_element(unit(3, 1, 1), H),
                             g00_element(unit(3, 2, 2), H), g00_element(unit(3, 0, 2), H)};
  ex.candidate.omegas = std::vector<Mat>{Mat(3, 3)};
  ex.expected = {{2, 1}, true, true, 4, 5, 7, {}, 16, 2};
  return ex;
}

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

std::string dims_str(const std::vector<std::pair<int, std::size_t>> &d) {
  std::string s = "[";
  for (std::size_t k = 0; k < d.size(); ++k)
    s += (k ? ", " : "") + std::string("[") + std::to_string(d[k].first) + ", " +
         std::to_string(d[k].second) + "]";
  return s + "]";
}

} // namespace

const std::vector<std::string> &builtin_ids() {
  static const std::vector<std::string> ids{"eg1", "eg2", "eg3"};
  return ids;
}

bool is_builtin(std::string_view id) {
  for (const auto &x : builtin_ids())
    if (x == id)
      return true;
  return false;
}

BuiltinExample builtin(std::string_view id) {
  if (id == "eg1")
    return eg1();
  if (id == "eg2")
    return eg2();
  if (id == "eg3")
    return eg3();
  throw std::out_of_range("unknown builtin example: " + std::string(id));
}

std::vector<FieldMismatch> verify_builtin(const BuiltinExample &ex) {
  std::vector<FieldMismatch> out;
  auto check = [&](const std::string &field, const std::string &want, const std::string &got) {
    if (want != got)
      out.push_back({field, want, got});
  };
  const auto &e = ex.expected;
  const SymbolReport rep = analyze(ex.symbol);
  check("signature", str(e.signature.p) + "," + str(e.signature.q),
        str(rep.signature.p) + "," + str(rep.signature.q));
  check("regular", str(e.regular), str(rep.regular));
  check("recoverable", str(e.recoverable), str(rep.recoverable));
  check("dimA", str(e.dimA), str(rep.dimA));
  check("dimG00", str(e.dimG00), str(rep.dimG00));
  const auto violations = check_definition(ex.candidate);
  check("candidate_violations", "0", str(violations.size()));
  check("dim_g0", str(e.dim_g0_candidate), str(ex.candidate.g0().dim()));
  const ProlongReport pr = tanaka_prolong(ex.candidate.graded());
  check("terminated", "true", str(pr.terminated));
  if (!e.prolong_dims.empty())
    check("prolong_dims", dims_str(e.prolong_dims), dims_str(pr.dims));
  check("prolong_total", str(e.prolong_total), str(pr.total));
  check("positive_dim", str(e.positive_dim), str(pr.positive_dim()));
  return out;
}

} // namespace crsym
