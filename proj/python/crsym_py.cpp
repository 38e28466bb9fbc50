#include "crsym/cli.hpp"
#include "crsym/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace crsym;

namespace {

CRSymbolData symbol_arg(const std::string &text) {
  const Json j = parse_json(text);
  const CRSymbolData s = j.is_string() ? builtin(j.get<std::string>()).symbol : symbol_from_json(j);
  const auto bad = validate(s);
  if (!bad.empty())
    throw std::invalid_argument("invalid symbol: " + bad.front());
  return s;
}

std::string analyze_json(const std::string &text) {
  const CRSymbolData s = symbol_arg(text);
  Json j = to_json(analyze(s));
  if (s.r == 1)
    j["obstruction"] = to_json(obstruction_r1_definite(s));
  return j.dump();
}

std::string prolong_json(const std::string &text, bool reduced, int max_degree) {
  const Json j = parse_json(text);
  if (reduced) {
    const ModifiedSymbolCandidate c = j.is_string() ? builtin(j.get<std::string>()).candidate : candidate_from_json(j);
    const auto bad = check_definition(c);
    if (!bad.empty())
      throw std::invalid_argument("candidate rejected: " + bad.front());
    return to_json(tanaka_prolong(c.graded(), max_degree)).dump();
  }
  const CRSymbolData s = symbol_arg(text);
  return to_json(tanaka_prolong(GradedSpan::make(s.H, compute_g0(s)), max_degree)).dump();
}

std::string conjugate_json(const std::string &text, const std::string &s) {
  const Json j = parse_json(text);
  const ModifiedSymbolCandidate c = j.is_string() ? builtin(j.get<std::string>()).candidate : candidate_from_json(j);
  Scalar x;
  try {
    x = parse_scalar(s);
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
  if (x.is_zero())
    throw std::invalid_argument("dilation must be nonzero");
  const ModifiedSymbolCandidate d = conjugate_by_block_dilation(c, x);
  return Json{{"candidate", to_json(d)}, {"involution_invariant", involution_invariant(d)}}.dump();
}

std::string scan_json(std::size_t m, std::size_t r, std::size_t p, std::size_t q, const std::string &mode,
                      std::size_t trials, std::uint64_t seed, std::size_t bound, std::size_t workers) {
  ScanConfig cfg;
  cfg.m = m;
  cfg.r = r;
  cfg.signature = {p, q};
  if (mode == "dense")
    cfg.mode = ScanMode::dense;
  else if (mode == "diagonal")
    cfg.mode = ScanMode::diagonal;
  else
    throw std::invalid_argument("mode must be dense or diagonal");
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.numerator_bound = bound;
  cfg.workers = workers;
  py::gil_scoped_release release;
  return to_json(run_genericity_scan(cfg)).dump();
}

} // namespace

PYBIND11_MODULE(_crsym, mod) {
  mod.doc() = "Exact invariants of 2-nondegenerate CR symbols; JSON strings in and out.";
  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);

  mod.def("builtin_ids", [] { return builtin_ids(); });
  mod.def("builtin", [](const std::string &id) {
    const BuiltinExample ex = builtin(id);
    return Json{{"symbol", to_json(ex.symbol)}, {"candidate", to_json(ex.candidate)}}.dump();
  });
  mod.def("verify", [](const std::string &id) {
    if (!is_builtin(id))
      throw std::invalid_argument("unknown example: " + id);
    Json mism = Json::array();
    for (const auto &f : verify_builtin(builtin(id)))
      mism.push_back({{"field", f.field}, {"expected", f.expected}, {"actual", f.actual}});
    return Json{{"id", id}, {"pass", mism.empty()}, {"mismatches", mism}}.dump();
  });
  mod.def("analyze", &analyze_json, py::arg("target"));
  mod.def("prolong", &prolong_json, py::arg("target"), py::arg("reduced"), py::arg("max_degree"));
  mod.def("conjugate", &conjugate_json, py::arg("target"), py::arg("dilation"));
  mod.def("scan", &scan_json, py::arg("m"), py::arg("r"), py::arg("p"), py::arg("q"), py::arg("mode"),
          py::arg("trials"), py::arg("seed"), py::arg("bound"), py::arg("workers"));
  mod.def("run_cli", [](const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
