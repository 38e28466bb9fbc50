#include "crsym/cli.hpp"

#include "crsym/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace crsym {

namespace {

class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Target {
  std::string label;
  CRSymbolData symbol;
  std::optional<ModifiedSymbolCandidate> candidate;
};

Target load_target(const std::string &t) {
  if (is_builtin(t)) {
    auto ex = builtin(t);
    return {t, ex.symbol, ex.candidate};
  }
  const Json j = read_json_file(t);
  Target out{t, symbol_from_json(j), std::nullopt};
  if (has_candidate(j))
    out.candidate = candidate_from_json(j);
  return out;
}

void require_valid(const CRSymbolData &s) {
  const auto v = validate(s);
  if (v.empty())
    return;
  std::string msg = "invalid symbol:";
  for (const auto &x : v)
    msg += "\n  " + x;
  throw ValidationError(msg);
}

void print_matrix(std::ostream &out, const Mat &m, const std::string &indent) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c)
      out << (c ? ", " : "") << m(r, c);
    out << "]\n";
  }
}

int max_degree_default() {
  if (const char *env = std::getenv("CRSYM_MAX_DEGREE")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1)
        return v;
    } catch (const std::exception &) {
    }
    throw ValidationError("CRSYM_MAX_DEGREE must be a positive integer");
  }
  return default_max_degree;
}

int cmd_analyze(const std::string &target, bool json, std::ostream &out) {
  const Target t = load_target(target);
  require_valid(t.symbol);
  const SymbolReport rep = analyze(t.symbol);
  std::optional<Certificate> cert;
  if (t.symbol.r == 1)
    cert = obstruction_r1_definite(t.symbol);
  if (json) {
    Json j = to_json(rep);
    if (cert)
      j["obstruction"] = to_json(*cert);
    out << j.dump(2) << "\n";
    return exit_code::ok;
  }
  out << "symbol: " << t.label << " (m=" << t.symbol.m << ", r=" << t.symbol.r << ")\n"
      << "signature: (" << rep.signature.p << ", " << rep.signature.q << ")\n"
      << "regular: " << (rep.regular ? "true" : "false") << "\n"
      << "recoverable: " << (rep.recoverable ? "true" : "false") << "\n"
      << "dim A: " << rep.dimA << "\n"
      << "dim g00: " << rep.dimG00 << "\n";
  if (cert) {
    out << "r=1 definite obstruction: " << to_string(cert->verdict);
    if (!cert->precondition_failures.empty()) {
      out << " (";
      for (std::size_t k = 0; k < cert->precondition_failures.size(); ++k)
        out << (k ? "; " : "") << cert->precondition_failures[k];
      out << ")";
    }
    out << "\n";
  }
  return exit_code::ok;
}

int cmd_prolong(const std::string &target, bool reduced, bool full, int max_degree, bool json,
                std::ostream &out) {
  const Target t = load_target(target);
  require_valid(t.symbol);
  if (reduced && full)
    throw ValidationError("--reduced and --full are exclusive");
  const bool use_candidate = reduced || (!full && t.candidate);
  GradedSpan g;
  if (use_candidate) {
    if (!t.candidate)
      throw ValidationError("no reduced candidate in " + t.label);
    const auto v = check_definition(*t.candidate);
    if (!v.empty()) {
      std::string msg = "candidate fails its definition check:";
      for (const auto &x : v)
        msg += "\n  " + x;
      throw ValidationError(msg);
    }
    g = t.candidate->graded();
  } else {
    g = GradedSpan::make(t.symbol.H, compute_g0(t.symbol));
  }
  const ProlongReport rep = tanaka_prolong(g, max_degree);
  if (json) {
    out << to_json(rep).dump(2) << "\n";
  } else {
    for (const auto &[k, d] : rep.dims)
      out << "g_" << k << ": " << d << "\n";
    out << "total: " << rep.total << "\n"
        << "terminated: " << (rep.terminated ? "true" : "false") << "\n";
  }
  return rep.terminated ? exit_code::ok : exit_code::non_termination;
}

Signature parse_signature(const std::string &s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw ParseError("signature must be p,q");
  try {
    std::size_t used = 0;
    const auto p = std::stoul(s.substr(0, comma), &used);
    const auto q = std::stoul(s.substr(comma + 1));
    return {p, q};
  } catch (const std::exception &) {
    throw ParseError("signature must be p,q");
  }
}

int cmd_scan(ScanConfig cfg, const std::string &signature, const std::string &mode,
             const std::string &emit_dir, std::ostream &out) {
  cfg.signature = signature.empty() ? Signature{cfg.m, 0} : parse_signature(signature);
  if (mode == "dense")
    cfg.mode = ScanMode::dense;
  else if (mode == "diagonal")
    cfg.mode = ScanMode::diagonal;
  else
    throw ParseError("mode must be dense or diagonal");
  const auto problems = validate(cfg);
  if (!problems.empty())
    throw ValidationError("invalid scan configuration: " + problems.front());
  const ScanReport rep = run_genericity_scan(cfg);
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    for (const auto &e : rep.exceptions) {
      std::ofstream f(std::filesystem::path(emit_dir) / ("trial_" + std::to_string(e.trial) + ".json"));
      f << to_json(e.symbol).dump(2) << "\n";
    }
  }
  out << to_json(rep).dump(2) << "\n";
  return exit_code::ok;
}

int cmd_verify(const std::string &id, bool json, std::ostream &out) {
  if (!is_builtin(id))
    throw ValidationError("unknown builtin example: " + id);
  const auto mism = verify_builtin(builtin(id));
  if (json) {
    Json j{{"id", id}, {"pass", mism.empty()}, {"mismatches", Json::array()}};
    for (const auto &f : mism)
      j["mismatches"].push_back({{"field", f.field}, {"expected", f.expected}, {"actual", f.actual}});
    out << j.dump(2) << "\n";
  } else if (mism.empty()) {
    out << id << ": pass\n";
  } else {
    out << id << ": FAIL\n";
    for (const auto &f : mism)
      out << "  " << f.field << ": expected " << f.expected << ", got " << f.actual << "\n";
  }
  return mism.empty() ? exit_code::ok : exit_code::golden_mismatch;
}

int cmd_conjugate(const std::string &target, const std::string &dilation, bool json,
                  std::ostream &out) {
  const Target t = load_target(target);
  require_valid(t.symbol);
  if (!t.candidate)
    throw ValidationError("no candidate g0 in " + t.label);
  Scalar s;
  try {
    s = parse_scalar(dilation);
  } catch (const std::exception &e) {
    throw ParseError(std::string("bad --dilation: ") + e.what());
  }
  if (s.is_zero())
    throw ValidationError("--dilation must be nonzero");
  const auto c = conjugate_by_block_dilation(*t.candidate, s);
  const bool inv = involution_invariant(c);
  if (json) {
    out << Json{{"candidate", to_json(c)}, {"involution_invariant", inv}}.dump(2) << "\n";
    return exit_code::ok;
  }
  out << "dilation s = " << s << "\n";
  for (std::size_t k = 0; k < c.generators.size(); ++k) {
    out << "generator " << k + 1 << ":\n";
    print_matrix(out, c.generators[k].full(), "  ");
  }
  out << "involution invariant: " << (inv ? "true" : "false") << "\n";
  return exit_code::ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact invariants of 2-nondegenerate CR symbols", "crsym"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output")->configurable(false);
  app.fallthrough();

  std::string target;
  auto *analyze_cmd = app.add_subcommand("analyze", "Symbol invariants of a file or builtin (eg1, eg2, eg3)");
  analyze_cmd->add_option("target", target, "Symbol JSON file or builtin id")->required();

  bool reduced = false, full = false;
  int max_degree = 0;
  auto *prolong_cmd = app.add_subcommand("prolong", "Universal Tanaka prolongation dimensions");
  prolong_cmd->add_option("target", target, "Symbol/candidate JSON file or builtin id")->required();
  prolong_cmd->add_flag("--reduced", reduced, "Prolong the reduced candidate g0");
  prolong_cmd->add_flag("--full", full, "Prolong the full g0 of the symbol");
  prolong_cmd->add_option("--max-degree", max_degree, "Highest degree computed (default 10, env CRSYM_MAX_DEGREE)")
      ->check(CLI::PositiveNumber);

  ScanConfig cfg;
  std::string signature, mode = "dense", emit_dir;
  auto *scan_cmd = app.add_subcommand("scan", "Seeded genericity scan over random symbols");
  scan_cmd->add_option("--m", cfg.m, "m = rank of the reduced Levi form")->capture_default_str();
  scan_cmd->add_option("--r", cfg.r, "rank of the Levi kernel")->capture_default_str();
  scan_cmd->add_option("--signature", signature, "p,q (default m,0)");
  scan_cmd->add_option("--mode", mode, "dense or diagonal")->capture_default_str();
  scan_cmd->add_option("--trials", cfg.trials, "number of trials")->capture_default_str();
  scan_cmd->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  scan_cmd->add_option("--bound", cfg.numerator_bound, "bound on the integer coordinates of entries")->capture_default_str();
  scan_cmd->add_option("--workers", cfg.workers, "worker threads")->capture_default_str();
  scan_cmd->add_option("--emit-exceptions", emit_dir, "directory for exceptional symbols");

  std::string id;
  auto *verify_cmd = app.add_subcommand("verify", "Check a builtin example against its expected values");
  verify_cmd->add_option("id", id, "eg1, eg2 or eg3")->required();

  std::string dilation;
  auto *conj_cmd = app.add_subcommand("conjugate", "Block dilation of a candidate g0");
  conj_cmd->add_option("target", target, "Candidate JSON file or builtin id")->required();
  conj_cmd->add_option("--dilation", dilation, "dilation s, e.g. 2, i, 1/sqrt2")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::parse;
  }

  try {
    if (*analyze_cmd)
      return cmd_analyze(target, json, out);
    if (*prolong_cmd)
      return cmd_prolong(target, reduced, full, max_degree ? max_degree : max_degree_default(),
                         json, out);
    if (*scan_cmd)
      return cmd_scan(cfg, signature, mode, emit_dir, out);
    if (*verify_cmd)
      return cmd_verify(id, json, out);
    if (*conj_cmd)
      return cmd_conjugate(target, dilation, json, out);
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::parse;
  } catch (const nlohmann::json::exception &e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::parse;
  } catch (const ValidationError &e) {
    err << e.what() << "\n";
    return exit_code::validation;
  } catch (const std::invalid_argument &e) {
    err << "validation error: " << e.what() << "\n";
    return exit_code::validation;
  }
  return exit_code::parse;
}

} // namespace crsym
