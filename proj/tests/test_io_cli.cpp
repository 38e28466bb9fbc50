#include "crsym/cli.hpp"
#include "crsym/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace crsym;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const char *env = std::getenv("CRSYM_TEST_TMP");
  fs::path p = env ? fs::path(env) : fs::temp_directory_path() / "crsym_cli_test";
  fs::create_directories(p);
  return p;
}

std::string write_file(const std::string &name, const std::string &text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

} // namespace

TEST_CASE("scalar JSON forms") {
  const Scalar x = Scalar(Rational(1, 2)) + Scalar::i() * Scalar::sqrt2();
  CHECK(scalar_from_json(to_json(x)) == x);
  CHECK(to_json(Scalar(3)) == Json{{"a0", "3"}, {"a1", "0"}, {"a2", "0"}, {"a3", "0"}});
  CHECK(scalar_from_json(Json("i/sqrt2")) * Scalar::sqrt2() == Scalar::i());
  CHECK(scalar_from_json(Json(-4)) == Scalar(-4));
  CHECK(scalar_from_json(Json{{"a2", "1"}}) == Scalar::i());
  CHECK(scalar_from_json(Json{{"a0", 2}}) == Scalar(2));
  CHECK_THROWS_AS(scalar_from_json(Json{{"a0", "1/0"}}), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json{{"a0", "x"}}), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json{{"b", "1"}}), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json("1 +")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json(1.5)), ParseError);
  CHECK(real_from_json(to_json(RealScalar(Rational(-3, 7), 2))) == RealScalar(Rational(-3, 7), 2));
}

TEST_CASE("symbol JSON round-trips") {
  for (const auto &id : builtin_ids()) {
    const auto ex = builtin(id);
    CHECK(symbol_from_json(parse_json(to_json(ex.symbol).dump())) == ex.symbol);
    const ModifiedSymbolCandidate c = candidate_from_json(parse_json(to_json(ex.candidate).dump()));
    CHECK(c.base == ex.candidate.base);
    CHECK(c.generators == ex.candidate.generators);
    CHECK(c.omegas == ex.candidate.omegas);
    CHECK(c.kind == ex.candidate.kind);
  }
  testing::Rng rng(100);
  for (int k = 0; k < 100; ++k) {
    const auto m = static_cast<std::size_t>(rng.integer(1, 3));
    const auto p = static_cast<std::size_t>(rng.integer(0, static_cast<long>(m)));
    const CRSymbolData s = testing::random_valid_symbol(rng, m, 1, {p, m - p}, k % 2 ? ScanMode::dense : ScanMode::diagonal, 9);
    REQUIRE(symbol_from_json(parse_json(to_json(s).dump())) == s);
  }
}

TEST_CASE("malformed documents raise ParseError") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(symbol_from_json(parse_json(R"({"m": 2, "r": 1, "H": [[1,0],[0,1]]})")), ParseError);
  CHECK_THROWS_AS(symbol_from_json(parse_json(R"({"m": -1, "r": 1, "H": [[1]], "C": [[[1]]]})")), ParseError);
  CHECK_THROWS_AS(symbol_from_json(parse_json(R"({"m": 2, "r": 1, "H": [[1,0],[0]], "C": []})")), ParseError);
  CHECK_THROWS_AS(symbol_from_json(parse_json(R"({"m": 2, "r": 1, "H": [], "C": []})")), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/path.json"), ParseError);
  const Json bad_kind = parse_json(R"({"m": 1, "r": 1, "H": [[1]], "C": [[[1]]], "g0": [], "kind": "other"})");
  CHECK_THROWS_AS(candidate_from_json(bad_kind), ParseError);
}

TEST_CASE("report JSON shapes") {
  const Json p = to_json(tanaka_prolong(builtin("eg1").candidate.graded()));
  CHECK(p["total"] == 8);
  CHECK(p["terminated"] == true);
  CHECK(p["dims"][0] == Json::array({-2, 1}));
  const Certificate cert = obstruction_r1_definite({3, 1, Mat::identity(3), {Mat::diagonal(std::vector<Scalar>{1, 2, 3})}});
  const Json c = to_json(cert);
  CHECK(c["verdict"] == "no-reduced-symbol");
  CHECK(c["ineq1"]["relation"] == "<=");
  CHECK(c["ineq2"]["relation"] == "<");
  CHECK(real_from_json(c["ineq1"]["lhs"]) == RealScalar(9));
  CHECK(real_from_json(c["two_re_mu"]) == RealScalar(Rational(14, 3)));
}

TEST_CASE("cli verify") {
  for (const auto &id : builtin_ids()) {
    const Run r = cli({"verify", id});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("pass") != std::string::npos);
    const Run j = cli({"--json", "verify", id});
    CHECK(parse_json(j.out)["pass"] == true);
  }
  CHECK(cli({"verify", "eg9"}).code == exit_code::validation);
}

TEST_CASE("cli analyze") {
  const Run r = cli({"analyze", "eg1"});
  REQUIRE(r.code == exit_code::ok);
  CHECK(r.out.find("regular: false") != std::string::npos);
  CHECK(r.out.find("recoverable: true") != std::string::npos);
  CHECK(r.out.find("dim A: 1") != std::string::npos);
  CHECK(r.out.find("dim g00: 2") != std::string::npos);

  for (const auto &args : {std::vector<std::string>{"--json", "analyze", "eg2"}, {"analyze", "eg2", "--json"}}) {
    const Run j = cli(args);
    REQUIRE(j.code == exit_code::ok);
    const Json doc = parse_json(j.out);
    CHECK(doc["regular"] == true);
    CHECK(doc["recoverable"] == true);
    CHECK(doc["dimG00"] == 5);
    CHECK(doc["signature"] == Json::array({2, 1}));
    CHECK(doc.contains("obstruction"));
  }

  const CRSymbolData rank_one{2, 1, Mat::identity(2), {testing::unit(2, 0, 0)}};
  const std::string path = write_file("rank_one.json", to_json(rank_one).dump());
  const Json doc = parse_json(cli({"--json", "analyze", path}).out);
  CHECK(doc["recoverable"] == false);

  const std::string diag = write_file("diag123.json", R"({"m": 3, "r": 1, "H": [[1,0,0],[0,1,0],[0,0,1]],
    "C": [[[1,0,0],[0,2,0],[0,0,3]]]})");
  CHECK(parse_json(cli({"--json", "analyze", diag}).out)["obstruction"]["verdict"] == "no-reduced-symbol");
}

TEST_CASE("cli prolong") {
  auto total = [](const std::vector<std::string> &args) {
    const Run r = cli(args);
    REQUIRE(r.code == exit_code::ok);
    return parse_json(r.out)["total"].get<int>();
  };
  CHECK(total({"--json", "prolong", "eg1", "--reduced"}) == 8);
  CHECK(total({"--json", "prolong", "eg2", "--reduced"}) == 14);
  CHECK(total({"--json", "prolong", "eg3", "--full"}) == 16);
  CHECK(total({"--json", "prolong", "eg1", "--full"}) == 9);
  CHECK(total({"--json", "prolong", "eg2"}) == 14);

  const Run text = cli({"prolong", "eg2", "--reduced"});
  CHECK(text.out.find("g_1: 1") != std::string::npos);
  CHECK(text.out.find("total: 14") != std::string::npos);

  CHECK(cli({"prolong", "eg3", "--full", "--max-degree", "1"}).code == exit_code::non_termination);
  CHECK(cli({"prolong", "eg3", "--reduced", "--full"}).code == exit_code::validation);
  CHECK(cli({"prolong", "eg3", "--max-degree", "0"}).code == exit_code::parse);

  const std::string plain = write_file("plain.json", to_json(builtin("eg1").symbol).dump());
  CHECK(cli({"prolong", plain, "--reduced"}).code == exit_code::validation);
  CHECK(total({"--json", "prolong", plain}) == 9);

  ModifiedSymbolCandidate broken = builtin("eg1").candidate;
  broken.generators.pop_back();
  const std::string bad = write_file("broken_candidate.json", to_json(broken).dump());
  CHECK(cli({"prolong", bad, "--reduced"}).code == exit_code::validation);

  const std::string good = write_file("eg2_candidate.json", to_json(builtin("eg2").candidate).dump());
  CHECK(total({"--json", "prolong", good, "--reduced"}) == 14);
}

TEST_CASE("cli max degree from the environment") {
  setenv("CRSYM_MAX_DEGREE", "1", 1);
  CHECK(cli({"prolong", "eg3", "--full"}).code == exit_code::non_termination);
  CHECK(cli({"prolong", "eg3", "--full", "--max-degree", "5"}).code == exit_code::ok);
  setenv("CRSYM_MAX_DEGREE", "zero", 1);
  CHECK(cli({"prolong", "eg3", "--full"}).code == exit_code::validation);
  unsetenv("CRSYM_MAX_DEGREE");
  CHECK(cli({"prolong", "eg3", "--full"}).code == exit_code::ok);
}

TEST_CASE("cli scan") {
  const Run empty = cli({"scan", "--trials", "0"});
  CHECK(empty.code == exit_code::ok);
  CHECK(parse_json(empty.out)["total"] == 0);

  const std::vector<std::string> args{"scan", "--m", "3", "--r", "1", "--signature", "3,0", "--mode", "diagonal",
                                      "--trials", "12", "--seed", "7", "--bound", "1"};
  const Run a = cli(args), b = cli(args);
  REQUIRE(a.code == exit_code::ok);
  CHECK(a.out == b.out);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--workers", "3"});
  CHECK(cli(threaded).out == a.out);

  const fs::path dir = scratch_dir() / "exceptions";
  fs::remove_all(dir);
  std::vector<std::string> emit = args;
  emit.insert(emit.end(), {"--emit-exceptions", dir.string()});
  const Run e = cli(emit);
  REQUIRE(e.code == exit_code::ok);
  const Json rep = parse_json(e.out);
  REQUIRE_FALSE(rep["exceptions"].empty());
  for (const auto &ex : rep["exceptions"]) {
    const fs::path file = dir / ("trial_" + std::to_string(ex["trial"].get<int>()) + ".json");
    REQUIRE(fs::exists(file));
    CHECK(symbol_from_json(read_json_file(file.string())) == symbol_from_json(ex["symbol"]));
    CHECK(cli({"analyze", file.string()}).code == exit_code::ok);
  }

  CHECK(cli({"scan", "--signature", "2,0"}).code == exit_code::validation);
  CHECK(cli({"scan", "--signature", "x"}).code == exit_code::parse);
  CHECK(cli({"scan", "--mode", "sparse"}).code == exit_code::parse);
  CHECK(cli({"scan", "--trials", "-1"}).code == exit_code::parse);
}

TEST_CASE("cli conjugate") {
  const Run two = cli({"--json", "conjugate", "eg1", "--dilation", "2"});
  REQUIRE(two.code == exit_code::ok);
  CHECK(parse_json(two.out)["involution_invariant"] == false);
  CHECK(parse_json(cli({"--json", "conjugate", "eg1", "--dilation", "i"}).out)["involution_invariant"] == true);
  CHECK(parse_json(cli({"--json", "conjugate", "eg2", "--dilation", "1"}).out)["involution_invariant"] == true);
  const ModifiedSymbolCandidate c = candidate_from_json(parse_json(two.out)["candidate"]);
  CHECK(c.generators == conjugate_by_block_dilation(builtin("eg1").candidate, 2).generators);
  const Run text = cli({"conjugate", "eg1", "--dilation", "1/sqrt2"});
  CHECK(text.code == exit_code::ok);
  CHECK(text.out.find("involution invariant: false") != std::string::npos);
  CHECK(cli({"conjugate", "eg1", "--dilation", "0"}).code == exit_code::validation);
  CHECK(cli({"conjugate", "eg1", "--dilation", "two"}).code == exit_code::parse);
  CHECK(cli({"conjugate", "eg1"}).code == exit_code::parse);
}

TEST_CASE("cli errors") {
  CHECK(cli({}).code == exit_code::parse);
  CHECK(cli({"frobnicate"}).code == exit_code::parse);
  CHECK(cli({"--help"}).code == exit_code::ok);
  CHECK(cli({"analyze", "/nonexistent.json"}).code == exit_code::parse);
  CHECK(cli({"analyze", write_file("garbage.json", "{not json")}).code == exit_code::parse);
  CHECK(cli({"analyze", write_file("missing.json", R"({"m": 2})")}).code == exit_code::parse);
  CHECK(cli({"analyze", write_file("wrongtype.json", R"({"m": 1, "r": 1, "H": [[1]], "C": [[[1]]], "g0": [], "kind": 3})")}).code ==
        exit_code::parse);
  const Run invalid = cli({"analyze", write_file("invalid.json", R"({"m": 2, "r": 1, "H": [[0,1],[1,0]], "C": [[[1,0],[0,0]]]})")});
  CHECK(invalid.code == exit_code::validation);
  CHECK(invalid.err.find("invalid symbol") != std::string::npos);
}
