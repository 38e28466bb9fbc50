#include "crsym/io.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace crsym;

namespace {

ScanConfig config(std::size_t m, std::size_t r, Signature sig, ScanMode mode, std::size_t trials,
                  std::uint64_t seed) {
  ScanConfig c;
  c.m = m;
  c.r = r;
  c.signature = sig;
  c.mode = mode;
  c.trials = trials;
  c.seed = seed;
  return c;
}

bool is_diagonal(const Mat &m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero())
        return false;
  return true;
}

} // namespace

TEST_CASE("config validation") {
  CHECK(validate(ScanConfig{}).empty());
  CHECK_FALSE(validate(config(3, 1, {2, 0}, ScanMode::dense, 1, 0)).empty());
  CHECK_FALSE(validate(config(0, 1, {0, 0}, ScanMode::dense, 1, 0)).empty());
  CHECK_FALSE(validate(config(2, 0, {2, 0}, ScanMode::dense, 1, 0)).empty());
  CHECK_FALSE(validate(config(2, 4, {2, 0}, ScanMode::dense, 1, 0)).empty());
  CHECK_FALSE(validate(config(2, 3, {2, 0}, ScanMode::diagonal, 1, 0)).empty());
  ScanConfig c;
  c.workers = 0;
  CHECK_FALSE(validate(c).empty());
  c = ScanConfig{};
  c.numerator_bound = 0;
  CHECK_FALSE(validate(c).empty());
  CHECK_THROWS_AS(run_genericity_scan(config(3, 1, {1, 1}, ScanMode::dense, 1, 0)), std::invalid_argument);
}

TEST_CASE("random symbols are valid and deterministic") {
  for (const ScanMode mode : {ScanMode::dense, ScanMode::diagonal})
    for (std::size_t r : {1u, 2u}) {
      const ScanConfig c = config(3, r, {2, 1}, mode, 0, 99);
      for (std::size_t t = 0; t < 25; ++t) {
        const CRSymbolData s = random_symbol(c, t);
        CHECK(validate(s).empty());
        CHECK(s == random_symbol(c, t));
        CHECK(s.H == Mat::diagonal(std::vector<Scalar>{1, 1, -1}));
        if (mode == ScanMode::diagonal)
          for (const auto &m : s.C) {
            CHECK(is_diagonal(m));
            CHECK(inverse(m).has_value());
          }
      }
    }
  const ScanConfig a = config(3, 1, {3, 0}, ScanMode::dense, 0, 1);
  const ScanConfig b = config(3, 1, {3, 0}, ScanMode::dense, 0, 2);
  CHECK_FALSE(random_symbol(a, 0) == random_symbol(b, 0));
  CHECK_FALSE(random_symbol(a, 0) == random_symbol(a, 1));
}

TEST_CASE("empty scan") {
  const ScanReport r = run_genericity_scan(config(3, 1, {3, 0}, ScanMode::diagonal, 0, 5));
  CHECK(r.total == 0);
  CHECK(r.A_minimal == 0);
  CHECK(r.exceptions.empty());
}

TEST_CASE("reports do not depend on the worker count") {
  ScanConfig c = config(3, 1, {3, 0}, ScanMode::diagonal, 24, 7);
  c.numerator_bound = 2;
  const std::string one = to_json(run_genericity_scan(c)).dump();
  CHECK(one == to_json(run_genericity_scan(c)).dump());
  c.workers = 4;
  CHECK(one == to_json(run_genericity_scan(c)).dump());
  c.workers = 5;
  CHECK(one == to_json(run_genericity_scan(c)).dump());
}

TEST_CASE("exceptional trials re-verify in isolation") {
  // tiny entries make coincident moduli common, so exceptions appear
  ScanConfig c = config(3, 1, {3, 0}, ScanMode::diagonal, 30, 3);
  c.numerator_bound = 1;
  const ScanReport r = run_genericity_scan(c);
  REQUIRE_FALSE(r.exceptions.empty());
  std::size_t prev = 0;
  for (std::size_t k = 0; k < r.exceptions.size(); ++k) {
    const ScanException &e = r.exceptions[k];
    if (k > 0)
      CHECK(e.trial > prev);
    prev = e.trial;
    CHECK(e.symbol == random_symbol(c, e.trial));
    const CRSymbolData back = symbol_from_json(parse_json(to_json(e.symbol).dump()));
    const TrialResult t = evaluate_trial(back, obstruction_applies(c));
    std::vector<std::string> why;
    if (!t.A_minimal)
      why.push_back("A_not_minimal");
    if (!t.nonregular)
      why.push_back("regular");
    if (!t.recoverable)
      why.push_back("not_recoverable");
    if (!t.obstructed)
      why.push_back("not_obstructed");
    CHECK(why == e.reasons);
  }
  CHECK(r.A_minimal + r.exceptions.size() >= r.total);
}

TEST_CASE("obstruction applies only to definite diagonal r=1 scans") {
  CHECK(obstruction_applies(config(3, 1, {3, 0}, ScanMode::diagonal, 1, 0)));
  CHECK(obstruction_applies(config(3, 1, {0, 3}, ScanMode::diagonal, 1, 0)));
  CHECK_FALSE(obstruction_applies(config(3, 1, {2, 1}, ScanMode::diagonal, 1, 0)));
  CHECK_FALSE(obstruction_applies(config(3, 1, {3, 0}, ScanMode::dense, 1, 0)));
  CHECK_FALSE(obstruction_applies(config(3, 2, {3, 0}, ScanMode::diagonal, 1, 0)));
}

TEST_CASE("m=2 dense r=1 scan is recoverable") {
  const ScanReport r = run_genericity_scan(config(2, 1, {2, 0}, ScanMode::dense, 100, 11));
  CHECK(r.recoverable >= 99);
  CHECK(r.total == 100);
}

TEST_CASE("evaluate_trial on known symbols") {
  const CRSymbolData s{3, 1, Mat::identity(3), {Mat::diagonal(std::vector<Scalar>{1, 2, 3})}};
  const TrialResult t = evaluate_trial(s, true);
  CHECK(t.A_minimal);
  CHECK(t.nonregular);
  CHECK(t.recoverable);
  CHECK(t.obstructed);
  const CRSymbolData flat{3, 1, Mat::identity(3), {Mat::identity(3)}};
  const TrialResult u = evaluate_trial(flat, true);
  CHECK_FALSE(u.A_minimal);
  CHECK_FALSE(u.nonregular);
  CHECK_FALSE(u.obstructed);
}
