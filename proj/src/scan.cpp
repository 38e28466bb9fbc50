#include "crsym/scan.hpp"

#include <random>
#include <stdexcept>
#include <thread>

namespace crsym {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class TrialRng {
public:
  TrialRng(std::uint64_t seed, std::size_t trial)
      : gen_(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)))) {}

  /// Uniform integer in [-bound, bound], by rejection so the stream is portable.
  long draw(std::size_t bound) {
    const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
    std::uint64_t x;
    do
      x = gen_();
    while (x >= limit);
    return static_cast<long>(x % range) - static_cast<long>(bound);
  }

  Scalar gaussian(std::size_t bound) {
    const long a = draw(bound), b = draw(bound);
    return Scalar(a) + Scalar(b) * Scalar::i();
  }

  /// Integer combination of 1, zeta, zeta^2, zeta^3.
  Scalar cyclotomic(std::size_t bound) {
    Scalar::Coeffs c;
    for (auto &x : c)
      x = Rational(draw(bound));
    return Scalar(c);
  }

private:
  std::mt19937_64 gen_;
};

Mat signature_matrix(const Signature &sig) {
  Mat h(sig.p + sig.q, sig.p + sig.q);
  for (std::size_t k = 0; k < sig.p + sig.q; ++k)
    h(k, k) = k < sig.p ? 1 : -1;
  return h;
}

bool independent(const std::vector<Mat> &cs, std::size_t mm) {
  std::vector<Vec> vs;
  for (const auto &c : cs)
    vs.push_back(c.flat());
  return Subspace::span(vs, mm).dim() == cs.size();
}

} // namespace

std::vector<std::string> validate(const ScanConfig &cfg) {
  std::vector<std::string> out;
  if (cfg.m == 0)
    out.push_back("m must be positive");
  if (cfg.r == 0)
    out.push_back("r must be positive");
  if (cfg.signature.p + cfg.signature.q != cfg.m)
    out.push_back("signature p + q must equal m");
  if (cfg.numerator_bound == 0)
    out.push_back("numerator bound must be positive");
  if (cfg.mode == ScanMode::dense && cfg.r > cfg.m * (cfg.m + 1) / 2)
    out.push_back("dense mode needs r <= m(m+1)/2");
  if (cfg.mode == ScanMode::diagonal && cfg.r > cfg.m)
    out.push_back("diagonal mode needs r <= m");
  if (cfg.workers == 0)
    out.push_back("workers must be positive");
  return out;
}

CRSymbolData random_symbol(const ScanConfig &cfg, std::size_t trial_index) {
  TrialRng rng(cfg.seed, trial_index);
  const std::size_t m = cfg.m;
  CRSymbolData s{m, cfg.r, signature_matrix(cfg.signature), {}};
  for (;;) {
    s.C.clear();
    for (std::size_t k = 0; k < cfg.r; ++k) {
      Mat c(m, m);
      if (cfg.mode == ScanMode::dense) {
        // C = conj(H)^{-1} S with S symmetric; here conj(H)^{-1} = H
        Mat sym(m, m);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = i; j < m; ++j)
            sym(i, j) = sym(j, i) = rng.gaussian(cfg.numerator_bound);
        c = s.H * sym;
      } else {
        for (std::size_t i = 0; i < m; ++i) {
          Scalar x;
          while (x.is_zero())
            x = rng.cyclotomic(cfg.numerator_bound);
          c(i, i) = x;
        }
      }
      s.C.push_back(std::move(c));
    }
    if (independent(s.C, m * m))
      return s;
  }
}

bool obstruction_applies(const ScanConfig &cfg) {
  return cfg.r == 1 && cfg.mode == ScanMode::diagonal &&
         (cfg.signature.p == 0 || cfg.signature.q == 0);
}

TrialResult evaluate_trial(const CRSymbolData &s, bool with_obstruction) {
  TrialResult t;
  t.A_minimal = compute_A(s).dim() == 1;
  t.nonregular = !is_regular(s);
  t.recoverable = is_recoverable(s);
  if (with_obstruction)
    t.obstructed = obstruction_r1_definite(s).verdict == Verdict::no_reduced_symbol;
  return t;
}

ScanReport run_genericity_scan(const ScanConfig &cfg) {
  const auto problems = validate(cfg);
  if (!problems.empty())
    throw std::invalid_argument("invalid scan configuration: " + problems.front());
  const bool obstr = obstruction_applies(cfg);
  std::vector<TrialResult> results(cfg.trials);
  std::vector<CRSymbolData> symbols(cfg.trials);
  auto work = [&](std::size_t first) {
    for (std::size_t k = first; k < cfg.trials; k += cfg.workers) {
      symbols[k] = random_symbol(cfg, k);
      results[k] = evaluate_trial(symbols[k], obstr);
      results[k].trial = k;
    }
  };
  if (cfg.workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < cfg.workers; ++w)
      pool.emplace_back(work, w);
    for (auto &t : pool)
      t.join();
  }
  ScanReport rep;
  rep.seed = cfg.seed;
  rep.total = cfg.trials;
  for (std::size_t k = 0; k < cfg.trials; ++k) {
    const auto &t = results[k];
    rep.A_minimal += t.A_minimal;
    rep.nonregular += t.nonregular;
    rep.recoverable += t.recoverable;
    rep.obstructed += t.obstructed;
    std::vector<std::string> why;
    if (!t.A_minimal)
      why.push_back("A_not_minimal");
    if (!t.nonregular)
      why.push_back("regular");
    if (!t.recoverable)
      why.push_back("not_recoverable");
    if (obstr && !t.obstructed)
      why.push_back("not_obstructed");
    if (!why.empty())
      rep.exceptions.push_back({k, std::move(why), symbols[k]});
  }
  return rep;
}

} // namespace crsym
