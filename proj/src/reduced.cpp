#include "crsym/reduced.hpp"

#include <stdexcept>

namespace crsym {

namespace {

Subspace span_of(const std::vector<CspElement> &xs, std::size_t m) {
  std::vector<Vec> vs;
  for (const auto &x : xs)
    vs.push_back(x.coords());
  return Subspace::span(vs, csp_ambient(m));
}

Subspace flat_span(const std::vector<Mat> &ms, std::size_t ambient) {
  std::vector<Vec> vs;
  for (const auto &x : ms)
    vs.push_back(x.flat());
  return Subspace::span(vs, ambient);
}

Mat columns_of(const std::vector<Mat> &ms, std::size_t rows) {
  std::vector<Vec> cols;
  for (const auto &x : ms)
    cols.push_back(x.flat());
  return Mat::from_columns(cols, rows);
}

Mat combine(const std::vector<Mat> &ms, std::span<const Scalar> coef, bool conjugate) {
  Mat out(ms.at(0).rows(), ms.at(0).cols());
  for (std::size_t s = 0; s < ms.size(); ++s)
    if (!coef[s].is_zero())
      out += ms[s] * (conjugate ? coef[s].conj() : coef[s]);
  return out;
}

std::string idx(std::size_t k) { return std::to_string(k + 1); }

} // namespace

Subspace ModifiedSymbolCandidate::g0() const { return span_of(generators, base.m); }

CspElement omega_generator_plus(const Mat &H, const Mat &C, const Mat &omega) {
  const Mat hinv = *inverse(H);
  return {block_matrix(omega, C, Mat(C.rows(), C.rows()), -(hinv * omega.transpose() * H)), 0};
}

CspElement omega_generator_minus(const Mat &H, const Mat &C, const Mat &omega) {
  const Mat hb = H.conj();
  const Mat hbinv = *inverse(hb);
  return {block_matrix(-(hbinv * omega.adjoint() * hb), Mat(C.rows(), C.rows()), C.conj(),
                       omega.conj()),
          0};
}

bool bracket_closed(const GradedSpan &g) {
  const std::size_t m = g.heis.m, n = 2 * m;
  std::vector<SemidirectElement> basis;
  for (std::size_t a = 0; a < n; ++a) {
    auto e = SemidirectElement::zero(m);
    e.v[a] = 1;
    basis.push_back(std::move(e));
  }
  auto z = SemidirectElement::zero(m);
  z.z = 1;
  basis.push_back(std::move(z));
  for (const auto &b : g.g0.basis()) {
    auto e = SemidirectElement::zero(m);
    e.x = CspElement::from_coords(b, m);
    basis.push_back(std::move(e));
  }
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = p + 1; q < basis.size(); ++q) {
      const auto br = semidirect_bracket(g.heis, basis[p], basis[q]);
      if (!g.g0.contains(br.x.coords()))
        return false;
    }
  return true;
}

std::vector<std::string> check_definition(const ModifiedSymbolCandidate &c) {
  std::vector<std::string> out;
  for (const auto &v : validate(c.base))
    out.push_back("base symbol: " + v);
  if (!out.empty())
    return out;
  const std::size_t m = c.base.m;
  for (std::size_t k = 0; k < c.generators.size(); ++k) {
    const auto &x = c.generators[k];
    if (x.block.rows() != 2 * m || x.block.cols() != 2 * m) {
      out.push_back("generator " + idx(k) + " has the wrong size");
      return out;
    }
    if (!in_csp(x, c.base.H))
      out.push_back("generator " + idx(k) + " is not in csp");
  }
  const Subspace g0 = c.g0();
  const Subspace g02 = span_g02(c.base), g0m2 = span_g0m2(c.base);
  const Subspace g00 = compute_g00(c.base);
  const std::size_t full_dim = g00.dim() + g02.dim() + g0m2.dim();
  const Subspace part00 = g0.intersect(bigraded_component(m, 0));
  if (g0.image(bigraded_projector(m, 2)) != g02)
    out.push_back("(0,2) projection differs from g_{0,2}");
  if (g0.image(bigraded_projector(m, -2)) != g0m2)
    out.push_back("(0,-2) projection differs from g_{0,-2}");
  if (involution(g0, m) != g0)
    out.push_back("not invariant under the involution");
  if (c.kind == CandidateKind::modified) {
    if (g0.dim() != full_dim)
      out.push_back("dim g0 = " + std::to_string(g0.dim()) + ", expected dim g_0 = " +
                    std::to_string(full_dim));
    if (part00 != g00)
      out.push_back("g0 meets the (0,0) component in a space other than g_{0,0}");
  } else {
    if (g0.dim() != part00.dim() + 2 * c.base.r)
      out.push_back("dim g0 = " + std::to_string(g0.dim()) + " but dim of the (0,0) part + 2r = " +
                    std::to_string(part00.dim() + 2 * c.base.r));
    if (g0.dim() > full_dim)
      out.push_back("dim g0 exceeds dim g_0 = " + std::to_string(full_dim));
    if (!g00.contains(part00))
      out.push_back("(0,0) part of g0 is not contained in g_{0,0}");
    const GradedSpan gs = GradedSpan::make(c.base.H, g0);
    if (!grading_element_check(gs))
      out.push_back("grading element missing");
    if (!bracket_closed(gs))
      out.push_back("g_- + g0 is not closed under the bracket");
  }
  return out;
}

SystemResult verify_system(const ModifiedSymbolCandidate &c, const Subspace &A0) {
  if (!c.omegas)
    throw std::invalid_argument("verify_system: candidate has no omegas");
  const CRSymbolData &s = c.base;
  const std::size_t m = s.m, r = s.r, mm = m * m;
  const std::vector<Mat> &om = *c.omegas;
  if (om.size() != r)
    throw std::invalid_argument("verify_system: expected r omegas");
  if (A0.ambient_dim() != mm)
    throw std::invalid_argument("verify_system: A0 must live in m x m matrices");
  SystemResult res;
  if (!compute_A(s).contains(A0)) {
    res.failure = "A0 is not contained in A";
    return res;
  }
  const Mat hinv = *inverse(s.H);
  std::vector<Mat> K, L, Y;
  for (std::size_t t = 0; t < r; ++t) {
    K.push_back(s.C[t] * hinv);
    L.push_back(s.H * s.C[t].conj());
    Y.push_back((hinv * om[t].transpose() * s.H).conj());
  }
  const Mat Kcols = columns_of(K, mm), Lcols = columns_of(L, mm);

  for (const auto &av : A0.basis()) {
    const Mat alpha = Mat::unflatten(av, m, m);
    std::vector<Vec> eta_k;
    for (std::size_t i = 0; i < r; ++i) {
      const Mat lhs = alpha * K[i] + K[i] * alpha.transpose();
      const auto sol = solve_linear(Kcols, lhs.flat());
      if (!sol) {
        res.failure = "(i) has no solution for generator " + idx(i);
        return res;
      }
      const Mat rem = commutator(alpha, om[i]) - combine(om, sol->particular, false);
      Subspace allowed = A0;
      for (const auto &h : sol->homogeneous.basis())
        allowed = allowed + flat_span({combine(om, h, false)}, mm);
      if (!allowed.contains(rem.flat())) {
        res.failure = "(ii) fails for generator " + idx(i);
        return res;
      }
      eta_k.push_back(sol->particular);
    }
    res.eta.push_back(std::move(eta_k));
  }

  std::vector<std::vector<LinearSolution>> mu(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Mat lhs = om[j].transpose() * L[i] + L[i] * om[j];
      auto sol = solve_linear(Lcols, lhs.flat());
      if (!sol) {
        res.failure = "(iii) has no solution for (i, j) = (" + idx(i) + ", " + idx(j) + ")";
        return res;
      }
      mu[i].push_back(std::move(*sol));
    }
  res.mu.assign(r, {});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      res.mu[i].push_back(mu[i][j].particular);
      const Mat rem = commutator(Y[i], om[j]) + s.C[j] * s.C[i].conj() -
                      combine(om, mu[i][j].particular, true) -
                      combine(Y, mu[j][i].particular, false);
      Subspace allowed = A0;
      for (const auto &h : mu[i][j].homogeneous.basis())
        allowed = allowed + flat_span({combine(om, h, true)}, mm);
      for (const auto &h : mu[j][i].homogeneous.basis())
        allowed = allowed + flat_span({combine(Y, h, false)}, mm);
      if (!allowed.contains(rem.flat())) {
        res.failure = "(iv) fails for (i, j) = (" + idx(i) + ", " + idx(j) + ")";
        return res;
      }
    }
  res.holds = true;
  return res;
}

ModifiedSymbolCandidate conjugate_by_block_dilation(const ModifiedSymbolCandidate &c,
                                                    const Scalar &s) {
  if (s.is_zero())
    throw DivisionByZero();
  const Scalar sinv = s.inv();
  ModifiedSymbolCandidate out = c;
  out.generators.clear();
  for (const auto &x : c.generators) {
    const Bigraded p = bigrade_project(x);
    CspElement y = p.part02 * sinv + p.part00 + p.part0m2 * s;
    if (!p.part02.block.is_zero())
      y = y * s;
    else if (!p.part0m2.block.is_zero())
      y = y * sinv;
    out.generators.push_back(std::move(y));
  }
  // the Omega normal form needs the (0,-2) generators to be sigma of the (0,2) ones
  if (c.omegas && s * s.conj() == Scalar(1)) {
    for (auto &o : *out.omegas)
      o = o * s;
  } else {
    out.omegas.reset();
  }
  return out;
}

bool involution_invariant(const ModifiedSymbolCandidate &c) {
  const Subspace g0 = c.g0();
  return involution(g0, c.base.m) == g0;
}

Certificate obstruction_r1_definite(const CRSymbolData &s) {
  Certificate cert;
  auto &fail = cert.precondition_failures;
  if (s.r != 1 || s.C.size() != 1) {
    fail.push_back("r must be 1");
    return cert;
  }
  const std::size_t m = s.m;
  if (s.H.rows() != m || s.H.cols() != m || s.C[0].rows() != m || s.C[0].cols() != m) {
    fail.push_back("matrices must be m x m");
    return cert;
  }
  const Scalar h = s.H(0, 0);
  if (!h.is_real() || h.is_zero() || s.H != Mat::identity(m) * h)
    fail.push_back("H must be a nonzero real multiple of the identity");
  const Mat &C = s.C[0];
  bool diagonal = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && !C(i, j).is_zero())
        diagonal = false;
  if (!diagonal)
    fail.push_back("C must be diagonal");
  std::vector<RealScalar> mod2;
  bool invertible = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (C(i, i).is_zero())
      invertible = false;
    mod2.push_back(C(i, i).modulus_squared());
  }
  if (!invertible)
    fail.push_back("C must be invertible");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (mod2[i] == mod2[j])
        fail.push_back("moduli of entries " + idx(i) + " and " + idx(j) + " coincide");
  if (!fail.empty())
    return cert;

  RealScalar mx = mod2[0], sum;
  for (const auto &x : mod2) {
    sum = sum + x;
    if (real_sign(x - mx) > 0)
      mx = x;
  }
  const Rational mq(static_cast<long>(m));
  cert.max_modulus2 = mx;
  cert.sum_modulus2 = sum;
  cert.two_re_mu = sum / mq;
  cert.ineq1 = {mx, cert.two_re_mu, false, real_sign(cert.two_re_mu - mx) >= 0};
  cert.ineq2 = {sum, RealScalar(mq) * mx, true, real_sign(RealScalar(mq) * mx - sum) > 0};
  if (cert.ineq2.holds && !cert.ineq1.holds)
    cert.verdict = Verdict::no_reduced_symbol;
  return cert;
}

} // namespace crsym
