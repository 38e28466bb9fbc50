#include "crsym/prolong.hpp"

#include <stdexcept>

namespace crsym {

Scalar HeisenbergAlg::omega(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Scalar s;
  const Vec jx = J * x;
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!y[k].is_zero() && !jx[k].is_zero())
      s += y[k] * jx[k];
  return s;
}

SemidirectElement SemidirectElement::zero(std::size_t m) {
  return {Vec(2 * m), Scalar(), CspElement::scalar(m, 0)};
}

Vec SemidirectElement::coords() const {
  Vec out = v;
  out.push_back(z);
  const Vec c = x.coords();
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

SemidirectElement semidirect_bracket(const HeisenbergAlg &heis, const SemidirectElement &a,
                                     const SemidirectElement &b) {
  // [(u, X), (w, Y)] = ([u, w] + X.w - Y.u, [X, Y]); the scale c acts by c on g_{-1}, 2c on g_{-2}
  SemidirectElement out;
  out.v = a.x.full() * b.v - b.x.full() * a.v;
  out.z = heis.omega(a.v, b.v) + Scalar(2) * a.x.scale * b.z - Scalar(2) * b.x.scale * a.z;
  out.x = csp_bracket(a.x, b.x);
  return out;
}

bool grading_element_check(const GradedSpan &g) {
  if (g.g0.ambient_dim() != csp_ambient(g.heis.m))
    return false;
  return g.g0.contains(CspElement::scalar(g.heis.m, -1).coords());
}

std::size_t TanakaTower::dim(int degree) const {
  if (degree == -2)
    return 1;
  if (degree < -2)
    return 0;
  const auto idx = static_cast<std::size_t>(degree + 1);
  return idx < pieces.size() ? pieces[idx].dim() : 0;
}

namespace {

GradedPiece degree_minus_one(const HeisenbergAlg &heis) {
  const std::size_t n = 2 * heis.m;
  GradedPiece p;
  p.degree = -1;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Vec> ev;
    for (std::size_t a = 0; a < n; ++a)
      ev.push_back(Vec{heis.J(a, c)}); // [e_c, e_a] = omega(e_c, e_a) z
    p.eval_v.push_back(std::move(ev));
    p.eval_z.emplace_back();
  }
  return p;
}

GradedPiece degree_zero(const GradedSpan &g) {
  const std::size_t m = g.heis.m, n = 2 * m;
  GradedPiece p;
  p.degree = 0;
  for (const auto &b : g.g0.basis()) {
    const CspElement x = CspElement::from_coords(b, m);
    const Mat f = x.full();
    std::vector<Vec> ev;
    for (std::size_t a = 0; a < n; ++a)
      ev.push_back(f.column(a));
    p.eval_v.push_back(std::move(ev));
    p.eval_z.push_back(Vec{Scalar(2) * x.scale});
  }
  return p;
}

GradedPiece next_degree(const TanakaTower &t, int k) {
  const std::size_t n = 2 * t.m;
  const std::size_t d1 = t.dim(k - 1), d2 = t.dim(k - 2), d3 = t.dim(k - 3);
  const GradedPiece &prev = t.piece(k - 1);
  // for k = 1 the z-values live in g_{-1}, whose brackets with e_a are omega
  const GradedPiece &prev2 = t.piece(k - 2);
  const std::size_t nvars = n * d1 + d2;
  const std::size_t fz = n * d1;
  const std::size_t npairs = n * (n - 1) / 2;
  Mat eq(npairs * d2 + n * d3, nvars);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      // f([e_a, e_b]) = [f(e_a), e_b] + [e_a, f(e_b)]
      const Scalar w = t.piece(-1).eval_v[a][b][0];
      for (std::size_t c = 0; c < d2; ++c) {
        eq(row + c, fz + c) += w;
        for (std::size_t beta = 0; beta < d1; ++beta) {
          eq(row + c, a * d1 + beta) -= prev.eval_v[beta][b][c];
          eq(row + c, b * d1 + beta) += prev.eval_v[beta][a][c];
        }
      }
      row += d2;
    }
  for (std::size_t a = 0; a < n; ++a) {
    // 0 = [f(e_a), z] + [e_a, f(z)]
    for (std::size_t c = 0; c < d3; ++c) {
      for (std::size_t beta = 0; beta < d1; ++beta)
        eq(row + c, a * d1 + beta) += prev.eval_z[beta][c];
      for (std::size_t gam = 0; gam < d2; ++gam)
        eq(row + c, fz + gam) -= prev2.eval_v[gam][a][c];
    }
    row += d3;
  }
  GradedPiece p;
  p.degree = k;
  const Subspace sols = kernel(eq);
  for (const auto &sol : sols.basis()) {
    std::vector<Vec> ev;
    for (std::size_t a = 0; a < n; ++a)
      ev.emplace_back(sol.begin() + static_cast<std::ptrdiff_t>(a * d1),
                      sol.begin() + static_cast<std::ptrdiff_t>((a + 1) * d1));
    p.eval_v.push_back(std::move(ev));
    p.eval_z.emplace_back(sol.begin() + static_cast<std::ptrdiff_t>(fz), sol.end());
  }
  return p;
}

} // namespace

TanakaTower tanaka_tower(const GradedSpan &g, int max_degree, bool stop_at_zero) {
  if (g.g0.ambient_dim() != csp_ambient(g.heis.m))
    throw std::invalid_argument("tanaka_tower: g0 has the wrong ambient dimension");
  TanakaTower t;
  t.m = g.heis.m;
  t.pieces.push_back(degree_minus_one(g.heis));
  t.pieces.push_back(degree_zero(g));
  for (int k = 1; k <= max_degree; ++k) {
    t.pieces.push_back(next_degree(t, k));
    if (stop_at_zero && t.pieces.back().dim() == 0)
      break;
  }
  return t;
}

std::size_t ProlongReport::positive_dim() const {
  std::size_t s = 0;
  for (const auto &[k, d] : dims)
    if (k > 0)
      s += d;
  return s;
}

std::size_t ProlongReport::dim(int degree) const {
  for (const auto &[k, d] : dims)
    if (k == degree)
      return d;
  return 0;
}

ProlongReport tanaka_prolong(const GradedSpan &g, int max_degree) {
  if (max_degree < 1)
    throw std::invalid_argument("max_degree must be at least 1");
  const TanakaTower t = tanaka_tower(g, max_degree);
  ProlongReport rep;
  rep.dims.emplace_back(-2, 1);
  for (const auto &p : t.pieces) {
    rep.dims.emplace_back(p.degree, p.dim());
    rep.total += p.dim();
  }
  rep.total += 1;
  rep.terminated = t.pieces.back().dim() == 0;
  return rep;
}

} // namespace crsym
