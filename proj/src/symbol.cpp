#include "crsym/symbol.hpp"

#include <stdexcept>

namespace crsym {

namespace {

Mat require_inverse(const Mat &m, const char *what) {
  auto inv = inverse(m);
  if (!inv)
    throw std::invalid_argument(std::string(what) + " is singular");
  return *inv;
}

Mat swap_blocks(const Mat &x) {
  const std::size_t m = x.rows() / 2;
  return block_matrix(x.block(m, m, m, m), x.block(m, 0, m, m), x.block(0, m, m, m),
                      x.block(0, 0, m, m));
}

Subspace flat_span(const std::vector<Mat> &ms, std::size_t ambient) {
  std::vector<Vec> vs;
  for (const auto &x : ms)
    vs.push_back(x.flat());
  return Subspace::span(vs, ambient);
}

Subspace g00_from_A(const Subspace &A, const Mat &H) {
  const std::size_t m = H.rows();
  std::vector<Vec> vs;
  for (const auto &a : A.basis())
    vs.push_back(g00_element(Mat::unflatten(a, m, m), H).coords());
  vs.push_back(CspElement::scalar(m, 1).coords());
  return Subspace::span(vs, csp_ambient(m));
}

} // namespace

Mat CspElement::full() const { return block + Mat::identity(block.rows()) * scale; }

Vec CspElement::coords() const {
  Vec v = block.flat();
  v.push_back(scale);
  return v;
}

CspElement CspElement::from_full(const Mat &M) {
  if (!M.is_square() || M.rows() % 2 != 0)
    throw std::invalid_argument("csp element must be a square matrix of even size");
  const Scalar c = M.trace() / Scalar(static_cast<long>(M.rows()));
  return {M - Mat::identity(M.rows()) * c, c};
}

CspElement CspElement::from_coords(std::span<const Scalar> v, std::size_t m) {
  if (v.size() != csp_ambient(m))
    throw std::invalid_argument("csp coordinate vector has wrong length");
  return {Mat::unflatten(v.first(4 * m * m), 2 * m, 2 * m), v.back()};
}

CspElement CspElement::scalar(std::size_t m, const Scalar &c) { return {Mat(2 * m, 2 * m), c}; }

CspElement csp_bracket(const CspElement &x, const CspElement &y) {
  return {commutator(x.block, y.block), Scalar()};
}

Mat sympl_form(const Mat &H) {
  const std::size_t m = H.rows();
  return block_matrix(Mat(m, m), H * Scalar::i(), -(H.transpose() * Scalar::i()), Mat(m, m));
}

std::vector<std::string> validate(const CRSymbolData &s) {
  std::vector<std::string> out;
  if (s.m == 0)
    out.push_back("m must be positive");
  if (s.r == 0)
    out.push_back("r must be positive (2-nondegenerate symbols have a nonzero Levi kernel)");
  if (s.H.rows() != s.m || s.H.cols() != s.m) {
    out.push_back("H must be m x m");
    return out;
  }
  if (s.H.adjoint() != s.H)
    out.push_back("H is not Hermitian");
  if (!inverse(s.H))
    out.push_back("H is singular");
  if (s.C.size() != s.r)
    out.push_back("expected r = " + std::to_string(s.r) + " matrices C, got " +
                  std::to_string(s.C.size()));
  if (s.m > 0 && s.r > s.m * (s.m + 1) / 2)
    out.push_back("r = " + std::to_string(s.r) + " exceeds m(m+1)/2 = " +
                  std::to_string(s.m * (s.m + 1) / 2));
  bool shapes_ok = true;
  for (std::size_t k = 0; k < s.C.size(); ++k) {
    const Mat &c = s.C[k];
    if (c.rows() != s.m || c.cols() != s.m) {
      out.push_back("C" + std::to_string(k + 1) + " must be m x m");
      shapes_ok = false;
      continue;
    }
    const Mat hc = s.H.conj() * c;
    if (hc.transpose() != hc)
      out.push_back("C" + std::to_string(k + 1) + " is not in csp: conj(H) C is not symmetric");
  }
  if (shapes_ok && !s.C.empty() && flat_span(s.C, s.m * s.m).dim() != s.C.size())
    out.push_back("C matrices are linearly dependent");
  return out;
}

Signature signature(const Mat &H) {
  if (!H.is_square() || H.adjoint() != H)
    throw std::invalid_argument("signature: matrix is not Hermitian");
  Mat a = H;
  const std::size_t n = a.rows();
  Signature sig;
  // congruence by elementary operations: row op and the conjugate column op
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Scalar &t) {
    for (std::size_t c = 0; c < n; ++c)
      a(dst, c) += t.conj() * a(src, c);
    for (std::size_t r = 0; r < n; ++r)
      a(r, dst) += a(r, src) * t;
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t j = k;
      for (std::size_t c = k + 1; c < n && j == k; ++c)
        if (!a(k, c).is_zero())
          j = c;
      if (j == k)
        throw std::invalid_argument("signature: matrix is singular");
      // (e_k + t e_j)* A (e_k + t e_j) = 2 Re(t A_kj) + |t|^2 A_jj
      Scalar t = 1;
      Scalar d = a(k, j) + a(j, k) + a(j, j);
      if (d.is_zero()) {
        t = Scalar::i();
        d = t * a(k, j) + t.conj() * a(j, k) + a(j, j);
      }
      if (d.is_zero()) {
        t = 2;
        d = t * a(k, j) + t.conj() * a(j, k) + t * t * a(j, j);
      }
      add_multiple(k, j, t);
    }
    const Scalar piv = a(k, k);
    if (piv.is_zero())
      throw std::invalid_argument("signature: matrix is singular");
    for (std::size_t r = k + 1; r < n; ++r)
      if (!a(r, k).is_zero())
        add_multiple(r, k, -(a(r, k) / piv).conj());
    if (real_sign(piv.as_real()) > 0)
      ++sig.p;
    else
      ++sig.q;
  }
  return sig;
}

Subspace build_csp_basis(const Mat &H) {
  const std::size_t m = H.rows(), n = 2 * m;
  const Mat J = sympl_form(H);
  Mat eq(n * n, n * n + 1);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      // E_pq^T J + J E_pq
      Mat e(n, n);
      e(p, q) = 1;
      const Mat img = e.transpose() * J + J * e;
      for (std::size_t k = 0; k < n * n; ++k)
        eq(k, p * n + q) = img.flat()[k];
    }
  return kernel(eq);
}

bool in_csp(const CspElement &x, const Mat &H) {
  const Mat J = sympl_form(H);
  return (x.block.transpose() * J + J * x.block).is_zero();
}

Bigraded bigrade_project(const CspElement &x) {
  const std::size_t m = x.m();
  Mat p02(2 * m, 2 * m), p00(2 * m, 2 * m), p0m2(2 * m, 2 * m);
  p02.set_block(0, m, x.block.block(0, m, m, m));
  p0m2.set_block(m, 0, x.block.block(m, 0, m, m));
  p00.set_block(0, 0, x.block.block(0, 0, m, m));
  p00.set_block(m, m, x.block.block(m, m, m, m));
  return {{p02, 0}, {p00, x.scale}, {p0m2, 0}};
}

Subspace bigraded_component(std::size_t m, int weight) {
  const Mat p = bigraded_projector(m, weight);
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < p.rows(); ++k)
    if (!p(k, k).is_zero())
      idx.push_back(k);
  return Subspace::coordinate(idx, p.rows());
}

Mat bigraded_projector(std::size_t m, int weight) {
  if (weight != 2 && weight != 0 && weight != -2)
    throw std::invalid_argument("bigraded weight must be -2, 0 or 2");
  const std::size_t n = 2 * m, amb = csp_ambient(m);
  Mat p(amb, amb);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const bool upper = r < m, left = c < m;
      int w = upper == left ? 0 : (upper ? 2 : -2);
      if (w == weight)
        p(r * n + c, r * n + c) = 1;
    }
  if (weight == 0)
    p(amb - 1, amb - 1) = 1;
  return p;
}

CspElement involution(const CspElement &x) { return {swap_blocks(x.block.conj()), x.scale.conj()}; }

Subspace involution(const Subspace &s, std::size_t m) {
  std::vector<Vec> vs;
  for (const auto &b : s.basis())
    vs.push_back(involution(CspElement::from_coords(b, m)).coords());
  return Subspace::span(vs, s.ambient_dim());
}

CspElement generator_plus(const Mat &C) {
  const std::size_t m = C.rows();
  Mat b(2 * m, 2 * m);
  b.set_block(0, m, C);
  return {b, 0};
}

CspElement generator_minus(const Mat &C) {
  const std::size_t m = C.rows();
  Mat b(2 * m, 2 * m);
  b.set_block(m, 0, C.conj());
  return {b, 0};
}

CspElement g00_element(const Mat &alpha, const Mat &H) {
  const std::size_t m = H.rows();
  const Mat hinv = require_inverse(H, "H");
  return {block_matrix(alpha, Mat(m, m), Mat(m, m), -(hinv * alpha.transpose() * H)), 0};
}

Subspace span_g02(const CRSymbolData &s) {
  std::vector<Vec> vs;
  for (const auto &c : s.C)
    vs.push_back(generator_plus(c).coords());
  return Subspace::span(vs, csp_ambient(s.m));
}

Subspace span_g0m2(const CRSymbolData &s) {
  std::vector<Vec> vs;
  for (const auto &c : s.C)
    vs.push_back(generator_minus(c).coords());
  return Subspace::span(vs, csp_ambient(s.m));
}

Subspace compute_A(const CRSymbolData &s) {
  const std::size_t m = s.m, r = s.r, mm = m * m;
  const Mat hinv = require_inverse(s.H, "H");
  // unknowns: alpha (mm), eta_{i,s} (r*r), mu_{i,s} (r*r)
  const std::size_t nvars = mm + 2 * r * r;
  Mat eq(2 * r * mm, nvars);
  std::vector<Mat> K, L;
  for (const auto &c : s.C) {
    K.push_back(c * hinv);
    L.push_back(s.H * c.conj());
  }
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t row1 = i * mm, row2 = (r + i) * mm;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        const std::size_t var = p * m + q;
        for (std::size_t b = 0; b < m; ++b) {
          // alpha K_i + K_i alpha^T with alpha = E_pq: row p gets K_i(q, .), column p gets K_i(., q)
          eq(row1 + p * m + b, var) += K[i](q, b);
          eq(row1 + b * m + p, var) += K[i](b, q);
          // alpha^T L_i + L_i alpha: row q gets L_i(p, .), column q gets L_i(., p)
          eq(row2 + q * m + b, var) += L[i](p, b);
          eq(row2 + b * m + q, var) += L[i](b, p);
        }
      }
    for (std::size_t t = 0; t < r; ++t)
      for (std::size_t k = 0; k < mm; ++k) {
        eq(row1 + k, mm + i * r + t) = -K[t].flat()[k];
        eq(row2 + k, mm + r * r + i * r + t) = -L[t].flat()[k];
      }
  }
  const Subspace sol = kernel(eq);
  Mat proj(mm, nvars);
  for (std::size_t k = 0; k < mm; ++k)
    proj(k, k) = 1;
  return sol.image(proj);
}

Subspace compute_g00(const CRSymbolData &s) { return g00_from_A(compute_A(s), s.H); }

Subspace compute_g0(const CRSymbolData &s) {
  return compute_g00(s) + span_g02(s) + span_g0m2(s);
}

bool is_regular(const CRSymbolData &s) {
  const Subspace span = flat_span(s.C, s.m * s.m);
  std::vector<Mat> cbar;
  for (const auto &c : s.C)
    cbar.push_back(c.conj());
  for (std::size_t i = 0; i < s.r; ++i)
    for (std::size_t j = 0; j < s.r; ++j)
      for (std::size_t k = i; k < s.r; ++k) {
        const Mat t = s.C[i] * cbar[j] * s.C[k] + s.C[k] * cbar[j] * s.C[i];
        if (!span.contains(t.flat()))
          return false;
      }
  return true;
}

bool is_regular_cube(const CRSymbolData &s) {
  if (s.r != 1)
    throw std::invalid_argument("is_regular_cube requires r = 1");
  const Mat &C = s.C[0];
  const std::size_t m = s.m;
  auto apply = [&](const Vec &x) {
    Vec xc(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
      xc[k] = x[k].conj();
    return C * xc;
  };
  // A^3 is antilinear: A^3(x) = M conj(x), and M e_k = A^3(e_k)
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < m; ++k) {
    Vec e(m);
    e[k] = 1;
    cols.push_back(apply(apply(apply(e))));
  }
  const Mat cube = Mat::from_columns(cols, m);
  std::vector<Vec> pair{C.flat(), cube.flat()};
  return rank(Mat::from_rows(pair, m * m)) <= 1;
}

Subspace spencer_first_prolongation(const std::vector<Mat> &Z, std::size_t dimV) {
  const std::size_t dz = Z.size();
  const std::size_t dimW = dz ? Z[0].rows() : 0;
  for (const auto &z : Z)
    if (z.rows() != dimW || z.cols() != dimV)
      throw std::invalid_argument("spencer_first_prolongation: shape mismatch");
  const std::size_t pairs = dimV * (dimV - (dimV ? 1 : 0)) / 2;
  Mat eq(pairs * dimW, dimV * dz);
  std::size_t row = 0;
  for (std::size_t a = 0; a < dimV; ++a)
    for (std::size_t b = a + 1; b < dimV; ++b) {
      // f(v_a) v_b - f(v_b) v_a
      for (std::size_t w = 0; w < dimW; ++w) {
        for (std::size_t i = 0; i < dz; ++i) {
          eq(row + w, a * dz + i) += Z[i](w, b);
          eq(row + w, b * dz + i) -= Z[i](w, a);
        }
      }
      row += dimW;
    }
  return kernel(eq);
}

bool is_recoverable(const CRSymbolData &s) {
  return spencer_first_prolongation(s.C, s.m).is_zero();
}

SymbolReport analyze(const CRSymbolData &s) {
  SymbolReport rep;
  rep.signature = signature(s.H);
  rep.regular = is_regular(s);
  rep.recoverable = is_recoverable(s);
  rep.A_basis = compute_A(s);
  rep.G00_basis = g00_from_A(rep.A_basis, s.H);
  rep.dimA = rep.A_basis.dim();
  rep.dimG00 = rep.G00_basis.dim();
  return rep;
}

CRSymbolData change_frame(const CRSymbolData &s, const Mat &S) {
  const Mat sbar_inv = require_inverse(S.conj(), "frame change");
  CRSymbolData out{s.m, s.r, S.adjoint() * s.H * S, {}};
  for (const auto &c : s.C)
    out.C.push_back(sbar_inv * c * S);
  return out;
}

CspElement change_frame(const CspElement &x, const Mat &S) {
  const std::size_t m = S.rows();
  const Mat sbar = S.conj();
  const Mat T = block_matrix(sbar, Mat(m, m), Mat(m, m), S);
  const Mat Tinv = block_matrix(require_inverse(sbar, "frame change"), Mat(m, m), Mat(m, m),
                                require_inverse(S, "frame change"));
  return {Tinv * x.block * T, x.scale};
}

} // namespace crsym
