#pragma once

#include "crsym/linalg.hpp"

#include <string>
#include <vector>

namespace crsym {

/// Matrix data (H, C_1..C_r) of a 2-nondegenerate CR symbol.
///
/// The first m coordinates of g_{-1} span g_{-1,1}, the last m span
/// g_{-1,-1}; each C_i maps the second block to the first.
struct CRSymbolData {
  std::size_t m = 0;
  std::size_t r = 0;
  Mat H;
  std::vector<Mat> C;

  bool operator==(const CRSymbolData &) const = default;
};

/// Element X + c*I of csp(g_{-1}) with X in sp(g_{-1}).
struct CspElement {
  Mat block;
  Scalar scale;

  std::size_t m() const { return block.rows() / 2; }
  /// block + scale * I
  Mat full() const;
  /// Coordinates: row-major block entries followed by the scale.
  Vec coords() const;

  /// Splits M into its traceless part and scale = tr(M) / 2m.
  static CspElement from_full(const Mat &M);
  static CspElement from_coords(std::span<const Scalar> v, std::size_t m);
  static CspElement scalar(std::size_t m, const Scalar &c);

  CspElement operator+(const CspElement &o) const { return {block + o.block, scale + o.scale}; }
  CspElement operator-(const CspElement &o) const { return {block - o.block, scale - o.scale}; }
  CspElement operator*(const Scalar &s) const { return {block * s, scale * s}; }
  bool operator==(const CspElement &) const = default;
};

inline std::size_t csp_ambient(std::size_t m) { return 4 * m * m + 1; }

/// [X, Y] in csp; the scale parts are central.
CspElement csp_bracket(const CspElement &x, const CspElement &y);

/// J = i [[0, H], [-H^T, 0]]; omega(a_i, a_j) = J(j, i).
Mat sympl_form(const Mat &H);

std::vector<std::string> validate(const CRSymbolData &s);

struct Signature {
  std::size_t p = 0, q = 0;
  bool operator==(const Signature &) const = default;
};

/// Inertia of a Hermitian matrix by congruence diagonalization.
/// Throws std::invalid_argument for non-Hermitian or singular input.
Signature signature(const Mat &H);

/// Basis of csp(g_{-1}) in CspElement coordinates; dim = m(2m+1) + 1.
Subspace build_csp_basis(const Mat &H);
bool in_csp(const CspElement &x, const Mat &H);

struct Bigraded {
  CspElement part02, part00, part0m2;
};

Bigraded bigrade_project(const CspElement &x);

/// Coordinate subspaces of csp coordinates for the three bigraded pieces.
Subspace bigraded_component(std::size_t m, int weight);
/// Linear projection onto a bigraded piece, acting on csp coordinates.
Mat bigraded_projector(std::size_t m, int weight);

/// sigma(x) = P conj(x) P with P swapping the two m-blocks.
CspElement involution(const CspElement &x);
/// Image of a subspace of csp coordinates under the antilinear involution.
Subspace involution(const Subspace &s, std::size_t m);

/// [[0, C], [0, 0]] and [[0, 0], [conj C, 0]].
CspElement generator_plus(const Mat &C);
CspElement generator_minus(const Mat &C);

/// blockdiag(alpha, -H^{-1} alpha^T H)
CspElement g00_element(const Mat &alpha, const Mat &H);

Subspace span_g02(const CRSymbolData &s);
Subspace span_g0m2(const CRSymbolData &s);

/// The algebra A of m x m matrices, as a subspace of flattened matrices.
Subspace compute_A(const CRSymbolData &s);
/// g_{0,0} in csp coordinates; dim = dim A + 1.
Subspace compute_g00(const CRSymbolData &s);
/// Full g_0 = g_{0,-2} + g_{0,0} + g_{0,2}.
Subspace compute_g0(const CRSymbolData &s);

/// C_i conj(C_j) C_k + C_k conj(C_j) C_i in span{C_s} for all triples.
bool is_regular(const CRSymbolData &s);
/// r = 1 route: A(x) = C conj(x) applied three times, then A^3 in C*A.
bool is_regular_cube(const CRSymbolData &s);

/// First prolongation of Z, given by a basis of dimW x dimV matrices.
/// Result lives in Hom(V, Z) with coordinates x_{a,i}, index a * dimZ + i.
Subspace spencer_first_prolongation(const std::vector<Mat> &Z, std::size_t dimV);
bool is_recoverable(const CRSymbolData &s);

struct SymbolReport {
  Signature signature;
  bool regular = false;
  bool recoverable = false;
  std::size_t dimA = 0;
  std::size_t dimG00 = 0;
  Subspace A_basis;
  Subspace G00_basis;
};

SymbolReport analyze(const CRSymbolData &s);

/// Change of adapted frame T = blockdiag(conj S, S) on g_{-1}:
/// H' = S* H S, C_i' = conj(S)^{-1} C_i S.
CRSymbolData change_frame(const CRSymbolData &s, const Mat &S);
/// T^{-1} X T for the same frame change.
CspElement change_frame(const CspElement &x, const Mat &S);

} // namespace crsym
