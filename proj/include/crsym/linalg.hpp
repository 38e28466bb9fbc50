#pragma once

#include "crsym/exactnum.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace crsym {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over Q(zeta8).
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat diagonal(std::span<const Scalar> d);
  /// Builds a matrix whose rows are the given vectors (all of equal length).
  static Mat from_rows(std::span<const Vec> rows, std::size_t cols);
  static Mat from_columns(std::span<const Vec> cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  /// Row-major flattening.
  const Vec &flat() const { return data_; }
  static Mat unflatten(std::span<const Scalar> v, std::size_t rows, std::size_t cols);

  Mat operator+(const Mat &o) const;
  Mat operator-(const Mat &o) const;
  Mat operator-() const;
  Mat operator*(const Mat &o) const;
  Vec operator*(std::span<const Scalar> v) const;
  Mat operator*(const Scalar &s) const;
  Mat &operator+=(const Mat &o);
  bool operator==(const Mat &o) const = default;

  Mat transpose() const;
  Mat conj() const;
  /// Conjugate transpose.
  Mat adjoint() const;
  Scalar trace() const;
  bool is_zero() const;

  /// m x m sub-block starting at (r0, c0).
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat &b);

private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

Mat operator*(const Scalar &s, const Mat &m);
Mat commutator(const Mat &a, const Mat &b);
/// 2x2 block matrix [[a, b], [c, d]] with square blocks of equal size.
Mat block_matrix(const Mat &a, const Mat &b, const Mat &c, const Mat &d);

struct Echelon {
  Mat reduced;                     ///< reduced row echelon form
  std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

Echelon rref(const Mat &m);
std::size_t rank(const Mat &m);
/// Inverse of a square matrix, or std::nullopt when singular.
std::optional<Mat> inverse(const Mat &m);

class Subspace;

/// Null space of m, as a subspace of Q(zeta8)^{cols}.
Subspace kernel(const Mat &m);

/// Finite-dimensional subspace of Q(zeta8)^n stored by a basis in reduced row
/// echelon form, so equal subspaces have identical data.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::span<const Vec> vectors, std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// span of the unit vectors e_k, k in indices
  static Subspace coordinate(std::span<const std::size_t> indices, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec> &basis() const { return basis_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace &other) const;
  /// Coordinates of v in basis(), or std::nullopt when v is not a member.
  std::optional<Vec> coordinates(std::span<const Scalar> v) const;

  Subspace operator+(const Subspace &other) const;
  Subspace intersect(const Subspace &other) const;
  /// Image of the subspace under a linear map (map.cols() == ambient_dim()).
  Subspace image(const Mat &map) const;

  bool operator==(const Subspace &o) const = default;

private:
  void require_same_ambient(const Subspace &o) const;

  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

struct LinearSolution {
  Vec particular;
  Subspace homogeneous;
};

/// Solves A x = b exactly. Returns std::nullopt when inconsistent; otherwise
/// one particular solution together with the kernel of A.
std::optional<LinearSolution> solve_linear(const Mat &a, std::span<const Scalar> b);

Vec operator+(const Vec &a, const Vec &b);
Vec operator-(const Vec &a, const Vec &b);
Vec operator*(const Scalar &s, const Vec &v);
bool is_zero(std::span<const Scalar> v);

} // namespace crsym
