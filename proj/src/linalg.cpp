#include "crsym/linalg.hpp"

#include <stdexcept>

namespace crsym {

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("Mat: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    m(k, k) = 1;
  return m;
}

Mat Mat::diagonal(std::span<const Scalar> d) {
  Mat m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k)
    m(k, k) = d[k];
  return m;
}

Mat Mat::from_rows(std::span<const Vec> rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("Mat::from_rows: length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_columns(std::span<const Vec> cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw std::invalid_argument("Mat::from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Mat Mat::unflatten(std::span<const Scalar> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols)
    throw std::invalid_argument("Mat::unflatten: size mismatch");
  Mat m(rows, cols);
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

Mat Mat::operator+(const Mat &o) const {
  Mat r = *this;
  r += o;
  return r;
}

Mat &Mat::operator+=(const Mat &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat +: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] += o.data_[k];
  return *this;
}

Mat Mat::operator-(const Mat &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat -: shape mismatch");
  Mat r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k)
    r.data_[k] -= o.data_[k];
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto &x : r.data_)
    x = -x;
  return r;
}

Mat Mat::operator*(const Mat &o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("Mat *: shape mismatch");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar &a = (*this)(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar &b = o(k, j);
        if (!b.is_zero())
          r(i, j) += a * b;
      }
    }
  return r;
}

Vec Mat::operator*(std::span<const Scalar> v) const {
  if (cols_ != v.size())
    throw std::invalid_argument("Mat * Vec: shape mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!(*this)(i, k).is_zero() && !v[k].is_zero())
        r[i] += (*this)(i, k) * v[k];
  return r;
}

Mat Mat::operator*(const Scalar &s) const {
  Mat r = *this;
  for (auto &x : r.data_)
    x = x * s;
  return r;
}

Mat operator*(const Scalar &s, const Mat &m) { return m * s; }

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::conj() const {
  Mat r = *this;
  for (auto &x : r.data_)
    x = x.conj();
  return r;
}

Mat Mat::adjoint() const { return transpose().conj(); }

Scalar Mat::trace() const {
  if (!is_square())
    throw std::invalid_argument("trace of non-square matrix");
  Scalar t;
  for (std::size_t k = 0; k < rows_; ++k)
    t += (*this)(k, k);
  return t;
}

bool Mat::is_zero() const {
  for (const auto &x : data_)
    if (!x.is_zero())
      return false;
  return true;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw std::out_of_range("Mat::block");
  Mat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat &b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw std::out_of_range("Mat::set_block");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat commutator(const Mat &a, const Mat &b) { return a * b - b * a; }

Mat block_matrix(const Mat &a, const Mat &b, const Mat &c, const Mat &d) {
  const std::size_t n = a.rows();
  Mat r(2 * n, 2 * n);
  r.set_block(0, 0, a);
  r.set_block(0, n, b);
  r.set_block(n, 0, c);
  r.set_block(n, n, d);
  return r;
}

Echelon rref(const Mat &m) {
  Echelon e{m, {}};
  Mat &a = e.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // prefer a rational pivot: its inverse is cheap
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c).is_zero())
        continue;
      if (piv == rows)
        piv = i;
      if (a(i, c).is_rational()) {
        piv = i;
        break;
      }
    }
    if (piv == rows)
      continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a(piv, j), a(r, j));
    const Scalar inv = a(r, c).inv();
    for (std::size_t j = c; j < cols; ++j)
      if (!a(r, j).is_zero())
        a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero())
        continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero())
          a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const Mat &m) { return rref(m).pivots.size(); }

std::optional<Mat> inverse(const Mat &m) {
  if (!m.is_square())
    throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Mat::identity(n));
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Subspace kernel(const Mat &m) {
  const Echelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (!e.reduced(i, f).is_zero())
        v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, cols);
}

std::optional<LinearSolution> solve_linear(const Mat &a, std::span<const Scalar> b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve_linear: rhs length mismatch");
  const std::size_t n = a.cols();
  Mat aug(a.rows(), n + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    aug(i, n) = b[i];
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == n)
    return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    x[e.pivots[i]] = e.reduced(i, n);
  return LinearSolution{std::move(x), kernel(a)};
}

Subspace Subspace::span(std::span<const Vec> vectors, std::size_t ambient) {
  Subspace s(ambient);
  if (vectors.empty())
    return s;
  const Echelon e = rref(Mat::from_rows(vectors, ambient));
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    s.basis_.push_back(e.reduced.row(i));
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> all(ambient);
  for (std::size_t k = 0; k < ambient; ++k)
    all[k] = k;
  return coordinate(all, ambient);
}

Subspace Subspace::coordinate(std::span<const std::size_t> indices, std::size_t ambient) {
  std::vector<Vec> vs;
  for (auto k : indices) {
    Vec v(ambient);
    v.at(k) = 1;
    vs.push_back(std::move(v));
  }
  return span(vs, ambient);
}

std::optional<Vec> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("Subspace: ambient dimension mismatch");
  Vec rem(v.begin(), v.end());
  Vec coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar f = rem[pivots_[i]];
    coords[i] = f;
    if (f.is_zero())
      continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (!basis_[i][j].is_zero())
        rem[j] -= f * basis_[i][j];
  }
  if (!crsym::is_zero(rem))
    return std::nullopt;
  return coords;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace &other) const {
  require_same_ambient(other);
  for (const auto &b : other.basis_)
    if (!contains(b))
      return false;
  return true;
}

void Subspace::require_same_ambient(const Subspace &o) const {
  if (ambient_ != o.ambient_)
    throw std::invalid_argument("Subspace: ambient dimension mismatch");
}

Subspace Subspace::operator+(const Subspace &other) const {
  require_same_ambient(other);
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(all, ambient_);
}

Subspace Subspace::intersect(const Subspace &other) const {
  require_same_ambient(other);
  if (basis_.empty() || other.basis_.empty())
    return Subspace(ambient_);
  // x = sum a_i u_i = sum b_j v_j  <=>  [U | -V] (a, b) = 0
  const std::size_t du = basis_.size(), dv = other.basis_.size();
  Mat m(ambient_, du + dv);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t r = 0; r < ambient_; ++r)
      m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < dv; ++j)
    for (std::size_t r = 0; r < ambient_; ++r)
      m(r, du + j) = -other.basis_[j][r];
  const Subspace k = kernel(m);
  std::vector<Vec> vs;
  for (const auto &coef : k.basis()) {
    Vec x(ambient_);
    for (std::size_t i = 0; i < du; ++i)
      if (!coef[i].is_zero())
        x = x + coef[i] * basis_[i];
    vs.push_back(std::move(x));
  }
  return span(vs, ambient_);
}

Subspace Subspace::image(const Mat &map) const {
  if (map.cols() != ambient_)
    throw std::invalid_argument("Subspace::image: shape mismatch");
  std::vector<Vec> vs;
  for (const auto &b : basis_)
    vs.push_back(map * b);
  return span(vs, map.rows());
}

Vec operator+(const Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("Vec +: length mismatch");
  Vec r = a;
  for (std::size_t k = 0; k < a.size(); ++k)
    r[k] += b[k];
  return r;
}

Vec operator-(const Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("Vec -: length mismatch");
  Vec r = a;
  for (std::size_t k = 0; k < a.size(); ++k)
    r[k] -= b[k];
  return r;
}

Vec operator*(const Scalar &s, const Vec &v) {
  Vec r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero())
      r[k] = s * v[k];
  return r;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

} // namespace crsym
