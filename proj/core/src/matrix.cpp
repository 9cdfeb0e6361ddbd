#include "lqel/matrix.hpp"

#include <cassert>

#include "lqel/errors.hpp"

namespace lqel {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = c * v[k];
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Scalar s(0);
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += v[k].to_string();
  }
  return s + ")";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rs) {
  if (rs.empty()) return Matrix();
  Matrix m(rs.size(), rs[0].size());
  for (std::size_t r = 0; r < rs.size(); ++r) {
    assert(rs[r].size() == m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rs[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols);
  for (std::size_t c = 0; c < cols; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows);
  for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows != cols) return false;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = r + 1; c < cols; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

Scalar Matrix::trace() const {
  assert(rows == cols);
  Scalar s(0);
  for (std::size_t k = 0; k < rows; ++k) s += at(k, k);
  return s;
}

std::optional<Scalar> Matrix::as_scalar_multiple_of_identity() const {
  if (rows != cols) return std::nullopt;
  if (rows == 0) return Scalar(0);
  Scalar c = at(0, 0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < cols; ++k) {
      const Scalar want = (r == k) ? c : Scalar(0);
      if (at(r, k) != want) return std::nullopt;
    }
  return c;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows; ++r) {
    if (r) s += "; ";
    s += vec_to_string(row(r));
  }
  return s + "]";
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  assert(a.rows == b.rows && a.cols == b.cols);
  Matrix m(a.rows, a.cols);
  for (std::size_t k = 0; k < m.data.size(); ++k)
    m.data[k] = a.data[k] + b.data[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  assert(a.rows == b.rows && a.cols == b.cols);
  Matrix m(a.rows, a.cols);
  for (std::size_t k = 0; k < m.data.size(); ++k)
    m.data[k] = a.data[k] - b.data[k];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols == b.rows);
  Matrix m(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols; ++c)
        m.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return m;
}

Matrix scale(const Scalar& c, const Matrix& m) {
  Matrix r(m.rows, m.cols);
  for (std::size_t k = 0; k < m.data.size(); ++k) r.data[k] = c * m.data[k];
  return r;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
  assert(v.size() == m.cols);
  Vec r(m.rows, Scalar(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

Vec vec_mat(const Vec& v, const Matrix& m) {
  assert(v.size() == m.rows);
  Vec r(m.cols, Scalar(0));
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols; ++j) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

Scalar determinant(Matrix m) {
  if (m.rows != m.cols) throw input_error("determinant of non-square matrix");
  const std::size_t n = m.rows;
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(m.at(pivot, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    const Scalar inv = Scalar(1) / m.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Scalar f = m.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

}  // namespace lqel
