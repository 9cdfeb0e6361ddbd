#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lqel/scalar.hpp"

namespace lqel {

using Vec = std::vector<Scalar>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
// Plain bilinear pairing sum a_k b_k; no conjugation anywhere.
Scalar dot(const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& v);

// Dense matrix over Q(i), row-major.
struct Matrix {
  std::size_t rows{0}, cols{0};
  std::vector<Scalar> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), data(r * c, Scalar(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rs);

  Scalar& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  Scalar trace() const;
  // The scalar c when the matrix equals c*Id, otherwise empty.
  std::optional<Scalar> as_scalar_multiple_of_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

  std::string to_string() const;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix scale(const Scalar& c, const Matrix& m);
Vec mat_vec(const Matrix& m, const Vec& v);
// Row vector times matrix.
Vec vec_mat(const Vec& v, const Matrix& m);
Scalar determinant(Matrix m);

}  // namespace lqel
