#include "lqel/linalg.hpp"

#include <cassert>

#include "lqel/errors.hpp"

namespace lqel {

std::size_t rref_in_place(Matrix& m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(p, k), m.at(r, k));
    const Scalar inv = Scalar(1) / m.at(r, c);
    for (std::size_t k = c; k < m.cols; ++k) m.at(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Scalar f = m.at(i, c);
      for (std::size_t k = c; k < m.cols; ++k)
        m.at(i, k) -= f * m.at(r, k);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

std::size_t rank(Matrix m) { return rref_in_place(m); }

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  Matrix m(vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    assert(vectors[r].size() == ambient);
    for (std::size_t c = 0; c < ambient; ++c) m.at(r, c) = vectors[r][c];
  }
  return row_space(m);
}

Subspace Subspace::row_space(const Matrix& m) {
  Matrix e = m;
  const std::size_t rk = rref_in_place(e);
  Subspace s;
  s.ambient = m.cols;
  s.basis = Matrix(rk, m.cols);
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) s.basis.at(r, c) = e.at(r, c);
  return s;
}

std::vector<Vec> Subspace::basis_rows() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis.row(r));
  return out;
}

Vec Subspace::reduce(Vec u) const {
  assert(u.size() == ambient);
  for (std::size_t r = 0; r < dim(); ++r) {
    // Locate this row's pivot (first nonzero entry; it equals 1).
    std::size_t p = 0;
    while (p < ambient && basis.at(r, p).is_zero()) ++p;
    assert(p < ambient);
    if (u[p].is_zero()) continue;
    const Scalar f = u[p];
    for (std::size_t c = p; c < ambient; ++c) u[c] -= f * basis.at(r, c);
  }
  return u;
}

bool Subspace::contains(const Vec& u) const { return vec_is_zero(reduce(u)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient != ambient) return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis.row(r))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  Matrix e = m;
  std::vector<std::size_t> pivots;
  rref_in_place(e, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<Vec> gens;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols, Scalar(0));
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -e.at(r, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, m.cols);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  assert(a.ambient == b.ambient);
  std::vector<Vec> rows = a.basis_rows();
  for (auto& r : b.basis_rows()) rows.push_back(r);
  return Subspace::span(rows, a.ambient);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  assert(a.ambient == b.ambient);
  const std::size_t ka = a.dim(), kb = b.dim();
  if (ka == 0 || kb == 0) return Subspace::zero(a.ambient);
  // Solve alpha^T A = beta^T B: kernel of the ambient x (ka+kb) matrix
  // [A^T | -B^T]; each solution's alpha part spans the intersection.
  Matrix m(a.ambient, ka + kb);
  for (std::size_t r = 0; r < a.ambient; ++r) {
    for (std::size_t c = 0; c < ka; ++c) m.at(r, c) = a.basis.at(c, r);
    for (std::size_t c = 0; c < kb; ++c) m.at(r, ka + c) = -b.basis.at(c, r);
  }
  Subspace pairs = kernel(m);
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < pairs.dim(); ++r) {
    Vec x(a.ambient, Scalar(0));
    for (std::size_t c = 0; c < ka; ++c) {
      const Scalar& alpha = pairs.basis.at(r, c);
      if (alpha.is_zero()) continue;
      for (std::size_t j = 0; j < a.ambient; ++j)
        x[j] += alpha * a.basis.at(c, j);
    }
    gens.push_back(std::move(x));
  }
  return Subspace::span(gens, a.ambient);
}

Subspace subspace_complement(const Subspace& s) {
  std::vector<bool> is_pivot(s.ambient, false);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    std::size_t p = 0;
    while (p < s.ambient && s.basis.at(r, p).is_zero()) ++p;
    assert(p < s.ambient);
    is_pivot[p] = true;
  }
  std::vector<Vec> gens;
  for (std::size_t c = 0; c < s.ambient; ++c) {
    if (is_pivot[c]) continue;
    Vec e(s.ambient, Scalar(0));
    e[c] = Scalar(1);
    gens.push_back(std::move(e));
  }
  return Subspace::span(gens, s.ambient);
}

std::optional<Vec> coords_in_basis(const std::vector<Vec>& basis,
                                   const Vec& target) {
  const std::size_t k = basis.size();
  const std::size_t d = target.size();
  // Augmented system [columns = basis | target].
  Matrix m(d, k + 1);
  for (std::size_t c = 0; c < k; ++c) {
    if (basis[c].size() != d)
      throw invariant_violation("coords_in_basis: dimension mismatch");
    for (std::size_t r = 0; r < d; ++r) m.at(r, c) = basis[c][r];
  }
  for (std::size_t r = 0; r < d; ++r) m.at(r, k) = target[r];
  std::vector<std::size_t> pivots;
  rref_in_place(m, &pivots);
  bool augmented_pivot = !pivots.empty() && pivots.back() == k;
  std::size_t coeff_rank = pivots.size() - (augmented_pivot ? 1 : 0);
  if (coeff_rank != k)
    throw invariant_violation("coords_in_basis: basis vectors are dependent");
  if (augmented_pivot) return std::nullopt;
  Vec coeffs(k, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    coeffs[pivots[r]] = m.at(r, k);
  return coeffs;
}

}  // namespace lqel
