#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lqel/matrix.hpp"

namespace lqel {

// Reduce to reduced row echelon form in place. Pivot choice is the first
// nonzero entry scanning down each column, so the result is deterministic.
// Returns the rank; pivot column indices go to *pivots when non-null.
std::size_t rref_in_place(Matrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(Matrix m);

// Linear subspace of Q(i)^ambient held as a reduced-row-echelon basis,
// so equality of subspaces is equality of the stored matrices.
struct Subspace {
  std::size_t ambient{0};
  Matrix basis;  // dim() rows, each of length ambient, in RREF

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  // Canonicalize the span of the given vectors.
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace row_space(const Matrix& m);

  std::size_t dim() const { return basis.rows; }
  std::vector<Vec> basis_rows() const;

  // Subtract the unique combination of basis rows matching u on the pivot
  // coordinates; the result has zeros there. u is in the subspace iff the
  // result is zero.
  Vec reduce(Vec u) const;
  bool contains(const Vec& u) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }
};

// Right kernel {x : m x = 0}, canonicalized.
Subspace kernel(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Deterministic complement: the span of the coordinate vectors at the
// non-pivot positions of the subspace's echelon basis.
Subspace subspace_complement(const Subspace& s);

// Coefficients expressing target in the given linearly independent basis
// vectors, or nullopt when target is outside their span. Dependent input
// is a caller bug and throws invariant_violation.
std::optional<Vec> coords_in_basis(const std::vector<Vec>& basis,
                                   const Vec& target);

}  // namespace lqel
