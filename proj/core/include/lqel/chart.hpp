#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lqel/matrix.hpp"
#include "lqel/poly.hpp"

namespace lqel {

// Affine parametrization of a projective variety around a base point:
// the projective point is [1 : coords(t)], coords(0) = 0, and the
// parametrization is an immersion at the origin.
struct Chart {
  std::string label;
  std::size_t param_dim{0};
  std::vector<Poly> coords;  // length n + a, each in param_dim variables

  std::size_t ambient_affine_dim() const { return coords.size(); }
  std::size_t normal_dim() const { return coords.size() - param_dim; }

  Vec eval(const Vec& params) const;
};

// Rows = parameter directions, columns = ambient coordinates:
// row i is d(coords)/dt_i at the origin.
Matrix tangent_rows_at_origin(const Chart& c);

// Throws input_error when a coordinate has a nonzero constant term or the
// Jacobian at the origin drops rank.
void validate_chart(const Chart& c);

}  // namespace lqel
