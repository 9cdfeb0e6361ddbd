#include "lqel/chart.hpp"

#include "lqel/errors.hpp"
#include "lqel/linalg.hpp"

namespace lqel {

Vec Chart::eval(const Vec& params) const {
  Vec out(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) out[k] = coords[k].eval(params);
  return out;
}

Matrix tangent_rows_at_origin(const Chart& c) {
  Matrix m(c.param_dim, c.ambient_affine_dim());
  for (std::size_t k = 0; k < c.coords.size(); ++k)
    for (std::size_t i = 0; i < c.param_dim; ++i)
      m.at(i, k) = c.coords[k].partial(i).constant_term();
  return m;
}

void validate_chart(const Chart& c) {
  if (c.param_dim == 0 || c.coords.size() <= c.param_dim)
    throw input_error("chart '" + c.label +
                      "': need param_dim >= 1 and ambient dim > param_dim");
  for (std::size_t k = 0; k < c.coords.size(); ++k) {
    if (c.coords[k].nvars() != c.param_dim)
      throw input_error("chart '" + c.label + "': coordinate " +
                        std::to_string(k + 1) + " has wrong variable count");
    if (!c.coords[k].constant_term().is_zero())
      throw input_error("chart '" + c.label + "': coordinate " +
                        std::to_string(k + 1) +
                        " has a nonzero constant term (chart not centered)");
  }
  if (rank(tangent_rows_at_origin(c)) != c.param_dim)
    throw input_error("chart '" + c.label +
                      "': not an immersion at the origin");
}

}  // namespace lqel
