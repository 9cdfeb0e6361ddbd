#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lqel/chart.hpp"
#include "lqel/rng.hpp"

namespace lqel {

struct CatalogEntry {
  std::string id;
  std::size_t n{0}, a{0};
  std::size_t delta{0};
  bool secant_fills{false};
};

// The built-in entries, degenerate gates included.
const std::vector<CatalogEntry>& catalog_list();

// Quadratic Veronese image of P^n, affine graph chart: the n parameters
// followed by all products t_i t_j, i <= j.
Chart veronese_chart(std::size_t n);

// Segre product P^m x P^n: parameters (s, t) followed by all s_i t_j.
Chart segre_chart(std::size_t m, std::size_t n);

// Plucker chart of the Grassmannian of 2-planes in C^n: the 2(n-2)
// parameters a_{r,j} followed by the 2x2 minors, j < k.
Chart grassmann_chart(std::size_t n);

// The 16-dimensional Severi variety: rank-one elements of the exceptional
// Jordan algebra in the affine chart at a rank-one idempotent. Parameters
// are a pair of octonions (u, v); coordinates are u, v, N(u), N(v) and
// conj(u) * v.
Chart severi16_chart();

// Linear projection from the point at infinity [0 : center]; the center
// must avoid the affine tangent space at the base point. Drops the
// ambient dimension by one and keeps the chart polynomial and centered.
Chart project_chart(const Chart& c, const Vec& center);

// Re-center the chart at a random small-integer parameter point, project
// from a random center, and validate genericity post hoc: the projected
// chart must reproduce the source's (n, delta).
Chart project_chart_random(const Chart& c, SeededRng& rng);

// Resolve any id: catalog families with arbitrary admissible parameters
// ("veronese:5"), and "projected:<source>:<seed>:<count>".
Chart chart_for_id(const std::string& id);

// Expected invariants when the id names a catalog family (projections
// inherit the source's n and delta).
std::optional<CatalogEntry> expectation_for_id(const std::string& id);

}  // namespace lqel
