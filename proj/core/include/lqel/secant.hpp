#pragma once

#include <cstddef>

#include "lqel/chart.hpp"
#include "lqel/linalg.hpp"
#include "lqel/rng.hpp"
#include "lqel/sff.hpp"

namespace lqel {

// Invariants of the secant geometry at a generic tangent direction v.
// All subspaces live in tangent (parameter) coordinates.
struct SecantReport {
  std::size_t n{0}, a{0};
  Vec v;
  std::size_t delta{0};      // secant deficiency
  std::size_t dim_Z{0};      // n - delta
  std::size_t dim_sec{0};    // 2n + 1 - delta (projective)
  std::size_t codim_sec{0};  // (n + a) - dim_sec
  std::size_t dim_ann{0};
  Subspace ker_iiv;          // K = ker II_v
  Subspace span_v_ker;       // <v, K>
  Subspace singloc_ann;      // Singloc(Ann(v))
  long landsberg_S{0};       // dim singloc_ann - dim span_v_ker
  long gauss_fibre_dim_Z{0}; // = landsberg_S
  bool key_identity_holds{false};
  bool secant_fills{false};
};

// delta = n - rank(II_v) + 1. Requires II(v,v) != 0.
std::size_t secant_deficiency(const FundamentalForms& f, const Vec& v);

// Ann(v) = { covectors annihilating II_v(T) } = ker of sff_v_map's
// transpose, a subspace of the normal dual (ambient a).
Subspace annihilator(const FundamentalForms& f, const Vec& v);

// Intersection of the kernels of the quadrics attached to a space of
// normal covectors; the empty system cuts out the full tangent space.
Subspace singular_locus(const FundamentalForms& f, const Subspace& covectors);

// Full secant invariant bundle at v, with the containment
// <v, ker II_v> <= Singloc(Ann(v)) asserted.
SecantReport key_identity_check(const FundamentalForms& f, const Vec& v);

// Independent route to dim Z: the rank of the differential of
// (parameters -> homogeneous ambient -> quotient by the embedded tangent
// space) at a random second point, minus the cone direction. Three
// consecutive agreeing samples are required.
std::size_t tangential_projection_dim(const Chart& chart, SeededRng& rng);

}  // namespace lqel
