#pragma once

#include <cstddef>
#include <vector>

#include "lqel/chart.hpp"
#include "lqel/linalg.hpp"
#include "lqel/matrix.hpp"
#include "lqel/rng.hpp"

namespace lqel {

// Second fundamental form data of a chart at its base point. Tangent
// vectors are written in parameter coordinates (the basis is the image of
// the coordinate directions), normal vectors in the coordinates of the
// ambient positions listed in normal_labels: the normal space is the
// quotient of the ambient by the tangent space, realized on the
// coordinate complement of the tangent pivots.
struct FundamentalForms {
  std::size_t n{0}, a{0};
  Matrix tangent_rows;                      // n x (n+a)
  Subspace tangent_space;                   // ambient n+a
  std::vector<std::size_t> normal_labels;   // a ambient coordinate indices
  std::vector<Matrix> hessians;             // a symmetric n x n matrices
};

FundamentalForms second_fundamental_form(const Chart& chart);

// II(v, w) as a normal vector (length a).
Vec sff_apply(const FundamentalForms& f, const Vec& v, const Vec& w);

// The linear map II_v = II(v, -) : T -> N as an a x n matrix.
Matrix sff_v_map(const FundamentalForms& f, const Vec& v);

// The quadric sum_k f_k * H_k attached to a normal covector.
Matrix quadric_of_covector(const FundamentalForms& f, const Vec& covector);

struct GenericTangent {
  Vec v;
  std::size_t rank{0};
  std::size_t samples_used{0};
};

// Draw integer tangent vectors in [-10, 10]^n until three consecutive
// draws avoid the base locus and agree on rank(II_v); returns the first
// of the agreeing triple. Throws sampling_exhausted after 20 draws.
GenericTangent sample_generic_tangent(const FundamentalForms& f,
                                      SeededRng& rng);

}  // namespace lqel
