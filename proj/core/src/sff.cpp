#include "lqel/sff.hpp"

#include <cassert>

#include "lqel/errors.hpp"

namespace lqel {

FundamentalForms second_fundamental_form(const Chart& chart) {
  validate_chart(chart);
  FundamentalForms f;
  f.n = chart.param_dim;
  f.a = chart.normal_dim();
  f.tangent_rows = tangent_rows_at_origin(chart);
  f.tangent_space = Subspace::row_space(f.tangent_rows);

  std::vector<bool> is_pivot(chart.ambient_affine_dim(), false);
  for (std::size_t r = 0; r < f.tangent_space.dim(); ++r) {
    std::size_t p = 0;
    while (f.tangent_space.basis.at(r, p).is_zero()) ++p;
    is_pivot[p] = true;
  }
  for (std::size_t c = 0; c < chart.ambient_affine_dim(); ++c)
    if (!is_pivot[c]) f.normal_labels.push_back(c);

  f.hessians.assign(f.a, Matrix(f.n, f.n));
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = i; j < f.n; ++j) {
      // Second derivative of the chart at the origin along (t_i, t_j),
      // then its class in the normal quotient.
      Vec second(chart.ambient_affine_dim());
      for (std::size_t k = 0; k < chart.coords.size(); ++k)
        second[k] = chart.coords[k].partial(i).partial(j).constant_term();
      Vec residue = f.tangent_space.reduce(std::move(second));
      for (std::size_t k = 0; k < f.a; ++k) {
        f.hessians[k].at(i, j) = residue[f.normal_labels[k]];
        f.hessians[k].at(j, i) = residue[f.normal_labels[k]];
      }
    }
  return f;
}

Vec sff_apply(const FundamentalForms& f, const Vec& v, const Vec& w) {
  assert(v.size() == f.n && w.size() == f.n);
  Vec out(f.a);
  for (std::size_t k = 0; k < f.a; ++k)
    out[k] = dot(v, mat_vec(f.hessians[k], w));
  return out;
}

Matrix sff_v_map(const FundamentalForms& f, const Vec& v) {
  assert(v.size() == f.n);
  Matrix m(f.a, f.n);
  for (std::size_t k = 0; k < f.a; ++k) {
    Vec row = vec_mat(v, f.hessians[k]);
    for (std::size_t c = 0; c < f.n; ++c) m.at(k, c) = row[c];
  }
  return m;
}

Matrix quadric_of_covector(const FundamentalForms& f, const Vec& covector) {
  assert(covector.size() == f.a);
  Matrix q(f.n, f.n);
  for (std::size_t k = 0; k < f.a; ++k) {
    if (covector[k].is_zero()) continue;
    q = q + scale(covector[k], f.hessians[k]);
  }
  return q;
}

GenericTangent sample_generic_tangent(const FundamentalForms& f,
                                      SeededRng& rng) {
  constexpr std::size_t kBudget = 20;
  std::vector<GenericTangent> valid;
  for (std::size_t draw = 1; draw <= kBudget; ++draw) {
    Vec v = rng.int_vector(f.n, -10, 10);
    if (vec_is_zero(sff_apply(f, v, v))) continue;  // base locus
    const std::size_t rk = rank(sff_v_map(f, v));
    valid.push_back({std::move(v), rk, draw});
    const std::size_t s = valid.size();
    if (s >= 3 && valid[s - 1].rank == valid[s - 2].rank &&
        valid[s - 2].rank == valid[s - 3].rank) {
      GenericTangent out = valid[s - 3];
      out.samples_used = draw;
      return out;
    }
  }
  throw sampling_exhausted(
      "no certified generic tangent direction in 20 draws (all base locus "
      "or unstable rank)");
}

}  // namespace lqel
