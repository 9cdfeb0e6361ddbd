#include "lqel/secant.hpp"

#include <cassert>

#include "lqel/errors.hpp"

namespace lqel {

std::size_t secant_deficiency(const FundamentalForms& f, const Vec& v) {
  if (vec_is_zero(sff_apply(f, v, v)))
    throw input_error("v in base locus: II(v,v) = 0");
  return f.n - rank(sff_v_map(f, v)) + 1;
}

Subspace annihilator(const FundamentalForms& f, const Vec& v) {
  return kernel(sff_v_map(f, v).transpose());
}

Subspace singular_locus(const FundamentalForms& f,
                        const Subspace& covectors) {
  assert(covectors.ambient == f.a);
  Subspace out = Subspace::full(f.n);
  for (std::size_t r = 0; r < covectors.dim(); ++r) {
    const Matrix q = quadric_of_covector(f, covectors.basis.row(r));
    out = subspace_intersect(out, kernel(q));
  }
  return out;
}

SecantReport key_identity_check(const FundamentalForms& f, const Vec& v) {
  SecantReport rep;
  rep.n = f.n;
  rep.a = f.a;
  rep.v = v;
  rep.delta = secant_deficiency(f, v);
  rep.dim_Z = f.n - rep.delta;
  rep.dim_sec = 2 * f.n + 1 - rep.delta;
  rep.codim_sec = (f.n + f.a) - rep.dim_sec;
  rep.secant_fills = rep.codim_sec == 0;

  rep.ker_iiv = kernel(sff_v_map(f, v));
  std::vector<Vec> gens = rep.ker_iiv.basis_rows();
  gens.push_back(v);
  rep.span_v_ker = Subspace::span(gens, f.n);

  const Subspace ann = annihilator(f, v);
  rep.dim_ann = ann.dim();
  rep.singloc_ann = singular_locus(f, ann);

  if (!rep.singloc_ann.contains(rep.span_v_ker))
    throw invariant_violation(
        "<v, ker II_v> is not contained in Singloc(Ann(v))");
  rep.landsberg_S = static_cast<long>(rep.singloc_ann.dim()) -
                    static_cast<long>(rep.span_v_ker.dim());
  rep.gauss_fibre_dim_Z = rep.landsberg_S;
  rep.key_identity_holds = rep.singloc_ann == rep.span_v_ker;
  return rep;
}

std::size_t tangential_projection_dim(const Chart& chart, SeededRng& rng) {
  const std::size_t n = chart.param_dim;
  const std::size_t ambient = chart.ambient_affine_dim();
  const std::size_t a = ambient - n;

  // Embedded tangent space at the base point, in homogeneous coordinates
  // (position 0 is the homogenizing one).
  const Matrix rows = tangent_rows_at_origin(chart);
  Matrix that(n + 1, ambient + 1);
  that.at(0, 0) = Scalar(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < ambient; ++k)
      that.at(i + 1, k + 1) = rows.at(i, k);
  const Subspace tangent = Subspace::row_space(that);
  if (tangent.dim() != n + 1)
    throw input_error("tangential projection: chart is not an immersion");

  std::vector<bool> is_pivot(ambient + 1, false);
  for (std::size_t r = 0; r < tangent.dim(); ++r) {
    std::size_t p = 0;
    while (tangent.basis.at(r, p).is_zero()) ++p;
    is_pivot[p] = true;
  }
  std::vector<std::size_t> quot;  // coordinates realizing the quotient
  for (std::size_t c = 0; c <= ambient; ++c)
    if (!is_pivot[c]) quot.push_back(c);
  assert(quot.size() == a);

  std::vector<Poly> partials;  // row-major n x ambient
  partials.reserve(n * ambient);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < ambient; ++k)
      partials.push_back(chart.coords[k].partial(i));

  auto quotient_of = [&](const Vec& homogeneous) {
    Vec r = tangent.reduce(homogeneous);
    Vec out(a);
    for (std::size_t k = 0; k < a; ++k) out[k] = r[quot[k]];
    return out;
  };

  constexpr std::size_t kBudget = 20;
  std::vector<std::size_t> ranks;
  for (std::size_t draw = 0; draw < kBudget; ++draw) {
    const Vec t0 = rng.int_vector(n, -10, 10);
    Vec point(ambient + 1);
    point[0] = Scalar(1);
    const Vec value = chart.eval(t0);
    for (std::size_t k = 0; k < ambient; ++k) point[k + 1] = value[k];
    const Vec g = quotient_of(point);
    if (vec_is_zero(g)) continue;  // second point sits on the tangent space

    // Columns: the n partial derivatives pushed to the quotient, then the
    // cone direction g itself.
    Matrix m(a, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      Vec d(ambient + 1, Scalar(0));
      for (std::size_t k = 0; k < ambient; ++k)
        d[k + 1] = partials[i * ambient + k].eval(t0);
      const Vec dq = quotient_of(d);
      for (std::size_t r = 0; r < a; ++r) m.at(r, i) = dq[r];
    }
    for (std::size_t r = 0; r < a; ++r) m.at(r, n) = g[r];

    ranks.push_back(rank(m));
    const std::size_t s = ranks.size();
    if (s >= 3 && ranks[s - 1] == ranks[s - 2] && ranks[s - 2] == ranks[s - 3])
      return ranks[s - 1] - 1;
  }
  throw sampling_exhausted(
      "tangential projection: no three agreeing rank samples in 20 draws");
}

}  // namespace lqel
