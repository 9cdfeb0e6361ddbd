#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lqel/chart_io.hpp"
#include "lqel/errors.hpp"
#include "lqel/rng.hpp"
#include "lqel/secant.hpp"
#include "lqel/varieties.hpp"
#include "oracles.hpp"

using namespace lqel;

TEST_CASE("secant deficiency matches the catalog through an independent rank") {
  for (const auto& e : catalog_list()) {
    CAPTURE(e.id);
    const Chart c = chart_for_id(e.id);
    const FundamentalForms f = second_fundamental_form(c);
    SeededRng rng(1);
    const GenericTangent g = sample_generic_tangent(f, rng);
    const std::size_t oracle_delta =
        e.n - oracle::rank_bareiss(sff_v_map(f, g.v)) + 1;
    CHECK(oracle_delta == e.delta);
    CHECK(secant_deficiency(f, g.v) == e.delta);
  }
}

TEST_CASE("report dimensions satisfy the defining identities") {
  for (const char* id : {"veronese:3", "segre:2x3", "grassmann:2,6", "severi16"}) {
    CAPTURE(id);
    const FundamentalForms f = second_fundamental_form(chart_for_id(id));
    SeededRng rng(6);
    const GenericTangent g = sample_generic_tangent(f, rng);
    const SecantReport r = key_identity_check(f, g.v);
    CHECK(r.dim_Z == r.n - r.delta);
    CHECK(r.dim_sec == 2 * r.n + 1 - r.delta);
    CHECK(r.codim_sec == (r.n + r.a) - r.dim_sec);
    CHECK(r.ker_iiv.dim() == r.delta - 1);
    CHECK(r.dim_ann == r.a - (r.n - r.delta + 1));
    CHECK(r.span_v_ker.dim() == r.ker_iiv.dim() + 1);
    CHECK(r.span_v_ker.contains(g.v));
    CHECK(r.gauss_fibre_dim_Z == r.landsberg_S);
  }
}

TEST_CASE("annihilator covectors kill the image of the form") {
  const FundamentalForms f = second_fundamental_form(chart_for_id("grassmann:2,6"));
  SeededRng rng(8);
  const GenericTangent g = sample_generic_tangent(f, rng);
  const Subspace ann = annihilator(f, g.v);
  CHECK(ann.dim() == f.a - oracle::rank_bareiss(sff_v_map(f, g.v)));
  for (const Vec& cov : ann.basis_rows()) {
    for (int rep = 0; rep < 6; ++rep) {
      const Vec w = rng.int_vector(f.n, -5, 5);
      CHECK(dot(cov, sff_apply(f, g.v, w)) == Scalar(0));
    }
  }
}

TEST_CASE("singular locus is the exact kernel intersection") {
  const FundamentalForms f = second_fundamental_form(chart_for_id("segre:2x3"));
  SeededRng rng(12);
  CHECK(singular_locus(f, Subspace::zero(f.a)) == Subspace::full(f.n));

  for (int rep = 0; rep < 6; ++rep) {
    std::vector<Vec> covs;
    for (int k = 0; k < 2; ++k) covs.push_back(rng.int_vector(f.a, -4, 4));
    const Subspace a = Subspace::span(covs, f.a);
    const Subspace s = singular_locus(f, a);
    std::vector<Vec> stacked;
    for (const Vec& cov : a.basis_rows()) {
      const Matrix q = quadric_of_covector(f, cov);
      for (std::size_t r = 0; r < q.rows; ++r) stacked.push_back(q.row(r));
      for (const Vec& member : s.basis_rows())
        CHECK(vec_is_zero(mat_vec(q, member)));
    }
    if (!stacked.empty()) {
      CHECK(s.dim() ==
            f.n - oracle::rank_bareiss(Matrix::from_rows(stacked)));
    }
  }
}

TEST_CASE("key identity splits admissible from filling entries") {
  for (const auto& e : catalog_list()) {
    CAPTURE(e.id);
    const FundamentalForms f = second_fundamental_form(chart_for_id(e.id));
    SeededRng rng(3);
    const GenericTangent g = sample_generic_tangent(f, rng);
    const SecantReport r = key_identity_check(f, g.v);
    CHECK(r.secant_fills == e.secant_fills);
    CHECK(r.singloc_ann.contains(r.span_v_ker));
    if (e.secant_fills) {
      CHECK_FALSE(r.key_identity_holds);
      CHECK(r.landsberg_S == static_cast<long>(e.n - e.delta));
      CHECK(r.singloc_ann == Subspace::full(f.n));
    } else {
      CHECK(r.key_identity_holds);
      CHECK(r.landsberg_S == 0);
      CHECK(r.singloc_ann == r.span_v_ker);
    }
  }
}

TEST_CASE("projection oracle reproduces n - delta on the catalog") {
  for (const auto& e : catalog_list()) {
    CAPTURE(e.id);
    const Chart c = chart_for_id(e.id);
    for (std::uint64_t seed : {1, 2}) {
      SeededRng rng(seed);
      CHECK(tangential_projection_dim(c, rng) == e.n - e.delta);
    }
  }
}

TEST_CASE("a non-defective curve betrays delta = 0 through the oracle") {
  const Chart cubic = parse_chart_text("1 2\nt1\nt1^2\nt1^3\n", "cubic-curve");
  const FundamentalForms f = second_fundamental_form(cubic);
  SeededRng rng(1);
  const GenericTangent g = sample_generic_tangent(f, rng);
  // the rank route saturates at delta = 1 ...
  CHECK(secant_deficiency(f, g.v) == 1);
  // ... but the independent projection oracle reports dim Z = n
  SeededRng rng2(1);
  CHECK(tangential_projection_dim(cubic, rng2) == 1);
}

TEST_CASE("base locus directions are refused") {
  const Chart hyp = parse_chart_text("2 1\nt1\nt2\nt1*t2\n", "hyperbola");
  const FundamentalForms f = second_fundamental_form(hyp);
  CHECK_THROWS_AS(secant_deficiency(f, Vec{Scalar(1), Scalar(0)}), input_error);
  CHECK_THROWS_AS(key_identity_check(f, Vec{Scalar(0), Scalar(3)}), input_error);
}
