#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lqel/chart_io.hpp"
#include "lqel/errors.hpp"
#include "lqel/linalg.hpp"
#include "lqel/octonion.hpp"
#include "lqel/rng.hpp"
#include "lqel/varieties.hpp"
#include "oracles.hpp"

using namespace lqel;

namespace {

Octonion rand_octonion(SeededRng& rng) {
  Octonion o;
  for (auto& x : o.c) x = Scalar(rng.int_in(-6, 6));
  return o;
}

}  // namespace

TEST_CASE("catalog entries are well formed charts") {
  const auto& entries = catalog_list();
  REQUIRE(entries.size() == 10);
  for (const auto& e : entries) {
    const Chart c = chart_for_id(e.id);
    CHECK(c.param_dim == e.n);
    CHECK(c.normal_dim() == e.a);
    CHECK_NOTHROW(validate_chart(c));
    CHECK(vec_is_zero(c.eval(Vec(e.n, Scalar(0)))));
    const auto exp = expectation_for_id(e.id);
    REQUIRE(exp.has_value());
    CHECK(exp->delta == e.delta);
    CHECK(exp->secant_fills == e.secant_fills);
  }
}

TEST_CASE("veronese chart lists parameters then monomials") {
  const Chart c = veronese_chart(2);
  const Vec at = {Scalar(2), Scalar(3)};
  CHECK(c.eval(at) ==
        Vec{Scalar(2), Scalar(3), Scalar(4), Scalar(6), Scalar(9)});
  CHECK_THROWS_AS(veronese_chart(1), input_error);
}

TEST_CASE("segre chart is the bilinear product embedding") {
  const Chart c = segre_chart(2, 3);
  const Vec at = {Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5)};
  CHECK(c.eval(at) == Vec{Scalar(1), Scalar(2), Scalar(3), Scalar(4),
                          Scalar(5), Scalar(3), Scalar(4), Scalar(5),
                          Scalar(6), Scalar(8), Scalar(10)});
  CHECK_THROWS_AS(segre_chart(1, 1), input_error);
  CHECK_THROWS_AS(segre_chart(0, 3), input_error);
}

TEST_CASE("grassmann chart carries the Plucker minors") {
  const Chart c = grassmann_chart(5);
  REQUIRE(c.param_dim == 6);
  REQUIRE(c.normal_dim() == 3);
  const Vec at = {Scalar(1), Scalar(2), Scalar(3),
                  Scalar(4), Scalar(5), Scalar(6)};
  const Vec got = c.eval(at);
  CHECK(Vec(got.begin() + 6, got.end()) ==
        Vec{Scalar(-3), Scalar(-6), Scalar(-3)});
  CHECK_THROWS_AS(grassmann_chart(4), input_error);
}

TEST_CASE("octonion units multiply by the oriented triple table") {
  const Octonion e1 = Octonion::unit(1), e2 = Octonion::unit(2),
                 e3 = Octonion::unit(3), e4 = Octonion::unit(4),
                 e7 = Octonion::unit(7);
  CHECK(e1 * e2 == e3);
  CHECK(e2 * e1 == Octonion() - e3);
  CHECK(e1 * e1 == Octonion() - Octonion::unit(0));
  CHECK(Octonion::unit(0) * e4 == e4);
  // a nonassociative witness: (e1 e2) e4 = e7 but e1 (e2 e4) = -e7
  CHECK((e1 * e2) * e4 == e7);
  CHECK(e1 * (e2 * e4) == Octonion() - e7);
}

TEST_CASE("octonion norm is multiplicative and conjugation reverses") {
  SeededRng rng(17);
  for (int rep = 0; rep < 25; ++rep) {
    const Octonion x = rand_octonion(rng), y = rand_octonion(rng);
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK((x * y).conj() == y.conj() * x.conj());
    // alternative laws
    CHECK((x * x) * y == x * (x * y));
    CHECK((y * x) * x == y * (x * x));
    // conj(x) * x is the norm times the unit
    Octonion nx;
    nx.c[0] = x.norm();
    CHECK(x.conj() * x == nx);
  }
}

TEST_CASE("severi chart coordinates come from the octonion operations") {
  const Chart c = severi16_chart();
  REQUIRE(c.param_dim == 16);
  REQUIRE(c.normal_dim() == 10);
  CHECK_NOTHROW(validate_chart(c));

  SeededRng rng(29);
  for (int rep = 0; rep < 10; ++rep) {
    const Vec at = rng.int_vector(16, -5, 5);
    Octonion u, v;
    for (std::size_t k = 0; k < 8; ++k) {
      u.c[k] = at[k];
      v.c[k] = at[8 + k];
    }
    const Vec got = c.eval(at);
    REQUIRE(got.size() == 26);
    for (std::size_t k = 0; k < 16; ++k) CHECK(got[k] == at[k]);
    CHECK(got[16] == u.norm());
    CHECK(got[17] == v.norm());
    const Octonion w = u.conj() * v;
    for (std::size_t k = 0; k < 8; ++k) CHECK(got[18 + k] == w.c[k]);
  }
}

TEST_CASE("projection drops the chosen coordinate direction") {
  const Chart c = veronese_chart(2);
  // center [0:0:0:1:0:0] in homogeneous coordinates: affine part e_2
  Vec center(5, Scalar(0));
  center[2] = Scalar(1);
  const Chart p = project_chart(c, center);
  CHECK(p.param_dim == 2);
  CHECK(p.ambient_affine_dim() == 4);

  SeededRng rng(37);
  for (int rep = 0; rep < 10; ++rep) {
    const Vec at = rng.int_vector(2, -4, 4);
    const Vec full = c.eval(at), proj = p.eval(at);
    // the projection map: drop coordinate 2, others unchanged here
    CHECK(proj == Vec{full[0], full[1], full[3], full[4]});
  }
}

TEST_CASE("projection from a general center matches the linear map") {
  SeededRng rng(41);
  const Chart c = segre_chart(2, 2);
  const std::size_t amb = c.ambient_affine_dim();
  for (int rep = 0; rep < 8; ++rep) {
    const Vec center = rng.int_vector(amb, -5, 5);
    const Subspace tangent = Subspace::row_space(tangent_rows_at_origin(c));
    if (vec_is_zero(center) || tangent.contains(center)) continue;
    const Chart p = project_chart(c, center);
    std::size_t drop = amb;
    for (std::size_t k = amb; k-- > 0;) {
      if (!center[k].is_zero()) {
        drop = k;
        break;
      }
    }
    const Vec at = rng.int_vector(2 + 2, -3, 3);
    const Vec full = c.eval(at), proj = p.eval(at);
    std::size_t idx = 0;
    for (std::size_t k = 0; k < amb; ++k) {
      if (k == drop) continue;
      Scalar ratio = center[k];
      ratio /= center[drop];
      CHECK(proj[idx] == full[k] - ratio * full[drop]);
      ++idx;
    }
  }
}

TEST_CASE("projection centers inside the tangent space are refused") {
  const Chart c = veronese_chart(2);
  Vec tangent_center(5, Scalar(0));
  tangent_center[0] = Scalar(1);  // the t1 tangent direction
  CHECK_THROWS_AS(project_chart(c, tangent_center), input_error);
  CHECK_THROWS_AS(project_chart(c, Vec(5, Scalar(0))), input_error);
}

TEST_CASE("random projections are deterministic and feasibility-gated") {
  SeededRng a(13), b(13);
  const Chart c = veronese_chart(3);
  const Chart p1 = project_chart_random(c, a);
  const Chart p2 = project_chart_random(c, b);
  CHECK(p1.coords == p2.coords);
  CHECK(p1.ambient_affine_dim() == c.ambient_affine_dim() - 1);

  // rank II_v = 5 fills the normal space of grassmann:2,6 after one drop
  SeededRng r(7);
  Chart g =
      project_chart_random(chart_for_id("grassmann:2,6"), r);
  CHECK_THROWS_AS(project_chart_random(g, r), input_error);
}

TEST_CASE("id resolution accepts families and rejects malformed requests") {
  CHECK(chart_for_id("veronese:5").param_dim == 5);
  CHECK(chart_for_id("segre:3x4").param_dim == 7);
  CHECK(chart_for_id("grassmann:2,8").param_dim == 12);
  CHECK(chart_for_id("projected:veronese:3:4:2").normal_dim() == 4);

  CHECK_THROWS_AS(chart_for_id("veronese:1"), input_error);
  CHECK_THROWS_AS(chart_for_id("segre:0x2"), input_error);
  CHECK_THROWS_AS(chart_for_id("grassmann:2,4"), input_error);
  CHECK_THROWS_AS(chart_for_id("grassmann:3,6"), input_error);
  CHECK_THROWS_AS(chart_for_id("nosuch:thing"), input_error);
  CHECK_THROWS_AS(chart_for_id("projected:nosuch:1:1"), input_error);
}

TEST_CASE("projection expectations recompute the filling flag") {
  const auto two = expectation_for_id("projected:veronese:3:9:2");
  REQUIRE(two.has_value());
  CHECK(two->n == 3);
  CHECK(two->delta == 1);
  CHECK(two->a == 4);
  CHECK_FALSE(two->secant_fills);

  const auto three = expectation_for_id("projected:veronese:3:9:3");
  REQUIRE(three.has_value());
  CHECK(three->a == 3);
  CHECK(three->secant_fills);

  CHECK_FALSE(expectation_for_id("projected:veronese:3:9:4").has_value());
  CHECK_FALSE(expectation_for_id("some/file.chart").has_value());
}

TEST_CASE("chart text parsing and validation") {
  const char* text =
      "# a plane curve thickened into a surface chart\n"
      "2 1\n"
      "t1\n"
      "t2  # tangent part\n"
      "t1*t2 + t2^2\n";
  const Chart c = parse_chart_text(text, "demo");
  CHECK(c.param_dim == 2);
  CHECK(c.normal_dim() == 1);
  CHECK(c.eval({Scalar(1), Scalar(2)}) == Vec{Scalar(1), Scalar(2), Scalar(6)});

  CHECK_THROWS_AS(parse_chart_text("2 1\nt1\nt2\n", "short"), input_error);
  CHECK_THROWS_AS(parse_chart_text("0 1\nt1\n", "zero"), input_error);
  CHECK_THROWS_AS(parse_chart_text("not a header\nt1\n", "bad"), input_error);
  CHECK_THROWS_AS(parse_chart_text("1 1\nt1 + 1\nt1^2\n", "constant"),
                  input_error);
  // Jacobian rank must be full: both rows equal
  CHECK_THROWS_AS(
      parse_chart_text("2 1\nt1 + t2\nt1 + t2\nt1*t2\n", "rank"),
      input_error);
  CHECK_THROWS_AS(read_chart_file("/nonexistent/path.chart"), input_error);
}
