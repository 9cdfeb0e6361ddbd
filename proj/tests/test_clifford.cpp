#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lqel/chart_io.hpp"
#include "lqel/clifford.hpp"
#include "lqel/errors.hpp"
#include "lqel/rng.hpp"
#include "lqel/varieties.hpp"
#include "oracles.hpp"

using namespace lqel;

namespace {

CliffordModuleData build_for(const std::string& id, std::uint64_t seed,
                             FundamentalForms* forms = nullptr,
                             SecantReport* report = nullptr) {
  const FundamentalForms f = second_fundamental_form(chart_for_id(id));
  SeededRng rng(seed);
  const GenericTangent g = sample_generic_tangent(f, rng);
  const SecantReport rep = key_identity_check(f, g.v);
  if (forms) *forms = f;
  if (report) *report = rep;
  return build_clifford_module(f, rep);
}

Matrix from_longs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> vr;
  for (const auto& r : rows) {
    Vec v;
    for (long x : r) v.push_back(Scalar(x));
    vr.push_back(v);
  }
  return Matrix::from_rows(vr);
}

}  // namespace

TEST_CASE("the product of planes carries a pinned rank-one module") {
  const FundamentalForms f = second_fundamental_form(segre_chart(2, 2));
  const Vec v = {Scalar(1), Scalar(0), Scalar(1), Scalar(0)};
  const SecantReport rep = key_identity_check(f, v);
  REQUIRE(rep.delta == 2);
  const CliffordModuleData d = build_clifford_module(f, rep);

  CHECK(d.dim_K == 1);
  CHECK(d.dim_W == 2);
  REQUIRE(d.K_basis.size() == 1);
  CHECK(d.K_basis[0] == Vec{Scalar(1), Scalar(0), Scalar(-1), Scalar(0)});
  REQUIRE(d.U_basis.size() == 2);
  CHECK(d.U_basis[0] == Vec{Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
  CHECK(d.U_basis[1] == Vec{Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
  CHECK(d.f0 == Vec{Scalar(2), Scalar(0), Scalar(0), Scalar(0)});
  CHECK(d.action[0] == from_longs({{-1, 0}, {0, 1}}));
  CHECK(d.Q == from_longs({{-1}}));
  CHECK(determinant(d.Q) == Scalar(-1));
  CHECK(verify_clifford_relations(d).empty());
  CHECK(recover_form_from_squares(d) == d.Q);

  const ModuleMultiplicity m = module_multiplicity(d);
  CHECK(m.l == 1);
  CHECK(m.rank == 1);
  CHECK(m.p == 1);
  CHECK(m.multiplicity == 2);
  REQUIRE(m.chirality == ModuleMultiplicity::Chirality::Resolved);
  CHECK(m.plus == 1);
  CHECK(m.minus == 1);
}

TEST_CASE("relations vanish exactly across the defective catalog") {
  for (const char* id :
       {"veronese:3", "segre:2x2", "segre:2x3", "grassmann:2,6",
        "grassmann:2,7", "severi16"}) {
    CAPTURE(id);
    for (std::uint64_t seed : {1, 2}) {
      const CliffordModuleData d = build_for(id, seed);
      CHECK(verify_clifford_relations(d).empty());
      CHECK(recover_form_from_squares(d) == d.Q);
      CHECK(form_nondegenerate(d.Q));
      const ModuleMultiplicity m = module_multiplicity(d);
      CHECK(m.p * m.multiplicity == d.dim_W);
      if (m.chirality == ModuleMultiplicity::Chirality::Resolved)
        CHECK(m.plus + m.minus == m.multiplicity);
    }
  }
}

TEST_CASE("severi16 realizes the minimal module once") {
  const CliffordModuleData d = build_for("severi16", 1);
  CHECK(d.dim_K == 7);
  CHECK(d.dim_W == 8);
  CHECK(d.Q.rows == 7);
  CHECK_FALSE(oracle::det_cofactor(d.Q).is_zero());
  const ModuleMultiplicity m = module_multiplicity(d);
  CHECK(m.l == 7);
  CHECK(m.p == 8);
  CHECK(m.multiplicity == 1);
}

TEST_CASE("a trivial kernel still yields a consistent module") {
  const CliffordModuleData d = build_for("veronese:3", 1);
  CHECK(d.dim_K == 0);
  CHECK(d.dim_W == 2);
  CHECK(d.action.empty());
  CHECK(d.Q.rows == 0);
  CHECK(verify_clifford_relations(d).empty());
  const ModuleMultiplicity m = module_multiplicity(d);
  CHECK(m.l == 0);
  CHECK(m.p == 1);
  CHECK(m.multiplicity == 2);
  CHECK(m.chirality == ModuleMultiplicity::Chirality::NotApplicable);
}

TEST_CASE("cone vertices sit in the radical of the structure form") {
  // Chart of the cone over the Veronese surface: the vertex direction t3
  // appears in no quadric, so II(e3, .) vanishes and Q degenerates to zero.
  const Chart cone =
      parse_chart_text("3 3\nt1\nt2\nt3\nt1^2\nt1*t2\nt2^2\n", "cone");
  const FundamentalForms f = second_fundamental_form(cone);
  SeededRng rng(5);
  const GenericTangent g = sample_generic_tangent(f, rng);
  const SecantReport rep = key_identity_check(f, g.v);
  REQUIRE(rep.delta == 2);
  REQUIRE(rep.key_identity_holds);
  const CliffordModuleData d = build_clifford_module(f, rep);
  CHECK(d.dim_K == 1);
  CHECK(d.dim_W == 1);
  CHECK(d.Q == from_longs({{0}}));
  CHECK(!form_nondegenerate(d.Q));
  CHECK(verify_clifford_relations(d).empty());

  const ModuleMultiplicity m = module_multiplicity(d);
  CHECK(m.l == 1);
  CHECK(m.rank == 0);
  CHECK(m.p == 1);
  CHECK(m.multiplicity == 1);
  CHECK(m.chirality == ModuleMultiplicity::Chirality::NotApplicable);
}

TEST_CASE("a cone counts modules over the reduced form of its base") {
  // Cone over the product of planes: one extra parameter, no new quadrics.
  // The vertex adds a radical generator to K while the anisotropic part,
  // and with it p and the multiplicity, matches the base variety.
  const Chart cone = parse_chart_text(
      "5 4\nt1\nt2\nt3\nt4\nt5\nt1*t3\nt1*t4\nt2*t3\nt2*t4\n",
      "cone-over-segre");
  const FundamentalForms f = second_fundamental_form(cone);
  SeededRng rng(3);
  const GenericTangent g = sample_generic_tangent(f, rng);
  const SecantReport rep = key_identity_check(f, g.v);
  REQUIRE(rep.delta == 3);
  REQUIRE(rep.key_identity_holds);
  const CliffordModuleData d = build_clifford_module(f, rep);
  CHECK(d.dim_K == 2);
  CHECK(d.dim_W == 2);
  CHECK(rank(d.Q) == 1);
  CHECK(!form_nondegenerate(d.Q));
  CHECK(verify_clifford_relations(d).empty());

  const ModuleMultiplicity m = module_multiplicity(d);
  CHECK(m.l == 2);
  CHECK(m.rank == 1);
  CHECK(m.p == 1);
  CHECK(m.multiplicity == 2);
  CHECK(m.chirality != ModuleMultiplicity::Chirality::NotApplicable);
  if (m.chirality == ModuleMultiplicity::Chirality::Resolved)
    CHECK(m.plus + m.minus == m.multiplicity);
}

TEST_CASE("the structure form does not depend on the complement") {
  FundamentalForms f;
  SecantReport rep;
  const CliffordModuleData base = build_for("grassmann:2,6", 1, &f, &rep);

  SeededRng rng(21);
  for (int trial = 0; trial < 4; ++trial) {
    // shear every complement vector by something from <v, K>
    std::vector<Vec> sheared;
    for (const Vec& u : base.U_basis) {
      Vec shift(f.n, Scalar(0));
      for (const Vec& s : rep.span_v_ker.basis_rows())
        shift = vec_add(shift, vec_scale(Scalar(rng.int_in(-3, 3)), s));
      sheared.push_back(vec_add(u, shift));
    }
    const Subspace override_u = Subspace::span(sheared, f.n);
    REQUIRE(override_u.dim() == base.dim_W);
    const CliffordModuleData alt = build_clifford_module(f, rep, override_u);
    CHECK(verify_clifford_relations(alt).empty());
    CHECK(alt.Q == base.Q);
    const ModuleMultiplicity ma = module_multiplicity(alt),
                             mb = module_multiplicity(base);
    CHECK(ma.multiplicity == mb.multiplicity);
    CHECK(ma.chirality == mb.chirality);
  }
}

TEST_CASE("complement overrides are validated") {
  FundamentalForms f;
  SecantReport rep;
  const CliffordModuleData base = build_for("grassmann:2,6", 1, &f, &rep);

  CHECK_THROWS_AS(
      build_clifford_module(f, rep, Subspace::span(base.K_basis, f.n)),
      invariant_violation);

  std::vector<Vec> overlapping = base.U_basis;
  overlapping[0] = rep.v;  // same dimension, but meets <v, K>
  CHECK_THROWS_AS(
      build_clifford_module(f, rep, Subspace::span(overlapping, f.n)),
      invariant_violation);
}

TEST_CASE("rescaling the direction rescales action and form exactly") {
  FundamentalForms f;
  SecantReport rep;
  const CliffordModuleData base = build_for("segre:2x3", 1, &f, &rep);
  for (long lam : {2L, -3L}) {
    const Scalar lambda(lam);
    const SecantReport scaled_rep = key_identity_check(f, vec_scale(lambda, rep.v));
    const CliffordModuleData scaled = build_clifford_module(f, scaled_rep);
    CHECK(scaled.K_basis == base.K_basis);
    CHECK(scaled.U_basis == base.U_basis);
    Scalar inv(1);
    inv /= lambda;
    for (std::size_t i = 0; i < base.dim_K; ++i)
      CHECK(scaled.action[i] == scale(inv, base.action[i]));
    CHECK(scaled.Q == scale(inv * inv, base.Q));
  }
}

TEST_CASE("hypothesis gates fire in order") {
  const FundamentalForms f = second_fundamental_form(chart_for_id("segre:1x2"));
  SeededRng rng(1);
  const GenericTangent g = sample_generic_tangent(f, rng);
  const SecantReport rep = key_identity_check(f, g.v);
  REQUIRE(rep.secant_fills);
  try {
    build_clifford_module(f, rep);
    FAIL("expected a rejection");
  } catch (const hypothesis_reject& e) {
    CHECK(e.code() == RejectCode::SecantFills);
  }

  // an admissible report with the identity artificially broken trips the
  // second gate
  FundamentalForms fg;
  SecantReport good;
  build_for("segre:2x2", 1, &fg, &good);
  SecantReport broken = good;
  broken.key_identity_holds = false;
  try {
    build_clifford_module(fg, broken);
    FAIL("expected a rejection");
  } catch (const hypothesis_reject& e) {
    CHECK(e.code() == RejectCode::NotLqel);
  }
}

TEST_CASE("gamma matrices anticommute and square to minus one") {
  const GammaRep two = gamma_construction(2);
  CHECK(two.gammas[0] == from_longs({{0, 1}, {-1, 0}}));
  Matrix g2(2, 2);
  g2.at(0, 1) = Scalar::i();
  g2.at(1, 0) = Scalar::i();
  CHECK(two.gammas[1] == g2);

  const std::size_t want[] = {1, 1, 2, 2, 4, 4, 8, 8, 16, 16};
  for (std::size_t l = 0; l <= 9; ++l) {
    CAPTURE(l);
    const GammaRep rep = gamma_construction(l);
    CHECK(rep.p == want[l]);
    CHECK(minimal_module_dim(l) == want[l]);
    REQUIRE(rep.gammas.size() == l);
    const Matrix neg = scale(Scalar(-1), Matrix::identity(rep.p));
    for (std::size_t i = 0; i < l; ++i) {
      CHECK(rep.gammas[i] * rep.gammas[i] == neg);
      for (std::size_t j = i + 1; j < l; ++j)
        CHECK((rep.gammas[i] * rep.gammas[j] + rep.gammas[j] * rep.gammas[i])
                  .is_zero());
    }
  }
}

TEST_CASE("divisibility and the dimension bound") {
  CHECK(divisibility_check(16, 8));
  CHECK(divisibility_check(8, 4));
  CHECK(divisibility_check(10, 4));
  CHECK(divisibility_check(5, 1));
  CHECK_FALSE(divisibility_check(9, 4));
  CHECK_FALSE(divisibility_check(16, 9));
  CHECK_THROWS_AS(divisibility_check(4, 0), input_error);
  CHECK_THROWS_AS(divisibility_check(4, 5), input_error);

  CHECK(delta_bound_check(16, 12));  // vacuous below 17
  CHECK(delta_bound_check(17, 8));
  CHECK_FALSE(delta_bound_check(18, 9));
  CHECK(delta_bound_check(19, 9));
}
