#include "lqel/varieties.hpp"

#include <cassert>

#include "lqel/errors.hpp"
#include "lqel/linalg.hpp"
#include "lqel/octonion.hpp"
#include "lqel/secant.hpp"
#include "lqel/sff.hpp"

namespace lqel {

namespace {

Poly::Exponents mono(std::size_t nvars) { return Poly::Exponents(nvars, 0); }

Poly monomial(std::size_t nvars, std::size_t i, std::size_t j,
              const Scalar& c) {
  Poly p(nvars);
  auto e = mono(nvars);
  e[i] += 1;
  e[j] += 1;
  p.add_term(e, c);
  return p;
}

}  // namespace

Chart veronese_chart(std::size_t n) {
  if (n < 2) throw input_error("veronese chart needs n >= 2");
  Chart c;
  c.label = "veronese:" + std::to_string(n);
  c.param_dim = n;
  for (std::size_t i = 0; i < n; ++i)
    c.coords.push_back(Poly::variable(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      c.coords.push_back(monomial(n, i, j, Scalar(1)));
  return c;
}

Chart segre_chart(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1 || m + n < 3)
    throw input_error("segre chart needs m, n >= 1 and m + n >= 3");
  const std::size_t nv = m + n;
  Chart c;
  c.label = "segre:" + std::to_string(m) + "x" + std::to_string(n);
  c.param_dim = nv;
  for (std::size_t i = 0; i < nv; ++i)
    c.coords.push_back(Poly::variable(nv, i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c.coords.push_back(monomial(nv, i, m + j, Scalar(1)));
  return c;
}

Chart grassmann_chart(std::size_t n) {
  if (n < 5) throw input_error("grassmann chart needs n >= 5");
  const std::size_t cols = n - 2;
  const std::size_t nv = 2 * cols;
  auto var = [&](std::size_t r, std::size_t j) { return r * cols + j; };
  Chart c;
  c.label = "grassmann:2," + std::to_string(n);
  c.param_dim = nv;
  for (std::size_t i = 0; i < nv; ++i)
    c.coords.push_back(Poly::variable(nv, i));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t k = j + 1; k < cols; ++k) {
      Poly p = monomial(nv, var(0, j), var(1, k), Scalar(1));
      p += monomial(nv, var(0, k), var(1, j), Scalar(-1));
      c.coords.push_back(std::move(p));
    }
  return c;
}

Chart severi16_chart() {
  const std::size_t nv = 16;  // u0..u7, v0..v7
  Chart c;
  c.label = "severi16";
  c.param_dim = nv;
  for (std::size_t i = 0; i < nv; ++i)
    c.coords.push_back(Poly::variable(nv, i));
  Poly nu(nv), nvq(nv);
  for (std::size_t i = 0; i < 8; ++i) {
    nu += monomial(nv, i, i, Scalar(1));
    nvq += monomial(nv, 8 + i, 8 + i, Scalar(1));
  }
  c.coords.push_back(std::move(nu));
  c.coords.push_back(std::move(nvq));
  // conj(u) * v expanded over the basis multiplication table.
  std::vector<Poly> prod(8, Poly(nv));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const auto [sign, k] = octonion_basis_mul(i, j);
      Scalar coeff(sign);
      if (i >= 1) coeff = -coeff;  // conjugation flips the imaginary units
      prod[k] += monomial(nv, i, 8 + j, coeff);
    }
  for (auto& p : prod) c.coords.push_back(std::move(p));
  return c;
}

Chart project_chart(const Chart& c, const Vec& center) {
  const std::size_t ambient = c.ambient_affine_dim();
  if (center.size() != ambient)
    throw input_error("projection center has wrong dimension");
  if (vec_is_zero(center)) throw input_error("projection center is zero");
  const Subspace tangent = Subspace::row_space(tangent_rows_at_origin(c));
  if (tangent.contains(center))
    throw input_error(
        "projection center lies inside the tangent space at the base point");

  std::size_t drop = ambient;
  for (std::size_t k = ambient; k-- > 0;)
    if (!center[k].is_zero()) {
      drop = k;
      break;
    }
  const Scalar pivot = center[drop];

  Chart out;
  out.label = c.label + "/proj";
  out.param_dim = c.param_dim;
  for (std::size_t k = 0; k < ambient; ++k) {
    if (k == drop) continue;
    Poly p = c.coords[k];
    if (!center[k].is_zero())
      p -= c.coords[drop].scaled(center[k] / pivot);
    out.coords.push_back(std::move(p));
  }
  validate_chart(out);
  return out;
}

namespace {

// Shift the base point to the parameter point t*; coordinates stay
// polynomial and centered.
Chart recenter(const Chart& c, const Vec& at) {
  Chart out;
  out.label = c.label;
  out.param_dim = c.param_dim;
  for (const Poly& p : c.coords) {
    Poly q = p.shifted(at);
    Poly k = Poly::constant(c.param_dim, q.constant_term());
    out.coords.push_back(q - k);
  }
  return out;
}

std::size_t delta_of(const Chart& c, SeededRng& rng) {
  const FundamentalForms f = second_fundamental_form(c);
  const GenericTangent g = sample_generic_tangent(f, rng);
  return f.n - g.rank + 1;
}

}  // namespace

Chart project_chart_random(const Chart& c, SeededRng& rng) {
  const std::size_t source_delta = delta_of(c, rng);
  // A center class avoiding the image of II_v exists only while that
  // image (dimension n - delta + 1) is a proper subspace of the normal
  // space; at equality every projection drops the rank and changes delta.
  if (c.param_dim - source_delta + 1 >= c.normal_dim())
    throw input_error(
        "projection infeasible: rank II_v = " +
        std::to_string(c.param_dim - source_delta + 1) +
        " already fills the normal space of dimension " +
        std::to_string(c.normal_dim()) + ", so delta cannot be preserved");
  constexpr std::size_t kAttempts = 3;
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    // Move the base point off the special origin first: projections break
    // the homogeneity that made the origin as good as any point.
    Chart shifted;
    bool ok = false;
    for (std::size_t draw = 0; draw < 20 && !ok; ++draw) {
      const Vec at = rng.int_vector(c.param_dim, -3, 3);
      shifted = recenter(c, at);
      ok = rank(tangent_rows_at_origin(shifted)) == c.param_dim;
    }
    if (!ok)
      throw sampling_exhausted("projection: no immersive re-centering point");

    const Subspace tangent =
        Subspace::row_space(tangent_rows_at_origin(shifted));
    Vec center;
    bool have_center = false;
    for (std::size_t draw = 0; draw < 20 && !have_center; ++draw) {
      center = rng.int_vector(c.ambient_affine_dim(), -10, 10);
      have_center = !vec_is_zero(center) && !tangent.contains(center);
    }
    if (!have_center)
      throw sampling_exhausted("projection: no admissible center in 20 draws");

    Chart projected = project_chart(shifted, center);
    if (projected.param_dim == c.param_dim &&
        delta_of(projected, rng) == source_delta) {
      projected.label = c.label + "/proj";
      return projected;
    }
  }
  throw invariant_violation(
      "projection degenerate: (n, delta) failed to reproduce in 3 attempts");
}

const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> entries = {
      {"veronese:2", 2, 3, 1, false},
      {"veronese:3", 3, 6, 1, false},
      {"veronese:4", 4, 10, 1, false},
      {"segre:2x2", 4, 4, 2, false},
      {"segre:2x3", 5, 6, 2, false},
      {"grassmann:2,6", 8, 6, 4, false},
      {"grassmann:2,7", 10, 10, 4, false},
      {"severi16", 16, 10, 8, false},
      {"segre:1x2", 3, 2, 2, true},
      {"grassmann:2,5", 6, 3, 4, true},
  };
  return entries;
}

namespace {

bool parse_size(const std::string& s, std::size_t& out) {
  if (s.empty()) return false;
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1'000'000) return false;
  }
  out = v;
  return true;
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  out = v;
  return true;
}

struct ProjectedId {
  std::string source;
  std::uint64_t seed{0};
  std::size_t count{0};
};

std::optional<ProjectedId> parse_projected(const std::string& id) {
  constexpr const char* kPrefix = "projected:";
  if (id.rfind(kPrefix, 0) != 0) return std::nullopt;
  const std::string rest = id.substr(std::string(kPrefix).size());
  const auto last = rest.rfind(':');
  if (last == std::string::npos) return std::nullopt;
  const auto prev = rest.rfind(':', last == 0 ? 0 : last - 1);
  if (prev == std::string::npos) return std::nullopt;
  ProjectedId p;
  p.source = rest.substr(0, prev);
  if (!parse_u64(rest.substr(prev + 1, last - prev - 1), p.seed)) return std::nullopt;
  if (!parse_size(rest.substr(last + 1), p.count)) return std::nullopt;
  if (p.count == 0 || p.source.empty()) return std::nullopt;
  return p;
}

std::optional<Chart> family_chart(const std::string& id) {
  if (id == "severi16") return severi16_chart();
  if (id.rfind("veronese:", 0) == 0) {
    std::size_t n;
    if (!parse_size(id.substr(9), n) || n < 2)
      throw input_error("bad veronese id: '" + id + "'");
    return veronese_chart(n);
  }
  if (id.rfind("segre:", 0) == 0) {
    const std::string rest = id.substr(6);
    const auto x = rest.find('x');
    std::size_t m, n;
    if (x == std::string::npos || !parse_size(rest.substr(0, x), m) ||
        !parse_size(rest.substr(x + 1), n) || m < 1 || n < 1 || m + n < 3)
      throw input_error("bad segre id: '" + id + "'");
    return segre_chart(m, n);
  }
  if (id.rfind("grassmann:", 0) == 0) {
    const std::string rest = id.substr(10);
    if (rest.rfind("2,", 0) != 0)
      throw input_error("only grassmannians of 2-planes are supported: '" +
                        id + "'");
    std::size_t n;
    if (!parse_size(rest.substr(2), n) || n < 5)
      throw input_error("bad grassmann id: '" + id + "'");
    return grassmann_chart(n);
  }
  return std::nullopt;
}

}  // namespace

Chart chart_for_id(const std::string& id) {
  if (const auto proj = parse_projected(id)) {
    Chart c = chart_for_id(proj->source);
    SeededRng rng(proj->seed);
    for (std::size_t k = 0; k < proj->count; ++k)
      c = project_chart_random(c, rng);
    c.label = id;
    return c;
  }
  if (auto c = family_chart(id)) return *c;
  throw input_error("unknown catalog id: '" + id + "'");
}

std::optional<CatalogEntry> expectation_for_id(const std::string& id) {
  if (const auto proj = parse_projected(id)) {
    auto src = expectation_for_id(proj->source);
    if (!src) return std::nullopt;
    // Mirrors the feasibility gate of project_chart_random: each drop
    // needs strict room above rank II_v = n - delta + 1.
    if (src->n - src->delta + 1 + proj->count > src->a) return std::nullopt;
    CatalogEntry e = *src;
    e.id = id;
    e.a -= proj->count;
    const std::size_t dim_sec = 2 * e.n + 1 - e.delta;
    e.secant_fills = e.n + e.a <= dim_sec;
    return e;
  }
  Chart c;
  try {
    auto fc = family_chart(id);
    if (!fc) return std::nullopt;
    c = *fc;
  } catch (const input_error&) {
    return std::nullopt;
  }
  CatalogEntry e;
  e.id = id;
  e.n = c.param_dim;
  e.a = c.normal_dim();
  if (id == "severi16")
    e.delta = 8;
  else if (id.rfind("veronese:", 0) == 0)
    e.delta = 1;
  else if (id.rfind("segre:", 0) == 0)
    e.delta = 2;
  else
    e.delta = 4;
  const std::size_t dim_sec = 2 * e.n + 1 - e.delta;
  e.secant_fills = e.n + e.a <= dim_sec;
  return e;
}

}  // namespace lqel
