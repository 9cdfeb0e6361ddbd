#include "lqel/clifford.hpp"

#include <cassert>

#include "lqel/errors.hpp"

namespace lqel {

CliffordModuleData build_clifford_module(
    const FundamentalForms& f, const SecantReport& rep,
    const std::optional<Subspace>& complement_override) {
  if (rep.secant_fills) throw hypothesis_reject(RejectCode::SecantFills);
  if (!rep.key_identity_holds) throw hypothesis_reject(RejectCode::NotLqel);

  CliffordModuleData d;
  d.n = f.n;
  d.dim_K = rep.delta - 1;
  d.dim_W = f.n - rep.delta;
  d.v = rep.v;
  d.K_basis = rep.ker_iiv.basis_rows();

  Subspace u;
  if (complement_override) {
    u = *complement_override;
    if (u.ambient != f.n || u.dim() != d.dim_W ||
        subspace_sum(u, rep.span_v_ker).dim() != f.n)
      throw invariant_violation(
          "complement override is not a complement of <v, ker II_v>");
  } else {
    u = subspace_complement(rep.span_v_ker);
  }
  d.U_basis = u.basis_rows();

  d.f0 = sff_apply(f, rep.v, rep.v);
  if (vec_is_zero(d.f0))
    throw invariant_violation("II(v,v) vanished on an admissible sample");

  // Basis of II_v(T): f0 followed by the images of the complement
  // directions. II_v restricted to <v> + U must map onto II_v(T)
  // isomorphically.
  std::vector<Vec> image_basis;
  image_basis.push_back(d.f0);
  for (const Vec& uj : d.U_basis) image_basis.push_back(sff_apply(f, rep.v, uj));
  if (Subspace::span(image_basis, f.a).dim() != image_basis.size())
    throw exactness_breach(
        "II_v does not restrict to an isomorphism on <v> + U");

  d.action.assign(d.dim_K, Matrix(d.dim_W, d.dim_W));
  for (std::size_t w = 0; w < d.dim_K; ++w)
    for (std::size_t j = 0; j < d.dim_W; ++j) {
      const Vec rhs = sff_apply(f, d.K_basis[w], d.U_basis[j]);
      const auto coords = coords_in_basis(image_basis, rhs);
      if (!coords)
        throw exactness_breach("II(w, u) escaped II_v(T) for w in ker II_v");
      for (std::size_t i = 0; i < d.dim_W; ++i)
        d.action[w].at(i, j) = (*coords)[i + 1];
    }

  d.Q = Matrix(d.dim_K, d.dim_K);
  for (std::size_t x = 0; x < d.dim_K; ++x)
    for (std::size_t y = x; y < d.dim_K; ++y) {
      const Vec rhs = sff_apply(f, d.K_basis[x], d.K_basis[y]);
      const auto coords = coords_in_basis(image_basis, rhs);
      if (!coords)
        throw exactness_breach("II(w, w') escaped II_v(T) on ker II_v");
      d.Q.at(x, y) = (*coords)[0];
      d.Q.at(y, x) = (*coords)[0];
    }
  return d;
}

std::vector<RelationResidual> verify_clifford_relations(
    const CliffordModuleData& d) {
  std::vector<RelationResidual> out;
  for (std::size_t x = 0; x < d.dim_K; ++x)
    for (std::size_t y = x; y < d.dim_K; ++y) {
      Matrix r = d.action[x] * d.action[y] + d.action[y] * d.action[x];
      const Scalar two_q = Scalar(2) * d.Q.at(x, y);
      for (std::size_t k = 0; k < d.dim_W; ++k) r.at(k, k) += two_q;
      for (std::size_t i = 0; i < d.dim_W; ++i)
        for (std::size_t j = 0; j < d.dim_W; ++j)
          if (!r.at(i, j).is_zero())
            out.push_back({x, y, i, j, r.at(i, j)});
    }
  return out;
}

Matrix recover_form_from_squares(const CliffordModuleData& d) {
  Matrix q(d.dim_K, d.dim_K);
  auto scalar_of_square = [&](const Matrix& c) {
    const auto s = (c * c).as_scalar_multiple_of_identity();
    if (!s)
      throw invariant_violation(
          "square of a Clifford action matrix is not scalar");
    return *s;
  };
  for (std::size_t x = 0; x < d.dim_K; ++x)
    q.at(x, x) = -scalar_of_square(d.action[x]);
  for (std::size_t x = 0; x < d.dim_K; ++x)
    for (std::size_t y = x + 1; y < d.dim_K; ++y) {
      const Scalar sum = -scalar_of_square(d.action[x] + d.action[y]);
      const Scalar off = (sum - q.at(x, x) - q.at(y, y)) / Scalar(2);
      q.at(x, y) = off;
      q.at(y, x) = off;
    }
  return q;
}

bool form_nondegenerate(const Matrix& q) {
  assert(q.rows == q.cols);
  return !determinant(q).is_zero();
}

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows; ++k)
        for (std::size_t l = 0; l < b.cols; ++l)
          m.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
    }
  return m;
}

}  // namespace

GammaRep gamma_construction(std::size_t l) {
  const std::size_t half = l / 2;
  GammaRep rep;
  rep.l = l;
  rep.p = std::size_t{1} << half;

  Matrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1.at(0, 1) = Scalar(1);
  s1.at(1, 0) = Scalar(1);
  s2.at(0, 1) = -Scalar::i();
  s2.at(1, 0) = Scalar::i();
  s3.at(0, 0) = Scalar(1);
  s3.at(1, 1) = Scalar(-1);
  const Matrix id2 = Matrix::identity(2);

  // Factor slot k (0-based) of the tensor product of `half` 2x2 blocks.
  auto build = [&](std::size_t slot, const Matrix& mid) {
    Matrix m = Matrix::identity(1);
    for (std::size_t k = 0; k < half; ++k)
      m = kron(m, k < slot ? s3 : (k == slot ? mid : id2));
    return m;
  };

  for (std::size_t k = 0; k < half; ++k) {
    rep.gammas.push_back(scale(Scalar::i(), build(k, s2)));
    rep.gammas.push_back(scale(Scalar::i(), build(k, s1)));
  }
  if (l % 2 == 1) {
    Matrix m = Matrix::identity(1);
    for (std::size_t k = 0; k < half; ++k) m = kron(m, s3);
    rep.gammas.push_back(scale(Scalar::i(), m));
  }
  assert(rep.gammas.size() == l);
  return rep;
}

std::size_t minimal_module_dim(std::size_t l) {
  return std::size_t{1} << (l / 2);
}

bool divisibility_check(std::size_t n, std::size_t delta) {
  if (delta < 1 || delta > n)
    throw input_error("divisibility check needs 1 <= delta <= n");
  const std::size_t modulus = std::size_t{1} << ((delta - 1) / 2);
  return (n - delta) % modulus == 0;
}

bool delta_bound_check(std::size_t n, std::size_t delta) {
  if (n < 17) return true;
  return delta <= (n - 1) / 2;
}

namespace {

Scalar pair_q(const Matrix& q, const Vec& x, const Vec& y) {
  return dot(x, mat_vec(q, y));
}

// Q-orthogonal anisotropic basis of a complement of the radical, by pivoted
// symmetric Gram-Schmidt.  Once no residual direction (or pairwise sum) is
// anisotropic, the form vanishes identically on the residual subspace, which
// is then Q-orthogonal to everything picked so far -- i.e. it is the radical.
// The returned set has size rank(q); for nondegenerate q it is a full basis.
std::vector<Vec> orthogonal_basis(const Matrix& q) {
  const std::size_t l = q.rows;
  std::vector<Vec> remaining;
  for (std::size_t k = 0; k < l; ++k) {
    Vec e(l, Scalar(0));
    e[k] = Scalar(1);
    remaining.push_back(std::move(e));
  }
  std::vector<Vec> out;
  while (!remaining.empty()) {
    std::optional<Vec> pick;
    for (const Vec& c : remaining)
      if (!pair_q(q, c, c).is_zero()) {
        pick = c;
        break;
      }
    if (!pick) {
      for (std::size_t i = 0; i < remaining.size() && !pick; ++i)
        for (std::size_t j = i + 1; j < remaining.size() && !pick; ++j) {
          Vec s = vec_add(remaining[i], remaining[j]);
          if (!pair_q(q, s, s).is_zero()) pick = std::move(s);
        }
    }
    if (!pick) break;
    const Scalar norm = pair_q(q, *pick, *pick);
    std::vector<Vec> projected;
    for (const Vec& c : remaining) {
      Vec r = vec_sub(c, vec_scale(pair_q(q, c, *pick) / norm, *pick));
      if (!vec_is_zero(r)) projected.push_back(std::move(r));
    }
    out.push_back(std::move(*pick));
    remaining = Subspace::span(projected, l).basis_rows();
  }
  if (out.size() != rank(q))
    throw invariant_violation("orthogonal basis: dimension drop");
  return out;
}

}  // namespace

ModuleMultiplicity module_multiplicity(const CliffordModuleData& d) {
  ModuleMultiplicity m;
  m.l = d.dim_K;

  // Generators along the radical of Q anticommute with everything and square
  // to zero, so W restricts to a module over the Clifford algebra of the
  // induced nondegenerate form on K/rad(Q).  The multiplicity count lives
  // there; for nondegenerate Q the reduction is the identity.
  const std::vector<Vec> basis = orthogonal_basis(d.Q);
  m.rank = basis.size();
  m.p = minimal_module_dim(m.rank);
  if (d.dim_W % m.p != 0)
    throw invariant_violation(
        "divisibility breach: minimal module dimension does not divide dim W");
  m.multiplicity = d.dim_W / m.p;
  if (m.rank == 0 || m.rank % 2 == 0) {
    m.chirality = ModuleMultiplicity::Chirality::NotApplicable;
    return m;
  }

  // Odd number of anisotropic generators: the volume element of the
  // Q-orthogonal basis acts as +/- mu on the two irreducible types; its
  // trace resolves the split when mu exists in Q(i).
  Matrix omega = Matrix::identity(d.dim_W);
  for (const Vec& x : basis) {
    Matrix cx(d.dim_W, d.dim_W);
    for (std::size_t k = 0; k < d.dim_K; ++k) {
      if (x[k].is_zero()) continue;
      cx = cx + scale(x[k], d.action[k]);
    }
    omega = omega * cx;
  }
  const auto mu2 = (omega * omega).as_scalar_multiple_of_identity();
  if (!mu2)
    throw invariant_violation("volume element's square is not scalar");
  Scalar mu;
  if (!sqrt_in_qi(*mu2, mu) || mu.is_zero()) {
    m.chirality = ModuleMultiplicity::Chirality::Unresolved;
    return m;
  }
  const Scalar t = omega.trace() / (mu * Scalar(static_cast<long>(m.p)));
  // t = plus - minus with plus + minus = multiplicity.
  if (!t.is_real() || t.re.get_den() != 1)
    throw invariant_violation("volume trace is not an integer multiple");
  const long diff = static_cast<long>(t.re.get_num().get_si());
  const long sum = static_cast<long>(m.multiplicity);
  if ((sum + diff) % 2 != 0 || sum + diff < 0 || sum - diff < 0)
    throw invariant_violation("chirality split is not a valid partition");
  m.chirality = ModuleMultiplicity::Chirality::Resolved;
  m.plus = static_cast<std::size_t>((sum + diff) / 2);
  m.minus = static_cast<std::size_t>((sum - diff) / 2);
  return m;
}

}  // namespace lqel
