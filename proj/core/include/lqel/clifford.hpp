#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lqel/linalg.hpp"
#include "lqel/matrix.hpp"
#include "lqel/secant.hpp"
#include "lqel/sff.hpp"

namespace lqel {

// The Clifford action of K = ker II_v on W (a complement of <v, K>),
// together with the quadratic form making the anticommutators scalar:
//   C_w C_w' + C_w' C_w + 2 Q(w, w') Id = 0.
struct CliffordModuleData {
  std::size_t n{0};
  std::size_t dim_K{0};  // delta - 1
  std::size_t dim_W{0};  // n - delta
  Vec v;
  std::vector<Vec> K_basis;      // tangent coordinates
  std::vector<Vec> U_basis;      // tangent coordinates
  Vec f0;                        // II(v, v), normal coordinates
  std::vector<Matrix> action;    // dim_K matrices, dim_W x dim_W
  Matrix Q;                      // dim_K x dim_K, symmetric
};

// Rejects with hypothesis_reject when the secant variety fills or the key
// identity fails; throws exactness_breach when a decomposition that the
// commuting diagram forces does not exist (retry with a fresh sample).
// complement_override, when given, must be a complement of <v, K>; used
// to probe complement independence.
CliffordModuleData build_clifford_module(
    const FundamentalForms& f, const SecantReport& rep,
    const std::optional<Subspace>& complement_override = std::nullopt);

struct RelationResidual {
  std::size_t w1{0}, w2{0}, row{0}, col{0};
  Scalar value;
};

// Every nonzero entry of C_a C_b + C_b C_a + 2 Q(a,b) Id over all pairs
// a <= b. Empty means the Clifford relations hold exactly.
std::vector<RelationResidual> verify_clifford_relations(
    const CliffordModuleData& d);

// Reconstruct Q from the scalar squares of the action by polarization;
// must equal d.Q entrywise. Throws invariant_violation when a square is
// not a scalar matrix.
Matrix recover_form_from_squares(const CliffordModuleData& d);

bool form_nondegenerate(const Matrix& q);

// l pairwise anticommuting p x p matrices squaring to -Id, p = 2^floor(l/2),
// built from the Pauli tensor construction.
struct GammaRep {
  std::size_t l{0}, p{1};
  std::vector<Matrix> gammas;
};
GammaRep gamma_construction(std::size_t l);

std::size_t minimal_module_dim(std::size_t l);

// 2^floor((delta-1)/2) divides n - delta.
bool divisibility_check(std::size_t n, std::size_t delta);

// n >= 17 implies delta <= floor((n-1)/2); vacuously true below 17.
bool delta_bound_check(std::size_t n, std::size_t delta);

struct ModuleMultiplicity {
  std::size_t l{0}, p{1};
  std::size_t rank{0};          // rank of Q; equals l iff Q is nondegenerate
  std::size_t multiplicity{0};  // dim W / p
  enum class Chirality { NotApplicable, Resolved, Unresolved };
  Chirality chirality{Chirality::NotApplicable};
  std::size_t plus{0}, minus{0};  // resolved split, plus + minus = multiplicity
};

// How many copies of the minimal module sit in W.  Degenerate forms (cones)
// are reduced first: the count is taken over the Clifford algebra of the
// induced form on K/rad(Q), so p = 2^floor(rank/2).  For an odd number of
// anisotropic generators the chirality split is resolved via the volume
// element of a Q-orthogonal basis when the needed square root exists in Q(i).
ModuleMultiplicity module_multiplicity(const CliffordModuleData& d);

}  // namespace lqel
