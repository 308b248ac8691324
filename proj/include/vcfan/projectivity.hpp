// Projectivity decisions: existence of a strictly convex piecewise linear
// support function, decided by exact rational linear programming.
//
// Strictness is encoded with margin 1: the constraint system is homogeneous
// in psi, so strict feasibility is equivalent to feasibility of
// psi_sigma(v_i) - psi(v_i) >= 1 over all (facet, missing ray) pairs.

#pragma once

#include "vcfan/classify.hpp"
#include "vcfan/exact.hpp"
#include "vcfan/fans.hpp"

#include <optional>
#include <variant>

namespace vcfan {

struct SupportFunction {
  RatVector values;  // psi(v_i) per ray, 1-based vertex i at index i-1
};

struct LPConstraint {
  IntVector coeffs;  // over the m ray variables
  // constraint: coeffs . psi >= 1
  VertexSet facet;
  int missing_ray;
};

struct StrictLPSystem {
  int num_vars = 0;
  std::vector<LPConstraint> constraints;
};

struct LPFeasible {
  RatVector witness;
};
struct LPInfeasible {
  RatVector farkas;  // y >= 0 with y^T A = 0 and sum y > 0
};
using LPResult = std::variant<LPFeasible, LPInfeasible>;

bool lp_is_feasible(const LPResult& r);

// One constraint per (facet, ray outside the facet) pair; coefficients come
// from the exact inverse of the facet's generator matrix.
StrictLPSystem build_lp(const Fan& f);

// Exact rational phase-1 simplex with Bland's rule.  Witnesses are
// re-verified against every constraint; infeasibility returns a Farkas
// certificate, verified exactly as well.
LPResult lp_feasible(const StrictLPSystem& sys);

// Fourier-Motzkin elimination as an independent second opinion (intended for
// n <= 3 scale systems; guarded by a row-count cap).
bool fourier_motzkin_feasible(const StrictLPSystem& sys);

// LP decision cross-checked against the closed-form rule: non-projective iff
// Type 2 with at least three +1 entries.  Disagreement throws.
bool is_projective(const VcPair& p);

// Support function of Prop 7.4 for Type 0: psi(-e_i) = psi(a_i) = -1 and
// psi(b) = -n(n-1)/2 * max|b_i|.
SupportFunction psi_type0(const VcPair& p);

// Support function of Prop 7.4 for the Type 3 normal form (a != 0, -1;
// a = 1 covers the projective Type 2 class): psi(-e_i) = psi(a_i) = -1
// (i < n), psi(a_n) = -n|a|, psi(b) = -(n-1).
SupportFunction psi_type3(const VcPair& p);

// Recompute every facet's linear function and check all strict inequalities.
bool verify_psi(const Fan& f, const SupportFunction& psi);

}  // namespace vcfan
