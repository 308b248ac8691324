// Fans as (simplicial complex, integer ray matrix) pairs, the (A, b) pair
// encoding of fans over the vertex-cut complex, and the fan-level operations:
// validity certification, blow-up of Bott fans, projection along a ray, and
// the isomorphism search.

#pragma once

#include "vcfan/complexes.hpp"
#include "vcfan/exact.hpp"

#include <optional>

namespace vcfan {

// Ray matrix has n rows and one column per vertex; column i-1 is v_i.
struct Fan {
  SimplicialComplex complex;
  IntMatrix rays;

  Fan(SimplicialComplex k, IntMatrix v);

  int dim() const { return rays.rows(); }
  IntVector ray(int vertex) const { return rays.column(vertex - 1); }  // 1-based vertex
  IntMatrix facet_matrix(const VertexSet& facet) const;                // columns in facet order
};

// The (A, b) data of a fan over C_n: v_{n+i} = -(v_1..v_n) a_i and
// v_{2n+1} = -(v_1..v_n) b.
struct VcPair {
  int n;
  IntMatrix a;
  IntVector b;

  bool operator==(const VcPair& other) const = default;
};

// Every facet's generator matrix has determinant +-1.  (Faces inherit this
// from facets, so checking facets suffices.)
bool is_nonsingular(const Fan& f);

// Wall-crossing convexity across every ridge plus one exact generic ray-shot
// landing in exactly one maximal cone.  Valid for fans over polytopal spheres
// such as B_n and C_n; throws on non-pure complexes.
bool is_complete(const Fan& f);

// Fan over vc_complex(n) with v_i = -e_i, v_{n+i} = a_i, v_{2n+1} = b.
Fan fan_from_pair(const VcPair& p);

// Solve (A, b) back out of a nonsingular complete fan over C_n using the
// basis v_1..v_n.  Throws if the complex is not C_n or the data is singular.
VcPair pair_from_fan(const Fan& f);

// Star subdivision of the Bott fan of a unipotent lower triangular matrix at
// the cone {n+1,...,2n}; the new ray is the sum of that cone's generators.
Fan blow_up_bott(const IntMatrix& a_bott);

// Bott fan of a unipotent lower triangular matrix (v_i = -e_i, v_{n+i} = a_i).
Fan bott_fan(const IntMatrix& a_bott);

// Remove the vertex 2n+1 from a fan over C_n, recovering a fan over B_n.
Fan remove_apex(const Fan& f);

// Project a Type 2 (or Type 3 normal form) pair along ray a_k (1-based k):
// the exact lattice quotient by <a_k>, verified against the closed formula
// (a_1, ..., a_{k-1}, -a_k * a_{k+1}, a_{k+2}, ..., a_n) with indices mod n.
VcPair project_along_ray(const VcPair& p, int k);

// Search over Aut(C_n) x GL_n(Z): fans over C_n are isomorphic iff some
// vertex map kappa and unimodular R align all rays.  Requires n >= 3.
bool fans_isomorphic(const Fan& f1, const Fan& f2);

}  // namespace vcfan
