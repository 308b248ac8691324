// The two fixed combinatorial objects: the Bott complex B_n (boundary complex
// of the simplicial polytope dual to the n-cube) and the vertex-cut complex
// C_n (dual to the n-cube with one vertex cut).
//
// Vertex labels are 1-based and follow the fixed convention: 1..n is the
// distinguished facet, n+i is the vertex opposite to i, and 2n+1 (for C_n) is
// the vertex coming from the cut.

#pragma once

#include "vcfan/exact.hpp"

#include <set>
#include <vector>

namespace vcfan {

using VertexSet = std::set<int>;

class SimplicialComplex {
public:
  SimplicialComplex(int vertex_count, std::vector<VertexSet> minimal_nonfaces);

  int vertex_count() const { return m_; }
  const std::vector<VertexSet>& minimal_nonfaces() const { return minimal_nonfaces_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  bool is_face(const VertexSet& s) const;   // avoids every minimal non-face
  bool is_facet(const VertexSet& s) const;
  bool pure() const;                        // all facets of equal size
  int dimension() const;                    // max facet size - 1

  // Number of faces with k vertices (f_{k-1}); k = 0 counts the empty face.
  std::vector<Int> f_vector() const;
  // h-vector of a pure (d-1)-dimensional complex, h_0..h_d.
  std::vector<Int> h_vector() const;

  bool operator==(const SimplicialComplex& other) const;

private:
  int m_;
  std::vector<VertexSet> minimal_nonfaces_;
  std::vector<VertexSet> facets_;
};

// C_n: 2n+1 vertices, minimal non-faces {i,n+i}, {i,2n+1} (i=1..n) and
// {n+1,...,2n}; has 2^n - 1 + n facets.  Requires n >= 2.
SimplicialComplex vc_complex(int n);

// B_n: 2n vertices, minimal non-faces {i,n+i}; 2^n facets.  Requires n >= 1.
SimplicialComplex bott_complex(int n);

struct RidgeRecord {
  VertexSet ridge;
  std::vector<VertexSet> facets;  // facets containing the ridge
};

// Every (n-1)-vertex face of a pure complex together with the facets that
// contain it.  Throws on non-pure input.
std::vector<RidgeRecord> ridges_and_adjacency(const SimplicialComplex& k);

// Vertex map on C_n induced by a permutation sigma of [n]:
// i -> sigma(i), n+i -> n+sigma(i), 2n+1 fixed.
Permutation vc_vertex_map(int n, const Permutation& sigma);

// Generators of Aut(C_n) for n >= 3 (transposition (1 2) and the n-cycle,
// both lifted to vertex maps).  For n = 3, 4 the claim that these generate
// the full automorphism group is checked exhaustively, once.
std::vector<Permutation> vc_automorphisms(int n);

// All 2n+1-vertex maps induced by permutations of [n] (the full Aut(C_n) for
// n >= 3); refuses n < 3.
std::vector<Permutation> vc_automorphism_group(int n);

}  // namespace vcfan
