// The integral cohomology ring of X(A, b) as a computable graded quotient
// Z[x_1..x_n, x] / I(A, b), with exact per-degree normal forms.
//
// Grading convention: generators have polynomial degree 1 (cohomological
// degree 2); the piece of polynomial degree k is H^{2k}.  Monomials are
// exponent vectors over the variables x_1, ..., x_n (indices 0..n-1) and,
// for pair rings, x (index n).

#pragma once

#include "vcfan/classify.hpp"
#include "vcfan/exact.hpp"
#include "vcfan/fans.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vcfan {

using Monomial = std::vector<int>;           // exponent vector
using Poly = std::map<Monomial, Int>;        // sparse polynomial

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Int& c);
// substitute variable i by the linear form given by column i of phi
Poly poly_substitute(const Poly& p, const IntMatrix& phi);
int poly_degree(const Poly& p);  // -1 for the zero polynomial

struct SparseRow {
  // (column, value) pairs sorted by column, values nonzero
  std::vector<std::pair<int, Int>> entries;
};

// One graded piece: monomial list, the row-echelon form of the degree-k slice
// of the relation lattice, the elementary divisors of that slice, and the
// integer normal-form map onto a chosen monomial basis.
class GradedPiece {
public:
  int degree = 0;
  std::vector<Monomial> monomials;           // fixed order
  std::map<Monomial, int> monomial_index;
  std::vector<Int> divisors;                 // SNF diagonal of the relation slice
  int rank = 0;                              // rank of the relation slice
  std::vector<int> basis;                    // monomial indices forming a basis
  bool torsion_free = true;

  int quotient_rank() const { return int(monomials.size()) - rank; }
  const Monomial& basis_monomial(int i) const { return monomials[basis[i]]; }

  // Normal form: coordinates of a degree-k polynomial over the basis.
  IntVector coords(const Poly& p) const;

  // internal reduction data: unit-pivot rows reduce any vector onto the
  // residual columns; when the echelon had non-unit pivots, a small Smith
  // transform on those residual columns finishes the job
  std::map<int, SparseRow> pivot_rows;       // unit pivot column -> row
  std::vector<int> residual_columns;         // non-unit-pivot + free columns
  std::map<int, int> residual_position;
  int residual_rank = 0;                     // rank of the small Smith block
  std::optional<IntMatrix> residual_v;       // square transform on residuals
  // change of basis from residual coordinates to the chosen basis
  RationalMatrix basis_from_free;            // inverse of basis matrix, integral

  IntVector reduce_to_free(const Poly& p) const;
};

class GradedRing {
public:
  int nvars = 0;        // degree-2 generators: n+1 for pair rings, n for Bott rings
  int top_degree = 0;   // n
  bool has_x = false;   // last variable is the exceptional class x
  std::vector<Poly> relations;
  std::optional<VcPair> source_pair;

  std::vector<std::string> generator_labels() const;
  const GradedPiece& piece(int k) const;
  std::vector<Int> betti() const;            // ranks of H^0, H^2, ..., H^{2n}
  bool torsion_free() const;

  std::vector<GradedPiece> pieces;           // built eagerly, degrees 0..top
};

// An element of a single graded piece, stored over that piece's basis.
struct RingElement {
  int degree;
  IntVector coords;

  bool is_zero() const {
    for (const Int& c : coords)
      if (c != 0) return false;
    return true;
  }
};

// Ring presentation of H^*(X(A, b)): generators x_1..x_n, x; relations
// x_i L_i, x L_i (L_i = sum_j a_ij x_j + b_i x) and the monomial x_1...x_n.
GradedRing presentation_from_pair(const VcPair& p);

// H^*(X(A)) for a unipotent lower triangular A: relations x_i(x_i + sum_{j<i} a_ij x_j).
GradedRing bott_presentation(const IntMatrix& a_bott);

// Full Danilov-Jurkiewicz presentation on all 2n+1 divisor classes; used as an
// internal cross-check of the eliminated presentation.
GradedRing stanley_reisner_presentation(const VcPair& p);

const GradedPiece& graded_piece(const GradedRing& r, int k);

RingElement element_from_poly(const GradedRing& r, const Poly& p);
Poly poly_from_element(const GradedRing& r, const RingElement& e);

RingElement multiply(const GradedRing& r, const RingElement& u, const RingElement& v);

// Coefficient of x^n against the basis generator of the rank-1 top piece.
Int top_power_x(const GradedRing& r);

// Rank of {w in H^2 : z w = 0} for a degree-1 element z.
int ann_rank(const GradedRing& r, const RingElement& z);

// The primitive degree-1 class with annihilator of rank n (unique up to sign
// for n >= 3); found by exact linear algebra on the multiplication maps.
RingElement find_x_class(const GradedRing& r);

// |det A| recovered from the ring: the (n-1)-th root of |top coefficient of
// z^n| for z = find_x_class(r).
Int ring_det_invariant(const GradedRing& r);

// Does the degree-1 generator substitution phi (columns = images) send every
// relation generator of src into the zero class of dst?
bool check_substitution_iso(const IntMatrix& phi, const GradedRing& src, const GradedRing& dst);

// The substitution x_i -> x_i + c_i x, x -> x realizing the Type 0 ring
// isomorphism H(A, b') -> H(A, b); requires the mod-n congruence of
// sum (n-i) b_i between the two vectors.
IntMatrix type0_iso_map(const IntVector& b, const IntVector& b_prime);

// The window substitution of the Type 2 isomorphism: x_k -> -(x_k + x) for
// i <= k <= j-1 (1-based window in the sign sequence), identity elsewhere.
IntMatrix type2_window_map(int n, int i, int j);

// Existence of a nonzero degree-2 class with vanishing square in H^*/(x);
// returns a witness over x_1..x_n when one exists.
std::optional<IntVector> isotropic_mod_x(const GradedRing& r);

}  // namespace vcfan
