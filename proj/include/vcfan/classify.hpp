// Classification of (A, b) pairs over the vertex-cut complex: validation,
// the four determinant types, canonical representatives, variety isomorphism,
// enumeration of the Type 2 necklace classes, and the integer matrix
// identities behind the smooth classification.

#pragma once

#include "vcfan/exact.hpp"
#include "vcfan/fans.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vcfan {

struct ValidationResult {
  bool ok;
  std::string message;  // which condition failed, empty when ok
};

struct TypeTag {
  int type_index;  // 0, 1, 2, 3
  Int det;
  // canonical representative of the variety-isomorphism class (n >= 3):
  // Type 0: lex-minimal cyclic rotation of b; Type 1: lex-minimal conjugate
  // that stays unipotent lower triangular; Type 2: lex-minimal rotation of
  // the sign sequence; Type 3: the pair itself.
  IntMatrix canonical_a;
  IntVector canonical_b;
};

struct ClassificationReport {
  TypeTag tag;
  std::optional<bool> projective;  // unset when undecided (n = 2)
  std::string diffeo_label;
  std::string cohomology_class_label;
};

// Conditions of a pair defining a complete nonsingular fan over C_n:
// (i) every proper principal minor of A equals 1,
// (ii) det[a_1,..,b at slot i,..,a_n] = 1 for every i,
// (iii) b matches det A: sum(b) = 1 when det = 0, else (det A) b = sum_i a_i.
ValidationResult validate_pair(const VcPair& p);

// Exact determinant, type index, and canonical representative.  Requires a
// valid pair; the normal form comes from the permutation-conjugation of
// Lemma 3.3 style (unipotent lower triangular, or cyclic with the
// off-diagonal entries a_1..a_n).
TypeTag classify_pair(const VcPair& p);

VcPair canonical_representative(const VcPair& p);

// Equal type and equal canonical representative.  Requires n >= 3.
bool variety_isomorphic(const VcPair& p1, const VcPair& p2);

// All Type 2 classes for dimension n: sign sequences of length n with an odd
// number of +1 entries, up to cyclic rotation, canonicalized.
std::vector<IntVector> enumerate_type2(int n);

// Number of binary necklaces of length n with an odd number of zeros:
// (1/2n) * sum over odd d | n of phi(d) 2^{n/d}.
Int necklace_count(int n);

// R = A^{-1} + J/2 for a Type 2 matrix; always integral.
IntMatrix r_matrix(const IntMatrix& a);

// Partial sums c_k = b_1 + ... + b_k, k = 1..n-1; requires sum(b) = 1.
IntVector type0_c_vector(const IntVector& b);

// "det=q" for det != 1; "bott:<canonical matrix>" for Type 1.
std::string diffeo_label(const VcPair& p);

ClassificationReport classify_report(const VcPair& p);

// --- helpers shared across modules ---

// Cyclic-form matrix from off-diagonal entries (a_1 at (1,n), a_i at (i,i-1))
// together with the b vector forced by det A != 0.  Throws when det = 0.
VcPair pair_from_cyclic_sequence(const IntVector& seq);

IntMatrix cyclic_matrix(const IntVector& seq);

// Off-diagonal entries of a cyclic-form matrix: (A(1,n), A(2,1), ..., A(n,n-1)).
IntVector cyclic_sequence_of(const VcPair& p);

// Type 0 pair with the standard matrix (all cyclic entries -1) and given b.
VcPair type0_pair(const IntVector& b);

// Type 1 pair from a unipotent lower triangular matrix (b = column sums).
VcPair type1_pair(const IntMatrix& a);

// Type 2 pair from a +-1 sequence with an odd number of +1 entries.
VcPair type2_pair(const IntVector& signs);

// Type 3 normal-form pair for parameter a (a != 0, +-1 gives types 0/1/2,
// still accepted here; callers decide).
VcPair type3_pair(const Int& a, int n);

// (A_sigma, b_sigma): entrywise relabelling by a permutation of [n].
VcPair conjugate_pair(const VcPair& p, const Permutation& sigma);

Int euler_phi(int n);

}  // namespace vcfan
