#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vcfan/classify.hpp"
#include "vcfan/exact.hpp"
#include "vcfan/rng.hpp"

using namespace vcfan;

namespace {

IntMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<IntVector> r;
  for (const auto& row : rows) {
    IntVector v;
    for (long x : row) v.push_back(Int(x));
    r.push_back(v);
  }
  return IntMatrix::from_rows(r);
}

// tiny brute-force oracle: search products U*M*V over unimodular U, V with
// entries in [-3, 3] for a diagonal divisibility-chain result
bool snf_2x2_oracle_matches(const IntMatrix& m, const IntMatrix& d) {
  std::vector<IntMatrix> unimodular;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int e = -3; e <= 3; ++e) {
          IntMatrix u = mat({{a, b}, {c, e}});
          Int det = det_exact(u);
          if (det == 1 || det == -1) unimodular.push_back(u);
        }
  for (const auto& u : unimodular)
    for (const auto& v : unimodular) {
      IntMatrix p = u * m * v;
      if (p(0, 1) == 0 && p(1, 0) == 0 && p(0, 0) >= 0 && p(1, 1) >= 0 &&
          (p(0, 0) == 0 ? p(1, 1) == 0 : p(1, 1) % p(0, 0) == 0)) {
        if (p(0, 0) == d(0, 0) && p(1, 1) == d(1, 1)) return true;
      }
    }
  return false;
}

}  // namespace

TEST_CASE("determinants") {
  CHECK(det_exact(IntMatrix::identity(3)) == 1);
  // the minimal non-projective class: cyclic matrix of (1,1,1)
  IntMatrix oda = cyclic_matrix({Int(1), Int(1), Int(1)});
  CHECK(det_exact(oda) == 2);
  // any Type 0 matrix is singular
  IntMatrix t0 = cyclic_matrix({Int(-1), Int(-1), Int(-1), Int(-1)});
  CHECK(det_exact(t0) == 0);
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), DimensionError);

  // Bareiss agrees with Laplace expansion on random small matrices
  SampleRng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = int(rng.draw(1, 5));
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.draw(-6, 6);
    CHECK(det_exact(m) == det_laplace(m));
  }
}

TEST_CASE("smith normal form") {
  SUBCASE("zero matrix") {
    SmithNormalForm s = smith_normal_form(IntMatrix(2, 2));
    CHECK(s.d == IntMatrix(2, 2));
    CHECK(s.u == IntMatrix::identity(2));
    CHECK(s.v == IntMatrix::identity(2));
  }
  SUBCASE("diag(2,3) has divisors 1, 6") {
    IntMatrix m = mat({{2, 0}, {0, 3}});
    SmithNormalForm s = smith_normal_form(m);
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 6);
    CHECK(snf_2x2_oracle_matches(m, s.d));
  }
  SUBCASE("sign normalization") {
    IntMatrix m(1, 1);
    m(0, 0) = -5;
    CHECK(smith_normal_form(m).d(0, 0) == 5);
  }
  SUBCASE("transform and divisibility invariants") {
    SampleRng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      int r = int(rng.draw(1, 4)), c = int(rng.draw(1, 4));
      IntMatrix m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rng.draw(-8, 8);
      SmithNormalForm s = smith_normal_form(m);
      CHECK(s.u * m * s.v == s.d);
      CHECK(is_unimodular(s.u));
      CHECK(is_unimodular(s.v));
      for (int t = 0; t + 1 < std::min(r, c); ++t) {
        if (s.d(t + 1, t + 1) != 0) {
          CHECK(s.d(t, t) != 0);
          CHECK(s.d(t + 1, t + 1) % s.d(t, t) == 0);
        }
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < c; ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
      }
    }
  }
}

TEST_CASE("rational inverse") {
  CHECK(inverse_rational(IntMatrix::identity(4)) == RationalMatrix::identity(4));
  SUBCASE("all entries +-1/2 for the (1,1,1) cyclic matrix") {
    IntMatrix a = cyclic_matrix({Int(1), Int(1), Int(1)});
    RationalMatrix inv = inverse_rational(a);
    Rat half = make_rat(1, 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(abs(inv(i, j)) == half);
  }
  SUBCASE("diagonal") {
    RationalMatrix inv = inverse_rational(mat({{2, 0}, {0, 1}}));
    CHECK(inv(0, 0) == make_rat(1, 2));
    CHECK(inv(1, 1) == 1);
    CHECK(inv(0, 1) == 0);
  }
  CHECK_THROWS_AS(inverse_rational(mat({{1, 1}, {1, 1}})), SingularMatrixError);
  SUBCASE("inverse times matrix is the identity for random unimodular") {
    SampleRng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      int n = int(rng.draw(2, 8));
      // build unimodular by elementary operations
      IntMatrix m = IntMatrix::identity(n);
      for (int step = 0; step < 3 * n; ++step) {
        int i = int(rng.draw(0, n - 1)), j = int(rng.draw(0, n - 1));
        if (i == j) continue;
        Int f(rng.draw(-2, 2));
        for (int k = 0; k < n; ++k) m(i, k) += f * m(j, k);
      }
      RationalMatrix prod = inverse_rational(m) * RationalMatrix::from_int(m);
      CHECK(prod == RationalMatrix::identity(n));
    }
  }
}

TEST_CASE("permutation conjugation") {
  IntMatrix a = cyclic_matrix({Int(1), Int(-1), Int(-1)});
  SUBCASE("identity fixes") { CHECK(permutation_conjugate(a, Permutation(3)) == a); }
  SUBCASE("entry relabelling equals the matrix product route") {
    for (const auto& sigma : Permutation::all(3)) {
      IntMatrix direct = permutation_conjugate(a, sigma);
      IntMatrix p = sigma.matrix();
      RationalMatrix product =
          inverse_rational(p) * RationalMatrix::from_int(a) * RationalMatrix::from_int(p);
      CHECK(RationalMatrix::from_int(direct) == product);
    }
  }
  SUBCASE("cyclic shift rotates the off-diagonal entries") {
    // entries (a_1,a_2,a_3) = (1,-1,-1) shifted by one: (-1,-1,1)
    VcPair p{3, a, {Int(1), Int(0), Int(0)}};
    Permutation shift = Permutation::cyclic_shift(3, 1);
    IntMatrix c = permutation_conjugate(a, shift);
    IntVector seq = cyclic_sequence_of(VcPair{3, c, {Int(0), Int(0), Int(1)}});
    CHECK(seq == IntVector{Int(-1), Int(-1), Int(1)});
  }
  SUBCASE("sigma then sigma inverse returns the original") {
    SampleRng rng(11);
    for (const auto& sigma : Permutation::all(4)) {
      IntMatrix m(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rng.draw(-5, 5);
      CHECK(permutation_conjugate(permutation_conjugate(m, sigma), sigma.inverse()) == m);
    }
  }
  SUBCASE("determinant is conjugation invariant (exhaustive n <= 5)") {
    SampleRng rng(13);
    for (int n = 2; n <= 5; ++n) {
      IntMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.draw(-4, 4);
      Int d = det_exact(m);
      for (const auto& sigma : Permutation::all(n))
        CHECK(det_exact(permutation_conjugate(m, sigma)) == d);
    }
  }
}

TEST_CASE("principal minors of valid cyclic matrices are 1") {
  // direct Laplace-expansion oracle against the Bareiss route, n <= 6
  for (int n = 3; n <= 6; ++n) {
    std::vector<IntVector> seqs;
    seqs.push_back(IntVector(n, Int(-1)));  // Type 0 shape
    IntVector t3(n, Int(-1));
    t3[0] = 4;
    seqs.push_back(t3);  // Type 3 shape
    IntVector t2(n, Int(-1));
    t2[0] = 1;
    seqs.push_back(t2);  // Type 2 shape with one +1
    for (const auto& seq : seqs) {
      IntMatrix a = cyclic_matrix(seq);
      for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        std::vector<int> idx, idx0;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) {
            idx.push_back(i + 1);
            idx0.push_back(i);
          }
        CHECK(principal_minor(a, idx) == 1);
        CHECK(det_laplace(a.submatrix(idx0, idx0)) == 1);
      }
    }
  }
}
