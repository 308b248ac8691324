#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vcfan/classify.hpp"
#include "vcfan/rng.hpp"

using namespace vcfan;

TEST_CASE("pair validation") {
  SUBCASE("valid examples of each type") {
    CHECK(validate_pair(type0_pair({Int(0), Int(0), Int(1)})).ok);
    CHECK(validate_pair(type2_pair({Int(1), Int(1), Int(1)})).ok);
    CHECK(validate_pair(type3_pair(Int(5), 4)).ok);
    IntMatrix a = IntMatrix::identity(3);
    a(2, 0) = -2;
    CHECK(validate_pair(type1_pair(a)).ok);
  }
  SUBCASE("an even number of +1 entries is rejected") {
    IntVector signs = {Int(1), Int(1), Int(-1)};
    IntMatrix a = cyclic_matrix(signs);
    // with det 0 the b-condition cannot hold either way; report not ok
    VcPair p{3, a, {Int(1), Int(1), Int(0)}};
    ValidationResult v = validate_pair(p);
    CHECK(!v.ok);
  }
  SUBCASE("Type 0 requires sum(b) = 1") {
    ValidationResult v = validate_pair(type0_pair({Int(0), Int(0), Int(2)}));
    CHECK(!v.ok);
    CHECK(v.message.find("sum(b)=1") != std::string::npos);
  }
  SUBCASE("parameter 1 in the Type 3 shape is a valid Type 2 pair") {
    VcPair p = type3_pair(Int(1), 3);
    CHECK(validate_pair(p).ok);
    CHECK(classify_pair(p).type_index == 2);
  }
  SUBCASE("parameter 0 gives Type 1, parameter -1 gives Type 0") {
    VcPair p0 = type3_pair(Int(0), 3);
    CHECK(classify_pair(p0).type_index == 1);
    // a = -1 has det 0; b is not determined by A, so build it directly
    IntVector seq(3, Int(-1));
    VcPair pm1{3, cyclic_matrix(seq), {Int(1), Int(0), Int(0)}};
    CHECK(validate_pair(pm1).ok);
    CHECK(classify_pair(pm1).type_index == 0);
  }
  SUBCASE("a wrong b vector fails the replaced-column determinants") {
    VcPair p = type2_pair({Int(1), Int(1), Int(1)});
    p.b[0] += 1;
    CHECK(!validate_pair(p).ok);
  }
}

TEST_CASE("type assignment") {
  CHECK(classify_pair(type2_pair({Int(1), Int(1), Int(1)})).det == 2);
  CHECK(classify_pair(type2_pair({Int(1), Int(1), Int(1)})).type_index == 2);
  SUBCASE("strictly lower triangular data is Type 1") {
    IntMatrix a = IntMatrix::identity(4);
    a(1, 0) = 3;
    a(3, 2) = -1;
    TypeTag tag = classify_pair(type1_pair(a));
    CHECK(tag.type_index == 1);
    CHECK(tag.det == 1);
  }
  SUBCASE("cyclic parameter a gives det 1 + a") {
    TypeTag tag = classify_pair(type3_pair(Int(5), 3));
    CHECK(tag.type_index == 3);
    CHECK(tag.det == 6);
    CHECK(classify_pair(type3_pair(Int(-7), 4)).det == -6);
  }
  SUBCASE("classification works on conjugated input") {
    SampleRng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      VcPair p = sample_pair(4, rng);
      VcPair q = sample_conjugated(p, rng);
      CHECK(validate_pair(q).ok);
      CHECK(classify_pair(q).type_index == classify_pair(p).type_index);
      CHECK(classify_pair(q).det == classify_pair(p).det);
    }
  }
}

TEST_CASE("canonical representatives") {
  SUBCASE("Type 0 rotation minimum") {
    VcPair p = type0_pair({Int(0), Int(1), Int(0)});
    CHECK(canonical_representative(p).b == IntVector{Int(0), Int(0), Int(1)});
  }
  SUBCASE("Type 2 rotation minimum with -1 < 1") {
    VcPair p = type2_pair({Int(-1), Int(1), Int(-1)});
    CHECK(cyclic_sequence_of(canonical_representative(p)) ==
          IntVector{Int(-1), Int(-1), Int(1)});
  }
  SUBCASE("Type 3 is rigid") {
    VcPair p = type3_pair(Int(4), 3);
    VcPair c = canonical_representative(p);
    CHECK(c == p);
  }
  SUBCASE("canonicalization is idempotent and rotation-invariant") {
    SampleRng rng(43);
    for (int n = 3; n <= 5; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        VcPair p = sample_pair(n, rng);
        VcPair c = canonical_representative(p);
        CHECK(canonical_representative(c) == c);
        CHECK(canonical_representative(sample_conjugated(p, rng)) == c);
      }
  }
  SUBCASE("Type 1 canonical form is the lexicographic minimum, brute-forced") {
    SampleRng rng(47);
    for (int trial = 0; trial < 5; ++trial) {
      VcPair p = sample_type1(4, rng);
      VcPair c = canonical_representative(p);
      // oracle: minimize over every conjugate that stays lower triangular
      bool any_smaller = false;
      for (const auto& sigma : Permutation::all(4)) {
        IntMatrix m = permutation_conjugate(p.a, sigma);
        bool lower = true;
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j)
            if (m(i, j) != 0) lower = false;
        if (!lower) continue;
        for (int i = 0; i < 4 && !any_smaller; ++i)
          for (int j = 0; j < 4; ++j) {
            if (m(i, j) < c.a(i, j)) { any_smaller = true; break; }
            if (m(i, j) > c.a(i, j)) { i = 4; break; }
          }
      }
      CHECK(!any_smaller);
    }
  }
}

TEST_CASE("variety isomorphism") {
  SUBCASE("Type 0 rotations are isomorphic") {
    CHECK(variety_isomorphic(type0_pair({Int(1), Int(0), Int(0)}),
                             type0_pair({Int(0), Int(1), Int(0)})));
  }
  SUBCASE("non-rotations differ") {
    CHECK(!variety_isomorphic(type0_pair({Int(2), Int(-1), Int(0)}),
                              type0_pair({Int(2), Int(0), Int(-1)})));
  }
  SUBCASE("Type 3 equality") {
    CHECK(variety_isomorphic(type3_pair(Int(2), 3), type3_pair(Int(2), 3)));
    CHECK(!variety_isomorphic(type3_pair(Int(2), 3), type3_pair(Int(-4), 3)));
  }
  SUBCASE("n = 2 is refused") {
    VcPair p = type3_pair(Int(3), 2);
    CHECK_THROWS(variety_isomorphic(p, p));
  }
  SUBCASE("determinant is constant on isomorphism classes") {
    SampleRng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
      VcPair p = sample_pair(4, rng);
      VcPair q = sample_conjugated(p, rng);
      CHECK(variety_isomorphic(p, q));
      CHECK(det_exact(p.a) == det_exact(q.a));
    }
  }
}

TEST_CASE("Type 2 enumeration and necklace counts") {
  SUBCASE("n=3 classes") {
    auto classes = enumerate_type2(3);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == IntVector{Int(-1), Int(-1), Int(1)});
    CHECK(classes[1] == IntVector{Int(1), Int(1), Int(1)});
  }
  SUBCASE("counts match the formula") {
    std::vector<long> expect = {2, 2, 4, 6, 10, 16};
    for (int n = 3; n <= 8; ++n) {
      CHECK(Int(long(enumerate_type2(n).size())) == necklace_count(n));
      CHECK(necklace_count(n) == expect[n - 3]);
    }
  }
  SUBCASE("formula evaluations") {
    CHECK(necklace_count(3) == 2);
    CHECK(necklace_count(4) == 2);
    CHECK(necklace_count(6) == 6);
  }
}

TEST_CASE("the R matrix") {
  SUBCASE("worked example") {
    IntMatrix a = cyclic_matrix({Int(1), Int(1), Int(1)});
    IntMatrix r = r_matrix(a);
    IntMatrix expect(3, 3);
    expect(0, 0) = 1; expect(0, 1) = 1; expect(0, 2) = 0;
    expect(1, 0) = 0; expect(1, 1) = 1; expect(1, 2) = 1;
    expect(2, 0) = 1; expect(2, 1) = 0; expect(2, 2) = 1;
    CHECK(r == expect);
    // identity (3): A R - b 1^T = E
    VcPair p = type2_pair({Int(1), Int(1), Int(1)});
    IntMatrix ar = a * r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(ar(i, j) - p.b[i] == (i == j ? 1 : 0));
  }
  SUBCASE("integral for every Type 2 matrix up to n = 6") {
    for (int n = 3; n <= 6; ++n)
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        IntVector signs(n);
        int ones = 0;
        for (int i = 0; i < n; ++i) {
          signs[i] = (mask & (1u << i)) ? 1 : -1;
          if (signs[i] == 1) ++ones;
        }
        if (ones % 2 == 0) continue;
        CHECK_NOTHROW(r_matrix(cyclic_matrix(signs)));
      }
  }
  CHECK_THROWS(r_matrix(IntMatrix::identity(3)));
}

TEST_CASE("Type 0 c-vectors") {
  CHECK(type0_c_vector({Int(0), Int(0), Int(1)}) == IntVector{Int(0), Int(0)});
  CHECK(type0_c_vector({Int(1), Int(0), Int(0)}) == IntVector{Int(1), Int(1)});
  SUBCASE("weighted-sum identity for b = (2,-1,0)") {
    IntVector c = type0_c_vector({Int(2), Int(-1), Int(0)});
    CHECK(c == IntVector{Int(2), Int(1)});
    Int sum = c[0] + c[1];
    CHECK(sum == 3);
    CHECK(sum % 3 == 0);
  }
  CHECK_THROWS(type0_c_vector({Int(1), Int(1)}));
}

TEST_CASE("labels") {
  CHECK(diffeo_label(type0_pair({Int(0), Int(0), Int(1)})) == "det=0");
  CHECK(diffeo_label(type2_pair({Int(-1), Int(-1), Int(1)})) == "det=2");
  SUBCASE("Type 1 defers to the canonical Bott matrix") {
    IntMatrix a = IntMatrix::identity(3);
    a(2, 1) = 1;
    std::string label = diffeo_label(type1_pair(a));
    CHECK(label.substr(0, 5) == "bott:");
  }
  SUBCASE("report fields") {
    ClassificationReport rep = classify_report(type2_pair({Int(1), Int(1), Int(1)}));
    CHECK(rep.tag.type_index == 2);
    CHECK(rep.diffeo_label == "det=2");
    CHECK(rep.cohomology_class_label == "det=2");
    REQUIRE(rep.projective.has_value());
    CHECK(!*rep.projective);
    ClassificationReport rep0 = classify_report(type0_pair({Int(0), Int(0), Int(1)}));
    REQUIRE(rep0.projective.has_value());
    CHECK(*rep0.projective);
  }
}
