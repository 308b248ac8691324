#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vcfan/classify.hpp"
#include "vcfan/fans.hpp"
#include "vcfan/rng.hpp"

#include <numeric>

using namespace vcfan;

namespace {

// the fan of projective n-space: rays e_1..e_n, -sum e_i over the boundary of
// the n-simplex (minimal non-face = the whole vertex set)
Fan projective_space_fan(int n) {
  std::vector<VertexSet> nonfaces;
  VertexSet all;
  for (int i = 1; i <= n + 1; ++i) all.insert(i);
  nonfaces.push_back(all);
  SimplicialComplex k(n + 1, nonfaces);
  IntMatrix rays(n, n + 1);
  for (int i = 0; i < n; ++i) {
    rays(i, i) = 1;
    rays(i, n) = -1;
  }
  return Fan(k, rays);
}

VcPair oda_pair() { return type2_pair({Int(1), Int(1), Int(1)}); }

}  // namespace

TEST_CASE("nonsingularity") {
  CHECK(is_nonsingular(projective_space_fan(2)));
  CHECK(is_nonsingular(projective_space_fan(4)));
  CHECK(is_nonsingular(fan_from_pair(oda_pair())));
  SUBCASE("determinant-2 cones are rejected") {
    // the full simplex on two vertices as the only facet
    SimplicialComplex both(2, std::vector<VertexSet>{});
    IntMatrix nonprimitive(2, 2);
    nonprimitive(0, 0) = 1;
    nonprimitive(1, 1) = 2;  // ray 2e_2
    CHECK_THROWS(Fan(both, nonprimitive));
    // primitive rays spanning an index-2 cone: e_1 and e_1 + 2 e_2
    IntMatrix rays(2, 2);
    rays(0, 0) = 1;
    rays(0, 1) = 1;
    rays(1, 1) = 2;
    CHECK(!is_nonsingular(Fan(both, rays)));
  }
}

TEST_CASE("completeness") {
  CHECK(is_complete(projective_space_fan(2)));
  CHECK(is_complete(projective_space_fan(3)));
  CHECK(is_complete(fan_from_pair(oda_pair())));
  SUBCASE("every valid pair gives a complete nonsingular fan") {
    SampleRng rng(21);
    for (int n = 3; n <= 5; ++n)
      for (int trial = 0; trial < 8; ++trial) {
        VcPair p = sample_pair(n, rng);
        Fan f = fan_from_pair(p);
        CHECK(is_nonsingular(f));
        CHECK(is_complete(f));
      }
  }
  SUBCASE("removing a facet breaks completeness") {
    // the complex with one facet of the simplex boundary missing: realize by
    // forbidding one facet as a non-face
    SimplicialComplex k(3, std::vector<VertexSet>{{1, 2}});
    IntMatrix rays(2, 3);
    rays(0, 0) = 1;
    rays(1, 1) = 1;
    rays(0, 2) = -1;
    rays(1, 2) = -1;
    Fan f(k, rays);
    CHECK(!is_complete(f));
  }
}

TEST_CASE("fan from pair") {
  SUBCASE("rays follow the sign convention") {
    VcPair p = oda_pair();
    Fan f = fan_from_pair(p);
    CHECK(f.rays.cols() == 7);
    for (int i = 1; i <= 3; ++i) {
      IntVector e = f.ray(i);
      for (int t = 0; t < 3; ++t) CHECK(e[t] == (t == i - 1 ? -1 : 0));
    }
    for (int j = 1; j <= 3; ++j) CHECK(f.ray(3 + j) == p.a.column(j - 1));
    CHECK(f.ray(7) == p.b);
  }
  SUBCASE("Type 0 apex ray is b") {
    VcPair p = type0_pair({Int(0), Int(0), Int(1)});
    CHECK(fan_from_pair(p).ray(7) == IntVector{Int(0), Int(0), Int(1)});
  }
  CHECK_THROWS(fan_from_pair(VcPair{3, IntMatrix::identity(3), {Int(0), Int(0), Int(0)}}));
}

TEST_CASE("pair from fan") {
  SampleRng rng(5);
  SUBCASE("round trip") {
    for (int n = 3; n <= 5; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        VcPair p = sample_pair(n, rng);
        CHECK(pair_from_fan(fan_from_pair(p)) == p);
      }
  }
  SUBCASE("unimodular ray transforms cancel") {
    for (int trial = 0; trial < 10; ++trial) {
      VcPair p = sample_pair(4, rng);
      Fan f = fan_from_pair(p);
      IntMatrix g = IntMatrix::identity(4);
      for (int step = 0; step < 8; ++step) {
        int i = int(rng.draw(0, 3)), j = int(rng.draw(0, 3));
        if (i == j) continue;
        Int c(rng.draw(-2, 2));
        for (int k = 0; k < 4; ++k) g(i, k) += c * g(j, k);
      }
      Fan transformed(f.complex, g * f.rays);
      CHECK(pair_from_fan(transformed) == p);
    }
  }
  SUBCASE("vertex relabelling conjugates the pair") {
    for (int trial = 0; trial < 10; ++trial) {
      VcPair p = sample_pair(4, rng);
      std::vector<int> img(4);
      std::iota(img.begin(), img.end(), 1);
      for (int i = 3; i > 0; --i) std::swap(img[i], img[rng.draw(0, i)]);
      Permutation sigma(img);
      Fan f = fan_from_pair(p);
      Permutation kappa = vc_vertex_map(4, sigma);
      // relabelled fan: vertex v of the new fan carries ray of kappa^{-1}... the
      // fan with V' = V o kappa has ray kappa(v) at position v
      IntMatrix rays(4, 9);
      for (int v = 1; v <= 9; ++v) {
        IntVector col = f.ray(kappa.image(v));
        for (int t = 0; t < 4; ++t) rays(t, v - 1) = col[t];
      }
      VcPair q = pair_from_fan(Fan(vc_complex(4), rays));
      CHECK(q == conjugate_pair(p, sigma));
    }
  }
}

TEST_CASE("blow-up of Bott fans") {
  SUBCASE("trivial Bott matrix gives b = (1,...,1) and Type 1") {
    Fan f = blow_up_bott(IntMatrix::identity(3));
    VcPair p = pair_from_fan(f);
    CHECK(p.b == IntVector{Int(1), Int(1), Int(1)});
    TypeTag tag = classify_pair(p);
    CHECK(tag.type_index == 1);
    CHECK(tag.det == 1);
  }
  SUBCASE("a_{21} = 1 gives b = (1,2,1)") {
    IntMatrix a = IntMatrix::identity(3);
    a(1, 0) = 1;
    VcPair p = pair_from_fan(blow_up_bott(a));
    CHECK(p.b == IntVector{Int(1), Int(2), Int(1)});
  }
  SUBCASE("removing the apex vertex recovers the Bott fan") {
    SampleRng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
      IntMatrix a = IntMatrix::identity(4);
      for (int i = 1; i < 4; ++i)
        for (int j = 0; j < i; ++j) a(i, j) = rng.draw(-3, 3);
      Fan blown = blow_up_bott(a);
      CHECK(is_nonsingular(blown));
      CHECK(is_complete(blown));
      Fan recovered = remove_apex(blown);
      Fan original = bott_fan(a);
      CHECK(recovered.rays == original.rays);
      CHECK(recovered.complex == original.complex);
    }
  }
  CHECK_THROWS(blow_up_bott(cyclic_matrix({Int(1), Int(1), Int(1)})));
}

TEST_CASE("projection along a ray") {
  SUBCASE("a 4-dimensional class with one -1 projects onto the minimal non-projective class") {
    VcPair p = type2_pair({Int(-1), Int(1), Int(1), Int(1)});
    VcPair q = project_along_ray(p, 1);
    CHECK(q.n == 3);
    CHECK(cyclic_sequence_of(q) == IntVector{Int(1), Int(1), Int(1)});
  }
  SUBCASE("(1,1,1) projects to (-1,1)") {
    VcPair q = project_along_ray(oda_pair(), 1);
    CHECK(q.n == 2);
    CHECK(cyclic_sequence_of(q) == IntVector{Int(-1), Int(1)});
  }
  SUBCASE("projecting twice commutes with the composed formula, all n=5 sign vectors") {
    for (unsigned mask = 0; mask < 32; ++mask) {
      IntVector signs(5);
      int ones = 0;
      for (int i = 0; i < 5; ++i) {
        signs[i] = (mask & (1u << i)) ? 1 : -1;
        if (signs[i] == 1) ++ones;
      }
      if (ones % 2 == 0) continue;
      VcPair p = type2_pair(signs);
      // project along 1 then 1 again, vs the composed closed formula
      VcPair q1 = project_along_ray(project_along_ray(p, 1), 1);
      IntVector s1 = cyclic_sequence_of(project_along_ray(p, 1));
      IntVector expect;
      expect.push_back(-s1[0] * s1[1]);
      for (size_t i = 2; i < s1.size(); ++i) expect.push_back(s1[i]);
      CHECK(cyclic_sequence_of(q1) == expect);
    }
  }
  CHECK_THROWS(project_along_ray(type0_pair({Int(0), Int(0), Int(1)}), 1));
}

TEST_CASE("fan isomorphism search") {
  SUBCASE("reflexive") {
    Fan f = fan_from_pair(oda_pair());
    CHECK(fans_isomorphic(f, f));
  }
  SUBCASE("rotated Type 2 sequences give isomorphic fans") {
    VcPair p1 = type2_pair({Int(1), Int(-1), Int(-1)});
    VcPair p2 = type2_pair({Int(-1), Int(1), Int(-1)});
    CHECK(fans_isomorphic(fan_from_pair(p1), fan_from_pair(p2)));
  }
  SUBCASE("distinct Type 3 parameters are never isomorphic") {
    VcPair p1 = type3_pair(Int(2), 3);
    VcPair p2 = type3_pair(Int(3), 3);
    CHECK(!fans_isomorphic(fan_from_pair(p1), fan_from_pair(p2)));
  }
  SUBCASE("equivalence relation on a sample set") {
    SampleRng rng(29);
    std::vector<Fan> fans;
    for (int trial = 0; trial < 5; ++trial) fans.push_back(fan_from_pair(sample_pair(3, rng)));
    for (size_t i = 0; i < fans.size(); ++i)
      for (size_t j = 0; j < fans.size(); ++j) {
        bool ij = fans_isomorphic(fans[i], fans[j]);
        CHECK(ij == fans_isomorphic(fans[j], fans[i]));
        if (i == j) CHECK(ij);
      }
  }
}

TEST_CASE("mixed facets of valid pairs are unimodular, exhaustively n <= 5") {
  SampleRng rng(31);
  for (int n = 3; n <= 5; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      VcPair p = sample_pair(n, rng);
      Fan f = fan_from_pair(p);
      // every proper subset I of [n] gives the facet {i or n+i}
      for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        VertexSet facet;
        for (int i = 1; i <= n; ++i)
          facet.insert((mask & (1u << (i - 1))) ? n + i : i);
        CHECK(f.complex.is_facet(facet));
        Int d = det_exact(f.facet_matrix(facet));
        CHECK((d == 1 || d == -1));
      }
    }
}
