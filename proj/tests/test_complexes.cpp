#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vcfan/complexes.hpp"

#include <algorithm>
#include <numeric>

using namespace vcfan;

namespace {

// independent facet oracle: all subsets of the vertex set that avoid every
// minimal non-face and are maximal with that property
std::vector<VertexSet> facets_by_enumeration(const SimplicialComplex& k) {
  int m = k.vertex_count();
  std::vector<VertexSet> faces;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    VertexSet s;
    for (int v = 0; v < m; ++v)
      if (mask & (1u << v)) s.insert(v + 1);
    if (k.is_face(s)) faces.push_back(s);
  }
  std::vector<VertexSet> maximal;
  for (const auto& f : faces) {
    bool max = true;
    for (const auto& g : faces)
      if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) max = false;
    if (max && !f.empty()) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

size_t factorial(int n) {
  size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("vertex-cut complex") {
  SUBCASE("C_3 has 7 vertices and 10 facets") {
    SimplicialComplex c = vc_complex(3);
    CHECK(c.vertex_count() == 7);
    CHECK(c.facets().size() == 10);
    CHECK(facets_by_enumeration(c) == c.facets());
  }
  SUBCASE("facet counts 2^n - 1 + n for n <= 6") {
    for (int n = 2; n <= 6; ++n)
      CHECK(vc_complex(n).facets().size() == (size_t(1) << n) - 1 + n);
  }
  SUBCASE("{1,2,3} is a facet, {1,4} is not a face") {
    SimplicialComplex c = vc_complex(3);
    CHECK(c.is_facet({1, 2, 3}));
    CHECK(!c.is_face({1, 4}));
    CHECK(!c.is_face({1, 7}));
    CHECK(!c.is_face({4, 5, 6}));
  }
  SUBCASE("vertex 2n+1 is the unique vertex of degree n") {
    for (int n = 3; n <= 5; ++n) {
      SimplicialComplex c = vc_complex(n);
      auto link_of = [&](int w) {
        VertexSet link;
        for (const auto& f : c.facets())
          if (f.count(w))
            for (int v : f)
              if (v != w) link.insert(v);
        return link;
      };
      VertexSet apex_link = link_of(2 * n + 1);
      CHECK(apex_link.size() == size_t(n));
      VertexSet expect;
      for (int i = 1; i <= n; ++i) expect.insert(n + i);
      CHECK(apex_link == expect);
      for (int w = 1; w <= 2 * n; ++w) CHECK(link_of(w).size() > size_t(n));
    }
  }
  SUBCASE("{1..n} is the unique facet avoiding the link of 2n+1, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
      SimplicialComplex c = vc_complex(n);
      VertexSet link;
      for (const auto& f : c.facets())
        if (f.count(2 * n + 1))
          for (int v : f)
            if (v != 2 * n + 1) link.insert(v);
      int count = 0;
      VertexSet expect;
      for (int i = 1; i <= n; ++i) expect.insert(i);
      for (const auto& f : c.facets()) {
        bool disjoint = true;
        for (int v : f)
          if (link.count(v)) disjoint = false;
        if (disjoint) {
          ++count;
          CHECK(f == expect);
        }
      }
      CHECK(count == 1);
    }
  }
  SUBCASE("facets are maximal faces, exhaustively for n <= 5") {
    for (int n = 2; n <= 5; ++n) {
      SimplicialComplex c = vc_complex(n);
      CHECK(facets_by_enumeration(c) == c.facets());
      CHECK(c.pure());
      CHECK(c.dimension() == n - 1);
    }
  }
  SUBCASE("h-vector is (1, C(n,k)+1, ..., 1)") {
    for (int n = 2; n <= 6; ++n) {
      std::vector<Int> h = vc_complex(n).h_vector();
      CHECK(h.front() == 1);
      CHECK(h.back() == 1);
      Int binom(1);
      for (int k = 1; k < n; ++k) {
        binom = binom * (n - k + 1) / k;
        CHECK(h[k] == binom + 1);
      }
    }
  }
  CHECK_THROWS(vc_complex(1));
}

TEST_CASE("bott complex") {
  SUBCASE("n=1: two facets {1}, {2}") {
    SimplicialComplex b = bott_complex(1);
    CHECK(b.facets() == std::vector<VertexSet>{{1}, {2}});
  }
  SUBCASE("n=3 has 8 facets") { CHECK(bott_complex(3).facets().size() == 8); }
  SUBCASE("n=2 minimal non-faces are {1,3} and {2,4} only") {
    SimplicialComplex b = bott_complex(2);
    CHECK(b.minimal_nonfaces() == std::vector<VertexSet>{{1, 3}, {2, 4}});
    CHECK(facets_by_enumeration(b) == b.facets());
  }
  CHECK_THROWS(bott_complex(0));
}

TEST_CASE("ridges and adjacency") {
  SUBCASE("C_3: ridge {1,2} lies in {1,2,3} and {1,2,6}") {
    auto recs = ridges_and_adjacency(vc_complex(3));
    bool seen = false;
    for (const auto& r : recs)
      if (r.ridge == VertexSet{1, 2}) {
        seen = true;
        CHECK(r.facets == std::vector<VertexSet>{{1, 2, 3}, {1, 2, 6}});
      }
    CHECK(seen);
  }
  SUBCASE("B_2: ridge {1} lies in {1,2} and {1,4}") {
    auto recs = ridges_and_adjacency(bott_complex(2));
    for (const auto& r : recs)
      if (r.ridge == VertexSet{1})
        CHECK(r.facets == std::vector<VertexSet>{{1, 2}, {1, 4}});
  }
  SUBCASE("every ridge of C_n lies in exactly two facets, n <= 6") {
    for (int n = 2; n <= 6; ++n)
      for (const auto& r : ridges_and_adjacency(vc_complex(n)))
        CHECK(r.facets.size() == 2);
  }
}

TEST_CASE("automorphisms of C_n") {
  SUBCASE("the 3-cycle lifts to the vertex map (2,3,1,5,6,4,7)") {
    Permutation sigma({2, 3, 1});
    CHECK(vc_vertex_map(3, sigma) == Permutation({2, 3, 1, 5, 6, 4, 7}));
  }
  SUBCASE("identity lifts to identity") {
    CHECK(vc_vertex_map(4, Permutation(4)) == Permutation(9));
  }
  SUBCASE("group order is n! via facet-preserving brute force, n = 3") {
    SimplicialComplex c = vc_complex(3);
    std::vector<int> img(7);
    std::iota(img.begin(), img.end(), 1);
    size_t count = 0;
    do {
      bool ok = true;
      for (const auto& f : c.facets()) {
        VertexSet image;
        for (int v : f) image.insert(img[v - 1]);
        if (!c.is_facet(image)) { ok = false; break; }
      }
      if (ok) ++count;
    } while (std::next_permutation(img.begin(), img.end()));
    CHECK(count == factorial(3));
    CHECK(vc_automorphism_group(3).size() == factorial(3));
  }
  SUBCASE("n = 2 is refused") { CHECK_THROWS(vc_automorphisms(2)); }
}
