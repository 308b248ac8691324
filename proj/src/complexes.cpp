#include "vcfan/complexes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace vcfan {

namespace {

bool contains(const VertexSet& big, const VertexSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<VertexSet> minimal_nonfaces)
    : m_(vertex_count), minimal_nonfaces_(std::move(minimal_nonfaces)) {
  for (const auto& nf : minimal_nonfaces_) {
    for (int v : nf)
      if (v < 1 || v > m_) throw std::invalid_argument("SimplicialComplex: vertex label out of range");
    for (const auto& other : minimal_nonfaces_)
      if (&nf != &other && contains(nf, other))
        throw std::invalid_argument("SimplicialComplex: minimal non-face contains another");
  }
  // facets by maximal extension: grow each face greedily through all vertex
  // supersets, then keep the maximal ones.  Complexes here are small (m <= 25)
  // but 2^m enumeration is not affordable for m = 2n+1 with n = 12, so we
  // build facets by backtracking over vertices instead.
  std::vector<VertexSet> maximal;
  VertexSet current;
  // Backtracking: vertices are added in increasing order; at each step we may
  // include vertex v if the result is still a face.
  auto is_face_local = [&](const VertexSet& s) {
    for (const auto& nf : minimal_nonfaces_)
      if (contains(s, nf)) return false;
    return true;
  };
  std::vector<int> stack;
  auto extendable = [&](const VertexSet& s) {
    // s can be extended by some vertex not in s
    for (int v = 1; v <= m_; ++v) {
      if (s.count(v)) continue;
      VertexSet t = s;
      t.insert(v);
      if (is_face_local(t)) return true;
    }
    return false;
  };
  std::function<void(int)> rec = [&](int next) {
    bool extended = false;
    for (int v = next; v <= m_; ++v) {
      VertexSet t = current;
      t.insert(v);
      if (!is_face_local(t)) continue;
      extended = true;
      current.insert(v);
      rec(v + 1);
      current.erase(v);
    }
    if (!extended && !extendable(current) && !current.empty()) maximal.push_back(current);
  };
  rec(1);
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  facets_ = std::move(maximal);
}

bool SimplicialComplex::is_face(const VertexSet& s) const {
  for (int v : s)
    if (v < 1 || v > m_) return false;
  for (const auto& nf : minimal_nonfaces_)
    if (contains(s, nf)) return false;
  return true;
}

bool SimplicialComplex::is_facet(const VertexSet& s) const {
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

bool SimplicialComplex::pure() const {
  for (const auto& f : facets_)
    if (f.size() != facets_.front().size()) return false;
  return true;
}

int SimplicialComplex::dimension() const {
  size_t d = 0;
  for (const auto& f : facets_) d = std::max(d, f.size());
  return int(d) - 1;
}

std::vector<Int> SimplicialComplex::f_vector() const {
  // Count faces of each size by enumerating subsets of facets.
  std::set<VertexSet> seen;
  std::vector<Int> f(size_t(dimension()) + 2, Int(0));
  f[0] = 1;  // empty face
  for (const auto& facet : facets_) {
    std::vector<int> verts(facet.begin(), facet.end());
    int k = int(verts.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      VertexSet s;
      for (int b = 0; b < k; ++b)
        if (mask & (1u << b)) s.insert(verts[b]);
      if (seen.insert(s).second) f[s.size()] += 1;
    }
  }
  return f;
}

std::vector<Int> SimplicialComplex::h_vector() const {
  if (!pure()) throw std::invalid_argument("h_vector: complex not pure");
  int d = dimension() + 1;  // facet size
  std::vector<Int> f = f_vector();
  std::vector<Int> h(size_t(d) + 1, Int(0));
  // h_k = sum_{j=0}^{k} (-1)^{k-j} C(d-j, k-j) f_{j-1}
  auto binom = [](int a, int b) {
    if (b < 0 || b > a) return Int(0);
    Int r(1);
    for (int i = 0; i < b; ++i) { r *= (a - i); r /= (i + 1); }
    return r;
  };
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j <= k; ++j) {
      Int term = binom(d - j, k - j) * f[j];
      if ((k - j) % 2 == 0) h[k] += term; else h[k] -= term;
    }
  return h;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  return m_ == other.m_ && facets_ == other.facets_;
}

SimplicialComplex vc_complex(int n) {
  if (n < 2) throw std::invalid_argument("vc_complex: requires n >= 2");
  std::vector<VertexSet> nonfaces;
  for (int i = 1; i <= n; ++i) nonfaces.push_back({i, n + i});
  for (int i = 1; i <= n; ++i) nonfaces.push_back({i, 2 * n + 1});
  VertexSet top;
  for (int i = 1; i <= n; ++i) top.insert(n + i);
  nonfaces.push_back(top);
  return SimplicialComplex(2 * n + 1, nonfaces);
}

SimplicialComplex bott_complex(int n) {
  if (n < 1) throw std::invalid_argument("bott_complex: requires n >= 1");
  std::vector<VertexSet> nonfaces;
  for (int i = 1; i <= n; ++i) nonfaces.push_back({i, n + i});
  return SimplicialComplex(2 * n, nonfaces);
}

std::vector<RidgeRecord> ridges_and_adjacency(const SimplicialComplex& k) {
  if (!k.pure()) throw std::invalid_argument("ridges_and_adjacency: complex not pure");
  std::map<VertexSet, std::vector<VertexSet>> by_ridge;
  for (const auto& facet : k.facets())
    for (int v : facet) {
      VertexSet ridge = facet;
      ridge.erase(v);
      by_ridge[ridge].push_back(facet);
    }
  std::vector<RidgeRecord> out;
  for (auto& [ridge, facets] : by_ridge) out.push_back({ridge, std::move(facets)});
  return out;
}

Permutation vc_vertex_map(int n, const Permutation& sigma) {
  if (sigma.n() != n) throw DimensionError("vc_vertex_map: permutation size mismatch");
  std::vector<int> img(2 * n + 1);
  for (int i = 1; i <= n; ++i) {
    img[i - 1] = sigma.image(i);
    img[n + i - 1] = n + sigma.image(i);
  }
  img[2 * n] = 2 * n + 1;
  return Permutation(img);
}

namespace {

// Exhaustive check (n = 3, 4): every bijection of the vertices of C_n that
// maps minimal non-faces onto minimal non-faces comes from a permutation of
// [n].  A complex is determined by its minimal non-faces, so this is exactly
// the automorphism group.
bool aut_group_is_sn(int n) {
  SimplicialComplex c = vc_complex(n);
  const auto& nonfaces = c.minimal_nonfaces();
  std::set<VertexSet> nfset(nonfaces.begin(), nonfaces.end());
  int m = 2 * n + 1;
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 1);
  size_t count = 0;
  do {
    auto mapped_ok = [&]() {
      for (const auto& nf : nonfaces) {
        VertexSet image;
        for (int v : nf) image.insert(img[v - 1]);
        if (!nfset.count(image)) return false;
      }
      return true;
    };
    if (mapped_ok()) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  size_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  return count == factorial;
}

}  // namespace

std::vector<Permutation> vc_automorphisms(int n) {
  if (n < 3)
    throw std::invalid_argument("vc_automorphisms: unsupported for n < 3 (Aut(C_2) is larger)");
  static std::once_flag checked3, checked4;
  if (n == 3)
    std::call_once(checked3, [] {
      if (!aut_group_is_sn(3)) throw std::logic_error("Aut(C_3) is not S_3");
    });
  if (n == 4)
    std::call_once(checked4, [] {
      if (!aut_group_is_sn(4)) throw std::logic_error("Aut(C_4) is not S_4");
    });
  std::vector<int> swap12(n), cycle(n);
  std::iota(swap12.begin(), swap12.end(), 1);
  std::swap(swap12[0], swap12[1]);
  for (int i = 1; i <= n; ++i) cycle[i - 1] = i % n + 1;
  return {vc_vertex_map(n, Permutation(swap12)), vc_vertex_map(n, Permutation(cycle))};
}

std::vector<Permutation> vc_automorphism_group(int n) {
  vc_automorphisms(n);  // validates n and runs the exhaustive check
  std::vector<Permutation> out;
  for (const auto& sigma : Permutation::all(n)) out.push_back(vc_vertex_map(n, sigma));
  return out;
}

}  // namespace vcfan
