#include "vcfan/fans.hpp"

#include "vcfan/classify.hpp"

#include <algorithm>
#include <map>

namespace vcfan {

Fan::Fan(SimplicialComplex k, IntMatrix v) : complex(std::move(k)), rays(std::move(v)) {
  if (rays.cols() != complex.vertex_count())
    throw DimensionError("Fan: ray count != vertex count");
  for (int j = 0; j < rays.cols(); ++j) {
    IntVector col = rays.column(j);
    Int g = vector_gcd(col);
    if (g == 0) throw std::invalid_argument("Fan: zero ray");
    if (g != 1) throw std::invalid_argument("Fan: ray not primitive");
  }
}

IntMatrix Fan::facet_matrix(const VertexSet& facet) const {
  std::vector<IntVector> cols;
  for (int v : facet) cols.push_back(ray(v));
  return IntMatrix::from_columns(cols);
}

bool is_nonsingular(const Fan& f) {
  for (const auto& facet : f.complex.facets()) {
    if (int(facet.size()) != f.dim()) return false;
    Int d = det_exact(f.facet_matrix(facet));
    if (d != 1 && d != -1) return false;
  }
  return true;
}

namespace {

// Coefficients of target in the basis given by the facet's rays.
RatVector cone_coordinates(const Fan& f, const VertexSet& facet, const RatVector& target) {
  IntMatrix q = f.facet_matrix(facet);
  return solve_rational(q, target);
}

RatVector to_rat(const IntVector& v) {
  RatVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace

bool is_complete(const Fan& f) {
  if (!f.complex.pure()) throw std::invalid_argument("is_complete: complex not pure");
  if (f.complex.facets().empty() || int(f.complex.facets().front().size()) != f.dim())
    return false;
  // wall-crossing: for each ridge with facets tau+{i}, tau+{j}, the coefficient
  // of v_i when v_j is expressed in the basis of tau+{i} must be negative
  for (const auto& rec : ridges_and_adjacency(f.complex)) {
    if (rec.facets.size() != 2) return false;
    const VertexSet& f1 = rec.facets[0];
    const VertexSet& f2 = rec.facets[1];
    int i = -1, j = -1;
    for (int v : f1)
      if (!rec.ridge.count(v)) i = v;
    for (int v : f2)
      if (!rec.ridge.count(v)) j = v;
    RatVector coeff = cone_coordinates(f, f1, to_rat(f.ray(j)));
    int pos = int(std::distance(f1.begin(), f1.find(i)));
    if (coeff[pos] >= 0) return false;
  }
  // exact ray-shot: a generic rational point must lie in the interior of
  // exactly one maximal cone; bump t until no cone boundary is hit
  int n = f.dim();
  for (Int t(1000000);; ++t) {
    RatVector p(n);
    Rat power(1);
    for (int i = 0; i < n; ++i) {
      p[i] = power;
      power *= Rat(t);
    }
    int interior = 0;
    bool boundary_hit = false;
    for (const auto& facet : f.complex.facets()) {
      RatVector lambda = cone_coordinates(f, facet, p);
      bool nonneg = true, strict = true;
      for (const Rat& l : lambda) {
        if (l < 0) { nonneg = false; break; }
        if (l == 0) strict = false;
      }
      if (!nonneg) continue;
      if (!strict) { boundary_hit = true; break; }
      ++interior;
    }
    if (boundary_hit) continue;
    return interior == 1;
  }
}

Fan fan_from_pair(const VcPair& p) {
  if (!validate_pair(p).ok)
    throw std::invalid_argument("fan_from_pair: invalid pair: " + validate_pair(p).message);
  int n = p.n;
  IntMatrix rays(n, 2 * n + 1);
  for (int i = 0; i < n; ++i) rays(i, i) = -1;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) rays(i, n + j) = p.a(i, j);
  for (int i = 0; i < n; ++i) rays(i, 2 * n) = p.b[i];
  return Fan(vc_complex(n), rays);
}

VcPair pair_from_fan(const Fan& f) {
  int n = f.dim();
  if (!(f.complex == vc_complex(n)))
    throw std::invalid_argument("pair_from_fan: complex is not C_n");
  std::vector<IntVector> basis_cols;
  for (int i = 1; i <= n; ++i) basis_cols.push_back(f.ray(i));
  IntMatrix basis = IntMatrix::from_columns(basis_cols);
  RationalMatrix binv = inverse_rational(basis);  // throws SingularMatrixError if degenerate
  RationalMatrix rest(n, n + 1);
  for (int j = 0; j < n + 1; ++j) {
    IntVector col = f.ray(n + 1 + j);
    for (int i = 0; i < n; ++i) rest(i, j) = Rat(col[i]);
  }
  RationalMatrix sol = binv * rest;  // -(A | b)
  IntMatrix a(n, n);
  IntVector b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rat q = -sol(i, j);
      if (q.get_den() != 1) throw std::logic_error("pair_from_fan: non-integral A");
      a(i, j) = q.get_num();
    }
    Rat q = -sol(i, n);
    if (q.get_den() != 1) throw std::logic_error("pair_from_fan: non-integral b");
    b[i] = q.get_num();
  }
  return VcPair{n, a, b};
}

Fan bott_fan(const IntMatrix& a_bott) {
  int n = a_bott.rows();
  if (!a_bott.square()) throw DimensionError("bott_fan: non-square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && a_bott(i, j) != 1)
        throw std::invalid_argument("bott_fan: diagonal entries must be 1");
      if (j > i && a_bott(i, j) != 0)
        throw std::invalid_argument("bott_fan: matrix not lower triangular");
    }
  IntMatrix rays(n, 2 * n);
  for (int i = 0; i < n; ++i) rays(i, i) = -1;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) rays(i, n + j) = a_bott(i, j);
  return Fan(bott_complex(n), rays);
}

Fan blow_up_bott(const IntMatrix& a_bott) {
  Fan base = bott_fan(a_bott);
  int n = base.dim();
  // new ray: sum of the generators of the cone {n+1,...,2n}
  IntVector apex(n, Int(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) apex[i] += base.rays(i, n + j);
  IntMatrix rays(n, 2 * n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j) rays(i, j) = base.rays(i, j);
  for (int i = 0; i < n; ++i) rays(i, 2 * n) = apex[i];
  return Fan(vc_complex(n), rays);
}

Fan remove_apex(const Fan& f) {
  int n = f.dim();
  if (!(f.complex == vc_complex(n)))
    throw std::invalid_argument("remove_apex: complex is not C_n");
  IntMatrix rays(n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j) rays(i, j) = f.rays(i, j);
  return Fan(bott_complex(n), rays);
}

VcPair project_along_ray(const VcPair& p, int k) {
  TypeTag tag = classify_pair(p);
  if (tag.type_index != 2 && tag.type_index != 3)
    throw std::invalid_argument("project_along_ray: pair must be of Type 2 or Type 3");
  if (p.n < 3) throw std::invalid_argument("project_along_ray: requires n >= 3");
  if (k < 1 || k > p.n) throw std::invalid_argument("project_along_ray: index out of range");
  // cyclic-form off-diagonal entries a_1..a_n (a_1 at (1,n), a_i at (i,i-1))
  int n = p.n;
  IntVector seq(n);
  seq[0] = p.a(0, n - 1);
  for (int i = 2; i <= n; ++i) seq[i - 1] = p.a(i - 1, i - 2);
  // closed formula: merge a_k and a_{k+1} into -a_k a_{k+1}
  int succ = k % n + 1;
  IntVector merged;
  for (int i = 1; i <= n; ++i) {
    if (i == k) continue;
    if (i == succ) merged.push_back(-seq[k - 1] * seq[succ - 1]);
    else merged.push_back(seq[i - 1]);
  }
  VcPair formula = pair_from_cyclic_sequence(merged);

  // Exact lattice quotient by <a_k>.  The new basis of Z^n/<a_k> is the image
  // of {v_i : i != k}; a_k = -v_k - a_{k+1} v_{k+1} gives the elimination
  // v_k = -a_{k+1} v_{k+1}.  Rays of the projected fan are read off the link
  // of vertex n+k, relabelled to the C_{n-1} convention.
  Fan f = fan_from_pair(p);
  // express every ray in the basis v_1..v_n (here v_i = -e_i so this is just
  // negation), substitute v_k, and drop the k-th coordinate
  auto project_vec = [&](const IntVector& v) {
    // v = sum_i c_i v_i with c_i = -v[i]; substitute v_k -> -a_{k+1} v_{k+1}
    IntVector c(n);
    for (int i = 0; i < n; ++i) c[i] = -v[i];
    int kp = succ - 1;
    c[kp] += c[k - 1] * (-seq[succ - 1]);
    IntVector out;
    for (int i = 0; i < n; ++i)
      if (i != k - 1) out.push_back(-c[i]);  // back to ray coordinates (v_i = -e_i)
    return out;
  };
  int m = n - 1;
  IntMatrix rays(m, 2 * m + 1);
  // old vertices in the link of n+k, relabelled: [n]\{k} -> 1..m,
  // {n+i : i != k} -> m+1..2m, 2n+1 -> 2m+1
  std::vector<int> old_base;
  for (int i = 1; i <= n; ++i)
    if (i != k) old_base.push_back(i);
  for (int j = 0; j < m; ++j) {
    IntVector v = project_vec(f.ray(old_base[j]));
    for (int i = 0; i < m; ++i) rays(i, j) = v[i];
    IntVector w = project_vec(f.ray(n + old_base[j]));
    for (int i = 0; i < m; ++i) rays(i, m + j) = w[i];
  }
  IntVector w = project_vec(f.ray(2 * n + 1));
  for (int i = 0; i < m; ++i) rays(i, 2 * m) = w[i];
  VcPair quotient = pair_from_fan(Fan(vc_complex(m), rays));

  // the quotient pair agrees with the formula up to the cyclic relabelling
  // that restores position k to the start of the merged window
  if (!(quotient == formula)) {
    VcPair rotated = formula;
    bool matched = false;
    for (int r = 0; r < m; ++r) {
      IntVector rot(m);
      for (int i = 0; i < m; ++i) {
        IntVector ms = cyclic_sequence_of(rotated);
        rot[i] = ms[(i + r) % m];
      }
      if (pair_from_cyclic_sequence(rot) == quotient) { matched = true; break; }
    }
    if (!matched) throw std::logic_error("project_along_ray: quotient disagrees with formula");
  }
  return formula;
}

bool fans_isomorphic(const Fan& f1, const Fan& f2) {
  int n = f1.dim();
  if (f2.dim() != n) return false;
  if (n < 3) throw std::invalid_argument("fans_isomorphic: requires n >= 3");
  if (!(f1.complex == vc_complex(n)) || !(f2.complex == vc_complex(n)))
    throw std::invalid_argument("fans_isomorphic: fans must be over C_n");
  std::vector<IntVector> b1;
  for (int i = 1; i <= n; ++i) b1.push_back(f1.ray(i));
  IntMatrix basis1 = IntMatrix::from_columns(b1);
  RationalMatrix basis1_inv = inverse_rational(basis1);
  for (const auto& kappa : vc_automorphism_group(n)) {
    // solve R from the basis facet: R v_i = v'_{kappa(i)} for i = 1..n
    std::vector<IntVector> img;
    for (int i = 1; i <= n; ++i) img.push_back(f2.ray(kappa.image(i)));
    RationalMatrix r = RationalMatrix::from_int(IntMatrix::from_columns(img)) * basis1_inv;
    if (!r.is_integral()) continue;
    IntMatrix ri = r.to_int();
    if (!is_unimodular(ri)) continue;
    bool all = true;
    for (int v = 1; v <= 2 * n + 1 && all; ++v) {
      IntVector lhs = ri * f1.ray(v);
      if (lhs != f2.ray(kappa.image(v))) all = false;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace vcfan
