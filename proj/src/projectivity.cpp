#include "vcfan/projectivity.hpp"

#include <algorithm>

namespace vcfan {

bool lp_is_feasible(const LPResult& r) { return std::holds_alternative<LPFeasible>(r); }

StrictLPSystem build_lp(const Fan& f) {
  if (!is_nonsingular(f) || !is_complete(f))
    throw std::invalid_argument("build_lp: fan must be complete and nonsingular");
  int n = f.dim();
  int m = f.rays.cols();
  StrictLPSystem sys;
  sys.num_vars = m;
  for (const auto& facet : f.complex.facets()) {
    IntMatrix q = f.facet_matrix(facet);
    RationalMatrix qinv = inverse_rational(q);
    if (!qinv.is_integral())
      throw std::logic_error("build_lp: facet inverse is not integral");
    IntMatrix u = qinv.to_int();  // row j is u_j for the j-th ray of the facet
    for (int i = 1; i <= m; ++i) {
      if (facet.count(i)) continue;
      LPConstraint con;
      con.coeffs.assign(m, Int(0));
      con.facet = facet;
      con.missing_ray = i;
      IntVector vi = f.ray(i);
      int j = 0;
      for (int vertex : facet) {
        Int dot(0);
        for (int t = 0; t < n; ++t) dot += u(j, t) * vi[t];
        con.coeffs[vertex - 1] += dot;
        ++j;
      }
      con.coeffs[i - 1] -= 1;
      sys.constraints.push_back(std::move(con));
    }
  }
  return sys;
}

namespace {

// Phase-1 simplex in standard form.
//
// Variables: psi split into x+ , x- (2m), one slack per row, one artificial t.
// Row r is stored as  -c_r x+ + c_r x- + s_r - t = -1  (i.e. c_r x >= 1 with
// slack s_r >= 0 and the single artificial t); minimize t.  Pivoting t in at
// row 0 gives the feasible degenerate start t = 1, s = 0.  Bland's rule
// guarantees termination.
struct Simplex {
  int rows, cols;                 // cols = 2m + rows + 1 (t is the last column)
  std::vector<RatVector> tab;     // rows x (cols + 1), last entry is rhs
  RatVector cost;                 // reduced-cost row, last entry = -objective
  std::vector<int> basis;

  explicit Simplex(const StrictLPSystem& sys) {
    int m = sys.num_vars;
    rows = int(sys.constraints.size());
    cols = 2 * m + rows + 1;
    tab.assign(rows, RatVector(cols + 1, Rat(0)));
    for (int r = 0; r < rows; ++r) {
      const IntVector& c = sys.constraints[r].coeffs;
      for (int j = 0; j < m; ++j) {
        if (c[j] == 0) continue;
        tab[r][j] = Rat(-c[j]);
        tab[r][m + j] = Rat(c[j]);
      }
      tab[r][2 * m + r] = 1;   // slack
      tab[r][cols - 1] = -1;   // artificial
      tab[r][cols] = -1;       // rhs
    }
    cost.assign(cols + 1, Rat(0));
    cost[cols - 1] = 1;  // minimize t
    basis.assign(rows, 0);
    for (int r = 0; r < rows; ++r) basis[r] = 2 * m + r;
    pivot(0, cols - 1);
  }

  void pivot(int r, int c) {
    Rat p = tab[r][c];
    for (int j = 0; j <= cols; ++j) tab[r][j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || tab[i][c] == 0) continue;
      Rat f = tab[i][c];
      for (int j = 0; j <= cols; ++j) tab[i][j] -= f * tab[r][j];
    }
    if (cost[c] != 0) {
      Rat f = cost[c];
      for (int j = 0; j <= cols; ++j) cost[j] -= f * tab[r][j];
    }
    basis[r] = c;
  }

  // returns the optimal objective value (min t)
  Rat solve() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols; ++j)
        if (cost[j] < 0) { enter = j; break; }  // Bland: lowest index
      if (enter < 0) break;
      int leave = -1;
      Rat best;
      for (int i = 0; i < rows; ++i) {
        if (tab[i][enter] <= 0) continue;
        Rat ratio = tab[i][cols] / tab[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) throw std::logic_error("simplex: phase-1 objective unbounded");
      pivot(leave, enter);
    }
    return -cost[cols];
  }
};

}  // namespace

LPResult lp_feasible(const StrictLPSystem& sys) {
  int m = sys.num_vars;
  int rows = int(sys.constraints.size());
  if (rows == 0) return LPFeasible{RatVector(m, Rat(0))};
  Simplex sx(sys);
  Rat opt = sx.solve();
  if (opt == 0) {
    RatVector x(m, Rat(0));
    for (int r = 0; r < rows; ++r) {
      int b = sx.basis[r];
      if (b < m) x[b] += sx.tab[r][sx.cols];
      else if (b < 2 * m) x[b - m] -= sx.tab[r][sx.cols];
    }
    for (const auto& con : sys.constraints) {
      Rat lhs(0);
      for (int j = 0; j < m; ++j)
        if (con.coeffs[j] != 0) lhs += Rat(con.coeffs[j]) * x[j];
      if (lhs < 1) throw std::logic_error("lp_feasible: witness fails a constraint");
    }
    return LPFeasible{x};
  }
  // Farkas certificate y = c_B B^{-1} read off the slack columns: the tableau
  // column of slack r holds -B^{-1} e_r, and the reduced cost there is y_r.
  RatVector y(rows, Rat(0));
  for (int r = 0; r < rows; ++r) y[r] = sx.cost[2 * m + r];
  Rat total(0);
  for (int r = 0; r < rows; ++r) {
    if (y[r] < 0) throw std::logic_error("lp_feasible: negative Farkas multiplier");
    total += y[r];
  }
  if (total <= 0) throw std::logic_error("lp_feasible: Farkas certificate has zero mass");
  for (int j = 0; j < m; ++j) {
    Rat s(0);
    for (int r = 0; r < rows; ++r)
      if (sys.constraints[r].coeffs[j] != 0) s += y[r] * Rat(sys.constraints[r].coeffs[j]);
    if (s != 0) throw std::logic_error("lp_feasible: Farkas combination is nonzero");
  }
  return LPInfeasible{y};
}

bool fourier_motzkin_feasible(const StrictLPSystem& sys) {
  // rows of (coeffs | rhs) meaning coeffs . x >= rhs
  std::vector<RatVector> rows;
  for (const auto& con : sys.constraints) {
    RatVector r(sys.num_vars + 1, Rat(0));
    for (int j = 0; j < sys.num_vars; ++j) r[j] = Rat(con.coeffs[j]);
    r[sys.num_vars] = 1;
    rows.push_back(r);
  }
  const size_t row_cap = 200000;
  for (int v = 0; v < sys.num_vars; ++v) {
    std::vector<RatVector> pos, neg, zero;
    for (auto& r : rows) {
      if (r[v] > 0) pos.push_back(r);
      else if (r[v] < 0) neg.push_back(r);
      else zero.push_back(r);
    }
    std::vector<RatVector> next = zero;
    if (pos.size() * neg.size() + zero.size() > row_cap)
      throw std::runtime_error("fourier_motzkin_feasible: row cap exceeded");
    for (const auto& p : pos)
      for (const auto& q : neg) {
        // eliminate x_v: p/p_v + (-q)/q_v scaled to clear the variable
        RatVector r(sys.num_vars + 1, Rat(0));
        for (int j = 0; j <= sys.num_vars; ++j) r[j] = p[j] / p[v] - q[j] / q[v];
        next.push_back(r);
      }
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (r[sys.num_vars] > 0) return false;  // 0 >= positive
  return true;
}

bool is_projective(const VcPair& p) {
  if (p.n < 3) throw std::invalid_argument("is_projective: requires n >= 3");
  TypeTag tag = classify_pair(p);
  bool rule = true;
  if (tag.type_index == 2) {
    int ones = 0;
    IntVector seq(p.n);
    seq[0] = tag.canonical_a(0, p.n - 1);
    for (int i = 1; i < p.n; ++i) seq[i] = tag.canonical_a(i, i - 1);
    for (const Int& s : seq)
      if (s == 1) ++ones;
    rule = ones < 3;
  }
  LPResult res = lp_feasible(build_lp(fan_from_pair(p)));
  bool lp = lp_is_feasible(res);
  if (lp != rule)
    throw std::logic_error("is_projective: LP decision disagrees with the closed-form rule");
  return lp;
}

SupportFunction psi_type0(const VcPair& p) {
  TypeTag tag = classify_pair(p);
  if (tag.type_index != 0) throw std::invalid_argument("psi_type0: pair is not of Type 0");
  int n = p.n;
  Int maxb(0);
  for (const Int& x : p.b) maxb = std::max(maxb, Int(abs(x)));
  SupportFunction psi;
  psi.values.assign(2 * n + 1, Rat(-1));
  psi.values[2 * n] = make_rat(Int(-n * (n - 1)) * maxb, Int(2));
  return psi;
}

SupportFunction psi_type3(const VcPair& p) {
  int n = p.n;
  // expects the cyclic normal form with the parameter at (1, n)
  IntVector seq(n);
  seq[0] = p.a(0, n - 1);
  for (int i = 1; i < n; ++i) seq[i] = p.a(i, i - 1);
  for (int i = 1; i < n; ++i)
    if (seq[i] != -1)
      throw std::invalid_argument("psi_type3: pair is not in the Type 3 normal form");
  Int a = seq[0];
  if (a == 0 || a == -1)
    throw std::invalid_argument("psi_type3: no certificate for a in {0, -1}");
  SupportFunction psi;
  psi.values.assign(2 * n + 1, Rat(-1));
  psi.values[2 * n - 1] = Rat(Int(-n) * abs(a));  // psi(a_n)
  psi.values[2 * n] = Rat(-(n - 1));              // psi(b)
  return psi;
}

bool verify_psi(const Fan& f, const SupportFunction& psi) {
  int n = f.dim();
  int m = f.rays.cols();
  if (int(psi.values.size()) != m) throw DimensionError("verify_psi: value count mismatch");
  for (const auto& facet : f.complex.facets()) {
    IntMatrix q = f.facet_matrix(facet);
    RationalMatrix qinv = inverse_rational(q);
    // psi_sigma = sum_j psi(v_j) u_j over the facet's rays
    RatVector psi_sigma(n, Rat(0));
    int j = 0;
    for (int vertex : facet) {
      for (int t = 0; t < n; ++t) psi_sigma[t] += psi.values[vertex - 1] * qinv(j, t);
      ++j;
    }
    for (int i = 1; i <= m; ++i) {
      if (facet.count(i)) continue;
      IntVector vi = f.ray(i);
      Rat lhs(0);
      for (int t = 0; t < n; ++t) lhs += psi_sigma[t] * Rat(vi[t]);
      if (!(lhs > psi.values[i - 1])) return false;
    }
  }
  return true;
}

}  // namespace vcfan
