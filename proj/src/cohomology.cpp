#include "vcfan/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vcfan {

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (size_t i = 0; i < ma.size(); ++i) m[i] = ma[i] + mb[i];
      Int& c = out[m];
      c += ca * cb;
      if (c == 0) out.erase(m);
    }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b) {
    Int& v = out[m];
    v += c;
    if (v == 0) out.erase(m);
  }
  return out;
}

Poly poly_scale(const Poly& a, const Int& c) {
  Poly out;
  if (c == 0) return out;
  for (const auto& [m, v] : a) out[m] = v * c;
  return out;
}

int poly_degree(const Poly& p) {
  int d = -1;
  for (const auto& [m, c] : p) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

Poly poly_substitute(const Poly& p, const IntMatrix& phi) {
  int v = phi.rows();
  std::vector<Poly> forms(v);
  for (int i = 0; i < v; ++i) {
    Poly f;
    for (int j = 0; j < v; ++j) {
      if (phi(j, i) == 0) continue;
      Monomial m(v, 0);
      m[j] = 1;
      f[m] = phi(j, i);
    }
    forms[i] = f;
  }
  Poly out;
  for (const auto& [m, c] : p) {
    Poly term;
    term[Monomial(v, 0)] = c;
    for (int i = 0; i < v; ++i)
      for (int e = 0; e < m[i]; ++e) term = poly_mul(term, forms[i]);
    out = poly_add(out, term);
  }
  return out;
}

namespace {

void gen_monomials(int vars, int degree, Monomial& cur, int pos, std::vector<Monomial>& out) {
  if (pos == vars - 1) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = e;
    gen_monomials(vars, degree - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

std::vector<Monomial> monomials_of_degree(int vars, int degree) {
  std::vector<Monomial> out;
  Monomial cur(vars, 0);
  gen_monomials(vars, degree, cur, 0, out);
  return out;
}

struct EliminationOverflow : std::runtime_error {
  EliminationOverflow() : std::runtime_error("64-bit elimination overflow") {}
};

// scalar helpers: checked arithmetic for long, plain for Int
inline long scalar_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw EliminationOverflow();
  return r;
}
inline long scalar_addmul(long acc, long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r) || __builtin_add_overflow(acc, r, &acc))
    throw EliminationOverflow();
  return acc;
}
inline Int scalar_mul(const Int& a, const Int& b) { return a * b; }
inline Int scalar_addmul(const Int& acc, const Int& a, const Int& b) { return acc + a * b; }

inline void scalar_gcdext(long p, long v, long& g, long& x, long& y) {
  Int gg, xx, yy;
  Int pp(p), vv(v);
  mpz_gcdext(gg.get_mpz_t(), xx.get_mpz_t(), yy.get_mpz_t(), pp.get_mpz_t(), vv.get_mpz_t());
  if (!gg.fits_slong_p() || !xx.fits_slong_p() || !yy.fits_slong_p())
    throw EliminationOverflow();
  g = gg.get_si();
  x = xx.get_si();
  y = yy.get_si();
}
inline void scalar_gcdext(const Int& p, const Int& v, Int& g, Int& x, Int& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t(), v.get_mpz_t());
}

template <typename T>
struct Row {
  std::vector<std::pair<int, T>> entries;  // sorted by column, values nonzero
};

template <typename T>
void row_addmul(Row<T>& dst, const Row<T>& src, const T& f) {
  if (f == 0) return;
  std::vector<std::pair<int, T>> merged;
  merged.reserve(dst.entries.size() + src.entries.size());
  auto it = dst.entries.begin();
  auto jt = src.entries.begin();
  while (it != dst.entries.end() || jt != src.entries.end()) {
    if (jt == src.entries.end() || (it != dst.entries.end() && it->first < jt->first)) {
      merged.push_back(std::move(*it));
      ++it;
    } else if (it == dst.entries.end() || jt->first < it->first) {
      T v = scalar_mul(f, jt->second);
      if (v != 0) merged.emplace_back(jt->first, std::move(v));
      ++jt;
    } else {
      T v = scalar_addmul(it->second, f, jt->second);
      if (v != 0) merged.emplace_back(it->first, std::move(v));
      ++it;
      ++jt;
    }
  }
  dst.entries = std::move(merged);
}

// Row echelon over Z: pivot column = least column of the stored row, pivot
// value positive.  Non-unit pivots are allowed; gcd-combining keeps every
// intermediate integral.
template <typename T>
struct Echelon {
  std::map<int, Row<T>> pivots;

  void insert(Row<T> row) {
    while (!row.entries.empty()) {
      int c = row.entries.front().first;
      T v = row.entries.front().second;
      auto it = pivots.find(c);
      if (it == pivots.end()) {
        if (v < 0)
          for (auto& [col, val] : row.entries) val = -val;
        pivots.emplace(c, std::move(row));
        return;
      }
      const T& p = it->second.entries.front().second;
      if (v % p == 0) {
        row_addmul(row, it->second, T(-(v / p)));
        continue;
      }
      // combine to gcd at column c, keep the reduced remainder going
      T g, x, y;
      scalar_gcdext(p, v, g, x, y);
      Row<T> combo;
      row_addmul(combo, it->second, x);
      row_addmul(combo, row, y);
      Row<T> rem;
      row_addmul(rem, row, T(p / g));
      row_addmul(rem, it->second, T(-(v / g)));
      it->second = std::move(combo);
      row = std::move(rem);
    }
  }

  bool all_unit() const {
    for (const auto& [c, r] : pivots)
      if (r.entries.front().second != 1) return false;
    return true;
  }
};

IntVector poly_to_vec(const Poly& p, const std::map<Monomial, int>& index, int m) {
  IntVector v(m, Int(0));
  for (const auto& [mono, c] : p) {
    auto it = index.find(mono);
    if (it == index.end()) throw std::logic_error("poly_to_vec: monomial of wrong degree");
    v[it->second] = c;
  }
  return v;
}

int rank_of_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  size_t m = rows[0].size();
  std::vector<RatVector> work;
  for (const auto& r : rows) {
    RatVector q(m);
    for (size_t j = 0; j < m; ++j) q[j] = Rat(r[j]);
    work.push_back(q);
  }
  int rank = 0;
  size_t col = 0;
  for (; col < m && rank < int(work.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < int(work.size()); ++i)
      if (work[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(work[rank], work[piv]);
    for (int i = rank + 1; i < int(work.size()); ++i) {
      if (work[i][col] == 0) continue;
      Rat f = work[i][col] / work[rank][col];
      for (size_t j = col; j < m; ++j) work[i][j] -= f * work[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

IntVector GradedPiece::reduce_to_free(const Poly& p) const {
  std::map<int, Int> work;
  for (const auto& [mono, c] : p) {
    auto it = monomial_index.find(mono);
    if (it == monomial_index.end()) throw std::logic_error("reduce: monomial of wrong degree");
    if (c != 0) work[it->second] = c;
  }
  IntVector residual(residual_columns.size(), Int(0));
  while (!work.empty()) {
    auto [c, v] = *work.begin();
    work.erase(work.begin());
    auto it = pivot_rows.find(c);
    if (it == pivot_rows.end()) {
      residual[residual_position.at(c)] = v;
      continue;
    }
    // unit pivot: subtract v * pivot row (first entry cancels)
    bool first = true;
    for (const auto& [col, pv] : it->second.entries) {
      if (first) { first = false; continue; }
      Int& w = work[col];
      w -= v * pv;
      if (w == 0) work.erase(col);
    }
  }
  if (!residual_v) return residual;
  // small Smith transform: coordinates are the trailing entries of r * V
  const IntMatrix& v = *residual_v;
  int total = v.rows();
  IntVector out(size_t(total - residual_rank), Int(0));
  for (int j = residual_rank; j < total; ++j) {
    Int s(0);
    for (int i = 0; i < total; ++i)
      if (residual[i] != 0) s += residual[i] * v(i, j);
    out[j - residual_rank] = s;
  }
  return out;
}

IntVector GradedPiece::coords(const Poly& p) const {
  IntVector f = reduce_to_free(p);
  int h = quotient_rank();
  if (h == 0) return {};
  RationalMatrix row(1, h);
  for (int j = 0; j < h; ++j) row(0, j) = Rat(f[j]);
  RationalMatrix out = row * basis_from_free;
  IntVector res(h);
  for (int j = 0; j < h; ++j) {
    if (out(0, j).get_den() != 1) throw std::logic_error("coords: non-integral coordinates");
    res[j] = out(0, j).get_num();
  }
  return res;
}

namespace {

template <typename T>
std::map<int, Row<T>> eliminate_slice(const GradedPiece& piece, int degree,
                                      const std::vector<Poly>& relations,
                                      const std::vector<GradedPiece>& lower) {
  Echelon<T> ech;
  std::vector<Row<T>> rows;
  for (const Poly& g : relations) {
    int d = poly_degree(g);
    if (d < 0 || d > degree) continue;
    for (const Monomial& mu : lower[degree - d].monomials) {
      Row<T> row;
      for (const auto& [mono, c] : g) {
        Monomial prod(mono.size());
        for (size_t i = 0; i < mono.size(); ++i) prod[i] = mono[i] + mu[i];
        if constexpr (std::is_same_v<T, long>) {
          if (!c.fits_slong_p()) throw EliminationOverflow();
          row.entries.emplace_back(piece.monomial_index.at(prod), c.get_si());
        } else {
          row.entries.emplace_back(piece.monomial_index.at(prod), c);
        }
      }
      std::sort(row.entries.begin(), row.entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
  }
  // inserting in leading-column order keeps reduction chains short
  std::sort(rows.begin(), rows.end(), [](const Row<T>& a, const Row<T>& b) {
    return a.entries.front().first < b.entries.front().first;
  });
  for (Row<T>& r : rows) ech.insert(std::move(r));
  return std::move(ech.pivots);
}

GradedPiece build_piece(int degree, int nvars, int top, bool has_x, bool pair_ring,
                        const std::vector<Poly>& relations,
                        const std::vector<GradedPiece>& lower) {
  GradedPiece piece;
  piece.degree = degree;
  piece.monomials = monomials_of_degree(nvars, degree);
  for (int i = 0; i < int(piece.monomials.size()); ++i)
    piece.monomial_index[piece.monomials[i]] = i;
  int m = int(piece.monomials.size());

  std::map<int, SparseRow> pivots;
  try {
    for (auto& [c, row] : eliminate_slice<long>(piece, degree, relations, lower)) {
      SparseRow r;
      for (const auto& [col, v] : row.entries) r.entries.emplace_back(col, Int(v));
      pivots.emplace(c, std::move(r));
    }
  } catch (const EliminationOverflow&) {
    for (auto& [c, row] : eliminate_slice<Int>(piece, degree, relations, lower)) {
      SparseRow r;
      r.entries = std::move(row.entries);
      pivots.emplace(c, std::move(r));
    }
  }
  piece.rank = int(pivots.size());
  bool all_unit = true;
  for (const auto& [c, r] : pivots)
    if (r.entries.front().second != 1) all_unit = false;

  if (all_unit) {
    piece.divisors.assign(size_t(piece.rank), Int(1));
    piece.torsion_free = true;
    piece.pivot_rows = std::move(pivots);
    for (int c = 0; c < m; ++c)
      if (!piece.pivot_rows.count(c)) {
        piece.free_position[c] = int(piece.free_columns.size());
        piece.free_columns.push_back(c);
      }
  } else {
    // a non-unit pivot survived; fall back to a dense Smith normal form of
    // the echelon slice
    IntMatrix e(piece.rank, m);
    int r = 0;
    for (const auto& [c, row] : pivots) {
      for (const auto& [col, v] : row.entries) e(r, col) = v;
      ++r;
    }
    SmithNormalForm snf = smith_normal_form(e);
    piece.divisors.clear();
    for (int i = 0; i < std::min(snf.d.rows(), snf.d.cols()); ++i)
      if (snf.d(i, i) != 0) piece.divisors.push_back(snf.d(i, i));
    if (int(piece.divisors.size()) != piece.rank)
      throw std::logic_error("build_piece: rank mismatch in Smith fallback");
    piece.torsion_free = true;
    for (const Int& d : piece.divisors)
      if (d != 1) piece.torsion_free = false;
    piece.snf_v = snf.v;
  }

  int h = piece.quotient_rank();
  // chosen basis: square-free monomials plus x x_1^{k-1} when they form a
  // Z-basis (the paper's basis in degrees 2 and n), otherwise the free columns
  std::vector<int> candidate;
  if (degree == 0) {
    candidate = {0};
  } else {
    if (!(pair_ring && degree == top)) {
      for (int i = 0; i < m; ++i) {
        const Monomial& mono = piece.monomials[i];
        bool squarefree_xvars = true;
        int nx = has_x ? nvars - 1 : nvars;
        for (int v = 0; v < nx; ++v)
          if (mono[v] > 1) squarefree_xvars = false;
        bool xpart_zero = !has_x || mono[nvars - 1] == 0;
        if (squarefree_xvars && xpart_zero) candidate.push_back(i);
      }
    }
    if (has_x && pair_ring) {
      Monomial xlead(nvars, 0);
      xlead[0] = degree - 1;
      xlead[nvars - 1] = 1;
      candidate.push_back(piece.monomial_index.at(xlead));
    }
  }

  auto try_basis = [&](const std::vector<int>& idx) -> bool {
    if (int(idx.size()) != h) return false;
    RationalMatrix b(h, h);
    for (int i = 0; i < h; ++i) {
      Poly mono;
      mono[piece.monomials[idx[i]]] = 1;
      IntVector f = piece.reduce_to_free(mono);
      for (int j = 0; j < h; ++j) b(i, j) = Rat(f[j]);
    }
    // unimodular over Z <=> invertible with integral inverse
    try {
      IntMatrix bi(h, h);
      for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
          if (b(i, j).get_den() != 1) return false;
          bi(i, j) = b(i, j).get_num();
        }
      if (!is_unimodular(bi)) return false;
      piece.basis = idx;
      piece.basis_from_free = inverse_rational(bi);
      return true;
    } catch (const SingularMatrixError&) {
      return false;
    }
  };

  if (!try_basis(candidate)) {
    if (pair_ring && (degree == 2 || degree == top))
      throw std::logic_error("build_piece: the square-free basis fails in a named degree");
    std::vector<int> fallback;
    if (piece.snf_v) {
      // greedy monomial selection against the dense coordinates
      std::vector<IntVector> picked;
      for (int i = 0; i < m && int(fallback.size()) < h; ++i) {
        Poly mono;
        mono[piece.monomials[i]] = 1;
        IntVector f = piece.reduce_to_free(mono);
        std::vector<IntVector> test = picked;
        test.push_back(f);
        if (rank_of_rows(test) == int(test.size())) {
          picked.push_back(f);
          fallback.push_back(i);
        }
      }
    } else {
      fallback = piece.free_columns;
    }
    if (!try_basis(fallback))
      throw std::logic_error("build_piece: no unimodular monomial basis found");
  }
  return piece;
}

}  // namespace

std::vector<std::string> GradedRing::generator_labels() const {
  std::vector<std::string> out;
  int nx = has_x ? nvars - 1 : nvars;
  for (int i = 1; i <= nx; ++i) out.push_back("x" + std::to_string(i));
  if (has_x) out.push_back("x");
  return out;
}

const GradedPiece& GradedRing::piece(int k) const {
  if (k < 0 || k > top_degree) throw std::out_of_range("GradedRing::piece: degree out of range");
  return pieces[k];
}

std::vector<Int> GradedRing::betti() const {
  std::vector<Int> out;
  for (const auto& p : pieces) out.push_back(p.quotient_rank());
  return out;
}

bool GradedRing::torsion_free() const {
  for (const auto& p : pieces)
    if (!p.torsion_free) return false;
  return true;
}

namespace {

GradedRing build_ring(int nvars, int top, bool has_x, bool pair_ring,
                      std::vector<Poly> relations, std::optional<VcPair> src) {
  GradedRing r;
  r.nvars = nvars;
  r.top_degree = top;
  r.has_x = has_x;
  r.relations = std::move(relations);
  r.source_pair = std::move(src);
  for (int k = 0; k <= top; ++k)
    r.pieces.push_back(build_piece(k, nvars, top, has_x, pair_ring, r.relations, r.pieces));
  return r;
}

}  // namespace

GradedRing presentation_from_pair(const VcPair& p) {
  ValidationResult v = validate_pair(p);
  if (!v.ok) throw std::invalid_argument("presentation_from_pair: invalid pair: " + v.message);
  int n = p.n;
  int vars = n + 1;
  std::vector<Poly> rels;
  for (int i = 0; i < n; ++i) {
    Poly li;
    for (int j = 0; j < n; ++j) {
      if (p.a(i, j) == 0) continue;
      Monomial m(vars, 0);
      m[j] = 1;
      li[m] = p.a(i, j);
    }
    if (p.b[i] != 0) {
      Monomial m(vars, 0);
      m[n] = 1;
      li[m] = p.b[i];
    }
    Poly xi;
    Monomial mi(vars, 0);
    mi[i] = 1;
    xi[mi] = 1;
    Poly xm;
    Monomial mx(vars, 0);
    mx[n] = 1;
    xm[mx] = 1;
    rels.push_back(poly_mul(xi, li));
    rels.push_back(poly_mul(xm, li));
  }
  Poly prod;
  Monomial all(vars, 0);
  for (int i = 0; i < n; ++i) all[i] = 1;
  prod[all] = 1;
  rels.push_back(prod);
  return build_ring(vars, n, true, true, std::move(rels), p);
}

GradedRing bott_presentation(const IntMatrix& a_bott) {
  int n = a_bott.rows();
  if (!a_bott.square()) throw DimensionError("bott_presentation: non-square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && a_bott(i, j) != 1)
        throw std::invalid_argument("bott_presentation: diagonal entries must be 1");
      if (j > i && a_bott(i, j) != 0)
        throw std::invalid_argument("bott_presentation: matrix not lower triangular");
    }
  std::vector<Poly> rels;
  for (int i = 0; i < n; ++i) {
    Poly li;
    for (int j = 0; j <= i; ++j) {
      if (a_bott(i, j) == 0) continue;
      Monomial m(n, 0);
      m[j] = 1;
      li[m] = a_bott(i, j);
    }
    Poly xi;
    Monomial mi(n, 0);
    mi[i] = 1;
    xi[mi] = 1;
    rels.push_back(poly_mul(xi, li));
  }
  return build_ring(n, n, false, false, std::move(rels), std::nullopt);
}

GradedRing stanley_reisner_presentation(const VcPair& p) {
  ValidationResult v = validate_pair(p);
  if (!v.ok) throw std::invalid_argument("stanley_reisner_presentation: invalid pair");
  int n = p.n;
  int vars = 2 * n + 1;
  Fan f = fan_from_pair(p);
  std::vector<Poly> rels;
  // linear relations sum_i <e_k, v_i> mu_i
  for (int k = 0; k < n; ++k) {
    Poly lin;
    for (int i = 0; i < vars; ++i) {
      if (f.rays(k, i) == 0) continue;
      Monomial m(vars, 0);
      m[i] = 1;
      lin[m] = f.rays(k, i);
    }
    rels.push_back(lin);
  }
  for (const auto& nf : f.complex.minimal_nonfaces()) {
    Poly mono;
    Monomial m(vars, 0);
    for (int vtx : nf) m[vtx - 1] = 1;
    mono[m] = 1;
    rels.push_back(mono);
  }
  return build_ring(vars, n, false, false, std::move(rels), p);
}

const GradedPiece& graded_piece(const GradedRing& r, int k) { return r.piece(k); }

RingElement element_from_poly(const GradedRing& r, const Poly& p) {
  int d = poly_degree(p);
  if (d < 0) return RingElement{0, IntVector(1, Int(0))};
  return RingElement{d, r.piece(d).coords(p)};
}

Poly poly_from_element(const GradedRing& r, const RingElement& e) {
  const GradedPiece& piece = r.piece(e.degree);
  Poly p;
  for (size_t i = 0; i < e.coords.size(); ++i) {
    if (e.coords[i] == 0) continue;
    p[piece.basis_monomial(int(i))] = e.coords[i];
  }
  return p;
}

RingElement multiply(const GradedRing& r, const RingElement& u, const RingElement& v) {
  int d = u.degree + v.degree;
  if (d > r.top_degree) throw std::invalid_argument("multiply: degree overflow");
  Poly p = poly_mul(poly_from_element(r, u), poly_from_element(r, v));
  return RingElement{d, r.piece(d).coords(p)};
}

Int top_power_x(const GradedRing& r) {
  if (!r.has_x) throw std::invalid_argument("top_power_x: ring has no x class");
  int n = r.top_degree;
  Poly xn;
  Monomial m(r.nvars, 0);
  m[r.nvars - 1] = n;
  xn[m] = 1;
  IntVector c = r.piece(n).coords(xn);
  if (c.size() != 1) throw std::logic_error("top_power_x: top piece is not rank 1");
  return c[0];
}

int ann_rank(const GradedRing& r, const RingElement& z) {
  if (z.degree != 1) throw std::invalid_argument("ann_rank: z must have degree 2 (one in k)");
  const GradedPiece& p1 = r.piece(1);
  int q = p1.quotient_rank();
  Poly zp = poly_from_element(r, z);
  std::vector<IntVector> rows;
  for (int i = 0; i < q; ++i) {
    Poly gi;
    gi[p1.basis_monomial(i)] = 1;
    rows.push_back(r.piece(2).coords(poly_mul(zp, gi)));
  }
  return q - rank_of_rows(rows);
}

namespace {

// kernel of a rational matrix (rows x cols), returned as primitive integer
// column vectors
std::vector<IntVector> rat_kernel(const std::vector<RatVector>& rows, int cols) {
  std::vector<RatVector> work = rows;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < int(work.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < int(work.size()); ++i)
      if (work[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(work[rank], work[piv]);
    Rat pv = work[rank][col];
    for (int j = 0; j < cols; ++j) work[rank][j] /= pv;
    for (int i = 0; i < int(work.size()); ++i) {
      if (i == rank || work[i][col] == 0) continue;
      Rat f = work[i][col];
      for (int j = 0; j < cols; ++j) work[i][j] -= f * work[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (int freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    RatVector v(cols, Rat(0));
    v[freec] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -work[i][freec];
    Int lcm(1);
    for (const Rat& q : v) lcm = Int(lcm * q.get_den() / gcd(lcm, Int(q.get_den())));
    IntVector iv(cols);
    for (int j = 0; j < cols; ++j) {
      Rat scaled = v[j] * Rat(lcm);
      iv[j] = scaled.get_num();
    }
    Int g = vector_gcd(iv);
    if (g > 1)
      for (Int& x : iv) x /= g;
    basis.push_back(iv);
  }
  return basis;
}

std::vector<RatVector> to_rat_rows(const std::vector<IntVector>& rows) {
  std::vector<RatVector> out;
  for (const auto& r : rows) {
    RatVector q(r.size());
    for (size_t j = 0; j < r.size(); ++j) q[j] = Rat(r[j]);
    out.push_back(q);
  }
  return out;
}

// basis of the intersection of two column spaces (as integer row-lists of the
// spanning vectors)
std::vector<IntVector> space_intersection(const std::vector<IntVector>& a,
                                          const std::vector<IntVector>& b, int dim) {
  if (a.empty() || b.empty()) return {};
  // solve [A | -B] (alpha; beta) = 0, intersection vectors are A alpha
  int cols = int(a.size() + b.size());
  std::vector<RatVector> rows(dim, RatVector(cols, Rat(0)));
  for (int i = 0; i < dim; ++i) {
    for (size_t j = 0; j < a.size(); ++j) rows[i][j] = Rat(a[j][i]);
    for (size_t j = 0; j < b.size(); ++j) rows[i][a.size() + j] = Rat(-b[j][i]);
  }
  std::vector<IntVector> kernel = rat_kernel(rows, cols);
  std::vector<IntVector> combos;
  for (const auto& k : kernel) {
    IntVector v(dim, Int(0));
    for (size_t j = 0; j < a.size(); ++j)
      for (int i = 0; i < dim; ++i) v[i] += k[j] * a[j][i];
    bool zero = true;
    for (const Int& x : v)
      if (x != 0) zero = false;
    if (!zero) combos.push_back(v);
  }
  // re-extract an independent spanning set
  std::vector<IntVector> basis;
  for (const auto& v : combos) {
    std::vector<IntVector> test = basis;
    test.push_back(v);
    if (rank_of_rows(test) == int(test.size())) basis.push_back(v);
  }
  return basis;
}

IntVector primitive_normalized(IntVector v) {
  Int g = vector_gcd(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  for (const Int& x : v) {
    if (x > 0) break;
    if (x < 0) {
      for (Int& y : v) y = -y;
      break;
    }
  }
  return v;
}

}  // namespace

RingElement find_x_class(const GradedRing& r) {
  if (!r.has_x) throw std::invalid_argument("find_x_class: ring has no exceptional class");
  int n = r.top_degree;
  if (n < 3) throw std::invalid_argument("find_x_class: requires n >= 3");
  const GradedPiece& p1 = r.piece(1);
  int q = p1.quotient_rank();
  int h2 = r.piece(2).quotient_rank();
  // multiplication maps N_j: coords(gen_j * gen_i) as columns
  std::vector<IntMatrix> mult(q, IntMatrix(h2, q));
  for (int j = 0; j < q; ++j) {
    Poly gj;
    gj[p1.basis_monomial(j)] = 1;
    for (int i = 0; i < q; ++i) {
      Poly gi;
      gi[p1.basis_monomial(i)] = 1;
      IntVector c = r.piece(2).coords(poly_mul(gj, gi));
      for (int t = 0; t < h2; ++t) mult[j](t, i) = c[t];
    }
  }
  auto colspace = [&](int j) {
    std::vector<IntVector> cols;
    for (int i = 0; i < q; ++i) {
      IntVector col = mult[j].column(i);
      std::vector<IntVector> test = cols;
      test.push_back(col);
      if (rank_of_rows(test) == int(test.size())) cols.push_back(col);
    }
    return cols;
  };
  std::vector<std::vector<IntVector>> spaces(q);
  for (int j = 0; j < q; ++j) spaces[j] = colspace(j);

  std::vector<IntVector> deltas;
  auto push_delta = [&](const std::vector<IntVector>& space) {
    if (space.size() == 1) {
      IntVector d = primitive_normalized(space[0]);
      for (const auto& e : deltas)
        if (e == d) return;
      deltas.push_back(d);
    }
  };
  for (int j = 0; j < q; ++j) push_delta(spaces[j]);
  for (int j = 0; j < q; ++j)
    for (int k = j + 1; k < q; ++k) {
      auto inter = space_intersection(spaces[j], spaces[k], h2);
      push_delta(inter);
      for (int l = k + 1; l < q; ++l) push_delta(space_intersection(inter, spaces[l], h2));
    }

  std::vector<IntVector> candidates;
  auto consider = [&](const IntVector& z) {
    IntVector zn = primitive_normalized(z);
    bool zero = true;
    for (const Int& x : zn)
      if (x != 0) zero = false;
    if (zero) return;
    for (const auto& c : candidates)
      if (c == zn) return;
    RingElement ze{1, zn};
    if (ann_rank(r, ze) == n) candidates.push_back(zn);
  };

  for (const auto& delta : deltas) {
    int pstar = -1;
    for (int i = 0; i < h2; ++i)
      if (delta[i] != 0) { pstar = i; break; }
    if (pstar < 0) continue;
    // constraints: for all j, N_j z lies on the line Q delta
    std::vector<RatVector> rows;
    for (int j = 0; j < q; ++j)
      for (int t = 0; t < h2; ++t) {
        if (t == pstar) continue;
        RatVector row(q);
        for (int i = 0; i < q; ++i)
          row[i] = Rat(delta[pstar] * mult[j](t, i) - delta[t] * mult[j](pstar, i));
        rows.push_back(row);
      }
    std::vector<IntVector> kernel = rat_kernel(rows, q);
    if (kernel.size() == 1) consider(kernel[0]);
  }

  if (candidates.empty()) {
    // last resort: small exhaustive search
    std::vector<int> cur(q, -2);
    std::function<void(int)> rec = [&](int pos) {
      if (!candidates.empty()) return;
      if (pos == q) {
        IntVector z(q);
        for (int i = 0; i < q; ++i) z[i] = cur[i];
        consider(z);
        return;
      }
      for (int v = -2; v <= 2; ++v) {
        cur[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  if (candidates.empty())
    throw std::logic_error("find_x_class: no primitive class with annihilator rank n");
  for (size_t i = 1; i < candidates.size(); ++i)
    if (candidates[i] != candidates[0])
      throw std::logic_error("find_x_class: annihilator-rank-n class is not unique");
  return RingElement{1, candidates[0]};
}

Int ring_det_invariant(const GradedRing& r) {
  if (r.top_degree < 3) throw std::invalid_argument("ring_det_invariant: requires n >= 3");
  RingElement z = find_x_class(r);
  Poly zp = poly_from_element(r, z);
  Poly power;
  power[Monomial(r.nvars, 0)] = 1;
  for (int i = 0; i < r.top_degree; ++i) power = poly_mul(power, zp);
  IntVector c = r.piece(r.top_degree).coords(power);
  if (c.size() != 1) throw std::logic_error("ring_det_invariant: top piece is not rank 1");
  if (c[0] == 0) return 0;
  Int t = abs(c[0]);
  Int root;
  int exact = mpz_root(root.get_mpz_t(), t.get_mpz_t(), unsigned(r.top_degree - 1));
  if (!exact)
    throw std::logic_error("ring_det_invariant: |x^n| is not a perfect (n-1)-th power");
  return root;
}

bool check_substitution_iso(const IntMatrix& phi, const GradedRing& src, const GradedRing& dst) {
  if (src.nvars != dst.nvars || phi.rows() != src.nvars || phi.cols() != src.nvars)
    throw DimensionError("check_substitution_iso: size mismatch");
  if (!is_unimodular(phi))
    throw std::invalid_argument("check_substitution_iso: substitution matrix is not unimodular");
  for (const Poly& g : src.relations) {
    Poly image = poly_substitute(g, phi);
    int d = poly_degree(image);
    if (d < 0) continue;
    IntVector c = dst.piece(d).coords(image);
    for (const Int& x : c)
      if (x != 0) return false;
  }
  return true;
}

IntMatrix type0_iso_map(const IntVector& b, const IntVector& b_prime) {
  int n = int(b.size());
  if (int(b_prime.size()) != n) throw DimensionError("type0_iso_map: size mismatch");
  auto weighted = [&](const IntVector& v) {
    Int s(0);
    for (int i = 1; i <= n - 1; ++i) s += Int(n - i) * v[i - 1];
    return s;
  };
  Int diff = weighted(b) - weighted(b_prime);
  if (diff % n != 0)
    throw std::invalid_argument(
        "type0_iso_map: sum (n-i) b_i differs mod n; compose with a rotation first");
  Int alpha = -diff / n;
  IntVector c(n);
  Int run(0);
  for (int i = 1; i <= n - 1; ++i) {
    run += b[i - 1] - b_prime[i - 1];
    c[i - 1] = run + alpha;
  }
  c[n - 1] = alpha;
  Int total(0);
  for (const Int& x : c) total += x;
  if (total != 0) throw std::logic_error("type0_iso_map: sum c_i != 0");
  for (int i = 1; i <= n; ++i) {
    Int prev = c[(i - 2 + n) % n];
    if (c[i - 1] - prev != b[i - 1] - b_prime[i - 1])
      throw std::logic_error("type0_iso_map: difference equations violated");
  }
  IntMatrix phi = IntMatrix::identity(n + 1);
  for (int i = 0; i < n; ++i) phi(n, i) = c[i];
  return phi;
}

IntMatrix type2_window_map(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("type2_window_map: window must satisfy 1 <= i < j <= n");
  IntMatrix phi = IntMatrix::identity(n + 1);
  for (int k = i; k <= j - 1; ++k) {
    phi(k - 1, k - 1) = -1;
    phi(n, k - 1) = -1;
  }
  return phi;
}

namespace {

// check alpha^2 = 0 in H^*/(x): the square must be a multiple of x x_1,
// i.e. all square-free basis coordinates vanish
bool isotropic_witness_ok(const GradedRing& r, const IntVector& c) {
  int n = r.top_degree;
  Poly alpha;
  for (int i = 0; i < n; ++i) {
    if (c[i] == 0) continue;
    Monomial m(r.nvars, 0);
    m[i] = 1;
    alpha[m] = c[i];
  }
  if (alpha.empty()) return false;
  const GradedPiece& p2 = r.piece(2);
  IntVector sq = p2.coords(poly_mul(alpha, alpha));
  for (int i = 0; i < p2.quotient_rank(); ++i) {
    const Monomial& m = p2.basis_monomial(i);
    if (m[r.nvars - 1] != 0) continue;  // the x x_1 coordinate is allowed
    if (sq[i] != 0) return false;
  }
  return true;
}

}  // namespace

std::optional<IntVector> isotropic_mod_x(const GradedRing& r) {
  if (!r.has_x || !r.source_pair)
    throw std::invalid_argument("isotropic_mod_x: requires a ring built from a pair");
  int n = r.top_degree;
  if (n < 3) throw std::invalid_argument("isotropic_mod_x: requires n >= 3");
  VcPair canon = canonical_representative(*r.source_pair);
  // permutation relating the stored pair to its canonical conjugate
  Permutation sigma(n);
  bool found = false;
  for (const auto& s : Permutation::all(n)) {
    if (permutation_conjugate(r.source_pair->a, s) == canon.a) {
      IntVector bs(n);
      for (int i = 1; i <= n; ++i) bs[i - 1] = r.source_pair->b[s.image(i) - 1];
      if (bs == canon.b) { sigma = s; found = true; break; }
    }
  }
  if (!found) throw std::logic_error("isotropic_mod_x: no conjugation to canonical form");
  auto transport = [&](const IntVector& c) {
    // witness over the canonical generators y_i = x_{sigma(i)}
    IntVector out(n, Int(0));
    for (int i = 1; i <= n; ++i) out[sigma.image(i) - 1] = c[i - 1];
    return out;
  };

  Int det = det_exact(canon.a);
  if (det == 1) {
    // x_1^2 = -b_1 x_1 x vanishes mod x
    IntVector c(n, Int(0));
    c[0] = 1;
    IntVector w = transport(c);
    if (!isotropic_witness_ok(r, w)) throw std::logic_error("isotropic_mod_x: x_1 check failed");
    return w;
  }
  // cyclic form with off-diagonal entries a_1..a_n: the square of
  // sum c_i x_i vanishes mod x iff c_i (a_i c_i - 2 c_{i-1}) = 0 for all i
  // (indices cyclic) and c_i c_j = 0 for non-adjacent pairs.  For n >= 4 the
  // support constraints force c = 0; for n = 3 solve the eight branch systems.
  if (n >= 4) return std::nullopt;
  IntVector seq(n);
  seq[0] = canon.a(0, n - 1);
  for (int i = 1; i < n; ++i) seq[i] = canon.a(i, i - 1);
  for (int branch = 0; branch < 8; ++branch) {
    std::vector<RatVector> rows;
    for (int i = 0; i < 3; ++i) {
      RatVector row(3, Rat(0));
      if (branch & (1 << i)) {
        row[i] = Rat(seq[i]);
        row[(i + 2) % 3] = Rat(-2);
      } else {
        row[i] = 1;
      }
      rows.push_back(row);
    }
    for (const IntVector& k : rat_kernel(rows, 3)) {
      IntVector w = transport(k);
      if (isotropic_witness_ok(r, w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace vcfan
