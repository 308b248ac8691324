#include "vcfan/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vcfan {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  int c = int(rows[0].size());
  IntMatrix m(int(rows.size()), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != c) throw DimensionError("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m(int(i), j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
  if (cols.empty()) return IntMatrix(0, 0);
  int r = int(cols[0].size());
  IntMatrix m(r, int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (int(cols[j].size()) != r) throw DimensionError("from_columns: ragged columns");
    for (int i = 0; i < r; ++i) m(i, int(j)) = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::row(int i) const {
  IntVector v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::column(int j) const {
  IntVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
  IntMatrix s(int(row_idx.size()), int(col_idx.size()));
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j) s(int(i), int(j)) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

IntMatrix IntMatrix::with_column_replaced(int j, const IntVector& col) const {
  if (int(col.size()) != rows_) throw DimensionError("with_column_replaced: length mismatch");
  IntMatrix m = *this;
  for (int i = 0; i < rows_; ++i) m(i, j) = col[i];
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? ";\n" : "]");
  }
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != int(v.size())) throw DimensionError("matrix * vector: dimensions differ");
  IntVector r(a.rows(), Int(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shapes differ");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference: shapes differ");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

RationalMatrix RationalMatrix::from_int(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix r(n, n);
  for (int i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

bool RationalMatrix::is_integral() const {
  for (const Rat& q : entries_)
    if (q.get_den() != 1) return false;
  return true;
}

IntMatrix RationalMatrix::to_int() const {
  IntMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Rat& q = (*this)(i, j);
      if (q.get_den() != 1) throw std::invalid_argument("to_int: non-integral entry");
      m(i, j) = q.get_num();
    }
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  RationalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatVector operator*(const RationalMatrix& a, const RatVector& v) {
  if (a.cols() != int(v.size())) throw DimensionError("matrix * vector: dimensions differ");
  RatVector r(a.rows(), Rat(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

Permutation::Permutation(int n) : images_(n) { std::iota(images_.begin(), images_.end(), 1); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > int(images_.size()) || seen[v - 1])
      throw std::invalid_argument("Permutation: images not a bijection of {1..n}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= n(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(inv);
}

Permutation Permutation::compose(const Permutation& other) const {
  if (n() != other.n()) throw DimensionError("compose: sizes differ");
  std::vector<int> img(images_.size());
  for (int i = 1; i <= n(); ++i) img[i - 1] = image(other.image(i));
  return Permutation(img);
}

IntMatrix Permutation::matrix() const {
  IntMatrix p(n(), n());
  for (int i = 1; i <= n(); ++i) p(image(i) - 1, i - 1) = 1;
  return p;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation Permutation::cyclic_shift(int n, int k) {
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = (i - 1 + k % n + n) % n + 1;
  return Permutation(img);
}

Int det_exact(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("det_exact: non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Bareiss: division by the previous pivot is exact
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Int det_laplace(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("det_laplace: non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int det(0);
  std::vector<int> rows(n - 1), cols;
  std::iota(rows.begin(), rows.end(), 1);
  for (int j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    cols.clear();
    for (int c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    Int cof = m(0, j) * det_laplace(m.submatrix(rows, cols));
    if (j % 2 == 0) det += cof; else det -= cof;
  }
  return det;
}

namespace {

void row_op(IntMatrix& m, IntMatrix& u, int dst, int src, const Int& factor) {
  for (int j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
  for (int j = 0; j < u.cols(); ++j) u(dst, j) += factor * u(src, j);
}

void col_op(IntMatrix& m, IntMatrix& v, int dst, int src, const Int& factor) {
  for (int i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
  for (int i = 0; i < v.rows(); ++i) v(i, dst) += factor * v(i, src);
}

void row_swap(IntMatrix& m, IntMatrix& u, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
  for (int j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
}

void col_swap(IntMatrix& m, IntMatrix& v, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
  for (int i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  int r = m.rows(), c = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);
  int t = 0;
  int steps = std::min(r, c);
  while (t < steps) {
    // smallest nonzero |entry| in the remaining block as pivot
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        if (d(i, j) == 0) continue;
        Int a = abs(d(i, j));
        if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
      }
    if (pi < 0) break;  // remaining block is zero
    row_swap(d, u, t, pi);
    col_swap(d, v, t, pj);
    bool clean = true;
    for (int i = t + 1; i < r; ++i) {
      if (d(i, t) == 0) continue;
      Int q = d(i, t) / d(t, t);  // truncated division keeps |remainder| < |pivot|
      if (q != 0) row_op(d, u, i, t, -q);
      if (d(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < c; ++j) {
      if (d(t, j) == 0) continue;
      Int q = d(t, j) / d(t, t);
      if (q != 0) col_op(d, v, j, t, -q);
      if (d(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller entries appeared; re-pick pivot
    // divisibility: pivot must divide every entry of the trailing block
    bool divides = true;
    for (int i = t + 1; i < r && divides; ++i)
      for (int j = t + 1; j < c && divides; ++j)
        if (d(i, j) % d(t, t) != 0) {
          row_op(d, u, t, i, Int(1));
          divides = false;
        }
    if (!divides) continue;
    if (d(t, t) < 0) {
      for (int j = 0; j < c; ++j) d(t, j) = -d(t, j);
      for (int j = 0; j < r; ++j) u(t, j) = -u(t, j);
    }
    ++t;
  }
  return {u, d, v};
}

RationalMatrix inverse_rational(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("inverse_rational: non-square matrix");
  int n = m.rows();
  RationalMatrix a = RationalMatrix::from_int(m);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) { piv = i; break; }
    if (piv < 0) throw SingularMatrixError("inverse_rational: singular matrix");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    Rat p = a(k, k);
    for (int j = 0; j < n; ++j) { a(k, j) /= p; inv(k, j) /= p; }
    for (int i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

IntMatrix permutation_conjugate(const IntMatrix& a, const Permutation& sigma) {
  if (!a.square() || a.rows() != sigma.n())
    throw DimensionError("permutation_conjugate: size mismatch");
  int n = a.rows();
  IntMatrix r(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) r(i - 1, j - 1) = a(sigma.image(i) - 1, sigma.image(j) - 1);
  return r;
}

Int principal_minor(const IntMatrix& a, const std::vector<int>& index_set) {
  std::vector<int> idx;
  for (int i : index_set) idx.push_back(i - 1);
  return det_exact(a.submatrix(idx, idx));
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.square()) return false;
  Int d = det_exact(m);
  return d == 1 || d == -1;
}

Int vector_gcd(const IntVector& v) {
  Int g(0);
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

RatVector solve_rational(const IntMatrix& m, const RatVector& rhs) {
  if (!m.square() || m.rows() != int(rhs.size()))
    throw DimensionError("solve_rational: size mismatch");
  int n = m.rows();
  RationalMatrix a = RationalMatrix::from_int(m);
  RatVector x = rhs;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) { piv = i; break; }
    if (piv < 0) throw SingularMatrixError("solve_rational: singular matrix");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(x[k], x[piv]);
    }
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      x[i] -= f * x[k];
    }
  }
  for (int k = n - 1; k >= 0; --k) {
    Rat s = x[k];
    for (int j = k + 1; j < n; ++j) s -= a(k, j) * x[j];
    x[k] = s / a(k, k);
  }
  return x;
}

}  // namespace vcfan
