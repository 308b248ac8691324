// Exact integer and rational linear algebra over GMP.
//
// Everything here is a pure value type: matrices are immutable in spirit
// (operations return new matrices) and freely sendable between threads.
// No floating point is used anywhere in this project.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace vcfan {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize; always build rationals through this.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};
struct SingularMatrixError : std::invalid_argument {
  explicit SingularMatrixError(const std::string& what) : std::invalid_argument(what) {}
};

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(size_t(rows) * cols, Int(0)) {}
  IntMatrix(int rows, int cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != size_t(rows) * cols)
      throw DimensionError("IntMatrix: entry count != rows*cols");
  }

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Int& operator()(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }
  Int& operator()(int i, int j) { return entries_[size_t(i) * cols_ + j]; }

  IntVector row(int i) const;
  IntVector column(int j) const;

  bool operator==(const IntMatrix& other) const = default;

  IntMatrix transpose() const;
  // Submatrix on the given (0-based) row and column index sets, in order.
  IntMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
  IntMatrix with_column_replaced(int j, const IntVector& col) const;

  std::string to_string() const;

private:
  int rows_, cols_;
  std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

class RationalMatrix {
public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(size_t(rows) * cols, Rat(0)) {}

  static RationalMatrix from_int(const IntMatrix& m);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rat& operator()(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }
  Rat& operator()(int i, int j) { return entries_[size_t(i) * cols_ + j]; }

  bool operator==(const RationalMatrix& other) const = default;

  // True iff every entry has denominator 1.
  bool is_integral() const;
  IntMatrix to_int() const;  // throws if not integral

private:
  int rows_, cols_;
  std::vector<Rat> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RatVector operator*(const RationalMatrix& a, const RatVector& v);

// A permutation of {1,...,n}; image(i) is 1-based to match the paper's labels.
class Permutation {
public:
  explicit Permutation(int n);                      // identity
  explicit Permutation(std::vector<int> images);    // images[i-1] = sigma(i), 1-based

  int n() const { return int(images_.size()); }
  int image(int i) const { return images_[i - 1]; }

  Permutation inverse() const;
  Permutation compose(const Permutation& other) const;  // i -> this(other(i))
  IntMatrix matrix() const;                             // P_sigma: column i is e_{sigma(i)}

  bool operator==(const Permutation& other) const = default;

  static std::vector<Permutation> all(int n);  // all n! permutations, lexicographic
  static Permutation cyclic_shift(int n, int k);  // i -> i+k (mod n, 1-based)

private:
  std::vector<int> images_;
};

// Exact determinant via Bareiss fraction-free elimination.
Int det_exact(const IntMatrix& m);

// Laplace-expansion determinant; exponential, used only as an independent
// test oracle for small matrices.
Int det_laplace(const IntMatrix& m);

struct SmithNormalForm {
  IntMatrix u;  // unimodular rows x rows
  IntMatrix d;  // diagonal with d_i | d_{i+1}, d_i >= 0
  IntMatrix v;  // unimodular cols x cols
};

// U*M*V = D with D diagonal, nonnegative, divisibility chain d_i | d_{i+1}.
SmithNormalForm smith_normal_form(const IntMatrix& m);

// Exact inverse over the rationals; throws SingularMatrixError when det = 0.
RationalMatrix inverse_rational(const IntMatrix& m);

// A_sigma = P_sigma^{-1} A P_sigma, i.e. (i,j)-entry of the result is the
// (sigma(i),sigma(j))-entry of A.
IntMatrix permutation_conjugate(const IntMatrix& a, const Permutation& sigma);

// Principal minor of A on the (1-based) index subset I.  Empty I gives 1.
Int principal_minor(const IntMatrix& a, const std::vector<int>& index_set);

bool is_unimodular(const IntMatrix& m);

Int vector_gcd(const IntVector& v);  // gcd of entries, 0 for the zero vector

// Solve M x = rhs exactly over Q (M square nonsingular).
RatVector solve_rational(const IntMatrix& m, const RatVector& rhs);

}  // namespace vcfan
