#include "vcfan/classify.hpp"

#include <algorithm>
#include <sstream>

namespace vcfan {

namespace {

std::vector<std::vector<int>> proper_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

bool is_unipotent_lower(const IntMatrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (i == j && a(i, j) != 1) return false;
      if (j > i && a(i, j) != 0) return false;
    }
  return true;
}

// cyclic form: unit diagonal, a_1 at (1,n), a_i at (i,i-1), zero elsewhere
bool is_cyclic_form(const IntMatrix& a) {
  int n = a.rows();
  if (n < 2) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        if (a(i, j) != 1) return false;
      } else if ((i == 0 && j == n - 1) || (i >= 1 && j == i - 1)) {
        continue;
      } else if (a(i, j) != 0) {
        return false;
      }
    }
  return a(0, n - 1) != 0;  // cyclic entries are nonzero in every normal form
}

IntVector rotate(const IntVector& v, int k) {
  int n = int(v.size());
  IntVector out(n);
  for (int i = 0; i < n; ++i) out[i] = v[(i + k) % n];
  return out;
}

IntVector lex_min_rotation(const IntVector& v) {
  IntVector best = v;
  for (int k = 1; k < int(v.size()); ++k) {
    IntVector r = rotate(v, k);
    if (std::lexicographical_compare(r.begin(), r.end(), best.begin(), best.end())) best = r;
  }
  return best;
}

bool lex_less_matrix(const IntMatrix& a, const IntMatrix& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) < b(i, j)) return true;
      if (a(i, j) > b(i, j)) return false;
    }
  return false;
}

}  // namespace

IntMatrix cyclic_matrix(const IntVector& seq) {
  int n = int(seq.size());
  IntMatrix a = IntMatrix::identity(n);
  a(0, n - 1) = seq[0];
  for (int i = 1; i < n; ++i) a(i, i - 1) = seq[i];
  return a;
}

IntVector cyclic_sequence_of(const VcPair& p) {
  if (!is_cyclic_form(p.a))
    throw std::invalid_argument("cyclic_sequence_of: matrix not in cyclic form");
  IntVector seq(p.n);
  seq[0] = p.a(0, p.n - 1);
  for (int i = 1; i < p.n; ++i) seq[i] = p.a(i, i - 1);
  return seq;
}

VcPair pair_from_cyclic_sequence(const IntVector& seq) {
  int n = int(seq.size());
  IntMatrix a = cyclic_matrix(seq);
  Int det = det_exact(a);
  if (det == 0)
    throw std::invalid_argument("pair_from_cyclic_sequence: det = 0, b is not determined by A");
  IntVector b(n);
  for (int i = 0; i < n; ++i) {
    Int num = 1 + seq[i];  // i-th entry of the column sum of A
    if (num % det != 0)
      throw std::invalid_argument("pair_from_cyclic_sequence: b not integral");
    b[i] = num / det;
  }
  return VcPair{n, a, b};
}

VcPair type0_pair(const IntVector& b) {
  int n = int(b.size());
  IntVector seq(n, Int(-1));
  return VcPair{n, cyclic_matrix(seq), b};
}

VcPair type1_pair(const IntMatrix& a) {
  if (!is_unipotent_lower(a)) throw std::invalid_argument("type1_pair: not unipotent lower triangular");
  int n = a.rows();
  IntVector b(n, Int(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i] += a(i, j);
  return VcPair{n, a, b};
}

VcPair type2_pair(const IntVector& signs) {
  int ones = 0;
  for (const Int& s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("type2_pair: entries must be +-1");
    if (s == 1) ++ones;
  }
  if (ones % 2 == 0) throw std::invalid_argument("type2_pair: number of +1 entries must be odd");
  return pair_from_cyclic_sequence(signs);
}

VcPair type3_pair(const Int& a, int n) {
  IntVector seq(n, Int(-1));
  seq[0] = a;
  return pair_from_cyclic_sequence(seq);
}

ValidationResult validate_pair(const VcPair& p) {
  int n = p.n;
  if (n < 2) return {false, "n must be at least 2"};
  if (p.a.rows() != n || p.a.cols() != n || int(p.b.size()) != n)
    return {false, "dimension mismatch between n, A and b"};
  for (const auto& subset : proper_subsets(n))
    if (principal_minor(p.a, subset) != 1) {
      std::ostringstream os;
      os << "proper principal minor on {";
      for (size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
      os << "} is not 1";
      return {false, os.str()};
    }
  Int det = det_exact(p.a);
  if (det == 0) {
    Int s(0);
    for (const Int& x : p.b) s += x;
    if (s != 1) return {false, "Type 0 requires sum(b)=1"};
  } else {
    for (int i = 0; i < n; ++i) {
      Int rowsum(0);
      for (int j = 0; j < n; ++j) rowsum += p.a(i, j);
      if (det * p.b[i] != rowsum) return {false, "b != (1/det A) sum_i a_i"};
    }
  }
  for (int i = 0; i < n; ++i) {
    if (det_exact(p.a.with_column_replaced(i, p.b)) != 1) {
      std::ostringstream os;
      os << "det[a_1,..,b at slot " << (i + 1) << ",..,a_n] is not 1";
      return {false, os.str()};
    }
  }
  return {true, ""};
}

namespace {

// Lemma 3.3 style normal form: a permutation conjugate of A that is unipotent
// lower triangular (det 1) or in cyclic form (otherwise).
VcPair normal_form_conjugate(const VcPair& p) {
  int n = p.n;
  for (const auto& sigma : Permutation::all(n)) {
    IntMatrix c = permutation_conjugate(p.a, sigma);
    bool shape_ok = (det_exact(p.a) == 1) ? is_unipotent_lower(c) : is_cyclic_form(c);
    if (!shape_ok) continue;
    IntVector b(n);
    for (int i = 1; i <= n; ++i) b[i - 1] = p.b[sigma.image(i) - 1];
    return VcPair{n, c, b};
  }
  throw std::logic_error("normal_form_conjugate: no conjugate in normal form (invalid pair?)");
}

}  // namespace

VcPair canonical_representative(const VcPair& p) {
  VcPair nf = normal_form_conjugate(p);
  Int det = det_exact(nf.a);
  if (det == 1) {
    // lex-min over all conjugates that remain unipotent lower triangular
    IntMatrix best = nf.a;
    for (const auto& sigma : Permutation::all(p.n)) {
      IntMatrix c = permutation_conjugate(nf.a, sigma);
      if (is_unipotent_lower(c) && lex_less_matrix(c, best)) best = c;
    }
    return type1_pair(best);
  }
  IntVector seq = cyclic_sequence_of(nf);
  if (det == 0) {
    // A is fixed (all cyclic entries -1); minimize b over rotations.
    // Rotating the pair by sigma(i) = i+k sends b to (b_{1+k}, b_{2+k}, ...).
    return type0_pair(lex_min_rotation(nf.b));
  }
  if (det == 2) return pair_from_cyclic_sequence(lex_min_rotation(seq));
  // Type 3: rotate the unique entry != -1 to the front; the result is rigid
  int pos = -1;
  for (int i = 0; i < p.n; ++i)
    if (seq[i] != -1) { pos = i; break; }
  return pair_from_cyclic_sequence(rotate(seq, pos));
}

TypeTag classify_pair(const VcPair& p) {
  ValidationResult v = validate_pair(p);
  if (!v.ok) throw std::invalid_argument("classify_pair: invalid pair: " + v.message);
  Int det = det_exact(p.a);
  int type = det == 0 ? 0 : det == 1 ? 1 : det == 2 ? 2 : 3;
  VcPair canon = canonical_representative(p);
  return TypeTag{type, det, canon.a, canon.b};
}

bool variety_isomorphic(const VcPair& p1, const VcPair& p2) {
  if (p1.n < 3 || p2.n < 3)
    throw std::invalid_argument("variety_isomorphic: requires n >= 3");
  if (p1.n != p2.n) return false;
  TypeTag t1 = classify_pair(p1);
  TypeTag t2 = classify_pair(p2);
  return t1.type_index == t2.type_index && t1.canonical_a == t2.canonical_a &&
         t1.canonical_b == t2.canonical_b;
}

std::vector<IntVector> enumerate_type2(int n) {
  if (n < 3) throw std::invalid_argument("enumerate_type2: requires n >= 3");
  std::vector<IntVector> classes;
  std::set<std::vector<long>> seen;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int ones = 0;
    IntVector signs(n);
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) { signs[i] = 1; ++ones; }
      else signs[i] = -1;
    }
    if (ones % 2 == 0) continue;
    IntVector canon = lex_min_rotation(signs);
    std::vector<long> key;
    for (const Int& x : canon) key.push_back(x.get_si());
    if (seen.insert(key).second) classes.push_back(canon);
  }
  std::sort(classes.begin(), classes.end(),
            [](const IntVector& a, const IntVector& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
            });
  return classes;
}

VcPair conjugate_pair(const VcPair& p, const Permutation& sigma) {
  if (sigma.n() != p.n) throw DimensionError("conjugate_pair: size mismatch");
  IntVector b(p.n);
  for (int i = 1; i <= p.n; ++i) b[i - 1] = p.b[sigma.image(i) - 1];
  return VcPair{p.n, permutation_conjugate(p.a, sigma), b};
}

Int euler_phi(int n) {
  Int phi(n);
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    phi -= phi / p;
  }
  if (m > 1) phi -= phi / m;
  return phi;
}

Int necklace_count(int n) {
  if (n < 1) throw std::invalid_argument("necklace_count: requires n >= 1");
  Int total(0);
  for (int d = 1; d <= n; d += 2) {
    if (n % d) continue;
    Int pw(1);
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, unsigned(n / d));
    total += euler_phi(d) * pw;
  }
  return total / (2 * n);
}

IntMatrix r_matrix(const IntMatrix& a) {
  int n = a.rows();
  Int det = det_exact(a);
  if (det != 2) throw std::invalid_argument("r_matrix: matrix is not of Type 2 (det != 2)");
  RationalMatrix inv = inverse_rational(a);
  RationalMatrix r(n, n);
  Rat half = make_rat(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (abs(inv(i, j)) != half)
        throw std::logic_error("r_matrix: A^{-1} has an entry different from +-1/2");
      r(i, j) = inv(i, j) + half;
    }
  return r.to_int();
}

IntVector type0_c_vector(const IntVector& b) {
  Int s(0);
  for (const Int& x : b) s += x;
  if (s != 1) throw std::invalid_argument("type0_c_vector: sum(b) must be 1");
  int n = int(b.size());
  IntVector c(n - 1);
  Int run(0);
  for (int k = 0; k < n - 1; ++k) {
    run += b[k];
    c[k] = run;
  }
  return c;
}

std::string diffeo_label(const VcPair& p) {
  TypeTag tag = classify_pair(p);
  if (tag.det != 1) {
    std::ostringstream os;
    os << "det=" << tag.det;
    return os.str();
  }
  return "bott:" + tag.canonical_a.to_string();
}

ClassificationReport classify_report(const VcPair& p) {
  ClassificationReport rep;
  rep.tag = classify_pair(p);
  rep.diffeo_label = diffeo_label(p);
  if (rep.tag.det != 1) {
    std::ostringstream os;
    os << "det=" << rep.tag.det;
    rep.cohomology_class_label = os.str();
  } else {
    rep.cohomology_class_label = "bott:" + rep.tag.canonical_a.to_string();
  }
  if (p.n >= 3) {
    // closed-form projectivity: non-projective iff Type 2 with >= 3 ones
    if (rep.tag.type_index == 2) {
      int ones = 0;
      IntVector seq(p.n);
      seq[0] = rep.tag.canonical_a(0, p.n - 1);
      for (int i = 1; i < p.n; ++i) seq[i] = rep.tag.canonical_a(i, i - 1);
      for (const Int& s : seq)
        if (s == 1) ++ones;
      rep.projective = ones < 3;
    } else {
      rep.projective = true;
    }
  }
  return rep;
}

}  // namespace vcfan
