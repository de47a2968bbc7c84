#pragma once

#include <kummer/integer.hpp>

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

// Dense integer matrix, row-major, exact entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}

  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Int(0));
  }

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_)
        throw std::invalid_argument("ragged initializer for IntMatrix");
      for (long long v : r) a_.emplace_back(v);
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    IntMatrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Int& x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.cols_; ++j) p(i, j) += x * o(k, j);
      }
    return p;
  }

  IntMatrix operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("dimension mismatch in matrix difference");
    IntMatrix d(rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t) d.a_[t] = a_[t] - o.a_[t];
    return d;
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  // row i += f * row j
  void add_row(int i, int j, const Int& f) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) += f * (*this)(j, c);
  }
  void add_col(int i, int j, const Int& f) {
    for (int r = 0; r < rows_; ++r) (*this)(r, i) += f * (*this)(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (int i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (int j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << "]";
    }
    return os << "]";
  }

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination: every division
// below is exact over the integers, so nothing ever leaves Z.
inline Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant requires a square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (w(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      w.swap_rows(k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

// Smith normal form data: left * input * right = diag(factors), with the
// transforms unimodular and factors[i] >= 0, factors[i] | factors[i+1].
struct SmithNormalForm {
  std::vector<Int> factors;  // min(rows, cols) entries, trailing zeros possible
  IntMatrix left;
  IntMatrix right;
};

inline SmithNormalForm smith_normal_form(const IntMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  const int steps = std::min(rows, cols);
  IntMatrix d = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);

  auto abs_of = [](const Int& x) { return x < 0 ? Int(-x) : x; };

  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero |entry| of the trailing block becomes the pivot.
      int pr = -1, pc = -1;
      Int best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr < 0 || abs_of(d(i, j)) < best)) {
            best = abs_of(d(i, j));
            pr = i;
            pc = j;
          }
      if (pr < 0) break;  // trailing block is zero; remaining factors are 0
      if (pr != t) { d.swap_rows(t, pr); left.swap_rows(t, pr); }
      if (pc != t) { d.swap_cols(t, pc); right.swap_cols(t, pc); }

      bool reduced = true;
      for (int i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        if (q != 0) { d.add_row(i, t, -q); left.add_row(i, t, -q); }
        if (d(i, t) != 0) reduced = false;  // remainder survives, pivot shrinks next pass
      }
      for (int j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        if (q != 0) { d.add_col(j, t, -q); right.add_col(j, t, -q); }
        if (d(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // Pivot now lone in its row and column; enforce divisibility of the
      // trailing block before moving on.
      int br = -1, bc = -1;
      for (int i = t + 1; i < rows && br < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) { br = i; bc = j; break; }
      if (br < 0) {
        if (d(t, t) < 0) { d.negate_row(t); left.negate_row(t); }
        break;
      }
      d.add_row(t, br, 1);
      left.add_row(t, br, 1);
    }
  }

  SmithNormalForm snf;
  snf.factors.reserve(steps);
  for (int t = 0; t < steps; ++t) snf.factors.push_back(d(t, t));
  snf.left = std::move(left);
  snf.right = std::move(right);
  return snf;
}

// Signature data of a symmetric matrix.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  bool operator==(const Inertia& o) const {
    return positive == o.positive && negative == o.negative && zero == o.zero;
  }
  bool operator!=(const Inertia& o) const { return !(*this == o); }

  std::string to_string() const {
    std::ostringstream os;
    os << "(" << positive << "," << negative << "," << zero << ")";
    return os.str();
  }
};

// Exact congruence diagonalization over Q. When every remaining diagonal
// entry vanishes but row k still has an off-diagonal entry, the basis change
// e_k += e_l produces the nonzero pivot 2*g(k,l); together with the later
// step at l this splits off a hyperbolic block contributing (1,1).
inline Inertia symmetric_inertia(const IntMatrix& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("inertia requires a symmetric matrix");
  const int n = g.rows();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rat(g(i, j));

  auto swap_basis = [&](int i, int j) {
    m[i].swap(m[j]);
    for (int r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
  };
  auto add_basis = [&](int i, int j) {  // e_i += e_j
    for (int c = 0; c < n; ++c) m[i][c] += m[j][c];
    for (int r = 0; r < n; ++r) m[r][i] += m[r][j];
  };

  Inertia res;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int diag = -1, off = -1;
      for (int l = k + 1; l < n && diag < 0; ++l)
        if (m[l][l] != 0) diag = l;
      for (int l = k + 1; l < n && off < 0; ++l)
        if (m[k][l] != 0) off = l;
      if (diag >= 0) {
        swap_basis(k, diag);
      } else if (off >= 0) {
        add_basis(k, off);
      } else {
        ++res.zero;  // radical direction
        continue;
      }
    }
    const Rat pivot = m[k][k];
    if (pivot > 0) ++res.positive; else ++res.negative;
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rat f = m[i][k] / pivot;
      for (int j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
      m[i][k] = 0;
    }
    for (int j = k + 1; j < n; ++j) m[k][j] = 0;
  }
  return res;
}

}  // namespace kummer
