#ifndef SGCONJ_MATRIX_HPP
#define SGCONJ_MATRIX_HPP

// Dense matrices over an exact field, where the field is passed as an object
// (mirrors table-backed F_q, where elements mean nothing without a field).
// All algorithms here are exact; there is no floating point in this project.

#include <cassert>
#include <vector>

#include "sgconj/errors.hpp"
#include "sgconj/gf.hpp"
#include "sgconj/rational.hpp"

namespace sgconj {

struct QField {
  using Elem = Rational;
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw_domain("division by zero in Q");
    return a / b;
  }
  Elem inv(const Elem& a) const { return div(one(), a); }
  Elem from_int(long v) const { return Elem(v); }

  static const QField& instance() {
    static const QField f;
    return f;
  }
};

template <class F>
struct Mat {
  using Elem = typename F::Elem;

  const F* f = nullptr;
  int rows = 0, cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(const F& field, int r, int c)
      : f(&field), rows(r), cols(c),
        a(static_cast<std::size_t>(r) * c, field.zero()) {}

  Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Elem& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  static Mat identity(const F& field, int n) {
    Mat m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  Mat mul(const Mat& o) const {
    assert(f == o.f && cols == o.rows);
    Mat r(*f, rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const Elem& x = at(i, k);
        if (f->is_zero(x)) continue;
        for (int j = 0; j < o.cols; ++j)
          r.at(i, j) = f->add(r.at(i, j), f->mul(x, o.at(k, j)));
      }
    return r;
  }

  Mat pow(unsigned long long k) const {
    assert(rows == cols);
    Mat result = identity(*f, rows);
    Mat base = *this;
    while (k > 0) {
      if (k & 1ULL) result = result.mul(base);
      base = base.mul(base);
      k >>= 1;
    }
    return result;
  }

  bool operator==(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!f->eq(a[i], o.a[i])) return false;
    return true;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }
};

// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<int> rref_in_place(Mat<F>& m) {
  const F& f = *m.f;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int i = row; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, col))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    typename F::Elem piv_inv = f.inv(m.at(row, col));
    for (int j = col; j < m.cols; ++j)
      m.at(row, j) = f.mul(m.at(row, j), piv_inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || f.is_zero(m.at(i, col))) continue;
      typename F::Elem c = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int mat_rank(Mat<F> m) {
  return static_cast<int>(rref_in_place(m).size());
}

template <class F>
Mat<F> transpose(const Mat<F>& m) {
  Mat<F> t(*m.f, m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

// Canonical basis of the column space: columns of the result are the nonzero
// rows of rref(M^T), transposed back. Unique per subspace, so bases computed
// by different routes compare equal iff the subspaces are equal.
template <class F>
Mat<F> column_space_basis(const Mat<F>& m) {
  Mat<F> t = transpose(m);
  std::vector<int> piv = rref_in_place(t);
  int k = static_cast<int>(piv.size());
  Mat<F> basis(*m.f, m.rows, k);
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < m.rows; ++j) basis.at(j, r) = t.at(r, j);
  return basis;
}

// Canonical null space basis from the RREF free-variable construction.
template <class F>
Mat<F> null_space_basis(const Mat<F>& m) {
  const F& f = *m.f;
  Mat<F> r = m;
  std::vector<int> piv = rref_in_place(r);
  std::vector<int> pivot_of_col(m.cols, -1);
  for (std::size_t i = 0; i < piv.size(); ++i) pivot_of_col[piv[i]] = static_cast<int>(i);
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols; ++j)
    if (pivot_of_col[j] < 0) free_cols.push_back(j);
  Mat<F> basis(f, m.cols, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, static_cast<int>(k)) = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i)
      basis.at(piv[i], static_cast<int>(k)) = f.neg(r.at(static_cast<int>(i), fc));
  }
  return basis;
}

// Coordinates of each column of w in the reduced column echelon basis b
// (as produced by column_space_basis). Throws if a column is outside span(b).
template <class F>
Mat<F> coords_in_basis(const Mat<F>& b, const Mat<F>& w) {
  const F& f = *b.f;
  if (b.rows != w.rows) throw_domain("coords_in_basis: dimension mismatch");
  // Pivot row of basis column r = first row with a nonzero (unit) entry.
  std::vector<int> pivot_rows(b.cols, -1);
  for (int r = 0; r < b.cols; ++r)
    for (int i = 0; i < b.rows; ++i)
      if (!f.is_zero(b.at(i, r))) {
        pivot_rows[r] = i;
        break;
      }
  Mat<F> c(f, b.cols, w.cols);
  for (int j = 0; j < w.cols; ++j)
    for (int r = 0; r < b.cols; ++r) c.at(r, j) = w.at(pivot_rows[r], j);
  if (b.mul(c) != w) throw_domain("coords_in_basis: vector outside span");
  return c;
}

}  // namespace sgconj

#endif
