#include "prymlat/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace prymlat {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Quotient q minimizing |a - q*b|, ties broken toward the smaller q.
// Keeps remainders at most |b|/2, which bounds entry growth during the
// elimination sweeps.
Int quot_nearest(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  Int best_q = q;
  Int best_r = abs_int(a - q * b);
  for (int delta : {-1, 1}) {
    Int cand = q + delta;
    Int r = abs_int(a - cand * b);
    if (r < best_r || (r == best_r && cand < best_q)) {
      best_q = cand;
      best_r = r;
    }
  }
  return best_q;
}

// Floor quotient: remainder lands in [0, b) for b > 0.
Int quot_floor(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntegerMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c)
      throw std::invalid_argument("from_rows: ragged row lengths");
    std::size_t j = 0;
    for (long long x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

IntegerMatrix IntegerMatrix::column_vector(const std::vector<Int>& v) {
  IntegerMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Int& x) { return x == 0; });
}

bool IntegerMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product: shape mismatch");
  IntegerMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  IntegerMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    s.entries_[i] = entries_[i] + rhs.entries_[i];
  return s;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  IntegerMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    s.entries_[i] = entries_[i] - rhs.entries_[i];
  return s;
}

IntegerMatrix IntegerMatrix::operator-() const {
  IntegerMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    s.entries_[i] = -entries_[i];
  return s;
}

IntegerMatrix IntegerMatrix::scaled(const Int& c) const {
  IntegerMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    s.entries_[i] = c * entries_[i];
  return s;
}

std::vector<Int> IntegerMatrix::column(std::size_t j) const {
  std::vector<Int> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void IntegerMatrix::set_column(std::size_t j, const std::vector<Int>& v) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix apply: length mismatch");
  std::vector<Int> w(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) w[i] += at(i, j) * v[j];
  return w;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                     const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                     const Int& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("hstack: row count mismatch");
  IntegerMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("vstack: column count mismatch");
  IntegerMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      m.at(a.rows() + i, j) = b.at(i, j);
  }
  return m;
}

IntegerMatrix block_diagonal(const std::vector<IntegerMatrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  IntegerMatrix m(r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        m.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

IntegerMatrix matrix_power(const IntegerMatrix& a, long long e) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("matrix_power: square matrix required");
  if (e < 0) throw std::invalid_argument("matrix_power: negative exponent");
  IntegerMatrix result = IntegerMatrix::identity(a.rows());
  IntegerMatrix base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Int determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant: square matrix required");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // exact by Bareiss
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  std::size_t n = std::min(d.rows(), d.cols());
  while (r < n && d.at(r, r) != 0) ++r;
  return r;
}

std::vector<Int> SmithDecomposition::divisors() const {
  std::vector<Int> out;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n && d.at(i, i) != 0; ++i)
    out.push_back(d.at(i, i));
  return out;
}

std::size_t SmithExtended::rank() const {
  std::size_t r = 0;
  std::size_t n = std::min(d.rows(), d.cols());
  while (r < n && d.at(r, r) != 0) ++r;
  return r;
}

SmithExtended smith_extended(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithExtended s{IntegerMatrix::identity(m), IntegerMatrix::identity(m), a,
                  IntegerMatrix::identity(n), IntegerMatrix::identity(n)};
  IntegerMatrix& d = s.d;

  // Row op R applied as d <- R d keeps u <- R u and u_inv <- u_inv R^{-1};
  // column ops mirror this on v / v_inv.
  auto row_swap = [&](std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    s.u.swap_rows(i, j);
    s.u_inv.swap_cols(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    s.v.swap_cols(i, j);
    s.v_inv.swap_rows(i, j);
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
    d.add_row_multiple(dst, src, q);
    s.u.add_row_multiple(dst, src, q);
    s.u_inv.add_col_multiple(src, dst, -q);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
    d.add_col_multiple(dst, src, q);
    s.v.add_col_multiple(dst, src, q);
    s.v_inv.add_row_multiple(src, dst, -q);
  };
  auto row_negate = [&](std::size_t i) {
    d.negate_row(i);
    s.u.negate_row(i);
    s.u_inv.negate_col(i);
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // Pivot: smallest nonzero absolute value in the trailing submatrix,
    // ties broken by lowest row then lowest column.
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int& x = d.at(i, j);
        if (x == 0) continue;
        Int ax = abs_int(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;

    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = quot_nearest(d.at(i, t), d.at(t, t));
        row_axpy(i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = quot_nearest(d.at(t, j), d.at(t, t));
        col_axpy(j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A nonzero remainder strictly smaller than the pivot exists in
        // row/column t; promote the smallest entry there and sweep again.
        std::size_t bi = t, bj = t;
        Int bbest = abs_int(d.at(t, t));
        for (std::size_t i = t + 1; i < m; ++i) {
          if (d.at(i, t) == 0) continue;
          Int ax = abs_int(d.at(i, t));
          if (ax < bbest) {
            bbest = ax;
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d.at(t, j) == 0) continue;
          Int ax = abs_int(d.at(t, j));
          if (ax < bbest) {
            bbest = ax;
            bi = t;
            bj = j;
          }
        }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      // Row and column t are clear.  Enforce the divisibility chain: the
      // pivot must divide every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_axpy(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }

    if (d.at(t, t) < 0) row_negate(t);
    ++t;
  }
  return s;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  SmithExtended s = smith_extended(a);
  return SmithDecomposition{std::move(s.u), std::move(s.d), std::move(s.v)};
}

IntegerMatrix hermite_row_basis(const IntegerMatrix& a) {
  IntegerMatrix b = a;
  const std::size_t m = b.rows();
  const std::size_t n = b.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Reduce column c below row r to a single nonzero entry at row r.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (b.at(i, c) == 0) continue;
        if (best == m || abs_int(b.at(i, c)) < abs_int(b.at(best, c)))
          best = i;
      }
      if (best == m) break;  // column clear below r
      b.swap_rows(r, best);
      bool reduced = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (b.at(i, c) == 0) continue;
        Int q = quot_nearest(b.at(i, c), b.at(r, c));
        b.add_row_multiple(i, r, -q);
        if (b.at(i, c) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (b.at(r, c) == 0) continue;
    if (b.at(r, c) < 0) b.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = quot_floor(b.at(i, c), b.at(r, c));
      b.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  IntegerMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = b.at(i, j);
  return out;
}

IntegerMatrix hermite_column_basis(const IntegerMatrix& a) {
  return hermite_row_basis(a.transpose()).transpose();
}

std::size_t rational_rank(const IntegerMatrix& a) {
  return hermite_row_basis(a).rows();
}

}  // namespace prymlat
