#include "ftfa/intmat.hpp"

#include <cassert>

#include "ftfa/errors.hpp"

namespace ftfa {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::vector<IntVec> rows, size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(errc::bad_input, "ragged matrix rows");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(size_t i) const {
  IntVec v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void IntMatrix::set_row(size_t i, const IntVec& v) {
  assert(v.size() == cols_);
  for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void IntMatrix::append_row(const IntVec& v) {
  assert(rows_ == 0 ? true : v.size() == cols_);
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw Error(errc::bad_input, "ragged matrix rows");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(errc::bad_input, "matrix product shape mismatch");
  IntMatrix p(rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += x * rhs.at(k, j);
    }
  return p;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(errc::bad_input, "matrix difference shape mismatch");
  IntMatrix d(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) d.a_[i] = a_[i] - rhs.a_[i];
  return d;
}

bool IntMatrix::is_zero_row(size_t i) const {
  for (size_t j = 0; j < cols_; ++j)
    if (at(i, j) != 0) return false;
  return true;
}

IntVec mul_row(const IntVec& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw Error(errc::bad_input, "row-vector product shape mismatch");
  IntVec out(m.cols(), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

namespace {

// Work pair (A | U) under simultaneous unimodular row operations.
struct RowWork {
  IntMatrix a, u;

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void negate_row(size_t i) {
    for (size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }
  void add_multiple(size_t dst, size_t src, const Int& q) {
    if (q == 0) return;
    for (size_t c = 0; c < a.cols(); ++c) a.at(dst, c) += q * a.at(src, c);
    for (size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += q * u.at(src, c);
  }
  // Replace rows i,j by the xgcd combination making a(j,col) = 0; the 2x2
  // transform [[s,t],[-b/g,a/g]] has determinant 1.
  void gcd_combine(size_t i, size_t j, size_t col) {
    Int x = a.at(i, col), y = a.at(j, col);
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Int xr = x / g, yr = y / g;
    size_t ac = a.cols(), uc = u.cols();
    IntVec new_ai(ac), new_aj(ac), new_ui(uc), new_uj(uc);
    for (size_t c = 0; c < ac; ++c) {
      new_ai[c] = s * a.at(i, c) + t * a.at(j, c);
      new_aj[c] = xr * a.at(j, c) - yr * a.at(i, c);
    }
    for (size_t c = 0; c < uc; ++c) {
      new_ui[c] = s * u.at(i, c) + t * u.at(j, c);
      new_uj[c] = xr * u.at(j, c) - yr * u.at(i, c);
    }
    a.set_row(i, new_ai);
    a.set_row(j, new_aj);
    u.set_row(i, new_ui);
    u.set_row(j, new_uj);
  }
};

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  size_t rows = m.rows(), cols = m.cols();
  RowWork w{m, IntMatrix::identity(rows)};
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (w.a.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    w.swap_rows(r, piv);
    for (size_t i = r + 1; i < rows; ++i)
      if (w.a.at(i, col) != 0) w.gcd_combine(r, i, col);
    if (w.a.at(r, col) < 0) w.negate_row(r);
    for (size_t i = 0; i < r; ++i)
      w.add_multiple(i, r, -floor_div(w.a.at(i, col), w.a.at(r, col)));
    ++r;
  }
  HnfResult res;
  res.rank = r;
  res.u = std::move(w.u);
  res.h = IntMatrix(r, cols);
  for (size_t i = 0; i < r; ++i) res.h.set_row(i, w.a.row(i));
  return res;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  HnfResult h = hnf(m);
  IntMatrix raw(m.rows() - h.rank, m.rows());
  for (size_t i = h.rank; i < m.rows(); ++i) raw.set_row(i - h.rank, h.u.row(i));
  return hnf(raw).h;
}

std::optional<IntVec> solve_left(const IntMatrix& m, const IntVec& b) {
  if (b.size() != m.cols()) throw Error(errc::bad_input, "solve_left shape mismatch");
  HnfResult h = hnf(m);
  IntVec resid = b;
  IntVec y(h.rank, 0);
  for (size_t i = 0; i < h.rank; ++i) {
    size_t pc = 0;
    while (pc < m.cols() && h.h.at(i, pc) == 0) ++pc;
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), resid[pc].get_mpz_t(), h.h.at(i, pc).get_mpz_t());
    if (rem != 0) return std::nullopt;
    y[i] = q;
    if (q != 0)
      for (size_t c = 0; c < m.cols(); ++c) resid[c] -= q * h.h.at(i, c);
  }
  for (const Int& v : resid)
    if (v != 0) return std::nullopt;
  IntVec x(m.rows(), 0);
  for (size_t i = 0; i < h.rank; ++i) {
    if (y[i] == 0) continue;
    for (size_t c = 0; c < m.rows(); ++c) x[c] += y[i] * h.u.at(i, c);
  }
  return x;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(errc::bad_input, "determinant of non-square matrix");
  size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t s = k + 1;
      while (s < n && a.at(s, k) == 0) ++s;
      if (s == n) return 0;
      for (size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(s, c));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = t / prev;
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace ftfa
