#ifndef FTFA_INTMAT_HPP_
#define FTFA_INTMAT_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "ftfa/words.hpp"

namespace ftfa {

// Dense matrix of arbitrary-precision integers. Row convention throughout:
// vectors act on the left, matrices on the right. Empty dimensions are legal.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(std::vector<IntVec> rows, size_t cols);

  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }

  Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(size_t i) const;
  void set_row(size_t i, const IntVec& v);
  void append_row(const IntVec& v);

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix&) const = default;

  bool is_zero_row(size_t i) const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntVec mul_row(const IntVec& v, const IntMatrix& m);  // v * m

struct HnfResult {
  IntMatrix h;  // canonical row Hermite form, zero rows dropped; rank rows
  IntMatrix u;  // unimodular, u * input = [h ; 0]
  size_t rank = 0;
};

// Canonical row HNF: pivots positive and strictly right-down, entries above
// each pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

// Basis of {v : v m = 0} as HNF rows (one row per kernel dimension).
IntMatrix kernel_basis(const IntMatrix& m);

// Some x with x m = b over the integers, if any.
std::optional<IntVec> solve_left(const IntMatrix& m, const IntVec& b);

// Determinant of a square matrix (fraction-free elimination; test support).
Int determinant(const IntMatrix& m);

}  // namespace ftfa

#endif
