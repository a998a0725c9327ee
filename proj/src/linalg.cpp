#include "dcond/linalg.hpp"

#include <omp.h>

#include "dcond/poly.hpp"  // kernels::threads

namespace dcond {
namespace kernels {

namespace {

// Shared pivot walk; eliminate() clears the pivot column from all other rows.
template <class Eliminate>
std::vector<int> rref_impl(QMatrix& m, Eliminate eliminate) {
  std::vector<int> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t p = row;
    while (p < m.rows && m.at(p, col) == 0) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (size_t j = col; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Rational inv = Rational(1) / m.at(row, col);
    for (size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    eliminate(m, row, col);
    pivots.push_back(int(col));
    ++row;
  }
  return pivots;
}

void eliminate_serial(QMatrix& m, size_t row, size_t col) {
  for (size_t i = 0; i < m.rows; ++i) {
    if (i == row || m.at(i, col) == 0) continue;
    Rational f = m.at(i, col);
    for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
  }
}

void eliminate_parallel(QMatrix& m, size_t row, size_t col) {
#pragma omp parallel for schedule(static) num_threads(threads())
  for (long i = 0; i < long(m.rows); ++i) {
    if (size_t(i) == row || m.at(i, col) == 0) continue;
    Rational f = m.at(i, col);
    for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
  }
}

}  // namespace

std::vector<int> rref_serial(QMatrix& m) {
  return rref_impl(m, eliminate_serial);
}

std::vector<int> rref_parallel(QMatrix& m) {
  return rref_impl(m, eliminate_parallel);
}

std::vector<int> rref(QMatrix& m) {
  if (m.rows >= 48 && threads() > 1) return rref_parallel(m);
  return rref_serial(m);
}

}  // namespace kernels

std::optional<std::vector<Rational>> solve_linear(
    const QMatrix& A, const std::vector<Rational>& b) {
  QMatrix m(A.rows, A.cols + 1);
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
    m.at(i, A.cols) = b[i];
  }
  std::vector<int> pivots = kernels::rref(m);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && size_t(pivots.back()) == A.cols) return std::nullopt;
  std::vector<Rational> x(A.cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.at(r, A.cols);
  return x;
}

}  // namespace dcond
