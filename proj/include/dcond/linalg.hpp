#pragma once

#include <optional>
#include <vector>

#include "dcond/rational.hpp"

namespace dcond {

// Dense exact matrix over Q, row-major.
struct QMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}
  Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

namespace kernels {
// Reduced row echelon form with deterministic pivoting (first nonzero row
// per column, scanning top-down). Returns pivot column per pivot row.
// Serial reference and OpenMP row-elimination variant produce identical
// matrices.
std::vector<int> rref_serial(QMatrix& m);
std::vector<int> rref_parallel(QMatrix& m);
std::vector<int> rref(QMatrix& m);  // dispatch
}  // namespace kernels

// Solve A x = b. Returns a particular solution with all free variables set
// to zero (deterministic), or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_linear(const QMatrix& A,
                                                  const std::vector<Rational>& b);

}  // namespace dcond
