// Benchmark: serial reference vs OpenMP kernels (exact RREF over Q and bulk
// sparse polynomial products). Results are checked for exact equality.
#include <chrono>
#include <iostream>
#include <random>

#include "dcond/linalg.hpp"
#include "dcond/parse.hpp"

using namespace dcond;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

QMatrix random_matrix(size_t rows, size_t cols, std::mt19937_64& rng) {
  QMatrix m(rows, cols);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 7);
  for (auto& v : m.a) v = rat_make(num(rng), den(rng));
  return m;
}

Poly random_poly(const RingPtr& ring, size_t terms, int maxExp,
                 std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, maxExp);
  std::uniform_int_distribution<long> c(-9, 9);
  Poly p(ring);
  while (p.term_count() < terms) {
    Expvec ev(ring->size());
    for (auto& x : ev) x = e(rng);
    long cv = c(rng);
    if (cv) p.add_term(ev, Rational(cv));
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::mt19937_64 rng(20240817);

  std::cout << "threads available: " << kernels::threads() << "\n\n";

  {
    const size_t n = 96;
    QMatrix base = random_matrix(n, n + 1, rng);
    double ts = 0, tp = 0;
    bool equal = true;
    for (int r = 0; r < reps; ++r) {
      QMatrix a = base, b = base;
      auto t0 = Clock::now();
      kernels::rref_serial(a);
      ts += seconds_since(t0);
      t0 = Clock::now();
      kernels::rref_parallel(b);
      tp += seconds_since(t0);
      equal = equal && a.a == b.a;
    }
    std::cout << "exact RREF " << n << "x" << n + 1 << ":  serial "
              << ts / reps << " s   openmp " << tp / reps << " s   ("
              << (equal ? "identical results" : "MISMATCH") << ")\n";
  }

  {
    RingPtr ring = Ring::poly_ring({"x1", "x2", "x3", "x4"});
    Poly a = random_poly(ring, 600, 9, rng);
    Poly b = random_poly(ring, 60, 9, rng);
    double ts = 0, tp = 0;
    bool equal = true;
    for (int r = 0; r < reps; ++r) {
      auto t0 = Clock::now();
      Poly ps = kernels::mul_serial(a, b);
      ts += seconds_since(t0);
      t0 = Clock::now();
      Poly pp = kernels::mul_parallel(a, b);
      tp += seconds_since(t0);
      equal = equal && ps == pp;
    }
    std::cout << "sparse product " << a.term_count() << "x" << b.term_count()
              << " terms:  serial " << ts / reps << " s   openmp " << tp / reps
              << " s   (" << (equal ? "identical results" : "MISMATCH")
              << ")\n";
  }
  return 0;
}
