#pragma once

#include <random>
#include <vector>

#include "gmlat/lattice.hpp"
#include "gmlat/matrix.hpp"

namespace gmlat::test {

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Rational rq(long num, long den = 1) { return make_rational(num, den); }

inline RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  IntMatrix m = random_matrix(rng, n, n, lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
  return m;
}

/// Random nondegenerate lattice with entries in [lo, hi].
inline Lattice random_lattice(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  for (;;) {
    IntMatrix g = random_symmetric(rng, n, lo, hi);
    if (determinant(g) != 0) return Lattice::from_gram(std::move(g));
  }
}

/// Random positive definite Gram A^T A + diag shift, small entries.
inline Lattice random_positive_definite(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    IntMatrix a = random_matrix(rng, n, n, -1, 1);
    IntMatrix g = a.transpose() * a;
    for (std::size_t i = 0; i < n; ++i) g(i, i) += 1;
    if (determinant(g) != 0) return Lattice::from_gram(std::move(g));
  }
}

/// Gcd of all maximal minors of a full-row-rank matrix; 1 iff the row span is saturated.
inline Integer maximal_minor_gcd(const IntMatrix& m) {
  const std::size_t r = m.rows(), n = m.cols();
  Integer g = 0;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  for (;;) {
    IntMatrix sub(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(i, pick[j]);
    Integer det = determinant(sub);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    std::size_t k = r;
    while (k > 0 && pick[k - 1] == n - r + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

}  // namespace gmlat::test
