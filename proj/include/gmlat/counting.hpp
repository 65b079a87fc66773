#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gmlat/isometry.hpp"
#include "gmlat/lattice.hpp"

namespace gmlat::counting {

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t euler_phi(std::int64_t r);

/// Number of distinct primes dividing d/2 (d even, positive).
int tau(std::int64_t d);

/// d = 2,4 mod 8 and no prime p = 3 mod 4 divides d.
bool satisfies_star_star(std::int64_t d);

/// Every prime p = 3 mod 4 divides d' to an even power.
bool satisfies_star_star_prime(std::int64_t d_prime);

struct Decomposition {
  std::int64_t d = 0;
  std::int64_t r = 0;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct DecompositionOptions {
  bool include_r1 = false;
};

/// All (d, r) with d*r^2 == d', r >= 2 (r >= 1 with include_r1) and d satisfying (**),
/// sorted by r ascending.
std::vector<Decomposition> twisted_decompositions(std::int64_t d_prime, const DecompositionOptions& opts = {});

/// Decomposition-existence form of (**'): some d*r^2 == d' with r >= 1 and d satisfying (**).
bool has_star_star_decomposition(std::int64_t d_prime);

struct CountReport {
  std::int64_t d = 0;
  bool satisfies_star_star = false;
  int tau = 0;
  std::int64_t m = 0;
  std::int64_t fiber_count = 0;
  int multiplicity_factor = 0;
};

/// Requires (**) and d > 8.
CountReport untwisted_counts(std::int64_t d);

struct TwistedCount {
  std::int64_t d = 0;
  std::int64_t r = 0;
  std::int64_t m_prime = 0;
  std::int64_t fiber_lower_bound = 0;
};

/// Requires (**) on d, r >= 2 and (d, r) != (2, 2).
TwistedCount twisted_counts(std::int64_t d, std::int64_t r);

struct TwistedReport {
  std::int64_t d_prime = 0;
  bool satisfies_star_star_prime = false;
  std::vector<Decomposition> decompositions;
  std::vector<TwistedCount> per_decomposition;
  /// Decompositions for which the count formula is undefined ((2, 2)).
  std::vector<Decomposition> unsupported;
};

TwistedReport twisted_report(std::int64_t d_prime, const DecompositionOptions& opts = {});

/// ker(w) inside Lambda_d for w given as residues mod r against the block basis of Lambda_d.
/// w must have order exactly r.
Embedding make_Tw(std::int64_t d, std::int64_t r, const std::vector<std::int64_t>& w);

struct SurjectivityReport {
  std::size_t isometry_group_order = 0;
  std::size_t image_order = 0;
  std::size_t form_automorphism_order = 0;
  bool quadratic_level = false;
  bool surjective = false;
};

/// Compares the image of O(l) in O(Disc l) with the full automorphism group of the
/// discriminant form (q when l is even, b otherwise). l positive definite, rank <= 4.
SurjectivityReport disc_surjectivity_report(const Lattice& l, const EnumerationOptions& opts = {});
bool disc_surjectivity(const Lattice& l, const EnumerationOptions& opts = {});

}  // namespace gmlat::counting
