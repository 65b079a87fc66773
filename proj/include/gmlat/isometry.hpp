#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gmlat/discriminant.hpp"
#include "gmlat/lattice.hpp"

namespace gmlat {

inline constexpr std::uint64_t kDefaultMaxCandidates = 10'000'000;

struct EnumerationOptions {
  /// Hard cap on visited enumeration nodes; exceeding it raises EnumerationLimit.
  std::uint64_t max_candidates = kDefaultMaxCandidates;
};

/// An integer matrix M (column convention: column j is the image of basis vector j)
/// with M^T G M == G.
class Isometry {
 public:
  /// Throws InvalidInput if the matrix does not preserve the Gram matrix.
  Isometry(Lattice lattice, IntMatrix matrix);

  static Isometry identity(const Lattice& l);
  static Isometry negation(const Lattice& l);

  const Lattice& lattice() const { return lattice_; }
  const IntMatrix& matrix() const { return matrix_; }
  IntVector apply(const IntVector& v) const { return matrix_ * v; }
  RatVector apply(const RatVector& v) const { return matrix_ * v; }
  Integer determinant() const;

  /// this after other
  Isometry compose(const Isometry& other) const;
  Isometry inverse() const;

  friend bool operator==(const Isometry& a, const Isometry& b) { return a.matrix_ == b.matrix_ && a.lattice_ == b.lattice_; }

 private:
  Lattice lattice_;
  IntMatrix matrix_;
};

/// All nonzero v with v.v <= bound on a positive definite lattice.
std::vector<IntVector> short_vectors(const Lattice& l, const Integer& bound, const EnumerationOptions& opts = {});

/// The finite group of isometries fixing every listed vector (lattice coordinates).
/// Requires a positive definite lattice of rank <= 4. Order is deterministic (lexicographic images).
std::vector<Isometry> isometries(const Lattice& l, std::span<const IntVector> fixed = {},
                                 const EnumerationOptions& opts = {});

/// Induced action on generator coordinates of Disc(l); `disc` must come from discriminant_form(l).
DiscMap disc_action(const Isometry& g, const FiniteQuadraticForm& disc);
DiscMap disc_action(const Isometry& g);

/// Sign of det on a positive definite lattice.
int orientation_sign(const Isometry& g);

}  // namespace gmlat
