#pragma once

#include <cstddef>
#include <string>

#include "gmlat/matrix.hpp"

namespace gmlat {

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
  Signature swapped() const { return {negative, positive}; }
};

std::string to_string(const Signature& s);

/// Signature of a symmetric integer matrix (may be degenerate: zero directions are
/// not counted). Computed by fraction-free symmetric elimination, no floating point.
Signature inertia(const IntMatrix& symmetric);

/// A nondegenerate integral symmetric bilinear form on Z^rank, given by its Gram matrix.
class Lattice {
 public:
  /// Validates squareness, symmetry and nondegeneracy; throws InvalidInput otherwise.
  static Lattice from_gram(IntMatrix gram);

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  bool even() const { return even_; }
  const Signature& signature() const { return signature_; }
  const Integer& determinant() const { return det_; }
  bool positive_definite() const { return signature_.negative == 0; }
  bool unimodular() const { return abs(det_) == 1; }

  Integer inner(const IntVector& x, const IntVector& y) const { return bilinear(gram_, x, y); }
  Rational inner(const RatVector& x, const RatVector& y) const { return bilinear(gram_, x, y); }
  Integer norm(const IntVector& x) const { return inner(x, x); }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  explicit Lattice(IntMatrix gram);

  IntMatrix gram_;
  Integer det_;
  bool even_ = true;
  Signature signature_;
};

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice direct_sum_power(const Lattice& a, std::size_t copies);
/// L(m): the form multiplied by m.
Lattice rescale(const Lattice& l, const Integer& m);

namespace lattices {
Lattice hyperbolic_plane();                       // U
Lattice e8();                                     // positive definite E8
Lattice a1();                                     // I_1(2)
Lattice scalar(const Integer& m);                 // I_1(m)
Lattice odd_unimodular(std::size_t positive, std::size_t negative);  // I_{r,s}
}  // namespace lattices

/// A sublattice of an ambient lattice given by coordinate rows in the ambient basis.
class Embedding {
 public:
  /// Throws InvalidInput unless basis_rows has full row rank and matches the ambient rank.
  Embedding(Lattice ambient, IntMatrix basis_rows);

  const Lattice& ambient() const { return ambient_; }
  const IntMatrix& basis_rows() const { return basis_rows_; }
  const IntMatrix& induced_gram() const { return induced_gram_; }
  std::size_t rank() const { return basis_rows_.rows(); }
  bool nondegenerate() const { return determinant(induced_gram_) != 0; }

  /// The sublattice with its induced form; throws InvalidInput if that form is degenerate.
  Lattice sublattice() const;

  /// Ambient coordinates of the sublattice vector with the given sublattice coordinates.
  IntVector to_ambient(const IntVector& coords) const;
  RatVector to_ambient(const RatVector& coords) const;

 private:
  Lattice ambient_;
  IntMatrix basis_rows_;
  IntMatrix induced_gram_;
};

/// True iff every invariant factor of the coordinate rows equals 1.
bool is_primitive(const Embedding& e);

/// Smith invariants of the coordinate rows (all 1 iff primitive).
IntVector primitivity_invariants(const Embedding& e);

/// Saturated kernel of v -> (v . b_i)_i inside the same ambient.
Embedding orthogonal_complement(const Embedding& e);

}  // namespace gmlat
