#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gmlat/lattice.hpp"

namespace gmlat {

/// Coordinates of a discriminant-group element in the invariant-factor presentation;
/// entry i is reduced modulo the i-th invariant factor.
using Element = std::vector<std::int64_t>;

enum class FormLevel { quadratic, bilinear };

/// How the group was obtained from a lattice: generator lifts in the lattice basis and
/// the map from dual vectors to generator coordinates.
struct DiscriminantPresentation {
  IntMatrix gram;
  /// Row i: coefficients c with coordinate_i(x) = c . (gram * x) mod d_i.
  IntMatrix coordinate_rows;
  /// Generator lifts in [0,1)^rank, one per invariant factor.
  std::vector<RatVector> generators;
};

/// A finite abelian group (cyclic factors each > 1; d_1 | d_2 | ... when built from a lattice) with a Q/Z-valued
/// bilinear form and, for even sources, a Q/2Z-valued quadratic form.
class FiniteQuadraticForm {
 public:
  /// Abstract form. bilinear is the full generator matrix (reduced mod 1), quadratic the
  /// generator values (reduced mod 2). Throws InvalidInput on inconsistent data.
  FiniteQuadraticForm(IntVector invariant_factors, std::vector<RatVector> bilinear,
                      std::optional<RatVector> quadratic);

  const IntVector& invariant_factors() const { return invariant_factors_; }
  std::size_t generator_count() const { return invariant_factors_.size(); }
  Integer order() const;
  bool has_quadratic() const { return quadratic_.has_value(); }
  const Rational& bilinear_value(std::size_t i, std::size_t j) const { return bilinear_[i][j]; }
  const Rational& quadratic_value(std::size_t i) const { return quadratic_->at(i); }
  const std::vector<RatVector>& bilinear_matrix() const { return bilinear_; }
  const std::optional<RatVector>& quadratic_values() const { return quadratic_; }

  const std::optional<DiscriminantPresentation>& presentation() const { return presentation_; }
  void set_presentation(DiscriminantPresentation p) { presentation_ = std::move(p); }

  /// The same group and forms with all values negated (the discriminant form of L(-1)).
  FiniteQuadraticForm negated() const;

  // Group arithmetic. Elements must have generator_count() entries.
  Element zero() const { return Element(generator_count(), 0); }
  Element generator(std::size_t i) const;
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(const Element& a, std::int64_t k) const;
  Element normalize(Element a) const;
  std::int64_t element_order(const Element& a) const;

  Rational b(const Element& x, const Element& y) const;
  /// Throws InvalidInput when the form has no quadratic refinement.
  Rational q(const Element& x) const;
  /// q when present, otherwise b(x, x).
  Rational value(const Element& x, FormLevel level) const;

  /// Enumerates every element, lexicographically. Throws EnumerationLimit above 10^6 elements.
  std::vector<Element> elements() const;
  std::size_t index_of(const Element& a) const;

  /// Generator coordinates of a dual vector (lattice basis coordinates); needs a presentation.
  /// Throws InvalidInput if x is not in the dual lattice.
  Element coordinates(const RatVector& x) const;
  /// Same, from the integral pairing vector gram * x.
  Element coordinates_from_pairing(const IntVector& pairing) const;
  bool in_dual(const RatVector& x) const;

 private:
  std::vector<std::int64_t> moduli_;
  IntVector invariant_factors_;
  std::vector<RatVector> bilinear_;
  std::optional<RatVector> quadratic_;
  std::optional<DiscriminantPresentation> presentation_;
};

/// Disc L = L^v / L with q populated iff l.even(); group order == |det|.
FiniteQuadraticForm discriminant_form(const Lattice& l);

/// A homomorphism between discriminant groups, given by the images of the domain generators.
struct DiscMap {
  std::vector<Element> images;

  Element apply(const FiniteQuadraticForm& codomain, const Element& x) const;
  friend bool operator==(const DiscMap&, const DiscMap&) = default;
};

DiscMap identity_map(const FiniteQuadraticForm& f);
/// (outer after inner)
DiscMap compose(const FiniteQuadraticForm& codomain, const DiscMap& outer, const DiscMap& inner);
bool is_bijective(const FiniteQuadraticForm& domain, const FiniteQuadraticForm& codomain, const DiscMap& m);
/// True iff m is a bijection preserving b (and q at quadratic level).
bool is_form_isometry(const FiniteQuadraticForm& domain, const FiniteQuadraticForm& codomain, const DiscMap& m,
                      FormLevel level);

/// Exhaustive, histogram-pruned search for an isometry f1 -> f2. Throws InvalidInput when
/// the quadratic level is requested on a form without q.
std::optional<DiscMap> forms_isomorphic(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                                        FormLevel level);

/// Every automorphism of f preserving b (and q at quadratic level), in lexicographic order.
std::vector<DiscMap> form_automorphisms(const FiniteQuadraticForm& f, FormLevel level);

/// Strongest level both forms support.
FormLevel common_level(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

}  // namespace gmlat
