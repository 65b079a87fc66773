#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gmlat/discriminant.hpp"
#include "gmlat/isometry.hpp"
#include "gmlat/lattice.hpp"

namespace gmlat {

/// The glue group H = ambient / (M + N) of a primitive orthogonal pair, viewed as a
/// subgroup of Disc M x Disc N. For primitive M and N it is the graph of an
/// isomorphism between subgroups of Disc M and Disc N that reverses b.
struct GlueMap {
  FiniteQuadraticForm disc_m;
  FiniteQuadraticForm disc_n;
  /// Every element of H, sorted by the Disc M component.
  std::vector<std::pair<Element, Element>> graph;
  /// Images of the ambient basis vectors; they generate H.
  std::vector<std::pair<Element, Element>> generators;
  bool ambient_even = false;

  Integer order() const { return Integer(static_cast<unsigned long>(graph.size())); }
  /// Graph of a bijection Disc M -> Disc N (always the case for a unimodular ambient).
  bool total() const;
  std::optional<Element> image(const Element& x) const;
  bool contains(const Element& x, const Element& y) const;
  /// b_N(y, y') == -b_M(x, x') on all of H.
  bool reverses_bilinear() const;
  /// q_N(y) == -q_M(x) on all of H; empty when either side has no q.
  std::optional<bool> reverses_quadratic() const;
};

/// Requires m and n to be primitive, mutually orthogonal, nondegenerate and of
/// complementary rank in the same ambient lattice.
GlueMap glue_map(const Embedding& m, const Embedding& n);

/// Nikulin's criterion: gm (+) gn extends to the ambient lattice iff the induced
/// discriminant actions map the glue graph onto itself.
bool extends_to_ambient(const Isometry& gm, const Isometry& gn, const GlueMap& glue);

}  // namespace gmlat
