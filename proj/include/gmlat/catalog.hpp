#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmlat/discriminant.hpp"
#include "gmlat/gluing.hpp"
#include "gmlat/isometry.hpp"
#include "gmlat/lattice.hpp"

/// The lattices of Hodge-special Gushel-Mukai fourfolds inside I_{22,2} and the
/// lemma-level checks built on them.
namespace gmlat::gm {

/// Which L_d embedding when d = 2 mod 8: first has tau.lambda1 = 1, second tau.lambda2 = 1.
enum class Variant { first = 1, second = 2 };

/// Validated discriminant: d > 0 and d = 0, 2 or 4 mod 8.
class GMDiscriminant {
 public:
  /// Throws InvalidInput otherwise.
  explicit GMDiscriminant(std::int64_t d);

  std::int64_t d() const { return d_; }
  int residue_class() const { return static_cast<int>(d_ % 8); }
  int variants() const { return residue_class() == 2 ? 2 : 1; }
  /// Throws InvalidInput unless the variant exists for this d.
  void require_variant(Variant v) const;

 private:
  std::int64_t d_;
};

/// Admissible (d, variant) pairs in [lo, hi], d ascending, variant 1 before 2.
std::vector<std::pair<std::int64_t, Variant>> admissible_range(std::int64_t lo, std::int64_t hi);

/// Gram of L_d in the basis lambda1, lambda2, tau; det == d.
Lattice gram_Ld(std::int64_t d, Variant variant = Variant::first);

/// E8(-1)^2 + U^2 + I_1(-d), rank 21, signature (2,19); d even and positive.
Lattice gram_Lambda_d(std::int64_t d);

/// The ambient I_{22,2}.
Lattice gm_cohomology();
/// lambda1, lambda2 in I_{22,2} coordinates; their span has an even complement.
IntVector lambda1_vector();
IntVector lambda2_vector();
Embedding lambda_G();

struct LdPackage {
  std::int64_t d = 0;
  Variant variant = Variant::first;
  Lattice lattice;
  IntVector lambda1;  // ambient coordinates
  IntVector lambda2;
  IntVector tau;
  Embedding embedding;
  Embedding complement;
};

/// Explicit primitive embedding L_d -> I_{22,2}; every postcondition is checked and a
/// failure raises PostconditionFailure.
LdPackage embed_Ld(std::int64_t d, Variant variant = Variant::first);

/// Expected discriminant data of L_d: cyclic orders and generator lifts in the
/// lambda1, lambda2, tau basis.
struct ClosedFormDisc {
  IntVector orders;
  std::vector<RatVector> generators;
  std::vector<std::string> labels;
};
ClosedFormDisc closed_form_disc(std::int64_t d, Variant variant = Variant::first);

struct ClosedFormCheck {
  bool invariant_factors_match = false;
  bool generators_in_dual = false;
  bool generator_orders_match = false;
  bool generators_span = false;
  bool passed() const { return invariant_factors_match && generators_in_dual && generator_orders_match && generators_span; }
};
ClosedFormCheck check_closed_form(std::int64_t d, Variant variant = Variant::first);

/// G'(L_d) = isometries fixing lambda1 and lambda2. Asserts order 2 and the -id action.
std::vector<Isometry> marking_group(std::int64_t d, Variant variant = Variant::first,
                                    const EnumerationOptions& opts = {});
/// The nontrivial element of marking_group(d, variant).
Isometry marking_generator(std::int64_t d, Variant variant = Variant::first, const EnumerationOptions& opts = {});

/// True iff the map acts as -id on every generator.
bool acts_as_minus_identity(const FiniteQuadraticForm& disc, const DiscMap& action);

struct MarkedLabelledReport {
  std::int64_t d = 0;
  Variant variant = Variant::first;
  Integer glue_order;
  bool glue_total = false;
  bool glue_reverses_bilinear = false;
  bool gamma_acts_as_minus_id = false;
  bool extends_with_minus_id = false;  // gamma' (+) -id on the complement
  bool extends_with_identity = false;  // gamma' (+) id, the control case
  bool verdict() const { return glue_total && glue_reverses_bilinear && gamma_acts_as_minus_id && extends_with_minus_id; }
};
MarkedLabelledReport verify_marked_equals_labelled(std::int64_t d, Variant variant = Variant::first,
                                                   const EnumerationOptions& opts = {});

struct K3AssociationReport {
  std::int64_t d = 0;
  Signature complement_signature;
  Signature target_signature;
  bool signatures_match = false;
  /// One entry per embedding variant compared.
  std::vector<bool> forms_isomorphic;
  bool lattice_verdict = false;
  bool predicate = false;
  bool agrees() const { return lattice_verdict == predicate; }
};
/// L_d^perp vs Lambda_d(-1): signature plus quadratic discriminant form isomorphism.
K3AssociationReport k3_association_report(std::int64_t d);
bool k3_association(std::int64_t d);

struct MukaiReport {
  Signature complement_signature;
  bool complement_primitive = false;
  bool bilinear_anti_isometric = false;
  bool quadratic_anti_isometric = false;
  bool glue_total = false;
  bool reflection_trivial_on_disc = false;
  int reflection_orientation = 0;
  bool passed() const {
    return complement_signature == Signature{2, 20} && complement_primitive && bilinear_anti_isometric &&
           quadratic_anti_isometric && glue_total && reflection_trivial_on_disc && reflection_orientation == -1;
  }
};
/// The Mukai lattice U^4 + E8(-1)^2 with A1^2 spanned by e+f in the first two U blocks.
Lattice mukai_lattice();
Embedding mukai_a1_squared();
MukaiReport mukai_checks();

}  // namespace gmlat::gm
