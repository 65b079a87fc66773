#include "gmlat/catalog.hpp"

#include "gmlat/counting.hpp"

namespace gmlat::gm {

namespace {

constexpr std::size_t kAmbientRank = 24;  // I_{22,2}: e1..e22 positive, f1, f2 negative
constexpr std::size_t kF1 = 22;
constexpr std::size_t kF2 = 23;

IntVector unit(std::size_t i) {
  IntVector v(kAmbientRank, Integer(0));
  v[i] = 1;
  return v;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

IntVector scale(const IntVector& a, const Integer& k) {
  IntVector c = a;
  for (auto& x : c) x *= k;
  return c;
}

// Hyperbolic pair (e, f) inside lambda_G^perp, orthogonal to e11 and e12.
IntVector hyperbolic_e() {
  IntVector v(kAmbientRank, Integer(0));
  for (std::size_t i = 0; i < 9; ++i) v[i] = 1;
  v[kF1] = 3;
  return v;
}

IntVector hyperbolic_f() {
  IntVector y = add(unit(8), scale(unit(9), -1));  // e9 - e10, norm 2, y.e = 1
  return add(y, scale(hyperbolic_e(), -1));
}

std::string describe(std::int64_t d, Variant v) {
  return "d = " + std::to_string(d) + (d % 8 == 2 ? ", variant " + std::to_string(static_cast<int>(v)) : "");
}

}  // namespace

GMDiscriminant::GMDiscriminant(std::int64_t d) : d_(d) {
  if (d <= 0) throw InvalidInput("discriminant must be positive, got " + std::to_string(d));
  const std::int64_t r = d % 8;
  if (r != 0 && r != 2 && r != 4)
    throw InvalidInput("discriminant " + std::to_string(d) + " is not 0, 2 or 4 mod 8 (it is " + std::to_string(r) +
                       " mod 8)");
}

void GMDiscriminant::require_variant(Variant v) const {
  if (v != Variant::first && v != Variant::second) throw InvalidInput("variant must be 1 or 2");
  if (v == Variant::second && variants() == 1)
    throw InvalidInput("variant 2 exists only for d = 2 mod 8; d = " + std::to_string(d_) + " is " +
                       std::to_string(residue_class()) + " mod 8");
}

std::vector<std::pair<std::int64_t, Variant>> admissible_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::pair<std::int64_t, Variant>> out;
  for (std::int64_t d = std::max<std::int64_t>(lo, 1); d <= hi; ++d) {
    const std::int64_t r = d % 8;
    if (r != 0 && r != 2 && r != 4) continue;
    out.emplace_back(d, Variant::first);
    if (r == 2) out.emplace_back(d, Variant::second);
  }
  return out;
}

Lattice gram_Ld(std::int64_t d, Variant variant) {
  GMDiscriminant disc(d);
  disc.require_variant(variant);
  IntMatrix g = IntMatrix::diagonal({2, 2, 0});
  switch (disc.residue_class()) {
    case 0:
      g(2, 2) = d / 4;
      break;
    case 2: {
      const std::size_t partner = variant == Variant::first ? 0 : 1;
      g(2, 2) = (d + 2) / 4;
      g(partner, 2) = g(2, partner) = 1;
      break;
    }
    default:
      g(2, 2) = (d + 4) / 4;
      g(0, 2) = g(2, 0) = g(1, 2) = g(2, 1) = 1;
      break;
  }
  Lattice l = Lattice::from_gram(std::move(g));
  if (l.determinant() != d) throw PostconditionFailure("gram_Ld determinant is not d for " + describe(d, variant));
  return l;
}

Lattice gram_Lambda_d(std::int64_t d) {
  if (d <= 0 || d % 2 != 0)
    throw InvalidInput("Lambda_d needs a positive even d (odd d gives an odd lattice), got " + std::to_string(d));
  const Lattice e8m = rescale(lattices::e8(), -1);
  const Lattice u = lattices::hyperbolic_plane();
  Lattice l = direct_sum(direct_sum(direct_sum(e8m, e8m), direct_sum(u, u)), lattices::scalar(-d));
  return l;
}

Lattice gm_cohomology() { return lattices::odd_unimodular(22, 2); }

IntVector lambda1_vector() {
  IntVector v(kAmbientRank, Integer(0));
  for (std::size_t i = 0; i < 11; ++i) v[i] = 1;
  v[kF1] = 3;
  return v;
}

IntVector lambda2_vector() {
  IntVector v(kAmbientRank, Integer(0));
  for (std::size_t i = 11; i < 22; ++i) v[i] = 1;
  v[kF2] = 3;
  return v;
}

Embedding lambda_G() {
  return Embedding(gm_cohomology(), IntMatrix::from_rows({lambda1_vector(), lambda2_vector()}, kAmbientRank));
}

LdPackage embed_Ld(std::int64_t d, Variant variant) {
  GMDiscriminant disc(d);
  disc.require_variant(variant);
  const std::int64_t k = d / 8;
  const IntVector hyperbolic = add(hyperbolic_e(), scale(hyperbolic_f(), k));  // norm 2k
  IntVector tau;
  switch (disc.residue_class()) {
    case 0:
      tau = hyperbolic;
      break;
    case 2:
      tau = add(unit(variant == Variant::first ? 10 : 11), hyperbolic);
      break;
    default:
      tau = add(add(unit(10), unit(11)), hyperbolic);
      break;
  }
  const IntVector l1 = lambda1_vector();
  const IntVector l2 = lambda2_vector();
  Embedding embedding(gm_cohomology(), IntMatrix::from_rows({l1, l2, tau}, kAmbientRank));
  Lattice lattice = gram_Ld(d, variant);

  if (embedding.induced_gram() != lattice.gram())
    throw PostconditionFailure("embedded L_d has the wrong Gram matrix for " + describe(d, variant));
  const IntVector invariants = primitivity_invariants(embedding);
  for (const auto& f : invariants)
    if (f != 1)
      throw PostconditionFailure("embedding of L_d is not primitive for " + describe(d, variant) +
                                 " (Smith invariant " + f.get_str() + ")");
  Embedding complement = orthogonal_complement(embedding);
  const Lattice comp = complement.sublattice();
  if (!comp.even() || comp.signature() != Signature{19, 2})
    throw PostconditionFailure("complement of L_d is not even of signature (19,2) for " + describe(d, variant));
  return LdPackage{d, variant, std::move(lattice), l1, l2, std::move(tau), std::move(embedding), std::move(complement)};
}

ClosedFormDisc closed_form_disc(std::int64_t d, Variant variant) {
  GMDiscriminant disc(d);
  disc.require_variant(variant);
  const Integer D(static_cast<long>(d));
  ClosedFormDisc out;
  auto vec = [](Rational a, Rational b, Rational c) { return RatVector{a, b, c}; };
  switch (disc.residue_class()) {
    case 0:
      out.orders = {2, 2, D / 4};
      out.generators = {vec(Rational(1, 2), 0, 0), vec(0, Rational(1, 2), 0), vec(0, 0, make_rational(4, D))};
      out.labels = {"lambda1/2", "lambda2/2", "tau/(d/4)"};
      break;
    case 2:
      out.orders = {2, D / 2};
      if (variant == Variant::second) {
        out.generators = {vec(Rational(1, 2), 0, 0), vec(0, make_rational(2, D), make_rational(-4, D))};
        out.labels = {"lambda1/2", "(lambda2-2tau)/(d/2)"};
      } else {
        out.generators = {vec(0, Rational(1, 2), 0), vec(make_rational(2, D), 0, make_rational(-4, D))};
        out.labels = {"lambda2/2", "(lambda1-2tau)/(d/2)"};
      }
      break;
    default:
      // (lambda1 + lambda2 - 2 tau)/d + lambda1/2; without the lambda1/2 shift the vector
      // pairs with tau to -1/2 and is not dual.
      out.orders = {D};
      out.generators = {vec(make_rational(D + 2, 2 * D), make_rational(1, D), make_rational(-2, D))};
      out.labels = {"((d+2)/2*lambda1+lambda2-2tau)/d"};
      break;
  }
  // d = 2 leaves a trivial cyclic summand.
  for (std::size_t i = out.orders.size(); i-- > 0;)
    if (out.orders[i] == 1) {
      out.orders.erase(out.orders.begin() + static_cast<std::ptrdiff_t>(i));
      out.generators.erase(out.generators.begin() + static_cast<std::ptrdiff_t>(i));
      out.labels.erase(out.labels.begin() + static_cast<std::ptrdiff_t>(i));
    }
  return out;
}

ClosedFormCheck check_closed_form(std::int64_t d, Variant variant) {
  const Lattice l = gram_Ld(d, variant);
  const FiniteQuadraticForm disc = discriminant_form(l);
  const ClosedFormDisc expected = closed_form_disc(d, variant);
  ClosedFormCheck check;

  IntVector expected_factors;
  for (const auto& f : smith_normal_form(IntMatrix::diagonal(expected.orders)).invariants)
    if (f > 1) expected_factors.push_back(f);
  check.invariant_factors_match = expected_factors == disc.invariant_factors();

  check.generators_in_dual = true;
  for (const auto& g : expected.generators) check.generators_in_dual = check.generators_in_dual && disc.in_dual(g);
  if (!check.generators_in_dual) return check;

  DiscMap map;
  check.generator_orders_match = true;
  for (std::size_t i = 0; i < expected.generators.size(); ++i) {
    map.images.push_back(disc.coordinates(expected.generators[i]));
    if (Integer(static_cast<long>(disc.element_order(map.images.back()))) != expected.orders[i])
      check.generator_orders_match = false;
  }
  if (!check.generator_orders_match) return check;

  // The stated generators, with their form values, as an abstract group.
  const std::size_t n = expected.generators.size();
  std::vector<RatVector> bmat(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bmat[i][j] = l.inner(expected.generators[i], expected.generators[j]);
  std::optional<RatVector> qv;
  if (l.even()) {
    qv.emplace();
    for (const auto& g : expected.generators) qv->push_back(l.inner(g, g));
  }
  const FiniteQuadraticForm stated(expected.orders, std::move(bmat), std::move(qv));
  check.generators_span = is_form_isometry(stated, disc, map, l.even() ? FormLevel::quadratic : FormLevel::bilinear);
  return check;
}

bool acts_as_minus_identity(const FiniteQuadraticForm& disc, const DiscMap& action) {
  for (std::size_t i = 0; i < disc.generator_count(); ++i)
    if (action.images.at(i) != disc.negate(disc.generator(i))) return false;
  return true;
}

std::vector<Isometry> marking_group(std::int64_t d, Variant variant, const EnumerationOptions& opts) {
  const Lattice l = gram_Ld(d, variant);
  const std::vector<IntVector> fixed = {{1, 0, 0}, {0, 1, 0}};
  std::vector<Isometry> group = isometries(l, fixed, opts);
  if (group.size() != 2)
    throw PostconditionFailure("G'(L_d) has order " + std::to_string(group.size()) + ", expected 2, for " +
                               describe(d, variant));
  const FiniteQuadraticForm disc = discriminant_form(l);
  for (const auto& g : group) {
    if (g == Isometry::identity(l)) continue;
    if (!acts_as_minus_identity(disc, disc_action(g, disc)))
      throw PostconditionFailure("nontrivial element of G'(L_d) does not act as -id on Disc for " +
                                 describe(d, variant));
  }
  return group;
}

Isometry marking_generator(std::int64_t d, Variant variant, const EnumerationOptions& opts) {
  for (auto& g : marking_group(d, variant, opts))
    if (!(g == Isometry::identity(g.lattice()))) return g;
  throw PostconditionFailure("G'(L_d) has no nontrivial element");
}

MarkedLabelledReport verify_marked_equals_labelled(std::int64_t d, Variant variant, const EnumerationOptions& opts) {
  const LdPackage pkg = embed_Ld(d, variant);
  const GlueMap glue = glue_map(pkg.embedding, pkg.complement);
  const Isometry gamma = marking_generator(d, variant, opts);
  const Lattice comp = pkg.complement.sublattice();

  MarkedLabelledReport rep;
  rep.d = d;
  rep.variant = variant;
  rep.glue_order = glue.order();
  rep.glue_total = glue.total();
  rep.glue_reverses_bilinear = glue.reverses_bilinear();
  rep.gamma_acts_as_minus_id = acts_as_minus_identity(glue.disc_m, disc_action(gamma, glue.disc_m));
  rep.extends_with_minus_id = extends_to_ambient(gamma, Isometry::negation(comp), glue);
  rep.extends_with_identity = extends_to_ambient(gamma, Isometry::identity(comp), glue);
  return rep;
}

K3AssociationReport k3_association_report(std::int64_t d) {
  GMDiscriminant disc(d);
  const Lattice target = rescale(gram_Lambda_d(d), -1);
  const FiniteQuadraticForm target_disc = discriminant_form(target);

  K3AssociationReport rep;
  rep.d = d;
  rep.target_signature = target.signature();
  rep.signatures_match = true;
  for (int v = 1; v <= disc.variants(); ++v) {
    const LdPackage pkg = embed_Ld(d, static_cast<Variant>(v));
    const Lattice comp = pkg.complement.sublattice();
    rep.complement_signature = comp.signature();
    rep.signatures_match = rep.signatures_match && comp.signature() == target.signature();
    rep.forms_isomorphic.push_back(
        forms_isomorphic(discriminant_form(comp), target_disc, FormLevel::quadratic).has_value());
  }
  rep.lattice_verdict = rep.signatures_match;
  for (bool iso : rep.forms_isomorphic) rep.lattice_verdict = rep.lattice_verdict && iso;
  rep.predicate = counting::satisfies_star_star(d);
  return rep;
}

bool k3_association(std::int64_t d) { return k3_association_report(d).lattice_verdict; }

Lattice mukai_lattice() {
  const Lattice u = lattices::hyperbolic_plane();
  const Lattice e8m = rescale(lattices::e8(), -1);
  return direct_sum(direct_sum_power(u, 4), direct_sum(e8m, e8m));
}

Embedding mukai_a1_squared() {
  IntMatrix rows(2, 24);
  rows(0, 0) = rows(0, 1) = 1;
  rows(1, 2) = rows(1, 3) = 1;
  return Embedding(mukai_lattice(), std::move(rows));
}

MukaiReport mukai_checks() {
  const Embedding a1sq = mukai_a1_squared();
  const Embedding comp = orthogonal_complement(a1sq);
  const Lattice a = a1sq.sublattice();
  const Lattice c = comp.sublattice();
  const FiniteQuadraticForm disc_a = discriminant_form(a);
  const FiniteQuadraticForm disc_c = discriminant_form(c);

  MukaiReport rep;
  rep.complement_signature = c.signature();
  rep.complement_primitive = is_primitive(comp);
  const FiniteQuadraticForm anti = disc_a.negated();
  rep.bilinear_anti_isometric = forms_isomorphic(disc_c, anti, FormLevel::bilinear).has_value();
  rep.quadratic_anti_isometric = forms_isomorphic(disc_c, anti, FormLevel::quadratic).has_value();
  const GlueMap glue = glue_map(a1sq, comp);
  rep.glue_total = glue.total() && glue.reverses_bilinear() && glue.reverses_quadratic().value_or(false);

  const Isometry reflection(a, IntMatrix{{-1, 0}, {0, 1}});
  rep.reflection_trivial_on_disc = disc_action(reflection, disc_a) == identity_map(disc_a);
  rep.reflection_orientation = orientation_sign(reflection);
  return rep;
}

}  // namespace gmlat::gm
