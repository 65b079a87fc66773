// Acceptance criteria AC1-AC10: one PASS/FAIL line each; exit status 1 if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gmlat/catalog.hpp"
#include "gmlat/counting.hpp"
#include "gmlat/gluing.hpp"

using namespace gmlat;
using gm::Variant;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      detail << (ok ? "" : "; ") << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double budget_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(elapsed < budget_seconds, "runtime over budget");
  if (!c.ok) ++failures;
  std::printf("%s %s %s (%.2fs, budget %.0fs)%s%s\n", id, c.ok ? "PASS" : "FAIL", title, elapsed, budget_seconds,
              c.ok ? "" : ": ", c.ok ? "" : c.detail.str().c_str());
  std::fflush(stdout);
}

std::string at(std::int64_t d, Variant v) {
  return "d=" + std::to_string(d) + (d % 8 == 2 ? " v" + std::to_string(static_cast<int>(v)) : "");
}

Lattice random_positive_definite(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> dist(-1, 1);
  for (;;) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
    IntMatrix g = a.transpose() * a;
    for (std::size_t i = 0; i < n; ++i) g(i, i) += 1;
    if (determinant(g) != 0) return Lattice::from_gram(std::move(g));
  }
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

int main() {
  criterion("AC1", "Disc(L_d) closed forms, admissible 8 <= d <= 400", 10, [](Check& c) {
    std::size_t n = 0;
    for (const auto& [d, v] : gm::admissible_range(8, 400)) {
      const auto check = gm::check_closed_form(d, v);
      c.expect(check.passed(), "closed form mismatch at " + at(d, v));
      c.expect(gm::gram_Ld(d, v).determinant() == d, "det != d at " + at(d, v));
      if (d % 8 == 4) {
        // The uncorrected cyclic generator (lambda1 + lambda2 - 2 tau)/d is not a dual vector.
        const Integer D(static_cast<long>(d));
        c.expect(!discriminant_form(gm::gram_Ld(d)).in_dual(
                     {make_rational(1, D), make_rational(1, D), make_rational(-2, D)}),
                 "uncorrected generator unexpectedly dual at d=" + std::to_string(d));
      }
      ++n;
    }
    std::size_t expected = 0;
    for (std::int64_t d = 8; d <= 400; d += 2) expected += d % 8 == 2 ? 2 : d % 8 == 6 ? 0 : 1;
    c.expect(n == expected, "unexpected number of (d, variant) pairs");
  });

  criterion("AC2", "|G'(L_d)| = 2 acting as -id, admissible 8 <= d <= 200", 30, [](Check& c) {
    for (const auto& [d, v] : gm::admissible_range(8, 200)) {
      const auto group = gm::marking_group(d, v);  // asserts order 2 and -id internally
      c.expect(group.size() == 2, "order != 2 at " + at(d, v));
      const FiniteQuadraticForm disc = discriminant_form(gm::gram_Ld(d, v));
      const Isometry g = gm::marking_generator(d, v);
      c.expect(gm::acts_as_minus_identity(disc, disc_action(g, disc)), "not -id at " + at(d, v));
      c.expect(disc.has_quadratic() == (d % 8 != 2), "form level mismatch at " + at(d, v));
    }
  });

  criterion("AC3", "glue on (L_d, L_d^perp) in I_{22,2} and extension of gamma' + (-id), admissible d <= 100", 60,
            [](Check& c) {
              for (const auto& [d, v] : gm::admissible_range(2, 100)) {
                const auto rep = gm::verify_marked_equals_labelled(d, v);
                c.expect(rep.glue_total, "glue not total at " + at(d, v));
                c.expect(rep.glue_order == d, "glue order != d at " + at(d, v));
                c.expect(rep.glue_reverses_bilinear, "glue not b-reversing at " + at(d, v));
                c.expect(rep.extends_with_minus_id, "gamma' + (-id) does not extend at " + at(d, v));
              }
              c.expect(!gm::verify_marked_equals_labelled(12).extends_with_identity,
                       "control gamma' + id extends at d=12");
            });

  criterion("AC4", "k3_association(d) == (**), admissible 10 <= d <= 120", 300, [](Check& c) {
    std::set<std::int64_t> seen;
    for (const auto& [d, v] : gm::admissible_range(10, 120)) {
      if (!seen.insert(d).second) continue;
      const auto rep = gm::k3_association_report(d);
      c.expect(rep.agrees(), "verdict disagrees with (**) at d=" + std::to_string(d));
    }
    for (std::int64_t d : {12, 28, 56}) c.expect(!gm::k3_association(d), "expected false at " + std::to_string(d));
    for (std::int64_t d : {10, 20, 26}) c.expect(gm::k3_association(d), "expected true at " + std::to_string(d));
  });

  criterion("AC5", "untwisted counts m = 2^(tau-1) and the residue rule", 1, [](Check& c) {
    const std::vector<std::array<std::int64_t, 3>> table = {{10, 1, 2}, {20, 2, 2}, {26, 1, 2}, {52, 2, 2}};
    for (const auto& [d, m, fibers] : table) {
      const auto rep = counting::untwisted_counts(d);
      c.expect(rep.m == m && rep.fiber_count == fibers, "spot value mismatch at d=" + std::to_string(d));
    }
    for (std::int64_t d = 9; d <= 1000; ++d) {
      if (!counting::satisfies_star_star(d)) continue;
      const auto rep = counting::untwisted_counts(d);
      c.expect(rep.m == (std::int64_t{1} << (counting::tau(d) - 1)), "m formula at d=" + std::to_string(d));
      c.expect(rep.fiber_count == (d % 8 == 4 ? rep.m : 2 * rep.m), "residue rule at d=" + std::to_string(d));
    }
  });

  criterion("AC6", "twisted decompositions and m' table, (2,2) refused", 1, [](Check& c) {
    using counting::Decomposition;
    struct Row {
      std::int64_t d_prime;
      std::vector<Decomposition> decs;
      std::int64_t m_prime;
      std::int64_t lower;
    };
    const std::vector<Row> table = {{16, {{4, 2}}, 1, 1}, {18, {{2, 3}}, 1, 2}, {36, {{4, 3}}, 2, 2}, {40, {{10, 2}}, 1, 1}};
    for (const auto& row : table) {
      const auto decs = counting::twisted_decompositions(row.d_prime);
      c.expect(decs == row.decs, "decompositions of " + std::to_string(row.d_prime));
      const auto t = counting::twisted_counts(row.decs[0].d, row.decs[0].r);
      c.expect(t.m_prime == row.m_prime, "m' for d'=" + std::to_string(row.d_prime));
      c.expect(t.fiber_lower_bound == row.lower, "fiber bound for d'=" + std::to_string(row.d_prime));
    }
    bool refused = false;
    try {
      counting::twisted_counts(2, 2);
    } catch (const InvalidInput& e) {
      refused = std::string(e.what()).find("1/2") != std::string::npos;
    }
    c.expect(refused, "(2,2) not refused with the degeneracy message");
  });

  criterion("AC7", "(**') prime-exponent form == decomposition form, d' <= 10000", 10, [](Check& c) {
    for (std::int64_t dp = 1; dp <= 10000; ++dp) {
      const std::int64_t r8 = dp % 8;
      if (r8 != 0 && r8 != 2 && r8 != 4) continue;
      c.expect(counting::satisfies_star_star_prime(dp) == counting::has_star_star_decomposition(dp),
               "disagreement at d'=" + std::to_string(dp));
    }
  });

  criterion("AC8", "O(L_d) -> O(Disc L_d) surjective, admissible d <= 60", 120, [](Check& c) {
    for (const auto& [d, v] : gm::admissible_range(2, 60)) {
      const auto rep = counting::disc_surjectivity_report(gm::gram_Ld(d, v));
      c.expect(rep.surjective, "not surjective at " + at(d, v) + " (image " + std::to_string(rep.image_order) +
                                   " of " + std::to_string(rep.form_automorphism_order) + ")");
    }
  });

  criterion("AC9", "Mukai lattice: A1^2 complement and the reflection diag(-1,1)", 5, [](Check& c) {
    const auto rep = gm::mukai_checks();
    c.expect(rep.complement_signature == (Signature{2, 20}), "complement signature");
    c.expect(rep.complement_primitive, "complement not primitive");
    c.expect(rep.bilinear_anti_isometric && rep.quadratic_anti_isometric, "disc forms not anti-isometric");
    c.expect(rep.glue_total, "glue not a total q-reversing bijection");
    c.expect(rep.reflection_trivial_on_disc, "reflection acts nontrivially on Disc");
    c.expect(rep.reflection_orientation == -1, "reflection preserves orientation");
  });

  criterion("AC10", "randomized core properties (seed 20240521)", 60, [](Check& c) {
    std::mt19937_64 rng(20240521);
    // Index-determinant law and |det| = |Disc|.
    for (int t = 0; t < 60; ++t) {
      const Lattice l = random_positive_definite(rng, 3);
      const IntMatrix m = random_matrix(rng, 3, 3, -3, 3);
      const Integer index = abs(determinant(m));
      if (index == 0) continue;
      const Lattice sub = Embedding(l, m).sublattice();
      c.expect(sub.determinant() == l.determinant() * index * index, "index-determinant law");
      c.expect(discriminant_form(sub).order() == abs(sub.determinant()), "|Disc| != |det|");
    }
    // Glue order law inside the odd unimodular U + U + I_{1,1}.
    const Lattice amb = direct_sum(direct_sum(lattices::hyperbolic_plane(), lattices::hyperbolic_plane()),
                                   lattices::odd_unimodular(1, 1));
    int glued = 0;
    for (int t = 0; t < 300 && glued < 40; ++t) {
      const IntMatrix v = random_matrix(rng, 1 + t % 2, 6, -2, 2);
      if (matrix_rank(v) < v.rows()) continue;
      const Embedding m(amb, hermite_normal_form(integer_kernel(integer_kernel(v))));
      if (!m.nondegenerate()) continue;
      const Embedding n = orthogonal_complement(m);
      const GlueMap glue = glue_map(m, n);
      ++glued;
      const Integer dm = abs(m.sublattice().determinant()), dn = abs(n.sublattice().determinant());
      c.expect(glue.order() * glue.order() == dm * dn && dm == dn, "glue order law");
      c.expect(glue.total() && glue.reverses_bilinear(), "glue not a b-reversing bijection");
      c.expect(extends_to_ambient(Isometry::identity(m.sublattice()), Isometry::identity(n.sublattice()), glue),
               "id + id does not extend");
      c.expect(extends_to_ambient(Isometry::negation(m.sublattice()), Isometry::negation(n.sublattice()), glue),
               "-id + -id does not extend");
    }
    c.expect(glued >= 20, "too few glue instances");
    // Group axioms and functoriality of disc_action.
    for (int t = 0; t < 12; ++t) {
      const Lattice l = random_positive_definite(rng, 2 + t % 2);
      const auto group = isometries(l);
      const FiniteQuadraticForm f = discriminant_form(l);
      std::set<std::vector<Integer>> keys;
      auto key = [](const Isometry& g) {
        std::vector<Integer> k;
        for (std::size_t i = 0; i < g.matrix().rows(); ++i)
          for (std::size_t j = 0; j < g.matrix().cols(); ++j) k.push_back(g.matrix()(i, j));
        return k;
      };
      for (const auto& g : group) keys.insert(key(g));
      c.expect(keys.size() == group.size(), "duplicate isometries");
      c.expect(keys.count(key(Isometry::identity(l))) == 1, "identity missing");
      for (const auto& a : group) {
        c.expect(keys.count(key(a.inverse())) == 1, "not closed under inverse");
        for (const auto& b : group) {
          c.expect(keys.count(key(a.compose(b))) == 1, "not closed under composition");
          c.expect(disc_action(a.compose(b), f) == compose(f, disc_action(a, f), disc_action(b, f)),
                   "disc_action not functorial");
        }
      }
    }
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
  return failures == 0 ? 0 : 1;
}
