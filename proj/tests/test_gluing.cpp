#include <gtest/gtest.h>

#include "gmlat/catalog.hpp"
#include "gmlat/gluing.hpp"
#include "support.hpp"

using namespace gmlat;
using gmlat::test::iv;

namespace {

// gm (+) gn extends iff P^T Blk (P^T)^{-1} is integral, with P the stacked basis rows of m and n.
bool extends_by_lift(const Embedding& m, const Embedding& n, const IntMatrix& gm, const IntMatrix& gn) {
  const std::size_t r = m.rank(), s = n.rank(), k = r + s;
  IntMatrix p(k, k);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) p(i, j) = m.basis_rows()(i, j);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < k; ++j) p(r + i, j) = n.basis_rows()(i, j);
  const IntMatrix pt = p.transpose();
  const RationalInverse inv = rational_inverse(pt);
  const IntMatrix lifted = pt * block_diagonal(gm, gn) * inv.numerator;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (lifted(i, j) % inv.denominator != 0) return false;
  return true;
}

Embedding row_embedding(const Lattice& amb, std::initializer_list<std::initializer_list<long>> rows) {
  return Embedding(amb, IntMatrix(rows));
}

}  // namespace

TEST(Glue, RankOneInsideU) {
  const Lattice u = lattices::hyperbolic_plane();
  Embedding m = row_embedding(u, {{1, 1}});
  Embedding n = row_embedding(u, {{1, -1}});
  GlueMap glue = glue_map(m, n);
  EXPECT_EQ(glue.order(), 2);
  EXPECT_TRUE(glue.total());
  EXPECT_TRUE(glue.reverses_bilinear());
  ASSERT_TRUE(glue.reverses_quadratic().has_value());
  EXPECT_TRUE(*glue.reverses_quadratic());
}

TEST(Glue, LambdaGAndItsComplement) {
  Embedding lg = gm::lambda_G();
  Embedding comp = orthogonal_complement(lg);
  EXPECT_EQ(comp.sublattice().signature(), (Signature{20, 2}));
  EXPECT_TRUE(comp.sublattice().even());
  EXPECT_EQ(abs(comp.sublattice().determinant()), 4);
  GlueMap glue = glue_map(lg, comp);
  // |H| = sqrt(|Disc M| |Disc N| / |det ambient|) = sqrt(16).
  EXPECT_EQ(glue.order(), 4);
  EXPECT_TRUE(glue.total());
  EXPECT_TRUE(glue.reverses_bilinear());
  // The ambient is odd, so q need not be reversed; only b is guaranteed.
  EXPECT_FALSE(glue.ambient_even);
}

TEST(Glue, L12AndComplement) {
  const auto pkg = gm::embed_Ld(12);
  GlueMap glue = glue_map(pkg.embedding, pkg.complement);
  EXPECT_EQ(glue.order(), 12);
  EXPECT_TRUE(glue.total());
  EXPECT_TRUE(glue.reverses_bilinear());
  for (const auto& [x, y] : glue.graph) EXPECT_EQ(glue.image(x), y);
}

TEST(Glue, OrderLawOnRandomUnimodularSplits) {
  std::mt19937_64 rng(51);
  const Lattice amb = direct_sum(direct_sum(lattices::hyperbolic_plane(), lattices::hyperbolic_plane()),
                                 lattices::odd_unimodular(1, 1));
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    IntMatrix v = test::random_matrix(rng, 1 + trial % 2, 6, -2, 2);
    if (matrix_rank(v) < v.rows()) continue;
    IntMatrix sat = hermite_normal_form(integer_kernel(integer_kernel(v)));
    Embedding m(amb, sat);
    if (!m.nondegenerate()) continue;
    Embedding n = orthogonal_complement(m);
    GlueMap glue = glue_map(m, n);
    ++checked;
    const Integer dm = abs(m.sublattice().determinant()), dn = abs(n.sublattice().determinant());
    EXPECT_EQ(dm, dn);
    EXPECT_EQ(glue.order() * glue.order(), dm * dn);
    EXPECT_TRUE(glue.total());
    EXPECT_TRUE(glue.reverses_bilinear());
    EXPECT_TRUE(extends_to_ambient(Isometry::identity(m.sublattice()), Isometry::identity(n.sublattice()), glue));
    EXPECT_TRUE(extends_to_ambient(Isometry::negation(m.sublattice()), Isometry::negation(n.sublattice()), glue));
  }
  EXPECT_GE(checked, 10);
}

TEST(Glue, RejectsBadInputs) {
  const Lattice u = lattices::hyperbolic_plane();
  EXPECT_THROW(glue_map(row_embedding(u, {{1, 1}}), row_embedding(u, {{1, 0}})), InvalidInput);  // not orthogonal
  EXPECT_THROW(glue_map(row_embedding(u, {{2, 2}}), row_embedding(u, {{1, -1}})), InvalidInput);  // not primitive
  const Lattice uu = direct_sum(u, u);
  EXPECT_THROW(glue_map(row_embedding(uu, {{1, 1, 0, 0}}), row_embedding(uu, {{1, -1, 0, 0}})), InvalidInput);
}

TEST(Extends, MarkingGeneratorCases) {
  for (std::int64_t d : {8, 10, 12, 16, 20}) {
    const auto pkg = gm::embed_Ld(d);
    GlueMap glue = glue_map(pkg.embedding, pkg.complement);
    const Isometry gamma = gm::marking_generator(d);
    const Lattice comp = pkg.complement.sublattice();
    const IntMatrix minus = -IntMatrix::identity(comp.rank());
    const IntMatrix plus = IntMatrix::identity(comp.rank());

    const bool with_minus = extends_to_ambient(gamma, Isometry::negation(comp), glue);
    const bool with_plus = extends_to_ambient(gamma, Isometry::identity(comp), glue);
    EXPECT_TRUE(with_minus) << d;
    EXPECT_EQ(with_minus, extends_by_lift(pkg.embedding, pkg.complement, gamma.matrix(), minus)) << d;
    EXPECT_EQ(with_plus, extends_by_lift(pkg.embedding, pkg.complement, gamma.matrix(), plus)) << d;
    // Disc L_8 is 2-torsion, so -id = id there; Z/12 has elements of order > 2.
    if (d == 8) EXPECT_TRUE(with_plus);
    if (d == 12) EXPECT_FALSE(with_plus);
  }
}

TEST(Extends, MismatchedLatticeRejected) {
  const auto pkg = gm::embed_Ld(12);
  GlueMap glue = glue_map(pkg.embedding, pkg.complement);
  const Lattice comp = pkg.complement.sublattice();
  EXPECT_THROW(extends_to_ambient(Isometry::identity(comp), Isometry::identity(comp), glue), InvalidInput);
}
