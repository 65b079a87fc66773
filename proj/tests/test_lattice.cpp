#include <gtest/gtest.h>

#include "gmlat/lattice.hpp"
#include "support.hpp"

using namespace gmlat;
using gmlat::test::iv;

namespace {

// Jacobi's rule: with all leading minors nonzero, negatives = sign changes in 1, D1, ..., Dn.
std::optional<Signature> jacobi_signature(const IntMatrix& g) {
  const std::size_t n = g.rows();
  Signature s;
  Integer prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = g(i, j);
    const Integer dk = determinant(lead);
    if (dk == 0) return std::nullopt;
    if (sgn(dk) == sgn(prev))
      ++s.positive;
    else
      ++s.negative;
    prev = dk;
  }
  return s;
}

IntMatrix lambda00_gram() {
  const Lattice e8 = lattices::e8();
  Lattice l = direct_sum(direct_sum(e8, e8), direct_sum(lattices::hyperbolic_plane(), lattices::hyperbolic_plane()));
  return direct_sum(l, direct_sum(lattices::a1(), lattices::a1())).gram();
}

}  // namespace

TEST(Lattice, HyperbolicPlane) {
  Lattice u = Lattice::from_gram(IntMatrix{{0, 1}, {1, 0}});
  EXPECT_EQ(u.rank(), 2u);
  EXPECT_TRUE(u.even());
  EXPECT_EQ(u.signature(), (Signature{1, 1}));
}

TEST(Lattice, OddUnimodular22_2) {
  Lattice l = lattices::odd_unimodular(22, 2);
  EXPECT_EQ(l.signature(), (Signature{22, 2}));
  EXPECT_FALSE(l.even());
  EXPECT_EQ(l.determinant(), 1);
}

TEST(Lattice, LambdaG) {
  Lattice l = Lattice::from_gram(IntMatrix::diagonal(iv({2, 2})));
  EXPECT_TRUE(l.even());
  EXPECT_EQ(l.signature(), (Signature{2, 0}));
  EXPECT_EQ(l.determinant(), 4);
}

TEST(Lattice, RejectsBadGram) {
  EXPECT_THROW(Lattice::from_gram(IntMatrix{{1, 2}, {3, 1}}), InvalidInput);
  EXPECT_THROW(Lattice::from_gram(IntMatrix{{1, 1}, {1, 1}}), InvalidInput);
  EXPECT_THROW(Lattice::from_gram(IntMatrix(2, 3)), InvalidInput);
}

TEST(Lattice, DirectSums) {
  Lattice uu = direct_sum(lattices::hyperbolic_plane(), lattices::hyperbolic_plane());
  EXPECT_EQ(uu.signature(), (Signature{2, 2}));
  EXPECT_EQ(uu.determinant(), 1);

  Lattice l00 = Lattice::from_gram(lambda00_gram());
  EXPECT_EQ(l00.rank(), 22u);
  EXPECT_EQ(l00.signature(), (Signature{20, 2}));
  EXPECT_EQ(l00.determinant(), 4);

  Lattice a1a1 = direct_sum(lattices::a1(), lattices::a1());
  EXPECT_EQ(a1a1.gram(), IntMatrix::diagonal(iv({2, 2})));
  EXPECT_EQ(a1a1.determinant(), 4);
}

TEST(Lattice, Rescale) {
  EXPECT_EQ(rescale(lattices::hyperbolic_plane(), -1).signature(), (Signature{1, 1}));
  EXPECT_EQ(rescale(lattices::scalar(1), 2).gram(), lattices::a1().gram());
  Lattice e8m = rescale(lattices::e8(), -1);
  EXPECT_EQ(e8m.signature(), (Signature{0, 8}));
  EXPECT_EQ(e8m.determinant(), 1);
  EXPECT_THROW(rescale(lattices::e8(), 0), InvalidInput);
}

TEST(Lattice, E8IsEvenUnimodularPositive) {
  Lattice e8 = lattices::e8();
  EXPECT_TRUE(e8.even());
  EXPECT_EQ(e8.determinant(), 1);
  EXPECT_EQ(e8.signature(), (Signature{8, 0}));
}

TEST(Lattice, SignatureAgreesWithJacobiOracle) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    IntMatrix g = test::random_symmetric(rng, 1 + trial % 6, -5, 5);
    auto expect = jacobi_signature(g);
    if (!expect) continue;
    ++checked;
    EXPECT_EQ(inertia(g), *expect) << g;
  }
  EXPECT_GT(checked, 200);
}

TEST(Lattice, SignatureWithZeroDiagonal) {
  // Needs the zero-pivot branch: all diagonal entries vanish.
  EXPECT_EQ(inertia(IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), (Signature{1, 2}));
  EXPECT_EQ(inertia(IntMatrix{{0, 0}, {0, 0}}), (Signature{0, 0}));
}

TEST(Lattice, SignatureLaws) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    Lattice a = test::random_lattice(rng, 1 + trial % 3, -4, 4);
    Lattice b = test::random_lattice(rng, 1 + trial % 4, -4, 4);
    Lattice s = direct_sum(a, b);
    EXPECT_EQ(s.signature().positive, a.signature().positive + b.signature().positive);
    EXPECT_EQ(s.signature().negative, a.signature().negative + b.signature().negative);
    EXPECT_EQ(s.determinant(), a.determinant() * b.determinant());
    EXPECT_EQ(rescale(a, -1).signature(), a.signature().swapped());
  }
}

TEST(Lattice, EvenIffDiagonalEvenOnRandomVectors) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    Lattice l = test::random_lattice(rng, 3, -3, 3);
    bool all_even = true;
    for (int k = 0; k < 30; ++k) {
      IntVector v = iv({coef(rng), coef(rng), coef(rng)});
      if (l.norm(v) % 2 != 0) all_even = false;
    }
    // Unit vectors are among the candidates that can witness oddness.
    for (std::size_t i = 0; i < 3; ++i) {
      IntVector e(3, Integer(0));
      e[i] = 1;
      if (l.norm(e) % 2 != 0) all_even = false;
    }
    EXPECT_EQ(l.even(), all_even);
  }
}

TEST(Embedding, ValidatesRows) {
  EXPECT_THROW(Embedding(lattices::hyperbolic_plane(), IntMatrix{{1, 0, 0}}), InvalidInput);
  EXPECT_THROW(Embedding(lattices::hyperbolic_plane(), IntMatrix{{1, 1}, {2, 2}}), InvalidInput);
}

TEST(Embedding, InducedGram) {
  Embedding e(lattices::hyperbolic_plane(), IntMatrix{{1, 1}});
  EXPECT_EQ(e.induced_gram(), (IntMatrix{{2}}));
  EXPECT_EQ(e.to_ambient(iv({3})), iv({3, 3}));
}

TEST(Embedding, Primitivity) {
  EXPECT_FALSE(is_primitive(Embedding(lattices::hyperbolic_plane(), IntMatrix{{2, 0}})));
  IntMatrix rows(2, 24);
  rows(0, 0) = rows(0, 1) = rows(1, 2) = rows(1, 3) = 1;
  EXPECT_TRUE(is_primitive(Embedding(lattices::odd_unimodular(22, 2), rows)));
}

TEST(Embedding, ComplementOfNaiveLambdaGIsOdd) {
  // span(e1+e2, e3+e4) in I_{22,2}: e5 is in the complement and has norm 1.
  IntMatrix rows(2, 24);
  rows(0, 0) = rows(0, 1) = rows(1, 2) = rows(1, 3) = 1;
  Embedding c = orthogonal_complement(Embedding(lattices::odd_unimodular(22, 2), rows));
  Lattice l = c.sublattice();
  EXPECT_EQ(l.rank(), 22u);
  EXPECT_EQ(l.signature(), (Signature{20, 2}));
  EXPECT_FALSE(l.even());
  EXPECT_TRUE(is_primitive(c));
}

TEST(Embedding, ComplementInU) {
  Embedding c = orthogonal_complement(Embedding(lattices::hyperbolic_plane(), IntMatrix{{1, 1}}));
  EXPECT_EQ(c.induced_gram(), (IntMatrix{{-2}}));
}

TEST(Embedding, ComplementIsSaturatedKernel) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    Lattice amb = test::random_lattice(rng, 5, -3, 3);
    IntMatrix rows = test::random_matrix(rng, 2, 5, -3, 3);
    if (matrix_rank(rows) < 2) continue;
    Embedding e(amb, rows);
    if (!e.nondegenerate()) {
      EXPECT_THROW(orthogonal_complement(e), InvalidInput);
      continue;
    }
    Embedding c = orthogonal_complement(e);
    EXPECT_EQ(c.rank(), 3u);
    EXPECT_EQ(test::maximal_minor_gcd(c.basis_rows()), 1);
    IntMatrix cross = rows * amb.gram() * c.basis_rows().transpose();
    for (std::size_t i = 0; i < cross.rows(); ++i)
      for (std::size_t j = 0; j < cross.cols(); ++j) EXPECT_EQ(cross(i, j), 0);
  }
}

TEST(Embedding, IndexDeterminantLaw) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    Lattice l = test::random_lattice(rng, 3, -4, 4);
    IntMatrix m = test::random_matrix(rng, 3, 3, -3, 3);
    const Integer index = abs(determinant(m));
    if (index == 0) continue;
    Embedding t(l, m);
    EXPECT_EQ(t.sublattice().determinant(), l.determinant() * index * index);
    // The index is also the product of the Smith invariants of the rows.
    Integer prod = 1;
    for (const auto& f : primitivity_invariants(t)) prod *= f;
    EXPECT_EQ(prod, index);
  }
}
