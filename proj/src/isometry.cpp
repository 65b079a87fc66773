#include "gmlat/isometry.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace gmlat {

Isometry::Isometry(Lattice lattice, IntMatrix matrix) : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.rows() != lattice_.rank())
    throw InvalidInput("isometry matrix has the wrong shape");
  if (matrix_.transpose() * lattice_.gram() * matrix_ != lattice_.gram())
    throw InvalidInput("matrix does not preserve the Gram matrix");
}

Isometry Isometry::identity(const Lattice& l) { return Isometry(l, IntMatrix::identity(l.rank())); }

Isometry Isometry::negation(const Lattice& l) { return Isometry(l, -IntMatrix::identity(l.rank())); }

Integer Isometry::determinant() const { return gmlat::determinant(matrix_); }

Isometry Isometry::compose(const Isometry& other) const {
  if (!(lattice_ == other.lattice_)) throw InvalidInput("cannot compose isometries of different lattices");
  return Isometry(lattice_, matrix_ * other.matrix_);
}

Isometry Isometry::inverse() const {
  RationalInverse inv = rational_inverse(matrix_);
  if (inv.denominator != 1) throw PostconditionFailure("isometry inverse is not integral");
  return Isometry(lattice_, std::move(inv.numerator));
}

namespace {

// Upper-triangular Fincke-Pohst data: Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
std::vector<RatVector> pohst_decomposition(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  std::vector<RatVector> q(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = gram(i, j);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  return q;
}

Integer isqrt_floor(const Rational& r) {
  Integer f = floor_of(r);
  if (f <= 0) return 0;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
  return s;
}

void require_enumerable(const Lattice& l) {
  if (!l.positive_definite())
    throw InvalidInput("isometry enumeration needs a positive definite lattice; signature is " +
                       to_string(l.signature()));
  if (l.rank() > 4)
    throw InvalidInput("isometry enumeration is limited to rank <= 4 (brute-force bound); rank is " +
                       std::to_string(l.rank()));
}

}  // namespace

std::vector<IntVector> short_vectors(const Lattice& l, const Integer& bound, const EnumerationOptions& opts) {
  if (!l.positive_definite()) throw InvalidInput("short vector enumeration needs a positive definite lattice");
  const std::size_t n = l.rank();
  const auto q = pohst_decomposition(l.gram());
  std::vector<IntVector> out;
  IntVector x(n, Integer(0));
  std::uint64_t nodes = 0;

  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t i, const Rational& remaining) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= q[i][j] * Rational(x[j]);
    const Rational radius_sq = remaining / q[i][i];
    const Integer s = isqrt_floor(radius_sq) + 1;
    const Integer lo = floor_of(center) - s;
    const Integer hi = floor_of(center) + s + 1;
    for (Integer v = lo; v <= hi; ++v) {
      const Rational diff = Rational(v) - center;
      const Rational used = q[i][i] * diff * diff;
      if (used > remaining) continue;
      if (++nodes > opts.max_candidates)
        throw EnumerationLimit("short vector enumeration exceeded " + std::to_string(opts.max_candidates) +
                               " candidates");
      x[i] = v;
      if (i == 0) {
        bool zero = std::all_of(x.begin(), x.end(), [](const Integer& c) { return c == 0; });
        if (!zero) out.push_back(x);
      } else {
        descend(i - 1, remaining - used);
      }
    }
    x[i] = 0;
  };
  if (n > 0 && bound >= 0) descend(n - 1, Rational(bound));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Isometry> isometries(const Lattice& l, std::span<const IntVector> fixed, const EnumerationOptions& opts) {
  require_enumerable(l);
  const std::size_t n = l.rank();
  const IntMatrix& g = l.gram();
  for (const auto& f : fixed)
    if (f.size() != n) throw InvalidInput("fixed vector has the wrong length");

  Integer max_norm = 0;
  for (std::size_t i = 0; i < n; ++i) max_norm = std::max(max_norm, g(i, i));
  const std::vector<IntVector> pool = short_vectors(l, max_norm, opts);

  std::vector<std::vector<IntVector>> candidates(n);
  for (const auto& v : pool) {
    Integer nv = l.norm(v);
    for (std::size_t i = 0; i < n; ++i)
      if (nv == g(i, i)) candidates[i].push_back(v);
  }

  std::vector<IntVector> images(n);
  std::vector<Isometry> out;
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> extend = [&](std::size_t j) {
    if (j == n) {
      IntMatrix m(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m(r, c) = images[c][r];
      for (const auto& f : fixed)
        if (m * f != f) return;
      out.emplace_back(l, std::move(m));
      return;
    }
    for (const auto& v : candidates[j]) {
      if (++nodes > opts.max_candidates)
        throw EnumerationLimit("isometry search exceeded " + std::to_string(opts.max_candidates) + " candidates");
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i)
        if (l.inner(images[i], v) != g(i, j)) ok = false;
      if (!ok) continue;
      images[j] = v;
      extend(j + 1);
    }
  };
  extend(0);
  return out;
}

DiscMap disc_action(const Isometry& g, const FiniteQuadraticForm& disc) {
  const auto& pres = disc.presentation();
  if (!pres) throw InvalidInput("discriminant form has no lattice presentation");
  if (pres->gram != g.lattice().gram()) throw InvalidInput("discriminant form belongs to a different lattice");
  DiscMap m;
  for (const auto& gen : pres->generators) m.images.push_back(disc.coordinates(g.apply(gen)));
  return m;
}

DiscMap disc_action(const Isometry& g) { return disc_action(g, discriminant_form(g.lattice())); }

int orientation_sign(const Isometry& g) {
  if (!g.lattice().positive_definite())
    throw InvalidInput("orientation sign is only supported on positive definite lattices");
  return g.determinant() > 0 ? 1 : -1;
}

}  // namespace gmlat
