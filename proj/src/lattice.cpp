#include "gmlat/lattice.hpp"

#include <utility>

namespace gmlat {

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
}

namespace {

// Divides the trailing block (rows/cols >= k) by the gcd of its entries. A positive
// rescaling of a sub-block leaves every pivot sign unchanged.
void remove_content(IntMatrix& a, std::size_t k) {
  Integer g = 0;
  for (std::size_t i = k; i < a.rows(); ++i)
    for (std::size_t j = k; j < a.cols(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, j).get_mpz_t());
  if (g <= 1) return;
  for (std::size_t i = k; i < a.rows(); ++i)
    for (std::size_t j = k; j < a.cols(); ++j) mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), g.get_mpz_t());
}

void congruent_swap(IntMatrix& a, std::size_t i, std::size_t j) {
  a.swap_rows(i, j);
  a.swap_cols(i, j);
}

}  // namespace

Signature inertia(const IntMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw InvalidInput("inertia requires a symmetric matrix");
  IntMatrix a = symmetric;
  const std::size_t n = a.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    remove_content(a, k);
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal block: a congruence v_i -> v_i + v_j makes a diagonal entry 2*a_ij.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) break;  // the remaining block is identically zero
      a.add_row_multiple(oi, oj, 1);
      a.add_col_multiple(oi, oj, 1);
      p = oi;
    }
    congruent_swap(a, k, p);
    const Integer pivot = a(k, k);
    if (pivot > 0)
      ++sig.positive;
    else
      ++sig.negative;
    // v_j -> pivot * v_j - a_jk * v_k for j > k: entries become pivot*(pivot*a_jl - a_jk*a_lk).
    // The common positive factor |pivot| is dropped; the sign of pivot is kept.
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = pivot * a(i, j) - a(i, k) * a(k, j);
    if (pivot < 0)
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) a(i, j) = -a(i, j);
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) = 0;
      a(k, i) = 0;
    }
  }
  return sig;
}

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  det_ = gmlat::determinant(gram_);
  even_ = true;
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (gram_(i, i) % 2 != 0) even_ = false;
  signature_ = inertia(gram_);
}

Lattice Lattice::from_gram(IntMatrix gram) {
  if (!gram.is_square()) throw InvalidInput("Gram matrix is not square");
  if (gram.rows() == 0) throw InvalidInput("Gram matrix is empty");
  if (!gram.is_symmetric()) throw InvalidInput("Gram matrix is not symmetric");
  if (gmlat::determinant(gram) == 0) throw InvalidInput("Gram matrix is singular (det = 0)");
  return Lattice(std::move(gram));
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  return Lattice::from_gram(block_diagonal(a.gram(), b.gram()));
}

Lattice direct_sum_power(const Lattice& a, std::size_t copies) {
  if (copies == 0) throw InvalidInput("direct_sum_power needs at least one copy");
  IntMatrix g = a.gram();
  for (std::size_t i = 1; i < copies; ++i) g = block_diagonal(g, a.gram());
  return Lattice::from_gram(std::move(g));
}

Lattice rescale(const Lattice& l, const Integer& m) {
  if (m == 0) throw InvalidInput("rescale factor must be nonzero");
  return Lattice::from_gram(l.gram().scaled(m));
}

namespace lattices {

Lattice hyperbolic_plane() { return Lattice::from_gram({{0, 1}, {1, 0}}); }

Lattice e8() {
  // Cartan matrix, Bourbaki labelling.
  return Lattice::from_gram({{2, 0, -1, 0, 0, 0, 0, 0},
                             {0, 2, 0, -1, 0, 0, 0, 0},
                             {-1, 0, 2, -1, 0, 0, 0, 0},
                             {0, -1, -1, 2, -1, 0, 0, 0},
                             {0, 0, 0, -1, 2, -1, 0, 0},
                             {0, 0, 0, 0, -1, 2, -1, 0},
                             {0, 0, 0, 0, 0, -1, 2, -1},
                             {0, 0, 0, 0, 0, 0, -1, 2}});
}

Lattice a1() { return scalar(2); }

Lattice scalar(const Integer& m) {
  IntMatrix g(1, 1);
  g(0, 0) = m;
  return Lattice::from_gram(std::move(g));
}

Lattice odd_unimodular(std::size_t positive, std::size_t negative) {
  IntVector diag;
  diag.insert(diag.end(), positive, Integer(1));
  diag.insert(diag.end(), negative, Integer(-1));
  return Lattice::from_gram(IntMatrix::diagonal(diag));
}

}  // namespace lattices

Embedding::Embedding(Lattice ambient, IntMatrix basis_rows)
    : ambient_(std::move(ambient)), basis_rows_(std::move(basis_rows)) {
  if (basis_rows_.cols() != ambient_.rank())
    throw InvalidInput("embedding rows have " + std::to_string(basis_rows_.cols()) +
                       " coordinates but the ambient lattice has rank " + std::to_string(ambient_.rank()));
  if (basis_rows_.rows() == 0) throw InvalidInput("embedding has no basis vectors");
  if (matrix_rank(basis_rows_) != basis_rows_.rows())
    throw InvalidInput("embedding basis rows are not linearly independent");
  induced_gram_ = basis_rows_ * ambient_.gram() * basis_rows_.transpose();
}

Lattice Embedding::sublattice() const {
  if (!nondegenerate()) throw InvalidInput("induced form on the sublattice is degenerate");
  return Lattice::from_gram(induced_gram_);
}

IntVector Embedding::to_ambient(const IntVector& coords) const { return basis_rows_.transpose() * coords; }

RatVector Embedding::to_ambient(const RatVector& coords) const { return basis_rows_.transpose() * coords; }

IntVector primitivity_invariants(const Embedding& e) { return smith_normal_form(e.basis_rows()).invariants; }

bool is_primitive(const Embedding& e) {
  for (const auto& f : primitivity_invariants(e))
    if (f != 1) return false;
  return true;
}

Embedding orthogonal_complement(const Embedding& e) {
  if (!e.nondegenerate())
    throw InvalidInput("induced form is degenerate: the orthogonal complement overlaps the sublattice");
  IntMatrix pairing = e.basis_rows() * e.ambient().gram();
  IntMatrix kernel = integer_kernel(pairing);
  if (kernel.rows() == 0) throw InvalidInput("orthogonal complement is zero");
  return Embedding(e.ambient(), std::move(kernel));
}

}  // namespace gmlat
