#include "gmlat/counting.hpp"

#include <set>
#include <string>

#include "gmlat/catalog.hpp"
#include "gmlat/discriminant.hpp"

namespace gmlat::counting {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw InvalidInput("factorize needs a positive integer, got " + std::to_string(n));
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t euler_phi(std::int64_t r) {
  if (r < 1) throw InvalidInput("euler_phi needs r >= 1, got " + std::to_string(r));
  std::int64_t phi = r;
  for (const auto& [p, e] : factorize(r)) phi = phi / p * (p - 1);
  return phi;
}

int tau(std::int64_t d) {
  if (d <= 0 || d % 2 != 0) throw InvalidInput("tau needs a positive even d, got " + std::to_string(d));
  return static_cast<int>(factorize(d / 2).size());
}

bool satisfies_star_star(std::int64_t d) {
  if (d <= 0) throw InvalidInput("(**) needs a positive d, got " + std::to_string(d));
  if (d % 8 != 2 && d % 8 != 4) return false;
  for (const auto& [p, e] : factorize(d))
    if (p % 4 == 3) return false;
  return true;
}

bool satisfies_star_star_prime(std::int64_t d_prime) {
  if (d_prime <= 0) throw InvalidInput("(**') needs a positive d', got " + std::to_string(d_prime));
  for (const auto& [p, e] : factorize(d_prime))
    if (p % 4 == 3 && e % 2 != 0) return false;
  return true;
}

std::vector<Decomposition> twisted_decompositions(std::int64_t d_prime, const DecompositionOptions& opts) {
  if (d_prime <= 0) throw InvalidInput("d' must be positive, got " + std::to_string(d_prime));
  std::vector<Decomposition> out;
  for (std::int64_t r = opts.include_r1 ? 1 : 2; r * r <= d_prime; ++r) {
    if (d_prime % (r * r) != 0) continue;
    const std::int64_t d = d_prime / (r * r);
    if (satisfies_star_star(d)) out.push_back({d, r});
  }
  return out;
}

bool has_star_star_decomposition(std::int64_t d_prime) {
  return !twisted_decompositions(d_prime, {.include_r1 = true}).empty();
}

CountReport untwisted_counts(std::int64_t d) {
  if (d <= 0) throw InvalidInput("d must be positive, got " + std::to_string(d));
  if (!satisfies_star_star(d))
    throw InvalidInput("d = " + std::to_string(d) +
                       " fails (**): need d = 2,4 mod 8 and no prime p = 3 mod 4 dividing d");
  if (d <= 8) throw InvalidInput("d = " + std::to_string(d) + " violates d > 8");
  CountReport rep;
  rep.d = d;
  rep.satisfies_star_star = true;
  rep.tau = tau(d);
  rep.m = std::int64_t{1} << (rep.tau - 1);
  rep.multiplicity_factor = d % 8 == 4 ? 1 : 2;
  rep.fiber_count = rep.m * rep.multiplicity_factor;
  return rep;
}

TwistedCount twisted_counts(std::int64_t d, std::int64_t r) {
  if (r < 2) throw InvalidInput("order r must be at least 2, got " + std::to_string(r));
  if (d <= 0 || !satisfies_star_star(d))
    throw InvalidInput("d = " + std::to_string(d) + " fails (**): need d = 2,4 mod 8 and no prime p = 3 mod 4 dividing d");
  if (d == 2 && r == 2)
    throw InvalidInput(
        "(d, r) = (2, 2) is unsupported: the count formula phi(r)*2^(tau(d)-1) degenerates to 1/2 since tau(2) = 0");
  TwistedCount out;
  out.d = d;
  out.r = r;
  out.m_prime = (r == 2 || d > 2) ? euler_phi(r) * (std::int64_t{1} << (tau(d) - 1)) : euler_phi(r) / 2;
  const std::int64_t d_prime = d * r * r;
  if (d_prime % 4 == 0)
    out.fiber_lower_bound = out.m_prime;
  else if (d_prime % 8 == 2)
    out.fiber_lower_bound = 2 * out.m_prime;
  else
    throw PostconditionFailure("d' = " + std::to_string(d_prime) + " is neither 0 mod 4 nor 2 mod 8");
  return out;
}

TwistedReport twisted_report(std::int64_t d_prime, const DecompositionOptions& opts) {
  TwistedReport rep;
  rep.d_prime = d_prime;
  rep.satisfies_star_star_prime = satisfies_star_star_prime(d_prime);
  rep.decompositions = twisted_decompositions(d_prime, opts);
  for (const auto& dec : rep.decompositions) {
    if (dec.r < 2) continue;  // untwisted entry behind include_r1
    if (dec.d == 2 && dec.r == 2)
      rep.unsupported.push_back(dec);
    else
      rep.per_decomposition.push_back(twisted_counts(dec.d, dec.r));
  }
  return rep;
}

Embedding make_Tw(std::int64_t d, std::int64_t r, const std::vector<std::int64_t>& w) {
  if (r < 1) throw InvalidInput("r must be positive, got " + std::to_string(r));
  const Lattice lambda = gm::gram_Lambda_d(d);
  const std::size_t n = lambda.rank();
  if (w.size() != n) throw InvalidInput("w needs " + std::to_string(n) + " residues, got " + std::to_string(w.size()));
  Integer content = r;
  IntMatrix row(1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    row(0, i) = mod_floor(Integer(static_cast<long>(w[i])), Integer(static_cast<long>(r)));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row(0, i).get_mpz_t());
  }
  row(0, n) = r;
  const Integer order = Integer(static_cast<long>(r)) / content;
  if (order != r)
    throw InvalidInput("w has order " + order.get_str() + " in Hom(Lambda_d, Z/" + std::to_string(r) +
                       "), expected exactly " + std::to_string(r));
  // ker(x -> w.x mod r) is the projection of ker([w | r]) onto the first n coordinates.
  const IntMatrix kernel = integer_kernel(row);
  IntMatrix basis(kernel.rows(), n);
  for (std::size_t i = 0; i < kernel.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = kernel(i, j);
  return Embedding(lambda, hermite_normal_form(basis));
}

SurjectivityReport disc_surjectivity_report(const Lattice& l, const EnumerationOptions& opts) {
  const std::vector<Isometry> group = isometries(l, {}, opts);
  const FiniteQuadraticForm disc = discriminant_form(l);
  const FormLevel level = l.even() ? FormLevel::quadratic : FormLevel::bilinear;

  std::set<std::vector<Element>> image;
  for (const auto& g : group) image.insert(disc_action(g, disc).images);
  const std::vector<DiscMap> autos = form_automorphisms(disc, level);
  std::set<std::vector<Element>> auto_set;
  for (const auto& a : autos) auto_set.insert(a.images);
  for (const auto& img : image)
    if (!auto_set.count(img)) throw PostconditionFailure("an isometry induced a map that does not preserve the form");

  SurjectivityReport rep;
  rep.isometry_group_order = group.size();
  rep.image_order = image.size();
  rep.form_automorphism_order = auto_set.size();
  rep.quadratic_level = level == FormLevel::quadratic;
  rep.surjective = rep.image_order == rep.form_automorphism_order;
  return rep;
}

bool disc_surjectivity(const Lattice& l, const EnumerationOptions& opts) {
  return disc_surjectivity_report(l, opts).surjective;
}

}  // namespace gmlat::counting
