#include "gmlat/discriminant.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <utility>

namespace gmlat {

namespace {

constexpr std::int64_t kMaxEnumeratedElements = 1'000'000;

Rational mod1(const Rational& x) { return reduce_mod(x, 1); }
Rational mod2(const Rational& x) { return reduce_mod(x, 2); }

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(IntVector invariant_factors, std::vector<RatVector> bilinear,
                                         std::optional<RatVector> quadratic)
    : invariant_factors_(std::move(invariant_factors)), bilinear_(std::move(bilinear)), quadratic_(std::move(quadratic)) {
  const std::size_t n = invariant_factors_.size();
  for (const auto& d : invariant_factors_) {
    if (d <= 1) throw InvalidInput("cyclic factors must exceed 1, got " + d.get_str());
    moduli_.push_back(to_int64(d));
  }
  if (bilinear_.size() != n) throw InvalidInput("bilinear matrix size does not match the number of generators");
  for (auto& row : bilinear_) {
    if (row.size() != n) throw InvalidInput("bilinear matrix is not square");
    for (auto& v : row) v = mod1(v);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (bilinear_[i][j] != bilinear_[j][i]) throw InvalidInput("bilinear form is not symmetric");
      if (!is_integral(bilinear_[i][j] * Rational(invariant_factors_[i])))
        throw InvalidInput("bilinear value is incompatible with the generator order");
    }
  if (quadratic_) {
    if (quadratic_->size() != n) throw InvalidInput("quadratic values size does not match the number of generators");
    for (std::size_t i = 0; i < n; ++i) {
      Rational& qi = (*quadratic_)[i];
      qi = mod2(qi);
      if (mod1(qi) != bilinear_[i][i]) throw InvalidInput("quadratic value does not refine b(g, g) mod 1");
      Rational d(invariant_factors_[i]);
      if (mod2(d * d * qi) != 0) throw InvalidInput("quadratic value is incompatible with the generator order");
    }
  }
}

Integer FiniteQuadraticForm::order() const {
  Integer o = 1;
  for (const auto& d : invariant_factors_) o *= d;
  return o;
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
  std::vector<RatVector> b = bilinear_;
  for (auto& row : b)
    for (auto& v : row) v = -v;
  std::optional<RatVector> q = quadratic_;
  if (q)
    for (auto& v : *q) v = -v;
  FiniteQuadraticForm out(invariant_factors_, std::move(b), std::move(q));
  if (presentation_) {
    DiscriminantPresentation p = *presentation_;
    p.gram = -p.gram;
    p.coordinate_rows = -p.coordinate_rows;
    out.set_presentation(std::move(p));
  }
  return out;
}

Element FiniteQuadraticForm::generator(std::size_t i) const {
  Element e = zero();
  e.at(i) = 1;
  return e;
}

Element FiniteQuadraticForm::normalize(Element a) const {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = pos_mod(a[i], moduli_[i]);
  return a;
}

Element FiniteQuadraticForm::add(const Element& a, const Element& b) const {
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = pos_mod(a[i] + b[i], moduli_[i]);
  return c;
}

Element FiniteQuadraticForm::negate(const Element& a) const {
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = pos_mod(-a[i], moduli_[i]);
  return c;
}

Element FiniteQuadraticForm::scale(const Element& a, std::int64_t k) const {
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer v = Integer(a[i]) * Integer(k);
    c[i] = to_int64(mod_floor(v, Integer(moduli_[i])));
  }
  return c;
}

std::int64_t FiniteQuadraticForm::element_order(const Element& a) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t g = std::gcd(pos_mod(a[i], moduli_[i]), moduli_[i]);
    o = std::lcm(o, moduli_[i] / g);
  }
  return o;
}

Rational FiniteQuadraticForm::b(const Element& x, const Element& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      s += Rational(Integer(x[i]) * Integer(y[j])) * bilinear_[i][j];
    }
  }
  return mod1(s);
}

Rational FiniteQuadraticForm::q(const Element& x) const {
  if (!quadratic_) throw InvalidInput("quadratic form is not defined (odd source lattice)");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Integer xi(x[i]);
    s += Rational(xi * xi) * (*quadratic_)[i];
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[j] == 0) continue;
      s += Rational(2 * xi * Integer(x[j])) * bilinear_[i][j];
    }
  }
  return mod2(s);
}

Rational FiniteQuadraticForm::value(const Element& x, FormLevel level) const {
  return level == FormLevel::quadratic ? q(x) : b(x, x);
}

std::vector<Element> FiniteQuadraticForm::elements() const {
  Integer total = order();
  if (total > kMaxEnumeratedElements)
    throw EnumerationLimit("discriminant group of order " + total.get_str() + " is too large to enumerate");
  std::vector<Element> out;
  out.reserve(total.get_ui());
  Element cur = zero();
  for (;;) {
    out.push_back(cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (++cur[i] < moduli_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

std::size_t FiniteQuadraticForm::index_of(const Element& a) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < a.size(); ++i) idx = idx * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(pos_mod(a[i], moduli_[i]));
  return idx;
}

bool FiniteQuadraticForm::in_dual(const RatVector& x) const {
  if (!presentation_) throw InvalidInput("form has no lattice presentation");
  for (const auto& v : presentation_->gram * x)
    if (!is_integral(v)) return false;
  return true;
}

Element FiniteQuadraticForm::coordinates(const RatVector& x) const {
  if (!presentation_) throw InvalidInput("form has no lattice presentation");
  RatVector y = presentation_->gram * x;
  IntVector yi(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!is_integral(y[i])) throw InvalidInput("vector is not in the dual lattice");
    yi[i] = y[i].get_num();
  }
  return coordinates_from_pairing(yi);
}

Element FiniteQuadraticForm::coordinates_from_pairing(const IntVector& pairing) const {
  if (!presentation_) throw InvalidInput("form has no lattice presentation");
  Element c(generator_count());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = to_int64(mod_floor(dot(presentation_->coordinate_rows.row(i), pairing), invariant_factors_[i]));
  return c;
}

FiniteQuadraticForm discriminant_form(const Lattice& l) {
  const IntMatrix& g = l.gram();
  SmithForm s = smith_normal_form(g);
  const std::size_t n = l.rank();
  IntVector factors;
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (s.invariants[i] > 1) {
      factors.push_back(s.invariants[i]);
      slots.push_back(i);
    }
  // Generator i is right-column(slot)/d: gram * it == left^{-1} e_slot, which is integral.
  std::vector<RatVector> gens;
  IntMatrix coord_rows(slots.size(), n);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    RatVector v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = mod1(make_rational(s.right(r, slots[k]), factors[k]));
    gens.push_back(std::move(v));
    for (std::size_t c = 0; c < n; ++c) coord_rows(k, c) = s.left(slots[k], c);
  }
  std::vector<RatVector> bmat(slots.size(), RatVector(slots.size()));
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t j = 0; j < slots.size(); ++j) bmat[i][j] = l.inner(gens[i], gens[j]);
  std::optional<RatVector> qv;
  if (l.even()) {
    qv.emplace();
    for (const auto& gv : gens) qv->push_back(l.inner(gv, gv));
  }
  FiniteQuadraticForm f(std::move(factors), std::move(bmat), std::move(qv));
  f.set_presentation({g, std::move(coord_rows), std::move(gens)});
  return f;
}

Element DiscMap::apply(const FiniteQuadraticForm& codomain, const Element& x) const {
  Element out = codomain.zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out = codomain.add(out, codomain.scale(images.at(i), x[i]));
  return out;
}

DiscMap identity_map(const FiniteQuadraticForm& f) {
  DiscMap m;
  for (std::size_t i = 0; i < f.generator_count(); ++i) m.images.push_back(f.generator(i));
  return m;
}

DiscMap compose(const FiniteQuadraticForm& codomain, const DiscMap& outer, const DiscMap& inner) {
  DiscMap m;
  for (const auto& img : inner.images) m.images.push_back(outer.apply(codomain, img));
  return m;
}

bool is_bijective(const FiniteQuadraticForm& domain, const FiniteQuadraticForm& codomain, const DiscMap& m) {
  if (domain.order() != codomain.order()) return false;
  if (m.images.size() != domain.generator_count()) return false;
  for (std::size_t i = 0; i < m.images.size(); ++i) {
    // Well-defined: the image order must divide the generator order.
    if (codomain.scale(m.images[i], to_int64(domain.invariant_factors()[i])) != codomain.zero()) return false;
  }
  std::vector<char> hit(codomain.order().get_ui(), 0);
  for (const auto& x : domain.elements()) {
    std::size_t idx = codomain.index_of(m.apply(codomain, x));
    if (hit[idx]) return false;
    hit[idx] = 1;
  }
  return true;
}

bool is_form_isometry(const FiniteQuadraticForm& domain, const FiniteQuadraticForm& codomain, const DiscMap& m,
                      FormLevel level) {
  if (!is_bijective(domain, codomain, m)) return false;
  const std::size_t n = domain.generator_count();
  for (std::size_t i = 0; i < n; ++i) {
    if (level == FormLevel::quadratic && codomain.q(m.images[i]) != domain.quadratic_value(i)) return false;
    for (std::size_t j = i; j < n; ++j)
      if (codomain.b(m.images[i], m.images[j]) != domain.bilinear_value(i, j)) return false;
  }
  return true;
}

FormLevel common_level(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  return a.has_quadratic() && b.has_quadratic() ? FormLevel::quadratic : FormLevel::bilinear;
}

namespace {

using Histogram = std::map<std::pair<std::int64_t, Rational>, std::size_t>;

Histogram value_histogram(const FiniteQuadraticForm& f, const std::vector<Element>& elems, FormLevel level) {
  Histogram h;
  for (const auto& x : elems) ++h[{f.element_order(x), f.value(x, level)}];
  return h;
}

// Backtracking over generator images; `visit` returns false to stop the search.
void search_isometries(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2, FormLevel level,
                       const std::function<bool(const DiscMap&)>& visit) {
  if (level == FormLevel::quadratic && (!f1.has_quadratic() || !f2.has_quadratic()))
    throw InvalidInput("quadratic-level comparison requested on a form without q (odd source lattice)");
  if (f1.order() != f2.order()) return;
  const std::vector<Element> e1 = f1.elements();
  const std::vector<Element> e2 = f2.elements();
  if (value_histogram(f1, e1, level) != value_histogram(f2, e2, level)) return;

  const std::size_t n = f1.generator_count();
  std::vector<std::vector<Element>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element gi = f1.generator(i);
    const std::int64_t ord = f1.element_order(gi);
    const Rational val = f1.value(gi, level);
    for (const auto& y : e2)
      if (f2.element_order(y) == ord && f2.value(y, level) == val) candidates[i].push_back(y);
    if (candidates[i].empty()) return;
  }

  DiscMap current;
  current.images.resize(n);
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (stop) return;
    if (i == n) {
      if (is_bijective(f1, f2, current) && !visit(current)) stop = true;
      return;
    }
    for (const auto& y : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (f2.b(current.images[j], y) != f1.bilinear_value(j, i)) ok = false;
      if (!ok) continue;
      current.images[i] = y;
      extend(i + 1);
      if (stop) return;
    }
  };
  extend(0);
}

}  // namespace

std::optional<DiscMap> forms_isomorphic(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                                        FormLevel level) {
  std::optional<DiscMap> found;
  search_isometries(f1, f2, level, [&](const DiscMap& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<DiscMap> form_automorphisms(const FiniteQuadraticForm& f, FormLevel level) {
  std::vector<DiscMap> all;
  search_isometries(f, f, level, [&](const DiscMap& m) {
    all.push_back(m);
    return true;
  });
  return all;
}

}  // namespace gmlat
