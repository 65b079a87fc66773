#include "gmlat/gluing.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gmlat {

namespace {

void require_glue_inputs(const Embedding& m, const Embedding& n) {
  if (!(m.ambient() == n.ambient())) throw InvalidInput("glue_map: embeddings live in different ambient lattices");
  if (m.rank() + n.rank() != m.ambient().rank())
    throw InvalidInput("glue_map: ranks do not add up to the ambient rank (no finite index)");
  if (!is_primitive(m) || !is_primitive(n)) throw InvalidInput("glue_map: both sublattices must be primitive");
  IntMatrix cross = m.basis_rows() * m.ambient().gram() * n.basis_rows().transpose();
  for (std::size_t i = 0; i < cross.rows(); ++i)
    for (std::size_t j = 0; j < cross.cols(); ++j)
      if (cross(i, j) != 0) throw InvalidInput("glue_map: sublattices are not orthogonal");
}

}  // namespace

bool GlueMap::total() const {
  return Integer(static_cast<unsigned long>(graph.size())) == disc_m.order() && disc_m.order() == disc_n.order();
}

std::optional<Element> GlueMap::image(const Element& x) const {
  auto it = std::lower_bound(graph.begin(), graph.end(), x,
                             [](const auto& pair, const Element& key) { return pair.first < key; });
  if (it == graph.end() || it->first != x) return std::nullopt;
  return it->second;
}

bool GlueMap::contains(const Element& x, const Element& y) const {
  auto img = image(x);
  return img && *img == y;
}

bool GlueMap::reverses_bilinear() const {
  // b is biadditive, so the generators of H suffice.
  for (const auto& [x1, y1] : generators)
    for (const auto& [x2, y2] : generators)
      if (reduce_mod(disc_m.b(x1, x2) + disc_n.b(y1, y2), 1) != 0) return false;
  return true;
}

std::optional<bool> GlueMap::reverses_quadratic() const {
  if (!disc_m.has_quadratic() || !disc_n.has_quadratic()) return std::nullopt;
  for (const auto& [x, y] : graph)
    if (reduce_mod(disc_m.q(x) + disc_n.q(y), 2) != 0) return false;
  return true;
}

GlueMap glue_map(const Embedding& m, const Embedding& n) {
  require_glue_inputs(m, n);
  GlueMap glue{discriminant_form(m.sublattice()), discriminant_form(n.sublattice()), {}, {}, m.ambient().even()};

  // Ambient basis vector e_k projects to the dual vectors with pairings B_M G e_k, B_N G e_k.
  const IntMatrix pm = m.basis_rows() * m.ambient().gram();
  const IntMatrix pn = n.basis_rows() * n.ambient().gram();
  for (std::size_t k = 0; k < m.ambient().rank(); ++k)
    glue.generators.emplace_back(glue.disc_m.coordinates_from_pairing(pm.col(k)),
                                 glue.disc_n.coordinates_from_pairing(pn.col(k)));

  std::set<std::pair<Element, Element>> seen;
  std::deque<std::pair<Element, Element>> queue;
  auto zero = std::make_pair(glue.disc_m.zero(), glue.disc_n.zero());
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& [gx, gy] : glue.generators) {
      auto next = std::make_pair(glue.disc_m.add(x, gx), glue.disc_n.add(y, gy));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  glue.graph.assign(seen.begin(), seen.end());

  // Primitivity makes both projections injective, so H is a graph.
  for (std::size_t i = 1; i < glue.graph.size(); ++i)
    if (glue.graph[i].first == glue.graph[i - 1].first)
      throw PostconditionFailure("glue group is not a graph over Disc M");
  return glue;
}

bool extends_to_ambient(const Isometry& gm, const Isometry& gn, const GlueMap& glue) {
  if (!glue.disc_m.presentation() || gm.lattice().gram() != glue.disc_m.presentation()->gram)
    throw InvalidInput("extends_to_ambient: first isometry does not act on the glued sublattice M");
  if (!glue.disc_n.presentation() || gn.lattice().gram() != glue.disc_n.presentation()->gram)
    throw InvalidInput("extends_to_ambient: second isometry does not act on the glued sublattice N");
  const DiscMap am = disc_action(gm, glue.disc_m);
  const DiscMap an = disc_action(gn, glue.disc_n);
  // The action is an automorphism, so mapping generators into H already gives H onto H.
  for (const auto& [x, y] : glue.generators)
    if (!glue.contains(am.apply(glue.disc_m, x), an.apply(glue.disc_n, y))) return false;
  return true;
}

}  // namespace gmlat
