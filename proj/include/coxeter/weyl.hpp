#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxeter/geometry.hpp"

namespace coxeter {

using WeylOrder = boost::multiprecision::cpp_int;

/// The parabolic sub-complex generated by the simple roots with labels in `keep`,
/// acting on the span of those roots.
inline Realization parabolic(const Realization& R, TypeSet keep) {
  std::vector<RationalVector> roots;
  std::vector<int> labels;
  for (int k = 0; k < R.rank; ++k) {
    if (!keep.contains(R.labels[k])) continue;
    roots.push_back(R.roots[k]);
    labels.push_back(R.labels[k]);
  }
  return make_realization(Family::Link, roots, labels);
}

namespace detail {

// |W| = |W . v_leaf| * |Stab(v_leaf)|, with Stab(v_leaf) the parabolic on the
// remaining nodes; recursion on the connected components.
inline WeylOrder order_by_orbits(const Realization& R) {
  WeylOrder total = 1;
  for (const DynkinDiagram& comp : R.diagram.components()) {
    if (!comp.classify()) throw std::invalid_argument("coxeter: component outside the A/D/E catalogue");
    Realization sub = parabolic(R, comp.node_set());
    const int leaf = comp.far_leaf();
    WeylOrder orbit_size = static_cast<unsigned long long>(vertex_orbit(sub, leaf).size());
    TypeSet rest = comp.node_set();
    rest.erase(leaf);
    total *= orbit_size * (rest.empty() ? WeylOrder(1) : order_by_orbits(parabolic(sub, rest)));
  }
  return total;
}

inline Realization catalogue_realization(const CatalogueType& t) {
  switch (t.kind) {
    case 'A': return a_type(t.rank);
    case 'D': return build_realization(Family::D, t.rank);
    case 'E':
      return build_realization(t.rank == 6 ? Family::E6 : t.rank == 7 ? Family::E7 : Family::E8);
  }
  throw std::invalid_argument("coxeter: unknown catalogue type");
}

}  // namespace detail

/// Order of the Weyl group of a disjoint union of A/D/E diagrams.
inline WeylOrder weyl_order(const DynkinDiagram& diagram) {
  WeylOrder total = 1;
  for (const DynkinDiagram& comp : diagram.components()) {
    auto cat = comp.classify();
    if (!cat) throw std::invalid_argument("coxeter: component outside the A/D/E catalogue: " + comp.str());
    total *= detail::order_by_orbits(detail::catalogue_realization(*cat));
  }
  return total;
}

/// Order of the stabilizer of the face of the fundamental chamber spanned by
/// the vertices with types in `face`.
inline WeylOrder stabilizer_order(const Realization& R, TypeSet face) {
  if (!face.subset_of(R.types())) throw std::invalid_argument("coxeter: face types not in complex");
  return weyl_order(R.diagram.without(face));
}

inline WeylOrder weyl_order(const Realization& R) { return weyl_order(R.diagram); }

/// Type permutation induced by v -> -v, as a map label -> label.
inline std::map<int, int> opposition_involution(const Realization& R) {
  std::map<int, int> out;
  for (int k = 0; k < R.rank; ++k) out[R.labels[k]] = vertex_type(R, -R.vertices[k]);
  return out;
}

}  // namespace coxeter
