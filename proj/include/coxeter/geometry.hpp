#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "coxeter/realization.hpp"

namespace coxeter {

enum class DescentStrategy { first_violated, last_violated };

struct Descent {
  RationalVector point;   // in the closed fundamental chamber
  std::vector<int> word;  // generator labels, in the order applied
};

/// Reflects p into the closed fundamental chamber. Only the generators whose
/// labels are in `allowed` are used (all of them by default), which descends
/// into the fundamental domain of the corresponding parabolic subgroup.
inline Descent descend(const Realization& R, const RationalVector& p,
                       DescentStrategy strategy = DescentStrategy::first_violated,
                       TypeSet allowed = TypeSet::from_bits(~std::uint64_t{0})) {
  require_same_dim(p, R.roots.front());
  Descent d{p, {}};
  const int n = R.rank;
  while (true) {
    int hit = -1;
    for (int step = 0; step < n; ++step) {
      int k = strategy == DescentStrategy::first_violated ? step : n - 1 - step;
      if (!allowed.contains(R.labels[k])) continue;
      if (dot(R.roots[k], d.point) < 0) {
        hit = k;
        break;
      }
    }
    if (hit < 0) return d;
    d.point = reflect(d.point, R.roots[hit]);
    d.word.push_back(R.labels[hit]);
  }
}

inline RationalVector apply_word(const Realization& R, const std::vector<int>& word, RationalVector p) {
  for (int l : word) p = reflect(p, R.root(l));
  return p;
}

inline RationalVector apply_inverse_word(const Realization& R, const std::vector<int>& word, RationalVector p) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = reflect(p, R.root(*it));
  return p;
}

/// Types of the chamber vertices spanning the minimal cell containing p.
struct PointType {
  TypeSet types;
  bool is_vertex() const { return types.size() == 1; }
  int dim() const { return types.size() - 1; }
  friend bool operator==(const PointType&, const PointType&) = default;
};

inline TypeSet chamber_support(const Realization& R, const RationalVector& chamber_point) {
  TypeSet t;
  for (int k = 0; k < R.rank; ++k)
    if (dot(R.roots[k], chamber_point) > 0) t.insert(R.labels[k]);
  return t;
}

inline PointType point_type(const Realization& R, const RationalVector& p) {
  return {chamber_support(R, descend(R, p).point)};
}

/// The type of a vertex; throws if p is not a vertex of the complex.
inline int vertex_type(const Realization& R, const RationalVector& p) {
  PointType t = point_type(R, p);
  if (!t.is_vertex()) throw std::invalid_argument("coxeter: " + p.str() + " is not a vertex");
  return t.types.only();
}

/// The closed cell whose relative interior contains p.
struct Cell {
  TypeSet types;
  std::vector<RationalVector> vertices;  // sorted
  int dim() const { return types.size() - 1; }
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell& a, const Cell& b) { return a.vertices <=> b.vertices; }
};

inline Cell cell_of(const Realization& R, const RationalVector& p) {
  Descent d = descend(R, p);
  Cell c;
  c.types = chamber_support(R, d.point);
  for (int l : c.types.labels()) c.vertices.push_back(apply_inverse_word(R, d.word, R.vertex(l)));
  std::sort(c.vertices.begin(), c.vertices.end());
  return c;
}

/// Orbit of p under the subgroup generated by the reflections in `generators`.
inline std::vector<RationalVector> orbit(const Realization& R, const RationalVector& p, TypeSet generators) {
  std::vector<const RationalVector*> gens;
  for (int k = 0; k < R.rank; ++k)
    if (generators.contains(R.labels[k])) gens.push_back(&R.roots[k]);
  std::unordered_set<RationalVector, RationalVectorHash> seen{p};
  std::vector<RationalVector> queue{p};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const RationalVector* g : gens) {
      RationalVector q = reflect(queue[head], *g);
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

/// All vertices of type i, sorted.
inline std::vector<RationalVector> vertex_orbit(const Realization& R, int i) {
  return orbit(R, R.vertex(i), R.types());
}

}  // namespace coxeter
