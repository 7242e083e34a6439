#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "coxeter/cos_value.hpp"
#include "coxeter/dynkin.hpp"
#include "coxeter/linalg.hpp"
#include "coxeter/types.hpp"
#include "coxeter/vector.hpp"

namespace coxeter {

/// A spherical Coxeter complex given by simple roots in an integer ambient
/// space. Simple root k carries the Dynkin label labels[k]; vertices[k] is the
/// chamber vertex opposite the wall of roots[k]. Links of vertices are
/// realizations too, with the ambient labels kept.
struct Realization {
  Family family = Family::Link;
  int rank = 0;
  std::size_t ambient_dim = 0;
  std::vector<int> labels;
  std::vector<RationalVector> roots;
  std::vector<RationalVector> vertices;
  DynkinDiagram diagram;
  std::vector<RationalVector> positive_roots;

  std::string name() const { return family_name(family, rank); }

  int index_of(int label) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == label) return static_cast<int>(k);
    throw std::invalid_argument("coxeter: type " + std::to_string(label) + " not in " + name());
  }
  bool has_type(int label) const {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
  }
  const RationalVector& root(int label) const { return roots[index_of(label)]; }
  const RationalVector& vertex(int label) const { return vertices[index_of(label)]; }

  TypeSet types() const {
    TypeSet t;
    for (int l : labels) t.insert(l);
    return t;
  }

  /// An interior point of the fundamental chamber.
  RationalVector interior_point() const {
    std::vector<Wide> s(ambient_dim, 0);
    for (const auto& v : vertices)
      for (std::size_t i = 0; i < ambient_dim; ++i) s[i] += v[i];
    return RationalVector::from_wide(s);
  }
};

/// p - 2 <p,r>/<r,r> r, as a primitive ray.
inline RationalVector reflect(const RationalVector& p, const RationalVector& r) {
  Wide pr = dot(p, r);
  if (pr == 0) return p;
  return combine(norm2(r), p, -2 * pr, r);
}

namespace detail {

inline DynkinDiagram diagram_from_roots(const std::vector<RationalVector>& roots,
                                        const std::vector<int>& labels) {
  std::vector<DynkinEdge> edges;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      CosValue c = cosine(roots[a], roots[b]);
      if (c.sign() == 0) continue;
      if (c.sign() > 0) throw std::invalid_argument("coxeter: simple roots at acute angle");
      int bond = 0;
      if (c == CosValue::rational(-1, 2)) bond = 3;
      else if (c == -CosValue(1, 1, 2)) bond = 4;
      else if (c == -CosValue(1, 3, 4)) bond = 6;
      else throw std::invalid_argument("coxeter: unsupported bond between simple roots");
      edges.push_back({labels[a], labels[b], bond});
    }
  }
  return DynkinDiagram(labels, edges);
}

/// Fundamental coweight rays: v_j in span(roots), <r_l, v_j> = 0 for l != j.
inline std::vector<RationalVector> chamber_vertices(const std::vector<RationalVector>& roots) {
  const std::size_t n = roots.size();
  linalg::Matrix gram(n, std::vector<linalg::Rational>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gram[a][b] = linalg::Rational(static_cast<long long>(dot(roots[a], roots[b])));
  std::vector<RationalVector> out;
  const std::size_t dim = roots.front().size();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<linalg::Rational> rhs(n, 0);
    rhs[j] = 1;
    auto c = linalg::solve(gram, rhs);
    std::vector<linalg::Rational> v(dim, 0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < dim; ++i) v[i] += c[k] * roots[k][i];
    out.push_back(linalg::to_ray(v));
  }
  return out;
}

inline std::vector<RationalVector> all_positive_roots(const std::vector<RationalVector>& simple,
                                                      const RationalVector& interior) {
  std::unordered_set<RationalVector, RationalVectorHash> seen(simple.begin(), simple.end());
  std::vector<RationalVector> queue(simple.begin(), simple.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : simple) {
      RationalVector r = reflect(queue[head], s);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  std::vector<RationalVector> pos;
  for (const auto& r : queue)
    if (dot(r, interior) > 0) pos.push_back(r);
  std::sort(pos.begin(), pos.end());
  return pos;
}

inline RationalVector unit(std::size_t dim, std::size_t i, Int s = 1) {
  std::vector<Int> v(dim, 0);
  v[i] = s;
  return RationalVector(v);
}

inline RationalVector diff(std::size_t dim, std::size_t i, std::size_t j) {
  std::vector<Int> v(dim, 0);
  v[i] = 1;
  v[j] = -1;
  return RationalVector(v);
}

}  // namespace detail

/// Assembles a realization from simple roots; computes chamber vertices,
/// the labelled diagram and the positive roots.
inline Realization make_realization(Family family, std::vector<RationalVector> roots, std::vector<int> labels) {
  if (roots.empty() || roots.size() != labels.size())
    throw std::invalid_argument("coxeter: need one label per simple root");
  Realization r;
  r.family = family;
  r.rank = static_cast<int>(roots.size());
  r.ambient_dim = roots.front().size();
  r.roots = std::move(roots);
  r.labels = std::move(labels);
  if (linalg::rank(r.roots) != r.roots.size())
    throw std::invalid_argument("coxeter: simple roots are linearly dependent");
  r.diagram = detail::diagram_from_roots(r.roots, r.labels);
  r.vertices = detail::chamber_vertices(r.roots);
  r.positive_roots = detail::all_positive_roots(r.roots, r.interior_point());
  return r;
}

namespace detail {

/// A_n with roots e_{i+1} - e_i in R^{n+1}; used for Weyl orders and tests.
inline Realization a_type(int n) {
  if (n < 1) throw std::invalid_argument("coxeter: A_n needs n >= 1");
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::vector<RationalVector> roots;
  std::vector<int> labels;
  for (int i = 1; i <= n; ++i) {
    roots.push_back(diff(dim, static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)));
    labels.push_back(i);
  }
  return make_realization(Family::A, roots, labels);
}

}  // namespace detail

/// The coordinate models of D_n (n >= 3), E6, E7 and E8. E6 and E7 live in
/// R^8 on the subspaces x6=x7=x8 and x7=x8. Half-integer roots are scaled by 2.
inline Realization build_realization(Family family, int rank = 0) {
  using detail::diff;
  std::vector<RationalVector> roots;
  std::vector<int> labels;
  switch (family) {
    case Family::D: {
      if (rank < 3) throw std::invalid_argument("coxeter: D_n needs n >= 3");
      const auto n = static_cast<std::size_t>(rank);
      std::vector<Int> r1(n, 0);
      r1[0] = r1[1] = 1;
      roots.emplace_back(r1);
      for (std::size_t i = 2; i <= n; ++i) roots.push_back(diff(n, i - 1, i - 2));
      break;
    }
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      const int expected = family == Family::E6 ? 6 : family == Family::E7 ? 7 : 8;
      if (rank != 0 && rank != expected) throw std::invalid_argument("coxeter: rank does not match family");
      rank = expected;
      roots.push_back(RationalVector{1, 1, 1, -1, -1, -1, -1, -1});
      const int chain_end = family == Family::E8 ? 8 : rank - 1;
      for (int i = 2; i <= chain_end; ++i)
        roots.push_back(diff(8, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 2)));
      if (family == Family::E6) roots.push_back(RationalVector{1, 1, 1, 1, -1, 1, 1, 1});
      if (family == Family::E7) roots.push_back(RationalVector{1, 1, 1, 1, 1, -1, 1, 1});
      break;
    }
    default:
      throw std::invalid_argument("coxeter: unsupported family " + family_name(family, rank));
  }
  for (int i = 1; i <= rank; ++i) labels.push_back(i);
  return make_realization(family, roots, labels);
}

}  // namespace coxeter
