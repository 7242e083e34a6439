#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/bigon.hpp"

namespace coxeter {

// ---------------------------------------------------------------------------
// Root-type and wall checks

struct RootTypeVerdict {
  bool ok = false;
  int expected = 0;
  std::size_t roots_checked = 0;
  std::vector<RationalVector> mismatches;
};

/// The type of vertex a root sits on: D_n -> n-1, E6 -> 1, E7 -> 2, E8 -> 8.
inline int expected_root_type(const Realization& R) {
  switch (R.family) {
    case Family::D:
      if (R.rank < 4) throw std::invalid_argument("coxeter: root type needs D_n with n >= 4");
      return R.rank - 1;
    case Family::E6: return 1;
    case Family::E7: return 2;
    case Family::E8: return 8;
    default: throw std::invalid_argument("coxeter: no root type for " + R.name());
  }
}

/// Every root (the center of the hemisphere it bounds) is a vertex of the root type.
inline RootTypeVerdict check_root_type_vertices(const Realization& R) {
  RootTypeVerdict v;
  v.expected = expected_root_type(R);
  for (const auto& r : R.positive_roots) {
    for (const auto& p : {r, -r}) {
      ++v.roots_checked;
      PointType t = point_type(R, p);
      if (!t.is_vertex() || t.types.only() != v.expected) v.mismatches.push_back(p);
    }
  }
  v.ok = v.mismatches.empty();
  return v;
}

struct WallVerdict {
  bool ok = false;
  std::size_t walls_checked = 0;
  std::vector<std::string> failures;
  std::vector<RationalVector> witness_on_wall;  // for the first wall
  std::vector<RationalVector> non_subcomplex;   // n-1 orthogonal n-vertices
  RationalVector escaping_vertex;               // a cell vertex off their span
};

namespace detail {

// Extends `chosen` to `want` pairwise orthogonal members of `pool`.
inline bool orthogonal_family(const std::vector<RationalVector>& pool, std::size_t want, std::size_t from,
                              std::vector<RationalVector>& chosen) {
  if (chosen.size() == want) return true;
  for (std::size_t k = from; k < pool.size(); ++k) {
    bool ok = true;
    for (const auto& c : chosen) ok = ok && dot(c, pool[k]) == 0;
    if (!ok) continue;
    chosen.push_back(pool[k]);
    if (orthogonal_family(pool, want, k + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

inline bool in_span(const std::vector<RationalVector>& span, const RationalVector& u) {
  auto ext = span;
  ext.push_back(u);
  return linalg::rank(ext) == linalg::rank(span);
}

}  // namespace detail

/// D_n: every wall carries n-2 pairwise orthogonal n-vertices spanning a
/// singular (n-3)-sphere; n-1 of them span a sphere that is not a subcomplex.
inline WallVerdict check_wall_orthogonal_vertices(const Realization& R) {
  if (R.family != Family::D || R.rank < 4) throw std::invalid_argument("coxeter: wall check needs D_n, n >= 4");
  const int n = R.rank;
  const auto pool = vertex_orbit(R, n);
  WallVerdict v;
  for (const auto& r : R.positive_roots) {
    ++v.walls_checked;
    std::vector<RationalVector> on_wall, chosen;
    for (const auto& p : pool)
      if (dot(r, p) == 0) on_wall.push_back(p);
    if (!detail::orthogonal_family(on_wall, static_cast<std::size_t>(n - 2), 0, chosen)) {
      v.failures.push_back("no orthogonal family on wall " + r.str());
      continue;
    }
    // the roots vanishing on the span must cut out exactly that span
    std::vector<RationalVector> normal;
    for (const auto& q : R.positive_roots) {
      bool zero = true;
      for (const auto& c : chosen) zero = zero && dot(q, c) == 0;
      if (zero) normal.push_back(q);
    }
    if (linalg::rank(normal) != 2) v.failures.push_back("span on wall " + r.str() + " is not singular");
    if (v.witness_on_wall.empty()) v.witness_on_wall = chosen;
  }
  std::vector<RationalVector> big;
  if (!detail::orthogonal_family(pool, static_cast<std::size_t>(n - 1), 0, big)) {
    v.failures.push_back("no n-1 orthogonal n-vertices");
  } else {
    v.non_subcomplex = big;
    std::vector<Wide> s(R.ambient_dim, 0);
    for (const auto& b : big)
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
    bool escapes = false;
    for (const auto& u : cell_of(R, RationalVector::from_wide(s)).vertices) {
      if (!detail::in_span(big, u)) {
        v.escaping_vertex = u;
        escapes = true;
        break;
      }
    }
    if (!escapes) v.failures.push_back("span of n-1 orthogonal n-vertices is a subcomplex");
  }
  v.ok = v.failures.empty();
  return v;
}

// ---------------------------------------------------------------------------
// Configuration witnesses in E8

struct Claim {
  std::string what;
  bool holds = false;
};

struct ConfigurationWitness {
  std::vector<std::pair<std::string, RationalVector>> points;
  std::vector<Claim> claims;

  bool ok() const {
    return !claims.empty() && std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds; });
  }
  const RationalVector& at(const std::string& name) const {
    for (const auto& [k, p] : points)
      if (k == name) return p;
    throw std::out_of_range("coxeter: no witness point " + name);
  }
  void put(std::string name, RationalVector p) { points.emplace_back(std::move(name), std::move(p)); }
  void claim(std::string what, bool holds) { claims.push_back({std::move(what), holds}); }
};

namespace detail {

inline bool is_vertex_of_type(const Realization& R, const std::optional<RationalVector>& p, int t) {
  if (!p) return false;
  PointType pt = point_type(R, *p);
  return pt.is_vertex() && pt.types.only() == t;
}

inline bool seg_is(const Realization& R, const RationalVector& a, const RationalVector& b, const std::string& s) {
  return a != b && a != -b && segment_type(R, a, b).str() == s;
}

inline void require_e8(const Realization& R) {
  if (R.family != Family::E8) throw std::invalid_argument("coxeter: configuration search needs E8");
}

}  // namespace detail

/// Completes a configuration-* candidate (x1, x2, x3) and records every claim.
inline ConfigurationWitness configuration_star(const Realization& R, const RationalVector& x1,
                                               const RationalVector& x2, const RationalVector& x3) {
  using detail::is_vertex_of_type;
  using detail::seg_is;
  const CosValue half = CosValue::rational(1, 2), mhalf = CosValue::rational(-1, 2);
  ConfigurationWitness w;
  w.put("x1", x1);
  w.put("x2", x2);
  w.put("x3", x3);
  w.claim("x1, x2, x3 are 8-vertices",
          is_vertex_of_type(R, x1, 8) && is_vertex_of_type(R, x2, 8) && is_vertex_of_type(R, x3, 8));
  w.claim("d(x1,x2) = 2pi/3", cosine(x1, x2) == mhalf);
  w.claim("x1x2 of type 87878", seg_is(R, x1, x2, "87878"));
  auto y3 = midpoint(x1, x2);
  w.claim("y3 = m(x1,x2) is an 8-vertex", is_vertex_of_type(R, y3, 8));
  if (!y3 || x3 == *y3 || x3 == -*y3 || x3 == x1 || x3 == -x1) {
    w.claim("x3 distinct from x1, y3 and their antipodes", false);
    return w;
  }
  w.put("y3", *y3);
  w.claim("d(y3,x3) = 2pi/3", cosine(*y3, x3) == mhalf);
  w.claim("angle_y3(x3,x1) = arccos(-1/3)", angle(R, *y3, x3, x1) == CosValue::rational(-1, 3));
  w.claim("angle_y3(x3,x1) of type 727", link_segment_type(R, *y3, x3, x1).str() == "727");
  w.claim("side x1y3 of type 878", cosine(x1, *y3) == half && seg_is(R, x1, *y3, "878"));
  w.claim("side y3x3 of type 87878", seg_is(R, *y3, x3, "87878"));
  w.claim("side x1x3 of type 87878", cosine(x1, x3) == mhalf && seg_is(R, x1, x3, "87878"));
  auto m13 = midpoint(x1, *y3);
  w.claim("m(x1,y3) is a 7-vertex", is_vertex_of_type(R, m13, 7));
  if (m13) {
    w.put("m(x1,y3)", *m13);
    w.claim("m(x1,y3)x3 of type 72768", seg_is(R, *m13, x3, "72768"));
    w.claim("angle_m(x1,y3)(x1,x3) = pi/2", angle(R, *m13, x1, x3).sign() == 0);
    w.claim("angle_m(x1,y3)(y3,x3) = pi/2", angle(R, *m13, *y3, x3).sign() == 0);
  }
  auto y2 = midpoint(x1, x3);
  w.claim("y2 = m(x1,x3) is an 8-vertex", is_vertex_of_type(R, y2, 8));
  if (y2) {
    w.put("y2", *y2);
    auto z1 = midpoint(*y2, *y3);
    w.claim("z1 = m(y2,y3) is a 2-vertex", is_vertex_of_type(R, z1, 2));
    if (z1) w.put("z1", *z1);
  }
  return w;
}

/// Calls `visit` on configuration-* witnesses with x1 = v8, in sorted order,
/// until it returns true. Returns whether some visit returned true.
inline bool for_each_configuration_star(const Realization& R,
                                        const std::function<bool(const ConfigurationWitness&)>& visit) {
  detail::require_e8(R);
  const auto orbit8 = vertex_orbit(R, 8);
  const RationalVector& x1 = R.vertex(8);
  const CosValue mhalf = CosValue::rational(-1, 2), mthird = CosValue::rational(-1, 3);
  for (const auto& x2 : orbit8) {
    if (cosine(x1, x2) != mhalf) continue;
    auto y3 = midpoint(x1, x2);
    if (!detail::is_vertex_of_type(R, y3, 8)) continue;
    for (const auto& x3 : orbit8) {
      if (cosine(*y3, x3) != mhalf || cosine(x1, x3) != mhalf) continue;
      if (angle(R, *y3, x3, x1) != mthird) continue;
      ConfigurationWitness w = configuration_star(R, x1, x2, x3);
      if (w.ok() && visit(w)) return true;
    }
  }
  return false;
}

inline ConfigurationWitness find_configuration_star(const Realization& R) {
  ConfigurationWitness found;
  if (!for_each_configuration_star(R, [&](const ConfigurationWitness& w) {
        found = w;
        return true;
      }))
    throw std::runtime_error("coxeter: no configuration * in E8");
  return found;
}

/// Extends a configuration-* witness by the 8-vertex x; records every claim.
inline ConfigurationWitness configuration_star_star(const Realization& R, const ConfigurationWitness& star,
                                                    const RationalVector& x) {
  using detail::is_vertex_of_type;
  using detail::seg_is;
  const CosValue mhalf = CosValue::rational(-1, 2), mthird = CosValue::rational(-1, 3);
  ConfigurationWitness w = star;
  const auto &x1 = star.at("x1"), &x2 = star.at("x2"), &x3 = star.at("x3"), &y3 = star.at("y3"),
             &z1 = star.at("z1");
  w.put("x", x);
  const Realization L = link_realization(R, x1);
  const RationalVector xi = direction(R, x1, x).direction, xi2 = direction(R, x1, x2).direction,
                       xi3 = direction(R, x1, x3).direction, zeta = direction(R, x1, z1).direction;
  w.put("xi", xi);
  w.put("xi2", xi2);
  w.put("xi3", xi3);
  w.put("zeta", zeta);
  w.claim("x is an 8-vertex", is_vertex_of_type(R, x, 8));
  w.claim("d(x1,x) = pi/3", cosine(x1, x) == CosValue::rational(1, 2));
  w.claim("d(zeta,xi) = arccos(-1/sqrt(3))", cosine(zeta, xi) == -CosValue(1, 1, 3));
  w.claim("xi zeta of type 7672", seg_is(L, xi, zeta, "7672"));
  for (const auto& [name, xii, xpt] : {std::tuple{"2", xi2, x2}, std::tuple{"3", xi3, x3}}) {
    const std::string i = name;
    w.claim("d(xi,xi" + i + ") = arccos(-1/3)", cosine(xi, xii) == mthird);
    w.claim("xi xi" + i + " of type 727", seg_is(L, xi, xii, "727"));
    w.claim("angle_zeta(xi,xi" + i + ") = pi/2", angle(L, zeta, xi, xii).sign() == 0);
    w.claim("d(x,x" + i + ") = 2pi/3", cosine(x, xpt) == mhalf);
  }
  w.claim("xi2 xi3 of type 727", seg_is(L, xi2, xi3, "727"));
  auto gamma = normalized_sum({xi, xi2, xi3});
  w.claim("gamma is a 7-vertex of the link", is_vertex_of_type(L, gamma, 7));
  if (gamma) {
    w.put("gamma", *gamma);
    w.claim("gamma is equidistant from xi, xi2, xi3",
            cosine(*gamma, xi) == cosine(*gamma, xi2) && cosine(*gamma, xi) == cosine(*gamma, xi3));
    bool adj = true;
    for (const auto& [a, b] : {std::pair{xi, xi2}, std::pair{xi, xi3}, std::pair{xi2, xi3}}) {
      auto m = midpoint(a, b);
      adj = adj && is_vertex_of_type(L, m, 2) && adjacent(L, *gamma, *m);
    }
    w.claim("gamma adjacent to the side-midpoint 2-vertices", adj);
  }
  auto wv = midpoint(x, x2);
  w.claim("w = m(x,x2) is an 8-vertex", is_vertex_of_type(R, wv, 8));
  if (!wv) return w;
  w.put("w", *wv);
  auto omega = midpoint(xi, xi2);
  w.claim("direction x1 -> w is m(xi,xi2)", omega && direction(R, x1, *wv).direction == *omega);
  auto z = midpoint(x1, *wv);
  w.claim("z = m(x1,w) is a 2-vertex", is_vertex_of_type(R, z, 2));
  if (!z) return w;
  w.put("z", *z);
  w.claim("direction x1 -> z is m(xi,xi2)", omega && direction(R, x1, *z).direction == *omega);
  w.claim("angle_x1(z,x3) = arccos(-1/sqrt(3))", angle(R, x1, *z, x3) == -CosValue(1, 1, 3));
  w.claim("angle_x1(z,x3) of type 2767", link_segment_type(R, x1, *z, x3).str() == "2767");
  w.claim("d(z,x3) = 3pi/4", cosine(*z, x3) == -CosValue(1, 1, 2));
  w.claim("zx3 of type 2828", seg_is(R, *z, x3, "2828"));
  SegmentTrace t = trace_segment(R, *z, x3);
  std::optional<RationalVector> v;
  for (const auto& b : t.breakpoints)
    if (b.cell.is_vertex()) {
      v = b.point;
      break;
    }
  w.claim("v on zx3 is an 8-vertex adjacent to z", is_vertex_of_type(R, v, 8) && adjacent(R, *z, *v));
  if (v) w.put("v", *v);
  w.claim("d(x3,w) = 2pi/3", cosine(x3, *wv) == mhalf);
  w.claim("d(x3,y3) = d(x3,x) = 2pi/3", cosine(x3, y3) == mhalf && cosine(x3, x) == mhalf);
  bool right = true;
  for (const RationalVector* p : {&x1, static_cast<const RationalVector*>(&*wv), &y3, &x}) right = right && angle(R, *z, x3, *p).sign() == 0;
  w.claim("angle_z(x3, .) = pi/2 for x1, w, y3, x", right);
  auto m3w = midpoint(x3, *wv);
  w.claim("m(x3,w) is an 8-vertex", is_vertex_of_type(R, m3w, 8));
  if (m3w && gamma) {
    w.put("m(x3,w)", *m3w);
    w.claim("gamma extends to m(x3,w) at distance 2pi/3",
            cosine(x1, *m3w) == mhalf && direction(R, x1, *m3w).direction == *gamma);
  }
  return w;
}

/// Searches configuration-* witnesses and 8-vertices x for configuration **.
inline ConfigurationWitness find_configuration_star_star(const Realization& R) {
  detail::require_e8(R);
  const auto orbit8 = vertex_orbit(R, 8);
  const CosValue half = CosValue::rational(1, 2), target = -CosValue(1, 1, 3);
  ConfigurationWitness found;
  bool ok = for_each_configuration_star(R, [&](const ConfigurationWitness& star) {
    const auto &x1 = star.at("x1"), &z1 = star.at("z1");
    const RationalVector zeta = direction(R, x1, z1).direction;
    for (const auto& x : orbit8) {
      if (cosine(x1, x) != half || cosine(zeta, direction(R, x1, x).direction) != target) continue;
      ConfigurationWitness w = configuration_star_star(R, star, x);
      if (w.ok()) {
        found = std::move(w);
        return true;
      }
    }
    return false;
  });
  if (!ok) throw std::runtime_error("coxeter: no configuration ** in E8");
  return found;
}

// ---------------------------------------------------------------------------
// Convex subcomplexes of thin complexes

/// All vertices and cells of a (small) Coxeter complex.
struct CellComplex {
  Realization realization;
  std::vector<RationalVector> vertices;  // sorted
  std::vector<std::vector<int>> cells;   // sorted vertex ids, sorted
  std::vector<RationalVector> roots;     // all roots, sorted
};

inline CellComplex enumerate_cells(const Realization& R) {
  CellComplex cc{R, {}, {}, {}};
  std::set<std::vector<RationalVector>> chambers;
  for (const auto& q : orbit(R, R.interior_point(), R.types())) chambers.insert(cell_of(R, q).vertices);
  std::set<RationalVector> verts;
  for (const auto& c : chambers) verts.insert(c.begin(), c.end());
  cc.vertices.assign(verts.begin(), verts.end());
  auto id = [&](const RationalVector& p) {
    return static_cast<int>(std::lower_bound(cc.vertices.begin(), cc.vertices.end(), p) - cc.vertices.begin());
  };
  std::set<std::vector<int>> cells;
  for (const auto& c : chambers) {
    std::vector<int> ids;
    for (const auto& p : c) ids.push_back(id(p));
    std::sort(ids.begin(), ids.end());
    for (std::uint32_t mask = 1; mask < (1u << ids.size()); ++mask) {
      std::vector<int> face;
      for (std::size_t k = 0; k < ids.size(); ++k)
        if (mask & (1u << k)) face.push_back(ids[k]);
      cells.insert(std::move(face));
    }
  }
  cc.cells.assign(cells.begin(), cells.end());
  for (const auto& r : R.positive_roots) {
    cc.roots.push_back(r);
    cc.roots.push_back(-r);
  }
  std::sort(cc.roots.begin(), cc.roots.end());
  return cc;
}

/// Intersection of closed half-apartments <r, .> >= 0.
struct ConvexSubcomplex {
  std::vector<RationalVector> roots;
  std::vector<RationalVector> vertices;  // sorted
  std::vector<std::vector<int>> cells;   // ids into `vertices`
  bool empty() const { return vertices.empty(); }
};

inline ConvexSubcomplex convex_intersection(const CellComplex& cc, std::vector<RationalVector> roots) {
  ConvexSubcomplex c;
  c.roots = std::move(roots);
  std::vector<int> remap(cc.vertices.size(), -1);
  for (std::size_t k = 0; k < cc.vertices.size(); ++k) {
    bool in = true;
    for (const auto& r : c.roots) in = in && dot(r, cc.vertices[k]) >= 0;
    if (!in) continue;
    remap[k] = static_cast<int>(c.vertices.size());
    c.vertices.push_back(cc.vertices[k]);
  }
  for (const auto& cell : cc.cells) {
    std::vector<int> ids;
    for (int v : cell) {
      if (remap[v] < 0) break;
      ids.push_back(remap[v]);
    }
    if (ids.size() == cell.size()) c.cells.push_back(std::move(ids));
  }
  return c;
}

/// Intersection of `root_count` distinct roots drawn with mt19937_64(seed).
inline ConvexSubcomplex random_convex_intersection(const CellComplex& cc, std::size_t root_count,
                                                   std::uint64_t seed) {
  if (root_count > cc.roots.size()) throw std::invalid_argument("coxeter: more roots requested than exist");
  std::mt19937_64 gen(seed);
  std::vector<std::size_t> idx(cc.roots.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::vector<RationalVector> chosen;
  for (std::size_t k = 0; k < root_count; ++k) {
    // raw engine output keeps the draw identical across standard libraries
    std::size_t j = k + static_cast<std::size_t>(gen() % (idx.size() - k));
    std::swap(idx[k], idx[j]);
    chosen.push_back(cc.roots[idx[k]]);
  }
  return convex_intersection(cc, std::move(chosen));
}

/// Closed under v -> -v, i.e. a singular subsphere (or everything).
inline bool is_sphere(const ConvexSubcomplex& c) {
  for (const auto& v : c.vertices)
    if (!std::binary_search(c.vertices.begin(), c.vertices.end(), -v)) return false;
  return true;
}

struct RadiusEstimate {
  bool sphere = false;
  double upper = 0;  // radians; certified when `certified`
  double lower = 0;  // half the vertex diameter
  bool certified = false;
  std::optional<CosValue> bound;  // cos of `upper` when certified
  RationalVector center;
  std::size_t centers = 0;
};

namespace detail {

inline RationalVector sum_of(const std::vector<RationalVector>& pts) {
  std::vector<Wide> s(pts.front().size(), 0);
  for (const auto& p : pts)
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += p[i];
  return RationalVector::from_wide(s);
}

// Vertices of the barycentric subdivision of the simplices, and the simplices
// of that subdivision.
inline std::vector<std::vector<RationalVector>> subdivide(const std::vector<std::vector<RationalVector>>& simplices) {
  std::vector<std::vector<RationalVector>> out;
  for (const auto& s : simplices) {
    std::vector<std::size_t> perm(s.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    do {
      std::vector<RationalVector> flag, prefix;
      for (std::size_t k : perm) {
        prefix.push_back(s[k]);
        flag.push_back(sum_of(prefix));
      }
      out.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

inline std::set<RationalVector> face_barycenters(const std::vector<std::vector<RationalVector>>& simplices) {
  std::set<RationalVector> out;
  for (const auto& s : simplices) {
    for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<RationalVector> face;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (mask & (1u << k)) face.push_back(s[k]);
      out.insert(sum_of(face));
    }
  }
  return out;
}

}  // namespace detail

/// Cells of c that are not faces of larger cells of c, as vertex lists.
inline std::vector<std::vector<RationalVector>> maximal_cells(const ConvexSubcomplex& c) {
  std::set<std::vector<int>> cells(c.cells.begin(), c.cells.end());
  std::vector<std::vector<RationalVector>> out;
  for (const auto& cell : c.cells) {
    bool maximal = true;
    for (int u = 0; u < static_cast<int>(c.vertices.size()) && maximal; ++u) {
      if (std::binary_search(cell.begin(), cell.end(), u)) continue;
      auto bigger = cell;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), u), u);
      maximal = !cells.count(bigger);
    }
    if (!maximal) continue;
    std::vector<RationalVector> s;
    for (int v : cell) s.push_back(c.vertices[v]);
    out.push_back(std::move(s));
  }
  return out;
}

/// Subdivision points of c to the given depth (depth 0: the vertices).
inline std::vector<RationalVector> subdivision_points(const ConvexSubcomplex& c, int depth) {
  if (depth <= 0) return c.vertices;
  auto simplices = maximal_cells(c);
  for (int d = 1; d < depth; ++d) simplices = detail::subdivide(simplices);
  auto pts = detail::face_barycenters(simplices);
  return {pts.begin(), pts.end()};
}

namespace detail {

inline Wide det(std::vector<std::vector<Wide>> m) {
  // Bareiss elimination; exact for integer matrices
  const std::size_t n = m.size();
  Wide sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Generalized cross product: the vector orthogonal to the k-1 rows.
inline std::vector<Wide> cross(const std::vector<const std::vector<Wide>*>& rows, std::size_t k) {
  std::vector<Wide> out(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<Wide>> minor;
    for (const auto* r : rows) {
      std::vector<Wide> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back((*r)[c]);
      minor.push_back(std::move(row));
    }
    out[j] = (j % 2 ? -1 : 1) * (minor.empty() ? Wide(1) : det(minor));
  }
  return out;
}

}  // namespace detail

/// Points c of c with <c, u> >= 0 for every vertex u, found exactly as the
/// extreme rays of that cone inside each maximal cell.
inline std::vector<RationalVector> hemisphere_centers(const ConvexSubcomplex& c) {
  std::set<RationalVector> out;
  for (const auto& cell : maximal_cells(c)) {
    const std::size_t k = cell.size();
    // constraints on barycentric weights: lambda_j >= 0 and <u, sum lambda_j cell_j> >= 0
    std::vector<std::vector<Wide>> cons;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Wide> e(k, 0);
      e[j] = 1;
      cons.push_back(std::move(e));
    }
    for (const auto& u : c.vertices) {
      std::vector<Wide> row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = dot(u, cell[j]);
      cons.push_back(std::move(row));
    }
    auto feasible = [&](const std::vector<Wide>& lam) {
      bool nonzero = false;
      for (Wide l : lam) nonzero = nonzero || l != 0;
      if (!nonzero) return false;
      for (const auto& row : cons) {
        Wide s = 0;
        for (std::size_t j = 0; j < k; ++j) s += row[j] * lam[j];
        if (s < 0) return false;
      }
      return true;
    };
    auto emit = [&](const std::vector<Wide>& lam) {
      std::vector<Wide> p(cell.front().size(), 0);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += lam[j] * cell[j][i];
      out.insert(RationalVector::from_wide(p));
    };
    if (k == 1) {
      if (feasible({1})) emit({1});
      continue;
    }
    std::vector<std::size_t> pick(k - 1);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
      if (depth == k - 1) {
        std::vector<const std::vector<Wide>*> rows;
        for (std::size_t i : pick) rows.push_back(&cons[i]);
        auto ray = detail::cross(rows, k);
        for (int s : {1, -1}) {
          std::vector<Wide> lam = ray;
          for (auto& l : lam) l *= s;
          if (feasible(lam)) emit(lam);
        }
        return;
      }
      for (std::size_t i = from; i < cons.size(); ++i) {
        pick[depth] = i;
        choose(depth + 1, i + 1);
      }
    };
    choose(0, 0);
  }
  return {out.begin(), out.end()};
}

/// Intrinsic radius estimate over subdivision centers. A center whose cosine
/// to every vertex is >= 0 bounds the distance to every point of c by the
/// largest vertex distance, so that bound is exact. When no subdivision point
/// qualifies, the extreme rays of the admissible-center cone are tried; if
/// that is empty too the estimate falls back to the max over subdivision points.
inline RadiusEstimate intrinsic_radius_estimate(const ConvexSubcomplex& c, int depth) {
  if (c.empty()) throw std::invalid_argument("coxeter: radius of the empty subcomplex");
  RadiusEstimate e;
  e.sphere = is_sphere(c);
  double diam = 0;
  for (std::size_t a = 0; a < c.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < c.vertices.size(); ++b)
      diam = std::max(diam, cosine(c.vertices[a], c.vertices[b]).angle());
  e.lower = diam / 2;
  if (e.sphere) {
    e.upper = std::numbers::pi;
    return e;
  }
  const auto centers = subdivision_points(c, depth);
  e.centers = centers.size();
  std::optional<CosValue> best;
  for (const auto& p : centers) {
    std::optional<CosValue> worst;
    for (const auto& u : c.vertices) {
      CosValue cv = cosine(p, u);
      if (!worst || cv < *worst) worst = cv;
    }
    if (!best || *worst > *best) {
      best = worst;
      e.center = p;
    }
  }
  if (best->sign() < 0) {
    // the discrete centers miss; search the exact cone of admissible centers
    for (const auto& p : hemisphere_centers(c)) {
      std::optional<CosValue> worst;
      for (const auto& u : c.vertices) {
        CosValue cv = cosine(p, u);
        if (!worst || cv < *worst) worst = cv;
      }
      ++e.centers;
      if (*worst > *best) {
        best = worst;
        e.center = p;
      }
    }
  }
  if (best->sign() >= 0) {
    e.certified = true;
    e.bound = best;
    e.upper = best->angle();
    return e;
  }
  e.upper = std::numbers::pi;
  for (const auto& p : centers) {
    double far = 0;
    for (const auto& q : centers) far = std::max(far, cosine(p, q).angle());
    if (far < e.upper) {
      e.upper = far;
      e.center = p;
    }
  }
  return e;
}

struct GapSample {
  std::uint64_t seed = 0;
  std::size_t root_count = 0;
  std::size_t vertices = 0;
  bool empty = false;
  bool sphere = false;
  RadiusEstimate estimate;
  bool passes = false;
};

struct GapReport {
  std::vector<GapSample> samples;
  std::size_t spheres = 0, empties = 0, failures = 0;
  double worst_radius = 0;  // over non-sphere samples
  bool ok() const { return failures == 0; }
};

inline constexpr double gap_tolerance = 1e-6;

/// Sample k intersects root_counts[k % size] roots drawn with seed + k. The
/// empty set counts as a sphere (of dimension -1).
inline GapReport gap_experiment(const CellComplex& cc, const std::vector<std::size_t>& root_counts,
                                std::size_t samples, std::uint64_t seed, int depth = 2) {
  if (root_counts.empty()) throw std::invalid_argument("coxeter: no root counts");
  GapReport rep;
  const double limit = std::numbers::pi / 2 + gap_tolerance;
  for (std::size_t k = 0; k < samples; ++k) {
    GapSample s;
    s.seed = seed + k;
    s.root_count = root_counts[k % root_counts.size()];
    ConvexSubcomplex c = random_convex_intersection(cc, s.root_count, s.seed);
    s.vertices = c.vertices.size();
    s.empty = c.empty();
    if (s.empty) {
      s.sphere = s.passes = true;
      ++rep.empties;
    } else {
      s.estimate = intrinsic_radius_estimate(c, depth);
      s.sphere = s.estimate.sphere;
      s.passes = s.sphere || s.estimate.upper <= limit;
      if (s.sphere) ++rep.spheres;
      else rep.worst_radius = std::max(rep.worst_radius, s.estimate.upper);
    }
    if (!s.passes) ++rep.failures;
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

/// Thin complexes for the lab: D_n directly, A_n as the link of a 1-vertex of D_{n+1}.
inline Realization lab_complex(Family family, int rank) {
  if (family == Family::A) {
    if (rank < 2) throw std::invalid_argument("coxeter: A_n lab complex needs n >= 2");
    Realization D = build_realization(Family::D, rank + 1);
    return link_realization(D, D.vertex(1));
  }
  return build_realization(family, rank);
}

}  // namespace coxeter
