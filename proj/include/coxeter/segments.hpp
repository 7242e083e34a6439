#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/geometry.hpp"

namespace coxeter {

/// A wall crossing on the chord (1-s)x + sy, with s = num/den in (0,1).
struct Breakpoint {
  Int num = 0;
  Int den = 1;
  RationalVector point;
  PointType cell;
  double parameter() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Wall-crossing trace of the geodesic arc from x to y. `stretches[k]` is the
/// cell met strictly between breakpoints k-1 and k (endpoints at 0 and 1).
struct SegmentTrace {
  RationalVector x, y;
  std::vector<Breakpoint> breakpoints;
  std::vector<PointType> stretches;
  std::vector<RationalVector> stretch_points;
  int max_interior_cell_dim = 0;
};

inline void require_segment(const RationalVector& x, const RationalVector& y) {
  require_same_dim(x, y);
  if (x == y) throw std::invalid_argument("coxeter: segment endpoints coincide");
  if (x == -y) throw std::invalid_argument("coxeter: segment endpoints are antipodal");
}

inline SegmentTrace trace_segment(const Realization& R, const RationalVector& x, const RationalVector& y) {
  require_segment(x, y);
  // s -> crossing; fractions compared exactly
  auto less = [](const std::pair<Wide, Wide>& a, const std::pair<Wide, Wide>& b) {
    return a.first * b.second < b.first * a.second;
  };
  std::map<std::pair<Wide, Wide>, int, decltype(less)> crossings(less);
  for (const auto& r : R.positive_roots) {
    Wide a = dot(r, x), b = dot(r, y);
    if ((a < 0 && b > 0) || (a > 0 && b < 0)) {
      Wide num = a, den = a - b;
      if (den < 0) {
        num = -num;
        den = -den;
      }
      Wide g = arith::gcd(num, den);
      crossings.emplace(std::make_pair(num / g, den / g), 0);
    }
  }
  SegmentTrace t{x, y, {}, {}, {}, 0};
  auto chord_point = [&](Wide num, Wide den) { return combine(den - num, x, num, y); };
  std::vector<std::pair<Wide, Wide>> params{{0, 1}};
  for (const auto& [s, unused] : crossings) {
    (void)unused;
    Breakpoint b;
    b.num = arith::narrow(s.first);
    b.den = arith::narrow(s.second);
    b.point = chord_point(s.first, s.second);
    b.cell = point_type(R, b.point);
    t.max_interior_cell_dim = std::max(t.max_interior_cell_dim, b.cell.dim());
    t.breakpoints.push_back(std::move(b));
    params.push_back(s);
  }
  params.push_back({1, 1});
  for (std::size_t k = 0; k + 1 < params.size(); ++k) {
    // midpoint (a/b + c/d)/2 = (ad + cb) / 2bd
    Wide num = params[k].first * params[k + 1].second + params[k + 1].first * params[k].second;
    Wide den = 2 * params[k].second * params[k + 1].second;
    RationalVector p = chord_point(num, den);
    PointType c = point_type(R, p);
    t.max_interior_cell_dim = std::max(t.max_interior_cell_dim, c.dim());
    t.stretches.push_back(c);
    t.stretch_points.push_back(std::move(p));
  }
  return t;
}

struct SegmentType {
  std::vector<int> types;  // endpoints included
  CosValue length;         // cosine of the arc length
  bool singular = false;
  int hull_dim = 0;
  std::string str() const { return type_string(types); }
};

/// A segment is singular iff every cell met by the open arc has dimension <= 1.
inline SegmentType segment_type(const SegmentTrace& t, int type_x, int type_y) {
  SegmentType s;
  s.types.push_back(type_x);
  for (const auto& b : t.breakpoints)
    if (b.cell.is_vertex()) s.types.push_back(b.cell.types.only());
  s.types.push_back(type_y);
  s.length = cosine(t.x, t.y);
  s.hull_dim = t.max_interior_cell_dim;
  s.singular = t.max_interior_cell_dim <= 1;
  return s;
}

inline SegmentType segment_type(const Realization& R, const RationalVector& x, const RationalVector& y) {
  return segment_type(trace_segment(R, x, y), vertex_type(R, x), vertex_type(R, y));
}

struct SingularSpan {
  int dimension = 0;                  // of the sphere cut out by the roots
  std::vector<RationalVector> roots;  // positive roots vanishing on x and y
};

/// Smallest singular sphere containing x and y.
inline SingularSpan singular_span(const Realization& R, const RationalVector& x, const RationalVector& y) {
  require_segment(x, y);
  SingularSpan s;
  for (const auto& r : R.positive_roots)
    if (dot(r, x) == 0 && dot(r, y) == 0) s.roots.push_back(r);
  s.dimension = R.rank - 1 - static_cast<int>(linalg::rank(s.roots));
  return s;
}

struct CellsMet {
  std::vector<Cell> cells;
  int hull_dim = 0;
  std::vector<RationalVector> vertices;
};

/// Closed cells whose relative interior meets the open arc xy.
inline CellsMet cells_met(const Realization& R, const RationalVector& x, const RationalVector& y) {
  SegmentTrace t = trace_segment(R, x, y);
  std::set<Cell> cells;
  for (const auto& b : t.breakpoints) cells.insert(cell_of(R, b.point));
  for (const auto& p : t.stretch_points) cells.insert(cell_of(R, p));
  CellsMet out;
  std::set<RationalVector> verts;
  for (const auto& c : cells) {
    out.hull_dim = std::max(out.hull_dim, c.dim());
    verts.insert(c.vertices.begin(), c.vertices.end());
  }
  out.cells.assign(cells.begin(), cells.end());
  out.vertices.assign(verts.begin(), verts.end());
  return out;
}

/// Direction of y seen from the vertex x: a point of the link of x.
struct LinkPoint {
  RationalVector host;
  RationalVector direction;  // orthogonal to host
  TypeSet ambient_type;      // types of the link cell containing the direction
};

inline LinkPoint direction(const Realization& R, const RationalVector& x, const RationalVector& y) {
  require_segment(x, y);
  Wide xx = norm2(x), xy = dot(x, y);
  LinkPoint lp{x, combine(-xy, x, xx, y), {}};
  Descent dx = descend(R, x);
  TypeSet host = chamber_support(R, dx.point);
  if (!PointType{host}.is_vertex()) throw std::invalid_argument("coxeter: link host must be a vertex");
  RationalVector d = apply_word(R, dx.word, lp.direction);
  TypeSet stab = R.types().minus(host);
  Descent dd = descend(R, d, DescentStrategy::first_violated, stab);
  lp.ambient_type = chamber_support(R, dd.point).minus(host);
  return lp;
}

/// The link of a vertex as a Coxeter complex in the hyperplane orthogonal to
/// x, with the ambient type labels.
inline Realization link_realization(const Realization& R, const RationalVector& x) {
  Descent dx = descend(R, x);
  TypeSet host = chamber_support(R, dx.point);
  if (!PointType{host}.is_vertex()) throw std::invalid_argument("coxeter: link host must be a vertex");
  std::vector<RationalVector> roots;
  std::vector<int> labels;
  for (int k = 0; k < R.rank; ++k) {
    if (host.contains(R.labels[k])) continue;
    roots.push_back(apply_inverse_word(R, dx.word, R.roots[k]));
    labels.push_back(R.labels[k]);
  }
  if (roots.empty()) throw std::invalid_argument("coxeter: link of a rank-1 vertex is empty");
  return make_realization(Family::Link, roots, labels);
}

/// Cosine of the angle at x between the arcs xy and xz.
inline CosValue angle(const Realization& R, const RationalVector& x, const RationalVector& y,
                      const RationalVector& z) {
  return cosine(direction(R, x, y).direction, direction(R, x, z).direction);
}

/// Segment type, inside the link of x, of the arc between the directions to y and z.
inline SegmentType link_segment_type(const Realization& R, const RationalVector& x, const RationalVector& y,
                                     const RationalVector& z) {
  Realization L = link_realization(R, x);
  return segment_type(L, direction(R, x, y).direction, direction(R, x, z).direction);
}

/// Vertices x, y span an edge of the complex.
inline bool adjacent(const Realization& R, const RationalVector& x, const RationalVector& y) {
  if (x == y || x == -y) return false;
  SegmentTrace t = trace_segment(R, x, y);
  return t.breakpoints.empty() && t.stretches.size() == 1 && t.stretches[0].dim() == 1;
}

/// Normalized sum of rays whose squared norms have rational-square ratios;
/// nullopt if the sum is not a rational ray.
inline std::optional<RationalVector> normalized_sum(const std::vector<RationalVector>& pts) {
  if (pts.empty()) return std::nullopt;
  const Wide n0 = norm2(pts.front());
  std::vector<Wide> acc(pts.front().size(), 0);
  // sqrt(n0 / n_k) = a_k / b_k; accumulate with common denominator
  std::vector<std::pair<Wide, Wide>> scale;
  Wide lcm = 1;
  for (const auto& p : pts) {
    Wide n = norm2(p);
    Wide g = arith::gcd(n0, n);
    auto a = arith::exact_sqrt(n0 / g), b = arith::exact_sqrt(n / g);
    if (!a || !b) return std::nullopt;
    scale.emplace_back(*a, *b);
    lcm = lcm / arith::gcd(lcm, *b) * *b;
  }
  for (std::size_t k = 0; k < pts.size(); ++k) {
    Wide f = scale[k].first * (lcm / scale[k].second);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += f * pts[k][i];
  }
  for (Wide v : acc)
    if (v != 0) return RationalVector::from_wide(acc);
  return std::nullopt;
}

/// Spherical midpoint m(x, y) when it is a rational ray.
inline std::optional<RationalVector> midpoint(const RationalVector& x, const RationalVector& y) {
  if (x == -y) return std::nullopt;
  return normalized_sum({x, y});
}

}  // namespace coxeter
