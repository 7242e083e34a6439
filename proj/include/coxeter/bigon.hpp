#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "coxeter/segments.hpp"
#include "coxeter/weyl.hpp"

namespace coxeter {

/// Keeps rows at distance > bound (or >= bound when inclusive).
struct DistanceFilter {
  CosValue bound;  // cosine of the bounding angle
  bool inclusive = false;
  bool accepts(const CosValue& c) const { return inclusive ? c <= bound : c < bound; }
};

/// beta_i(i_1..i_k) restricted to target-type vertices.
struct BigonSpec {
  int base = 0;
  TypeSet excluded;
  int target = 0;
  std::optional<DistanceFilter> filter;
  bool exclude_ends = false;  // drop v_base and its antipode
};

struct BigonRow {
  RationalVector representative;
  CosValue distance;  // cosine of d(v_base, x)
  TypeSet sigma;      // face of the link chamber at v_base containing the direction to x
  WeylOrder orbit_size = 0;
  std::string segment;  // type string, empty for x = +-v_base
  bool singular = false;
  int hull_dim = 0;
};

inline void validate(const Realization& R, const BigonSpec& s) {
  if (!R.has_type(s.base) || !R.has_type(s.target)) throw std::invalid_argument("coxeter: bigon type not in complex");
  if (!s.excluded.subset_of(R.types())) throw std::invalid_argument("coxeter: excluded type not in complex");
  if (s.excluded.contains(s.base)) throw std::invalid_argument("coxeter: base type cannot be excluded");
}

/// Closed bigon membership: <r_l, x> >= 0 off the base, = 0 on excluded types.
inline bool in_bigon(const Realization& R, const BigonSpec& s, const RationalVector& x) {
  for (int k = 0; k < R.rank; ++k) {
    const int l = R.labels[k];
    if (l == s.base) continue;
    Wide v = dot(R.roots[k], x);
    if (s.excluded.contains(l) ? v != 0 : v < 0) return false;
  }
  return true;
}

/// Types of the face of the link chamber at v_base whose interior contains
/// the direction towards x.
inline TypeSet sigma_face(const Realization& R, int base, const RationalVector& x) {
  return direction(R, R.vertex(base), x).ambient_type;
}

inline WeylOrder row_orbit_size(const Realization& R, int base, TypeSet sigma) {
  TypeSet b;
  b.insert(base);
  return stabilizer_order(R, b) / stabilizer_order(R, b | sigma);
}

inline BigonRow make_row(const Realization& R, int base, const RationalVector& x) {
  const RationalVector& v = R.vertex(base);
  BigonRow row;
  row.representative = x;
  row.distance = cosine(v, x);
  if (x != v && x != -v) {
    row.sigma = sigma_face(R, base, x);
    SegmentType st = segment_type(R, v, x);
    row.segment = st.str();
    row.singular = st.singular;
    row.hull_dim = st.hull_dim;
  }
  row.orbit_size = row_orbit_size(R, base, row.sigma);
  return row;
}

/// Orders rows by increasing distance, then sigma, then representative.
inline bool row_less(const BigonRow& a, const BigonRow& b) {
  if (a.distance != b.distance) return a.distance > b.distance;
  if (a.sigma != b.sigma) return a.sigma.bits() < b.sigma.bits();
  return a.representative < b.representative;
}

/// One row per target vertex in the bigon; beta_base is a fundamental domain
/// for Stab(v_base), so each row is one Stab(v_base)-orbit.
inline std::vector<BigonRow> enumerate_bigon(const Realization& R, const BigonSpec& spec,
                                             const std::vector<RationalVector>& target_orbit) {
  validate(R, spec);
  std::vector<BigonRow> rows;
  const RationalVector& v = R.vertex(spec.base);
  for (const auto& x : target_orbit) {
    if (!in_bigon(R, spec, x)) continue;
    if (spec.exclude_ends && (x == v || x == -v)) continue;
    if (spec.filter && !spec.filter->accepts(cosine(v, x))) continue;
    rows.push_back(make_row(R, spec.base, x));
  }
  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

inline std::vector<BigonRow> enumerate_bigon(const Realization& R, const BigonSpec& spec) {
  return enumerate_bigon(R, spec, vertex_orbit(R, spec.target));
}

/// Rows sharing a (distance, sigma) key.
inline std::vector<std::pair<BigonRow, BigonRow>> key_collisions(const std::vector<BigonRow>& rows) {
  std::vector<std::pair<BigonRow, BigonRow>> out;
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      if (rows[a].distance == rows[b].distance && rows[a].sigma == rows[b].sigma) out.emplace_back(rows[a], rows[b]);
  return out;
}

struct CountVerdict {
  bool ok = false;
  WeylOrder computed = 0;  // left-hand side from the rows
  WeylOrder expected = 0;  // |W| / |Stab(v_target)|
};

inline WeylOrder target_count(const Realization& R, int target) {
  TypeSet t;
  t.insert(target);
  return weyl_order(R) / stabilizer_order(R, t);
}

/// Sum of row orbit sizes over a full bigon equals the number of target vertices.
inline CountVerdict verify_exhaustion(const Realization& R, const BigonSpec& spec, const std::vector<BigonRow>& rows) {
  CountVerdict v;
  for (const auto& r : rows) v.computed += r.orbit_size;
  v.expected = target_count(R, spec.target);
  v.ok = v.computed == v.expected;
  return v;
}

/// 2 * (rows at distance >= pi/2) - (rows at pi/2) counts all target
/// vertices when the target type is fixed by v -> -v.
inline CountVerdict verify_half_table(const Realization& R, const BigonSpec& spec, const std::vector<BigonRow>& rows) {
  if (opposition_involution(R).at(spec.target) != spec.target)
    throw std::invalid_argument("coxeter: target type is not fixed by the opposition involution");
  CountVerdict v;
  WeylOrder sum = 0, equator = 0;
  for (const auto& r : rows) {
    if (r.distance.sign() > 0) throw std::invalid_argument("coxeter: half table row closer than pi/2");
    sum += r.orbit_size;
    if (r.distance.sign() == 0) equator += r.orbit_size;
  }
  v.computed = 2 * sum - equator;
  v.expected = target_count(R, spec.target);
  v.ok = v.computed == v.expected;
  return v;
}

/// Orbit size of a row by direct enumeration of Stab(v_base) . x.
inline std::size_t stabilizer_orbit_bfs(const Realization& R, int base, const RationalVector& x) {
  TypeSet gens = R.types();
  gens.erase(base);
  return orbit(R, x, gens).size();
}

/// Canonical bigon representative of x: its Stab(v_base)-descent.
inline RationalVector bigon_representative(const Realization& R, int base, const RationalVector& x) {
  TypeSet gens = R.types();
  gens.erase(base);
  return descend(R, x, DescentStrategy::first_violated, gens).point;
}

/// Every target vertex descends under Stab(v_base) onto exactly one row, and
/// each row receives exactly orbit_size vertices.
inline bool verify_fundamental_domain(const Realization& R, const BigonSpec& spec, const std::vector<BigonRow>& rows) {
  std::map<RationalVector, WeylOrder> hits;
  for (const auto& r : rows) hits[r.representative] = 0;
  for (const auto& x : vertex_orbit(R, spec.target)) {
    auto it = hits.find(bigon_representative(R, spec.base, x));
    if (it == hits.end()) return false;
    it->second += 1;
  }
  for (const auto& r : rows)
    if (hits[r.representative] != r.orbit_size) return false;
  return true;
}

/// Target vertices strictly inside beta_base(excluded): strict inequalities
/// off the base and the excluded types, equalities on the excluded types.
inline std::vector<RationalVector> bigon_interior_vertices(const Realization& R, const BigonSpec& spec) {
  validate(R, spec);
  std::vector<RationalVector> out;
  const RationalVector& v = R.vertex(spec.base);
  for (const auto& x : vertex_orbit(R, spec.target)) {
    if (x == v || x == -v) continue;
    bool inside = true;
    for (int k = 0; k < R.rank && inside; ++k) {
      const int l = R.labels[k];
      if (l == spec.base) continue;
      Wide d = dot(R.roots[k], x);
      inside = spec.excluded.contains(l) ? d == 0 : d > 0;
    }
    if (inside) out.push_back(x);
  }
  return out;
}

}  // namespace coxeter
