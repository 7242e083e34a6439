#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "coxeter/cache.hpp"
#include "coxeter/io.hpp"

namespace coxeter {

/// Outcome of checking one golden file (or one block of it).
struct GoldenVerdict {
  std::string name;
  bool ok = true;
  std::size_t checked = 0;  // rows or items compared
  std::vector<std::string> problems;

  void fail(std::string why) {
    ok = false;
    problems.push_back(std::move(why));
  }
};

inline Json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("coxeter: cannot open " + p.string());
  return Json::parse(in);
}

/// Realization for a complex name: E6, E7, E8 or D<n>.
inline Realization realization_for(const std::string& name) {
  auto [family, rank] = parse_family(name);
  if (family == Family::A) throw std::invalid_argument("coxeter: A_n complexes are only available in the lab");
  return build_realization(family, rank);
}

// ---------------------------------------------------------------------------
// Orbit representative lists

/// Orbit of p under the reflections in `roots` (any integer vectors).
inline std::vector<RationalVector> orbit_under(const RationalVector& p, const std::vector<RationalVector>& roots) {
  std::unordered_set<RationalVector, RationalVectorHash> seen{p};
  std::vector<RationalVector> queue{p};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& r : roots) {
      RationalVector q = reflect(queue[head], r);
      if (seen.insert(q).second) queue.push_back(q);
    }
  return queue;
}

/// Reflections generating "permutations of the first k coordinates with an
/// even number of sign changes", optionally with the simultaneous sign change
/// of the last two coordinates.
inline std::vector<RationalVector> display_group_roots(std::size_t dim, std::size_t k, bool flip_last_two) {
  std::vector<RationalVector> out;
  std::vector<Int> r(dim, 0);
  r[0] = r[1] = 1;
  out.emplace_back(r);
  for (std::size_t i = 1; i < k; ++i) out.push_back(detail::diff(dim, i, i - 1));
  if (flip_last_two) {
    std::vector<Int> f(dim, 0);
    f[dim - 1] = f[dim - 2] = 1;
    out.emplace_back(f);
  }
  return out;
}

/// Chamber vertices and orbit representatives: every representative has the
/// stated type, their display-group orbits are disjoint and together exhaust
/// the vertex orbit.
inline GoldenVerdict verify_orbit_file(const Json& j) {
  GoldenVerdict v;
  v.name = j.at("family").get<std::string>() + " orbit representatives";
  const Realization R = realization_for(j.at("family").get<std::string>());
  const auto& verts = j.at("chamber_vertices");
  for (int k = 0; k < R.rank; ++k) {
    ++v.checked;
    if (vector_from_json(verts.at(k)) != R.vertices[k])
      v.fail("chamber vertex v" + std::to_string(R.labels[k]) + " differs: computed " + R.vertices[k].str());
  }
  const auto& g = j.at("display_group");
  const auto roots = display_group_roots(R.ambient_dim, g.at("signed_permutations_of_first").get<std::size_t>(),
                                         g.value("flip_last_two", false));
  for (const auto& o : j.at("orbits")) {
    const int type = o.at("type").get<int>();
    const WeylOrder expected(o.at("count").get<std::string>());
    if (expected != target_count(R, type))
      v.fail("type " + std::to_string(type) + " count " + expected.str() + " != " + target_count(R, type).str());
    std::unordered_set<RationalVector, RationalVectorHash> covered;
    for (const auto& rj : o.at("representatives")) {
      ++v.checked;
      RationalVector rep = vector_from_json(rj);
      PointType t = point_type(R, rep);
      if (!t.is_vertex() || t.types.only() != type) {
        v.fail(rep.str() + " is not a " + std::to_string(type) + "-vertex");
        continue;
      }
      for (const auto& q : orbit_under(rep, roots))
        if (!covered.insert(q).second) v.fail(rep.str() + " overlaps another representative");
    }
    if (WeylOrder(static_cast<unsigned long long>(covered.size())) != expected)
      v.fail("type " + std::to_string(type) + " representatives cover " + std::to_string(covered.size()) +
             " vertices, expected " + expected.str());
  }
  return v;
}

// ---------------------------------------------------------------------------
// Bigon tables

/// Compares a golden bigon table with regeneration. Golden rows are matched by
/// Stab(v_base)-orbit (descent of the listed vector); a row marked as a
/// representative erratum is matched by (distance, sigma) only. Every
/// regenerated row must be matched exactly once.
inline GoldenVerdict verify_bigon_file(const Json& j, OrbitCache& cache) {
  GoldenVerdict v;
  v.name = j.at("name").get<std::string>();
  const Realization R = realization_for(j.at("family").get<std::string>());
  const BigonSpec spec = spec_from_json(j.at("spec"));
  std::vector<BigonRow> rows = enumerate_bigon(R, spec, cache.orbit(R, spec.target));
  if (j.contains("distances")) {
    std::set<CosValue> keep;
    for (const auto& d : j["distances"]) keep.insert(parse_angle(d.get<std::string>()));
    std::erase_if(rows, [&](const BigonRow& r) { return !keep.count(r.distance); });
  }
  for (const auto& [a, b] : key_collisions(rows))
    v.fail("two orbits share distance " + render_angle(a.distance) + " and sigma " + a.sigma.str());
  std::vector<int> used(rows.size(), 0);
  for (const auto& gj : j.at("rows")) {
    ++v.checked;
    const RationalVector listed = vector_from_json(gj.at("representative"));
    std::optional<CosValue> dist;
    if (gj.contains("distance")) dist = parse_angle(gj["distance"].get<std::string>());
    const TypeSet sigma = TypeSet::parse(gj.value("sigma", ""));
    const std::string label = listed.str();
    std::optional<std::size_t> hit;
    if (gj.contains("representative_erratum")) {
      for (std::size_t k = 0; k < rows.size() && !hit; ++k)
        if (!used[k] && dist && rows[k].distance == *dist && rows[k].sigma == sigma) hit = k;
    } else {
      PointType t = point_type(R, listed);
      if (!t.is_vertex() || t.types.only() != spec.target) {
        v.fail(label + " is not a " + std::to_string(spec.target) + "-vertex");
        continue;
      }
      const RationalVector canon = bigon_representative(R, spec.base, listed);
      for (std::size_t k = 0; k < rows.size() && !hit; ++k)
        if (rows[k].representative == canon) hit = k;
    }
    if (!hit) {
      v.fail("no regenerated row for " + label);
      continue;
    }
    const BigonRow& r = rows[*hit];
    ++used[*hit];
    if (dist && r.distance != *dist)
      v.fail(label + ": distance " + render_angle(r.distance) + ", listed " + render_angle(*dist));
    if (gj.contains("equator") && (r.distance.sign() == 0) != gj["equator"].get<bool>())
      v.fail(label + ": equator mark disagrees with distance " + render_angle(r.distance));
    if (r.sigma != sigma) v.fail(label + ": sigma " + r.sigma.str() + ", listed " + sigma.str());
    if (gj.contains("orbit_size") && r.orbit_size != WeylOrder(gj["orbit_size"].get<std::string>()))
      v.fail(label + ": orbit size " + r.orbit_size.str() + ", listed " + gj["orbit_size"].get<std::string>());
    if (gj.contains("segment") && r.segment != gj["segment"].get<std::string>())
      v.fail(label + ": segment " + r.segment + ", listed " + gj["segment"].get<std::string>());
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (used[k] == 0) v.fail("regenerated row " + rows[k].representative.str() + " is not listed");
    if (used[k] > 1) v.fail("regenerated row " + rows[k].representative.str() + " listed twice");
  }
  if (j.contains("identity")) {
    const auto& id = j["identity"];
    const std::string kind = id.at("kind").get<std::string>();
    CountVerdict c;
    if (kind == "half_table") {
      c = verify_half_table(R, spec, rows);
    } else if (kind == "exhaustion") {
      BigonSpec full = spec;
      full.filter.reset();
      full.exclude_ends = false;
      c = verify_exhaustion(R, full, enumerate_bigon(R, full, cache.orbit(R, spec.target)));
    } else {
      throw std::invalid_argument("coxeter: unknown identity '" + kind + "'");
    }
    const WeylOrder expected(id.at("expected").get<std::string>());
    if (!c.ok || c.computed != expected)
      v.fail(kind + " identity gives " + c.computed.str() + ", expected " + expected.str());
  }
  if (j.value("interior_empty", false)) {
    auto inside = bigon_interior_vertices(R, spec);
    if (!inside.empty()) v.fail("interior contains " + inside.front().str());
  }
  return v;
}

// ---------------------------------------------------------------------------
// Segment-type tables

/// Each listed (distance, type) is realized by a segment from v_from to some
/// to-vertex; when a menu is given, the realized distances are exactly it.
inline GoldenVerdict verify_segment_block(const Realization& R, const Json& pair, OrbitCache& cache) {
  const int from = pair.at("from").get<int>(), to = pair.at("to").get<int>();
  GoldenVerdict v;
  v.name = R.name() + " " + std::to_string(from) + "-" + std::to_string(to) + " segments";
  BigonSpec spec;
  spec.base = from;
  spec.target = to;
  const auto rows = enumerate_bigon(R, spec, cache.orbit(R, to));
  if (pair.contains("menu")) {
    ++v.checked;
    std::set<CosValue> listed, realized;
    for (const auto& d : pair["menu"]) listed.insert(parse_angle(d.get<std::string>()));
    for (const auto& r : rows) realized.insert(r.distance);
    if (listed != realized) {
      std::string got;
      for (const auto& c : realized) got += " " + render_angle(c);
      v.fail("distance menu differs; realized:" + got);
    }
  }
  if (pair.contains("restricted_menu")) {
    // distances strictly between two bounds, over rows whose sigma avoids some types
    ++v.checked;
    const Json& m = pair["restricted_menu"];
    TypeSet avoid;
    for (int l : m.value("avoid", std::vector<int>{})) avoid.insert(l);
    const CosValue lo = parse_angle(m.at("between")[0].get<std::string>());
    const CosValue hi = parse_angle(m.at("between")[1].get<std::string>());
    std::set<CosValue> listed, realized;
    for (const auto& d : m.at("distances")) listed.insert(parse_angle(d.get<std::string>()));
    for (const auto& r : rows)
      if (r.distance < lo && r.distance > hi && (r.sigma & avoid).empty()) realized.insert(r.distance);
    if (listed != realized) {
      std::string got;
      for (const auto& c : realized) got += " " + render_angle(c);
      v.fail("restricted distance menu differs; realized:" + got);
    }
  }
  for (const auto& s : pair.at("rows")) {
    ++v.checked;
    const CosValue d = parse_angle(s.at("distance").get<std::string>());
    TypeSet avoid;
    for (int l : s.value("avoid", std::vector<int>{})) avoid.insert(l);
    const bool singular = s.at("singular").get<bool>();
    const std::string type = s.value("type", "");
    std::vector<int> hulls = s.value("hull_dim", std::vector<int>{});
    std::set<int> hulls_seen;
    bool found = false;
    for (const auto& r : rows) {
      if (r.distance != d || r.segment.empty() || !(r.sigma & avoid).empty()) continue;
      if (r.singular != singular || (!type.empty() && r.segment != type)) continue;
      hulls_seen.insert(r.hull_dim);
      found = found || hulls.empty() || std::count(hulls.begin(), hulls.end(), r.hull_dim);
    }
    const std::string what = render_angle(d) + (type.empty() ? std::string(singular ? " singular" : " non-singular")
                                                             : " type " + type);
    if (!found) v.fail("no segment at " + what);
    // every listed hull dimension must occur
    for (int h : hulls)
      if (!hulls_seen.count(h)) v.fail("no " + std::to_string(h) + "-dimensional hull at " + what);
  }
  return v;
}

inline std::vector<GoldenVerdict> verify_segment_file(const Json& j, OrbitCache& cache) {
  std::vector<GoldenVerdict> out;
  for (const auto& c : j.at("complexes")) {
    const Realization R = realization_for(c.at("family").get<std::string>());
    for (const auto& p : c.at("pairs")) out.push_back(verify_segment_block(R, p, cache));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named polyhedra: cells met by a segment

inline GoldenVerdict verify_polyhedron_file(const Json& j) {
  GoldenVerdict v;
  v.name = j.at("name").get<std::string>();
  const Realization R = realization_for(j.at("family").get<std::string>());
  std::map<std::string, RationalVector> pts;
  for (int k = 0; k < R.rank; ++k) pts["v" + std::to_string(R.labels[k])] = R.vertices[k];
  for (const auto& [name, vec] : j.at("points").items()) pts[name] = vector_from_json(vec);
  auto at = [&](const std::string& n) -> const RationalVector& {
    auto it = pts.find(n);
    if (it == pts.end()) throw std::invalid_argument("coxeter: unknown point " + n);
    return it->second;
  };
  for (const auto& m : j.value("midpoints", Json::array())) {
    ++v.checked;
    auto mid = midpoint(at(m.at("of")[0].get<std::string>()), at(m.at("of")[1].get<std::string>()));
    if (!mid || *mid != at(m.at("point").get<std::string>()))
      v.fail(m.at("point").get<std::string>() + " is not the midpoint of " + m.at("of").dump());
  }
  const auto& seg = j.at("segment");
  CellsMet met = cells_met(R, at(seg[0].get<std::string>()), at(seg[1].get<std::string>()));
  if (j.contains("hull_dim")) {
    ++v.checked;
    if (met.hull_dim != j["hull_dim"].get<int>()) v.fail("hull dimension " + std::to_string(met.hull_dim));
  }
  for (const auto& n : j.at("contains")) {
    ++v.checked;
    if (!std::binary_search(met.vertices.begin(), met.vertices.end(), at(n.get<std::string>())))
      v.fail(n.get<std::string>() + " is not a vertex of a cell met");
  }
  return v;
}

// ---------------------------------------------------------------------------

/// Every golden file in `dir` for the given complex name (all when empty).
inline std::vector<GoldenVerdict> verify_golden_dir(const std::filesystem::path& dir, const std::string& family,
                                                    OrbitCache& cache) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<GoldenVerdict> out;
  for (const auto& f : files) {
    Json j = read_json(f);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "segments") {
      Json keep = j;
      keep["complexes"] = Json::array();
      for (const auto& c : j.at("complexes"))
        if (family.empty() || c.at("family").get<std::string>() == family) keep["complexes"].push_back(c);
      for (auto& v : verify_segment_file(keep, cache)) out.push_back(std::move(v));
      continue;
    }
    if (!family.empty() && j.at("family").get<std::string>() != family) continue;
    if (kind == "bigon") out.push_back(verify_bigon_file(j, cache));
    else if (kind == "orbits") out.push_back(verify_orbit_file(j));
    else if (kind == "polyhedron") out.push_back(verify_polyhedron_file(j));
    else throw std::invalid_argument("coxeter: unknown golden kind '" + kind + "' in " + f.string());
  }
  return out;
}

}  // namespace coxeter
