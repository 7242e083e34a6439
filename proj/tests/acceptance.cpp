// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "coxeter/golden.hpp"
#include "coxeter/lab.hpp"

using namespace coxeter;
namespace fs = std::filesystem;

namespace {

const fs::path golden = COXETER_GOLDEN_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& why) {
    if (!cond) {
      if (ok) detail = why;
      ok = false;
    }
  }
};

Realization make(const std::string& name) {
  auto [family, rank] = parse_family(name);
  return build_realization(family, rank);
}

void absorb(Outcome& o, const GoldenVerdict& v) {
  o.require(v.ok, v.name + ": " + (v.problems.empty() ? std::string("failed") : v.problems.front()));
}

/// Half table over `target`-vertices of beta_base at distance >= pi/2; the
/// listed orbit sizes must match as a multiset and the identity must hold.
void half_table(Outcome& o, int base, std::vector<long> sizes, std::vector<long> equator, long total) {
  const Realization R = make("E8");
  BigonSpec s;
  s.base = base;
  s.target = base;
  s.filter = DistanceFilter{CosValue::zero(), true};
  const auto rows = enumerate_bigon(R, s);
  std::vector<WeylOrder> got, want, eq_got, eq_want;
  WeylOrder sum = 0;
  for (const auto& r : rows) {
    got.push_back(r.orbit_size);
    sum += r.orbit_size;
    if (r.distance.sign() == 0) eq_got.push_back(r.orbit_size);
  }
  for (long x : sizes) want.push_back(x);
  for (long x : equator) eq_want.push_back(x);
  for (auto* v : {&got, &want, &eq_got, &eq_want}) std::sort(v->begin(), v->end());
  o.require(got == want, std::to_string(rows.size()) + " rows; orbit sizes differ from the listed ones");
  o.require(eq_got == eq_want, "equator rows differ");
  WeylOrder lhs = 2 * sum;
  for (long x : equator) lhs -= x;
  o.require(lhs == total, "2 sum - equator = " + lhs.str());
  o.require(verify_half_table(R, s, rows).ok, "half-table identity");
}

using Criterion = std::function<void(Outcome&)>;

struct Entry {
  int number;
  std::string title;
  double limit_seconds;
  Criterion run;
};

}  // namespace

int main() {
  std::vector<Entry> entries;

  entries.push_back({1, "vertex orbit counts E8 type 7 = 6720, type 1 = 17280, E6 type 2 = 27", 30, [](Outcome& o) {
                       const Realization e8 = make("E8"), e6 = make("E6");
                       o.require(vertex_orbit(e8, 7).size() == 6720, "E8 type 7");
                       o.require(vertex_orbit(e8, 1).size() == 17280, "E8 type 1");
                       o.require(vertex_orbit(e6, 2).size() == 27, "E6 type 2");
                     }});

  entries.push_back({2, "7-vertex half table: 14 orbit sizes, 2 sum - 720 - 540 = 6720", 60, [](Outcome& o) {
                       half_table(o, 7, {1, 216, 720, 27, 2, 432, 54, 54, 432, 54, 54, 864, 540, 540}, {720, 540},
                                  6720);
                     }});

  entries.push_back({3, "1-vertex half table: 19 orbit sizes, 2 sum - 70 - 1120 - 1120 = 17280", 60, [](Outcome& o) {
                       half_table(o, 1,
                                  {1, 8, 28, 70, 56, 280, 56, 560, 168, 280, 280, 280, 168, 1120, 840, 1680, 1120, 1680,
                                   1120},
                                  {70, 1120, 1120}, 17280);
                     }});

  entries.push_back({4, "bigon tables for E6, E7, E8 match by orbit, distance and sigma; beta_6(1,2,7,8) interior empty",
                     120, [](Outcome& o) {
                       OrbitCache cache({});
                       std::size_t files = 0;
                       bool interior_checked = false;
                       for (const auto& e : fs::directory_iterator(golden / "bigon")) {
                         if (e.path().extension() != ".json") continue;
                         Json j = read_json(e.path());
                         if (j.at("spec").value("min_angle", Json()).is_object() &&
                             j["spec"]["min_angle"].value("inclusive", false))
                           continue;  // half tables belong to criteria 2 and 3
                         ++files;
                         interior_checked = interior_checked || j.value("interior_empty", false);
                         absorb(o, verify_bigon_file(j, cache));
                       }
                       o.require(files == 13, std::to_string(files) + " bigon tables found, expected 13");
                       o.require(interior_checked, "interior scan not run");
                     }});

  entries.push_back({5, "segment types, distances, singularity and hull dimensions for D4..D8, E6, E7, E8", 120,
                     [](Outcome& o) {
                       OrbitCache cache({});
                       std::size_t blocks = 0;
                       for (const auto& e : fs::directory_iterator(golden / "segments")) {
                         for (const auto& v : verify_segment_file(read_json(e.path()), cache)) {
                           ++blocks;
                           absorb(o, v);
                         }
                       }
                       o.require(blocks == 43, std::to_string(blocks) + " segment blocks, expected 43");
                     }});

  entries.push_back({6, "cells met by v7 -> (0,0,0,0,0,1,-2,-1) contain v8, m, u8 and v7 = m(v8, y)", 30,
                     [](Outcome& o) {
                       absorb(o, verify_polyhedron_file(read_json(golden / "polyhedra" / "e8-cells-met-v7-x.json")));
                       const Realization R = make("E8");
                       const RationalVector y{-1, -1, -1, -1, -1, -1, 1, -1};
                       o.require(midpoint(R.vertex(8), y) == R.vertex(7), "v7 = m(v8, y)");
                     }});

  entries.push_back({7, "configurations * and ** realized in E8 with all quoted distances and link angles", 60,
                     [](Outcome& o) {
                       const Realization R = make("E8");
                       auto s = find_configuration_star(R);
                       auto ss = find_configuration_star_star(R);
                       for (const auto* w : {&s, &ss})
                         for (const auto& c : w->claims) o.require(c.holds, c.what);
                       o.require(s.ok() && ss.ok(), "no witness");
                     }});

  entries.push_back({8, "descent, reflections, orbit closure, opposition, root types, D_n wall spheres", 120,
                     [](Outcome& o) {
                       std::mt19937_64 gen(8);
                       for (const auto& name : {"D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"}) {
                         const Realization R = make(name);
                         for (int t = 0; t < 30; ++t) {
                           std::vector<Int> c(R.ambient_dim);
                           for (auto& x : c) x = static_cast<Int>(gen() % 19) - 9;
                           RationalVector p(c);
                           if (norm2(p) == 0) continue;
                           o.require(descend(R, p, DescentStrategy::first_violated).point ==
                                         descend(R, p, DescentStrategy::last_violated).point,
                                     std::string(name) + " descent");
                           const auto& r = R.positive_roots[gen() % R.positive_roots.size()];
                           o.require(reflect(reflect(p, r), r) == p, std::string(name) + " reflection");
                         }
                         o.require(check_root_type_vertices(R).ok, std::string(name) + " root type");
                         for (auto [a, b] : opposition_involution(R)) {
                           int want = a;
                           if (R.family == Family::D && R.rank % 2 && a <= 2) want = 3 - a;
                           if (R.family == Family::E6 && a != 1 && a != 4) want = 8 - a;
                           o.require(b == want, std::string(name) + " opposition of " + std::to_string(a));
                         }
                       }
                       for (const auto& name : {"D5", "E6", "E7"}) {
                         const Realization R = make(name);
                         for (int t : R.labels) {
                           const auto orb = vertex_orbit(R, t);
                           std::set<RationalVector> s(orb.begin(), orb.end());
                           for (const auto& v : orb)
                             for (const auto& r : R.roots)
                               o.require(s.count(reflect(v, r)) == 1, std::string(name) + " orbit closure");
                         }
                       }
                       for (int n = 4; n <= 7; ++n) {
                         auto w = check_wall_orthogonal_vertices(make("D" + std::to_string(n)));
                         o.require(w.ok, "D" + std::to_string(n) + " walls: " +
                                             (w.failures.empty() ? std::string() : w.failures.front()));
                       }
                     }});

  entries.push_back({9, "thin gap experiment: 200 samples each in D4 and A4, sphere or radius <= pi/2 + 1e-6", 300,
                     [](Outcome& o) {
                       const std::vector<std::size_t> counts{1, 2, 3, 4, 5, 6};
                       for (auto [family, label] : {std::pair{Family::D, "D4"}, std::pair{Family::A, "A4"}}) {
                         const CellComplex cc = enumerate_cells(lab_complex(family, 4));
                         const GapReport rep = gap_experiment(cc, counts, 200, 1, 2);
                         o.require(rep.samples.size() == 200, label);
                         o.require(rep.ok(), std::string(label) + ": " + std::to_string(rep.failures) +
                                                 " samples exceed the bound");
                       }
                     }});

  int failed = 0;
  for (const auto& e : entries) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(o);
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < e.limit_seconds, "over the time limit");
    std::printf("%s criterion %d (%.1fs, limit %.0fs): %s%s%s\n", o.ok ? "PASS" : "FAIL", e.number, secs,
                e.limit_seconds, e.title.c_str(), o.ok ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
