#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "coxeter/golden.hpp"

using namespace coxeter;
namespace fs = std::filesystem;

namespace {

Realization make(const std::string& name) {
  auto [family, rank] = parse_family(name);
  return build_realization(family, rank);
}

/// Every cosine realized between a type-i chamber vertex and the type-j orbit.
std::set<CosValue> cosine_menu(const Realization& R) {
  std::set<CosValue> out;
  for (int j : R.labels) {
    const auto o = vertex_orbit(R, j);
    for (int i : R.labels)
      for (const auto& x : o) out.insert(cosine(R.vertex(i), x));
  }
  return out;
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("coxeter-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Angle, NamedValues) {
  EXPECT_EQ(render_angle(CosValue::zero()), "pi/2");
  EXPECT_EQ(render_angle(CosValue::rational(-1, 2)), "2pi/3");
  EXPECT_EQ(render_angle(CosValue(-1, 3, 4)), "5pi/6");
  EXPECT_EQ(render_angle(CosValue(1, 1, 2)), "pi/4");
  EXPECT_EQ(render_angle(CosValue::rational(-1, 1)), "pi");
  EXPECT_EQ(parse_angle("90deg"), CosValue::zero());
  EXPECT_EQ(parse_angle("135deg"), parse_angle("3pi/4"));
}

TEST(Angle, ArccosForms) {
  EXPECT_EQ(render_angle(CosValue::rational(-1, 3)), "arccos(-1/3)");
  EXPECT_EQ(render_angle(CosValue(1, 1, 3)), "arccos(1/sqrt(3))");
  EXPECT_EQ(render_angle(CosValue(-1, 1, 12)), "arccos(-1/(2*sqrt(3)))");
  EXPECT_EQ(render_angle(CosValue(1, 1, 8)), "arccos(1/(2*sqrt(2)))");
  EXPECT_EQ(render_angle(CosValue(1, 2, 3)), "arccos(2/sqrt(6))");
}

TEST(Angle, MalformedInputIsRejected) {
  for (const char* bad : {"", "pi/5", "arccos(2)", "arccos(3/2)", "arccos(1/x)", "91deg", "deg", "arccos(-1/0)"})
    EXPECT_THROW(parse_angle(bad), std::invalid_argument) << bad;
}

TEST(Angle, RenderingIsInjectiveOverRealizedMenus) {
  for (const auto& name : {"D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"}) {
    const auto menu = cosine_menu(make(name));
    std::map<std::string, CosValue> seen;
    for (const auto& c : menu) {
      const std::string s = render_angle(c);
      auto [it, fresh] = seen.emplace(s, c);
      EXPECT_TRUE(fresh) << name << ": " << s << " renders two cosines";
      EXPECT_EQ(parse_angle(s), c) << name << ": " << s;
    }
    EXPECT_GT(menu.size(), 3u);
  }
}

TEST(Vector, ParseAcceptsCommonSpellings) {
  RationalVector v{1, -1, 0, 2};
  EXPECT_EQ(parse_vector("(1,-1,0,2)"), v);
  EXPECT_EQ(parse_vector("1 -1 0 2"), v);
  EXPECT_EQ(parse_vector("1\t-1\t0\t2"), v);
  EXPECT_THROW(parse_vector("(1,a)"), std::invalid_argument);
  EXPECT_THROW(parse_vector("()"), std::invalid_argument);
}

TEST(Orbit, TsvRoundTrip) {
  auto o = vertex_orbit(make("E7"), 7);
  std::istringstream in(orbit_tsv(o));
  EXPECT_EQ(parse_orbit_tsv(in), o);
}

TEST(Table, JsonAndTsvRoundTrip) {
  Realization R = make("E8");
  BigonTable t;
  t.family = "E8";
  t.spec.base = 7;
  t.spec.target = 7;
  t.spec.excluded = TypeSet{2, 8};
  t.spec.filter = DistanceFilter{CosValue::zero(), false};
  t.spec.exclude_ends = true;
  t.rows = enumerate_bigon(R, t.spec);
  ASSERT_FALSE(t.rows.empty());

  BigonTable back = table_from_json(Json::parse(table_json(t).dump()));
  EXPECT_EQ(back.family, t.family);
  EXPECT_EQ(back.spec.base, t.spec.base);
  EXPECT_EQ(back.spec.target, t.spec.target);
  EXPECT_EQ(back.spec.excluded, t.spec.excluded);
  ASSERT_TRUE(back.spec.filter);
  EXPECT_EQ(back.spec.filter->bound, t.spec.filter->bound);
  EXPECT_EQ(back.spec.filter->inclusive, false);
  EXPECT_TRUE(back.spec.exclude_ends);
  ASSERT_EQ(back.rows.size(), t.rows.size());
  for (std::size_t k = 0; k < t.rows.size(); ++k) EXPECT_TRUE(same_row(back.rows[k], t.rows[k]));

  std::istringstream in(table_tsv(t));
  auto rows = parse_table_tsv(in);
  ASSERT_EQ(rows.size(), t.rows.size());
  for (std::size_t k = 0; k < t.rows.size(); ++k) EXPECT_TRUE(same_row(rows[k], t.rows[k]));
}

TEST(Table, TsvRejectsWrongHeader) {
  std::istringstream in("distance\tsigma\n");
  EXPECT_THROW(parse_table_tsv(in), std::invalid_argument);
}

TEST(Cache, HitReturnsIdenticalOrbit) {
  const auto dir = scratch_dir("hit");
  Realization R = make("E8");
  std::ostringstream warn;
  OrbitCache cache(dir, &warn);
  auto first = cache.orbit(R, 1);
  EXPECT_FALSE(cache.last_was_hit());
  EXPECT_EQ(first.size(), 17280u);
  auto second = cache.orbit(R, 1);
  EXPECT_TRUE(cache.last_was_hit());
  EXPECT_EQ(first, second);
  EXPECT_EQ(first, vertex_orbit(R, 1));
  EXPECT_TRUE(warn.str().empty());
  fs::remove_all(dir);
}

TEST(Cache, TamperedFileIsRecomputedToIdenticalBytes) {
  const auto dir = scratch_dir("tamper");
  Realization R = make("E7");
  std::ostringstream warn;
  OrbitCache cache(dir, &warn);
  cache.orbit(R, 2);
  const auto path = cache.path(R, 2);
  const std::string pristine = slurp(path);

  std::string bad = pristine;
  bad[bad.size() / 2] = bad[bad.size() / 2] == '1' ? '3' : '1';
  std::ofstream(path, std::ios::binary | std::ios::trunc) << bad;

  auto o = cache.orbit(R, 2);
  EXPECT_FALSE(cache.last_was_hit());
  EXPECT_EQ(o, vertex_orbit(R, 2));
  EXPECT_NE(warn.str().find("corrupt"), std::string::npos);
  EXPECT_EQ(slurp(path), pristine);

  std::ofstream(path, std::ios::binary | std::ios::trunc) << "garbage";
  EXPECT_EQ(cache.orbit(R, 2), o);
  EXPECT_EQ(slurp(path), pristine);
  fs::remove_all(dir);
}

TEST(Cache, DisabledGivesIdenticalResults) {
  Realization R = make("E6");
  OrbitCache off = OrbitCache::from_environment(std::string("/nonexistent"), true);
  EXPECT_FALSE(off.enabled());
  EXPECT_EQ(off.orbit(R, 2), vertex_orbit(R, 2));
  EXPECT_FALSE(off.last_was_hit());
}

TEST(Cache, FileNameCarriesComplexTypeAndVersion) {
  OrbitCache c("/x");
  EXPECT_EQ(c.path(make("E8"), 7).filename().string(), "E8-type7-v1.orbit");
}

TEST(Golden, ShippedTablesVerify) {
  OrbitCache cache({});
  auto vs = verify_golden_dir(COXETER_GOLDEN_DIR, "E7", cache);
  ASSERT_FALSE(vs.empty());
  for (const auto& v : vs) EXPECT_TRUE(v.ok) << v.name << ": " << (v.problems.empty() ? "" : v.problems.front());
}

TEST(Golden, AlteredRowsAreReported) {
  OrbitCache cache({});
  Json j = read_json(fs::path(COXETER_GOLDEN_DIR) / "bigon" / "e7-base7-target7.json");
  ASSERT_TRUE(verify_bigon_file(j, cache).ok);

  Json wrong_sigma = j;
  wrong_sigma["rows"][0]["sigma"] = "3";
  EXPECT_FALSE(verify_bigon_file(wrong_sigma, cache).ok);

  Json wrong_distance = j;
  wrong_distance["rows"][0]["distance"] = "pi/3";
  EXPECT_FALSE(verify_bigon_file(wrong_distance, cache).ok);

  Json missing = j;
  missing["rows"].erase(1);
  EXPECT_FALSE(verify_bigon_file(missing, cache).ok);

  Json doubled = j;
  doubled["rows"].push_back(j["rows"][0]);
  EXPECT_FALSE(verify_bigon_file(doubled, cache).ok);

  Json wrong_identity = j;
  wrong_identity["identity"]["expected"] = "57";
  EXPECT_FALSE(verify_bigon_file(wrong_identity, cache).ok);
}

TEST(Golden, AlteredSegmentRowsAreReported) {
  OrbitCache cache({});
  Realization R = make("E7");
  Json block = {{"from", 2},
                {"to", 2},
                {"menu", {"0", "pi/3", "pi/2", "2pi/3", "pi"}},
                {"rows", {{{"distance", "pi/3"}, {"type", "232"}, {"singular", true}}}}};
  EXPECT_TRUE(verify_segment_block(R, block, cache).ok);
  Json bad_type = block;
  bad_type["rows"][0]["type"] = "262";
  EXPECT_FALSE(verify_segment_block(R, bad_type, cache).ok);
  Json bad_menu = block;
  bad_menu["menu"].erase(1);
  EXPECT_FALSE(verify_segment_block(R, bad_menu, cache).ok);
}

TEST(Golden, DisplayGroupOrbitsMustPartition) {
  Json j = read_json(fs::path(COXETER_GOLDEN_DIR) / "orbits" / "e7-orbit-representatives.json");
  ASSERT_TRUE(verify_orbit_file(j).ok);
  Json dup = j;
  dup["orbits"][0]["representatives"].push_back(j["orbits"][0]["representatives"][0]);
  EXPECT_FALSE(verify_orbit_file(dup).ok);
  Json short_list = j;
  short_list["orbits"][0]["representatives"].erase(2);
  EXPECT_FALSE(verify_orbit_file(short_list).ok);
}
