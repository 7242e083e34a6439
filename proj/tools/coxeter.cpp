#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxeter/cache.hpp"
#include "coxeter/golden.hpp"
#include "coxeter/lab.hpp"

using namespace coxeter;

namespace {

constexpr int exit_ok = 0, exit_mismatch = 1, exit_usage = 2;

/// Bad user input that parsed syntactically (unknown family, type, vector).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Realization complex_named(const std::string& name) {
  try {
    return realization_for(name);
  } catch (const std::exception& e) {
    throw UsageError("unknown complex '" + name + "' (expected E6, E7, E8 or D<n>)");
  }
}

int checked_type(const Realization& R, int type) {
  if (!R.has_type(type)) throw UsageError("type " + std::to_string(type) + " is not a type of " + R.name());
  return type;
}

/// "v2" names a chamber vertex; anything else is an integer vector.
RationalVector vertex_arg(const Realization& R, const std::string& s) {
  RationalVector p;
  try {
    if (s.size() > 1 && s[0] == 'v') p = R.vertex(checked_type(R, std::stoi(s.substr(1))));
    else p = parse_vector(s);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("cannot read vertex '" + s + "'");
  }
  if (p.size() != static_cast<std::size_t>(R.ambient_dim))
    throw UsageError("vertex '" + s + "' has the wrong dimension for " + R.name());
  if (!point_type(R, p).is_vertex()) throw UsageError("'" + s + "' is not a vertex of " + R.name());
  return p;
}

std::vector<std::size_t> root_counts_arg(const std::string& s) {
  std::vector<std::size_t> out;
  try {
    auto dash = s.find('-');
    if (dash == std::string::npos) {
      out.push_back(std::stoul(s));
    } else {
      std::size_t lo = std::stoul(s.substr(0, dash)), hi = std::stoul(s.substr(dash + 1));
      if (lo > hi) throw std::invalid_argument("range");
      for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
    }
  } catch (const std::exception&) {
    throw UsageError("--roots expects N or LO-HI, got '" + s + "'");
  }
  return out;
}

void print_verdict_lines(const std::vector<GoldenVerdict>& vs) {
  for (const auto& v : vs) {
    std::cout << (v.ok ? "ok       " : "MISMATCH ") << v.name << " (" << v.checked << " checked)\n";
    for (const auto& p : v.problems) std::cout << "         " << p << "\n";
  }
}

Json witness_json(const ConfigurationWitness& w) {
  Json j;
  j["pass"] = w.ok();
  Json pts = Json::object();
  for (const auto& [name, p] : w.points) pts[name] = to_json(p);
  j["points"] = pts;
  Json claims = Json::array();
  for (const auto& c : w.claims) claims.push_back({{"claim", c.what}, {"holds", c.holds}});
  j["claims"] = claims;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometry of the spherical Coxeter complexes of types D_n, E6, E7, E8"};
  app.require_subcommand(1);

  std::string family, format = "tsv", cache_dir, golden_dir = COXETER_GOLDEN_DIR;
  bool no_cache = false;
  auto add_cache_flags = [&](CLI::App* c) {
    c->add_option("--cache-dir", cache_dir, std::string("Orbit cache directory (default: $") + cache_dir_env + ")");
    c->add_flag("--no-cache", no_cache, "Do not read or write the orbit cache");
  };

  auto* realize = app.add_subcommand("realize", "Print roots, chamber vertices and the Coxeter diagram as JSON");
  realize->add_option("--family", family, "E6, E7, E8 or D<n>")->required();

  int type = 0;
  auto* orbit_cmd = app.add_subcommand("orbit", "Vertex orbit of one type, sorted");
  orbit_cmd->add_option("--family", family)->required();
  orbit_cmd->add_option("--type", type, "Vertex type")->required();
  orbit_cmd->add_option("--format", format, "tsv, json or count")->check(CLI::IsMember({"tsv", "json", "count"}));
  add_cache_flags(orbit_cmd);

  std::string from, to;
  auto* segment = app.add_subcommand("segment", "Type of the geodesic segment between two vertices");
  segment->add_option("--family", family)->required();
  segment->add_option("--from", from, "vN or an integer vector such as \"(1,-1,0,...)\"")->required();
  segment->add_option("--to", to)->required();

  int base = 0, target = 0;
  std::string exclude, min_angle;
  bool inclusive = false, exclude_ends = false;
  auto* bigon = app.add_subcommand("bigon", "Stab(v_base)-orbits of target vertices in a bigon");
  bigon->add_option("--family", family)->required();
  bigon->add_option("--base", base)->required();
  bigon->add_option("--target", target)->required();
  bigon->add_option("--exclude", exclude, "Comma-separated types forced onto their walls, e.g. 2,8");
  bigon->add_option("--min-angle", min_angle, "Keep rows beyond this distance, e.g. 90deg or pi/2");
  bigon->add_flag("--inclusive", inclusive, "Also keep rows at exactly --min-angle");
  bigon->add_flag("--exclude-ends", exclude_ends, "Drop v_base and its antipode");
  bigon->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  add_cache_flags(bigon);

  auto* verify = app.add_subcommand("verify-tables", "Regenerate every golden table and compare");
  verify->add_option("--family", family, "Restrict to one complex");
  verify->add_option("--golden-dir", golden_dir, "Golden file directory");
  add_cache_flags(verify);

  auto* lab = app.add_subcommand("lab", "Experiments on thin complexes");
  lab->require_subcommand(1);
  std::string roots = "1-6";
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  int depth = 2;
  auto* gap = lab->add_subcommand("gap", "Random root intersections: sphere or radius <= pi/2");
  gap->add_option("--family", family, "D<n> or A<n>")->required();
  gap->add_option("--roots", roots, "Roots per sample: N or LO-HI (cycled)");
  gap->add_option("--samples", samples);
  gap->add_option("--seed", seed);
  gap->add_option("--depth", depth, "Barycentric subdivision depth of the radius estimate");
  std::string emit = "json";
  auto* star = lab->add_subcommand("config-star", "Find and verify configurations * and ** in E8");
  star->add_option("--family", family)->required();
  star->add_option("--emit", emit, "json or text")->check(CLI::IsMember({"json", "text"}));

  if (argc <= 1) {
    std::cerr << app.help();
    return exit_usage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return exit_usage;
  }

  auto cache = [&] {
    return OrbitCache::from_environment(cache_dir.empty() ? std::nullopt : std::optional<std::string>(cache_dir),
                                        no_cache);
  };

  try {
    if (*realize) {
      std::cout << to_json(complex_named(family)).dump() << "\n";
      return exit_ok;
    }
    if (*orbit_cmd) {
      const Realization R = complex_named(family);
      OrbitCache c = cache();
      const auto o = c.orbit(R, checked_type(R, type));
      if (format == "count") {
        std::cout << o.size() << "\n";
      } else if (format == "json") {
        Json j = {{"family", R.name()}, {"type", type}, {"count", o.size()}, {"vertices", Json::array()}};
        for (const auto& v : o) j["vertices"].push_back(to_json(v));
        std::cout << j.dump() << "\n";
      } else {
        std::cout << orbit_tsv(o);
      }
      return exit_ok;
    }
    if (*segment) {
      const Realization R = complex_named(family);
      const RationalVector x = vertex_arg(R, from), y = vertex_arg(R, to);
      if (x == y || x == -y) throw UsageError("endpoints coincide or are antipodal");
      std::cout << segment_json(R, x, y).dump() << "\n";
      return exit_ok;
    }
    if (*bigon) {
      const Realization R = complex_named(family);
      BigonTable t;
      t.family = R.name();
      t.spec.base = checked_type(R, base);
      t.spec.target = checked_type(R, target);
      try {
        std::istringstream list(exclude);
        for (std::string item; std::getline(list, item, ',');) t.spec.excluded.insert(std::stoi(item));
        if (!min_angle.empty()) t.spec.filter = DistanceFilter{parse_angle(min_angle), inclusive};
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      t.spec.exclude_ends = exclude_ends;
      try {
        validate(R, t.spec);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      OrbitCache c = cache();
      t.rows = enumerate_bigon(R, t.spec, c.orbit(R, t.spec.target));
      if (format == "json") std::cout << table_json(t).dump() << "\n";
      else std::cout << table_tsv(t);
      return exit_ok;
    }
    if (*verify) {
      if (!family.empty()) complex_named(family);
      OrbitCache c = cache();
      const auto vs = verify_golden_dir(golden_dir, family, c);
      print_verdict_lines(vs);
      std::size_t bad = 0, checked = 0;
      for (const auto& v : vs) {
        bad += !v.ok;
        checked += v.checked;
      }
      std::cout << vs.size() << " tables, " << checked << " items checked, " << bad << " mismatched\n";
      if (vs.empty()) {
        std::cerr << "no golden tables found for '" << family << "' in " << golden_dir << "\n";
        return exit_mismatch;
      }
      return bad ? exit_mismatch : exit_ok;
    }
    if (*gap) {
      Family f;
      int rank = 0;
      try {
        std::tie(f, rank) = parse_family(family);
      } catch (const std::exception&) {
        throw UsageError("unknown complex '" + family + "'");
      }
      if (f != Family::A && f != Family::D) throw UsageError("lab gap supports A<n> and D<n>");
      if (depth < 0) throw UsageError("--depth must be >= 0");
      const auto counts = root_counts_arg(roots);
      const CellComplex cc = enumerate_cells(lab_complex(f, rank));
      const GapReport rep = gap_experiment(cc, counts, samples, seed, depth);
      Json j;
      j["family"] = family;
      j["seed"] = seed;
      j["samples"] = samples;
      j["depth"] = depth;
      j["bound"] = "pi/2 + 1e-6";
      j["pass"] = rep.ok();
      j["spheres"] = rep.spheres;
      j["empty"] = rep.empties;
      j["failures"] = rep.failures;
      j["worst_radius"] = rep.worst_radius;
      Json witnesses = Json::array();
      for (const auto& s : rep.samples) {
        if (s.passes) continue;
        witnesses.push_back({{"seed", s.seed},
                             {"roots", s.root_count},
                             {"vertices", s.vertices},
                             {"upper", s.estimate.upper},
                             {"lower", s.estimate.lower}});
      }
      j["counterexamples"] = witnesses;
      std::cout << j.dump() << "\n";
      return rep.ok() ? exit_ok : exit_mismatch;
    }
    if (*star) {
      const Realization R = complex_named(family);
      if (R.name() != "E8") throw UsageError("configurations * and ** live in E8");
      const ConfigurationWitness s = find_configuration_star(R);
      const ConfigurationWitness ss = find_configuration_star_star(R);
      const bool ok = s.ok() && ss.ok();
      if (emit == "json") {
        Json j = {{"pass", ok}, {"star", witness_json(s)}, {"star_star", witness_json(ss)}};
        std::cout << j.dump() << "\n";
      } else {
        for (const auto* w : {&s, &ss}) {
          std::cout << (w == &s ? "configuration *" : "configuration **") << "\n";
          for (const auto& [name, p] : w->points) std::cout << "  " << name << " = " << p.str() << "\n";
          for (const auto& c : w->claims) std::cout << "  " << (c.holds ? "holds  " : "FAILS  ") << c.what << "\n";
        }
      }
      return ok ? exit_ok : exit_mismatch;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_mismatch;
  }
  return exit_usage;
}
