#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <boost/crc.hpp>

#include "coxeter/io.hpp"

namespace coxeter {

/// Bumped whenever orbit contents or file layout change.
inline constexpr int orbit_cache_version = 1;
inline constexpr const char* cache_dir_env = "COXETER_CACHE_DIR";

/// On-disk vertex orbits. File: one header line
/// "coxeter-orbit <version> <complex> <type> <count> <crc32>" then the orbit TSV.
class OrbitCache {
 public:
  /// An empty directory disables the cache.
  explicit OrbitCache(std::filesystem::path dir, std::ostream* warn = &std::cerr) : dir_(std::move(dir)), warn_(warn) {}

  /// Directory from the flag if given, else from the environment.
  static OrbitCache from_environment(const std::optional<std::string>& flag, bool disabled) {
    if (disabled) return OrbitCache({});
    if (flag) return OrbitCache(*flag);
    if (const char* env = std::getenv(cache_dir_env)) return OrbitCache(env);
    return OrbitCache({});
  }

  bool enabled() const { return !dir_.empty(); }

  std::filesystem::path path(const Realization& R, int type) const {
    return dir_ / (R.name() + "-type" + std::to_string(type) + "-v" + std::to_string(orbit_cache_version) + ".orbit");
  }

  /// Cached orbit if present and intact; recomputed and rewritten otherwise.
  std::vector<RationalVector> orbit(const Realization& R, int type) {
    last_hit_ = false;
    if (!enabled()) return vertex_orbit(R, type);
    const auto p = path(R, type);
    if (std::filesystem::exists(p)) {
      if (auto loaded = load(p, R, type)) {
        last_hit_ = true;
        return *loaded;
      }
      if (warn_) *warn_ << "warning: orbit cache file " << p.string() << " is corrupt; recomputing\n";
    }
    auto orbit = vertex_orbit(R, type);
    store(p, R, type, orbit);
    return orbit;
  }

  bool last_was_hit() const { return last_hit_; }

  static std::string header(const Realization& R, int type, std::size_t count, const std::string& body) {
    std::ostringstream h;
    h << "coxeter-orbit " << orbit_cache_version << ' ' << R.name() << ' ' << type << ' ' << count << ' ' << std::hex
      << checksum(body);
    return h.str();
  }

  static std::uint32_t checksum(const std::string& body) {
    boost::crc_32_type crc;
    crc.process_bytes(body.data(), body.size());
    return crc.checksum();
  }

 private:
  std::optional<std::vector<RationalVector>> load(const std::filesystem::path& p, const Realization& R, int type) const {
    std::ifstream in(p, std::ios::binary);
    std::string head;
    if (!std::getline(in, head)) return std::nullopt;
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
      std::istringstream bs(body);
      auto orbit = parse_orbit_tsv(bs);
      if (head != header(R, type, orbit.size(), body)) return std::nullopt;
      return orbit;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void store(const std::filesystem::path& p, const Realization& R, int type,
             const std::vector<RationalVector>& orbit) const {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    const std::string body = orbit_tsv(orbit);
    // write then rename so concurrent readers never see a partial file
    auto tmp = p;
    tmp += ".tmp" + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << header(R, type, orbit.size(), body) << '\n' << body;
      if (!out) {
        if (warn_) *warn_ << "warning: cannot write orbit cache " << p.string() << "\n";
        return;
      }
    }
    std::filesystem::rename(tmp, p, ec);
    if (ec && warn_) *warn_ << "warning: cannot write orbit cache " << p.string() << "\n";
  }

  std::filesystem::path dir_;
  std::ostream* warn_;
  bool last_hit_ = false;
};

}  // namespace coxeter
