#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxeter/angle.hpp"
#include "coxeter/bigon.hpp"

namespace coxeter {

using Json = nlohmann::ordered_json;

/// "(1,-1,0)" or "1,-1,0" or "1 -1 0".
inline RationalVector parse_vector(const std::string& text) {
  std::vector<Int> coords;
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '(' || ch == ')' || ch == ',' || ch == '\t') ? ' ' : ch;
  std::istringstream in(cleaned);
  long long x = 0;
  while (in >> x) coords.push_back(x);
  if (!in.eof() || coords.empty()) throw std::invalid_argument("coxeter: cannot parse vector '" + text + "'");
  return RationalVector(coords);
}

inline Json to_json(const RationalVector& v) { return Json(v.coords()); }

inline RationalVector vector_from_json(const Json& j) { return RationalVector(j.get<std::vector<Int>>()); }

inline Json to_json(const Realization& R) {
  Json j;
  j["family"] = R.name();
  j["rank"] = R.rank;
  j["ambient_dim"] = R.ambient_dim;
  j["labels"] = R.labels;
  Json roots = Json::array(), verts = Json::array(), edges = Json::array();
  for (const auto& r : R.roots) roots.push_back(to_json(r));
  for (const auto& v : R.vertices) verts.push_back(to_json(v));
  for (const auto& e : R.diagram.edges()) edges.push_back({e.a, e.b});
  j["roots"] = roots;
  j["vertices"] = verts;
  j["diagram_edges"] = edges;
  j["positive_roots"] = R.positive_roots.size();
  j["weyl_order"] = weyl_order(R).str();
  return j;
}

/// Orbit as sorted TSV, one vector per line.
inline std::string orbit_tsv(const std::vector<RationalVector>& orbit) {
  std::string out;
  for (const auto& v : orbit) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += '\t';
      out += std::to_string(v[i]);
    }
    out += '\n';
  }
  return out;
}

inline std::vector<RationalVector> parse_orbit_tsv(std::istream& in) {
  std::vector<RationalVector> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(parse_vector(line));
  return out;
}

// ---------------------------------------------------------------------------
// Segment reports

inline Json segment_json(const Realization& R, const RationalVector& x, const RationalVector& y) {
  SegmentType st = segment_type(R, x, y);
  Json j;
  j["from"] = to_json(x);
  j["to"] = to_json(y);
  j["cosine"] = st.length.str();
  j["distance"] = render_angle(st.length);
  j["type"] = st.str();
  j["singular"] = st.singular;
  j["hull_dim"] = st.hull_dim;
  return j;
}

// ---------------------------------------------------------------------------
// Bigon tables

struct BigonTable {
  std::string family;
  BigonSpec spec;
  std::vector<BigonRow> rows;
};

inline Json spec_json(const BigonSpec& s) {
  Json j;
  j["base"] = s.base;
  j["exclude"] = s.excluded.labels();
  j["target"] = s.target;
  if (s.filter) j["min_angle"] = {{"angle", render_angle(s.filter->bound)}, {"inclusive", s.filter->inclusive}};
  else j["min_angle"] = nullptr;
  j["exclude_ends"] = s.exclude_ends;
  return j;
}

inline BigonSpec spec_from_json(const Json& j) {
  BigonSpec s;
  s.base = j.at("base").get<int>();
  for (int l : j.value("exclude", std::vector<int>{})) s.excluded.insert(l);
  s.target = j.at("target").get<int>();
  if (j.contains("min_angle") && !j["min_angle"].is_null())
    s.filter = DistanceFilter{parse_angle(j["min_angle"].at("angle").get<std::string>()),
                              j["min_angle"].value("inclusive", false)};
  s.exclude_ends = j.value("exclude_ends", false);
  return s;
}

inline Json row_json(const BigonRow& r) {
  Json j;
  j["representative"] = to_json(r.representative);
  j["distance"] = render_angle(r.distance);
  j["sigma"] = r.sigma.str();
  j["orbit_size"] = r.orbit_size.str();
  j["segment"] = r.segment;
  j["singular"] = r.singular;
  j["hull_dim"] = r.hull_dim;
  return j;
}

inline BigonRow row_from_json(const Json& j) {
  BigonRow r;
  r.representative = vector_from_json(j.at("representative"));
  r.distance = parse_angle(j.at("distance").get<std::string>());
  r.sigma = TypeSet::parse(j.at("sigma").get<std::string>());
  r.orbit_size = WeylOrder(j.at("orbit_size").get<std::string>());
  r.segment = j.value("segment", "");
  r.singular = j.value("singular", false);
  r.hull_dim = j.value("hull_dim", 0);
  return r;
}

inline Json table_json(const BigonTable& t) {
  Json j;
  j["family"] = t.family;
  j["spec"] = spec_json(t.spec);
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(row_json(r));
  j["rows"] = rows;
  return j;
}

inline BigonTable table_from_json(const Json& j) {
  BigonTable t;
  t.family = j.at("family").get<std::string>();
  t.spec = spec_from_json(j.at("spec"));
  for (const auto& r : j.at("rows")) t.rows.push_back(row_from_json(r));
  return t;
}

inline constexpr const char* table_tsv_header = "distance\tcosine\tsigma\torbit_size\tsegment\tsingular\thull_dim\trepresentative";

/// One header line, then one line per row. An empty sigma or segment is "-".
inline std::string table_tsv(const BigonTable& t) {
  std::string out = std::string(table_tsv_header) + "\n";
  auto dash = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
  for (const auto& r : t.rows) {
    out += render_angle(r.distance) + "\t" + r.distance.str() + "\t" + dash(r.sigma.str()) + "\t" +
           r.orbit_size.str() + "\t" + dash(r.segment) + "\t" + (r.singular ? "1" : "0") + "\t" +
           std::to_string(r.hull_dim) + "\t" + r.representative.str() + "\n";
  }
  return out;
}

/// Rows of a TSV table; the header must match.
inline std::vector<BigonRow> parse_table_tsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != table_tsv_header) throw std::invalid_argument("coxeter: bad table header");
  std::vector<BigonRow> rows;
  auto undash = [](const std::string& s) { return s == "-" ? std::string() : s; };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) f.push_back(cell);
    if (f.size() != 8) throw std::invalid_argument("coxeter: bad table row '" + line + "'");
    BigonRow r;
    r.distance = parse_angle(f[0]);
    if (CosValue::parse(f[1]) != r.distance) throw std::invalid_argument("coxeter: distance/cosine disagree");
    r.sigma = TypeSet::parse(undash(f[2]));
    r.orbit_size = WeylOrder(f[3]);
    r.segment = undash(f[4]);
    r.singular = f[5] == "1";
    r.hull_dim = std::stoi(f[6]);
    r.representative = parse_vector(f[7]);
    rows.push_back(std::move(r));
  }
  return rows;
}

inline bool same_row(const BigonRow& a, const BigonRow& b) {
  return a.representative == b.representative && a.distance == b.distance && a.sigma == b.sigma &&
         a.orbit_size == b.orbit_size && a.segment == b.segment && a.singular == b.singular &&
         a.hull_dim == b.hull_dim;
}

}  // namespace coxeter
