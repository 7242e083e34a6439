#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/types.hpp"

namespace coxeter {

enum class Family { A, D, E6, E7, E8, Link };

inline std::string family_name(Family f, int rank) {
  switch (f) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::Link: return "link";
  }
  return "?";
}

/// Parses "E8", "D5", "Dn" (with separate rank). Returns the family and
/// the rank implied by the name, or 0 when the rank must come from elsewhere.
inline std::pair<Family, int> parse_family(const std::string& s) {
  if (s == "E6") return {Family::E6, 6};
  if (s == "E7") return {Family::E7, 7};
  if (s == "E8") return {Family::E8, 8};
  if (s == "Dn" || s == "D") return {Family::D, 0};
  if (s.size() > 1 && (s[0] == 'D' || s[0] == 'A')) {
    int r = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("coxeter: unknown family '" + s + "'");
      r = r * 10 + (s[i] - '0');
    }
    return {s[0] == 'D' ? Family::D : Family::A, r};
  }
  throw std::invalid_argument("coxeter: unknown family '" + s + "'");
}

struct DynkinEdge {
  int a = 0, b = 0;  // a < b
  int bond = 3;
  friend bool operator==(const DynkinEdge&, const DynkinEdge&) = default;
  friend auto operator<=>(const DynkinEdge&, const DynkinEdge&) = default;
};

/// Irreducible catalogue entry (A_n, D_n, E_n).
struct CatalogueType {
  char kind = 'A';
  int rank = 0;
  friend bool operator==(const CatalogueType&, const CatalogueType&) = default;
  friend auto operator<=>(const CatalogueType&, const CatalogueType&) = default;
  std::string str() const { return std::string(1, kind) + std::to_string(rank); }
};

/// Labelled Coxeter diagram. Labels are kept from the ambient diagram when
/// taking induced subdiagrams, so links carry the ambient types.
class DynkinDiagram {
 public:
  DynkinDiagram() = default;
  DynkinDiagram(std::vector<int> nodes, std::vector<DynkinEdge> edges)
      : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    std::sort(nodes_.begin(), nodes_.end());
    for (auto& e : edges_)
      if (e.a > e.b) std::swap(e.a, e.b);
    std::sort(edges_.begin(), edges_.end());
    for (const auto& e : edges_)
      if (!has_node(e.a) || !has_node(e.b) || e.a == e.b)
        throw std::invalid_argument("coxeter: edge with unknown endpoint");
  }

  /// The labelled diagrams of the in-scope families. D3 is A3 as 1-3-2.
  static DynkinDiagram of(Family f, int rank) {
    std::vector<int> nodes;
    std::vector<DynkinEdge> edges;
    for (int i = 1; i <= rank; ++i) nodes.push_back(i);
    switch (f) {
      case Family::A:
        for (int i = 1; i < rank; ++i) edges.push_back({i, i + 1, 3});
        break;
      case Family::D:
        if (rank < 3) throw std::invalid_argument("coxeter: D_n needs n >= 3");
        edges.push_back({1, 3, 3});
        for (int i = 2; i < rank; ++i) edges.push_back({i, i + 1, 3});
        break;
      case Family::E6:
      case Family::E7:
      case Family::E8:
        edges.push_back({1, 4, 3});
        for (int i = 2; i < rank; ++i) edges.push_back({i, i + 1, 3});
        break;
      case Family::Link:
        throw std::invalid_argument("coxeter: link diagrams are computed, not catalogued");
    }
    return DynkinDiagram(nodes, edges);
  }

  const std::vector<int>& nodes() const { return nodes_; }
  const std::vector<DynkinEdge>& edges() const { return edges_; }
  int rank() const { return static_cast<int>(nodes_.size()); }
  bool has_node(int l) const { return std::binary_search(nodes_.begin(), nodes_.end(), l); }
  bool simply_laced() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const DynkinEdge& e) { return e.bond == 3; });
  }

  TypeSet node_set() const {
    TypeSet t;
    for (int l : nodes_) t.insert(l);
    return t;
  }

  std::vector<int> neighbours(int l) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
      if (e.a == l) out.push_back(e.b);
      if (e.b == l) out.push_back(e.a);
    }
    return out;
  }

  DynkinDiagram induced(TypeSet keep) const {
    std::vector<int> n;
    std::vector<DynkinEdge> e;
    for (int l : nodes_)
      if (keep.contains(l)) n.push_back(l);
    for (const auto& ed : edges_)
      if (keep.contains(ed.a) && keep.contains(ed.b)) e.push_back(ed);
    return DynkinDiagram(n, e);
  }

  DynkinDiagram without(TypeSet removed) const { return induced(node_set().minus(removed)); }

  std::vector<DynkinDiagram> components() const {
    std::vector<DynkinDiagram> out;
    TypeSet seen;
    for (int start : nodes_) {
      if (seen.contains(start)) continue;
      TypeSet comp;
      std::vector<int> stack{start};
      while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        if (comp.contains(l)) continue;
        comp.insert(l);
        for (int nb : neighbours(l)) stack.push_back(nb);
      }
      seen = seen | comp;
      out.push_back(induced(comp));
    }
    return out;
  }

  /// Classifies a connected simply laced diagram as A/D/E; nullopt otherwise.
  std::optional<CatalogueType> classify() const {
    if (nodes_.empty() || !simply_laced()) return std::nullopt;
    if (components().size() != 1) return std::nullopt;
    if (static_cast<int>(edges_.size()) != rank() - 1) return std::nullopt;  // not a tree
    std::vector<int> branch;
    for (int l : nodes_) {
      auto d = neighbours(l).size();
      if (d > 3) return std::nullopt;
      if (d == 3) branch.push_back(l);
    }
    if (branch.empty()) return CatalogueType{'A', rank()};
    if (branch.size() > 1) return std::nullopt;
    std::vector<int> arms;
    for (int nb : neighbours(branch[0])) arms.push_back(arm_length(branch[0], nb));
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return CatalogueType{'D', rank()};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return CatalogueType{'E', rank()};
    return std::nullopt;
  }

  /// Leaf at the end of the longest arm; its vertex orbit is the smallest
  /// among the leaves of an A/D/E diagram.
  int far_leaf() const {
    int best = nodes_.front(), best_len = -1;
    for (int l : nodes_) {
      auto nb = neighbours(l);
      if (nb.size() > 1) continue;
      if (nb.empty()) return l;
      int len = 1, prev = l, cur = nb[0];
      while (neighbours(cur).size() == 2) {
        auto n2 = neighbours(cur);
        int next = n2[0] == prev ? n2[1] : n2[0];
        prev = cur;
        cur = next;
        ++len;
      }
      if (neighbours(cur).size() == 1) len = 1 << 20;  // a path: either end will do
      if (len > best_len) {
        best_len = len;
        best = l;
      }
    }
    return best;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      s += (i ? " " : "") + std::to_string(edges_[i].a) + "-" + std::to_string(edges_[i].b);
      if (edges_[i].bond != 3) s += "(" + std::to_string(edges_[i].bond) + ")";
    }
    s += " | nodes";
    for (int l : nodes_) s += " " + std::to_string(l);
    return s + "}";
  }

  friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;

 private:
  int arm_length(int from, int first) const {
    int len = 1, prev = from, cur = first;
    while (true) {
      auto nb = neighbours(cur);
      if (nb.size() != 2) break;
      int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    return len;
  }

  std::vector<int> nodes_;
  std::vector<DynkinEdge> edges_;
};

/// Induced subdiagram on the nodes other than i, labels preserved.
inline DynkinDiagram link_diagram(const DynkinDiagram& d, int i) {
  if (!d.has_node(i)) throw std::invalid_argument("coxeter: node not in diagram");
  TypeSet rm;
  rm.insert(i);
  return d.without(rm);
}

}  // namespace coxeter
