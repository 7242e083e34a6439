#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxeter {

/// A set of vertex types (Dynkin labels 1..63) as a bitmask.
class TypeSet {
 public:
  constexpr TypeSet() = default;
  constexpr TypeSet(std::initializer_list<int> labels) {
    for (int l : labels) insert(l);
  }
  static constexpr TypeSet from_bits(std::uint64_t b) {
    TypeSet t;
    t.bits_ = b;
    return t;
  }

  constexpr void insert(int label) { bits_ |= bit(label); }
  constexpr void erase(int label) { bits_ &= ~bit(label); }
  constexpr bool contains(int label) const { return (bits_ & bit(label)) != 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr TypeSet operator|(TypeSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr TypeSet operator&(TypeSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr TypeSet minus(TypeSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr bool subset_of(TypeSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr bool operator==(TypeSet, TypeSet) = default;
  friend constexpr auto operator<=>(TypeSet a, TypeSet b) { return a.bits_ <=> b.bits_; }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (int l = 0; l < 64; ++l)
      if (contains(l)) out.push_back(l);
    return out;
  }

  /// Single element of a singleton set.
  int only() const { return std::countr_zero(bits_); }

  /// "168" style; multi-digit labels are parenthesized.
  std::string str() const {
    std::string s;
    for (int l : labels()) s += label_str(l);
    return s;
  }

  /// Inverse of str(); "" is the empty set.
  static TypeSet parse(const std::string& s) {
    TypeSet t;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= '0' && s[i] <= '9') {
        t.insert(s[i] - '0');
      } else if (s[i] == '(') {
        std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("coxeter: bad type set '" + s + "'");
        t.insert(std::stoi(s.substr(i + 1, close - i - 1)));
        i = close;
      } else {
        throw std::invalid_argument("coxeter: bad type set '" + s + "'");
      }
    }
    return t;
  }

  static std::string label_str(int l) {
    return l < 10 ? std::to_string(l) : "(" + std::to_string(l) + ")";
  }

 private:
  static constexpr std::uint64_t bit(int label) { return std::uint64_t{1} << label; }
  std::uint64_t bits_ = 0;
};

/// Concatenated label string, e.g. {8,7,8,7,8} -> "87878".
inline std::string type_string(const std::vector<int>& labels) {
  std::string s;
  for (int l : labels) s += TypeSet::label_str(l);
  return s;
}

}  // namespace coxeter
