#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxeter/arith.hpp"

namespace coxeter {

/// A ray in an ambient integer lattice, stored as its primitive integer
/// representative (coordinate gcd 1). The zero vector is not a ray.
class RationalVector {
 public:
  RationalVector() = default;

  /// Primitive form of an arbitrary nonzero integer vector.
  explicit RationalVector(std::vector<Int> coords) : c_(std::move(coords)) { normalize(); }
  RationalVector(std::initializer_list<Int> coords) : c_(coords) { normalize(); }

  static RationalVector from_wide(std::span<const Wide> coords) {
    Wide g = 0;
    for (Wide v : coords) g = arith::gcd(g, v);
    if (g == 0) throw std::invalid_argument("coxeter: zero vector is not a ray");
    std::vector<Int> out;
    out.reserve(coords.size());
    for (Wide v : coords) out.push_back(arith::narrow(v / g));
    RationalVector r;
    r.c_ = std::move(out);
    return r;
  }

  std::size_t size() const { return c_.size(); }
  Int operator[](std::size_t i) const { return c_[i]; }
  std::span<const Int> coords() const { return c_; }
  bool empty() const { return c_.empty(); }

  RationalVector operator-() const {
    RationalVector r = *this;
    for (Int& v : r.c_) v = -v;
    return r;
  }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
  friend auto operator<=>(const RationalVector& a, const RationalVector& b) { return a.c_ <=> b.c_; }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ')';
    return os.str();
  }

 private:
  void normalize() {
    Wide g = 0;
    for (Int v : c_) g = arith::gcd(g, v);
    if (g == 0) throw std::invalid_argument("coxeter: zero vector is not a ray");
    if (g != 1)
      for (Int& v : c_) v = static_cast<Int>(v / g);
  }

  std::vector<Int> c_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << v.str(); }

inline void require_same_dim(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("coxeter: dimension mismatch");
}

inline Wide dot(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a, b);
  Wide s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<Wide>(a[i]) * b[i];
  return s;
}

inline Wide norm2(const RationalVector& a) { return dot(a, a); }

/// Primitive form of alpha*a + beta*b. Throws if the combination vanishes.
inline RationalVector combine(Wide alpha, const RationalVector& a, Wide beta, const RationalVector& b) {
  require_same_dim(a, b);
  std::vector<Wide> w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    w[i] = arith::mul_checked(alpha, a[i]) + arith::mul_checked(beta, b[i]);
  return RationalVector::from_wide(w);
}

struct RationalVectorHash {
  std::size_t operator()(const RationalVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Int x : v.coords()) {
      h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace coxeter
