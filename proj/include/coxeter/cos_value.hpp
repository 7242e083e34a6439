#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coxeter/arith.hpp"
#include "coxeter/vector.hpp"

namespace coxeter {

/// Exact cosine of a spherical angle: sign(c) and c^2 as a reduced fraction.
class CosValue {
 public:
  CosValue() = default;

  /// sign * sqrt(num/den); num/den is reduced here.
  CosValue(int sign, Wide num, Wide den) {
    if (den <= 0 || num < 0) throw std::invalid_argument("coxeter: bad cosine square");
    if (num > den) throw std::invalid_argument("coxeter: |cos| > 1");
    if ((num == 0) != (sign == 0)) throw std::invalid_argument("coxeter: cosine sign/zero mismatch");
    Wide g = arith::gcd(num, den);
    if (g == 0) g = 1;
    sign_ = sign;
    num_ = arith::narrow(num / g);
    den_ = arith::narrow(num == 0 ? 1 : den / g);
  }

  /// cos = dot / sqrt(n1 * n2).
  static CosValue from_dot(Wide dot, Wide n1, Wide n2) {
    Wide sq_num = arith::mul_checked(dot, dot);
    Wide sq_den = arith::mul_checked(n1, n2);
    Wide g = arith::gcd(sq_num, sq_den);
    if (g > 1) {
      sq_num /= g;
      sq_den /= g;
    }
    return CosValue(arith::sign(dot), sq_num, sq_den);
  }

  /// Rational cosine p/q.
  static CosValue rational(Int p, Int q) {
    if (q < 0) {
      p = -p;
      q = -q;
    }
    return CosValue(arith::sign(p), static_cast<Wide>(p) * p, static_cast<Wide>(q) * q);
  }

  static CosValue one() { return CosValue(1, 1, 1); }
  static CosValue zero() { return CosValue(0, 0, 1); }

  int sign() const { return sign_; }
  Int square_num() const { return num_; }
  Int square_den() const { return den_; }

  bool is_rational() const {
    return arith::exact_sqrt(num_).has_value() && arith::exact_sqrt(den_).has_value();
  }

  double to_double() const {
    return sign_ * std::sqrt(static_cast<double>(num_) / static_cast<double>(den_));
  }

  double angle() const { return std::acos(std::clamp(to_double(), -1.0, 1.0)); }

  CosValue operator-() const {
    CosValue r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend CosValue operator*(const CosValue& a, const CosValue& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return zero();
    Wide g1 = arith::gcd(a.num_, b.den_), g2 = arith::gcd(b.num_, a.den_);
    Wide n = static_cast<Wide>(a.num_ / g1) * (b.num_ / g2);
    Wide d = static_cast<Wide>(a.den_ / g2) * (b.den_ / g1);
    return CosValue(a.sign_ * b.sign_, n, d);
  }

  friend bool operator==(const CosValue&, const CosValue&) = default;

  friend std::strong_ordering operator<=>(const CosValue& a, const CosValue& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    if (a.sign_ >= 0) return lhs <=> rhs;
    return rhs <=> lhs;
  }

  /// "0", "1", "-1/2", ... for rational cosines; otherwise "-sqrt(1/8)".
  std::string str() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    auto rn = arith::exact_sqrt(num_);
    auto rd = arith::exact_sqrt(den_);
    if (rn && rd) {
      s += arith::to_string(*rn);
      if (*rd != 1) s += "/" + arith::to_string(*rd);
      return s;
    }
    return s + "sqrt(" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
  }

  /// Inverse of str().
  static CosValue parse(std::string_view text) {
    std::string t(text);
    auto fail = [&] { return std::invalid_argument("coxeter: cannot parse cosine '" + t + "'"); };
    if (t.empty()) throw fail();
    int sgn = 1;
    std::string_view v = text;
    if (v.front() == '-') {
      sgn = -1;
      v.remove_prefix(1);
    } else if (v.front() == '+') {
      v.remove_prefix(1);
    }
    auto parse_frac = [&](std::string_view f, Int& p, Int& q) {
      auto slash = f.find('/');
      std::string a(f.substr(0, slash));
      std::string b = slash == std::string_view::npos ? "1" : std::string(f.substr(slash + 1));
      if (a.empty() || b.empty()) throw fail();
      char* end = nullptr;
      p = std::strtoll(a.c_str(), &end, 10);
      if (*end) throw fail();
      q = std::strtoll(b.c_str(), &end, 10);
      if (*end || q <= 0 || p < 0) throw fail();
    };
    Int p = 0, q = 1;
    if (v.starts_with("sqrt(") && v.ends_with(")")) {
      parse_frac(v.substr(5, v.size() - 6), p, q);
      return CosValue(p == 0 ? 0 : sgn, p, q);
    }
    parse_frac(v, p, q);
    return CosValue(p == 0 ? 0 : sgn, static_cast<Wide>(p) * p, static_cast<Wide>(q) * q);
  }

 private:
  int sign_ = 1;
  Int num_ = 1;
  Int den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const CosValue& c) { return os << c.str(); }

/// Exact cosine of the spherical angle between two rays.
inline CosValue cosine(const RationalVector& x, const RationalVector& y) {
  return CosValue::from_dot(dot(x, y), norm2(x), norm2(y));
}

}  // namespace coxeter
