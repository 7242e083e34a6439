#pragma once

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "coxeter/cos_value.hpp"

namespace coxeter {

namespace detail {

struct NamedAngle {
  std::string_view name;
  int sign;
  Int num, den;  // cos^2
  int degrees;
};

inline constexpr std::array<NamedAngle, 9> named_angles{{
    {"0", 1, 1, 1, 0},
    {"pi/6", 1, 3, 4, 30},
    {"pi/4", 1, 1, 2, 45},
    {"pi/3", 1, 1, 4, 60},
    {"pi/2", 0, 0, 1, 90},
    {"2pi/3", -1, 1, 4, 120},
    {"3pi/4", -1, 1, 2, 135},
    {"5pi/6", -1, 3, 4, 150},
    {"pi", -1, 1, 1, 180},
}};

inline Int squarefree_part(Wide v, Wide& root) {
  auto [a, r] = arith::split_square(v);
  root = a;
  return arith::narrow(r);
}

}  // namespace detail

/// A distance in the paper's notation: pi-fractions for the special cosines,
/// otherwise arccos(+-p/q) or arccos(+-p/(q*sqrt(r))) with r squarefree.
inline std::string render_angle(const CosValue& c) {
  for (const auto& a : detail::named_angles)
    if (c.sign() == a.sign && c.square_num() == a.num && c.square_den() == a.den) return std::string(a.name);
  const std::string sgn = c.sign() < 0 ? "-" : "";
  if (c.is_rational()) {
    Int p = arith::narrow(*arith::exact_sqrt(c.square_num()));
    Int q = arith::narrow(*arith::exact_sqrt(c.square_den()));
    return "arccos(" + sgn + std::to_string(p) + "/" + std::to_string(q) + ")";
  }
  // sqrt(N/D) = a*r / (D*sqrt(r)) where N*D = a^2 * r
  Wide a = 0;
  const Int r = detail::squarefree_part(static_cast<Wide>(c.square_num()) * c.square_den(), a);
  Wide p = a * r, q = c.square_den();
  Wide g = arith::gcd(p, q);
  p /= g;
  q /= g;
  std::string body = arith::to_string(p) + "/";
  body += q == 1 ? "sqrt(" + std::to_string(r) + ")" : "(" + arith::to_string(q) + "*sqrt(" + std::to_string(r) + "))";
  return "arccos(" + sgn + body + ")";
}

/// Inverse of render_angle. Also accepts whole degrees with an exact cosine ("90deg").
inline CosValue parse_angle(std::string_view text) {
  const std::string t(text);
  auto fail = [&] { return std::invalid_argument("coxeter: cannot parse angle '" + t + "'"); };
  for (const auto& a : detail::named_angles)
    if (text == a.name) return CosValue(a.sign, a.num, a.den);
  if (text.ends_with("deg")) {
    const std::string num(text.substr(0, text.size() - 3));
    char* end = nullptr;
    long d = std::strtol(num.c_str(), &end, 10);
    if (num.empty() || *end) throw fail();
    for (const auto& a : detail::named_angles)
      if (a.degrees == d) return CosValue(a.sign, a.num, a.den);
    throw fail();
  }
  if (!text.starts_with("arccos(") || !text.ends_with(")")) throw fail();
  std::string_view v = text.substr(7, text.size() - 8);
  int sgn = 1;
  if (!v.empty() && (v.front() == '-' || v.front() == '+')) {
    sgn = v.front() == '-' ? -1 : 1;
    v.remove_prefix(1);
  }
  auto integer = [&](std::string_view s) {
    const std::string str(s);
    char* end = nullptr;
    long long x = std::strtoll(str.c_str(), &end, 10);
    if (str.empty() || *end || x < 0) throw fail();
    return static_cast<Int>(x);
  };
  const auto slash = v.find('/');
  if (slash == std::string_view::npos) throw fail();
  const Int p = integer(v.substr(0, slash));
  std::string_view rest = v.substr(slash + 1);
  Int q = 1, r = 1;
  if (rest.starts_with("sqrt(") && rest.ends_with(")")) {
    r = integer(rest.substr(5, rest.size() - 6));
  } else if (rest.starts_with("(") && rest.ends_with("))")) {
    rest = rest.substr(1, rest.size() - 2);
    const auto star = rest.find("*sqrt(");
    if (star == std::string_view::npos) throw fail();
    q = integer(rest.substr(0, star));
    r = integer(rest.substr(star + 6, rest.size() - star - 7));
  } else {
    q = integer(rest);
  }
  if (q == 0 || r == 0) throw fail();
  // cos^2 = p^2 / (q^2 r)
  const Wide num = static_cast<Wide>(p) * p, den = static_cast<Wide>(q) * q * r;
  if (num > den) throw fail();
  return CosValue(p == 0 ? 0 : sgn, num, den);
}

}  // namespace coxeter
