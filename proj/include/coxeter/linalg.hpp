#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "coxeter/vector.hpp"

namespace coxeter::linalg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<Rational>>;

/// Row-reduces in place; returns the rank.
inline std::size_t row_reduce(Matrix& m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Rational inv = 1 / m[rank][c];
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  Matrix m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<Rational> row;
    for (Int x : v.coords()) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return row_reduce(m);
}

/// Solves a * x = b for square nonsingular a.
inline std::vector<Rational> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  if (row_reduce(a) != n) throw std::runtime_error("coxeter: singular linear system");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

/// Primitive integer ray through a nonzero rational vector.
inline RationalVector to_ray(const std::vector<Rational>& v) {
  BigInt lcm = 1;
  for (const auto& q : v) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(q));
  std::vector<Wide> w;
  w.reserve(v.size());
  for (const auto& q : v) {
    BigInt n = boost::multiprecision::numerator(q) * (lcm / boost::multiprecision::denominator(q));
    w.push_back(static_cast<Wide>(n.convert_to<long long>()));
  }
  return RationalVector::from_wide(w);
}

}  // namespace coxeter::linalg
