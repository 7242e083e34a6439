#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "coxeter/segments.hpp"
#include "coxeter/weyl.hpp"

using namespace coxeter;

namespace {

constexpr double float_tol = 1e-9;

double fdot(const RationalVector& a, const RationalVector& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  return s;
}

double fangle(const RationalVector& a, const RationalVector& b) {
  return std::acos(std::clamp(fdot(a, b) / std::sqrt(fdot(a, a) * fdot(b, b)), -1.0, 1.0));
}

Realization make(const std::string& name) {
  auto [family, rank] = parse_family(name);
  return build_realization(family, rank);
}

struct PairSampler {
  const Realization& R;
  std::mt19937_64 gen;

  PairSampler(const Realization& r, std::uint64_t seed) : R(r), gen(seed) {}
  /// A chamber vertex moved by a random Weyl group element.
  RationalVector vertex() {
    const RationalVector& v = R.vertices[gen() % R.vertices.size()];
    return apply_word(R, word(), v);
  }
  std::pair<RationalVector, RationalVector> pair() {
    while (true) {
      RationalVector x = vertex(), y = vertex();
      if (x != y && x != -y) return {x, y};
    }
  }
  /// A random Weyl group element as a word of simple reflections.
  std::vector<int> word() {
    std::vector<int> w(gen() % 60);
    for (auto& l : w) l = R.labels[gen() % R.labels.size()];
    return w;
  }
};

}  // namespace

TEST(Cosine, AgreesWithFloatingPoint) {
  for (const auto& name : {"D5", "E6", "E7", "E8"}) {
    Realization R = make(name);
    PairSampler s(R, 3);
    for (int t = 0; t < 200; ++t) {
      auto [x, y] = s.pair();
      EXPECT_NEAR(cosine(x, y).angle(), fangle(x, y), float_tol) << name << " " << x << " " << y;
    }
  }
}

TEST(Trace, PiecesAddUpToTheWholeArc) {
  for (const auto& name : {"D6", "E7", "E8"}) {
    Realization R = make(name);
    PairSampler s(R, 17);
    for (int t = 0; t < 60; ++t) {
      auto [x, y] = s.pair();
      SegmentTrace tr = trace_segment(R, x, y);
      std::vector<RationalVector> pts{x};
      for (const auto& b : tr.breakpoints) pts.push_back(b.point);
      pts.push_back(y);
      double total = 0;
      for (std::size_t k = 0; k + 1 < pts.size(); ++k) total += fangle(pts[k], pts[k + 1]);
      EXPECT_NEAR(total, fangle(x, y), float_tol);
      // parameters increase strictly along the chord
      for (std::size_t k = 0; k + 1 < tr.breakpoints.size(); ++k)
        EXPECT_LT(tr.breakpoints[k].parameter(), tr.breakpoints[k + 1].parameter());
      EXPECT_EQ(tr.stretches.size(), tr.breakpoints.size() + 1);
    }
  }
}

TEST(SegmentType, InvariantUnderTheWeylGroup) {
  for (const auto& name : {"D5", "E6", "E7", "E8"}) {
    Realization R = make(name);
    PairSampler s(R, 29);
    for (int t = 0; t < 100; ++t) {
      auto [x, y] = s.pair();
      const auto w = s.word();
      SegmentType a = segment_type(R, x, y);
      SegmentType b = segment_type(R, apply_word(R, w, x), apply_word(R, w, y));
      EXPECT_EQ(a.str(), b.str()) << name;
      EXPECT_EQ(a.length, b.length);
      EXPECT_EQ(a.singular, b.singular);
      EXPECT_EQ(a.hull_dim, b.hull_dim);
    }
  }
}

TEST(SegmentType, ReversalReversesTheTypeString) {
  for (const auto& name : {"D7", "E8"}) {
    Realization R = make(name);
    PairSampler s(R, 41);
    for (int t = 0; t < 100; ++t) {
      auto [x, y] = s.pair();
      SegmentType a = segment_type(R, x, y), b = segment_type(R, y, x);
      std::vector<int> rev(b.types.rbegin(), b.types.rend());
      EXPECT_EQ(a.types, rev);
      EXPECT_EQ(a.singular, b.singular);
      EXPECT_EQ(a.hull_dim, b.hull_dim);
    }
  }
}

TEST(SegmentType, KnownRow) {
  Realization R = make("E7");
  SegmentType s = segment_type(R, R.vertex(2), RationalVector{1, -1, 1, 1, 1, 1, -1, -1});
  EXPECT_EQ(s.str(), "232");
  EXPECT_TRUE(s.singular);
  EXPECT_EQ(s.length, CosValue::rational(1, 2));
}

TEST(SegmentType, SingularSegmentsLieInOneDimensionalSingularSpans) {
  Realization R = make("E6");
  PairSampler s(R, 2);
  for (int t = 0; t < 100; ++t) {
    auto [x, y] = s.pair();
    SegmentType st = segment_type(R, x, y);
    if (st.singular) {
      EXPECT_EQ(singular_span(R, x, y).dimension, 1) << x << " " << y;
    }
  }
}

TEST(Segment, EqualOrAntipodalEndpointsAreRejected) {
  Realization R = make("D4");
  const auto& v = R.vertex(1);
  EXPECT_THROW(trace_segment(R, v, v), std::invalid_argument);
  EXPECT_THROW(trace_segment(R, v, -v), std::invalid_argument);
}

TEST(CellsMet, HullDimensionMatchesTrace) {
  Realization R = make("E7");
  PairSampler s(R, 8);
  for (int t = 0; t < 40; ++t) {
    auto [x, y] = s.pair();
    EXPECT_EQ(cells_met(R, x, y).hull_dim, segment_type(R, x, y).hull_dim);
    // the endpoints belong to the closure of the cells met
    auto met = cells_met(R, x, y);
    EXPECT_TRUE(std::binary_search(met.vertices.begin(), met.vertices.end(), x));
    EXPECT_TRUE(std::binary_search(met.vertices.begin(), met.vertices.end(), y));
  }
}

TEST(Link, IsTheParabolicComplexOfTheVertex) {
  Realization R = make("D6");
  for (int type : R.labels) {
    const RationalVector v = R.vertex(type);
    Realization L = link_realization(R, v);
    EXPECT_EQ(weyl_order(L), stabilizer_order(R, TypeSet{type}));
    for (const auto& r : L.roots) EXPECT_EQ(dot(r, v), 0);
  }
}

TEST(Link, AngleAgreesWithFloatingPoint) {
  Realization R = make("E8");
  PairSampler s(R, 13);
  for (int t = 0; t < 60; ++t) {
    RationalVector x = s.vertex(), y = s.vertex(), z = s.vertex();
    if (x == y || x == -y || x == z || x == -z) continue;
    auto tangent = [&](const RationalVector& p) {
      std::vector<double> out(x.size());
      const double k = fdot(x, p) / fdot(x, x);
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = p[i] - k * x[i];
      return out;
    };
    auto a = tangent(y), b = tangent(z);
    double ab = 0, aa = 0, bb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      ab += a[i] * b[i];
      aa += a[i] * a[i];
      bb += b[i] * b[i];
    }
    if (aa < 1e-12 || bb < 1e-12) continue;
    EXPECT_NEAR(angle(R, x, y, z).to_double(), ab / std::sqrt(aa * bb), float_tol);
  }
}

TEST(Midpoint, IsEquidistant) {
  Realization R = make("E8");
  PairSampler s(R, 19);
  int found = 0;
  for (int t = 0; t < 200; ++t) {
    auto [x, y] = s.pair();
    auto m = midpoint(x, y);
    if (!m) continue;
    ++found;
    EXPECT_EQ(cosine(*m, x), cosine(*m, y));
    EXPECT_NEAR(2 * fangle(*m, x), fangle(x, y), float_tol);
  }
  EXPECT_GT(found, 0);
}

TEST(Adjacent, EdgesJoinDistinctTypes) {
  Realization R = make("D5");
  for (int a : R.labels)
    for (int b : R.labels) {
      if (a == b) continue;
      EXPECT_TRUE(adjacent(R, R.vertex(a), R.vertex(b)));
    }
  EXPECT_FALSE(adjacent(R, R.vertex(1), -R.vertex(1)));
}
