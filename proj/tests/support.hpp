#pragma once

// Shared helpers for the test binaries: compact data literals, seeded random
// generators, and oracles that avoid the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "s1fix/core.hpp"
#include "s1fix/multigraph.hpp"
#include "s1fix/ops4.hpp"

namespace s1fix::test {

using Rational = boost::multiprecision::cpp_rational;

inline FixedPointDatum pt(int sign, std::vector<Weight> weights) {
  return FixedPointDatum(sign_from_int(sign), std::move(weights));
}

// D({{+1, {1, 2}}, {-1, {1, 2}}})
inline FixedPointData D(std::initializer_list<std::pair<int, std::vector<Weight>>> points) {
  std::vector<FixedPointDatum> v;
  for (const auto& [s, w] : points) v.push_back(pt(s, w));
  return FixedPointData(std::move(v));
}

inline const FixedPointData& cp4_data() {
  static const FixedPointData d = D({{+1, {1, 2, 3, 4}},
                                     {-1, {1, 1, 2, 3}},
                                     {+1, {1, 1, 2, 2}},
                                     {-1, {1, 1, 2, 3}},
                                     {+1, {1, 2, 3, 4}}});
  return d;
}

// sum_p sign(p) prod_i (1 + t^w) / (1 - t^w), evaluated exactly at a rational
// point away from the roots of unity.
inline Rational series_value(const FixedPointData& data, const Rational& t) {
  Rational total = 0;
  for (const auto& p : data) {
    Rational term = to_int(p.sign());
    for (Weight w : p.weights()) {
      Rational tw = 1;
      for (Weight i = 0; i < w; ++i) tw *= t;
      term *= (1 + tw) / (1 - tw);
    }
    total += term;
  }
  return total;
}

inline std::vector<Rational> sample_points() {
  return {Rational(2), Rational(3), Rational(1, 2), Rational(-1, 3), Rational(5, 7)};
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  Sign sign() { return coin() ? Sign::Plus : Sign::Minus; }

  std::pair<Weight, Weight> coprime_pair(Weight max_weight) {
    for (;;) {
      Weight a = static_cast<Weight>(uniform(1, max_weight));
      Weight b = static_cast<Weight>(uniform(1, max_weight));
      if (std::gcd(a, b) == 1) return {std::min(a, b), std::max(a, b)};
    }
  }

  // A random valid trace. Each step adds a sphere or blows up a present
  // point, staying within the bounds; stops early when no step fits.
  ConstructionTrace trace(std::size_t max_points, Weight max_weight, std::size_t steps) {
    ConstructionTrace t;
    FixedPointData data;
    for (std::size_t i = 0; i < steps; ++i) {
      std::vector<ConstructionStep> options;
      if (data.size() + 2 <= max_points) {
        auto [a, b] = coprime_pair(max_weight);
        options.push_back(ConstructionStep::add_sphere(a, b));
      }
      if (data.size() + 1 <= max_points) {
        for (const auto& p : data) {
          if (p.weights()[0] + p.weights()[1] <= max_weight) {
            options.push_back(ConstructionStep::blow_up(p.sign(), p.weights()[0], p.weights()[1]));
          }
        }
      }
      if (options.empty()) break;
      // One sphere option against every blow-up keeps traces deep.
      const auto& step = options[uniform(0, options.size() - 1)];
      data = apply(data, step);
      t.push_back(step);
    }
    return t;
  }

  // Arbitrary signed coprime pairs: mostly not realizable.
  FixedPointData candidate(std::size_t points, Weight max_weight) {
    std::vector<FixedPointDatum> v;
    for (std::size_t i = 0; i < points; ++i) {
      auto [a, b] = coprime_pair(max_weight);
      v.emplace_back(sign(), std::vector<Weight>{a, b});
    }
    return FixedPointData(std::move(v));
  }

  // Arbitrary-arity data with weights in [1, max_weight].
  FixedPointData general(std::size_t points, std::size_t arity, Weight max_weight) {
    std::vector<FixedPointDatum> v;
    for (std::size_t i = 0; i < points; ++i) {
      std::vector<Weight> w(arity);
      for (auto& x : w) x = static_cast<Weight>(uniform(1, max_weight));
      v.emplace_back(sign(), std::move(w));
    }
    return FixedPointData(std::move(v));
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[uniform(0, v.size() - 1)];
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Graph from explicit lists: signs[i] is vertex i, edges are (u, v, label).
inline Multigraph make_graph(std::vector<int> signs, std::vector<std::tuple<VertexId, VertexId, std::int64_t>> edges) {
  Multigraph g;
  for (std::size_t i = 0; i < signs.size(); ++i) g.vertices.push_back({static_cast<VertexId>(i), sign_from_int(signs[i])});
  for (auto [u, v, l] : edges) g.edges.push_back({u, v, l});
  return g;
}

}  // namespace s1fix::test
