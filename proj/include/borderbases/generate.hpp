#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "borderbases/field.hpp"
#include "borderbases/point_set.hpp"

namespace borderbases {

// splitmix64; fixed here so that a seed reproduces the same points on every
// platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

// Grid of points cut out by one univariate polynomial per variable: the
// Cartesian product of the root lists, in odometer order with the last
// variable fastest.
template <typename K>
PointSet<K> generate_complete_intersection(const FieldSpec& spec,
                                           const std::vector<std::vector<K>>& roots_per_variable) {
  if (roots_per_variable.empty()) throw InputError("complete intersection needs at least one variable");
  for (std::size_t v = 0; v < roots_per_variable.size(); ++v) {
    const auto& roots = roots_per_variable[v];
    if (roots.empty()) throw InputError("variable " + std::to_string(v + 1) + " has no roots");
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (roots[i] == roots[j])
          throw InputError("repeated root for variable " + std::to_string(v + 1));
  }
  const std::size_t n = roots_per_variable.size();
  std::vector<std::vector<K>> points;
  std::vector<std::size_t> odo(n, 0);
  while (true) {
    std::vector<K> p;
    p.reserve(n);
    for (std::size_t v = 0; v < n; ++v) p.push_back(roots_per_variable[v][odo[v]]);
    points.push_back(std::move(p));
    std::size_t v = n;
    while (v-- > 0) {
      if (++odo[v] < roots_per_variable[v].size()) break;
      odo[v] = 0;
      if (v == 0) return PointSet<K>(spec, n, std::move(points));
    }
  }
}

namespace detail {

template <typename K>
K random_coordinate(const FieldSpec& spec, SplitMix64& rng);

template <>
inline Rational random_coordinate<Rational>(const FieldSpec&, SplitMix64& rng) {
  // small integers in [-100, 100]
  auto v = static_cast<long>(rng.next() % 201) - 100;
  return Rational(v);
}

template <>
inline Fp random_coordinate<Fp>(const FieldSpec& spec, SplitMix64& rng) {
  return Fp(rng.next() % spec.modulus(), spec.modulus());
}

}  // namespace detail

// Seeded random point set; duplicate points are rejected by resampling.
template <typename K>
PointSet<K> generate_random_points(const FieldSpec& spec, std::size_t s, std::size_t n,
                                   std::uint64_t seed) {
  if (s == 0 || n == 0) throw InputError("random point set needs s >= 1 and n >= 1");
  SplitMix64 rng(seed);
  std::vector<std::vector<K>> points;
  points.reserve(s);
  std::size_t attempts = 0;
  while (points.size() < s) {
    if (++attempts > 1000 * s)
      throw InputError("could not sample " + std::to_string(s) + " distinct points");
    std::vector<K> p;
    p.reserve(n);
    for (std::size_t v = 0; v < n; ++v) p.push_back(detail::random_coordinate<K>(spec, rng));
    bool duplicate = false;
    for (const auto& q : points)
      if (q == p) { duplicate = true; break; }
    if (!duplicate) points.push_back(std::move(p));
  }
  return PointSet<K>(spec, n, std::move(points));
}

}  // namespace borderbases
