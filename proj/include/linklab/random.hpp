#pragma once

#include "linklab/geometry.hpp"

#include <cstdint>
#include <random>

namespace linklab {

/// splitmix64 finaliser; derives independent child seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic generator. Draws go through the raw engine output (not the
/// std distributions) so a seed yields the same values on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)
      return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do
      x = engine_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Uniform point of the grid lo + k (hi - lo) / steps, k = 0..steps.
  Rational grid(const Rational &lo, const Rational &hi, std::int64_t steps = 1 << 20) {
    Rational k(static_cast<long>(uniform(0, steps)));
    return lo + (hi - lo) * k / Rational(static_cast<long>(steps));
  }

  template <std::size_t D> Point<D> grid_point(const Box<D> &box) {
    Point<D> p;
    for (std::size_t i = 0; i < D; ++i)
      p[i] = grid(box.lo[i], box.hi[i]);
    return p;
  }

  template <std::size_t D> Point<D> integer_point(std::int64_t bound) {
    Point<D> p;
    for (std::size_t i = 0; i < D; ++i)
      p[i] = Rational(static_cast<long>(uniform(-bound, bound)));
    return p;
  }

  std::uint64_t next() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

/// Bounding box grown by `factor` times its largest side on every side.
template <std::size_t D> Box<D> inflated_box(std::span<const Point<D>> pts, long factor = 3) {
  auto box = bounding_box(pts);
  Rational diameter = 0;
  for (std::size_t i = 0; i < D; ++i)
    if (box.hi[i] - box.lo[i] > diameter)
      diameter = box.hi[i] - box.lo[i];
  if (diameter == 0)
    diameter = 1;
  for (std::size_t i = 0; i < D; ++i) {
    box.lo[i] -= factor * diameter;
    box.hi[i] += factor * diameter;
  }
  return box;
}

} // namespace linklab
