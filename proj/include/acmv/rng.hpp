#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "acmv/types.hpp"

namespace acmv {

// splitmix64 finalizer; fixed so that derived seeds are stable across builds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Declared seed-mixing function: folds an ordered list of components into one
// sub-seed, so any sub-run (sample size, lambda index, repetition, ...) is
// independently re-executable from the master seed.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6C62272E07BB0142ull;
  for (std::uint64_t p : parts) h = splitmix64(h ^ splitmix64(p));
  return h;
}

inline OperatingPoint sample_point(const Bounds& b, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(b.lo, b.hi);
  OperatingPoint w;
  w.w1 = u(rng);
  w.w2 = u(rng);
  w.w3 = u(rng);
  return w;
}

} // namespace acmv
