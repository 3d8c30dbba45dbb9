#pragma once

#include <random>
#include <vector>

#include "unimodal/polycore.hpp"

namespace testing_support {

using unimodal::Integer;
using unimodal::IntPoly;

inline IntPoly random_int_poly(std::mt19937_64& rng, std::size_t degree, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<Integer> c(degree + 1);
  for (auto& x : c) x = dist(rng);
  if (c.back() == 0) c.back() = hi != 0 ? hi : lo;
  return IntPoly(std::move(c));
}

inline IntPoly random_self_reciprocal(std::mt19937_64& rng, std::size_t degree, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<Integer> c(degree + 1);
  for (std::size_t j = 0; j <= degree / 2; ++j) {
    long v = dist(rng);
    while (j == 0 && v == 0) v = dist(rng);
    c[j] = v;
    c[degree - j] = v;
  }
  return IntPoly(std::move(c));
}

// Product of linear and quadratic integer factors.
inline IntPoly product(const std::vector<IntPoly>& factors) {
  IntPoly out{1};
  for (const auto& f : factors) out = out * f;
  return out;
}

}  // namespace testing_support
