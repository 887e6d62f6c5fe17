#pragma once

#include <sincpow/rational.hpp>

#include <functional>
#include <random>
#include <vector>

// Brute-force helpers kept independent of the library's formula paths.
namespace testsupport {

// Visits every set partition of {0..n-1}; blocks appear in creation order.
inline void for_each_partition(
    unsigned n,
    const std::function<void(const std::vector<std::vector<unsigned>>&)>& fn) {
  std::vector<std::vector<unsigned>> blocks;
  std::function<void(unsigned)> place = [&](unsigned i) {
    if (i == n) {
      fn(blocks);
      return;
    }
    const std::size_t existing = blocks.size();
    for (std::size_t b = 0; b < existing; ++b) {
      blocks[b].push_back(i);
      place(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    place(i + 1);
    blocks.pop_back();
  };
  place(0);
}

inline sincpow::Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 12);
  return sincpow::make_rational(num(rng), den(rng));
}

inline sincpow::Rational random_nonzero_rational(std::mt19937& rng) {
  for (;;) {
    sincpow::Rational q = random_rational(rng);
    if (q != 0) return q;
  }
}

}  // namespace testsupport
