// Copyright 2026 The HetDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hetdp/random.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hetdp {

namespace {

// SplitMix64 finalizer; full-period bijective mixer.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

double Rng::uniform01() {
  // 53-bit mantissa shifted to the open interval: never exactly 0 or 1.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_int bound must be >= 1");
  // Rejection below 2^64 mod bound keeps the result exactly uniform.
  const std::uint64_t rem = (-bound) % bound;
  std::uint64_t r = next_u64();
  while (r < rem) r = next_u64();
  return r % bound;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // Asymmetric in (seed, salt) and bijective in either argument with the
  // other fixed, so distinct (seed, salt) pairs cannot collide trivially.
  return mix64(seed + mix64(salt + 0x9E3779B97F4A7C15ULL));
}

Rng RandomSource::stream(std::uint64_t index) const {
  return Rng(mix_seed(seed_, index));
}

double laplace_sample(double scale, Rng& rng) {
  if (std::isnan(scale) || scale < 0.0) {
    throw std::invalid_argument("laplace scale must be non-negative");
  }
  if (scale == 0.0) return 0.0;
  const double v = rng.uniform01() - 0.5;  // in (-1/2, 1/2)
  const double sgn = v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
  return -scale * sgn * std::log1p(-2.0 * std::abs(v));
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.uniform_int(i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

Dataset permute_uniform(const Dataset& data, Rng& rng) {
  return data.permuted(random_permutation(data.size(), rng));
}

}  // namespace hetdp
