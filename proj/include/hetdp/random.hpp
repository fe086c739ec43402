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

#ifndef HETDP_RANDOM_HPP_
#define HETDP_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "hetdp/core.hpp"

namespace hetdp {

// Deterministic generator. All distribution mappings are implemented here
// (not via std:: distributions) so that a given seed yields the same draw
// sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform strictly inside (0,1); 53-bit resolution.
  double uniform01();

  // Uniform on {0, ..., bound-1} by rejection; bound >= 1.
  std::uint64_t uniform_int(std::uint64_t bound);

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 gen_;
};

// Root seed plus a family of independent substreams. stream(i) depends only
// on (seed, i), so consumers may draw from different substreams in any order
// (or in parallel) and still reproduce bit-identical results.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  Rng stream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
};

// Stateless 64-bit mixer; used to derive decorrelated seeds from
// (seed, salt) pairs.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// Laplace(0, scale) by inverse CDF on a single uniform draw.
// scale == 0 returns exactly 0; scale < 0 throws.
double laplace_sample(double scale, Rng& rng);

// Uniformly random permutation of {0..n-1} (Fisher-Yates).
std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

// Dataset with records uniformly shuffled.
Dataset permute_uniform(const Dataset& data, Rng& rng);

}  // namespace hetdp

#endif  // HETDP_RANDOM_HPP_
