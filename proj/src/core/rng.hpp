// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace glyphforge {

// xoshiro256** seeded through splitmix64. Self-contained so that streams
// are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) noexcept;

  uint64_t next() noexcept;

  // uniform in [0, bound), bound > 0; rejection sampling, unbiased
  uint64_t below(uint64_t bound) noexcept;

  // uniform in [lo, hi] inclusive
  int64_t range(int64_t lo, int64_t hi) noexcept;

  // uniform in [0, 1)
  double uniform() noexcept;

  bool chance(double p) noexcept { return uniform() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& v) noexcept {
    return v[static_cast<std::size_t>(below(v.size()))];
  }

  template <typename T>
  void shuffle(std::vector<T>& v) noexcept {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t s_[4];
};

// FNV-1a over the raw bytes; the stable per-sample seed derivation.
uint64_t stable_hash(std::string_view bytes) noexcept;
uint64_t stable_hash_mix(uint64_t seed, std::string_view tag, uint64_t index) noexcept;

}  // namespace glyphforge
