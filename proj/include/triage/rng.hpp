// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 triage-reduce contributors

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace triage {

// Seeded generator with portable draw helpers. std::shuffle and the standard
// distributions are implementation-defined, so shuffling and bounded draws are
// spelled out here; mt19937_64 output itself is pinned by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform-ish integer in [0, n). Modulo bias is negligible for the corpus
  // sizes involved and keeps the draw portable.
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(gen_() % static_cast<std::uint64_t>(n));
  }

  // Uniform double in [0, 1).
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace triage
