// Copyright (c) 2026 the dme authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dme {

// mt19937_64 with hand-rolled draws. The engine itself is fully specified by
// the standard, but the <random> distributions are not, so shuffling and
// uniform sampling are implemented here to keep runs reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). n must be positive.
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(n));
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace dme
