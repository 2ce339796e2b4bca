#pragma once

#include <cstdint>
#include <random>

#include "linrank/field.hpp"

namespace linrank {

// Seeded generator for randomized suites. mt19937_64 keeps the streams
// identical across platforms; the default seed is documented in docs/format.md.
class Rng {
  public:
    static constexpr std::uint64_t kDefaultSeed = 1729;

    explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform-ish draw in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

    FieldElement element(const FieldCtx& ctx) { return ctx.decode(below(ctx.order())); }

    FieldElement nonzero_element(const FieldCtx& ctx) {
        return ctx.decode(1 + below(ctx.order() - 1));
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace linrank
