#ifndef GWA_RNG_HPP
#define GWA_RNG_HPP

#include <cstdint>
#include <random>

#include "gwa/errors.hpp"

namespace gwa {

/// Seeded generator with platform-independent draws (mt19937_64 output is
/// pinned by the standard; the bounded draw avoids std::uniform_int_distribution,
/// whose mapping is implementation-defined).
class DetRng {
   public:
    explicit DetRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi]; exact uniformity is irrelevant here,
    /// reproducibility is not.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw InvalidInput("empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

   private:
    std::mt19937_64 engine_;
};

}  // namespace gwa

#endif
