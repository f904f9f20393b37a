#ifndef RECTADD_RANDOM_HPP
#define RECTADD_RANDOM_HPP

#include <cstdint>
#include <random>

namespace rectadd {

/// Seeded source with a fully specified algorithm: std::mt19937_64 (whose
/// output sequence the standard fixes) plus rejection sampling for bounded
/// integers. std::uniform_int_distribution is avoided because its mapping is
/// implementation-defined, which would make reports differ across platforms.
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
        if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
        std::uint64_t draw = next();
        while (draw >= limit) draw = next();
        return lo + static_cast<std::int64_t>(draw % span);
    }

    bool coin() { return (next() >> 63U) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace rectadd

#endif  // RECTADD_RANDOM_HPP
