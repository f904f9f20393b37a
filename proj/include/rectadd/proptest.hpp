#ifndef RECTADD_PROPTEST_HPP
#define RECTADD_PROPTEST_HPP

#include "rectadd/geometry.hpp"
#include "rectadd/numeric.hpp"
#include "rectadd/random.hpp"
#include "rectadd/rectfn.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rectadd::gen {

// Generators take a `size` in [1, 100] that scales coefficient bounds, so the
// earliest failing case of a run is also among the smallest.

Rational rational(Random& rng, int size);
/// Rational part always, sqrt2 part on a coin flip.
QNum qnum(Random& rng, int size);
/// Strictly positive element in [1/8, 16].
QNum positive_length(Random& rng, int size, bool allow_irrational = true);
Rect rect(Random& rng, int size, bool allow_irrational = true);
/// Split coordinate strictly inside the chosen extent.
QNum split_point(Random& rng, const Rect& r, Axis axis, int size);
/// One of the named built-ins or a random table over `corners`.
RectFunction rect_function(Random& rng, const std::vector<std::pair<QNum, QNum>>& corners, int size);

}  // namespace rectadd::gen

namespace rectadd {

inline constexpr std::string_view kSuites[] = {"additivity", "tiling", "halving", "oracle", "telescope", "field"};

struct SuiteResult {
    std::string suite;
    std::size_t cases_run = 0;
    /// Description of the first (smallest-size) failing case.
    std::optional<std::string> counterexample;

    bool passed() const { return !counterexample.has_value(); }
};

/// Runs a named invariant suite deterministically from `seed`. The oracle
/// suite is exhaustive over integer rectangles p x q, 1 <= q < p <= 60, and
/// ignores `cases`. Throws std::invalid_argument for unknown suite names.
SuiteResult run_suite(std::string_view suite, std::size_t cases, std::uint64_t seed);

}  // namespace rectadd

#endif  // RECTADD_PROPTEST_HPP
