#ifndef RECTADD_COMMANDS_HPP
#define RECTADD_COMMANDS_HPP

#include "rectadd/geometry.hpp"
#include "rectadd/numeric.hpp"
#include "rectadd/rectfn.hpp"
#include "rectadd/report.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace rectadd {

/// [0,1] x [1, sqrt2]: rational bottom edge, irrational top edge.
Rect canonical_negative_rect();

struct CounterexampleOptions {
    unsigned min_order = 0;
    unsigned max_order = 12;
    std::size_t samples = 1000;
    std::uint64_t seed = 7;
    /// Mesh indices k, m are drawn from [-index_bound, index_bound].
    std::int64_t index_bound = 1 << 15;
    RectFunction function = RectFunction::counterexample();
};

/// Samples dyadic squares and checks F(Q_d) = |Q_d| > 0 on each, then checks
/// F < 0 on the canonical negative rectangle.
Report cmd_counterexample(const CounterexampleOptions& opts);

struct DecomposeOptions {
    Rect rect = Rect(QNum(0), QNum(8), QNum(0), QNum(5));
    std::size_t max_steps = 20;
    std::optional<std::string> svg_path;
    RectFunction function = RectFunction::counterexample();
};

Report cmd_decompose(const DecomposeOptions& opts);

/// Above this many squares per order, the cover sum is taken over the cover's
/// bounding block instead of square by square.
inline constexpr unsigned long kCoverEnumerationLimit = 1'000'000;

struct DyadicApproxOptions {
    Rect rect = canonical_negative_rect();
    RectFunction function = RectFunction::product();
    unsigned max_order = 10;
};

/// Gap F(I) - S_n with S_n the sum of F over the order-n inner dyadic cover.
Report cmd_dyadic_approx(const DyadicApproxOptions& opts);

/// The inner-approximation bound 2^(1-n) (w + h) + 4 * 4^-n.
QNum inner_cover_bound(const Rect& r, unsigned order);

struct ProbeOptions {
    RectFunction function = RectFunction::product();
    QNum x = QNum(Rational(BigInt(1), BigInt(2)));
    QNum y = QNum(Rational(BigInt(1), BigInt(2)));
    Rational alpha = Rational(1);
    unsigned depth = 6;
    unsigned offsets = 4;
    std::optional<Rect> reference;
};

/// Every finding is evidence-only. Throws std::invalid_argument on bad alpha.
Report cmd_probe(const ProbeOptions& opts);

struct ProptestOptions {
    std::string suite = "field";
    std::size_t cases = 500;
    std::uint64_t seed = 1;
};

/// Throws std::invalid_argument for unknown suites.
Report cmd_proptest(const ProptestOptions& opts);

}  // namespace rectadd

#endif  // RECTADD_COMMANDS_HPP
