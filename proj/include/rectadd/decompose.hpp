#ifndef RECTADD_DECOMPOSE_HPP
#define RECTADD_DECOMPOSE_HPP

#include "rectadd/geometry.hpp"
#include "rectadd/numeric.hpp"
#include "rectadd/rectfn.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rectadd {

/// Equal squares packed in one greedy step.
struct Step {
    QNum side;
    BigInt count;
    std::vector<Rect> squares;
};

struct StepResult {
    Step step;
    std::optional<Rect> remainder;
};

/// Packs floor(long/short) squares of the short side from the min-coordinate
/// corner along the longer axis; the leftover strip (if any) sits at the
/// max-coordinate end. A square packs itself.
StepResult greedy_step(const Rect& r);

struct Decomposition {
    Rect original;
    std::vector<Step> steps;
    std::optional<Rect> remainder;
    bool terminated = false;
    /// l_0 (longer side of the original), l_1 (shorter side), then the shorter
    /// side at entry to each later step; when a remainder is left, its shorter
    /// side closes the trace.
    std::vector<QNum> sides;

    BigInt square_count() const;
    std::vector<BigInt> counts() const;
};

/// Iterates greedy_step on successive remainders, at most max_steps times.
/// Throws std::invalid_argument when max_steps == 0.
Decomposition decompose(const Rect& r, std::size_t max_steps);

struct HalvingCheck {
    std::size_t n;
    enum class Kind { monotone, halving } kind;
    QNum lhs;  // sides[n+1] or sides[n+2]
    QNum rhs;  // sides[n] or sides[n]/2
    bool holds;
};

struct HalvingCertificate {
    bool holds = true;
    std::vector<HalvingCheck> checks;
};

/// sides[n+1] <= sides[n] and sides[n+2] <= sides[n]/2 for every n.
HalvingCertificate verify_halving(const std::vector<QNum>& sides);
inline HalvingCertificate verify_halving(const Decomposition& d) { return verify_halving(d.sides); }

/// sides[n] <= sides[1] * 2^-floor((n-1)/2) for n >= 1.
bool verify_geometric_decay(const std::vector<QNum>& sides);

/// Sum of the areas of all squares and the remainder minus the original area.
QNum tiling_discrepancy(const Decomposition& d);

/// Pairwise interior-disjointness and containment of every piece.
bool pieces_disjoint_and_contained(const Decomposition& d);

/// diameter_sq(R_n) <= 2 l_n^2 for the final remainder (vacuous without one).
bool remainder_diameter_bounded(const Decomposition& d);

/// Sum of F over every packed square plus F(remainder).
QNum telescope(const RectFunction& F, const Decomposition& d);

/// Partial quotients of longer/shorter side by exact floor-and-invert.
/// Throws std::invalid_argument when max_terms == 0.
std::vector<BigInt> continued_fraction_counts(const Rect& r, std::size_t max_terms);

}  // namespace rectadd

#endif  // RECTADD_DECOMPOSE_HPP
