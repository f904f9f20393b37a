#include "rectadd/proptest.hpp"

#include "rectadd/decompose.hpp"

#include <cmath>
#include <stdexcept>

namespace rectadd::gen {

namespace {

std::int64_t numerator_bound(int size) { return 1 + size / 5; }
std::int64_t denominator_bound(int size) { return 1 + size / 10; }

}  // namespace

Rational rational(Random& rng, int size) {
    const std::int64_t n = numerator_bound(size);
    const std::int64_t d = denominator_bound(size);
    return Rational(BigInt(static_cast<long>(rng.uniform(-n, n))), BigInt(static_cast<long>(rng.uniform(1, d))));
}

QNum qnum(Random& rng, int size) {
    Rational a = rational(rng, size);
    if (rng.coin()) return QNum(std::move(a));
    return QNum(std::move(a), rational(rng, size));
}

QNum positive_length(Random& rng, int size, bool allow_irrational) {
    const QNum lo(Rational(BigInt(1), BigInt(8)));
    const QNum hi(16);
    for (;;) {
        QNum q = allow_irrational ? qnum(rng, size) : QNum(rational(rng, size));
        if (lo <= q && q <= hi) return q;
    }
}

Rect rect(Random& rng, int size, bool allow_irrational) {
    QNum x = allow_irrational ? qnum(rng, size) : QNum(rational(rng, size));
    QNum y = allow_irrational ? qnum(rng, size) : QNum(rational(rng, size));
    QNum w = positive_length(rng, size, allow_irrational);
    QNum h = positive_length(rng, size, allow_irrational);
    return Rect(x, x + w, y, y + h);
}

QNum split_point(Random& rng, const Rect& r, Axis axis, int size) {
    const QNum& lo = axis == Axis::vertical ? r.x1() : r.y1();
    const QNum& hi = axis == Axis::vertical ? r.x2() : r.y2();
    // Either a dyadic-style fraction of the extent or an irrational one.
    const std::int64_t den = 2 + denominator_bound(size);
    QNum t(Rational(BigInt(static_cast<long>(rng.uniform(1, den - 1))), BigInt(static_cast<long>(den))));
    if (rng.coin()) {
        // t in (0,1) with a sqrt2 part: sqrt2 - 1 ~ 0.414 or 2 - sqrt2 ~ 0.586.
        t = rng.coin() ? QNum::sqrt2() - QNum(1) : QNum(2) - QNum::sqrt2();
    }
    return lo + t * (hi - lo);
}

RectFunction rect_function(Random& rng, const std::vector<std::pair<QNum, QNum>>& corners, int size) {
    switch (rng.uniform(0, 3)) {
        case 0: return RectFunction::counterexample();
        case 1: return RectFunction::product();
        case 2: return RectFunction::constant(qnum(rng, size));
        default: break;
    }
    point_fn::Custom table;
    for (const auto& c : corners) {
        if (rng.uniform(0, 3) != 0) table.table.emplace(c, qnum(rng, size));
    }
    return RectFunction::custom(std::move(table), "custom-table");
}

}  // namespace rectadd::gen

namespace rectadd {

namespace {

using Corners = std::vector<std::pair<QNum, QNum>>;

void add_corners(Corners& out, const Rect& r) {
    out.emplace_back(r.x1(), r.y1());
    out.emplace_back(r.x1(), r.y2());
    out.emplace_back(r.x2(), r.y1());
    out.emplace_back(r.x2(), r.y2());
}

int size_for(std::size_t i, std::size_t cases) {
    return 1 + static_cast<int>((99 * i) / std::max<std::size_t>(cases, 1));
}

std::string where(std::size_t i, int size) {
    return "case " + std::to_string(i) + " (size " + std::to_string(size) + "): ";
}

std::optional<std::string> field_case(Random& rng, int size) {
    const QNum p = gen::qnum(rng, size);
    const QNum q = gen::qnum(rng, size);
    const QNum r = gen::qnum(rng, size);
    const std::string args = "p=" + p.to_string() + " q=" + q.to_string() + " r=" + r.to_string();
    if ((p + q) + r != p + (q + r)) return "additive associativity fails for " + args;
    if ((p * q) * r != p * (q * r)) return "multiplicative associativity fails for " + args;
    if (p + q != q + p || p * q != q * p) return "commutativity fails for " + args;
    if (p * (q + r) != p * q + p * r) return "distributivity fails for " + args;
    if (!p.is_zero() && p * (QNum(1) / p) != QNum(1)) return "inverse fails for " + args;
    if ((p.sign() == 0) != p.is_zero()) return "zero test disagrees with sign for " + args;
    const double gap = p.to_double() - q.to_double();
    if (std::fabs(gap) > 1e-6 && (p - q).sign() != (gap > 0 ? 1 : -1)) return "order disagrees with float for " + args;
    const BigInt f = p.floor();
    if (!(QNum(Rational(f)) <= p && p < QNum(Rational(BigInt(f + 1))))) return "floor bracket fails for " + args;
    return std::nullopt;
}

std::optional<std::string> additivity_case(Random& rng, int size) {
    const Rect r = gen::rect(rng, size);
    const Axis axis = rng.coin() ? Axis::vertical : Axis::horizontal;
    const QNum c = gen::split_point(rng, r, axis, size);
    Corners corners;
    add_corners(corners, r);
    auto [a, b] = split(r, axis, c);
    add_corners(corners, a);
    add_corners(corners, b);
    const RectFunction F = gen::rect_function(rng, corners, size);
    const QNum gap = check_additivity(F, r, axis, c);
    if (!gap.is_zero()) {
        return F.label + " on " + r.to_string() + " split at " + c.to_string() + " leaves " + gap.to_string();
    }
    return std::nullopt;
}

constexpr std::size_t kPropertySteps = 50;

std::optional<std::string> tiling_case(Random& rng, int size) {
    const Rect r = gen::rect(rng, size);
    const Decomposition d = decompose(r, kPropertySteps);
    const QNum gap = tiling_discrepancy(d);
    if (!gap.is_zero()) return r.to_string() + " area discrepancy " + gap.to_string();
    if (!pieces_disjoint_and_contained(d)) return r.to_string() + " pieces overlap or escape the rectangle";
    if (d.terminated == d.remainder.has_value()) return r.to_string() + " termination flag inconsistent";
    return std::nullopt;
}

std::optional<std::string> halving_case(Random& rng, int size) {
    const Rect r = gen::rect(rng, size);
    const Decomposition d = decompose(r, kPropertySteps);
    if (!verify_halving(d).holds) return r.to_string() + " violates l_{n+2} <= l_n / 2";
    if (!verify_geometric_decay(d.sides)) return r.to_string() + " violates geometric decay";
    for (std::size_t n = 1; n + 1 < d.sides.size(); ++n) {
        if (!(d.sides[n + 1] < d.sides[n])) return r.to_string() + " side trace not strictly decreasing";
    }
    if (!remainder_diameter_bounded(d)) return r.to_string() + " remainder diameter exceeds sqrt2 * l_n";
    return std::nullopt;
}

std::optional<std::string> telescope_case(Random& rng, int size) {
    const Rect r = gen::rect(rng, size);
    const Decomposition d = decompose(r, kPropertySteps);
    Corners corners;
    add_corners(corners, r);
    for (const auto& s : d.steps) {
        for (const auto& sq : s.squares) add_corners(corners, sq);
    }
    if (d.remainder) add_corners(corners, *d.remainder);
    const RectFunction F = gen::rect_function(rng, corners, size);
    const QNum lhs = telescope(F, d);
    const QNum rhs = F(r);
    if (lhs != rhs) {
        return F.label + " on " + r.to_string() + ": telescoped " + lhs.to_string() + " != " + rhs.to_string();
    }
    return std::nullopt;
}

}  // namespace

SuiteResult run_suite(std::string_view suite, std::size_t cases, std::uint64_t seed) {
    SuiteResult result{std::string(suite), 0, std::nullopt};
    if (suite == "oracle") {
        for (long p = 2; p <= 60; ++p) {
            for (long q = 1; q < p; ++q) {
                const Rect r(QNum(0), QNum(p), QNum(0), QNum(q));
                const Decomposition d = decompose(r, 1000);
                ++result.cases_run;
                const auto cf = continued_fraction_counts(r, 1000);
                std::string label = std::to_string(p) + "x" + std::to_string(q);
                if (!d.terminated) {
                    result.counterexample = label + " did not terminate";
                } else if (d.counts() != cf) {
                    result.counterexample = label + " greedy counts differ from continued fraction";
                } else if (!tiling_discrepancy(d).is_zero()) {
                    result.counterexample = label + " tiling discrepancy";
                } else if (!verify_halving(d).holds) {
                    result.counterexample = label + " halving fails";
                }
                if (result.counterexample) return result;
            }
        }
        return result;
    }

    std::optional<std::string> (*body)(Random&, int) = nullptr;
    if (suite == "field") body = field_case;
    else if (suite == "additivity") body = additivity_case;
    else if (suite == "tiling") body = tiling_case;
    else if (suite == "halving") body = halving_case;
    else if (suite == "telescope") body = telescope_case;
    else throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");

    Random rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        const int size = size_for(i, cases);
        ++result.cases_run;
        if (auto failure = body(rng, size)) {
            result.counterexample = where(i, size) + *failure;
            return result;
        }
    }
    return result;
}

}  // namespace rectadd
