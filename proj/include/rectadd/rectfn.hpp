#ifndef RECTADD_RECTFN_HPP
#define RECTADD_RECTFN_HPP

#include "rectadd/geometry.hpp"
#include "rectadd/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace rectadd {

namespace point_fn {

/// f(x,y) = 1 when y is irrational, x*y when y is rational.
struct Counterexample {};
/// f(x,y) = x*y; its corner difference is the area.
struct Product {};
struct Constant {
    QNum value;
};
/// Finite table, zero off-table.
struct Custom {
    using Key = std::pair<QNum, QNum>;
    struct KeyLess {
        bool operator()(const Key& p, const Key& q) const;
    };
    std::map<Key, QNum, KeyLess> table;
};

}  // namespace point_fn

using PointFunction = std::variant<point_fn::Counterexample, point_fn::Product, point_fn::Constant, point_fn::Custom>;

QNum evaluate_point(const PointFunction& f, const QNum& x, const QNum& y);

/// An additive function of rectangles given as the corner difference of a
/// point function.
struct RectFunction {
    PointFunction point;
    std::string label;

    static RectFunction counterexample() { return {point_fn::Counterexample{}, "counterexample"}; }
    static RectFunction product() { return {point_fn::Product{}, "product"}; }
    static RectFunction constant(QNum c);
    static RectFunction custom(point_fn::Custom table, std::string label = "custom");

    /// `counterexample`, `product` or `constant:<qnum>`.
    static RectFunction parse(std::string_view name);

    QNum operator()(const Rect& r) const;
};

/// f(x2,y2) + f(x1,y1) - f(x1,y2) - f(x2,y1)
QNum corner_difference(const RectFunction& F, const Rect& r);

/// F(I1) + F(I2) - F(I) for the split of I at c; zero certifies additivity.
QNum check_additivity(const RectFunction& F, const Rect& r, Axis axis, const QNum& c);

struct RectValue {
    Rect rect;
    QNum value;
};

/// I_j = [0,1] x [1, 1 + (sqrt2 - 1) / 2^j] for j = 1..k, each with F(I_j).
/// Throws std::invalid_argument when k == 0.
std::vector<RectValue> strong_continuity_witness(const RectFunction& F, unsigned k);

/// Squares of side 2^-j centered at (cx, cy) for j = 1..k.
std::vector<RectValue> weak_continuity_probe(const RectFunction& F, const QNum& cx, const QNum& cy, unsigned k);

/// |Q|^alpha for a square of side 2^-scale, when it lies in Q(sqrt2).
std::optional<QNum> dyadic_area_power(unsigned scale, const Rational& alpha);

struct ProbeSample {
    Rect square;
    QNum value;  // F(Q)
    std::optional<QNum> quotient;   // exact F(Q)/|Q|^alpha when representable
    double approx_quotient = 0.0;   // always filled; authoritative only when quotient is empty
    std::optional<bool> inside_reference;  // containment in the reference rectangle, if given
};

struct ProbeScale {
    unsigned scale = 0;  // side 2^-scale
    QNum diameter_sq;
    std::vector<ProbeSample> samples;

    /// Smallest sampled quotient (by exact value when every quotient is exact).
    double min_quotient() const;
};

struct ProbeReport {
    QNum x, y;
    Rational alpha;
    std::optional<Rect> reference;
    std::vector<ProbeScale> scales;  // diameter_sq strictly decreasing
    bool exact() const;
};

/// Samples squares of side 2^-j, j = 1..depth, that contain (x, y). At each
/// scale the lower-left corner is (x - t_i s, y - (1 - t_i) s) where t_i runs
/// through the base-2 van der Corput sequence 1/2, 1/4, 3/4, 1/8, ... so the
/// first placement is centered and all offsets are dyadic.
/// Throws std::invalid_argument for alpha outside [0,2] or zero depth/offsets.
ProbeReport liminf_quotient_probe(const RectFunction& F, const QNum& x, const QNum& y, const Rational& alpha,
                                  unsigned depth, unsigned offsets_per_scale,
                                  const std::optional<Rect>& reference = std::nullopt);

/// i-th element (i >= 1) of the base-2 van der Corput sequence.
Rational van_der_corput(unsigned i);

}  // namespace rectadd

#endif  // RECTADD_RECTFN_HPP
