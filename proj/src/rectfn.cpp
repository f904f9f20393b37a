#include "rectadd/rectfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rectadd {

bool point_fn::Custom::KeyLess::operator()(const Key& p, const Key& q) const {
    const QNumKeyLess less;
    if (less(p.first, q.first)) return true;
    if (less(q.first, p.first)) return false;
    return less(p.second, q.second);
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

QNum evaluate_point(const PointFunction& f, const QNum& x, const QNum& y) {
    return std::visit(overloaded{
                          [&](const point_fn::Counterexample&) { return y.is_rational() ? x * y : QNum(1); },
                          [&](const point_fn::Product&) { return x * y; },
                          [&](const point_fn::Constant& c) { return c.value; },
                          [&](const point_fn::Custom& c) {
                              auto it = c.table.find({x, y});
                              return it == c.table.end() ? QNum(0) : it->second;
                          },
                      },
                      f);
}

RectFunction RectFunction::constant(QNum c) {
    std::string label = "constant:" + c.to_string();
    return {point_fn::Constant{std::move(c)}, std::move(label)};
}

RectFunction RectFunction::custom(point_fn::Custom table, std::string label) {
    return {std::move(table), std::move(label)};
}

RectFunction RectFunction::parse(std::string_view name) {
    if (name == "counterexample") return counterexample();
    if (name == "product") return product();
    constexpr std::string_view prefix = "constant:";
    if (name.substr(0, prefix.size()) == prefix) {
        return constant(QNum::parse(name.substr(prefix.size())));
    }
    throw ParseError("unknown function '" + std::string(name) + "' (expected counterexample, product, constant:<qnum>)");
}

QNum RectFunction::operator()(const Rect& r) const { return corner_difference(*this, r); }

QNum corner_difference(const RectFunction& F, const Rect& r) {
    const auto& f = F.point;
    return evaluate_point(f, r.x2(), r.y2()) + evaluate_point(f, r.x1(), r.y1()) -
           evaluate_point(f, r.x1(), r.y2()) - evaluate_point(f, r.x2(), r.y1());
}

QNum check_additivity(const RectFunction& F, const Rect& r, Axis axis, const QNum& c) {
    auto [first, second] = split(r, axis, c);
    return F(first) + F(second) - F(r);
}

std::vector<RectValue> strong_continuity_witness(const RectFunction& F, unsigned k) {
    if (k == 0) throw std::invalid_argument("strong_continuity_witness: k must be >= 1");
    const QNum excess = QNum::sqrt2() - QNum(1);
    std::vector<RectValue> out;
    out.reserve(k);
    for (unsigned j = 1; j <= k; ++j) {
        const QNum top = QNum(1) + excess * QNum(pow2(-static_cast<long>(j)));
        Rect r(QNum(0), QNum(1), QNum(1), top);
        QNum v = F(r);
        out.push_back({std::move(r), std::move(v)});
    }
    return out;
}

std::vector<RectValue> weak_continuity_probe(const RectFunction& F, const QNum& cx, const QNum& cy, unsigned k) {
    if (k == 0) throw std::invalid_argument("weak_continuity_probe: k must be >= 1");
    std::vector<RectValue> out;
    out.reserve(k);
    for (unsigned j = 1; j <= k; ++j) {
        const QNum half(pow2(-static_cast<long>(j) - 1));
        Rect r(cx - half, cx + half, cy - half, cy + half);
        QNum v = F(r);
        out.push_back({std::move(r), std::move(v)});
    }
    return out;
}

Rational van_der_corput(unsigned i) {
    if (i == 0) throw std::invalid_argument("van_der_corput: index starts at 1");
    BigInt num = 0;
    BigInt den = 1;
    while (i != 0) {
        num = 2 * num + (i & 1U);
        den *= 2;
        i >>= 1U;
    }
    return Rational(num, den);
}

std::optional<QNum> dyadic_area_power(unsigned scale, const Rational& alpha) {
    // |Q| = 2^(-2 scale), so |Q|^alpha = 2^e with e = -2 scale alpha. That is
    // in Q(sqrt2) exactly when 2e is an integer.
    const Rational e = Rational(-2L * static_cast<long>(scale)) * alpha;
    const Rational twice = Rational(2) * e;
    if (!twice.is_integer()) return std::nullopt;
    const long t = twice.numerator().get_si();
    BigInt half;
    BigInt two(t);
    mpz_fdiv_q_2exp(half.get_mpz_t(), two.get_mpz_t(), 1);
    QNum out(pow2(half.get_si()));
    if (t % 2 != 0) out *= QNum::sqrt2();
    return out;
}

double ProbeScale::min_quotient() const {
    double best = std::numeric_limits<double>::infinity();
    const bool all_exact =
        std::all_of(samples.begin(), samples.end(), [](const ProbeSample& s) { return s.quotient.has_value(); });
    if (all_exact && !samples.empty()) {
        const QNum* lowest = &*samples.front().quotient;
        for (const auto& s : samples) {
            if (*s.quotient < *lowest) lowest = &*s.quotient;
        }
        return lowest->to_double();
    }
    for (const auto& s : samples) best = std::min(best, s.approx_quotient);
    return best;
}

bool ProbeReport::exact() const {
    return std::all_of(scales.begin(), scales.end(), [](const ProbeScale& sc) {
        return std::all_of(sc.samples.begin(), sc.samples.end(),
                           [](const ProbeSample& s) { return s.quotient.has_value(); });
    });
}

ProbeReport liminf_quotient_probe(const RectFunction& F, const QNum& x, const QNum& y, const Rational& alpha,
                                  unsigned depth, unsigned offsets_per_scale, const std::optional<Rect>& reference) {
    if (alpha < Rational(0) || alpha > Rational(2)) {
        throw std::invalid_argument("liminf_quotient_probe: alpha must lie in [0,2]");
    }
    if (depth == 0 || offsets_per_scale == 0) {
        throw std::invalid_argument("liminf_quotient_probe: depth and offsets must be >= 1");
    }
    ProbeReport report{x, y, alpha, reference, {}};
    report.scales.reserve(depth);
    for (unsigned j = 1; j <= depth; ++j) {
        const QNum side(pow2(-static_cast<long>(j)));
        const std::optional<QNum> denom = dyadic_area_power(j, alpha);
        ProbeScale scale{j, QNum(2) * side * side, {}};
        scale.samples.reserve(offsets_per_scale);
        for (unsigned i = 1; i <= offsets_per_scale; ++i) {
            const QNum t(van_der_corput(i));
            const QNum x0 = x - t * side;
            const QNum y0 = y - (QNum(1) - t) * side;
            Rect sq = Rect::square(x0, y0, side);
            QNum value = F(sq);
            ProbeSample sample{sq, value, std::nullopt, 0.0, std::nullopt};
            if (denom) {
                sample.quotient = value / *denom;
                sample.approx_quotient = sample.quotient->to_double();
            } else {
                const double a = alpha.to_double();
                sample.approx_quotient = value.to_double() / std::pow(2.0, -2.0 * j * a);
            }
            if (reference) sample.inside_reference = reference->contains(sq);
            scale.samples.push_back(std::move(sample));
        }
        report.scales.push_back(std::move(scale));
    }
    return report;
}

}  // namespace rectadd
