#include "rectadd/decompose.hpp"

#include <stdexcept>

namespace rectadd {

StepResult greedy_step(const Rect& r) {
    const QNum w = r.width();
    const QNum h = r.height();
    if (w == h) {
        return {Step{w, BigInt(1), {r}}, std::nullopt};
    }
    const bool wide = w > h;
    const QNum& longer = wide ? w : h;
    const QNum& shorter = wide ? h : w;
    const BigInt count = (longer / shorter).floor();
    const QNum packed = QNum(Rational(count)) * shorter;

    Step step{shorter, count, {}};
    step.squares.reserve(count.get_ui());
    QNum offset = wide ? r.x1() : r.y1();
    for (BigInt i = 0; i < count; ++i) {
        if (wide) {
            step.squares.push_back(Rect::square(offset, r.y1(), shorter));
        } else {
            step.squares.push_back(Rect::square(r.x1(), offset, shorter));
        }
        offset += shorter;
    }
    if (packed == longer) {
        return {std::move(step), std::nullopt};
    }
    Rect rest = wide ? Rect(offset, r.x2(), r.y1(), r.y2()) : Rect(r.x1(), r.x2(), offset, r.y2());
    return {std::move(step), std::move(rest)};
}

BigInt Decomposition::square_count() const {
    BigInt total = 0;
    for (const auto& s : steps) total += s.count;
    return total;
}

std::vector<BigInt> Decomposition::counts() const {
    std::vector<BigInt> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.count);
    return out;
}

Decomposition decompose(const Rect& r, std::size_t max_steps) {
    if (max_steps == 0) throw std::invalid_argument("decompose: max_steps must be >= 1");
    Decomposition d{r, {}, std::nullopt, false, {}};
    d.sides.push_back(max(r.width(), r.height()));
    d.sides.push_back(min(r.width(), r.height()));

    Rect current = r;
    while (d.steps.size() < max_steps) {
        StepResult res = greedy_step(current);
        d.steps.push_back(std::move(res.step));
        if (!res.remainder) {
            d.terminated = true;
            return d;
        }
        current = *res.remainder;
        d.sides.push_back(min(current.width(), current.height()));
    }
    d.remainder = current;
    return d;
}

HalvingCertificate verify_halving(const std::vector<QNum>& sides) {
    HalvingCertificate cert;
    const QNum half(Rational(BigInt(1), BigInt(2)));
    for (std::size_t n = 0; n + 1 < sides.size(); ++n) {
        HalvingCheck mono{n, HalvingCheck::Kind::monotone, sides[n + 1], sides[n], sides[n + 1] <= sides[n]};
        cert.holds = cert.holds && mono.holds;
        cert.checks.push_back(std::move(mono));
        if (n + 2 < sides.size()) {
            QNum bound = sides[n] * half;
            const bool ok = sides[n + 2] <= bound;
            cert.holds = cert.holds && ok;
            cert.checks.push_back({n, HalvingCheck::Kind::halving, sides[n + 2], std::move(bound), ok});
        }
    }
    return cert;
}

bool verify_geometric_decay(const std::vector<QNum>& sides) {
    if (sides.size() < 2) return true;
    for (std::size_t n = 1; n < sides.size(); ++n) {
        const QNum bound = sides[1] * QNum(pow2(-static_cast<long>((n - 1) / 2)));
        if (sides[n] > bound) return false;
    }
    return true;
}

QNum tiling_discrepancy(const Decomposition& d) {
    QNum total(0);
    for (const auto& s : d.steps) {
        for (const auto& sq : s.squares) total += area(sq);
    }
    if (d.remainder) total += area(*d.remainder);
    return total - area(d.original);
}

bool pieces_disjoint_and_contained(const Decomposition& d) {
    // Walk the steps: each step's squares must form a contiguous run from the
    // min corner of the current region spanning its full short extent; what
    // is left becomes the next region. The final region must be the remainder.
    std::optional<Rect> region = d.original;
    for (const auto& step : d.steps) {
        if (!region || step.squares.empty()) return false;
        const Rect& cur = *region;
        const bool wide = step.squares.front().height() == cur.height() && step.squares.front().y1() == cur.y1();
        QNum edge = wide ? cur.x1() : cur.y1();
        for (const auto& sq : step.squares) {
            if (!sq.is_square() || sq.width() != step.side) return false;
            if (wide) {
                if (sq.x1() != edge || sq.y1() != cur.y1() || sq.y2() != cur.y2()) return false;
                edge = sq.x2();
            } else {
                if (sq.y1() != edge || sq.x1() != cur.x1() || sq.x2() != cur.x2()) return false;
                edge = sq.y2();
            }
        }
        const QNum& far = wide ? cur.x2() : cur.y2();
        if (edge > far) return false;
        if (edge == far) {
            region.reset();
        } else {
            region = wide ? Rect(edge, cur.x2(), cur.y1(), cur.y2()) : Rect(cur.x1(), cur.x2(), edge, cur.y2());
        }
    }
    return region == d.remainder;
}

bool remainder_diameter_bounded(const Decomposition& d) {
    if (!d.remainder) return true;
    // The remainder's largest side is the side packed in the last step.
    const QNum& ln = d.steps.back().side;
    return diameter_sq(*d.remainder) <= QNum(2) * ln * ln;
}

QNum telescope(const RectFunction& F, const Decomposition& d) {
    QNum total(0);
    for (const auto& s : d.steps) {
        for (const auto& sq : s.squares) total += F(sq);
    }
    if (d.remainder) total += F(*d.remainder);
    return total;
}

std::vector<BigInt> continued_fraction_counts(const Rect& r, std::size_t max_terms) {
    if (max_terms == 0) throw std::invalid_argument("continued_fraction_counts: max_terms must be >= 1");
    QNum x = max(r.width(), r.height()) / min(r.width(), r.height());
    std::vector<BigInt> out;
    while (out.size() < max_terms) {
        BigInt a = x.floor();
        const QNum frac = x - QNum(Rational(a));
        out.push_back(std::move(a));
        if (frac.is_zero()) break;
        x = QNum(1) / frac;
    }
    return out;
}

}  // namespace rectadd
