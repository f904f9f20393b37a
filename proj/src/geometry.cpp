#include "rectadd/geometry.hpp"

#include <stdexcept>

namespace rectadd {

Rect::Rect(QNum x1, QNum x2, QNum y1, QNum y2)
    : x1_(std::move(x1)), x2_(std::move(x2)), y1_(std::move(y1)), y2_(std::move(y2)) {
    if (!(x1_ < x2_) || !(y1_ < y2_)) {
        throw std::invalid_argument("degenerate rectangle " + to_string());
    }
}

bool Rect::contains(const QNum& x, const QNum& y) const { return x1_ <= x && x <= x2_ && y1_ <= y && y <= y2_; }

bool Rect::contains(const Rect& o) const {
    return x1_ <= o.x1_ && o.x2_ <= x2_ && y1_ <= o.y1_ && o.y2_ <= y2_;
}

std::string Rect::to_string() const {
    return "[" + x1_.to_string() + "," + x2_.to_string() + "]x[" + y1_.to_string() + "," + y2_.to_string() + "]";
}

namespace {

std::pair<QNum, QNum> parse_interval(std::string_view text, std::string_view whole) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw ParseError("malformed interval in rectangle literal '" + std::string(whole) + "'");
    }
    text = text.substr(1, text.size() - 2);
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError("interval needs exactly two endpoints in '" + std::string(whole) + "'");
    }
    return {QNum::parse(text.substr(0, comma)), QNum::parse(text.substr(comma + 1))};
}

}  // namespace

Rect Rect::parse(std::string_view text) {
    const auto cross = text.find("]x[");
    if (cross == std::string_view::npos) {
        throw ParseError("expected '[x1,x2]x[y1,y2]', got '" + std::string(text) + "'");
    }
    auto [x1, x2] = parse_interval(text.substr(0, cross + 1), text);
    auto [y1, y2] = parse_interval(text.substr(cross + 2), text);
    if (!(x1 < x2) || !(y1 < y2)) {
        throw ParseError("degenerate rectangle '" + std::string(text) + "'");
    }
    return Rect(std::move(x1), std::move(x2), std::move(y1), std::move(y2));
}

QNum area(const Rect& r) { return r.width() * r.height(); }

QNum diameter_sq(const Rect& r) {
    const QNum w = r.width();
    const QNum h = r.height();
    return w * w + h * h;
}

std::pair<Rect, Rect> split(const Rect& r, Axis axis, const QNum& c) {
    if (axis == Axis::vertical) {
        if (!(r.x1() < c && c < r.x2())) {
            throw std::invalid_argument("split coordinate " + c.to_string() + " not inside " + r.to_string());
        }
        return {Rect(r.x1(), c, r.y1(), r.y2()), Rect(c, r.x2(), r.y1(), r.y2())};
    }
    if (!(r.y1() < c && c < r.y2())) {
        throw std::invalid_argument("split coordinate " + c.to_string() + " not inside " + r.to_string());
    }
    return {Rect(r.x1(), r.x2(), r.y1(), c), Rect(r.x1(), r.x2(), c, r.y2())};
}

Rect DyadicSquare::to_rect() const {
    const Rational s = pow2(-static_cast<long>(order));
    const Rational x = Rational(k) * s;
    const Rational y = Rational(m) * s;
    return Rect(QNum(x), QNum(x + s), QNum(y), QNum(y + s));
}

std::optional<DyadicSquare> as_dyadic_square(const Rect& r) {
    if (!r.x1().is_dyadic() || !r.x2().is_dyadic() || !r.y1().is_dyadic() || !r.y2().is_dyadic()) {
        return std::nullopt;
    }
    if (!r.is_square()) return std::nullopt;
    const Rational side = r.width().rational_part();
    // side must be 2^-n with n >= 0
    if (side.numerator() != 1) return std::nullopt;
    const BigInt den = side.denominator();
    const auto order = static_cast<unsigned>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
    const Rational kq = r.x1().rational_part() / side;
    const Rational mq = r.y1().rational_part() / side;
    if (!kq.is_integer() || !mq.is_integer()) return std::nullopt;
    return DyadicSquare{order, kq.numerator(), mq.numerator()};
}

QNum DyadicCover::area() const {
    return QNum(Rational(count()) * pow2(-2 * static_cast<long>(order)));
}

std::optional<Rect> DyadicCover::hull() const {
    if (empty()) return std::nullopt;
    const Rational s = pow2(-static_cast<long>(order));
    return Rect(QNum(Rational(k_begin) * s), QNum(Rational(k_end) * s), QNum(Rational(m_begin) * s),
                QNum(Rational(m_end) * s));
}

DyadicCover dyadic_cover_extent(const Rect& r, unsigned order) {
    const QNum scale(pow2(static_cast<long>(order)));
    DyadicCover c;
    c.order = order;
    c.k_begin = (r.x1() * scale).ceil();
    c.k_end = (r.x2() * scale).floor();
    c.m_begin = (r.y1() * scale).ceil();
    c.m_end = (r.y2() * scale).floor();
    return c;
}

std::vector<DyadicSquare> dyadic_inner_cover(const Rect& r, unsigned order) {
    const DyadicCover c = dyadic_cover_extent(r, order);
    std::vector<DyadicSquare> out;
    if (c.empty()) return out;
    out.reserve(c.count().get_ui());
    for (BigInt m = c.m_begin; m < c.m_end; ++m) {
        for (BigInt k = c.k_begin; k < c.k_end; ++k) {
            out.push_back(DyadicSquare{order, k, m});
        }
    }
    return out;
}

}  // namespace rectadd
