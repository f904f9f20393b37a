#ifndef RECTADD_GEOMETRY_HPP
#define RECTADD_GEOMETRY_HPP

#include "rectadd/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rectadd {

enum class Axis { vertical, horizontal };

/// Closed axis-parallel rectangle [x1,x2] x [y1,y2] with x1 < x2, y1 < y2.
class Rect {
public:
    /// Throws std::invalid_argument for degenerate or inverted extents.
    Rect(QNum x1, QNum x2, QNum y1, QNum y2);

    static Rect square(const QNum& x, const QNum& y, const QNum& side) { return Rect(x, x + side, y, y + side); }

    const QNum& x1() const { return x1_; }
    const QNum& x2() const { return x2_; }
    const QNum& y1() const { return y1_; }
    const QNum& y2() const { return y2_; }

    QNum width() const { return x2_ - x1_; }
    QNum height() const { return y2_ - y1_; }
    bool is_square() const { return width() == height(); }

    bool contains(const QNum& x, const QNum& y) const;
    bool contains(const Rect& other) const;

    friend bool operator==(const Rect&, const Rect&) = default;

    /// `[x1,x2]x[y1,y2]` with QNum literals.
    std::string to_string() const;
    static Rect parse(std::string_view text);

private:
    QNum x1_, x2_, y1_, y2_;
};

QNum area(const Rect& r);
QNum diameter_sq(const Rect& r);

/// Splits at coordinate `c` on the given axis: `vertical` cuts with the line
/// x = c, `horizontal` with y = c. The left or bottom piece comes first.
/// Throws std::invalid_argument unless c lies strictly inside the extent.
std::pair<Rect, Rect> split(const Rect& r, Axis axis, const QNum& c);

/// [k 2^-n, (k+1) 2^-n] x [m 2^-n, (m+1) 2^-n]
struct DyadicSquare {
    unsigned order = 0;
    BigInt k;
    BigInt m;

    Rect to_rect() const;
    QNum side() const { return QNum(pow2(-static_cast<long>(order))); }

    friend bool operator==(const DyadicSquare&, const DyadicSquare&) = default;
};

std::optional<DyadicSquare> as_dyadic_square(const Rect& r);

/// Index ranges of the order-n mesh squares contained in a rectangle:
/// columns k in [k_begin, k_end), rows m in [m_begin, m_end).
struct DyadicCover {
    unsigned order = 0;
    BigInt k_begin, k_end;
    BigInt m_begin, m_end;

    BigInt columns() const { return k_end > k_begin ? BigInt(k_end - k_begin) : BigInt(0); }
    BigInt rows() const { return m_end > m_begin ? BigInt(m_end - m_begin) : BigInt(0); }
    BigInt count() const { return columns() * rows(); }
    bool empty() const { return count() == 0; }
    /// Total covered area, count * 4^-n.
    QNum area() const;
    /// The union of the cover as a single rectangle, when non-empty.
    std::optional<Rect> hull() const;
};

DyadicCover dyadic_cover_extent(const Rect& r, unsigned order);

/// Every order-n mesh square contained in r, row-major from the bottom-left.
std::vector<DyadicSquare> dyadic_inner_cover(const Rect& r, unsigned order);

}  // namespace rectadd

#endif  // RECTADD_GEOMETRY_HPP
