#ifndef RECTADD_NUMERIC_HPP
#define RECTADD_NUMERIC_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rectadd {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator so that equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& q);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    double to_double() const { return value_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// `p` or `p/q`.
    std::string to_string() const;
    /// Accepts `p` or `p/q` with an optional leading sign on `p`.
    static Rational parse(std::string_view text);

private:
    mpq_class value_;
};

/// Exact element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// The pair (a, b) is unique for every real number in the field, so equality
/// is component-wise. Ordering is decided exactly by `sign`.
class QNum {
public:
    QNum() = default;
    QNum(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
    QNum(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QNum(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QNum sqrt2() { return QNum(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    int sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    bool is_dyadic() const;

    QNum conjugate() const { return QNum(a_, -b_); }
    /// a^2 - 2 b^2; zero only for the zero element.
    Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }

    QNum operator-() const { return QNum(-a_, -b_); }
    QNum& operator+=(const QNum& o);
    QNum& operator-=(const QNum& o);
    QNum& operator*=(const QNum& o);
    /// Throws std::domain_error on a zero divisor.
    QNum& operator/=(const QNum& o);

    friend QNum operator+(QNum p, const QNum& q) { return p += q; }
    friend QNum operator-(QNum p, const QNum& q) { return p -= q; }
    friend QNum operator*(QNum p, const QNum& q) { return p *= q; }
    friend QNum operator/(QNum p, const QNum& q) { return p /= q; }

    friend bool operator==(const QNum& p, const QNum& q) { return p.a_ == q.a_ && p.b_ == q.b_; }
    friend std::strong_ordering operator<=>(const QNum& p, const QNum& q);

    /// Largest integer n with n <= value.
    BigInt floor() const;
    BigInt ceil() const;

    double to_double() const;

    /// Canonical literal: `p/q` for rationals, `p/q+r/s*sqrt2` otherwise.
    std::string to_string() const;
    static QNum parse(std::string_view text);

private:
    Rational a_;
    Rational b_;
};

/// Structural (not numeric) strict ordering, for use as a map key.
struct QNumKeyLess {
    bool operator()(const QNum& p, const QNum& q) const;
};

inline int sign(const QNum& q) { return q.sign(); }
inline BigInt floor(const QNum& q) { return q.floor(); }
inline bool is_rational(const QNum& q) { return q.is_rational(); }
inline bool is_dyadic(const QNum& q) { return q.is_dyadic(); }

QNum abs(const QNum& q);
const QNum& min(const QNum& p, const QNum& q);
const QNum& max(const QNum& p, const QNum& q);

/// 2^e for integer e (negative allowed).
Rational pow2(long e);
QNum pow(const QNum& base, unsigned exponent);

/// Decimal expansion truncated toward zero after `precision` fractional digits.
/// Every digit is decided by exact comparison.
std::string approximate(const QNum& q, std::size_t precision);

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace rectadd

#endif  // RECTADD_NUMERIC_HPP
