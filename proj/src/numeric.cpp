#include "rectadd/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace rectadd {

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) n = -n;
    return Rational(n, d);
}

// ---------------------------------------------------------------------------
// QNum

int QNum::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against 2 b^2. Equality cannot happen.
    const Rational lhs = a_ * a_;
    const Rational rhs = Rational(2) * b_ * b_;
    return lhs > rhs ? sa : -sa;
}

bool QNum::is_dyadic() const {
    if (!is_rational()) return false;
    const BigInt den = a_.denominator();
    // Power of two iff exactly one bit set.
    return mpz_popcount(den.get_mpz_t()) == 1;
}

QNum& QNum::operator+=(const QNum& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QNum& QNum::operator-=(const QNum& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QNum& QNum::operator*=(const QNum& o) {
    Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QNum& QNum::operator/=(const QNum& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero in Q(sqrt2)");
    }
    const Rational n = o.norm();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

std::strong_ordering operator<=>(const QNum& p, const QNum& q) {
    const int s = (p - q).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool QNumKeyLess::operator()(const QNum& p, const QNum& q) const {
    if (p.rational_part() != q.rational_part()) return p.rational_part() < q.rational_part();
    return p.sqrt2_part() < q.sqrt2_part();
}

namespace {

// Integer estimate of floor(a + b*sqrt2). Writes the value as (p + r*sqrt2)/d
// with d > 0 and uses the integer square root of 2 r^2.
BigInt floor_estimate(const Rational& a, const Rational& b) {
    const BigInt d = lcm(BigInt(a.denominator()), BigInt(b.denominator()));
    const BigInt p = a.numerator() * (d / a.denominator());
    const BigInt r = b.numerator() * (d / b.denominator());
    BigInt s;
    const BigInt twice_r2 = 2 * r * r;
    mpz_sqrt(s.get_mpz_t(), twice_r2.get_mpz_t());
    const BigInt whole = r >= 0 ? BigInt(p + s) : BigInt(p - s - 1);
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), whole.get_mpz_t(), d.get_mpz_t());
    return out;
}

}  // namespace

BigInt QNum::floor() const {
    BigInt n = floor_estimate(a_, b_);
    // Correct the estimate until n <= q < n + 1 holds exactly.
    while ((*this - QNum(Rational(n))).sign() < 0) --n;
    while ((*this - QNum(Rational(BigInt(n + 1)))).sign() >= 0) ++n;
    return n;
}

BigInt QNum::ceil() const { return -(-*this).floor(); }

double QNum::to_double() const {
    if (is_rational()) return a_.to_double();
    // Enough working bits to survive cancellation between the two parts.
    const auto bits = [](const Rational& r) {
        return mpz_sizeinbase(r.numerator().get_mpz_t(), 2) + mpz_sizeinbase(r.denominator().get_mpz_t(), 2);
    };
    const mp_bitcnt_t prec = 2 * std::max(bits(a_), bits(b_)) + 128;
    mpf_class root(2, prec);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    mpf_class value(a_.raw(), prec);
    value += mpf_class(b_.raw(), prec) * root;
    return value.get_d();
}

std::string QNum::to_string() const {
    if (is_rational()) return a_.to_string();
    std::string out = a_.to_string();
    out += b_.sign() < 0 ? "-" : "+";
    out += (b_.sign() < 0 ? -b_ : b_).to_string();
    out += "*sqrt2";
    return out;
}

QNum QNum::parse(std::string_view text) {
    constexpr std::string_view suffix = "*sqrt2";
    if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix) {
        return QNum(Rational::parse(text));
    }
    std::string_view body = text.substr(0, text.size() - suffix.size());
    // Split at the last sign that is not the leading one.
    std::size_t pos = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            pos = i;
            break;
        }
    }
    if (pos == std::string_view::npos) {
        throw ParseError("expected 'p/q+r/s*sqrt2' in '" + std::string(text) + "'");
    }
    std::string_view coeff = body.substr(pos + 1);
    if (coeff.empty() || coeff.front() == '+' || coeff.front() == '-') {
        throw ParseError("malformed sqrt2 coefficient in '" + std::string(text) + "'");
    }
    Rational a = Rational::parse(body.substr(0, pos));
    Rational b = Rational::parse(coeff);
    if (body[pos] == '-') b = -b;
    return QNum(std::move(a), std::move(b));
}

QNum abs(const QNum& q) { return q.sign() < 0 ? -q : q; }

const QNum& min(const QNum& p, const QNum& q) { return q < p ? q : p; }

const QNum& max(const QNum& p, const QNum& q) { return p < q ? q : p; }

Rational pow2(long e) {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), v) : Rational(v);
}

QNum pow(const QNum& base, unsigned exponent) {
    QNum result(1);
    QNum b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        b *= b;
        exponent >>= 1U;
    }
    return result;
}

std::string approximate(const QNum& q, std::size_t precision) {
    if (precision == 0) {
        throw std::invalid_argument("approximate: precision must be >= 1");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, precision);
    const bool negative = q.sign() < 0;
    const BigInt digits = (abs(q) * QNum(Rational(scale))).floor();
    std::string s = digits.get_str();
    if (s.size() <= precision) {
        s.insert(0, precision + 1 - s.size(), '0');
    }
    s.insert(s.size() - precision, ".");
    if (negative && digits != 0) s.insert(0, "-");
    return s;
}

}  // namespace rectadd
