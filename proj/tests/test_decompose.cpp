#include "rectadd/decompose.hpp"
#include "rectadd/proptest.hpp"

#include <doctest.h>

using namespace rectadd;

namespace {

const QNum kRoot2 = QNum::sqrt2();
const QNum kSilverGap = kRoot2 - QNum(1);  // sqrt2 - 1

std::vector<BigInt> big(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Euclid on machine integers: quotients of p / q.
std::vector<BigInt> euclid_quotients(long p, long q) {
    std::vector<BigInt> out;
    while (q != 0) {
        out.emplace_back(p / q);
        const long r = p % q;
        p = q;
        q = r;
    }
    return out;
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("greedy step") {
    const StepResult a = greedy_step(Rect(0, 8, 0, 5));
    CHECK(a.step.count == 1);
    CHECK(a.step.side == QNum(5));
    CHECK(a.step.squares.front() == Rect(0, 5, 0, 5));
    REQUIRE(a.remainder);
    CHECK(*a.remainder == Rect(5, 8, 0, 5));

    const StepResult b = greedy_step(Rect(0, 1, 0, 1));
    CHECK(b.step.count == 1);
    CHECK(b.step.squares.front() == Rect(0, 1, 0, 1));
    CHECK_FALSE(b.remainder);

    const StepResult c = greedy_step(Rect(0, QNum(1) + kRoot2, 0, 1));
    CHECK(c.step.count == 2);
    CHECK(c.step.squares[1] == Rect(1, 2, 0, 1));
    REQUIRE(c.remainder);
    CHECK(c.remainder->width() == kSilverGap);
    CHECK(c.remainder->height() == QNum(1));

    // tall rectangles pack upward from the bottom
    const StepResult d = greedy_step(Rect(0, 2, 0, 5));
    CHECK(d.step.count == 2);
    CHECK(d.step.squares[1] == Rect(0, 2, 2, 4));
    CHECK(*d.remainder == Rect(0, 2, 4, 5));
}

TEST_CASE("decompose 8 x 5") {
    const Decomposition d = decompose(Rect(0, 8, 0, 5), 20);
    CHECK(d.terminated);
    CHECK_FALSE(d.remainder);
    CHECK(d.counts() == big({1, 1, 1, 2}));
    CHECK(d.square_count() == 5);
    std::vector<QNum> step_sides;
    for (const auto& s : d.steps) step_sides.push_back(s.side);
    CHECK(step_sides == std::vector<QNum>{5, 3, 2, 1});
    CHECK(d.sides == std::vector<QNum>{8, 5, 3, 2, 1});
    CHECK(tiling_discrepancy(d).is_zero());
    CHECK(pieces_disjoint_and_contained(d));
}

TEST_CASE("decompose exact fit and square") {
    const Decomposition d = decompose(Rect(0, 2, 0, 1), 20);
    CHECK(d.terminated);
    CHECK(d.steps.size() == 1);
    CHECK(d.counts() == big({2}));

    const Decomposition sq = decompose(Rect(3, 4, 3, 4), 5);
    CHECK(sq.terminated);
    CHECK(sq.sides.size() == 2);
    CHECK(verify_halving(sq).holds);
    CHECK(verify_halving(sq).checks.size() == 1);
}

TEST_CASE("silver rectangle never terminates and has a periodic trace") {
    const Decomposition d = decompose(Rect(0, QNum(1) + kRoot2, 0, 1), 6);
    CHECK_FALSE(d.terminated);
    REQUIRE(d.remainder);
    CHECK(d.counts() == big({2, 2, 2, 2, 2, 2}));
    CHECK(d.sides.front() == QNum(1) + kRoot2);
    for (std::size_t j = 1; j < d.sides.size(); ++j) {
        CHECK(d.sides[j] == pow(kSilverGap, static_cast<unsigned>(j - 1)));
    }
    CHECK(tiling_discrepancy(d).is_zero());
    CHECK(pieces_disjoint_and_contained(d));
    CHECK(remainder_diameter_bounded(d));
    CHECK_THROWS(decompose(Rect(0, 1, 0, 1), 0));
}

TEST_CASE("verify halving") {
    const auto integer = verify_halving(std::vector<QNum>{8, 5, 3, 2, 1});
    CHECK(integer.holds);
    CHECK(integer.checks.size() == 7);

    std::vector<QNum> silver{QNum(1)};
    for (unsigned j = 1; j < 8; ++j) silver.push_back(pow(kSilverGap, j));
    CHECK(verify_halving(silver).holds);
    const QNum ratio = silver[2] / silver[0];
    CHECK(ratio == QNum(3) - QNum(2) * kRoot2);
    CHECK((ratio - QNum(Rational(BigInt(1), BigInt(2)))).sign() == -1);

    CHECK(verify_halving(std::vector<QNum>{1, 1}).holds);
    CHECK_FALSE(verify_halving(std::vector<QNum>{8, 5, 5}).holds);  // 5 > 8/2
    CHECK_FALSE(verify_halving(std::vector<QNum>{8, 9}).holds);
    CHECK_FALSE(verify_geometric_decay(std::vector<QNum>{10, 8, 7, 6}));
    CHECK(verify_geometric_decay(std::vector<QNum>{8, 5, 3, 2, 1}));
}

TEST_CASE("telescope") {
    const Decomposition d = decompose(Rect(0, 8, 0, 5), 20);
    CHECK(telescope(RectFunction::product(), d) == QNum(40));
    CHECK(telescope(RectFunction::constant(0), d).is_zero());

    const Rect I0(0, 1, 1, kRoot2);
    const Decomposition e = decompose(I0, 10);
    CHECK(telescope(RectFunction::counterexample(), e) == QNum(-1));
    // mixed signs among the pieces
    bool positive = false, negative = false;
    for (const auto& s : e.steps) {
        for (const auto& sq : s.squares) {
            const int sg = RectFunction::counterexample()(sq).sign();
            positive = positive || sg > 0;
            negative = negative || sg < 0;
        }
    }
    CHECK(negative);
    CHECK_FALSE(positive);  // every square has an irrational edge here
}

TEST_CASE("continued fraction coefficients") {
    CHECK(continued_fraction_counts(Rect(0, 8, 0, 5), 20) == big({1, 1, 1, 2}));
    CHECK(continued_fraction_counts(Rect(0, QNum(1) + kRoot2, 0, 1), 7) == big({2, 2, 2, 2, 2, 2, 2}));
    CHECK(continued_fraction_counts(Rect(0, 2, 0, 1), 5) == big({2}));
    CHECK(continued_fraction_counts(Rect(0, 1, 0, 1), 5) == big({1}));
    // sqrt2 = [1; 2, 2, ...]
    CHECK(continued_fraction_counts(Rect(0, kRoot2, 0, 1), 4) == big({1, 2, 2, 2}));
}

TEST_CASE("greedy counts match machine-integer Euclid for all p x q up to 60") {
    for (long p = 2; p <= 60; ++p) {
        for (long q = 1; q < p; ++q) {
            const Rect r(0, p, 0, q);
            const Decomposition d = decompose(r, 100);
            const auto expected = euclid_quotients(p, q);
            REQUIRE(d.terminated);
            REQUIRE(d.counts() == expected);
            REQUIRE(continued_fraction_counts(r, 100) == expected);
            BigInt total = 0;
            for (const auto& c : expected) total += c;
            REQUIRE(d.square_count() == total);
        }
    }
}

TEST_CASE("decomposition invariants on random rectangles") {
    Random rng(53);
    for (int i = 0; i < 200; ++i) {
        const int size = 1 + (i % 100);
        const Rect r = gen::rect(rng, size);
        const Decomposition d = decompose(r, 30);
        REQUIRE(tiling_discrepancy(d).is_zero());
        REQUIRE(pieces_disjoint_and_contained(d));
        REQUIRE(verify_halving(d).holds);
        REQUIRE(verify_geometric_decay(d.sides));
        REQUIRE(remainder_diameter_bounded(d));
        REQUIRE(d.terminated != d.remainder.has_value());
        for (std::size_t n = 1; n + 1 < d.sides.size(); ++n) REQUIRE(d.sides[n + 1] < d.sides[n]);
        REQUIRE(continued_fraction_counts(r, d.steps.size()) == d.counts());
        REQUIRE(telescope(RectFunction::counterexample(), d) == RectFunction::counterexample()(r));
    }
}

TEST_CASE("tampered decompositions are rejected") {
    Decomposition d = decompose(Rect(0, 8, 0, 5), 20);
    d.steps[1].squares[0] = Rect(5, 8, 1, 4);
    CHECK_FALSE(pieces_disjoint_and_contained(d));

    Decomposition e = decompose(Rect(0, 8, 0, 5), 2);
    e.remainder = Rect(0, 1, 0, 1);
    CHECK_FALSE(pieces_disjoint_and_contained(e));
}

}  // TEST_SUITE
