#include "rectadd/commands.hpp"

#include "rectadd/decompose.hpp"
#include "rectadd/proptest.hpp"
#include "rectadd/random.hpp"
#include "rectadd/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <variant>

namespace rectadd {

using json = nlohmann::ordered_json;

Rect canonical_negative_rect() { return Rect(QNum(0), QNum(1), QNum(1), QNum::sqrt2()); }

namespace {

constexpr std::size_t kShownSamples = 20;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

json rect_json(const Rect& r) {
    return {{"literal", r.to_string()},
            {"x1", exact_json(r.x1())},
            {"x2", exact_json(r.x2())},
            {"y1", exact_json(r.y1())},
            {"y2", exact_json(r.y2())}};
}

}  // namespace

// ---------------------------------------------------------------------------

Report cmd_counterexample(const CounterexampleOptions& opts) {
    if (opts.samples == 0) throw std::invalid_argument("counterexample: samples must be >= 1");
    if (opts.min_order > opts.max_order) throw std::invalid_argument("counterexample: min order exceeds max order");
    const RectFunction& F = opts.function;

    Report rep;
    rep.command = "counterexample";
    rep.inputs = {{"function", F.label},   {"min_order", opts.min_order}, {"max_order", opts.max_order},
                  {"samples", opts.samples}, {"seed", opts.seed},         {"index_bound", opts.index_bound}};

    Random rng(opts.seed);
    bool all_nonnegative = true;
    bool all_equal_area = true;
    std::optional<QNum> smallest;
    std::optional<DyadicSquare> first_bad;
    json shown = json::array();
    for (std::size_t i = 0; i < opts.samples; ++i) {
        DyadicSquare dq;
        dq.order = static_cast<unsigned>(rng.uniform(opts.min_order, opts.max_order));
        dq.k = static_cast<long>(rng.uniform(-opts.index_bound, opts.index_bound));
        dq.m = static_cast<long>(rng.uniform(-opts.index_bound, opts.index_bound));
        const Rect q = dq.to_rect();
        const QNum v = F(q);
        const QNum a = area(q);
        const bool nonneg = v.sign() >= 0;
        const bool equal = v == a && a.sign() > 0;
        all_nonnegative = all_nonnegative && nonneg;
        if (!equal && all_equal_area) first_bad = dq;
        all_equal_area = all_equal_area && equal;
        if (!smallest || v < *smallest) smallest = v;
        if (i < kShownSamples) {
            shown.push_back({{"order", dq.order},
                             {"k", dq.k.get_str()},
                             {"m", dq.m.get_str()},
                             {"F", exact_json(v)},
                             {"area", exact_json(a)}});
        }
    }

    rep.findings.push_back(decided("F(Q_d) >= 0 on every sampled dyadic square", all_nonnegative).value(*smallest));
    Finding eq = decided("F(Q_d) = |Q_d| > 0 on every sampled dyadic square", all_equal_area);
    if (first_bad) {
        const Rect q = first_bad->to_rect();
        eq.value(F(q)).value(area(q));
    }
    rep.findings.push_back(std::move(eq));

    const Rect unit(QNum(0), QNum(1), QNum(0), QNum(1));
    const QNum unit_value = F(unit);
    rep.findings.push_back(decided("F([0,1]x[0,1]) = 1", unit_value == QNum(1)).value(unit_value));

    const Rect witness = canonical_negative_rect();
    const QNum w = F(witness);
    rep.findings.push_back(decided("F(I_0) < 0 on I_0 = " + witness.to_string(), w.sign() < 0).value(w));
    const QNum formula = (witness.x1() - witness.x2()) * witness.y1();
    rep.findings.push_back(
        decided("F(I_0) = (x1 - x2) * y1 = -1 exactly", w == formula).value(w).value(formula));

    rep.data = {{"samples_checked", opts.samples},
                {"samples_shown", std::move(shown)},
                {"witness", rect_json(witness)},
                {"witness_value", exact_json(w)}};
    return rep;
}

// ---------------------------------------------------------------------------

Report cmd_decompose(const DecomposeOptions& opts) {
    const Decomposition d = decompose(opts.rect, opts.max_steps);

    Report rep;
    rep.command = "decompose";
    rep.inputs = {{"rect", opts.rect.to_string()},
                  {"max_steps", opts.max_steps},
                  {"function", opts.function.label},
                  {"svg", opts.svg_path ? json(*opts.svg_path) : json(nullptr)}};

    const QNum gap = tiling_discrepancy(d);
    rep.findings.push_back(
        decided("squares and remainder tile the rectangle exactly", gap.is_zero() && pieces_disjoint_and_contained(d))
            .value(gap));

    bool strictly_decreasing = true;
    for (std::size_t n = 1; n + 1 < d.sides.size(); ++n) {
        strictly_decreasing = strictly_decreasing && d.sides[n + 1] < d.sides[n];
    }
    rep.findings.push_back(decided("side trace l_1 > l_2 > ... strictly decreasing", strictly_decreasing));

    const HalvingCertificate cert = verify_halving(d);
    rep.findings.push_back(decided("l_{n+1} <= l_n and l_{n+2} <= l_n / 2 for every n (" +
                                       std::to_string(cert.checks.size()) + " exact comparisons)",
                                   cert.holds));
    rep.findings.push_back(
        decided("l_n <= l_1 * 2^-floor((n-1)/2) for every n >= 1", verify_geometric_decay(d.sides)));
    if (d.remainder) {
        rep.findings.push_back(decided("diameter_sq(R_n) <= 2 l_n^2", remainder_diameter_bounded(d))
                                   .value(diameter_sq(*d.remainder)));
    }

    const auto cf = continued_fraction_counts(opts.rect, d.steps.size());
    rep.findings.push_back(decided("per-step counts equal continued-fraction coefficients", cf == d.counts()));

    const RectFunction product = RectFunction::product();
    const QNum tp = telescope(product, d);
    rep.findings.push_back(decided("sum of areas over pieces equals |I_0|", tp == area(opts.rect)).value(tp));
    const QNum tf = telescope(opts.function, d);
    const QNum whole = opts.function(opts.rect);
    rep.findings.push_back(
        decided("sum of F over pieces equals F(I_0) for F = " + opts.function.label, tf == whole).value(tf).value(whole));

    json steps = json::array();
    for (const auto& s : d.steps) {
        steps.push_back({{"side", exact_json(s.side)}, {"count", s.count.get_str()}});
    }
    json sides = json::array();
    for (const auto& s : d.sides) sides.push_back(exact_json(s));
    json counts = json::array();
    for (const auto& c : d.counts()) counts.push_back(c.get_str());
    rep.data = {{"terminated", d.terminated},
                {"square_count", d.square_count().get_str()},
                {"counts", std::move(counts)},
                {"steps", std::move(steps)},
                {"sides", std::move(sides)},
                {"remainder", d.remainder ? rect_json(*d.remainder) : json(nullptr)}};

    if (opts.svg_path) write_svg(d, *opts.svg_path);
    return rep;
}

// ---------------------------------------------------------------------------

QNum inner_cover_bound(const Rect& r, unsigned order) {
    const long n = static_cast<long>(order);
    return QNum(pow2(1 - n)) * (r.width() + r.height()) + QNum(Rational(4) * pow2(-2 * n));
}

Report cmd_dyadic_approx(const DyadicApproxOptions& opts) {
    if (opts.max_order == 0) throw std::invalid_argument("dyadic-approx: max order must be >= 1");
    const RectFunction& F = opts.function;
    const Rect& r = opts.rect;
    const bool is_product = std::holds_alternative<point_fn::Product>(F.point);
    const bool is_counterexample = std::holds_alternative<point_fn::Counterexample>(F.point);

    Report rep;
    rep.command = "dyadic-approx";
    rep.inputs = {{"rect", r.to_string()}, {"function", F.label}, {"max_order", opts.max_order}};

    const QNum whole = F(r);
    bool sums_nonnegative = true;
    bool sums_equal_covered_area = true;
    bool within_bound = true;
    bool never_shrinks = true;
    bool below_threshold = true;
    const QNum threshold(Rational(BigInt(-139), BigInt(100)));
    std::optional<QNum> previous_gap;
    json orders = json::array();

    for (unsigned n = 1; n <= opts.max_order; ++n) {
        const DyadicCover cover = dyadic_cover_extent(r, n);
        QNum sum(0);
        bool enumerated = false;
        if (cover.count() <= kCoverEnumerationLimit) {
            for (const auto& dq : dyadic_inner_cover(r, n)) sum += F(dq.to_rect());
            enumerated = true;
        } else if (auto hull = cover.hull()) {
            // Additivity over the mesh block collapses the sum to one corner difference.
            sum = F(*hull);
        }
        const QNum covered = cover.area();
        const QNum gap = whole - sum;

        sums_nonnegative = sums_nonnegative && sum.sign() >= 0;
        sums_equal_covered_area = sums_equal_covered_area && sum == covered;
        json row = {{"order", n},
                    {"squares", cover.count().get_str()},
                    {"enumerated", enumerated},
                    {"covered_area", exact_json(covered)},
                    {"dyadic_sum", exact_json(sum)},
                    {"gap", exact_json(gap)}};
        if (is_product) {
            const QNum bound = inner_cover_bound(r, n);
            within_bound = within_bound && gap.sign() >= 0 && gap <= bound;
            row["bound"] = exact_json(bound);
        }
        if (previous_gap) never_shrinks = never_shrinks && gap <= *previous_gap;
        if (n >= 2) below_threshold = below_threshold && gap <= threshold;
        previous_gap = gap;
        orders.push_back(std::move(row));
    }

    rep.findings.push_back(decided("dyadic sums S_n >= 0 at every order, against F(I)", sums_nonnegative).value(whole));
    if (is_product || is_counterexample) {
        rep.findings.push_back(decided("S_n equals the covered area at every order", sums_equal_covered_area));
    }
    if (is_product) {
        rep.findings.push_back(
            decided("0 <= F(I) - S_n <= 2^(1-n) (w + h) + 4 * 4^-n for n = 1.." + std::to_string(opts.max_order),
                    within_bound)
                .value(*previous_gap));
    }
    if (whole.sign() < 0 && sums_nonnegative) {
        rep.findings.push_back(
            decided("gap F(I) - S_n never shrinks toward 0 (nonincreasing in n)", never_shrinks).value(*previous_gap));
    }
    if (is_counterexample && r == canonical_negative_rect() && opts.max_order >= 2) {
        rep.findings.push_back(decided("gap <= -1.39 for every order n >= 2", below_threshold).value(*previous_gap));
    }
    rep.data = {{"rect", rect_json(r)}, {"F_rect", exact_json(whole)}, {"orders", std::move(orders)}};
    return rep;
}

// ---------------------------------------------------------------------------

Report cmd_probe(const ProbeOptions& opts) {
    const ProbeReport pr = liminf_quotient_probe(opts.function, opts.x, opts.y, opts.alpha, opts.depth, opts.offsets,
                                                 opts.reference);
    Report rep;
    rep.command = "probe";
    rep.inputs = {{"function", opts.function.label},
                  {"point", {opts.x.to_string(), opts.y.to_string()}},
                  {"alpha", opts.alpha.to_string()},
                  {"depth", opts.depth},
                  {"offsets", opts.offsets},
                  {"reference", opts.reference ? json(opts.reference->to_string()) : json(nullptr)}};

    bool any_negative = false;
    json scales = json::array();
    for (const auto& sc : pr.scales) {
        Finding f = evidence("scale 2^-" + std::to_string(sc.scale) + ": sampled F(Q)/|Q|^alpha");
        json samples = json::array();
        for (const auto& s : sc.samples) {
            json entry = {{"square", s.square.to_string()}, {"F", exact_json(s.value)}};
            if (s.quotient) {
                f.value(*s.quotient);
                entry["quotient"] = exact_json(*s.quotient);
                any_negative = any_negative || s.quotient->sign() < 0;
            } else {
                f.approximations.push_back(format_double(s.approx_quotient));
                entry["quotient"] = {{"exact", nullptr}, {"approx", s.approx_quotient}, {"flagged", true}};
                any_negative = any_negative || s.approx_quotient < 0;
            }
            if (s.inside_reference) entry["inside_reference"] = *s.inside_reference;
            samples.push_back(std::move(entry));
        }
        rep.findings.push_back(std::move(f));
        scales.push_back(
            {{"scale", sc.scale}, {"diameter_sq", exact_json(sc.diameter_sq)}, {"samples", std::move(samples)}});
    }
    rep.findings.push_back(evidence(any_negative ? "some sampled quotient is negative"
                                                 : "every sampled quotient is nonnegative (finite evidence only)"));
    rep.data = {{"exact", pr.exact()},
                {"approx_precision", pr.exact() ? json(nullptr) : json("IEEE double, ~15 significant digits")},
                {"scales", std::move(scales)}};
    return rep;
}

// ---------------------------------------------------------------------------

Report cmd_proptest(const ProptestOptions& opts) {
    const SuiteResult res = run_suite(opts.suite, opts.cases, opts.seed);
    Report rep;
    rep.command = "proptest";
    rep.inputs = {{"suite", opts.suite}, {"cases", opts.cases}, {"seed", opts.seed}};
    Finding f = decided("suite '" + res.suite + "' holds on " + std::to_string(res.cases_run) + " cases", res.passed());
    if (res.counterexample) f.exact_values.push_back(*res.counterexample);
    rep.findings.push_back(std::move(f));
    rep.data = {{"cases_run", res.cases_run},
                {"counterexample", res.counterexample ? json(*res.counterexample) : json(nullptr)}};
    return rep;
}

}  // namespace rectadd
