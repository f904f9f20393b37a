// rectadd: exact-arithmetic checks for additive functions of rectangles.
#include "rectadd/commands.hpp"
#include "rectadd/proptest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace rectadd;

struct Common {
    std::string json_path;
};

std::pair<QNum, QNum> parse_point(const std::string& text) {
    // "x,y" -- neither literal contains a comma
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("expected point 'x,y', got '" + text + "'");
    return {QNum::parse(text.substr(0, comma)), QNum::parse(text.substr(comma + 1))};
}

int emit(const Report& rep, const Common& common) {
    const std::string body = rep.to_json().dump(2) + "\n";
    if (common.json_path == "-") {
        std::cout << body;
    } else {
        std::cout << rep.summary();
        if (!common.json_path.empty()) {
            std::ofstream out(common.json_path);
            if (!out) {
                std::cerr << "rectadd: cannot write '" << common.json_path << "'\n";
                return 2;
            }
            out << body;
        }
    }
    return rep.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rectadd: exact checks for additive functions of rectangles over Q(sqrt2)"};
    app.require_subcommand(1);
    Common common;

    auto add_json = [&](CLI::App* sub) {
        sub->add_option("--json", common.json_path, "Write the JSON report to a file ('-' for stdout)");
    };

    // counterexample
    auto* ce = app.add_subcommand("counterexample", "Dyadic squares are nonnegative, yet some rectangle is negative");
    unsigned ce_min = 0, ce_max = 12;
    std::size_t ce_samples = 1000;
    std::uint64_t ce_seed = 7;
    std::string ce_fn = "counterexample";
    ce->add_option("--min-order", ce_min, "Smallest dyadic order")->capture_default_str();
    ce->add_option("--max-order", ce_max, "Largest dyadic order")->capture_default_str();
    ce->add_option("--samples", ce_samples, "Random dyadic squares to check")->capture_default_str()->check(
        CLI::PositiveNumber);
    ce->add_option("--seed", ce_seed, "Generator seed")->capture_default_str();
    ce->add_option("--function", ce_fn, "counterexample | product | constant:<qnum>")->capture_default_str();
    add_json(ce);

    // decompose
    auto* dc = app.add_subcommand("decompose", "Greedy square decomposition with halving certificate");
    std::string dc_rect = "[0,8]x[0,5]";
    std::size_t dc_steps = 20;
    std::string dc_svg;
    std::string dc_fn = "counterexample";
    dc->add_option("--rect", dc_rect, "Rectangle literal [x1,x2]x[y1,y2]")->capture_default_str();
    dc->add_option("--max-steps", dc_steps, "Step budget")->capture_default_str()->check(CLI::PositiveNumber);
    dc->add_option("--svg", dc_svg, "Write an SVG figure of the decomposition");
    dc->add_option("--function", dc_fn, "Function used for the telescoping check")->capture_default_str();
    add_json(dc);

    // dyadic-approx
    auto* da = app.add_subcommand("dyadic-approx", "Compare F(I) with sums over inner dyadic covers");
    std::string da_rect = "[0,1]x[1,0+1*sqrt2]";
    std::string da_fn = "product";
    unsigned da_order = 10;
    da->add_option("--rect", da_rect, "Rectangle literal")->capture_default_str();
    da->add_option("--function", da_fn, "counterexample | product | constant:<qnum>")->capture_default_str();
    da->add_option("--max-order", da_order, "Largest dyadic order")->capture_default_str()->check(
        CLI::PositiveNumber);
    add_json(da);

    // probe
    auto* pr = app.add_subcommand("probe", "Sample F(Q)/|Q|^alpha over shrinking squares containing a point");
    std::string pr_fn = "product";
    std::string pr_point = "1/2,1/2";
    std::string pr_alpha = "1";
    unsigned pr_depth = 6;
    unsigned pr_offsets = 4;
    std::string pr_reference;
    pr->add_option("--function", pr_fn, "counterexample | product | constant:<qnum>")->capture_default_str();
    pr->add_option("--point", pr_point, "Point 'x,y' with QNum literals")->capture_default_str();
    pr->add_option("--alpha", pr_alpha, "Rational exponent in [0,2]")->capture_default_str();
    pr->add_option("--depth", pr_depth, "Number of scales 2^-1 .. 2^-depth")->capture_default_str()->check(
        CLI::PositiveNumber);
    pr->add_option("--offsets", pr_offsets, "Placements per scale")->capture_default_str()->check(
        CLI::PositiveNumber);
    pr->add_option("--rect", pr_reference, "Reference rectangle for containment flags");
    add_json(pr);

    // proptest
    auto* pt = app.add_subcommand("proptest", "Run a seeded invariant suite");
    std::string pt_suite = "field";
    std::size_t pt_cases = 500;
    std::uint64_t pt_seed = 1;
    pt->add_option("--suite", pt_suite, "additivity | tiling | halving | oracle | telescope | field")
        ->capture_default_str();
    pt->add_option("--cases", pt_cases, "Number of cases")->capture_default_str();
    pt->add_option("--seed", pt_seed, "Generator seed")->capture_default_str();
    add_json(pt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (ce->parsed()) {
            CounterexampleOptions o;
            o.min_order = ce_min;
            o.max_order = ce_max;
            o.samples = ce_samples;
            o.seed = ce_seed;
            o.function = RectFunction::parse(ce_fn);
            return emit(cmd_counterexample(o), common);
        }
        if (dc->parsed()) {
            DecomposeOptions o;
            o.rect = Rect::parse(dc_rect);
            o.max_steps = dc_steps;
            if (!dc_svg.empty()) o.svg_path = dc_svg;
            o.function = RectFunction::parse(dc_fn);
            return emit(cmd_decompose(o), common);
        }
        if (da->parsed()) {
            DyadicApproxOptions o;
            o.rect = Rect::parse(da_rect);
            o.function = RectFunction::parse(da_fn);
            o.max_order = da_order;
            return emit(cmd_dyadic_approx(o), common);
        }
        if (pr->parsed()) {
            ProbeOptions o;
            o.function = RectFunction::parse(pr_fn);
            std::tie(o.x, o.y) = parse_point(pr_point);
            o.alpha = Rational::parse(pr_alpha);
            o.depth = pr_depth;
            o.offsets = pr_offsets;
            if (!pr_reference.empty()) o.reference = Rect::parse(pr_reference);
            return emit(cmd_probe(o), common);
        }
        if (pt->parsed()) {
            ProptestOptions o;
            o.suite = pt_suite;
            o.cases = pt_cases;
            o.seed = pt_seed;
            return emit(cmd_proptest(o), common);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "rectadd: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "rectadd: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
