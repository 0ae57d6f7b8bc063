// Command-line front end: exact classification, valuation, chart
// transforms, set membership, and the bundled worked example.
//
// Machine-readable JSON goes to stdout, human notes to stderr.
// Exit codes: 0 success, 1 a requested check failed, 2 parse or
// validation errors.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvette/curvette.hpp"

namespace {

using namespace curvette;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError("invalid JSON in '" + path + "': " + e.what());
    }
}

Point read_point(const std::string& path) { return point_from_json(read_json_file(path)); }

ChartSpec chart_from_indices(const std::vector<int>& indices, int n) {
    ChartSpec chart;
    for (int j : indices) {
        if (j < 1 || j > n)
            throw ValidationError("chart index " + std::to_string(j) + " out of range 1.." +
                                  std::to_string(n));
        chart.T.insert(j);
    }
    return chart;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SPER_ATLAS_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw ValidationError("SPER_ATLAS_SEED must be an unsigned integer");
        }
    }
    return 1;
}

int run_classify(const std::string& point_path) {
    Point delta = read_point(point_path);
    emit(to_json(classify(delta)));
    return 0;
}

int run_value(const std::string& point_path, const std::string& expr) {
    Point delta = read_point(point_path);
    Polynomial f = parse_polynomial(expr, delta.n);
    emit(Json{{"expr", expr},
              {"fine_value", to_json(fine_valuation(delta, f))},
              {"coarse_value", to_json(coarse_valuation(delta, f))}});
    return 0;
}

int run_sign(const std::string& point_path, const std::string& expr) {
    Point delta = read_point(point_path);
    Polynomial f = parse_polynomial(expr, delta.n);
    emit(Json{{"expr", expr}, {"sign", sign_at(delta, f)}});
    return 0;
}

int run_transform(const std::string& point_path, const std::vector<int>& t_indices) {
    Point delta = read_point(point_path);
    emit(to_json(transform(delta, chart_from_indices(t_indices, delta.n))));
    return 0;
}

int run_equiv(const std::string& a_path, const std::string& b_path) {
    std::vector<LexVector> a = tuple_from_json(read_json_file(a_path));
    std::vector<LexVector> b = tuple_from_json(read_json_file(b_path));
    emit(Json{{"equivalent", order_equivalent(a, b)}});
    return 0;
}

int run_scalewise(const std::string& tuple_path) {
    std::vector<LexVector> a = tuple_from_json(read_json_file(tuple_path));
    emit(Json{{"scalewise_independent", scalewise_independent(a)},
              {"rationally_independent", rationally_independent(a)}});
    return 0;
}

int run_verify(const std::string& point_path, const std::vector<int>& t_indices) {
    Point delta = read_point(point_path);
    ChartReport report = verify_chart(delta, chart_from_indices(t_indices, delta.n));
    emit(to_json(report));
    return report.all_passed() ? 0 : 1;
}

int run_atlas(const std::string& point_path, const std::string& descriptor_path) {
    Point delta = read_point(point_path);
    USetDescriptor d = descriptor_from_json(read_json_file(descriptor_path), delta.n);
    bool member = is_member(delta, d);
    emit(Json{{"point_id", 0},
              {"checks", Json::array({Json{{"name", "membership:" + to_string(d.kind)},
                                           {"status", member ? "pass" : "fail"},
                                           {"witness", to_json(d).dump()}}})}});
    return member ? 0 : 1;
}

int run_partition_check(std::size_t samples, std::uint64_t seed, int n, int m,
                        const std::string& field, double density) {
    std::vector<Point> points;
    points.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        SampleParams params;
        params.n = n;
        params.m = m;
        params.density = density;
        if (field == "Q")
            params.field = ScalarField::Q;
        else if (field == "Qsqrt2")
            params.field = ScalarField::QSqrt2;
        else if (field == "both")
            params.field = (i % 2 == 0) ? ScalarField::Q : ScalarField::QSqrt2;
        else
            throw ValidationError("--field must be Q, Qsqrt2, or both");
        points.push_back(random_point(seed + i, params));
    }
    PartitionReport report = check_partition(points);
    emit(to_json(report));
    return report.ok() ? 0 : 1;
}

int run_blowup(const std::string& point_path, const std::string& matrix_path) {
    Point delta = read_point(point_path);
    MonomialMap pi = matrix_from_json(read_json_file(matrix_path));
    emit(to_json(monomial_substitution(delta, pi)));
    return 0;
}

int run_example() {
    WorkedExample ex = WorkedExample::make();
    bool ok = true;
    Json out;

    PointSummary s = summarize(ex.delta);
    out["point"] = to_json(ex.delta);
    out["classification"] = to_json(s.cls);
    ok = ok && s.cls.I == IndexSet{1} && s.cls.F == IndexSet{2} && s.cls.G == IndexSet{3} &&
         s.cls.p() == 3;

    Json coarse = Json::array();
    for (int j = 1; j <= 5; ++j) coarse.push_back(to_json(s.coarse_at(j)));
    out["coarse_values"] = coarse;
    for (int j = 1; j <= 3; ++j) ok = ok && value_zero(s.coarse_at(j));
    LexVector level_one(4);
    level_one[0] = QuadExt(1);
    ok = ok && s.coarse_at(4) == ValueOrInf(level_one) && s.coarse_at(5) == ValueOrInf(level_one);

    out["chart_T"] = to_json(ex.chart.T);
    Point star = transform(ex.delta, ex.chart);
    PointSummary ss = summarize(star);
    out["transformed"] = to_json(star);
    out["y5_erratum"] =
        "The published source of this example lists t^(1,0,1,0) for the fifth chart "
        "image; consistency with x5 = x3*x4 and y3 = 1/x3 forces t^(1,0,-1,0) (the "
        "third entry changes sign). The order-equivalence verdict below is the same "
        "under either reading.";
    {
        LexVector expected(4);
        expected[0] = QuadExt(1);
        expected[2] = QuadExt(-1);
        ok = ok && ss.fine_at(5) == ValueOrInf(expected);
    }

    std::vector<LexVector> chart_tuple{*ss.fine_at(4), *ss.fine_at(5)};
    std::vector<LexVector> coarse_tuple{*s.coarse_at(4), *s.coarse_at(5)};
    bool equivalent = order_equivalent(chart_tuple, coarse_tuple);
    out["order_equivalence"] =
        Json{{"chart_values", to_json(std::span<const LexVector>(chart_tuple))},
             {"coarse_values", to_json(std::span<const LexVector>(coarse_tuple))},
             {"equivalent", equivalent}};
    ok = ok && !equivalent;

    ChartReport chart_report = verify_chart(ex.delta, ex.chart);
    out["chart_report"] = to_json(chart_report);
    for (int k = 1; k <= 6; ++k)
        ok = ok && chart_report.clause(k).status == CheckStatus::Pass;
    ok = ok && chart_report.clause(7).status == CheckStatus::Skipped;

    Point prime = monomial_substitution(ex.delta, ex.blowup);
    out["blowup"] = Json{{"matrix", to_json(ex.blowup)["matrix"]}, {"point", to_json(prime)}};
    {
        LexVector z_exp(4);
        z_exp[2] = QuadExt(-1);
        ok = ok && prime.image(5).equals(HahnFraction(HahnPoly::monomial(z_exp, Rat(1))));
    }

    out["post_blowup_chart_T"] = to_json(ex.chart_after_blowup.T);
    ChartReport after = verify_chart(prime, ex.chart_after_blowup);
    out["post_blowup_report"] = to_json(after);
    ok = ok && after.all_passed();

    out["checks_ok"] = ok;
    emit(out);
    std::cerr << (ok ? "worked example reproduced exactly\n"
                     : "worked example reproduction FAILED\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "curvette: exact points of the real spectrum of Q[x1..xn] as semi-curvettes,\n"
        "their valuations, points-at-infinity classification, chart transforms, and\n"
        "set-membership checks"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string point_path, expr, other_path;
    std::vector<int> t_indices;

    auto* classify_cmd = app.add_subcommand("classify", "classify a point's coordinates");
    classify_cmd->add_option("point", point_path, "point JSON file")->required();
    classify_cmd->callback([&] { action = [&] { return run_classify(point_path); }; });

    auto* value_cmd =
        app.add_subcommand("value", "fine and coarse valuation of an expression at a point");
    value_cmd->add_option("point", point_path, "point JSON file")->required();
    value_cmd->add_option("expr", expr, "polynomial expression")->required();
    value_cmd->callback([&] { action = [&] { return run_value(point_path, expr); }; });

    auto* sign_cmd = app.add_subcommand("sign", "sign of an expression at a point");
    sign_cmd->add_option("point", point_path, "point JSON file")->required();
    sign_cmd->add_option("expr", expr, "polynomial expression")->required();
    sign_cmd->callback([&] { action = [&] { return run_sign(point_path, expr); }; });

    auto* transform_cmd = app.add_subcommand("transform", "apply the chart map");
    transform_cmd->add_option("point", point_path, "point JSON file")->required();
    transform_cmd->add_option("--T", t_indices, "1-based coordinates to invert")
        ->delimiter(',');
    transform_cmd->callback(
        [&] { action = [&] { return run_transform(point_path, t_indices); }; });

    auto* inverse_cmd =
        app.add_subcommand("inverse-transform", "apply the inverse chart map (same formula)");
    inverse_cmd->add_option("point", point_path, "point JSON file")->required();
    inverse_cmd->add_option("--T", t_indices, "1-based coordinates to invert")->delimiter(',');
    inverse_cmd->callback(
        [&] { action = [&] { return run_transform(point_path, t_indices); }; });

    auto* equiv_cmd =
        app.add_subcommand("equiv", "order-equivalence of two value tuples");
    equiv_cmd->add_option("tuple_a", point_path, "tuple JSON file")->required();
    equiv_cmd->add_option("tuple_b", other_path, "tuple JSON file")->required();
    equiv_cmd->callback([&] { action = [&] { return run_equiv(point_path, other_path); }; });

    auto* scalewise_cmd =
        app.add_subcommand("scalewise", "scalewise Q-linear independence of a tuple");
    scalewise_cmd->add_option("tuple", point_path, "tuple JSON file")->required();
    scalewise_cmd->callback([&] { action = [&] { return run_scalewise(point_path); }; });

    auto* verify_cmd = app.add_subcommand(
        "verify-prop31", "run the seven chart consistency clauses for a point and chart");
    verify_cmd->add_option("point", point_path, "point JSON file")->required();
    verify_cmd->add_option("--T", t_indices, "1-based coordinates to invert")->delimiter(',');
    verify_cmd->callback([&] { action = [&] { return run_verify(point_path, t_indices); }; });

    std::string descriptor_path;
    auto* atlas_cmd = app.add_subcommand("atlas", "membership of a point in a described set");
    atlas_cmd->add_option("point", point_path, "point JSON file")->required();
    atlas_cmd->add_option("--descriptor", descriptor_path, "descriptor JSON file")->required();
    atlas_cmd->callback(
        [&] { action = [&] { return run_atlas(point_path, descriptor_path); }; });

    std::size_t samples = 100;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int sample_n = 4, sample_m = 3;
    std::string sample_field = "both";
    double sample_density = 0.5;
    auto* partition_cmd = app.add_subcommand(
        "partition-check", "partition and covering checks over random points");
    partition_cmd->add_option("--samples", samples, "number of sampled points");
    partition_cmd->add_option("--seed", seed, "base seed (default: SPER_ATLAS_SEED or 1)")
        ->each([&](const std::string&) { seed_given = true; });
    partition_cmd->add_option("--n", sample_n, "number of variables (<= 8)");
    partition_cmd->add_option("--m", sample_m, "ambient lex rank (<= 8)");
    partition_cmd->add_option("--field", sample_field, "Q, Qsqrt2, or both");
    partition_cmd->add_option("--density", sample_density, "tail density in [0,1]");
    partition_cmd->callback([&] {
        action = [&] {
            std::uint64_t s = seed_given ? seed : default_seed();
            return run_partition_check(samples, s, sample_n, sample_m, sample_field,
                                       sample_density);
        };
    });

    auto* blowup_cmd =
        app.add_subcommand("blowup", "pull a point back through a monomial substitution");
    blowup_cmd->add_option("point", point_path, "point JSON file")->required();
    blowup_cmd->add_option("matrix", other_path, "unimodular matrix JSON file")->required();
    blowup_cmd->callback([&] { action = [&] { return run_blowup(point_path, other_path); }; });

    auto* example_cmd = app.add_subcommand(
        "example-paper", "reproduce the bundled worked example and verify every value");
    example_cmd->callback([&] { action = [] { return run_example(); }; });

    CLI11_PARSE(app, argc, argv);

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
