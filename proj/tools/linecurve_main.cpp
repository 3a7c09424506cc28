#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "linecurve/actions.hpp"
#include "linecurve/arrangement.hpp"
#include "linecurve/csv.hpp"
#include "linecurve/curve_maps.hpp"
#include "linecurve/rng.hpp"
#include "linecurve/svg.hpp"
#include "linecurve/unit_distance.hpp"

using namespace linecurve;

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::fputs(content.c_str(), stdout);
    else
        write_file(out_path, content);
}

int cmd_verify_actions(const std::string& case_filter, int samples, std::uint64_t seed,
                       double tol) {
    std::vector<ActionCase> cases;
    if (case_filter.empty())
        cases.assign(kAllActionCases.begin(), kAllActionCases.end());
    else
        cases.push_back(action_case_from_string(case_filter));

    bool ok = true;
    std::printf("case  homomorphism  conjugation   generators\n");
    for (ActionCase c : cases) {
        Rng hom_rng(seed);
        auto pairs = random_translation_pairs(hom_rng, samples);
        double hom = verify_homomorphism(c, pairs);

        Rng conj_rng(seed + 1);
        auto conj_samples = random_conjugation_samples(c, conj_rng, samples);
        double conj = verify_conjugation(c, conj_samples);

        GeneratorPair g = generators(c);
        double comm = commutator_norm(g.xs, g.xt);

        bool pass = hom <= tol && conj <= tol && comm <= tol;
        ok = ok && pass;
        std::printf("%-4s  %12.5e  %12.5e  %12.5e%s\n", to_string(c).c_str(), hom, conj,
                    comm, pass ? "" : "  <-- exceeds tolerance");
    }
    std::printf("RESULT: %s (tolerance %.3e, %d samples, seed %llu)\n",
                ok ? "PASS" : "FAIL", tol, samples,
                static_cast<unsigned long long>(seed));
    return ok ? kOk : kVerifyFail;
}

int cmd_map_line(const std::string& map_name, double a, double b,
                 const std::string& range, int samples, double tol,
                 const std::string& out_path) {
    MapId id = map_id_from_string(map_name);
    Line line{a, b};
    CurveTranslate ct = line_image_translate(id, line); // admissibility gate

    double t0, t1;
    if (range.empty()) {
        Interval dom = line_parameter_domain(id, line);
        if (std::isfinite(dom.lo)) {
            t0 = dom.lo + 0.05 * (1.0 + std::fabs(dom.lo));
            t1 = t0 + 6.0;
        } else {
            t0 = -3.0;
            t1 = 3.0;
        }
    } else {
        auto colon = range.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--range expects LO:HI");
        t0 = std::stod(range.substr(0, colon));
        t1 = std::stod(range.substr(colon + 1));
    }

    auto pts = sample_line_image(id, line, t0, t1, samples);
    double worst = 0.0;
    for (const auto& p : pts) worst = std::fmax(worst, translate_residual(ct, p));
    if (worst > tol) {
        std::fprintf(stderr,
                     "map-line: translate residual %.3e exceeds tolerance %.3e\n", worst,
                     tol);
        return kVerifyFail;
    }

    std::string csv = "# " + to_string(ct.family) + "," + format_double(ct.offset.x) +
                      "," + format_double(ct.offset.y) + "," + std::to_string(ct.branch) +
                      "\nx,y\n";
    for (const auto& p : pts)
        csv += format_double(p.x) + "," + format_double(p.y) + "\n";
    emit(out_path, csv);
    return kOk;
}

void print_report(const IncidenceReport& rep) {
    std::printf("N=%llu, M=%llu, I=%llu, st_ratio=%s\n",
                static_cast<unsigned long long>(rep.points_n),
                static_cast<unsigned long long>(rep.lines_m),
                static_cast<unsigned long long>(rep.incidences),
                format_double(rep.st_ratio).c_str());
}

int cmd_arrange(std::int64_t n, const std::string& map_name, const std::string& out_dir,
                double tol, int threads) {
    if (n < 1) throw std::invalid_argument("arrange: --n must be >= 1");
    if (n > 128)
        throw std::invalid_argument("arrange: --n capped at 128 (2n^3 points)");
    IntArrangement arr = elekes(n);

    std::filesystem::create_directories(out_dir);
    auto path = [&](const char* name) {
        return (std::filesystem::path(out_dir) / name).string();
    };
    write_file(path("points.csv"), points_csv(arr.points));
    write_file(path("lines.csv"), lines_csv(arr.lines));

    if (map_name.empty()) {
        print_report(count_incidences_exact(arr, threads));
        return kOk;
    }
    MapId id = map_id_from_string(map_name);
    MappedArrangement mapped = map_arrangement(arr, id);
    auto counts = count_curve_incidences(mapped, tol, threads);
    write_file(path("curves.csv"), curves_csv(mapped.curves));
    print_report(counts.report);
    std::printf("pullback=%llu, residual=%llu\n",
                static_cast<unsigned long long>(counts.pullback),
                static_cast<unsigned long long>(counts.residual));
    return kOk;
}

int cmd_count_unit_distances(std::vector<std::int64_t> ns, const std::string& out_path) {
    if (ns.empty()) throw std::invalid_argument("count-unit-distances: need --n");
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (auto n : ns)
        if (n < 1) throw std::invalid_argument("count-unit-distances: n must be >= 1");

    std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;
    std::string csv = "N,count\n";
    for (auto n : ns) {
        ScaledGrid g{n};
        std::uint64_t c = unit_pairs_exact(g);
        counts.push_back({g.size(), c});
        csv += std::to_string(g.size()) + "," + std::to_string(c) + "\n";
    }
    emit(out_path, csv);
    if (counts.size() >= 3) {
        double slope = exponent_fit(counts);
        std::printf("slope=%s\n", format_double(slope).c_str());
    }
    return kOk;
}

int cmd_export_svg(const std::vector<std::string>& inputs, const std::string& out_path,
                   const std::string& style) {
    std::vector<std::vector<Vec2>> series;
    for (const auto& in : inputs) series.push_back(parse_xy_csv(read_file(in)));
    std::string svg = svg_polylines(series, style);
    write_file(out_path, svg);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "linecurve: planar maps sending lines to curve translates, exact\n"
        "incidence arrangements, and unit-distance counting.\n"
        "Seeded sweeps use the xoshiro256** generator (Blackman-Vigna),\n"
        "seeded via splitmix64; identical seeds give identical output bytes."};
    app.require_subcommand(1);

    double tol = 1e-9;
    int samples = 1000;
    std::uint64_t seed = 42;
    std::string out_path;
    int threads = 1;

    auto* verify = app.add_subcommand("verify-actions",
                                      "verify the action homomorphism, conjugation "
                                      "identity, and generator commutators");
    std::string case_filter;
    verify->add_option("--case", case_filter, "restrict to one case (A1..A6)");
    verify->add_option("--samples", samples, "random samples per sweep");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--tol", tol, "residual tolerance");

    auto* mapline = app.add_subcommand("map-line",
                                       "sample the image of a line under one of the "
                                       "five maps and emit CSV with its translate");
    std::string map_name;
    double line_a = 0.0, line_b = 0.0;
    std::string range;
    mapline->add_option("--map", map_name, "parabola|log|softplus|negexp|complexlog")
        ->required();
    mapline->add_option("--a", line_a, "line slope")->required();
    mapline->add_option("--b", line_b, "line intercept")->required();
    mapline->add_option("--range", range,
                        "parameter range LO:HI (default: inside the mapped domain)");
    mapline->add_option("--samples", samples, "number of sample rows");
    mapline->add_option("--tol", tol, "translate residual tolerance");
    mapline->add_option("--out", out_path, "output file (default stdout)");

    auto* arrange = app.add_subcommand("arrange",
                                       "build the extremal integer arrangement, "
                                       "optionally map it, count incidences exactly");
    std::int64_t arrange_n = 0;
    std::string arrange_map;
    std::string arrange_out = ".";
    arrange->add_option("--n", arrange_n, "arrangement size parameter")->required();
    arrange->add_option("--map", arrange_map, "map the arrangement through this map");
    arrange->add_option("--out", arrange_out, "output directory for CSV files");
    arrange->add_option("--tol", tol, "residual tolerance for curve incidences");
    arrange->add_option("--threads", threads, "worker threads for counting");

    auto* unit = app.add_subcommand("count-unit-distances",
                                    "exact unit-distance counts on scaled grids under "
                                    "the parabola-lens norm");
    std::vector<std::int64_t> unit_ns;
    unit->add_option("--n", unit_ns, "grid parameter (repeatable)")->required();
    unit->add_option("--out", out_path, "output CSV file (default stdout)");

    auto* svg = app.add_subcommand("export-svg", "render point-series CSV files as SVG");
    std::vector<std::string> svg_inputs;
    std::string svg_out, svg_style;
    svg->add_option("inputs", svg_inputs, "input CSV files (one series each)")
        ->required()
        ->check(CLI::ExistingFile);
    svg->add_option("--out", svg_out, "output SVG file")->required();
    svg->add_option("--style", svg_style, "stroke color for all series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify_actions(case_filter, samples, seed, tol);
        if (mapline->parsed())
            return cmd_map_line(map_name, line_a, line_b, range, samples, tol, out_path);
        if (arrange->parsed())
            return cmd_arrange(arrange_n, arrange_map, arrange_out, tol, threads);
        if (unit->parsed()) return cmd_count_unit_distances(unit_ns, out_path);
        if (svg->parsed()) return cmd_export_svg(svg_inputs, svg_out, svg_style);
    } catch (const map_domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const csv_parse_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::overflow_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "verification error: %s\n", e.what());
        return kVerifyFail;
    }
    return kUsage;
}
