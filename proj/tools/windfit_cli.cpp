// windfit command-line front end: fit wind-speed distributions to turbine
// telemetry, draw diagnostic figures, generate synthetic samples and sanity
// check CSV inputs.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid input or degenerate data,
// 3 internal numeric failure.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "windfit/diagnostics.hpp"
#include "windfit/distributions.hpp"
#include "windfit/empirical.hpp"
#include "windfit/errors.hpp"
#include "windfit/estimation.hpp"
#include "windfit/ingest.hpp"
#include "windfit/report.hpp"
#include "windfit/sample.hpp"
#include "windfit/svg.hpp"

namespace fs = std::filesystem;
using namespace windfit;

namespace {

struct Options {
    std::string input;
    std::string column = "nacelle";
    std::string mode = "full";
    std::vector<std::string> kinds = {"lognormal", "weibull", "gamma", "beta"};
    std::string out_dir = ".";
    std::string format = "svg";
    std::uint64_t seed = 1;
    int bins = 0;  // 0 = automatic
    bool drop_zeros = false;
    double tol = 1e-9;
    int max_iter = 20000;
    double eps_factor = 1e-6;
};

struct SampleOptions {
    std::string kind = "weibull";
    double alpha = 1.0;
    std::optional<double> beta;
    double loc = 0.0;
    double scale = 1.0;
    std::uint64_t n = 0;
};

DistributionKind parse_kind(const std::string& name) {
    for (DistributionKind kind : kAllKinds)
        if (name == kind_name(kind)) return kind;
    throw std::domain_error("unknown distribution kind: " + name);
}

SpeedColumn parse_column(const std::string& name) {
    if (name == "nacelle") return SpeedColumn::Nacelle;
    if (name == "10m") return SpeedColumn::TenMeters;
    if (name == "50m") return SpeedColumn::FiftyMeters;
    throw std::domain_error("unknown column: " + name + " (expected nacelle|10m|50m)");
}

ParametrizationMode parse_mode(const std::string& name) {
    if (name == "full") return ParametrizationMode::Full;
    if (name == "reduced") return ParametrizationMode::Reduced;
    throw std::domain_error("unknown mode: " + name + " (expected full|reduced)");
}

std::vector<DistributionKind> parse_kinds(const std::vector<std::string>& names) {
    if (names.empty()) throw std::domain_error("--kinds must name at least one distribution");
    std::vector<DistributionKind> kinds;
    for (DistributionKind kind : kAllKinds) {  // canonical order regardless of flag order
        for (const std::string& name : names) {
            if (parse_kind(name) == kind) {
                kinds.push_back(kind);
                break;
            }
        }
    }
    if (kinds.empty()) throw std::domain_error("--kinds must name at least one distribution");
    return kinds;
}

fs::path prepare_out_dir(const Options& opts) {
    fs::path dir(opts.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error("cannot create output directory " + dir.string());
    return dir;
}

Sample load_input_sample(const Options& opts, ReportContext* ctx) {
    if (opts.input.empty()) throw std::domain_error("--input is required");
    const auto [records, report] = load_csv(opts.input);
    Sample sample = extract_sample(records, parse_column(opts.column), opts.input);

    std::size_t dropped = 0;
    if (opts.drop_zeros) {
        std::vector<double> kept;
        kept.reserve(sample.size());
        for (double v : sample.values())
            if (v > 0.0)
                kept.push_back(v);
            else
                ++dropped;
        if (kept.empty())
            throw empty_dataset_error("all observations are zero after --drop-zeros");
        sample = Sample(std::move(kept), sample.source_label());
    }
    if (ctx) {
        ctx->input = opts.input;
        ctx->column = opts.column;
        ctx->mode = opts.mode;
        ctx->n = sample.size();
        ctx->dropped_zeros = dropped;
    }
    return sample;
}

FitSettings settings_from(const Options& opts) {
    FitSettings s;
    s.tol = opts.tol;
    s.max_iter = opts.max_iter;
    s.eps_factor = opts.eps_factor;
    return s;
}

// compare() wants two models; mirror its row layout when only one was asked for.
FitComparison build_comparison(const std::vector<FittedModel>& models, const Sample& sample) {
    if (models.size() >= 2) return compare(models, sample);
    const FittedModel& m = models.front();
    const QQReport qq = qq_report(m, sample);
    FitComparison cmp;
    cmp.per_model.push_back({m.spec.kind, m.spec.mode, m.log_likelihood, m.aic,
                             ks_statistic(m, sample), qq.max_abs_dev, qq.tail_abs_dev,
                             m.converged});
    cmp.ranking.push_back(m.spec.kind);
    cmp.winner = m.spec.kind;
    cmp.tail_winner = m.spec.kind;
    return cmp;
}

int run_fit(const Options& opts) {
    ReportContext ctx;
    const Sample sample = load_input_sample(opts, &ctx);
    const ParametrizationMode mode = parse_mode(opts.mode);
    const FitSettings settings = settings_from(opts);

    std::vector<FittedModel> models;
    for (DistributionKind kind : parse_kinds(opts.kinds))
        models.push_back(fit(DistributionSpec{kind, mode}, sample, settings));

    const FitComparison comparison = build_comparison(models, sample);
    const fs::path out = prepare_out_dir(opts) / "fit_report.txt";
    svg::write_file(out, format_fit_report(ctx, models, comparison));
    std::cout << "wrote " << out.string() << "\n";
    return 0;
}

void write_curve_csv(const fs::path& path, const std::vector<double>& xs,
                     const std::vector<double>& ys) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += fmt_g10(xs[i]) + "," + fmt_g10(ys[i]) + "\n";
    svg::write_file(path, out);
}

std::vector<svg::Point> zip_points(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<svg::Point> pts;
    pts.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], ys[i]);
    return pts;
}

int run_plot(const Options& opts) {
    ReportContext ctx;
    const Sample sample = load_input_sample(opts, &ctx);
    const ParametrizationMode mode = parse_mode(opts.mode);
    const FitSettings settings = settings_from(opts);
    const bool csv_points = opts.format == "csv-points";
    if (!csv_points && opts.format != "svg")
        throw std::domain_error("unknown format: " + opts.format + " (expected svg|csv-points)");

    const fs::path dir = prepare_out_dir(opts);
    const std::vector<double> grid = evaluation_grid(sample, 1000);
    const BinRule rule = opts.bins > 0 ? BinRule::fixed(opts.bins) : BinRule::automatic();
    const Histogram hist = histogram(sample, rule);
    const EcdfCurve emp = ecdf(sample);

    for (DistributionKind kind : parse_kinds(opts.kinds)) {
        const FittedModel model = fit(DistributionSpec{kind, mode}, sample, settings);
        const std::string base = std::string(kind_name(kind));

        std::vector<double> pdf_ys, cdf_ys;
        pdf_ys.reserve(grid.size());
        cdf_ys.reserve(grid.size());
        for (double x : grid) {
            pdf_ys.push_back(pdf(kind, model.params, x));
            cdf_ys.push_back(cdf(kind, model.params, x));
        }
        const QQReport qq = qq_report(model, sample);

        if (csv_points) {
            write_curve_csv(dir / ("pdf_" + base + ".csv"), grid, pdf_ys);
            write_curve_csv(dir / ("cdf_" + base + ".csv"), grid, cdf_ys);
            write_curve_csv(dir / ("qq_" + base + ".csv"), qq.theoretical_q, qq.empirical_q);
            std::cout << "wrote " << (dir / ("{pdf,cdf,qq}_" + base + ".csv")).string() << "\n";
            continue;
        }

        svg::Chart pdf_chart("PDF of " + base + " vs data histogram", "wind speed [m/s]",
                             "density [1/(m/s)]");
        std::vector<svg::Point> bars;
        std::vector<double> widths;
        for (std::size_t i = 0; i < hist.counts.size(); ++i) {
            const double w = hist.bin_edges[i + 1] - hist.bin_edges[i];
            bars.emplace_back(hist.bin_edges[i] + w / 2.0, hist.density[i]);
            widths.push_back(w);
        }
        pdf_chart.add_bars(std::move(bars), std::move(widths), "#9ecae1", "data");
        pdf_chart.add_line(zip_points(grid, pdf_ys), "#d62728", base);
        svg::write_file(dir / ("pdf_" + base + ".svg"), pdf_chart.render());

        svg::Chart cdf_chart("CDF of " + base + " vs empirical distribution", "wind speed [m/s]",
                             "probability");
        cdf_chart.add_steps(zip_points(emp.xs, emp.ps), "#7f7f7f", "empirical");
        cdf_chart.add_line(zip_points(grid, cdf_ys), "#d62728", base);
        svg::write_file(dir / ("cdf_" + base + ".svg"), cdf_chart.render());

        svg::Chart qq_chart("Q-Q plot for " + base, "theoretical quantiles [m/s]",
                            "empirical quantiles [m/s]");
        // thin the scatter for rendering; the csv-points mode keeps every point
        const std::size_t stride = std::max<std::size_t>(1, qq.theoretical_q.size() / 800);
        std::vector<svg::Point> dots;
        for (std::size_t i = 0; i < qq.theoretical_q.size(); i += stride)
            dots.emplace_back(qq.theoretical_q[i], qq.empirical_q[i]);
        dots.emplace_back(qq.theoretical_q.back(), qq.empirical_q.back());
        const double lo = std::min(qq.theoretical_q.front(), qq.empirical_q.front());
        const double hi = std::max(qq.theoretical_q.back(), qq.empirical_q.back());
        qq_chart.add_line({{lo, lo}, {hi, hi}}, "#7f7f7f", "y = x");
        qq_chart.add_points(std::move(dots), "#1f77b4", base);
        svg::write_file(dir / ("qq_" + base + ".svg"), qq_chart.render());

        std::cout << "wrote " << (dir / ("{pdf,cdf,qq}_" + base + ".svg")).string() << "\n";
    }
    return 0;
}

int run_sample(const Options& opts, const SampleOptions& sopts) {
    if (sopts.n == 0) throw std::domain_error("--n must be at least 1");
    const DistributionKind kind = parse_kind(sopts.kind);
    ParamSet params;
    params.alpha = sopts.alpha;
    params.loc = sopts.loc;
    params.scale = sopts.scale;
    if (kind == DistributionKind::Beta) {
        if (!sopts.beta) throw std::domain_error("--beta is required for the beta distribution");
        params.beta = *sopts.beta;
    } else if (sopts.beta) {
        throw std::domain_error("--beta only applies to the beta distribution");
    }
    validate_params(kind, params);

    const Sample draws = draw_sample(kind, params, sopts.n, opts.seed);
    std::string out;
    char buf[40];
    for (double v : draws.values()) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        out += buf;
    }
    const fs::path path = prepare_out_dir(opts) / ("sample_" + sopts.kind + ".csv");
    svg::write_file(path, out);
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

int run_ingest_check(const Options& opts) {
    if (opts.input.empty()) throw std::domain_error("--input is required");
    const auto [records, report] = load_csv(opts.input);

    std::cout << "rows_read=" << report.rows_read << "\n";
    std::cout << "rows_accepted=" << report.rows_accepted << "\n";
    std::cout << "rows_rejected=" << report.rows_rejected << "\n";
    for (const auto& [reason, count] : report.rejection_reasons)
        std::cout << "rejected[" << reason << "]=" << count << "\n";
    if (const std::optional<int> cadence = cadence_mode_minutes(records))
        std::cout << "cadence_mode_minutes=" << *cadence << "\n";
    for (SpeedColumn column :
         {SpeedColumn::Nacelle, SpeedColumn::TenMeters, SpeedColumn::FiftyMeters}) {
        const Sample s = extract_sample(records, column);
        std::cout << speed_column_name(column) << ": n=" << s.size() << " min=" << fmt_g10(s.min())
                  << " max=" << fmt_g10(s.max()) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    SampleOptions sopts;

    CLI::App app{"windfit — wind-speed distribution fitting toolkit"};
    app.set_config("--config", "", "flat key=value config file");
    app.require_subcommand(1);

    app.add_option("--input", opts.input, "telemetry CSV (semicolon-delimited, one header line)");
    app.add_option("--column", opts.column, "speed column: nacelle|10m|50m")
        ->default_str("nacelle");
    app.add_option("--mode", opts.mode, "parametrization: full|reduced")->default_str("full");
    app.add_option("--kinds", opts.kinds, "distributions to fit (comma-separated)")
        ->delimiter(',');
    app.add_option("--out", opts.out_dir, "output directory")
        ->envname("WINDFIT_OUT")
        ->default_str(".");
    app.add_option("--format", opts.format, "figure format: svg|csv-points")->default_str("svg");
    app.add_option("--seed", opts.seed, "PRNG seed for sampling")->default_str("1");
    app.add_option("--bins", opts.bins, "fixed histogram bin count (default: automatic)");
    app.add_flag("--drop-zeros", opts.drop_zeros, "drop exact-zero wind speeds before fitting");
    app.add_option("--tol", opts.tol, "optimizer convergence tolerance")->default_str("1e-9");
    app.add_option("--max-iter", opts.max_iter, "optimizer iteration cap")->default_str("20000");
    app.add_option("--eps-factor", opts.eps_factor,
                   "support guard for full-mode locations, as a fraction of the data range")
        ->default_str("1e-6");

    CLI::App* cmd_fit = app.add_subcommand("fit", "fit distributions and write a report");
    CLI::App* cmd_plot =
        app.add_subcommand("plot", "emit pdf/cdf/Q-Q figures for the fitted models");
    CLI::App* cmd_sample = app.add_subcommand("sample", "draw synthetic values from a model");
    CLI::App* cmd_ingest = app.add_subcommand("ingest-check", "parse a CSV and print a summary");
    for (CLI::App* sub : {cmd_fit, cmd_plot, cmd_sample, cmd_ingest}) sub->fallthrough();

    cmd_sample->add_option("--kind", sopts.kind, "distribution kind")->required();
    cmd_sample->add_option("--alpha", sopts.alpha, "shape")->required();
    cmd_sample->add_option("--beta", sopts.beta, "second shape (beta distribution only)");
    cmd_sample->add_option("--loc", sopts.loc, "location [m/s]")->default_str("0");
    cmd_sample->add_option("--scale", sopts.scale, "scale [m/s]")->required();
    cmd_sample->add_option("--n", sopts.n, "number of draws")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are invalid input
    }

    try {
        if (cmd_fit->parsed()) return run_fit(opts);
        if (cmd_plot->parsed()) return run_plot(opts);
        if (cmd_sample->parsed()) return run_sample(opts, sopts);
        if (cmd_ingest->parsed()) return run_ingest_check(opts);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const empty_dataset_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const degenerate_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
