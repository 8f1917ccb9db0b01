// pdda: distance-plot Hurst analysis toolkit.
//
// Subcommands: generate, estimate, sweep, recurrence.
// Exit codes: 0 success, 2 parameter error, 3 data error,
// 4 estimation/fit error.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdda/arfima.hpp"
#include "pdda/errors.hpp"
#include "pdda/estimators.hpp"
#include "pdda/io.hpp"
#include "pdda/montecarlo.hpp"
#include "pdda/path.hpp"
#include "pdda/recurrence.hpp"
#include "pdda/rng.hpp"

namespace {

using namespace pdda;

struct WindowFlag {
    std::string text;

    FitRange parse_or(FitRange fallback) const {
        if (text.empty()) return fallback;
        const auto colon = text.find(':');
        if (colon == std::string::npos)
            throw ParameterError("window '" + text + "' must look like lo:hi");
        double lo = 0.0, hi = 0.0;
        try {
            lo = std::stod(text.substr(0, colon));
            hi = std::stod(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw ParameterError("window '" + text + "' must look like lo:hi");
        }
        if (!(lo > 0.0) || !(hi > lo))
            throw ParameterError("window '" + text + "' needs 0 < lo < hi");
        return {lo, hi};
    }
};

// Writes to the path, or to stdout when the path is empty.
void write_text(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << content;
}

TimeSeries load_series_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return load_series_json(in);
    return load_series_csv(in);
}

struct GenerateFlags {
    std::vector<double> hurst;
    double rho = 0.0;
    int n = 0;
    int truncation = 0;
    int burn_in = 0;
    std::uint64_t seed = 0;

    ArfimaSpec spec() const {
        ArfimaSpec s;
        s.hurst = hurst;
        s.innovation_correlation = rho;
        s.length = n;
        s.truncation = truncation;
        s.burn_in = burn_in;
        s.seed = seed;
        return s.resolved();
    }
};

void add_generation_flags(CLI::App* cmd, GenerateFlags& flags, bool required) {
    auto* hurst = cmd->add_option("--hurst", flags.hurst,
                                  "Hurst exponent per coordinate, e.g. 0.7 or 0.7,0.3")
                      ->delimiter(',');
    if (required) hurst->required();
    cmd->add_option("--rho", flags.rho, "Pairwise innovation correlation between coordinates");
    auto* n = cmd->add_option("--n", flags.n, "Samples to generate");
    if (required) n->required();
    cmd->add_option("--k,--truncation", flags.truncation,
                    "Moving-average filter length (0 = max(n, 2048))");
    cmd->add_option("--burn-in", flags.burn_in, "Extra leading samples to discard");
    cmd->add_option("--seed", flags.seed, "Generator seed");
}

int cmd_generate(const GenerateFlags& flags, const std::string& out_path,
                 const std::string& format) {
    const ArfimaSpec spec = flags.spec();
    spec.validate();
    const TimeSeries series = generate(spec);

    std::ostringstream body;
    if (format == "json") save_series_json(body, series);
    else save_series_csv(body, series);
    write_text(out_path, body.str());

    if (!out_path.empty()) {
        std::ofstream side(out_path + ".spec.json", std::ios::binary);
        side << spec_to_json(spec).dump(2) << "\n";
    } else {
        std::cerr << "resolved spec: " << spec_to_json(spec).dump() << "\n";
    }
    return 0;
}

int cmd_estimate(const GenerateFlags& flags, const std::string& in_path,
                 const WindowFlag& rs_window, const WindowFlag& msd_window, bool local_slope,
                 bool weighted, const std::string& out_path, const std::string& format) {
    TimeSeries series;
    if (!in_path.empty()) {
        series = load_series_file(in_path);
    } else {
        if (flags.hurst.empty() || flags.n == 0)
            throw ParameterError("estimate: provide --in or --hurst and --n");
        const ArfimaSpec spec = flags.spec();
        spec.validate();
        series = generate(spec);
    }

    EstimatorSettings settings;
    settings.rs_range = rs_window.parse_or(default_rs_range(series.length()));
    settings.msd_range = msd_window.parse_or(default_msd_range(series.length()));
    settings.weight_by_pairs = weighted;
    const EstimatorReport report = estimate(series, settings, local_slope);

    std::ostringstream body;
    if (format == "csv") save_report_csv(body, report);
    else body << report_to_json(report).dump(2) << "\n";
    write_text(out_path, body.str());
    return 0;
}

int cmd_sweep(const std::vector<double>& h_values, int m, std::optional<double> h_fixed,
              const GenerateFlags& flags, int replicates, const WindowFlag& rs_window,
              const WindowFlag& msd_window, int threads, const std::string& out_path,
              const std::string& format, const std::string& replicate_out) {
    if (h_values.empty()) throw ParameterError("sweep: --h-values is required");
    if (m < 1) throw ParameterError("sweep: --m must be at least 1");

    SweepConfig config;
    for (double h : h_values) {
        std::vector<double> point;
        if (h_fixed) {
            point = {h, *h_fixed};
        } else {
            point.assign(static_cast<std::size_t>(m), h);
        }
        config.h_points.push_back(std::move(point));
    }
    config.innovation_correlation = flags.rho;
    config.length = flags.n;
    config.replicates = replicates;
    config.master_seed = flags.seed;
    config.truncation = flags.truncation;
    config.burn_in = flags.burn_in;
    config.threads = threads;
    if (flags.n == 0) throw ParameterError("sweep: --n is required");
    config.settings.rs_range = rs_window.parse_or(FitRange{0, 0});
    config.settings.msd_range = msd_window.parse_or(FitRange{0, 0});

    const SweepResult result = run_sweep(config);

    std::ostringstream body;
    if (format == "json") body << sweep_to_json(result).dump(2) << "\n";
    else save_sweep_csv(body, result);
    write_text(out_path, body.str());

    if (!replicate_out.empty()) {
        std::ostringstream reps;
        save_replicates_csv(reps, result);
        write_text(replicate_out, reps.str());
    }

    int failures = 0;
    for (const auto& point : result.points) failures += point.rs.failures + point.msd.failures;
    if (failures > 0) {
        std::cerr << "sweep: " << failures << " replicate estimator failures\n";
        for (const auto& point : result.points)
            for (const auto& msg : point.failure_messages) std::cerr << "  " << msg << "\n";
        throw EstimationError("sweep: " + std::to_string(failures) + " replicate failures");
    }
    return 0;
}

int cmd_recurrence(const GenerateFlags& flags, const std::string& in_path, double epsilon,
                   const WindowFlag& tau_fit, int tau_max, int replicates,
                   std::optional<double> h_max_flag, const std::string& out_path,
                   const std::string& curve_out) {
    if (!(epsilon > 0.0)) throw ParameterError("recurrence: --epsilon must be positive");
    if (replicates < 1) throw ParameterError("recurrence: --replicates must be at least 1");
    const FitRange fit_range = tau_fit.parse_or(FitRange{8, 55});

    double h_max = 0.0;
    int m = 0;

    std::vector<RecurrenceCurve> curves;
    if (!in_path.empty()) {
        if (replicates != 1)
            throw ParameterError("recurrence: --replicates applies only to generated input");
        if (!h_max_flag)
            throw ParameterError("recurrence: --h-max is required with --in");
        const TimeSeries series = load_series_file(in_path);
        h_max = *h_max_flag;
        m = series.dimension();
        const int cap = tau_max > 0 ? tau_max : static_cast<int>(2 * fit_range.hi);
        const auto lags = dense_lag_grid(series.length(), cap);
        curves.push_back(recurrence_probability(
            cumulative_path(normalize_unit_variance(series)), epsilon, lags));
    } else {
        if (flags.hurst.empty() || flags.n == 0)
            throw ParameterError("recurrence: provide --in or --hurst and --n");
        h_max = h_max_flag ? *h_max_flag
                           : *std::max_element(flags.hurst.begin(), flags.hurst.end());
        m = static_cast<int>(flags.hurst.size());
        const int cap = tau_max > 0 ? tau_max : static_cast<int>(2 * fit_range.hi);
        const auto lags = dense_lag_grid(flags.n, cap);
        for (int r = 0; r < replicates; ++r) {
            ArfimaSpec spec = flags.spec();
            spec.seed = replicates == 1 ? flags.seed : split_seed(flags.seed, 0, r);
            spec.validate();
            curves.push_back(recurrence_probability(
                cumulative_path(normalize_unit_variance(generate(spec))), epsilon, lags));
        }
    }

    std::vector<double> per_seed;
    for (const auto& curve : curves)
        per_seed.push_back(decay_report(curve, h_max, m, fit_range).fitted_decay);

    // Aggregate curve: counts pooled across seeds.
    RecurrenceCurve pooled = curves.front();
    for (std::size_t s = 1; s < curves.size(); ++s) {
        for (std::size_t i = 0; i < pooled.lags.size(); ++i) {
            pooled.recurrent[i] += curves[s].recurrent[i];
            pooled.total[i] += curves[s].total[i];
        }
    }
    for (std::size_t i = 0; i < pooled.lags.size(); ++i)
        pooled.p[i] = static_cast<double>(pooled.recurrent[i]) / pooled.total[i];

    RangeDimensionReport pooled_report = decay_report(pooled, h_max, m, fit_range);
    double mean_fitted = 0.0;
    for (double d : per_seed) mean_fitted += d;
    mean_fitted /= static_cast<double>(per_seed.size());

    nlohmann::json j = range_report_to_json(pooled_report);
    j["fitted_decay"] = mean_fitted;  // mean of per-seed fits
    j["fitted_decay_pooled"] = pooled_report.fitted_decay;
    j["fitted_decay_per_seed"] = per_seed;
    j["epsilon"] = epsilon;
    j["replicates"] = static_cast<int>(curves.size());
    write_text(out_path, j.dump(2) + "\n");

    if (!curve_out.empty()) {
        std::ostringstream body;
        save_curve_csv(body, pooled);
        write_text(curve_out, body.str());
    }
    if (pooled_report.zero_lags_excluded > 0)
        std::cerr << "recurrence: " << pooled_report.zero_lags_excluded
                  << " lags with zero recurrences excluded from the fit\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance-plot Hurst exponent analysis (PDDA)"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Configuration file (ini; keys live under a [subcommand] section)");

    // generate
    auto* gen = app.add_subcommand("generate", "Generate an ARFIMA(0,d,0) series");
    GenerateFlags gen_flags;
    std::string gen_out, gen_format = "csv";
    add_generation_flags(gen, gen_flags, true);
    gen->add_option("--out", gen_out, "Output path (default stdout)");
    gen->add_option("--format", gen_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    gen->fallthrough();

    // estimate
    auto* est = app.add_subcommand("estimate", "Estimate Hurst exponents for a series");
    GenerateFlags est_flags;
    std::string est_in, est_out, est_format = "json";
    WindowFlag est_rs, est_msd;
    bool est_local = false, est_weighted = false;
    add_generation_flags(est, est_flags, false);
    est->add_option("--in", est_in, "Input series (csv or json)");
    est->add_option("--rs-window", est_rs.text, "Window-size fit range lo:hi");
    est->add_option("--msd-window", est_msd.text, "Lag fit range lo:hi");
    est->add_flag("--local-slope", est_local, "Include the scale-dependent exponent curve");
    est->add_flag("--weighted", est_weighted, "Weight the lag fit by pair counts");
    est->add_option("--out", est_out, "Output path (default stdout)");
    est->add_option("--format", est_format, "json or csv")
        ->check(CLI::IsMember({"csv", "json"}));
    est->fallthrough();

    // sweep
    auto* swp = app.add_subcommand("sweep", "Monte Carlo bias/SD/RMSE sweep");
    GenerateFlags swp_flags;
    std::vector<double> swp_h_values;
    int swp_m = 1, swp_replicates = 1, swp_threads = 1;
    double swp_h2 = -1.0;
    std::string swp_out, swp_format = "csv", swp_rep_out;
    WindowFlag swp_rs, swp_msd;
    swp->add_option("--h-values", swp_h_values, "Swept Hurst values")->delimiter(',');
    swp->add_option("--m", swp_m, "Coordinates per series (isotropic)");
    swp->add_option("--h2", swp_h2, "Fixed second-coordinate Hurst (anisotropic bivariate)");
    swp->add_option("--rho", swp_flags.rho, "Pairwise innovation correlation");
    swp->add_option("--n", swp_flags.n, "Samples per replicate");
    swp->add_option("--k,--truncation", swp_flags.truncation, "Filter length (0 = default)");
    swp->add_option("--burn-in", swp_flags.burn_in, "Extra discarded samples");
    swp->add_option("--replicates", swp_replicates, "Replicates per point");
    swp->add_option("--seed", swp_flags.seed, "Master seed");
    swp->add_option("--rs-window", swp_rs.text, "Window-size fit range lo:hi");
    swp->add_option("--msd-window", swp_msd.text, "Lag fit range lo:hi");
    swp->add_option("--threads", swp_threads, "Worker threads (0 = auto)");
    swp->add_option("--out", swp_out, "Output path (default stdout)");
    swp->add_option("--format", swp_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    swp->add_option("--per-replicate-out", swp_rep_out, "Optional per-replicate estimates CSV");
    swp->fallthrough();

    // recurrence
    auto* rec = app.add_subcommand("recurrence", "Recurrence probability decay analysis");
    GenerateFlags rec_flags;
    std::string rec_in, rec_out, rec_curve_out;
    double rec_epsilon = 0.2, rec_h_max = -1.0;
    int rec_tau_max = 0, rec_replicates = 1;
    WindowFlag rec_fit;
    add_generation_flags(rec, rec_flags, false);
    rec->add_option("--in", rec_in, "Input series (csv or json)");
    rec->add_option("--epsilon", rec_epsilon, "Recurrence threshold after unit-variance scaling");
    rec->add_option("--tau-fit", rec_fit.text, "Decay fit range lo:hi (default 8:55)");
    rec->add_option("--tau-max", rec_tau_max, "Largest lag in the curve (default 2x fit hi)");
    rec->add_option("--replicates", rec_replicates, "Seeds to average (generated input only)");
    rec->add_option("--h-max", rec_h_max, "Reference Hurst exponent (required with --in)");
    rec->add_option("--out", rec_out, "Report JSON path (default stdout)");
    rec->add_option("--curve-out", rec_curve_out, "Recurrence curve CSV path");
    rec->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_generate(gen_flags, gen_out, gen_format);
        if (est->parsed())
            return cmd_estimate(est_flags, est_in, est_rs, est_msd, est_local, est_weighted,
                                est_out, est_format);
        if (swp->parsed()) {
            std::optional<double> h2;
            if (swp_h2 >= 0.0) h2 = swp_h2;
            return cmd_sweep(swp_h_values, swp_m, h2, swp_flags, swp_replicates, swp_rs, swp_msd,
                             swp_threads, swp_out, swp_format, swp_rep_out);
        }
        if (rec->parsed()) {
            std::optional<double> h_max;
            if (rec_h_max >= 0.0) h_max = rec_h_max;
            return cmd_recurrence(rec_flags, rec_in, rec_epsilon, rec_fit, rec_tau_max,
                                  rec_replicates, h_max, rec_out, rec_curve_out);
        }
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const FitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const EstimationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
