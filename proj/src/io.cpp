#include "pdda/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "pdda/errors.hpp"

namespace pdda {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

double parse_double(const std::string& cell, int line_no) {
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || (end && *end != '\0' && *end != '\r'))
        throw DataError("csv: cannot parse '" + cell + "' on line " + std::to_string(line_no));
    if (!std::isfinite(v))
        throw DataError("csv: non-finite value on line " + std::to_string(line_no));
    return v;
}

long long parse_int(const std::string& cell, int line_no) {
    char* end = nullptr;
    const long long v = std::strtoll(cell.c_str(), &end, 10);
    if (end == cell.c_str() || (end && *end != '\0' && *end != '\r'))
        throw DataError("csv: cannot parse integer '" + cell + "' on line " + std::to_string(line_no));
    return v;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void save_series_csv(std::ostream& out, const TimeSeries& x) {
    out << "t";
    for (int c = 0; c < x.dimension(); ++c) out << ",x" << c + 1;
    out << "\n";
    for (int t = 0; t < x.length(); ++t) {
        out << t + 1;
        for (int c = 0; c < x.dimension(); ++c) out << "," << format_double(x.values(t, c));
        out << "\n";
    }
}

TimeSeries load_series_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DataError("csv: empty series file");
    const auto header = split_line(strip_cr(line));
    if (header.size() < 2 || header[0] != "t")
        throw DataError("csv: expected header 't,x1,...'");
    const int m = static_cast<int>(header.size()) - 1;

    std::vector<double> flat;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto cells = split_line(line);
        if (static_cast<int>(cells.size()) != m + 1)
            throw DataError("csv: wrong column count on line " + std::to_string(line_no));
        for (int c = 1; c <= m; ++c) flat.push_back(parse_double(cells[c], line_no));
    }
    const int n = static_cast<int>(flat.size()) / m;
    if (n < 2) throw DataError("csv: series needs at least 2 rows");

    TimeSeries x;
    x.values = Matrix(n, m);
    for (int t = 0; t < n; ++t)
        for (int c = 0; c < m; ++c) x.values(t, c) = flat[static_cast<std::size_t>(t) * m + c];
    return x;
}

void save_series_json(std::ostream& out, const TimeSeries& x) {
    nlohmann::json j;
    for (int c = 0; c < x.dimension(); ++c) j["columns"].push_back("x" + std::to_string(c + 1));
    auto& rows = j["values"];
    rows = nlohmann::json::array();
    for (int t = 0; t < x.length(); ++t) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < x.dimension(); ++c) row.push_back(x.values(t, c));
        rows.push_back(std::move(row));
    }
    if (x.spec) j["spec"] = spec_to_json(*x.spec);
    out << j.dump(2) << "\n";
}

TimeSeries load_series_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("json: ") + e.what());
    }
    const auto& rows = j.at("values");
    const int n = static_cast<int>(rows.size());
    if (n < 2) throw DataError("json: series needs at least 2 rows");
    const int m = static_cast<int>(rows.front().size());

    TimeSeries x;
    x.values = Matrix(n, m);
    for (int t = 0; t < n; ++t) {
        if (static_cast<int>(rows[t].size()) != m)
            throw DataError("json: ragged series rows");
        for (int c = 0; c < m; ++c) {
            const double v = rows[t][c].get<double>();
            if (!std::isfinite(v)) throw DataError("json: non-finite value in series");
            x.values(t, c) = v;
        }
    }
    if (j.contains("spec")) x.spec = spec_from_json(j["spec"]);
    return x;
}

void save_profile_csv(std::ostream& out, const DistanceProfile& profile) {
    out << "tau,m2,pairs\n";
    for (std::size_t i = 0; i < profile.lags.size(); ++i)
        out << profile.lags[i] << "," << format_double(profile.m2[i]) << ","
            << profile.pair_counts[i] << "\n";
}

void save_geometry_csv(std::ostream& out, const WindowGeometry& geometry) {
    out << "n,rd,sd\n";
    for (std::size_t i = 0; i < geometry.window_sizes.size(); ++i)
        out << geometry.window_sizes[i] << "," << format_double(geometry.diameters[i]) << ","
            << format_double(geometry.dispersions[i]) << "\n";
}

WindowGeometry load_geometry_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "n,rd,sd")
        throw DataError("csv: expected header 'n,rd,sd'");
    WindowGeometry g;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != 3)
            throw DataError("csv: wrong column count on line " + std::to_string(line_no));
        g.window_sizes.push_back(static_cast<int>(parse_int(cells[0], line_no)));
        g.diameters.push_back(parse_double(cells[1], line_no));
        g.dispersions.push_back(parse_double(cells[2], line_no));
    }
    return g;
}

void save_matrix_csv(std::ostream& out, const Matrix& matrix) {
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            if (c) out << ",";
            out << format_double(matrix(r, c));
        }
        out << "\n";
    }
}

void save_curve_csv(std::ostream& out, const RecurrenceCurve& curve) {
    out << "tau,p,recurrent,total\n";
    for (std::size_t i = 0; i < curve.lags.size(); ++i)
        out << curve.lags[i] << "," << format_double(curve.p[i]) << "," << curve.recurrent[i]
            << "," << curve.total[i] << "\n";
}

RecurrenceCurve load_curve_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "tau,p,recurrent,total")
        throw DataError("csv: expected header 'tau,p,recurrent,total'");
    RecurrenceCurve curve;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != 4)
            throw DataError("csv: wrong column count on line " + std::to_string(line_no));
        curve.lags.push_back(static_cast<int>(parse_int(cells[0], line_no)));
        curve.p.push_back(parse_double(cells[1], line_no));
        curve.recurrent.push_back(parse_int(cells[2], line_no));
        curve.total.push_back(static_cast<int>(parse_int(cells[3], line_no)));
    }
    return curve;
}

nlohmann::json spec_to_json(const ArfimaSpec& spec) {
    return {{"hurst", spec.hurst},
            {"rho", spec.innovation_correlation},
            {"n", spec.length},
            {"truncation", spec.truncation},
            {"burn_in", spec.burn_in},
            {"seed", spec.seed}};
}

ArfimaSpec spec_from_json(const nlohmann::json& j) {
    ArfimaSpec spec;
    spec.hurst = j.at("hurst").get<std::vector<double>>();
    spec.innovation_correlation = j.at("rho").get<double>();
    spec.length = j.at("n").get<int>();
    spec.truncation = j.at("truncation").get<int>();
    spec.burn_in = j.at("burn_in").get<int>();
    spec.seed = j.at("seed").get<std::uint64_t>();
    return spec;
}

nlohmann::json fit_to_json(const LogLogFit& fit) {
    return {{"slope", fit.slope},
            {"intercept", fit.intercept},
            {"r2", fit.r_squared},
            {"range", {fit.fit_range.lo, fit.fit_range.hi}},
            {"n_points", fit.points_used}};
}

LogLogFit fit_from_json(const nlohmann::json& j) {
    LogLogFit fit;
    fit.slope = j.at("slope").get<double>();
    fit.intercept = j.at("intercept").get<double>();
    fit.r_squared = j.at("r2").get<double>();
    fit.fit_range.lo = j.at("range")[0].get<double>();
    fit.fit_range.hi = j.at("range")[1].get<double>();
    fit.points_used = j.at("n_points").get<int>();
    return fit;
}

nlohmann::json report_to_json(const EstimatorReport& report) {
    nlohmann::json j;
    j["h_rs"] = report.h_rs;
    j["h_msd"] = report.h_msd;
    j["fits"] = {{"rs", fit_to_json(report.rs_fit)}, {"msd", fit_to_json(report.msd_fit)}};
    if (!report.local_curve.empty()) {
        auto& local = j["local"];
        local = nlohmann::json::array();
        for (const auto& pt : report.local_curve)
            local.push_back({{"tau", pt.tau}, {"h", pt.h}});
    }
    if (!report.warnings.empty()) j["warnings"] = report.warnings;
    return j;
}

EstimatorReport report_from_json(const nlohmann::json& j) {
    EstimatorReport report;
    report.h_rs = j.at("h_rs").get<double>();
    report.h_msd = j.at("h_msd").get<double>();
    report.rs_fit = fit_from_json(j.at("fits").at("rs"));
    report.msd_fit = fit_from_json(j.at("fits").at("msd"));
    if (j.contains("local"))
        for (const auto& pt : j["local"])
            report.local_curve.push_back({pt.at("tau").get<double>(), pt.at("h").get<double>()});
    if (j.contains("warnings")) report.warnings = j["warnings"].get<std::vector<std::string>>();
    return report;
}

void save_report_csv(std::ostream& out, const EstimatorReport& report) {
    out << "record,key,value\n";
    out << "summary,h_rs," << format_double(report.h_rs) << "\n";
    out << "summary,h_msd," << format_double(report.h_msd) << "\n";
    const auto fit_rows = [&](const char* name, const LogLogFit& fit) {
        out << name << ",slope," << format_double(fit.slope) << "\n";
        out << name << ",intercept," << format_double(fit.intercept) << "\n";
        out << name << ",r2," << format_double(fit.r_squared) << "\n";
        out << name << ",range_lo," << format_double(fit.fit_range.lo) << "\n";
        out << name << ",range_hi," << format_double(fit.fit_range.hi) << "\n";
        out << name << ",n_points," << fit.points_used << "\n";
    };
    fit_rows("fit_rs", report.rs_fit);
    fit_rows("fit_msd", report.msd_fit);
    for (const auto& pt : report.local_curve)
        out << "local," << format_double(pt.tau) << "," << format_double(pt.h) << "\n";
}

EstimatorReport load_report_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "record,key,value")
        throw DataError("csv: expected header 'record,key,value'");
    EstimatorReport report;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != 3)
            throw DataError("csv: wrong column count on line " + std::to_string(line_no));
        const std::string& record = cells[0];
        const std::string& key = cells[1];
        if (record == "summary") {
            if (key == "h_rs") report.h_rs = parse_double(cells[2], line_no);
            else if (key == "h_msd") report.h_msd = parse_double(cells[2], line_no);
        } else if (record == "fit_rs" || record == "fit_msd") {
            LogLogFit& fit = record == "fit_rs" ? report.rs_fit : report.msd_fit;
            if (key == "slope") fit.slope = parse_double(cells[2], line_no);
            else if (key == "intercept") fit.intercept = parse_double(cells[2], line_no);
            else if (key == "r2") fit.r_squared = parse_double(cells[2], line_no);
            else if (key == "range_lo") fit.fit_range.lo = parse_double(cells[2], line_no);
            else if (key == "range_hi") fit.fit_range.hi = parse_double(cells[2], line_no);
            else if (key == "n_points") fit.points_used = static_cast<int>(parse_int(cells[2], line_no));
        } else if (record == "local") {
            report.local_curve.push_back(
                {parse_double(cells[1], line_no), parse_double(cells[2], line_no)});
        }
    }
    return report;
}

nlohmann::json range_report_to_json(const RangeDimensionReport& report) {
    return {{"h_max", report.h_max},
            {"m", report.dimension},
            {"d_range_theoretical", report.d_range_theoretical},
            {"predicted_decay", report.predicted_decay},
            {"fitted_decay", report.fitted_decay},
            {"fit", fit_to_json(report.fit)},
            {"zero_lags_excluded", report.zero_lags_excluded}};
}

RangeDimensionReport range_report_from_json(const nlohmann::json& j) {
    RangeDimensionReport report;
    report.h_max = j.at("h_max").get<double>();
    report.dimension = j.at("m").get<int>();
    report.d_range_theoretical = j.at("d_range_theoretical").get<double>();
    report.predicted_decay = j.at("predicted_decay").get<double>();
    report.fitted_decay = j.at("fitted_decay").get<double>();
    report.fit = fit_from_json(j.at("fit"));
    report.zero_lags_excluded = j.at("zero_lags_excluded").get<int>();
    return report;
}

namespace {

void sweep_row(std::ostream& out, const char* name, const EstimatorStats& stats) {
    out << format_double(stats.reference_h) << "," << name << ","
        << format_double(stats.mean_h) << "," << format_double(stats.bias) << ","
        << format_double(stats.sd) << "," << format_double(stats.rmse) << ","
        << stats.replicates_used << "," << stats.failures << "\n";
}

} // namespace

void save_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "h_ref,estimator,mean_h,bias,sd,rmse,replicates,failures\n";
    for (const auto& point : result.points) {
        sweep_row(out, "rs_pdda", point.rs);
        sweep_row(out, "msd_pdda", point.msd);
    }
}

nlohmann::json sweep_to_json(const SweepResult& result) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& point : result.points) {
        auto stats = [](const EstimatorStats& s) {
            return nlohmann::json{{"h_ref", s.reference_h}, {"mean_h", s.mean_h},
                                  {"bias", s.bias},         {"sd", s.sd},
                                  {"rmse", s.rmse},         {"replicates", s.replicates_used},
                                  {"failures", s.failures}};
        };
        points.push_back({{"hurst", point.hurst},
                          {"rs_pdda", stats(point.rs)},
                          {"msd_pdda", stats(point.msd)}});
    }
    return {{"points", points}};
}

void save_replicates_csv(std::ostream& out, const SweepResult& result) {
    out << "h_ref,estimator,replicate,h\n";
    for (const auto& point : result.points) {
        for (std::size_t r = 0; r < point.rs.estimates.size(); ++r)
            out << format_double(point.rs.reference_h) << ",rs_pdda," << r << ","
                << format_double(point.rs.estimates[r]) << "\n";
        for (std::size_t r = 0; r < point.msd.estimates.size(); ++r)
            out << format_double(point.msd.reference_h) << ",msd_pdda," << r << ","
                << format_double(point.msd.estimates[r]) << "\n";
    }
}

} // namespace pdda
