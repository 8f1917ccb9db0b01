#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pdda/arfima.hpp"
#include "pdda/estimators.hpp"
#include "pdda/montecarlo.hpp"
#include "pdda/path.hpp"
#include "pdda/recurrence.hpp"

namespace pdda {

// All CSV numbers are written with %.17g: parsing what was emitted
// recovers the exact double, so emit(parse(file)) == file.
std::string format_double(double v);

// Series CSV: header "t,x1,...,xm", t starting at 1.
void save_series_csv(std::ostream& out, const TimeSeries& x);
TimeSeries load_series_csv(std::istream& in);

// Series JSON: {"columns":[...], "values":[[row]...], "spec": {...}?}.
void save_series_json(std::ostream& out, const TimeSeries& x);
TimeSeries load_series_json(std::istream& in);

// "tau,m2,pairs"
void save_profile_csv(std::ostream& out, const DistanceProfile& profile);

// "n,rd,sd"
void save_geometry_csv(std::ostream& out, const WindowGeometry& geometry);
WindowGeometry load_geometry_csv(std::istream& in);

// Dense distance-matrix grid, one row per line.
void save_matrix_csv(std::ostream& out, const Matrix& matrix);

// "tau,p,recurrent,total"
void save_curve_csv(std::ostream& out, const RecurrenceCurve& curve);
RecurrenceCurve load_curve_csv(std::istream& in);

nlohmann::json spec_to_json(const ArfimaSpec& spec);
ArfimaSpec spec_from_json(const nlohmann::json& j);

nlohmann::json fit_to_json(const LogLogFit& fit);
LogLogFit fit_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const EstimatorReport& report);
EstimatorReport report_from_json(const nlohmann::json& j);

// Flat "record,key,value" rows carrying the same content as the JSON.
void save_report_csv(std::ostream& out, const EstimatorReport& report);
EstimatorReport load_report_csv(std::istream& in);

nlohmann::json range_report_to_json(const RangeDimensionReport& report);
RangeDimensionReport range_report_from_json(const nlohmann::json& j);

// "h_ref,estimator,mean_h,bias,sd,rmse,replicates,failures"
void save_sweep_csv(std::ostream& out, const SweepResult& result);
nlohmann::json sweep_to_json(const SweepResult& result);

// "h_ref,estimator,replicate,h"
void save_replicates_csv(std::ostream& out, const SweepResult& result);

} // namespace pdda
