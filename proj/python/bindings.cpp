#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdda/arfima.hpp"
#include "pdda/errors.hpp"
#include "pdda/estimators.hpp"
#include "pdda/montecarlo.hpp"
#include "pdda/path.hpp"
#include "pdda/recurrence.hpp"

namespace py = pybind11;
using namespace pdda;

namespace {

py::array_t<double> to_numpy(const Matrix& m) {
    py::array_t<double> out({m.rows(), m.cols()});
    auto buf = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) buf(r, c) = m(r, c);
    return out;
}

Matrix to_matrix(py::array_t<double, py::array::c_style | py::array::forcecast> arr) {
    if (arr.ndim() == 1) {
        Matrix m(static_cast<std::size_t>(arr.shape(0)), 1);
        auto buf = arr.unchecked<1>();
        for (py::ssize_t t = 0; t < arr.shape(0); ++t) m(t, 0) = buf(t);
        return m;
    }
    if (arr.ndim() != 2) throw ParameterError("expected a 1-D or 2-D array");
    Matrix m(static_cast<std::size_t>(arr.shape(0)), static_cast<std::size_t>(arr.shape(1)));
    auto buf = arr.unchecked<2>();
    for (py::ssize_t t = 0; t < arr.shape(0); ++t)
        for (py::ssize_t c = 0; c < arr.shape(1); ++c) m(t, c) = buf(t, c);
    return m;
}

TimeSeries series_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> arr) {
    TimeSeries x;
    x.values = to_matrix(arr);
    return x;
}

} // namespace

PYBIND11_MODULE(_pdda, m) {
    m.doc() = "Distance-plot Hurst exponent analysis";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<FitError>(m, "FitError", PyExc_RuntimeError);
    py::register_exception<EstimationError>(m, "EstimationError", PyExc_RuntimeError);

    py::class_<ArfimaSpec>(m, "ArfimaSpec")
        .def(py::init([](std::vector<double> hurst, double rho, int n, int truncation,
                         int burn_in, std::uint64_t seed) {
                 ArfimaSpec s;
                 s.hurst = std::move(hurst);
                 s.innovation_correlation = rho;
                 s.length = n;
                 s.truncation = truncation;
                 s.burn_in = burn_in;
                 s.seed = seed;
                 return s;
             }),
             py::arg("hurst"), py::arg("rho") = 0.0, py::arg("n") = 0,
             py::arg("truncation") = 0, py::arg("burn_in") = 0, py::arg("seed") = 0)
        .def_readwrite("hurst", &ArfimaSpec::hurst)
        .def_readwrite("rho", &ArfimaSpec::innovation_correlation)
        .def_readwrite("n", &ArfimaSpec::length)
        .def_readwrite("truncation", &ArfimaSpec::truncation)
        .def_readwrite("burn_in", &ArfimaSpec::burn_in)
        .def_readwrite("seed", &ArfimaSpec::seed)
        .def("resolved", &ArfimaSpec::resolved)
        .def("validate", &ArfimaSpec::validate);

    py::class_<TimeSeries>(m, "TimeSeries")
        .def(py::init(&series_from_array), py::arg("values"))
        .def_property_readonly("values", [](const TimeSeries& x) { return to_numpy(x.values); })
        .def_property_readonly("spec",
                               [](const TimeSeries& x) -> py::object {
                                   if (!x.spec) return py::none();
                                   return py::cast(*x.spec);
                               })
        .def_property_readonly("n", &TimeSeries::length)
        .def_property_readonly("m", &TimeSeries::dimension);

    py::class_<CumulativePath>(m, "CumulativePath")
        .def(py::init([](py::array_t<double, py::array::c_style | py::array::forcecast> arr) {
                 CumulativePath p;
                 p.z = to_matrix(arr);
                 return p;
             }),
             py::arg("z"))
        .def_property_readonly("z", [](const CumulativePath& p) { return to_numpy(p.z); });

    py::class_<DistanceProfile>(m, "DistanceProfile")
        .def_readonly("lags", &DistanceProfile::lags)
        .def_readonly("m2", &DistanceProfile::m2)
        .def_readonly("pair_counts", &DistanceProfile::pair_counts);

    py::class_<WindowGeometry>(m, "WindowGeometry")
        .def_readonly("window_sizes", &WindowGeometry::window_sizes)
        .def_readonly("diameters", &WindowGeometry::diameters)
        .def_readonly("dispersions", &WindowGeometry::dispersions)
        .def_readonly("ratios", &WindowGeometry::ratios)
        .def_readonly("blocks_used", &WindowGeometry::blocks_used);

    py::class_<FitRange>(m, "FitRange")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &FitRange::lo)
        .def_readwrite("hi", &FitRange::hi);

    py::class_<LogLogFit>(m, "LogLogFit")
        .def_readonly("slope", &LogLogFit::slope)
        .def_readonly("intercept", &LogLogFit::intercept)
        .def_readonly("r_squared", &LogLogFit::r_squared)
        .def_readonly("fit_range", &LogLogFit::fit_range)
        .def_readonly("points_used", &LogLogFit::points_used);

    py::class_<HurstEstimate>(m, "HurstEstimate")
        .def_readonly("h", &HurstEstimate::h)
        .def_readonly("fit", &HurstEstimate::fit);

    py::class_<LocalSlopePoint>(m, "LocalSlopePoint")
        .def_readonly("tau", &LocalSlopePoint::tau)
        .def_readonly("h", &LocalSlopePoint::h);

    py::class_<EstimatorReport>(m, "EstimatorReport")
        .def_readonly("h_rs", &EstimatorReport::h_rs)
        .def_readonly("h_msd", &EstimatorReport::h_msd)
        .def_readonly("rs_fit", &EstimatorReport::rs_fit)
        .def_readonly("msd_fit", &EstimatorReport::msd_fit)
        .def_readonly("local_curve", &EstimatorReport::local_curve)
        .def_readonly("warnings", &EstimatorReport::warnings);

    py::class_<EstimatorSettings>(m, "EstimatorSettings")
        .def(py::init<>())
        .def_readwrite("window_grid", &EstimatorSettings::window_grid)
        .def_readwrite("lag_grid", &EstimatorSettings::lag_grid)
        .def_readwrite("rs_range", &EstimatorSettings::rs_range)
        .def_readwrite("msd_range", &EstimatorSettings::msd_range)
        .def_readwrite("weight_by_pairs", &EstimatorSettings::weight_by_pairs)
        .def_readwrite("local_smoothing", &EstimatorSettings::local_smoothing);

    py::class_<RecurrenceCurve>(m, "RecurrenceCurve")
        .def_readonly("epsilon", &RecurrenceCurve::epsilon)
        .def_readonly("lags", &RecurrenceCurve::lags)
        .def_readonly("p", &RecurrenceCurve::p)
        .def_readonly("recurrent", &RecurrenceCurve::recurrent)
        .def_readonly("total", &RecurrenceCurve::total);

    py::class_<RangeDimensionReport>(m, "RangeDimensionReport")
        .def_readonly("h_max", &RangeDimensionReport::h_max)
        .def_readonly("m", &RangeDimensionReport::dimension)
        .def_readonly("d_range_theoretical", &RangeDimensionReport::d_range_theoretical)
        .def_readonly("predicted_decay", &RangeDimensionReport::predicted_decay)
        .def_readonly("fitted_decay", &RangeDimensionReport::fitted_decay)
        .def_readonly("fit", &RangeDimensionReport::fit)
        .def_readonly("zero_lags_excluded", &RangeDimensionReport::zero_lags_excluded);

    py::class_<EstimatorStats>(m, "EstimatorStats")
        .def_readonly("reference_h", &EstimatorStats::reference_h)
        .def_readonly("mean_h", &EstimatorStats::mean_h)
        .def_readonly("bias", &EstimatorStats::bias)
        .def_readonly("sd", &EstimatorStats::sd)
        .def_readonly("rmse", &EstimatorStats::rmse)
        .def_readonly("replicates_used", &EstimatorStats::replicates_used)
        .def_readonly("failures", &EstimatorStats::failures)
        .def_readonly("estimates", &EstimatorStats::estimates);

    py::class_<SweepPointResult>(m, "SweepPointResult")
        .def_readonly("hurst", &SweepPointResult::hurst)
        .def_readonly("rs", &SweepPointResult::rs)
        .def_readonly("msd", &SweepPointResult::msd)
        .def_readonly("failure_messages", &SweepPointResult::failure_messages);

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("h_points", &SweepConfig::h_points)
        .def_readwrite("rho", &SweepConfig::innovation_correlation)
        .def_readwrite("n", &SweepConfig::length)
        .def_readwrite("replicates", &SweepConfig::replicates)
        .def_readwrite("master_seed", &SweepConfig::master_seed)
        .def_readwrite("truncation", &SweepConfig::truncation)
        .def_readwrite("burn_in", &SweepConfig::burn_in)
        .def_readwrite("settings", &SweepConfig::settings)
        .def_readwrite("threads", &SweepConfig::threads);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("points", &SweepResult::points);

    m.def("fractional_coefficients", &fractional_coefficients, py::arg("d"), py::arg("truncation"));
    m.def("innovation_factor",
          [](int dim, double rho) { return to_numpy(innovation_factor(dim, rho)); },
          py::arg("m"), py::arg("rho"));
    m.def("generate", &generate, py::arg("spec"));
    m.def("cumulative_path", &cumulative_path, py::arg("x"));
    m.def("distance_profile", &distance_profile, py::arg("z"), py::arg("lags"));
    m.def("segment_diameter",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> z, int start,
             int size) { return segment_diameter(to_matrix(z), start, size); },
          py::arg("z"), py::arg("start"), py::arg("size"));
    m.def("block_geometry",
          [](const TimeSeries& x, int start, int size) {
              const BlockGeometry g = block_geometry(x, start, size);
              return py::make_tuple(g.diameter, g.dispersion);
          },
          py::arg("x"), py::arg("start"), py::arg("size"));
    m.def("window_geometry", &window_geometry, py::arg("x"), py::arg("window_sizes"));
    m.def("distance_matrix",
          [](const CumulativePath& z, int max_points) { return to_numpy(distance_matrix(z, max_points)); },
          py::arg("z"), py::arg("max_points") = 5000);
    m.def("default_window_grid", &default_window_grid, py::arg("n"));
    m.def("default_lag_grid", &default_lag_grid, py::arg("n"));
    m.def("dense_lag_grid", &dense_lag_grid, py::arg("n"), py::arg("cap") = 0);
    m.def("log_spaced_lags", &log_spaced_lags, py::arg("lo"), py::arg("hi"), py::arg("count"));
    m.def("default_rs_range", &default_rs_range, py::arg("n"));
    m.def("default_msd_range", &default_msd_range, py::arg("n"));
    m.def("loglog_fit",
          [](std::vector<double> a, std::vector<double> o, FitRange range) {
              return loglog_fit(a, o, range);
          },
          py::arg("abscissa"), py::arg("ordinate"), py::arg("fit_range"));
    m.def("rs_pdda", &rs_pdda, py::arg("x"), py::arg("window_sizes"), py::arg("fit_range"));
    m.def("msd_pdda", &msd_pdda, py::arg("x"), py::arg("lag_grid"), py::arg("fit_range"),
          py::arg("weight_by_pairs") = false);
    m.def("msd_fit_from_profile", &msd_fit_from_profile, py::arg("profile"), py::arg("fit_range"),
          py::arg("weight_by_pairs") = false);
    m.def("local_hurst", &local_hurst, py::arg("profile"), py::arg("smoothing_window") = 5);
    m.def("estimate", &estimate, py::arg("x"), py::arg("settings") = EstimatorSettings{},
          py::arg("with_local_curve") = false);
    m.def("normalize_unit_variance",
          [](py::array_t<double, py::array::c_style | py::array::forcecast> values) {
              return to_numpy(normalize_unit_variance(to_matrix(values)));
          },
          py::arg("values"));
    m.def("normalize_series",
          [](const TimeSeries& x) { return normalize_unit_variance(x); }, py::arg("x"));
    m.def("recurrence_probability", &recurrence_probability, py::arg("z"), py::arg("epsilon"),
          py::arg("lags"));
    m.def("range_dimension", &range_dimension, py::arg("h_max"), py::arg("m"));
    m.def("decay_report", &decay_report, py::arg("curve"), py::arg("h_max"), py::arg("m"),
          py::arg("fit_range"));
    m.def("split_seed", &split_seed, py::arg("master"), py::arg("point"), py::arg("replicate"));
    m.def("run_sweep", &run_sweep, py::arg("config"));
}
