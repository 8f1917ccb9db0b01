#pragma once

#include <stdexcept>
#include <string>

namespace pdda {

// Invalid configuration or out-of-range argument (CLI exit code 2).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Input would exceed a hard size guard (CLI exit code 2).
class SizeError : public ParameterError {
public:
    explicit SizeError(const std::string& msg) : ParameterError(msg) {}
};

// Malformed or non-finite input data (CLI exit code 3).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A regression could not be performed, e.g. fewer than three usable
// points inside the fit window (CLI exit code 4).
class FitError : public std::runtime_error {
public:
    explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

// An estimate is undefined for the given data, e.g. every block of a
// window size is constant (CLI exit code 4).
class EstimationError : public std::runtime_error {
public:
    explicit EstimationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pdda
