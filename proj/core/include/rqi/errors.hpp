#pragma once

#include <stdexcept>
#include <string>

namespace rqi {

// Base of every failure the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A call violated its contract (size/dimension mismatch, bad argument).
class ContractError : public Error {
public:
    using Error::Error;
};

// Bandwidth h must be strictly positive.
class InvalidBandwidth : public Error {
public:
    using Error::Error;
};

// Point outside the box it was declared to live in.
class DomainError : public Error {
public:
    using Error::Error;
};

// Rejection sampler starved: estimated acceptance probability below 1e-6.
class PathologicalLaw : public Error {
public:
    using Error::Error;
};

// The denominator integral of the convolution oracle is numerically zero.
class DegenerateMeasure : public Error {
public:
    using Error::Error;
};

// A query point saw no center inside the kernel support, so the Shepard
// ratio is undefined there. Carries the distance to the nearest center so
// callers can diagnose how badly the support constant was undersized.
class EmptyNeighborhood : public Error {
public:
    EmptyNeighborhood(double nearest_distance, const std::string& what)
        : Error(what), nearest_(nearest_distance) {}

    double nearest_center_distance() const noexcept { return nearest_; }

private:
    double nearest_;
};

// Configuration file / flag problems. CLI maps this to exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

// An experiment refused to continue (e.g. empty-neighborhood rate above
// 10% at some N). CLI maps this to exit code 3.
class ExperimentAbort : public Error {
public:
    using Error::Error;
};

// Filesystem trouble. CLI maps this to exit code 4.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace rqi
