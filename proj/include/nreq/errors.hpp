#ifndef NREQ_ERRORS_HPP
#define NREQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nreq {

// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument or parameter outside its physical domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Requested index exceeds a precomputed-table capacity.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

// Evaluation requested at (or numerically on top of) a pole.
class PoleError : public Error {
public:
    PoleError(const std::string& msg, long nearest)
        : Error(msg), nearest_integer(nearest) {}
    long nearest_integer;
};

// Model restriction violated (e.g. omega_0 != 0 on a torque path).
class UnsupportedModelError : public Error {
public:
    explicit UnsupportedModelError(const std::string& msg) : Error(msg) {}
};

// Undamped response evaluated exactly on a real resonance.
class ResonanceSingularityError : public Error {
public:
    explicit ResonanceSingularityError(const std::string& msg) : Error(msg) {}
};

// Series evaluated outside its convergence (or validity) region in strict mode.
class ConvergenceDomainError : public Error {
public:
    explicit ConvergenceDomainError(const std::string& msg) : Error(msg) {}
};

// Negative-index reflection with vanishing modulus.
class SingularReflectionError : public Error {
public:
    explicit SingularReflectionError(const std::string& msg) : Error(msg) {}
};

// Requested tolerance could not be met; carries the best value obtained.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& msg, double best, double estimate)
        : Error(msg), best_value(best), error_estimate(estimate) {}
    double best_value;
    double error_estimate;
};

// Bad CLI flag / config file content.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace nreq

#endif
