#pragma once

#include <stdexcept>
#include <string>

namespace dyonwell {

/// Coarse error class, used by the CLI to pick an exit code.
enum class ErrorKind { validation, solver, io };

class Error : public std::runtime_error {
public:
    Error(const std::string& what, ErrorKind kind) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define DYONWELL_DEFINE_ERROR(Name, Kind)                                                   \
    class Name : public Error {                                                            \
    public:                                                                                \
        explicit Name(const std::string& what) : Error(#Name ": " + what, ErrorKind::Kind) {} \
    };

DYONWELL_DEFINE_ERROR(InvalidQuantumNumbers, validation)
DYONWELL_DEFINE_ERROR(InvalidParameter, validation)
DYONWELL_DEFINE_ERROR(NotBound, validation)
DYONWELL_DEFINE_ERROR(DomainError, validation)
DYONWELL_DEFINE_ERROR(NotApplicable, validation)
DYONWELL_DEFINE_ERROR(EmptyWindow, validation)
DYONWELL_DEFINE_ERROR(EmptyPlot, validation)
DYONWELL_DEFINE_ERROR(RangeError, solver)
DYONWELL_DEFINE_ERROR(BadBracket, solver)
DYONWELL_DEFINE_ERROR(NodeResolutionError, solver)
DYONWELL_DEFINE_ERROR(IntegrationError, solver)
DYONWELL_DEFINE_ERROR(QuadratureError, solver)
DYONWELL_DEFINE_ERROR(AmplitudeOverflow, solver)
DYONWELL_DEFINE_ERROR(FreeLevelAbsent, solver)
DYONWELL_DEFINE_ERROR(CoulombLevelAbsent, solver)
DYONWELL_DEFINE_ERROR(IoError, io)

#undef DYONWELL_DEFINE_ERROR

/// Series or continuation failed to reach the requested accuracy.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double est_error)
        : Error("ConvergenceError: " + what, ErrorKind::solver), est_error_(est_error) {}
    double est_error() const noexcept { return est_error_; }

private:
    double est_error_;
};

/// The denominator of a log-derivative vanished at the trial energy.
class PoleAtTrialEnergy : public Error {
public:
    enum class Side { inside, outside };
    PoleAtTrialEnergy(const std::string& what, Side side)
        : Error("PoleAtTrialEnergy: " + what, ErrorKind::solver), side_(side) {}
    Side side() const noexcept { return side_; }

private:
    Side side_;
};

}  // namespace dyonwell
