#pragma once

#include <stdexcept>
#include <string>

namespace sl2k {

// Failure kinds surfaced by the library.  Construction and evaluation
// guards throw rather than returning poisoned values, so every object
// that exists satisfies its type invariants.
enum class ErrorKind {
    nonfinite,               // a component is NaN or infinite
    det_drift,               // |det - 1| exceeded the unimodularity tolerance
    degenerate,              // matrix row/decomposition input out of range
    zero_vector,             // vector norm below the nonzero margin
    near_zero_parameter,     // scalar parameter too close to zero
    dependent_pair,          // vectors projectively dependent within margin
    coincident_points,       // boundary points equal within margin
    degenerate_triple,       // triple admits no transporter branch
    degenerate_configuration,// configuration fails a genericity margin
    infinite_coordinate,     // finite-chart formula fed a point at infinity
    field_mismatch,          // operation undefined over the requested field
    not_invariant,           // induction pre-check found a non-invariant input
    sampling_exhausted,      // rejection sampling hit its attempt budget
    unknown_suite            // verification suite name not registered
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::nonfinite: return "nonfinite";
    case ErrorKind::det_drift: return "det_drift";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::zero_vector: return "zero_vector";
    case ErrorKind::near_zero_parameter: return "near_zero_parameter";
    case ErrorKind::dependent_pair: return "dependent_pair";
    case ErrorKind::coincident_points: return "coincident_points";
    case ErrorKind::degenerate_triple: return "degenerate_triple";
    case ErrorKind::degenerate_configuration: return "degenerate_configuration";
    case ErrorKind::infinite_coordinate: return "infinite_coordinate";
    case ErrorKind::field_mismatch: return "field_mismatch";
    case ErrorKind::not_invariant: return "not_invariant";
    case ErrorKind::sampling_exhausted: return "sampling_exhausted";
    case ErrorKind::unknown_suite: return "unknown_suite";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace sl2k
