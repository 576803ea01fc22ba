#ifndef WEDGE_ERRORS_HPP
#define WEDGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wedge {

/// Invalid inputs: malformed populations, bad parameters, inconsistent
/// requests. Maps to CLI exit code 2.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Structurally valid request that the implementation cannot serve:
/// missing moment orders, absent coefficients, a21 <= 0. CLI exit code 3.
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Request exceeding a hard cost guard (oracle sum sizes).
struct budget_error : capability_error {
    using capability_error::capability_error;
};

}  // namespace wedge

#endif  // WEDGE_ERRORS_HPP
