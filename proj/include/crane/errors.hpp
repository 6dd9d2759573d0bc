#pragma once

#include <stdexcept>
#include <string>

namespace crane {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DegenerateConfiguration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentJet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedPath : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad or missing input files, unknown keys, unparsable numbers.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UndefinedMetric : std::domain_error {
    using std::domain_error::domain_error;
};

struct InfeasibleOperation : std::runtime_error {
    InfeasibleOperation(const std::string& what, int index, double min_violation, std::string diagnostics)
        : std::runtime_error(what), index(index), min_violation(min_violation), diagnostics(std::move(diagnostics)) {}

    int index;
    double min_violation;
    std::string diagnostics;
};

}  // namespace crane
