#pragma once

#include <stdexcept>
#include <string>

namespace weakpi {

/// Row lengths of a tableau do not form a partition.
struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed or mismatched arguments (sizes, ranges, label sets).
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An input violates a documented precondition of the operation.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Row deletion was asked for a row that is not a removable corner.
struct invalid_corner_error : contract_error {
    using contract_error::contract_error;
};

/// A super-matrix entry has the wrong Z2-degree.
struct parity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace weakpi
