#pragma once

#include <stdexcept>

namespace qgrowth {

// Malformed input files or records (CLI exit code 3).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure: non-convergence, empty truncation, precision loss
// (CLI exit code 4).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qgrowth
