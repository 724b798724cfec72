#ifndef CURVE3_ERRORS_HPP
#define CURVE3_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curve3 {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ramification/formula input that violates integrality, parity or sign constraints.
struct inconsistent_data_error : error {
    using error::error;
};

// A Laurent-series computation ran past the number of known terms.
// Callers retry with a larger precision budget.
struct precision_error : error {
    using error::error;
};

// A size/ceiling guard tripped (closure bound, coset ceiling, field bound).
// The result is "inconclusive", never a wrong answer.
struct guard_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

struct unsupported_error : error {
    using error::error;
};

} // namespace curve3

#endif
