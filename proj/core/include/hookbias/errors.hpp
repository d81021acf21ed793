#pragma once

#include <stdexcept>
#include <string>

namespace hookbias {

// Exact polynomial division left a remainder.
struct nonzero_remainder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A kernel denominator exponent collapsed to <= 0. Reachable only through an
// index bug, so it throws instead of silently emitting a wrong series.
struct degenerate_denominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A triplet on the exhaustive side matched none (or more than one) of the
// seven classification predicates.
struct classification_gap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input handed to a map lies outside the subset the map is defined on.
struct domain_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The two leading coefficients of a lattice count must be coprime for the
// quadratic lower bound to be valid.
struct not_coprime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coefficient table file failed validation; `line` is 1-based.
struct corrupt_table : std::runtime_error {
    corrupt_table(const std::string& msg, long line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    long line;
};

// Filesystem-level failure (open/read/write).
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hookbias
