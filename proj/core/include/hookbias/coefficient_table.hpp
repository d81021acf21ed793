#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hookbias/series.hpp"

namespace hookbias {

// Persisted n -> coefficient mapping for a named series. Text format:
//   #series=<name>
//   #trunc=<N>
//   #version=1
//   <n><TAB><decimal coefficient>      for n = 0..N, strictly increasing
// Every line is newline-terminated; integers are canonical decimals
// (no leading zeros, no "-0"). Parse/emit round-trips byte-exactly.
struct coefficient_table {
    std::string series;
    std::vector<integer> coeffs;

    std::int64_t trunc() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }

    static coefficient_table from_series(std::string name, const truncated_series& s);
    truncated_series to_series() const;

    std::string to_text() const;
    // Throws corrupt_table with a 1-based line number on any format violation.
    static coefficient_table parse(const std::string& text);

    // File variants; throw io_error on filesystem failure.
    static coefficient_table load(const std::string& path);
    void save(const std::string& path) const;

    bool operator==(const coefficient_table&) const = default;
};

} // namespace hookbias
