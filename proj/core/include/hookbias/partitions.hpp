#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hookbias/series.hpp"

namespace hookbias {

// Integer partition: non-increasing sequence of positive parts.
class partition {
public:
    partition() = default; // the empty partition
    // Parts must already be positive and non-increasing.
    explicit partition(std::vector<std::int64_t> parts);
    static partition from_unsorted(std::vector<std::int64_t> parts);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::int64_t length() const { return static_cast<std::int64_t>(parts_.size()); }
    std::int64_t weight() const;
    bool empty() const { return parts_.empty(); }

    // 1-based part access; indices beyond the length read as 0 so that
    // predicates like "first part equals second part" stay total.
    std::int64_t part(std::int64_t j) const;

    // How many parts equal v.
    std::int64_t multiplicity(std::int64_t v) const;

    partition conjugate() const;

    // Hook lengths of every cell, row by row: arm + leg + 1 computed
    // against the conjugate.
    std::vector<std::int64_t> hook_lengths() const;

    // hook length -> number of cells with that hook.
    std::map<std::int64_t, std::int64_t> hook_histogram() const;

    std::string to_string() const; // "(4,3,1)", "()" for empty

    auto operator<=>(const partition&) const = default;

private:
    std::vector<std::int64_t> parts_;
};

// Membership predicate over partitions, used both for filtering and for
// driving the enumerator.
class partition_class {
public:
    static partition_class all();
    // No part divisible by t (t >= 2).
    static partition_class t_regular(std::int64_t t);
    // Every part value appears at most t-1 times (t >= 2).
    static partition_class t_distinct(std::int64_t t);
    // Every part congruent to r mod m and at least min_part.
    static partition_class residue(std::int64_t r, std::int64_t mod, std::int64_t min_part = 1);
    // Every part drawn from the given value set.
    static partition_class from_parts(std::vector<std::int64_t> allowed);

    bool allows_value(std::int64_t v) const;
    // Per-value multiplicity bound; 0 means unbounded.
    std::int64_t multiplicity_cap() const { return cap_; }
    bool contains(const partition& p) const;

private:
    enum class kind { all, regular, distinct, residue, fixed };
    kind kind_ = kind::all;
    std::int64_t t_ = 0;
    std::int64_t r_ = 0, mod_ = 0, min_ = 1;
    std::int64_t cap_ = 0;
    std::vector<std::int64_t> allowed_;
};

// Visit every partition of n in the class exactly once, in lexicographically
// decreasing order, without materializing the full list. n = 0 visits the
// empty partition.
void for_each_partition(std::int64_t n, const partition_class& cls,
                        const std::function<void(const partition&)>& visit);

integer count_partitions(std::int64_t n, const partition_class& cls);

enum class hook_kind { regular, distinct };

// Ground truth by direct enumeration: total number of hooks of length i over
// all t-regular (or t-distinct) partitions of n.
integer count_hooks_oracle(std::int64_t n, std::int64_t t, std::int64_t i, hook_kind kind);

// One enumeration pass collecting hooks of every length 1..max_len at once;
// result[i] is the total count of hooks of length i (result[0] unused).
std::vector<integer> hook_profile(std::int64_t n, const partition_class& cls,
                                  std::int64_t max_len);

} // namespace hookbias
