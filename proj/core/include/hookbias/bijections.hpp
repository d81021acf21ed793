#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hookbias/check_report.hpp"
#include "hookbias/partitions.hpp"

namespace hookbias {

enum class triplet_side { T, S };

// Ordered triple of partitions with per-side membership constraints:
// first  - every part congruent to 2 mod 3;
// second - every part congruent to 1 mod 3, minimum 7 (T side) or 4 (S side);
// third  - every part in {6, 9}.
class triplet {
public:
    triplet(triplet_side side, partition first, partition second, partition third);

    triplet_side side() const { return side_; }
    const partition& first() const { return first_; }
    const partition& second() const { return second_; }
    const partition& third() const { return third_; }
    std::int64_t weight() const;

    std::string to_string() const; // "((11,11,5),(),(6))"

    auto operator<=>(const triplet&) const = default;

private:
    triplet_side side_;
    partition first_, second_, third_;
};

// Visit every triplet of the given side and weight n exactly once, in a
// deterministic order.
void for_each_triplet(std::int64_t n, triplet_side side,
                      const std::function<void(const triplet&)>& visit);

// All subset indices in 1..7 whose defining predicate the triplet satisfies
// (part references beyond a partition's length read as 0). Exposed so tests
// can check pairwise disjointness directly.
std::vector<int> matching_subsets(const triplet& t);

// T side: the unique subset index (the seven subsets partition the set;
// zero or multiple matches throw classification_gap). S side: the unique
// matching index, or nullopt when no subset applies; a multiple match still
// throws, since the subsets are pairwise disjoint.
std::optional<int> classify(const triplet& t);

// The six weight-(-3) bijections and their inverses. phi(i, .) maps the i-th
// T subset of weight n onto the i-th S subset of weight n-3; phi_inv inverts
// it. Inputs outside the declared subset throw domain_violation.
triplet phi(int i, const triplet& t);
triplet phi_inv(int i, const triplet& s);

// Per-subset cardinality match, injectivity of phi into the target subset,
// and elementwise round-trip phi_inv(phi(.)) == id over weight n. i in 1..6,
// n >= 3.
check_report verify_bijection_suite(int i, std::int64_t n);

// Number of non-negative integer solutions of a x + b y = n, by direct loop.
// Requires gcd(a,b) = 1 (throws not_coprime), a,b >= 1, n >= 0; negative n
// counts zero.
std::int64_t t_ab_count(std::int64_t a, std::int64_t b, std::int64_t n);

// The count together with its floor/ceil envelope
// floor((floor(n/a)+1)/b) <= count <= ceil((floor(n/a)+1)/b).
struct t_ab_bounds_result {
    std::int64_t count = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool within = false;
};
t_ab_bounds_result t_ab_bounds(std::int64_t a, std::int64_t b, std::int64_t n);

// Number of non-negative integer solutions of a x + b y + c z = n.
// Requires gcd(a,b) = 1 (throws not_coprime); negative n counts zero.
std::int64_t t_abc_count(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n);

// Exact rational lower bound n^2/(2abc) - (n/c + 1) for t_abc_count.
mpq_class t_abc_lower_bound(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n);

// Solutions of 5a + 2b = m with a != 1.
std::int64_t t_restricted(std::int64_t m);

// Cardinality of the seventh T subset at weight n: all parts of the first
// component in {2,5} with multiplicity of 5 never exactly 1, third component
// one of the eight {6,9}-patterns with at most three 6s and at most one 9.
// Equals sum over i<=1, j<=3 of t_restricted(n - 9i - 6j).
std::int64_t t7_count(std::int64_t n);

// Cardinality of the seventh S subset at weight n-3: solutions of
// 2x + 7y + 4z = n - 19 (zero for n < 19).
std::int64_t s7_count(std::int64_t n);

// Exact-rational sandwich at one n: t7_count(n) <= 8(n+2)/10,
// s7_count(n) >= (n-19)^2/112 - (n-15)/4, and for n >= 152 the headline
// t7_count(n) <= s7_count(n). Requires n >= 3.
check_report t7_vs_s7(std::int64_t n);

// The same sandwich swept over [lo, hi], violations aggregated.
check_report verify_t7_s7_range(std::int64_t lo, std::int64_t hi);

} // namespace hookbias
