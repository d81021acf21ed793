#pragma once

#include <cstdint>

#include "hookbias/check_report.hpp"
#include "hookbias/series.hpp"

namespace hookbias {

// Series of Q(n), the number of partitions of n into distinct parts.
truncated_series q_count_series(std::int64_t N);

// Series of S(n) = sum_{i<=n} Q(i), i.e. (-q;q)inf / (1-q).
truncated_series s_sum_series(std::int64_t N);

// Scans b_{3,2}(n) >= b_{3,1}(n) for 28 <= n <= N (violations are defects),
// cross-checks both series against brute-force hook counts for n <= 30, and
// records the sub-28 exception set as informational witnesses. N >= 28.
check_report verify_theorem1(std::int64_t N);

// Lists every n <= N with b_{2,k}(n) < b_{2,k+1}(n) and n != k+1 (the
// inequality under test already excepts n = k+1; the reversal there is
// reported separately). Odd k >= 3. Informational: a non-empty list is a
// finding, not a defect.
check_report find_counterexamples_odd(std::int64_t k, std::int64_t N);

// Asserts b_{2,k}(n) >= b_{2,k+1}(n) for n <= N except exactly n = k+1, and
// that the reversal at k+1 is present. Even k >= 4. Grade: assertion for
// k in {4,6} (proven range), conjecture for k >= 8 (violations are
// mathematical findings).
check_report verify_even_k(std::int64_t k, std::int64_t N);

// Samples S(n+k)/S(n) across [k, N] and reports the trend toward 1
// (informational; the limit statement fixes no finite-n bound). k >= 0.
check_report s_ratio_scan(std::int64_t N, std::int64_t k);

// Compares exact Q(n) with e^{pi sqrt(n/3)} / (4 * 3^{1/4} * n^{3/4}) at
// n = 100, 200, ..., N and reports the ratio trend (informational). N >= 100.
check_report q_asymptotic_check(std::int64_t N);

// Expands A_t(q) * sum_n S(n) q^n to order N and records the largest index
// with a non-negative coefficient; beyond it the window's tail is all
// negative. Also re-asserts A_t(1) < 0. t >= 1.
check_report negative_tail_check(std::int64_t t, std::int64_t N);

// Sign checks on w = (1-q)^2/(q;q^2)inf and its geometric-factor quotients:
// w itself and w/((1-q^8)(1-q^10)) must be nonnegative from n = 5 on,
// w/((1-q^12)(1-q^14)) and w/(1-q^12) from n = 17 on, and the two prefix
// corrections of w used by the tail arguments must be nonnegative everywhere.
// N >= 40.
check_report verify_positivity_thresholds(std::int64_t N);

// Confirms the factored product form of sum (b_{3,2}-b_{3,1}) q^n against the
// direct difference of the two hook generating functions, coefficient by
// coefficient up to N.
check_report verify_factored_diff(std::int64_t N);

} // namespace hookbias
