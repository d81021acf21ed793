#pragma once

#include <cstdint>
#include <utility>

#include "hookbias/check_report.hpp"
#include "hookbias/series.hpp"

namespace hookbias {

// Series of b_{t,1}(n), hooks of length 1 over t-regular partitions:
// (q^t;q^t)inf / (q;q)inf * ( q/(1-q) - q^t/(1-q^t) ). Requires t >= 2.
truncated_series gf_b_t1(std::int64_t t, std::int64_t N);

// Series of b_{3,2}(n), hooks of length 2 over 3-regular partitions:
// (q^3;q^3)inf / (q;q)inf * ( q^2/(1-q) + q^2/(1-q^2) - 2 q^3/(1-q^3) ).
truncated_series gf_b_32(std::int64_t N);

// Weight series t(n) of the T-side triplet set:
// (q^12;q^3)inf / ((1-q^2)(q^5;q)inf).
truncated_series gf_t_series(std::int64_t N);

// Weight series s(n) of the S-side triplet set:
// (q^12;q^3)inf / ((1-q^2)(q^4;q)inf).
truncated_series gf_s_series(std::int64_t N);

// Factored form of gf_b_32 - gf_b_t1(3):
// -q (1+q^2+q^4)(1+q^3+q^6) * [ t_series - q^3 * s_series ].
truncated_series gf_diff_32_31(std::int64_t N);

// Inner sums of the b_{2,i} rational form. b1_kernel(i,j) is
// q^i sum_k {j,k}_{q^2} (-1)^k q^{k^2} / (1-q^{2i+2k-4j}); b2_kernel(i,j) is
// q^{3i-4j-3} sum_k {j,k}_{q^2} (-1)^k q^{k^2+2k} / (1-q^{2i+2k-4j-2}).
// A denominator exponent <= 0 throws degenerate_denominator (index-bug trap;
// unreachable from the valid (i,j) ranges used by gf_b_2i).
truncated_series b1_kernel(std::int64_t i, std::int64_t j, std::int64_t N);
truncated_series b2_kernel(std::int64_t i, std::int64_t j, std::int64_t N);

// Series of b_{2,i}(n), hooks of length i over partitions into odd parts:
// (-q;q)inf * ( sum_j {i-j-1,j}_{q^2} b1_kernel(i,j)
//             + sum_j {i-j-2,j}_{q^2} b2_kernel(i,j) ). Requires i >= 1.
truncated_series gf_b_2i(std::int64_t i, std::int64_t N);

// gf_b_2i(k) - gf_b_2i(k+1).
truncated_series gf_diff_2k(std::int64_t k, std::int64_t N);

// B_t = prod_{i=0}^{2t+1} (1 + q + ... + q^{2i+1}); A_t is the matching
// numerator, assembled from four alternating Gaussian-binomial sums with each
// reciprocal unit polynomial cleared by exact division into B_t. Satisfies
// A_t(q)/B_t(q) = (1-q)/(-q;q)inf * sum_n (b_{2,2t+1}(n)-b_{2,2t+2}(n)) q^n
// and A_t(1)/B_t(1) = -1/(2(2t+1)(2t+2)). Requires t >= 1.
std::pair<polynomial, polynomial> compute_At_Bt(std::int64_t t);

// Coefficientwise check of A_t(q) (-q;q)inf/(1-q) == B_t(q) * gf_diff_2k(2t+1)
// up to order N. Mismatch indices become violations.
check_report verify_At_Bt_identity(std::int64_t t, std::int64_t N);

// Literal numerator polynomials of the closed form
// (b_{2,4}-b_{2,5} series) = (A(q)(1-q)^2 + B(q)(1-q)) /
//                            ((1-q^8)(1-q^10)(q;q^2)inf),
// plus the pre-expanded degree-21 bracket A(q)(1-q)^2 + B(q)(1-q).
polynomial diff45_poly_A();
polynomial diff45_poly_B();
polynomial diff45_bracket();

// Literal numerator polynomial C(q) and degree-33 bracket
// C(q)(1-q) + q^10 (1-q^14)(1-q^2) + q^27 + q^30 of the closed form
// (b_{2,6}-b_{2,7} series) = bracket / ((1-q^12)(1-q^14)(q^3;q^2)inf).
polynomial diff67_poly_C();
polynomial diff67_bracket();

// Rebuilds the b_{2,4}-b_{2,5} closed form from the literal polynomials,
// re-derives the bracket, compares against gf_diff_2k(4, N), and scans the
// sign pattern (negative exactly at n = 5). Requires N >= 25.
check_report decompose_b24_b25(std::int64_t N);

// Same for b_{2,6}-b_{2,7} (negative exactly at n = 7), additionally checking
// the three-summand split and the per-summand sign thresholds: summand 1
// non-negative from 55 on, summand 2 from 34 on, summand 3 everywhere.
// Requires N >= 55.
check_report decompose_b26_b27(std::int64_t N);

} // namespace hookbias
