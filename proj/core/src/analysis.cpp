#include "hookbias/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "hookbias/hookgf.hpp"
#include "hookbias/partitions.hpp"

namespace hookbias {

namespace {

std::string dec(const integer& v) { return v.get_str(); }

std::string format_set(const std::vector<std::int64_t>& xs, std::size_t cap = 50) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size() && i < cap; ++i) {
        if (i)
            out += ",";
        out += std::to_string(xs[i]);
    }
    if (xs.size() > cap)
        out += ",...(+" + std::to_string(xs.size() - cap) + " more)";
    return out + "]";
}

std::string format_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace

truncated_series q_count_series(std::int64_t trunc) {
    return pochhammer(1, 1, trunc, false, factor_sign::plus);
}

truncated_series s_sum_series(std::int64_t trunc) {
    return mul_geometric(q_count_series(trunc), 1);
}

check_report verify_theorem1(std::int64_t trunc) {
    if (trunc < 28)
        throw std::invalid_argument("verify_theorem1: truncation must be >= 28");
    check_report rep;
    rep.campaign = "theorem1";
    rep.add_param("N", std::to_string(trunc));
    rep.lo = 28;
    rep.hi = trunc;

    const truncated_series diff = gf_b_32(trunc) - gf_b_t1(3, trunc);
    for (std::int64_t n = 28; n <= trunc; ++n)
        if (sgn(diff[n]) < 0)
            rep.add_violation(n, dec(diff[n]), ">= 0", "bias inequality fails");

    // Exceptions below the threshold are expected; report them as a witness.
    std::vector<std::int64_t> below;
    for (std::int64_t n = 0; n < 28; ++n)
        if (sgn(diff[n]) < 0)
            below.push_back(n);
    rep.add_witness("exceptions_below_28", format_set(below));
    rep.add_count("exception_count_below_28", std::to_string(below.size()));

    // Cross-check small coefficients against direct hook counting.
    const std::int64_t oracle_hi = std::min<std::int64_t>(trunc, 30);
    const partition_class cls = partition_class::t_regular(3);
    for (std::int64_t n = 0; n <= oracle_hi; ++n) {
        const std::vector<integer> profile = hook_profile(n, cls, 2);
        const integer counted = profile[2] - profile[1];
        if (counted != diff[n])
            rep.add_violation(n, dec(diff[n]), dec(counted), "hook-count cross-check mismatch");
    }
    rep.add_count("cross_checked_up_to", std::to_string(oracle_hi));
    return rep;
}

check_report find_counterexamples_odd(std::int64_t k, std::int64_t trunc) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("find_counterexamples_odd: k must be odd and >= 3");
    if (trunc < k + 2)
        throw std::invalid_argument("find_counterexamples_odd: truncation must exceed k+1");
    check_report rep;
    rep.campaign = "odd-k";
    rep.grade = check_grade::informational;
    rep.add_param("k", std::to_string(k));
    rep.add_param("N", std::to_string(trunc));
    rep.lo = 0;
    rep.hi = trunc;

    const truncated_series diff = gf_diff_2k(k, trunc);
    std::vector<std::int64_t> hits;
    for (std::int64_t n = 0; n <= trunc; ++n)
        if (n != k + 1 && sgn(diff[n]) < 0)
            hits.push_back(n);
    rep.add_witness("counterexamples", format_set(hits, 25));
    rep.add_witness("minimal", hits.empty() ? "none" : std::to_string(hits[0]));
    rep.add_witness("reversal_at_k_plus_1", sgn(diff[k + 1]) < 0 ? "yes" : "no");
    rep.add_count("counterexample_count", std::to_string(hits.size()));
    return rep;
}

check_report verify_even_k(std::int64_t k, std::int64_t trunc) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("verify_even_k: k must be even and >= 4");
    if (trunc < k + 2)
        throw std::invalid_argument("verify_even_k: truncation must exceed k+1");
    check_report rep;
    rep.campaign = "even-k";
    rep.grade = k <= 6 ? check_grade::assertion : check_grade::conjecture;
    rep.add_param("k", std::to_string(k));
    rep.add_param("N", std::to_string(trunc));
    rep.lo = 0;
    rep.hi = trunc;

    const truncated_series diff = gf_diff_2k(k, trunc);
    std::vector<std::int64_t> negatives;
    for (std::int64_t n = 0; n <= trunc; ++n) {
        if (sgn(diff[n]) >= 0)
            continue;
        negatives.push_back(n);
        if (n != k + 1)
            rep.add_violation(n, dec(diff[n]), ">= 0", "unexpected reversal");
    }
    if (sgn(diff[k + 1]) >= 0)
        rep.add_violation(k + 1, dec(diff[k + 1]), "< 0", "expected reversal missing");
    rep.add_witness("reversal_set", format_set(negatives));
    rep.add_count("reversal_count", std::to_string(negatives.size()));
    return rep;
}

check_report s_ratio_scan(std::int64_t trunc, std::int64_t k) {
    if (k < 0)
        throw std::invalid_argument("s_ratio_scan: k must be >= 0");
    if (trunc < k + 10)
        throw std::invalid_argument("s_ratio_scan: truncation too small for the shift");
    check_report rep;
    rep.campaign = "s-ratio";
    rep.grade = check_grade::informational;
    rep.add_param("N", std::to_string(trunc));
    rep.add_param("k", std::to_string(k));
    rep.lo = 1;
    rep.hi = trunc - k;

    const truncated_series s = s_sum_series(trunc);
    const std::int64_t step = std::max<std::int64_t>(1, trunc / 10);
    std::vector<double> ratios;
    for (std::int64_t n = step; n <= trunc - k; n += step) {
        mpq_class ratio(s[n + k]);
        ratio /= s[n];
        const double r = ratio.get_d();
        ratios.push_back(r);
        rep.add_witness("ratio[" + std::to_string(n) + "]", format_fixed(r));
    }
    bool decreasing = true;
    bool above_one = true;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (ratios[i] < 1.0)
            above_one = false;
        if (i && ratios[i] > ratios[i - 1] + 1e-12)
            decreasing = false;
    }
    rep.add_witness("ratios_at_least_one", above_one ? "yes" : "no");
    rep.add_witness("ratios_non_increasing", decreasing ? "yes" : "no");
    if (!ratios.empty())
        rep.add_witness("final_within_(1,1.1)",
                        ratios.back() > 1.0 && ratios.back() < 1.1 ? "yes" : "no");
    rep.add_count("samples", std::to_string(ratios.size()));
    return rep;
}

check_report q_asymptotic_check(std::int64_t trunc) {
    if (trunc < 100)
        throw std::invalid_argument("q_asymptotic_check: truncation must be >= 100");
    check_report rep;
    rep.campaign = "q-asymptotic";
    rep.grade = check_grade::informational;
    rep.add_param("N", std::to_string(trunc));
    rep.lo = 100;
    rep.hi = trunc;

    const truncated_series q = q_count_series(trunc);
    const double pi = 3.14159265358979323846;
    std::vector<double> gaps;
    for (std::int64_t n = 100; n <= trunc; n += 100) {
        const double x = static_cast<double>(n);
        const double approx =
            std::exp(pi * std::sqrt(x / 3.0)) / (4.0 * std::pow(3.0, 0.25) * std::pow(x, 0.75));
        const double ratio = q[n].get_d() / approx;
        gaps.push_back(std::fabs(ratio - 1.0));
        rep.add_witness("ratio[" + std::to_string(n) + "]", format_fixed(ratio));
    }
    bool shrinking = true;
    for (std::size_t i = 1; i < gaps.size(); ++i)
        if (gaps[i] > gaps[i - 1] + 1e-12)
            shrinking = false;
    rep.add_witness("gap_non_increasing", shrinking ? "yes" : "no");
    rep.add_witness("final_within_10_percent", gaps.back() < 0.1 ? "yes" : "no");
    rep.add_count("samples", std::to_string(gaps.size()));
    return rep;
}

check_report negative_tail_check(std::int64_t t, std::int64_t trunc) {
    if (t < 1)
        throw std::invalid_argument("negative_tail_check: t must be >= 1");
    if (trunc < 1)
        throw std::invalid_argument("negative_tail_check: truncation must be >= 1");
    check_report rep;
    rep.campaign = "negative-tail";
    rep.add_param("t", std::to_string(t));
    rep.add_param("N", std::to_string(trunc));
    rep.lo = 0;
    rep.hi = trunc;

    const auto [a_poly, b_poly] = compute_At_Bt(t);
    const truncated_series prod = a_poly * s_sum_series(trunc);
    std::int64_t last_nonnegative = -1;
    for (std::int64_t n = 0; n <= trunc; ++n)
        if (sgn(prod[n]) >= 0)
            last_nonnegative = n;

    const integer a_at_one = eval_at_one(a_poly);
    if (sgn(a_at_one) >= 0)
        rep.add_violation(0, dec(a_at_one), "< 0", "coefficient sum should be negative");
    rep.add_witness("A_at_1", dec(a_at_one));
    rep.add_witness("B_at_1", dec(eval_at_one(b_poly)));
    rep.add_witness("largest_nonnegative_index",
                    last_nonnegative < 0 ? "none" : std::to_string(last_nonnegative));
    rep.add_witness("tail_established", last_nonnegative < trunc ? "yes" : "no");
    return rep;
}

check_report verify_positivity_thresholds(std::int64_t trunc) {
    if (trunc < 40)
        throw std::invalid_argument("verify_positivity_thresholds: truncation must be >= 40");
    check_report rep;
    rep.campaign = "positivity";
    rep.add_param("N", std::to_string(trunc));
    rep.lo = 0;
    rep.hi = trunc;

    // w = (1-q)^2 / (q;q^2)_inf, nonnegative from 5 on once divided further.
    const truncated_series w =
        polynomial{1, -2, 1} * pochhammer(1, 2, trunc, true);
    const auto scan = [&](const truncated_series& s, std::int64_t threshold,
                          const std::string& label) {
        const std::vector<std::int64_t> negs = positivity_scan(s, 0);
        for (std::int64_t n : negs)
            if (n >= threshold)
                rep.add_violation(n, dec(s[n]), ">= 0",
                                  label + " negative at or above " + std::to_string(threshold));
        rep.add_witness(label + "_negatives", format_set(negs));
    };
    scan(w, 5, "base");
    scan(mul_geometric(mul_geometric(w, 8), 10), 5, "den_8_10");
    scan(mul_geometric(mul_geometric(w, 12), 14), 17, "den_12_14");
    scan(mul_geometric(w, 12), 17, "den_12");

    // The two prefix corrections of w used by the tail arguments must leave a
    // nonnegative remainder everywhere.
    truncated_series rem_a = w;
    rem_a.coeff(1) += 1;
    rem_a.coeff(3) -= 1;
    rem_a.coeff(4) += 1;
    rem_a.coeff(9) -= 1;
    rem_a.coeff(12) -= 1;
    rem_a.coeff(14) -= 1;
    rem_a.coeff(21) -= 1;
    scan(rem_a, 0, "prefix_a_remainder");

    truncated_series rem_b = w;
    rem_b.coeff(1) += 1;
    rem_b.coeff(4) += 1;
    rem_b.coeff(15) -= 1;
    rem_b.coeff(18) -= 1;
    rem_b.coeff(25) -= 1;
    rem_b.coeff(27) -= 1;
    rem_b.coeff(28) -= 1;
    rem_b.coeff(30) -= 1;
    scan(rem_b, 0, "prefix_b_remainder");
    return rep;
}

check_report verify_factored_diff(std::int64_t trunc) {
    if (trunc < 10)
        throw std::invalid_argument("verify_factored_diff: truncation must be >= 10");
    check_report rep;
    rep.campaign = "factored-diff";
    rep.add_param("N", std::to_string(trunc));
    rep.lo = 0;
    rep.hi = trunc;

    const truncated_series direct = gf_b_32(trunc) - gf_b_t1(3, trunc);
    const truncated_series factored = gf_diff_32_31(trunc);
    std::int64_t mismatches = 0;
    for (std::int64_t n = 0; n <= trunc; ++n)
        if (direct[n] != factored[n]) {
            ++mismatches;
            rep.add_violation(n, dec(factored[n]), dec(direct[n]),
                              "factored form disagrees with direct difference");
        }
    rep.add_count("coefficients_compared", std::to_string(trunc + 1));
    rep.add_count("mismatches", std::to_string(mismatches));
    return rep;
}

} // namespace hookbias
