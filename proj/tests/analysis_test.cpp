#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "hookbias/analysis.hpp"
#include "hookbias/series.hpp"

using namespace hookbias;

namespace {

std::string witness_value(const check_report& rep, const std::string& name) {
    for (const auto& w : rep.witnesses)
        if (w.name == name)
            return w.value;
    return "<missing>";
}

} // namespace

TEST_CASE("distinct-part counting series and its prefix sums") {
    const auto q = q_count_series(10);
    const std::vector<long> want{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
    for (std::int64_t n = 0; n <= 10; ++n)
        CHECK(q[n] == want[static_cast<std::size_t>(n)]);
    const auto s = s_sum_series(10);
    integer run = 0;
    for (std::int64_t n = 0; n <= 10; ++n) {
        run += q[n];
        CHECK(s[n] == run);
    }
    CHECK(s[5] == 10);
}

TEST_CASE("headline bias inequality with its finite exception set") {
    const auto rep = verify_theorem1(150);
    CHECK(rep.passed());
    CHECK(witness_value(rep, "exceptions_below_28") ==
          "[1,3,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,25,27]");
    CHECK_THROWS_AS(verify_theorem1(20), std::invalid_argument);
}

TEST_CASE("odd hook length reversal search") {
    const auto k3 = find_counterexamples_odd(3, 120);
    CHECK(k3.grade == check_grade::informational);
    CHECK(witness_value(k3, "minimal") == "82");
    CHECK(witness_value(k3, "reversal_at_k_plus_1") == "yes");

    const auto k9 = find_counterexamples_odd(9, 60);
    CHECK(witness_value(k9, "minimal") == "12");

    // below the first reversal the list is empty
    const auto early = find_counterexamples_odd(3, 60);
    CHECK(witness_value(early, "minimal") == "none");

    CHECK_THROWS_AS(find_counterexamples_odd(4, 100), std::invalid_argument);
    CHECK_THROWS_AS(find_counterexamples_odd(1, 100), std::invalid_argument);
}

TEST_CASE("even hook length scan: proven cases pass, larger ones are findings") {
    const auto k4 = verify_even_k(4, 300);
    CHECK(k4.grade == check_grade::assertion);
    CHECK(k4.passed());
    CHECK(witness_value(k4, "reversal_set") == "[5]");

    const auto k6 = verify_even_k(6, 300);
    CHECK(k6.grade == check_grade::assertion);
    CHECK(k6.passed());
    CHECK(witness_value(k6, "reversal_set") == "[7]");

    const auto k8 = verify_even_k(8, 150);
    CHECK(k8.grade == check_grade::conjecture);
    CHECK(k8.passed());
    CHECK(witness_value(k8, "reversal_set") == "[9]");

    // k = 10 carries reversals beyond n = k+1; conjecture-grade finding
    const auto k10 = verify_even_k(10, 60);
    CHECK(k10.grade == check_grade::conjecture);
    CHECK(!k10.passed());

    CHECK_THROWS_AS(verify_even_k(5, 100), std::invalid_argument);
}

TEST_CASE("prefix-sum ratio scan") {
    const auto rep = s_ratio_scan(300, 1);
    CHECK(rep.grade == check_grade::informational);
    CHECK(rep.status() == "informational");
    CHECK(witness_value(rep, "ratios_at_least_one") == "yes");
    CHECK(witness_value(rep, "ratios_non_increasing") == "yes");

    // frozen exact values at n = 500
    const auto s = s_sum_series(501);
    CHECK(s[500] == integer("18669304494376211"));
    CHECK(s[501] == integer("19431478011913555"));
    mpq_class ratio_q(s[501]);
    ratio_q /= s[500];
    const double ratio = ratio_q.get_d();
    CHECK(ratio > 1.0);
    CHECK(ratio < 1.1);
    CHECK(std::fabs(ratio - 1.040825) < 1e-5);
}

TEST_CASE("distinct-count asymptotic ratio") {
    const auto rep = q_asymptotic_check(300);
    CHECK(rep.grade == check_grade::informational);
    CHECK(witness_value(rep, "gap_non_increasing") == "yes");

    const auto q = q_count_series(100);
    const double pi = 3.14159265358979323846;
    const double approx = std::exp(pi * std::sqrt(100.0 / 3.0)) /
                          (4.0 * std::pow(3.0, 0.25) * std::pow(100.0, 0.75));
    CHECK(std::fabs(q[100].get_d() / approx - 0.982353) < 1e-5);
}

TEST_CASE("all-negative tails of the window products") {
    const auto t1 = negative_tail_check(1, 200);
    CHECK(t1.passed());
    CHECK(witness_value(t1, "A_at_1") == "-16");
    CHECK(witness_value(t1, "B_at_1") == "384");
    CHECK(witness_value(t1, "largest_nonnegative_index") == "88");
    CHECK(witness_value(t1, "tail_established") == "yes");

    const auto t2 = negative_tail_check(2, 700);
    CHECK(t2.passed());
    CHECK(witness_value(t2, "largest_nonnegative_index") == "603");
    CHECK(witness_value(t2, "tail_established") == "yes");

    // the third window flips sign beyond any practical scan bound
    const auto t3 = negative_tail_check(3, 250);
    CHECK(t3.passed());
    CHECK(witness_value(t3, "tail_established") == "no");
}

TEST_CASE("positivity thresholds and prefix corrections") {
    const auto rep = verify_positivity_thresholds(250);
    CHECK(rep.passed());
    CHECK(witness_value(rep, "base_negatives") == "[1,4]");
    CHECK(witness_value(rep, "den_8_10_negatives") == "[1,4]");

    // the base window really is negative at 1 and 4
    const auto w = polynomial{1, -2, 1} * pochhammer(1, 2, 250, true);
    CHECK(positivity_scan(w, 0) == std::vector<std::int64_t>{1, 4});
}

TEST_CASE("factored difference campaign") {
    const auto rep = verify_factored_diff(150);
    CHECK(rep.passed());
    CHECK(rep.grade == check_grade::assertion);
}
