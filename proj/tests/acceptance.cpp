// Release gate: runs the twelve acceptance criteria and prints one PASS/FAIL
// line per criterion with the measured metric. Conjecture-grade and
// informational criteria are non-blocking; every other FAIL makes the run
// exit nonzero. Set HOOKBIAS_ACCEPTANCE_LONG=1 to extend the conjecture scan
// to order 10000.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hookbias/analysis.hpp"
#include "hookbias/bijections.hpp"
#include "hookbias/hookgf.hpp"
#include "hookbias/partitions.hpp"
#include "hookbias/series.hpp"

using namespace hookbias;

namespace {

int blocking_failures = 0;
int passes = 0;

void line(int idx, bool pass, bool blocking, const std::string& text) {
    std::printf("criterion %2d: %s%s — %s\n", idx, pass ? "PASS" : "FAIL",
                blocking ? "" : (pass ? " (non-blocking)" : " (non-blocking finding)"),
                text.c_str());
    std::fflush(stdout);
    if (pass)
        ++passes;
    else if (blocking)
        ++blocking_failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// First n <= trunc with coefficient < 0, skipping the expected index k+1.
std::optional<std::int64_t> first_reversal(std::int64_t k, std::int64_t trunc) {
    const truncated_series diff = gf_diff_2k(k, trunc);
    for (std::int64_t n = 0; n <= trunc; ++n)
        if (n != k + 1 && sgn(diff[n]) < 0)
            return n;
    return std::nullopt;
}

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const truncated_series b23 = gf_b_2i(3, 82);
    const truncated_series b24 = gf_b_2i(4, 82);
    const double ms = ms_since(t0);
    const bool values_ok = b23[82] == 515393 && b24[82] == 515487;
    const bool fast = ms < 10000.0;
    line(1, values_ok && fast, true,
         "regression values b_{2,3}(82)=" + b23[82].get_str() + " (want 515393), b_{2,4}(82)=" +
             b24[82].get_str() + " (want 515487); " + std::to_string(ms) + " ms (limit 10 s)");
}

void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::int64_t upto = 40;
    std::int64_t checked = 0;
    std::int64_t mismatches = 0;

    std::vector<truncated_series> even_side;
    for (std::int64_t i = 1; i <= 7; ++i)
        even_side.push_back(gf_b_2i(i, upto));
    const partition_class reg2 = partition_class::t_regular(2);
    for (std::int64_t n = 0; n <= upto; ++n) {
        const auto profile = hook_profile(n, reg2, 7);
        for (std::int64_t i = 1; i <= 7; ++i, ++checked)
            if (even_side[static_cast<std::size_t>(i - 1)][n] != profile[i])
                ++mismatches;
    }

    const truncated_series b31 = gf_b_t1(3, upto);
    const truncated_series b32 = gf_b_32(upto);
    const partition_class reg3 = partition_class::t_regular(3);
    for (std::int64_t n = 0; n <= upto; ++n) {
        const auto profile = hook_profile(n, reg3, 2);
        checked += 2;
        if (b31[n] != profile[1])
            ++mismatches;
        if (b32[n] != profile[2])
            ++mismatches;
    }
    const double ms = ms_since(t0);
    line(2, mismatches == 0 && ms < 120000.0, true,
         "series equal brute-force hook counts on the formula-backed grid (t=2, i=1..7; t=3, "
         "i=1..2), n<=40: " +
             std::to_string(checked) + " comparisons, " + std::to_string(mismatches) +
             " mismatches; " + std::to_string(ms) + " ms (limit 2 min)");
}

void criterion_3() {
    const check_report rep = verify_theorem1(1000);
    std::string below;
    for (const auto& w : rep.witnesses)
        if (w.name == "exceptions_below_28")
            below = w.value;
    const bool nonempty = !below.empty() && below != "[]";
    line(3, rep.passed() && nonempty, true,
         "b_{3,2}(n) >= b_{3,1}(n) for 28<=n<=1000 with " + std::to_string(rep.violations.size()) +
             " violations; exceptions below 28: " + below);
}

void criterion_4() {
    const check_report rep = verify_factored_diff(300);
    line(4, rep.passed(), true,
         "factored form of the difference series matches the direct difference to order 300 (" +
             std::to_string(rep.violations.size()) + " mismatches)");
}

void criterion_5() {
    std::int64_t suites = 0;
    std::int64_t failures = 0;
    for (std::int64_t n = 3; n <= 60; ++n) {
        // classify both sides once per weight
        std::vector<std::vector<triplet>> sources(8);
        for_each_triplet(n, triplet_side::T, [&](const triplet& t) {
            sources[static_cast<std::size_t>(*classify(t))].push_back(t);
        });
        std::vector<std::set<triplet>> targets(8);
        for_each_triplet(n - 3, triplet_side::S, [&](const triplet& s) {
            if (const auto c = classify(s))
                targets[static_cast<std::size_t>(*c)].insert(s);
        });
        for (int i = 1; i <= 6; ++i, ++suites) {
            const auto& src = sources[static_cast<std::size_t>(i)];
            const auto& dst = targets[static_cast<std::size_t>(i)];
            bool ok = src.size() == dst.size();
            std::set<triplet> images;
            for (const triplet& t : src) {
                const triplet img = phi(i, t);
                ok = ok && dst.count(img) && images.insert(img).second &&
                     phi_inv(i, img) == t;
            }
            if (!ok)
                ++failures;
        }
    }

    // published example images, one per map
    const auto mk = [](triplet_side side, std::vector<std::int64_t> a,
                       std::vector<std::int64_t> b, std::vector<std::int64_t> c) {
        return triplet(side, partition(std::move(a)), partition(std::move(b)),
                       partition(std::move(c)));
    };
    const std::vector<std::pair<triplet, triplet>> examples = {
        {mk(triplet_side::T, {}, {10, 10, 7}, {9, 6}), mk(triplet_side::S, {}, {10, 10, 4}, {9, 6})},
        {mk(triplet_side::T, {5, 2, 2}, {}, {9}), mk(triplet_side::S, {2, 2, 2}, {}, {9})},
        {mk(triplet_side::T, {11, 11, 5}, {}, {6}), mk(triplet_side::S, {5}, {7, 4, 4, 4}, {6})},
        {mk(triplet_side::T, {8, 8, 8, 2}, {}, {6}), mk(triplet_side::S, {8, 5, 2}, {4, 4}, {6})},
        {mk(triplet_side::T, {5, 5, 2}, {}, {9, 6, 6, 6, 6}),
         mk(triplet_side::S, {5, 5, 2}, {7, 7, 7}, {9})},
        {mk(triplet_side::T, {2}, {}, {9, 9, 9, 6}), mk(triplet_side::S, {2}, {7, 4, 4}, {9, 6})},
    };
    std::int64_t example_failures = 0;
    for (std::size_t idx = 0; idx < examples.size(); ++idx) {
        const int i = static_cast<int>(idx) + 1;
        if (!(phi(i, examples[idx].first) == examples[idx].second &&
              phi_inv(i, examples[idx].second) == examples[idx].first))
            ++example_failures;
    }
    line(5, failures == 0 && example_failures == 0, true,
         "cardinality/injectivity/round-trip on " + std::to_string(suites) +
             " (i, n) suites for 3<=n<=60: " + std::to_string(failures) +
             " failures; published examples: " + std::to_string(example_failures) +
             " of 6 failed");
}

void criterion_6() {
    const check_report rep = verify_t7_s7_range(152, 600);
    line(6, rep.passed(), true,
         "residual-class comparison with exact rational sandwich bounds for 152<=n<=600: " +
             std::to_string(rep.violations.size()) + " violations");
}

void criterion_7() {
    bool eval_ok = true;
    bool series_ok = true;
    for (std::int64_t t = 1; t <= 5; ++t) {
        const auto [a, b] = compute_At_Bt(t);
        if (eval_at_one(a) * 2 * (2 * t + 1) * (2 * t + 2) != -eval_at_one(b))
            eval_ok = false;
        if (!verify_At_Bt_identity(t, 200).passed())
            series_ok = false;
    }
    line(7, eval_ok && series_ok, true,
         std::string("window polynomials for t=1..5: coefficient-sum identity ") +
             (eval_ok ? "exact" : "BROKEN") + ", rational-form identity to order 200 " +
             (series_ok ? "exact" : "BROKEN"));
}

void criterion_8() {
    const check_report r45 = decompose_b24_b25(2000);
    const check_report r67 = decompose_b26_b27(2000);
    line(8, r45.passed() && r67.passed(), true,
         "bracket decompositions exact and sign patterns to order 2000 with lone reversals at "
         "n=5 and n=7: " +
             std::to_string(r45.violations.size() + r67.violations.size()) + " violations");
}

void criterion_9() {
    const auto k3 = first_reversal(3, 120);
    const auto k5 = first_reversal(5, 2000);
    const auto k9 = first_reversal(9, 2000);
    // No reversal for k=7 exists at or below 2000; measure where the first
    // one actually sits so the failure carries its metric.
    const auto k7 = first_reversal(7, 2300);
    const bool k3_ok = k3 == std::optional<std::int64_t>(82);
    const bool k5_ok = k5.has_value() && *k5 <= 2000;
    const bool k9_ok = k9.has_value() && *k9 <= 2000;
    const bool k7_ok = k7.has_value() && *k7 <= 2000;
    const auto show = [](const std::optional<std::int64_t>& v) {
        return v ? std::to_string(*v) : std::string("none");
    };
    line(9, k3_ok && k5_ok && k7_ok && k9_ok, true,
         "first reversals: k=3 at " + show(k3) + " (want exactly 82), k=5 at " + show(k5) +
             ", k=9 at " + show(k9) + "; k=7 has none at or below 2000 (first sits at " +
             show(k7) + "), so the <=2000 requirement is unattainable");
}

void criterion_10() {
    const bool long_run = std::getenv("HOOKBIAS_ACCEPTANCE_LONG") != nullptr;
    const std::int64_t trunc = long_run ? 10000 : 2000;
    std::string findings;
    bool all_clean = true;
    for (std::int64_t k = 8; k <= 20; k += 2) {
        const check_report rep = verify_even_k(k, trunc);
        if (!rep.passed()) {
            all_clean = false;
            findings += " k=" + std::to_string(k) + " first extra reversal at n=" +
                        std::to_string(rep.violations.front().n) + ";";
        }
    }
    line(10, all_clean, false,
         "sole-exception scan for even k in {8..20} to order " + std::to_string(trunc) +
             (all_clean ? ": clean" : ": extra reversals found —" + findings));
}

void criterion_11() {
    const check_report thresholds = verify_positivity_thresholds(2000);
    const truncated_series w = polynomial{1, -2, 1} * pochhammer(1, 2, 500, true);
    const auto negs = positivity_scan(w, 0);
    const bool base_ok = negs == std::vector<std::int64_t>{1, 4};
    // per-summand thresholds (orders 34 and 55) are scanned inside the
    // three-summand decomposition
    const check_report summands = decompose_b26_b27(2000);
    line(11, thresholds.passed() && base_ok && summands.passed(), true,
         "base window negative exactly at {1,4} up to 500; quotient scans clean beyond "
         "orders 5/17 and summand scans beyond 34/55, all to 2000 (" +
             std::to_string(thresholds.violations.size() + summands.violations.size()) +
             " violations)");
}

void criterion_12() {
    const truncated_series q = q_count_series(1000);
    const double pi = 3.14159265358979323846;
    double prev_gap = 1e9;
    bool trending = true;
    double final_ratio = 0.0;
    for (std::int64_t n = 100; n <= 1000; n += 100) {
        const double x = static_cast<double>(n);
        const double approx =
            std::exp(pi * std::sqrt(x / 3.0)) / (4.0 * std::pow(3.0, 0.25) * std::pow(x, 0.75));
        final_ratio = q[n].get_d() / approx;
        const double gap = std::fabs(final_ratio - 1.0);
        if (gap > prev_gap + 1e-12)
            trending = false;
        prev_gap = gap;
    }
    const truncated_series s = s_sum_series(501);
    mpq_class sr{s[501]};
    sr /= s[500];
    const double s_ratio = sr.get_d();
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "count ratio at n=1000 is %.5f (want within [0.9,1.1], trending %s); "
                  "prefix-sum ratio at n=500 is %.5f (want in (1,1.1))",
                  final_ratio, trending ? "toward 1" : "NOT monotone", s_ratio);
    line(12, final_ratio >= 0.9 && final_ratio <= 1.1 && trending && s_ratio > 1.0 &&
                 s_ratio < 1.1,
         false, buf);
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("summary: %d/12 pass, %d blocking failure(s); total %.1f s\n", passes,
                blocking_failures, ms_since(t0) / 1000.0);
    return blocking_failures == 0 ? 0 : 1;
}
