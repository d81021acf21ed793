#include "hookbias/hookgf.hpp"

#include <stdexcept>
#include <string>

#include "hookbias/errors.hpp"

namespace hookbias {

namespace {

std::string dec(const integer& v) {
    return v.get_str();
}

// 1 + q + ... + q^{2i+1}
polynomial unit_poly(std::int64_t i) {
    std::vector<integer> c(static_cast<std::size_t>(2 * i + 2), integer(1));
    return polynomial(std::move(c));
}

} // namespace

truncated_series gf_b_t1(std::int64_t t, std::int64_t N) {
    if (t < 2)
        throw std::invalid_argument("gf_b_t1: t must be >= 2");
    const truncated_series num = pochhammer(t, t, N);
    const truncated_series den = pochhammer(1, 1, N, true);
    const truncated_series bracket = mul_geometric(truncated_series::monomial(1, N), 1) -
                                     mul_geometric(truncated_series::monomial(t, N), t);
    return num * den * bracket;
}

truncated_series gf_b_32(std::int64_t N) {
    const truncated_series num = pochhammer(3, 3, N);
    const truncated_series den = pochhammer(1, 1, N, true);
    const truncated_series bracket = mul_geometric(truncated_series::monomial(2, N), 1) +
                                     mul_geometric(truncated_series::monomial(2, N), 2) -
                                     mul_geometric(truncated_series::monomial(3, N, 2), 3);
    return num * den * bracket;
}

truncated_series gf_t_series(std::int64_t N) {
    return mul_geometric(pochhammer(12, 3, N), 2) * pochhammer(5, 1, N, true);
}

truncated_series gf_s_series(std::int64_t N) {
    return mul_geometric(pochhammer(12, 3, N), 2) * pochhammer(4, 1, N, true);
}

truncated_series gf_diff_32_31(std::int64_t N) {
    const truncated_series bracket = gf_t_series(N) - shift(gf_s_series(N), 3);
    const polynomial prefactor = polynomial{0, -1} * polynomial{1, 0, 1, 0, 1} *
                                 polynomial{1, 0, 0, 1, 0, 0, 1};
    return prefactor * bracket;
}

truncated_series b1_kernel(std::int64_t i, std::int64_t j, std::int64_t N) {
    truncated_series acc(N);
    for (std::int64_t k = 0; k <= j; ++k) {
        const std::int64_t m = 2 * i + 2 * k - 4 * j;
        if (m <= 0)
            throw degenerate_denominator("b1_kernel: exponent " + std::to_string(m) +
                                         " at (i,j,k)=(" + std::to_string(i) + "," +
                                         std::to_string(j) + "," + std::to_string(k) + ")");
        const truncated_series term =
            gaussian_binomial(j, k, 2) *
            mul_geometric(truncated_series::monomial(i + k * k, N), m);
        acc = k % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

truncated_series b2_kernel(std::int64_t i, std::int64_t j, std::int64_t N) {
    truncated_series acc(N);
    for (std::int64_t k = 0; k <= j; ++k) {
        const std::int64_t m = 2 * i + 2 * k - 4 * j - 2;
        if (m <= 0)
            throw degenerate_denominator("b2_kernel: exponent " + std::to_string(m) +
                                         " at (i,j,k)=(" + std::to_string(i) + "," +
                                         std::to_string(j) + "," + std::to_string(k) + ")");
        const truncated_series term =
            gaussian_binomial(j, k, 2) *
            mul_geometric(truncated_series::monomial(3 * i - 4 * j - 3 + k * k + 2 * k, N), m);
        acc = k % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

truncated_series gf_b_2i(std::int64_t i, std::int64_t N) {
    if (i < 1)
        throw std::invalid_argument("gf_b_2i: i must be >= 1");
    truncated_series acc(N);
    for (std::int64_t j = 0; j <= (i + 1) / 2 - 1; ++j)
        acc = acc + gaussian_binomial(i - j - 1, j, 2) * b1_kernel(i, j, N);
    for (std::int64_t j = 0; j <= i / 2 - 1; ++j)
        acc = acc + gaussian_binomial(i - j - 2, j, 2) * b2_kernel(i, j, N);
    return pochhammer(1, 1, N, false, factor_sign::plus) * acc;
}

truncated_series gf_diff_2k(std::int64_t k, std::int64_t N) {
    return gf_b_2i(k, N) - gf_b_2i(k + 1, N);
}

std::pair<polynomial, polynomial> compute_At_Bt(std::int64_t t) {
    if (t < 1)
        throw std::invalid_argument("compute_At_Bt: t must be >= 1");
    polynomial B{1};
    for (std::int64_t i = 0; i <= 2 * t + 1; ++i)
        B = B * unit_poly(i);

    polynomial A;
    const auto add_term = [&](int sign, const polynomial& g, std::int64_t e, std::int64_t idx) {
        const polynomial term = g * polynomial::monomial(e) * exact_div(B, unit_poly(idx));
        A = sign > 0 ? A + term : A - term;
    };
    const auto alt = [](std::int64_t k) { return k % 2 == 0 ? 1 : -1; };

    for (std::int64_t j = 0; j <= t; ++j)
        for (std::int64_t k = 0; k <= j; ++k)
            add_term(alt(k), gaussian_binomial(2 * t - j, j, 2) * gaussian_binomial(j, k, 2),
                     2 * t + 1 + k * k, 2 * t + k - 2 * j);
    for (std::int64_t j = 0; j <= t - 1; ++j)
        for (std::int64_t k = 0; k <= j; ++k)
            add_term(alt(k), gaussian_binomial(2 * t - 1 - j, j, 2) * gaussian_binomial(j, k, 2),
                     6 * t - 4 * j + k * k + 2 * k, 2 * t + k - 2 * j - 1);
    for (std::int64_t j = 0; j <= t; ++j)
        for (std::int64_t k = 0; k <= j; ++k)
            add_term(-alt(k), gaussian_binomial(2 * t + 1 - j, j, 2) * gaussian_binomial(j, k, 2),
                     2 * t + 2 + k * k, 2 * t + k - 2 * j + 1);
    for (std::int64_t j = 0; j <= t; ++j)
        for (std::int64_t k = 0; k <= j; ++k)
            add_term(-alt(k), gaussian_binomial(2 * t - j, j, 2) * gaussian_binomial(j, k, 2),
                     6 * t + 3 - 4 * j + k * k + 2 * k, 2 * t + k - 2 * j);
    return {A, B};
}

check_report verify_At_Bt_identity(std::int64_t t, std::int64_t N) {
    check_report rep;
    rep.campaign = "atbt";
    rep.add_param("t", std::to_string(t));
    rep.add_param("N", std::to_string(N));
    rep.lo = 0;
    rep.hi = N;

    const auto [A, B] = compute_At_Bt(t);
    const truncated_series lhs =
        mul_geometric(A * pochhammer(1, 1, N, false, factor_sign::plus), 1);
    const truncated_series rhs = B * gf_diff_2k(2 * t + 1, N);
    for (std::int64_t n = 0; n <= N; ++n)
        if (lhs[n] != rhs[n])
            rep.add_violation(n, dec(lhs[n]), dec(rhs[n]), "rational-form identity mismatch");

    rep.add_witness("A_t(1)", dec(eval_at_one(A)));
    rep.add_witness("B_t(1)", dec(eval_at_one(B)));
    return rep;
}

polynomial diff45_poly_A() {
    return polynomial{2, 1, 3, 3, 4, 4, 6, 7, 6, 7, 5, 6, 4, 4, 3, 3, 1};
}

polynomial diff45_poly_B() {
    return polynomial::monomial(18) + polynomial::monomial(20);
}

polynomial diff45_bracket() {
    return polynomial{2,  -3, 3, -2, 1,  -1, 2, -1, -2, 2, -3,
                      3,  -3, 2, -1, 1,  -2, 1, 2,  -1, 1, -1};
}

polynomial diff67_poly_C() {
    return polynomial{3, 1, 4, 2, 6, 3, 7, 5, 7, 6, 9, 9, 9, 9, 6, 9, 4,
                      7, 2, 6, 2, 4, 2, 3, 0, 0, 0, 0, 1, 0, 1, 0, 1};
}

polynomial diff67_bracket() {
    return polynomial{3,  -2, 3,  -2, 4, -3, 4,  -2, 2,  -1, 4, 0,  -1, 0,  -3, 3, -5,
                      3,  -5, 4,  -4, 2, -2, 1,  -4, 0,  1,  1, 1,  -1, 2,  -1, 1, -1};
}

namespace {

void compare_series(check_report& rep, const truncated_series& got, const truncated_series& want,
                    std::int64_t N, const std::string& what) {
    for (std::int64_t n = 0; n <= N; ++n)
        if (got[n] != want[n])
            rep.add_violation(n, dec(got[n]), dec(want[n]), what);
}

void compare_poly(check_report& rep, const polynomial& got, const polynomial& want,
                  const std::string& what) {
    const std::int64_t top =
        std::max(got.degree().value_or(-1), want.degree().value_or(-1));
    for (std::int64_t n = 0; n <= top; ++n)
        if (got.coeff(n) != want.coeff(n))
            rep.add_violation(n, dec(got.coeff(n)), dec(want.coeff(n)), what);
}

// Negatives outside the allowed prefix threshold become violations; the whole
// negative set lands in the witnesses.
void scan_threshold(check_report& rep, const truncated_series& s, std::int64_t threshold,
                    const std::string& label) {
    std::string set = "[";
    for (std::int64_t n : positivity_scan(s, 0)) {
        if (set.size() > 1)
            set += ",";
        set += std::to_string(n);
        if (n >= threshold)
            rep.add_violation(n, dec(s[n]), "0", label + " negative at or above " +
                                                     std::to_string(threshold));
    }
    set += "]";
    rep.add_witness(label + "_negative_set", set);
}

} // namespace

check_report decompose_b24_b25(std::int64_t N) {
    if (N < 25)
        throw std::invalid_argument("decompose_b24_b25: N must be >= 25");
    check_report rep;
    rep.campaign = "b24-b25";
    rep.add_param("N", std::to_string(N));
    rep.lo = 0;
    rep.hi = N;

    const polynomial one_minus_q{1, -1};
    const polynomial rebuilt =
        diff45_poly_A() * one_minus_q * one_minus_q + diff45_poly_B() * one_minus_q;
    compare_poly(rep, rebuilt, diff45_bracket(), "bracket polynomial mismatch");

    truncated_series rhs = shift(to_series(diff45_bracket(), N), 4);
    rhs = mul_geometric(mul_geometric(rhs, 8), 10) * pochhammer(1, 2, N, true);
    const truncated_series diff = gf_diff_2k(4, N);
    compare_series(rep, rhs, diff, N, "closed form vs series pipeline");

    for (std::int64_t n : positivity_scan(diff, 0))
        if (n != 5)
            rep.add_violation(n, dec(diff[n]), "0", "unexpected negative coefficient");
    if (sgn(diff[5]) >= 0)
        rep.add_violation(5, dec(diff[5]), "< 0", "expected reversal at 5 missing");
    rep.add_witness("diff[5]", dec(diff[5]));
    return rep;
}

check_report decompose_b26_b27(std::int64_t N) {
    if (N < 55)
        throw std::invalid_argument("decompose_b26_b27: N must be >= 55");
    check_report rep;
    rep.campaign = "b26-b27";
    rep.add_param("N", std::to_string(N));
    rep.lo = 0;
    rep.hi = N;

    const polynomial one_minus_q{1, -1};
    const polynomial rebuilt = diff67_poly_C() * one_minus_q +
                               polynomial::monomial(10) * polynomial{1, 0, -1} *
                                   (polynomial{1} - polynomial::monomial(14)) +
                               polynomial::monomial(27) + polynomial::monomial(30);
    compare_poly(rep, rebuilt, diff67_bracket(), "bracket polynomial mismatch");

    const truncated_series tail = pochhammer(3, 2, N, true);
    truncated_series rhs = shift(to_series(diff67_bracket(), N), 6);
    rhs = mul_geometric(mul_geometric(rhs, 12), 14) * tail;
    const truncated_series diff = gf_diff_2k(6, N);
    compare_series(rep, rhs, diff, N, "closed form vs series pipeline");

    truncated_series summand1 = shift(to_series(diff67_poly_C() * one_minus_q, N), 6);
    summand1 = mul_geometric(mul_geometric(summand1, 12), 14) * tail;
    truncated_series summand2 = shift(to_series(polynomial{1, 0, -1}, N), 16);
    summand2 = mul_geometric(summand2, 12) * tail;
    truncated_series summand3 = shift(to_series(polynomial{1, 0, 0, 1}, N), 33);
    summand3 = mul_geometric(mul_geometric(summand3, 12), 14) * tail;
    compare_series(rep, summand1 + summand2 + summand3, diff, N, "three-summand split");

    scan_threshold(rep, summand1, 55, "summand1");
    scan_threshold(rep, summand2, 34, "summand2");
    scan_threshold(rep, summand3, 0, "summand3");

    for (std::int64_t n : positivity_scan(diff, 0))
        if (n != 7)
            rep.add_violation(n, dec(diff[n]), "0", "unexpected negative coefficient");
    if (sgn(diff[7]) >= 0)
        rep.add_violation(7, dec(diff[7]), "< 0", "expected reversal at 7 missing");
    rep.add_witness("diff[7]", dec(diff[7]));
    return rep;
}

} // namespace hookbias
