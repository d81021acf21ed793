#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hookbias {

using integer = mpz_class;

// Formal power series in q with exact integer coefficients, truncated at a
// fixed order: a value holds the coefficients of q^0 .. q^trunc and nothing
// beyond. Binary operations truncate to the smaller order of the operands;
// below that order every coefficient is exact.
class truncated_series {
public:
    explicit truncated_series(std::int64_t trunc) : c_(static_cast<std::size_t>(trunc) + 1) {}

    static truncated_series constant(const integer& c, std::int64_t trunc);
    static truncated_series monomial(std::int64_t e, std::int64_t trunc, const integer& c = 1);

    std::int64_t trunc() const { return static_cast<std::int64_t>(c_.size()) - 1; }

    const integer& operator[](std::int64_t n) const { return c_[static_cast<std::size_t>(n)]; }
    integer& coeff(std::int64_t n) { return c_[static_cast<std::size_t>(n)]; }

    bool operator==(const truncated_series&) const = default;

private:
    std::vector<integer> c_;
};

truncated_series operator+(const truncated_series& a, const truncated_series& b);
truncated_series operator-(const truncated_series& a, const truncated_series& b);
truncated_series operator-(const truncated_series& a);
truncated_series operator*(const truncated_series& a, const truncated_series& b);
truncated_series operator*(const integer& c, const truncated_series& a);

// Multiply by q^e: coefficients move up, overflow past trunc is dropped.
truncated_series shift(const truncated_series& a, std::int64_t e);

// Multiply by 1/(1 - q^k) through the running-sum expansion
// out[n] = a[n] + out[n-k]. Requires k >= 1.
truncated_series mul_geometric(truncated_series a, std::int64_t k);

enum class factor_sign { minus, plus };

// prod over j >= 0 of (1 -+ q^{start + j*step})^{+-1}, expanded to order
// trunc. Factors whose exponent exceeds trunc contribute nothing and are
// skipped; with invert each factor is divided out by its own running-sum
// (or alternating-sum) pass, so no general series inversion is involved.
// Requires start >= 1, step >= 1.
truncated_series pochhammer(std::int64_t start, std::int64_t step, std::int64_t trunc,
                            bool invert = false, factor_sign sign = factor_sign::minus);

enum class scan_polarity { negatives, positives };

// Indices n in [from, trunc] whose coefficient is strictly negative (or
// strictly positive), in increasing order.
std::vector<std::int64_t> positivity_scan(const truncated_series& s, std::int64_t from,
                                          scan_polarity which = scan_polarity::negatives);

// Dense polynomial with exact integer coefficients, normalized so that the
// leading coefficient is nonzero; the zero polynomial has no degree.
class polynomial {
public:
    polynomial() = default;
    explicit polynomial(std::vector<integer> coeffs);
    polynomial(std::initializer_list<long> coeffs);

    static polynomial monomial(std::int64_t e, const integer& c = 1);

    bool is_zero() const { return c_.empty(); }
    std::optional<std::int64_t> degree() const;

    // Coefficient of q^n, zero beyond the degree.
    const integer& coeff(std::int64_t n) const;

    const std::vector<integer>& coefficients() const { return c_; }

    bool operator==(const polynomial&) const = default;

private:
    void normalize();
    std::vector<integer> c_;
};

polynomial operator+(const polynomial& a, const polynomial& b);
polynomial operator-(const polynomial& a, const polynomial& b);
polynomial operator*(const polynomial& a, const polynomial& b);

// Quotient a/b when the division is exact; throws nonzero_remainder otherwise.
polynomial exact_div(const polynomial& a, const polynomial& b);

// Coefficient sum, i.e. the value at q = 1.
integer eval_at_one(const polynomial& p);

truncated_series to_series(const polynomial& p, std::int64_t trunc);

// Exact polynomial times truncated series; the result keeps the series order.
truncated_series operator*(const polynomial& p, const truncated_series& s);
truncated_series operator*(const truncated_series& s, const polynomial& p);

// Gaussian binomial {m choose n} in base q^base_exp, built by the Pascal-type
// recurrence {m,n} = {m-1,n-1} + q^{n*base_exp} {m-1,n}. Zero when n < 0 or
// n > m. Requires base_exp >= 1.
polynomial gaussian_binomial(std::int64_t m, std::int64_t n, std::int64_t base_exp);

// Same value through the product route: prod_{i=n+1..m}(1-q^{e i}) divided
// exactly by prod_{i=1..m-n}(1-q^{e i}). Kept as an independent construction
// for cross-checking the recurrence.
polynomial gaussian_binomial_quotient(std::int64_t m, std::int64_t n, std::int64_t base_exp);

} // namespace hookbias
