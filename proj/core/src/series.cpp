#include "hookbias/series.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hookbias/errors.hpp"

namespace hookbias {

truncated_series truncated_series::constant(const integer& c, std::int64_t trunc) {
    truncated_series s(trunc);
    s.coeff(0) = c;
    return s;
}

truncated_series truncated_series::monomial(std::int64_t e, std::int64_t trunc, const integer& c) {
    truncated_series s(trunc);
    if (e <= trunc)
        s.coeff(e) = c;
    return s;
}

truncated_series operator+(const truncated_series& a, const truncated_series& b) {
    const std::int64_t n = std::min(a.trunc(), b.trunc());
    truncated_series out(n);
    for (std::int64_t i = 0; i <= n; ++i)
        out.coeff(i) = a[i] + b[i];
    return out;
}

truncated_series operator-(const truncated_series& a, const truncated_series& b) {
    const std::int64_t n = std::min(a.trunc(), b.trunc());
    truncated_series out(n);
    for (std::int64_t i = 0; i <= n; ++i)
        out.coeff(i) = a[i] - b[i];
    return out;
}

truncated_series operator-(const truncated_series& a) {
    truncated_series out(a.trunc());
    for (std::int64_t i = 0; i <= a.trunc(); ++i)
        out.coeff(i) = -a[i];
    return out;
}

truncated_series operator*(const truncated_series& a, const truncated_series& b) {
    const std::int64_t n = std::min(a.trunc(), b.trunc());
    truncated_series out(n);
    for (std::int64_t i = 0; i <= n; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::int64_t j = 0; j <= n - i; ++j) {
            if (sgn(b[j]) == 0)
                continue;
            mpz_addmul(out.coeff(i + j).get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

truncated_series operator*(const integer& c, const truncated_series& a) {
    truncated_series out(a.trunc());
    for (std::int64_t i = 0; i <= a.trunc(); ++i)
        out.coeff(i) = c * a[i];
    return out;
}

truncated_series shift(const truncated_series& a, std::int64_t e) {
    truncated_series out(a.trunc());
    for (std::int64_t i = a.trunc(); i >= e; --i)
        out.coeff(i) = a[i - e];
    return out;
}

truncated_series mul_geometric(truncated_series a, std::int64_t k) {
    if (k < 1)
        throw std::invalid_argument("mul_geometric: k must be >= 1");
    for (std::int64_t n = k; n <= a.trunc(); ++n)
        a.coeff(n) += a[n - k];
    return a;
}

namespace {

// In-place multiply by (1 -+ q^e); descending pass keeps it O(trunc).
void apply_factor(truncated_series& s, std::int64_t e, factor_sign sign) {
    for (std::int64_t n = s.trunc(); n >= e; --n) {
        if (sign == factor_sign::minus)
            s.coeff(n) -= s[n - e];
        else
            s.coeff(n) += s[n - e];
    }
}

// In-place divide by (1 -+ q^e); the ascending running sum inverts one factor.
void remove_factor(truncated_series& s, std::int64_t e, factor_sign sign) {
    for (std::int64_t n = e; n <= s.trunc(); ++n) {
        if (sign == factor_sign::minus)
            s.coeff(n) += s[n - e];
        else
            s.coeff(n) -= s[n - e];
    }
}

} // namespace

truncated_series pochhammer(std::int64_t start, std::int64_t step, std::int64_t trunc,
                            bool invert, factor_sign sign) {
    if (start < 1 || step < 1)
        throw std::invalid_argument("pochhammer: start and step must be >= 1");
    truncated_series s = truncated_series::constant(1, trunc);
    for (std::int64_t e = start; e <= trunc; e += step) {
        if (invert)
            remove_factor(s, e, sign);
        else
            apply_factor(s, e, sign);
    }
    return s;
}

std::vector<std::int64_t> positivity_scan(const truncated_series& s, std::int64_t from,
                                          scan_polarity which) {
    std::vector<std::int64_t> hits;
    for (std::int64_t n = std::max<std::int64_t>(from, 0); n <= s.trunc(); ++n) {
        const int sg = sgn(s[n]);
        if ((which == scan_polarity::negatives && sg < 0) ||
            (which == scan_polarity::positives && sg > 0))
            hits.push_back(n);
    }
    return hits;
}

polynomial::polynomial(std::vector<integer> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

polynomial::polynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs)
        c_.emplace_back(v);
    normalize();
}

void polynomial::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

polynomial polynomial::monomial(std::int64_t e, const integer& c) {
    if (sgn(c) == 0)
        return polynomial();
    std::vector<integer> v(static_cast<std::size_t>(e) + 1);
    v.back() = c;
    return polynomial(std::move(v));
}

std::optional<std::int64_t> polynomial::degree() const {
    if (c_.empty())
        return std::nullopt;
    return static_cast<std::int64_t>(c_.size()) - 1;
}

const integer& polynomial::coeff(std::int64_t n) const {
    static const integer zero = 0;
    if (n < 0 || n >= static_cast<std::int64_t>(c_.size()))
        return zero;
    return c_[static_cast<std::size_t>(n)];
}

polynomial operator+(const polynomial& a, const polynomial& b) {
    std::vector<integer> v(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(static_cast<std::int64_t>(i)) + b.coeff(static_cast<std::int64_t>(i));
    return polynomial(std::move(v));
}

polynomial operator-(const polynomial& a, const polynomial& b) {
    std::vector<integer> v(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(static_cast<std::int64_t>(i)) - b.coeff(static_cast<std::int64_t>(i));
    return polynomial(std::move(v));
}

polynomial operator*(const polynomial& a, const polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return polynomial();
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    std::vector<integer> v(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (sgn(ac[i]) == 0)
            continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            if (sgn(bc[j]) != 0)
                mpz_addmul(v[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
    return polynomial(std::move(v));
}

polynomial exact_div(const polynomial& a, const polynomial& b) {
    if (b.is_zero())
        throw std::invalid_argument("exact_div: division by the zero polynomial");
    if (a.is_zero())
        return polynomial();
    const auto da = *a.degree();
    const auto db = *b.degree();
    if (da < db)
        throw nonzero_remainder("exact_div: degree of dividend below divisor");
    std::vector<integer> rem = a.coefficients();
    std::vector<integer> quot(static_cast<std::size_t>(da - db) + 1);
    const integer& lead = b.coeff(db);
    for (std::int64_t d = da - db; d >= 0; --d) {
        integer& top = rem[static_cast<std::size_t>(d + db)];
        if (sgn(top) == 0)
            continue;
        integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (sgn(r) != 0)
            throw nonzero_remainder("exact_div: leading coefficient not divisible");
        quot[static_cast<std::size_t>(d)] = q;
        for (std::int64_t i = 0; i <= db; ++i)
            mpz_submul(rem[static_cast<std::size_t>(d + i)].get_mpz_t(), q.get_mpz_t(),
                       b.coeff(i).get_mpz_t());
    }
    for (const integer& c : rem)
        if (sgn(c) != 0)
            throw nonzero_remainder("exact_div: nonzero remainder");
    return polynomial(std::move(quot));
}

integer eval_at_one(const polynomial& p) {
    integer s = 0;
    for (const integer& c : p.coefficients())
        s += c;
    return s;
}

truncated_series to_series(const polynomial& p, std::int64_t trunc) {
    truncated_series s(trunc);
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size() && static_cast<std::int64_t>(i) <= trunc; ++i)
        s.coeff(static_cast<std::int64_t>(i)) = c[i];
    return s;
}

truncated_series operator*(const polynomial& p, const truncated_series& s) {
    // The polynomial is exact, so the product keeps the order of s.
    const std::int64_t n = s.trunc();
    truncated_series out(n);
    const auto& pc = p.coefficients();
    for (std::size_t i = 0; i < pc.size() && static_cast<std::int64_t>(i) <= n; ++i) {
        if (sgn(pc[i]) == 0)
            continue;
        const auto e = static_cast<std::int64_t>(i);
        for (std::int64_t j = 0; j <= n - e; ++j)
            if (sgn(s[j]) != 0)
                mpz_addmul(out.coeff(e + j).get_mpz_t(), pc[i].get_mpz_t(), s[j].get_mpz_t());
    }
    return out;
}

truncated_series operator*(const truncated_series& s, const polynomial& p) {
    return p * s;
}

polynomial gaussian_binomial(std::int64_t m, std::int64_t n, std::int64_t base_exp) {
    if (base_exp < 1)
        throw std::invalid_argument("gaussian_binomial: base exponent must be >= 1");
    if (m < 0 || n < 0 || n > m)
        return polynomial();
    // Row-by-row Pascal recurrence, keeping one row of polynomials.
    std::vector<polynomial> row{polynomial{1}};
    for (std::int64_t mm = 1; mm <= m; ++mm) {
        std::vector<polynomial> next(static_cast<std::size_t>(mm) + 1);
        for (std::int64_t nn = 0; nn <= mm; ++nn) {
            polynomial acc;
            if (nn >= 1)
                acc = row[static_cast<std::size_t>(nn - 1)];
            if (nn < mm)
                acc = acc + polynomial::monomial(nn * base_exp) * row[static_cast<std::size_t>(nn)];
            next[static_cast<std::size_t>(nn)] = std::move(acc);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(n)];
}

polynomial gaussian_binomial_quotient(std::int64_t m, std::int64_t n, std::int64_t base_exp) {
    if (base_exp < 1)
        throw std::invalid_argument("gaussian_binomial_quotient: base exponent must be >= 1");
    if (m < 0 || n < 0 || n > m)
        return polynomial();
    auto one_minus = [&](std::int64_t i) {
        return polynomial{1} - polynomial::monomial(base_exp * i);
    };
    polynomial num{1};
    for (std::int64_t i = n + 1; i <= m; ++i)
        num = num * one_minus(i);
    polynomial den{1};
    for (std::int64_t i = 1; i <= m - n; ++i)
        den = den * one_minus(i);
    return exact_div(num, den);
}

} // namespace hookbias
