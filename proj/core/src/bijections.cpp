#include "hookbias/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hookbias/errors.hpp"

namespace hookbias {

triplet::triplet(triplet_side side, partition first, partition second, partition third)
    : side_(side), first_(std::move(first)), second_(std::move(second)), third_(std::move(third)) {
    const std::int64_t second_min = side == triplet_side::T ? 7 : 4;
    for (std::int64_t v : first_.parts())
        if (v % 3 != 2)
            throw std::invalid_argument("triplet: first component part " + std::to_string(v) +
                                        " not congruent to 2 mod 3");
    for (std::int64_t v : second_.parts())
        if (v % 3 != 1 || v < second_min)
            throw std::invalid_argument("triplet: second component part " + std::to_string(v) +
                                        " not 1 mod 3 with minimum " + std::to_string(second_min));
    for (std::int64_t v : third_.parts())
        if (v != 6 && v != 9)
            throw std::invalid_argument("triplet: third component part " + std::to_string(v) +
                                        " not in {6, 9}");
}

std::int64_t triplet::weight() const {
    return first_.weight() + second_.weight() + third_.weight();
}

std::string triplet::to_string() const {
    return "(" + first_.to_string() + "," + second_.to_string() + "," + third_.to_string() + ")";
}

void for_each_triplet(std::int64_t n, triplet_side side,
                      const std::function<void(const triplet&)>& visit) {
    if (n < 0)
        throw std::invalid_argument("for_each_triplet: n must be >= 0");
    const partition_class first_cls = partition_class::residue(2, 3, 2);
    const partition_class second_cls =
        partition_class::residue(1, 3, side == triplet_side::T ? 7 : 4);
    const partition_class third_cls = partition_class::from_parts({6, 9});
    for (std::int64_t wa = 0; wa <= n; ++wa) {
        for_each_partition(wa, first_cls, [&](const partition& a) {
            for (std::int64_t wb = 0; wb <= n - wa; ++wb) {
                for_each_partition(wb, second_cls, [&](const partition& b) {
                    for_each_partition(n - wa - wb, third_cls, [&](const partition& c) {
                        visit(triplet(side, a, b, c));
                    });
                });
            }
        });
    }
}

std::vector<int> matching_subsets(const triplet& t) {
    std::vector<int> out;
    const partition& first = t.first();
    const partition& second = t.second();
    const partition& third = t.third();
    const std::int64_t p1 = first.part(1);
    const std::int64_t p2 = first.part(2);
    // "first two parts equal and at most 5, or the single part 2"; indices
    // beyond the length read as 0, which places the empty partition here too.
    const bool small_first =
        (p1 == p2 && p1 <= 5) || first.parts() == std::vector<std::int64_t>{2};

    if (t.side() == triplet_side::T) {
        const bool be = second.empty();
        const std::int64_t f6 = third.multiplicity(6);
        const std::int64_t f9 = third.multiplicity(9);
        if (!be)
            out.push_back(1);
        if (be && p1 > p2 && p1 >= 5)
            out.push_back(2);
        if (be && p1 == p2 && p1 >= 11)
            out.push_back(3);
        if (be && p1 == p2 && p1 == 8)
            out.push_back(4);
        if (be && f6 >= 4 && small_first)
            out.push_back(5);
        if (be && f6 <= 3 && f9 >= 2 && small_first)
            out.push_back(6);
        if (be && f6 <= 3 && f9 <= 1 && small_first)
            out.push_back(7);
    } else {
        if (!second.empty() && second.multiplicity(second.parts().back()) == 1)
            out.push_back(1);
        if (p1 >= 2 && second.empty())
            out.push_back(2);
        if (second.length() == 4 && second.part(2) == 4 && second.part(3) == 4 &&
            second.part(4) == 4) {
            const std::int64_t m1 = second.part(1);
            if (m1 >= std::max<std::int64_t>(2 * p1 - 15, 7) && m1 % 2 == 1)
                out.push_back(3);
        }
        if (p1 <= 8 && first.multiplicity(5) >= 1 &&
            second.parts() == std::vector<std::int64_t>{4, 4})
            out.push_back(4);
        if (second.parts() == std::vector<std::int64_t>{7, 7, 7} && small_first)
            out.push_back(5);
        if (second.parts() == std::vector<std::int64_t>{7, 4, 4} && third.multiplicity(6) <= 3 &&
            small_first)
            out.push_back(6);
        const bool first_all_2 = std::all_of(first.parts().begin(), first.parts().end(),
                                             [](std::int64_t v) { return v == 2; });
        const std::int64_t y = second.multiplicity(4);
        const std::int64_t z = second.multiplicity(7);
        if (first_all_2 && y + z == second.length() && y >= 4 && third.empty())
            out.push_back(7);
    }
    return out;
}

std::optional<int> classify(const triplet& t) {
    const std::vector<int> matches = matching_subsets(t);
    if (matches.size() > 1) {
        std::string list;
        for (int i : matches)
            list += (list.empty() ? "" : ",") + std::to_string(i);
        throw classification_gap("triplet " + t.to_string() + " matches subsets {" + list + "}");
    }
    if (t.side() == triplet_side::T) {
        if (matches.empty())
            throw classification_gap("triplet " + t.to_string() + " matches no subset");
        return matches[0];
    }
    return matches.empty() ? std::nullopt : std::optional<int>(matches[0]);
}

namespace {

void require_member(int i, const triplet& t, triplet_side side, const char* map_name) {
    if (i < 1 || i > 6)
        throw std::invalid_argument(std::string(map_name) + ": subset index must be in 1..6");
    if (t.side() != side || classify(t) != std::optional<int>(i))
        throw domain_violation(std::string(map_name) + ": " + t.to_string() +
                               " is not in subset " + std::to_string(i));
}

} // namespace

triplet phi(int i, const triplet& t) {
    require_member(i, t, triplet_side::T, "phi");
    const partition& a = t.first();
    const partition& b = t.second();
    const partition& g = t.third();
    switch (i) {
    case 1: {
        // Subtract 3 from the smallest part of the second component.
        std::vector<std::int64_t> mu = b.parts();
        mu.back() -= 3;
        return triplet(triplet_side::S, a, partition(std::move(mu)), g);
    }
    case 2: {
        // Subtract 3 from the largest part of the first component.
        std::vector<std::int64_t> pi = a.parts();
        pi[0] -= 3;
        return triplet(triplet_side::S, partition(std::move(pi)), partition(), g);
    }
    case 3: {
        // Trade the two equal leading parts 3k+2 for (6k-11,4,4,4).
        const std::int64_t k = (a.part(1) - 2) / 3;
        std::vector<std::int64_t> pi(a.parts().begin() + 2, a.parts().end());
        return triplet(triplet_side::S, partition(std::move(pi)),
                       partition({6 * k - 11, 4, 4, 4}), g);
    }
    case 4: {
        // Trade the two leading 8s for an inserted 5 plus (4,4).
        std::vector<std::int64_t> pi(a.parts().begin() + 2, a.parts().end());
        const auto pos = std::upper_bound(pi.begin(), pi.end(), std::int64_t{5}, std::greater<>());
        pi.insert(pos, 5);
        return triplet(triplet_side::S, partition(std::move(pi)), partition({4, 4}), g);
    }
    case 5: {
        // Trade four 6s of the third component for (7,7,7).
        std::vector<std::int64_t> delta = g.parts();
        for (int r = 0; r < 4; ++r)
            delta.erase(std::find(delta.begin(), delta.end(), 6));
        return triplet(triplet_side::S, a, partition({7, 7, 7}), partition(std::move(delta)));
    }
    case 6: {
        // Trade two 9s of the third component for (7,4,4).
        std::vector<std::int64_t> delta = g.parts();
        for (int r = 0; r < 2; ++r)
            delta.erase(std::find(delta.begin(), delta.end(), 9));
        return triplet(triplet_side::S, a, partition({7, 4, 4}), partition(std::move(delta)));
    }
    default: throw std::invalid_argument("phi: unreachable");
    }
}

triplet phi_inv(int i, const triplet& s) {
    require_member(i, s, triplet_side::S, "phi_inv");
    const partition& p = s.first();
    const partition& m = s.second();
    const partition& d = s.third();
    switch (i) {
    case 1: {
        std::vector<std::int64_t> beta = m.parts();
        beta.back() += 3;
        return triplet(triplet_side::T, p, partition(std::move(beta)), d);
    }
    case 2: {
        std::vector<std::int64_t> alpha = p.parts();
        alpha[0] += 3;
        return triplet(triplet_side::T, partition(std::move(alpha)), partition(), d);
    }
    case 3: {
        const std::int64_t top = (m.part(1) + 15) / 2;
        std::vector<std::int64_t> alpha{top, top};
        alpha.insert(alpha.end(), p.parts().begin(), p.parts().end());
        return triplet(triplet_side::T, partition(std::move(alpha)), partition(), d);
    }
    case 4: {
        std::vector<std::int64_t> alpha = p.parts();
        alpha.erase(std::find(alpha.begin(), alpha.end(), 5));
        alpha.insert(alpha.begin(), {8, 8});
        return triplet(triplet_side::T, partition(std::move(alpha)), partition(), d);
    }
    case 5: {
        std::vector<std::int64_t> gamma = d.parts();
        gamma.insert(gamma.end(), {6, 6, 6, 6});
        return triplet(triplet_side::T, p, partition(), partition(std::move(gamma)));
    }
    case 6: {
        std::vector<std::int64_t> gamma = d.parts();
        gamma.insert(gamma.begin(), {9, 9});
        return triplet(triplet_side::T, p, partition(), partition(std::move(gamma)));
    }
    default: throw std::invalid_argument("phi_inv: unreachable");
    }
}

check_report verify_bijection_suite(int i, std::int64_t n) {
    if (i < 1 || i > 6)
        throw std::invalid_argument("verify_bijection_suite: i must be in 1..6");
    if (n < 3)
        throw std::invalid_argument("verify_bijection_suite: n must be >= 3");
    check_report rep;
    rep.campaign = "bijection-suite";
    rep.add_param("i", std::to_string(i));
    rep.add_param("n", std::to_string(n));
    rep.lo = rep.hi = n;

    std::vector<triplet> sources;
    for_each_triplet(n, triplet_side::T, [&](const triplet& t) {
        if (classify(t) == std::optional<int>(i))
            sources.push_back(t);
    });
    std::set<triplet> targets;
    for_each_triplet(n - 3, triplet_side::S, [&](const triplet& s) {
        if (classify(s) == std::optional<int>(i))
            targets.insert(s);
    });

    if (sources.size() != targets.size())
        rep.add_violation(n, std::to_string(sources.size()), std::to_string(targets.size()),
                          "cardinality mismatch");
    std::set<triplet> images;
    for (const triplet& t : sources) {
        const triplet image = phi(i, t);
        if (image.weight() != n - 3)
            rep.add_violation(n, image.to_string(), "", "image weight is not n-3");
        if (targets.find(image) == targets.end())
            rep.add_violation(n, image.to_string(), "", "image outside the target subset");
        if (!images.insert(image).second)
            rep.add_violation(n, image.to_string(), "", "map not injective");
        const triplet back = phi_inv(i, image);
        if (!(back == t))
            rep.add_violation(n, t.to_string(), back.to_string(), "round-trip mismatch");
    }
    rep.add_count("sources", std::to_string(sources.size()));
    rep.add_count("targets", std::to_string(targets.size()));
    constexpr std::size_t member_cap = 100;
    for (std::size_t j = 0; j < sources.size() && j < member_cap; ++j)
        rep.add_witness("member[" + std::to_string(j) + "]", sources[j].to_string());
    return rep;
}

std::int64_t t_ab_count(std::int64_t a, std::int64_t b, std::int64_t n) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("t_ab_count: a and b must be >= 1");
    if (std::gcd(a, b) != 1)
        throw not_coprime("t_ab_count: gcd(" + std::to_string(a) + "," + std::to_string(b) +
                          ") != 1");
    if (n < 0)
        return 0;
    std::int64_t count = 0;
    for (std::int64_t x = 0; x <= n / a; ++x)
        if ((n - a * x) % b == 0)
            ++count;
    return count;
}

t_ab_bounds_result t_ab_bounds(std::int64_t a, std::int64_t b, std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("t_ab_bounds: n must be >= 0");
    t_ab_bounds_result r;
    r.count = t_ab_count(a, b, n);
    const std::int64_t base = n / a + 1;
    r.lower = base / b;
    r.upper = (base + b - 1) / b;
    r.within = r.lower <= r.count && r.count <= r.upper;
    return r;
}

std::int64_t t_abc_count(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("t_abc_count: a, b, c must be >= 1");
    if (std::gcd(a, b) != 1)
        throw not_coprime("t_abc_count: gcd(" + std::to_string(a) + "," + std::to_string(b) +
                          ") != 1");
    if (n < 0)
        return 0;
    std::int64_t count = 0;
    for (std::int64_t z = 0; z <= n / c; ++z)
        count += t_ab_count(a, b, n - c * z);
    return count;
}

mpq_class t_abc_lower_bound(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n) {
    mpq_class quadratic(integer(n) * integer(n));
    quadratic /= integer(2 * a * b * c);
    mpq_class linear{integer(n)};
    linear /= integer(c);
    return quadratic - linear - 1;
}

std::int64_t t_restricted(std::int64_t m) {
    if (m < 0)
        return 0;
    std::int64_t count = 0;
    for (std::int64_t a = 0; a <= m / 5; ++a) {
        if (a == 1)
            continue;
        if ((m - 5 * a) % 2 == 0)
            ++count;
    }
    return count;
}

std::int64_t t7_count(std::int64_t n) {
    std::int64_t total = 0;
    for (std::int64_t i = 0; i <= 1; ++i)
        for (std::int64_t j = 0; j <= 3; ++j)
            total += t_restricted(n - 9 * i - 6 * j);
    return total;
}

std::int64_t s7_count(std::int64_t n) {
    return n >= 19 ? t_abc_count(2, 7, 4, n - 19) : 0;
}

namespace {

void sandwich_checks(check_report& rep, std::int64_t n) {
    const std::int64_t t7 = t7_count(n);
    const std::int64_t s7 = s7_count(n);
    mpq_class upper(integer(8) * integer(n + 2));
    upper /= 10;
    if (mpq_class(integer(t7)) > upper)
        rep.add_violation(n, std::to_string(t7), upper.get_str(), "upper estimate fails");
    if (n >= 19) {
        const mpq_class lower = t_abc_lower_bound(2, 7, 4, n - 19);
        if (mpq_class(integer(s7)) < lower)
            rep.add_violation(n, std::to_string(s7), lower.get_str(), "lower estimate fails");
    }
    if (n >= 152 && t7 > s7)
        rep.add_violation(n, std::to_string(t7), std::to_string(s7),
                          "headline inequality fails");
}

} // namespace

check_report t7_vs_s7(std::int64_t n) {
    if (n < 3)
        throw std::invalid_argument("t7_vs_s7: n must be >= 3");
    check_report rep;
    rep.campaign = "t7-s7";
    rep.add_param("n", std::to_string(n));
    rep.lo = rep.hi = n;
    sandwich_checks(rep, n);
    rep.add_count("t7", std::to_string(t7_count(n)));
    rep.add_count("s7", std::to_string(s7_count(n)));
    mpq_class upper(integer(8) * integer(n + 2));
    upper /= 10;
    rep.add_witness("upper_estimate", upper.get_str());
    rep.add_witness("lower_estimate", t_abc_lower_bound(2, 7, 4, n - 19).get_str());
    return rep;
}

check_report verify_t7_s7_range(std::int64_t lo, std::int64_t hi) {
    if (lo < 3 || hi < lo)
        throw std::invalid_argument("verify_t7_s7_range: need 3 <= lo <= hi");
    check_report rep;
    rep.campaign = "t7-s7";
    rep.add_param("lo", std::to_string(lo));
    rep.add_param("hi", std::to_string(hi));
    rep.lo = lo;
    rep.hi = hi;
    for (std::int64_t n = lo; n <= hi; ++n)
        sandwich_checks(rep, n);
    rep.add_count("t7_at_lo", std::to_string(t7_count(lo)));
    rep.add_count("s7_at_lo", std::to_string(s7_count(lo)));
    rep.add_count("t7_at_hi", std::to_string(t7_count(hi)));
    rep.add_count("s7_at_hi", std::to_string(s7_count(hi)));
    return rep;
}

} // namespace hookbias
