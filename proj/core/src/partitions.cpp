#include "hookbias/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookbias {

partition::partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition: parts must be non-increasing");
    }
}

partition partition::from_unsorted(std::vector<std::int64_t> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return partition(std::move(parts));
}

std::int64_t partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::int64_t partition::part(std::int64_t j) const {
    if (j < 1 || j > length())
        return 0;
    return parts_[static_cast<std::size_t>(j - 1)];
}

std::int64_t partition::multiplicity(std::int64_t v) const {
    return std::count(parts_.begin(), parts_.end(), v);
}

partition partition::conjugate() const {
    if (parts_.empty())
        return partition();
    std::vector<std::int64_t> conj(static_cast<std::size_t>(parts_[0]));
    for (std::int64_t p : parts_)
        for (std::int64_t j = 0; j < p; ++j)
            ++conj[static_cast<std::size_t>(j)];
    return partition(std::move(conj));
}

std::vector<std::int64_t> partition::hook_lengths() const {
    std::vector<std::int64_t> hooks;
    if (parts_.empty())
        return hooks;
    hooks.reserve(static_cast<std::size_t>(weight()));
    const partition conj = conjugate();
    const auto& cp = conj.parts();
    for (std::int64_t i = 1; i <= length(); ++i) {
        const std::int64_t row = parts_[static_cast<std::size_t>(i - 1)];
        for (std::int64_t j = 1; j <= row; ++j)
            hooks.push_back(row - j + cp[static_cast<std::size_t>(j - 1)] - i + 1);
    }
    return hooks;
}

std::map<std::int64_t, std::int64_t> partition::hook_histogram() const {
    std::map<std::int64_t, std::int64_t> h;
    for (std::int64_t v : hook_lengths())
        ++h[v];
    return h;
}

std::string partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

partition_class partition_class::all() {
    return partition_class{};
}

partition_class partition_class::t_regular(std::int64_t t) {
    if (t < 2)
        throw std::invalid_argument("t_regular: t must be >= 2");
    partition_class c;
    c.kind_ = kind::regular;
    c.t_ = t;
    return c;
}

partition_class partition_class::t_distinct(std::int64_t t) {
    if (t < 2)
        throw std::invalid_argument("t_distinct: t must be >= 2");
    partition_class c;
    c.kind_ = kind::distinct;
    c.t_ = t;
    c.cap_ = t - 1;
    return c;
}

partition_class partition_class::residue(std::int64_t r, std::int64_t mod, std::int64_t min_part) {
    if (mod < 1 || r < 0 || r >= mod || min_part < 1)
        throw std::invalid_argument("residue: need 0 <= r < mod, min_part >= 1");
    partition_class c;
    c.kind_ = kind::residue;
    c.r_ = r;
    c.mod_ = mod;
    c.min_ = min_part;
    return c;
}

partition_class partition_class::from_parts(std::vector<std::int64_t> allowed) {
    partition_class c;
    c.kind_ = kind::fixed;
    c.allowed_ = std::move(allowed);
    std::sort(c.allowed_.begin(), c.allowed_.end());
    return c;
}

bool partition_class::allows_value(std::int64_t v) const {
    switch (kind_) {
    case kind::all:
    case kind::distinct: return v >= 1;
    case kind::regular: return v >= 1 && v % t_ != 0;
    case kind::residue: return v >= min_ && v % mod_ == r_;
    case kind::fixed: return std::binary_search(allowed_.begin(), allowed_.end(), v);
    }
    return false;
}

bool partition_class::contains(const partition& p) const {
    for (std::int64_t v : p.parts())
        if (!allows_value(v))
            return false;
    if (cap_ > 0)
        for (std::size_t i = static_cast<std::size_t>(cap_); i < p.parts().size(); ++i)
            if (p.parts()[i] == p.parts()[i - static_cast<std::size_t>(cap_)])
                return false;
    return true;
}

namespace {

struct enumerator {
    const partition_class& cls;
    const std::function<void(const partition&)>& visit;
    std::vector<std::int64_t> cur;

    // Parts descend from max_part; run_len counts how often the last chosen
    // value repeats, enforcing the class multiplicity cap.
    void rec(std::int64_t remaining, std::int64_t max_part, std::int64_t run_len) {
        if (remaining == 0) {
            visit(partition(cur));
            return;
        }
        const std::int64_t cap = cls.multiplicity_cap();
        for (std::int64_t v = std::min(remaining, max_part); v >= 1; --v) {
            if (!cls.allows_value(v))
                continue;
            const bool same_run = !cur.empty() && cur.back() == v;
            if (cap > 0 && same_run && run_len >= cap)
                continue;
            cur.push_back(v);
            rec(remaining - v, v, same_run ? run_len + 1 : 1);
            cur.pop_back();
        }
    }
};

} // namespace

void for_each_partition(std::int64_t n, const partition_class& cls,
                        const std::function<void(const partition&)>& visit) {
    if (n < 0)
        throw std::invalid_argument("for_each_partition: n must be >= 0");
    enumerator e{cls, visit, {}};
    e.rec(n, n, 0);
}

integer count_partitions(std::int64_t n, const partition_class& cls) {
    integer count = 0;
    for_each_partition(n, cls, [&](const partition&) { ++count; });
    return count;
}

integer count_hooks_oracle(std::int64_t n, std::int64_t t, std::int64_t i, hook_kind kind) {
    if (t < 2 || i < 1)
        throw std::invalid_argument("count_hooks_oracle: need t >= 2, i >= 1");
    const partition_class cls =
        kind == hook_kind::regular ? partition_class::t_regular(t) : partition_class::t_distinct(t);
    integer total = 0;
    for_each_partition(n, cls, [&](const partition& p) {
        for (std::int64_t h : p.hook_lengths())
            if (h == i)
                ++total;
    });
    return total;
}

std::vector<integer> hook_profile(std::int64_t n, const partition_class& cls,
                                  std::int64_t max_len) {
    if (max_len < 1)
        throw std::invalid_argument("hook_profile: max_len must be >= 1");
    std::vector<integer> totals(static_cast<std::size_t>(max_len) + 1);
    for_each_partition(n, cls, [&](const partition& p) {
        for (std::int64_t h : p.hook_lengths())
            if (h <= max_len)
                ++totals[static_cast<std::size_t>(h)];
    });
    return totals;
}

} // namespace hookbias
