#include "hookbias/coefficient_table.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hookbias/errors.hpp"

namespace hookbias {

namespace {

// Canonical decimal integer: 0, or nonzero without leading zeros.
bool canonical_integer(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-')
        ++i;
    if (i >= s.size())
        return false;
    if (s[i] == '0')
        return s.size() == i + 1 && i == 0; // plain "0" only, no "-0"
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

// Splits off one newline-terminated line; a final chunk without '\n' is
// reported as truncated.
struct line_reader {
    const std::string& text;
    std::size_t pos = 0;
    long line_no = 0;

    bool done() const { return pos >= text.size(); }

    std::string next() {
        ++line_no;
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            pos = text.size();
            throw corrupt_table("unterminated line", line_no);
        }
        std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        return line;
    }
};

std::string header_value(line_reader& in, const std::string& key) {
    if (in.done())
        throw corrupt_table("missing header " + key, in.line_no + 1);
    const std::string line = in.next();
    if (line.rfind(key, 0) != 0)
        throw corrupt_table("expected header " + key, in.line_no);
    return line.substr(key.size());
}

} // namespace

coefficient_table coefficient_table::from_series(std::string name, const truncated_series& s) {
    coefficient_table t;
    t.series = std::move(name);
    t.coeffs.reserve(static_cast<std::size_t>(s.trunc()) + 1);
    for (std::int64_t n = 0; n <= s.trunc(); ++n)
        t.coeffs.push_back(s[n]);
    return t;
}

truncated_series coefficient_table::to_series() const {
    truncated_series s(trunc());
    for (std::int64_t n = 0; n <= trunc(); ++n)
        s.coeff(n) = coeffs[static_cast<std::size_t>(n)];
    return s;
}

std::string coefficient_table::to_text() const {
    std::ostringstream out;
    out << "#series=" << series << '\n';
    out << "#trunc=" << trunc() << '\n';
    out << "#version=1\n";
    for (std::int64_t n = 0; n <= trunc(); ++n)
        out << n << '\t' << coeffs[static_cast<std::size_t>(n)].get_str() << '\n';
    return out.str();
}

coefficient_table coefficient_table::parse(const std::string& text) {
    line_reader in{text};
    coefficient_table t;
    t.series = header_value(in, "#series=");
    if (t.series.empty())
        throw corrupt_table("empty series name", in.line_no);

    const std::string trunc_str = header_value(in, "#trunc=");
    if (!canonical_integer(trunc_str) || trunc_str[0] == '-')
        throw corrupt_table("bad trunc value", in.line_no);
    std::int64_t trunc = 0;
    const auto [p, ec] =
        std::from_chars(trunc_str.data(), trunc_str.data() + trunc_str.size(), trunc);
    if (ec != std::errc() || p != trunc_str.data() + trunc_str.size())
        throw corrupt_table("bad trunc value", in.line_no);

    const std::string version = header_value(in, "#version=");
    if (version != "1")
        throw corrupt_table("unsupported version " + version, in.line_no);

    t.coeffs.reserve(static_cast<std::size_t>(trunc) + 1);
    for (std::int64_t n = 0; n <= trunc; ++n) {
        if (in.done())
            throw corrupt_table("missing row " + std::to_string(n), in.line_no + 1);
        const std::string line = in.next();
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw corrupt_table("missing tab separator", in.line_no);
        const std::string idx = line.substr(0, tab);
        const std::string val = line.substr(tab + 1);
        if (idx != std::to_string(n))
            throw corrupt_table("expected row " + std::to_string(n), in.line_no);
        if (!canonical_integer(val))
            throw corrupt_table("non-canonical coefficient", in.line_no);
        t.coeffs.emplace_back(val);
    }
    if (!in.done())
        throw corrupt_table("trailing content after last row", in.line_no + 1);
    return t;
}

coefficient_table coefficient_table::load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    if (f.bad())
        throw io_error("read failure on " + path);
    return parse(buf.str());
}

void coefficient_table::save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw io_error("cannot open " + path + " for writing");
    f << to_text();
    f.flush();
    if (!f)
        throw io_error("write failure on " + path);
}

} // namespace hookbias
