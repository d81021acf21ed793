#include "hookbias/check_report.hpp"

#include <sstream>

#include "json.hpp"

namespace hookbias {

std::string grade_name(check_grade g) {
    switch (g) {
    case check_grade::assertion: return "assertion";
    case check_grade::conjecture: return "conjecture";
    case check_grade::informational: return "informational";
    }
    return "unknown";
}

std::string check_report::status() const {
    if (grade == check_grade::informational)
        return "informational";
    return violations.empty() ? "pass" : "fail";
}

void check_report::add_param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
}

void check_report::add_violation(std::int64_t n, std::string lhs, std::string rhs,
                                 std::string detail) {
    violations.push_back({n, std::move(lhs), std::move(rhs), std::move(detail)});
}

void check_report::add_witness(std::string name, std::string value) {
    witnesses.push_back({std::move(name), std::move(value)});
}

void check_report::add_count(std::string name, std::string value) {
    counts.emplace_back(std::move(name), std::move(value));
}

std::string check_report::to_json(json_flavor flavor) const {
    nlohmann::ordered_json j;
    const bool bij = flavor == json_flavor::bijection_keys;
    j[bij ? "check-name" : "campaign"] = campaign;
    if (!bij) {
        nlohmann::ordered_json p = nlohmann::ordered_json::object();
        for (const auto& [k, v] : params)
            p[k] = v;
        j["params"] = p;
    }
    j[bij ? "n-range" : "range"] = {lo, hi};
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
        nlohmann::ordered_json o;
        o["n"] = v.n;
        if (!bij) {
            o["lhs"] = v.lhs;
            o["rhs"] = v.rhs;
        }
        o["detail"] = v.detail;
        vs.push_back(o);
    }
    j["violations"] = vs;
    if (!bij) {
        nlohmann::ordered_json ws = nlohmann::ordered_json::array();
        for (const auto& w : witnesses)
            ws.push_back({{"name", w.name}, {"value", w.value}});
        j["witnesses"] = ws;
    }
    nlohmann::ordered_json cs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : counts)
        cs[k] = v;
    if (bij) {
        // The compact flavor folds witnesses into the same object as counts.
        for (const auto& w : witnesses)
            cs[w.name] = w.value;
    }
    j[bij ? "witness-counts" : "counts"] = cs;
    j["status"] = status();
    j["grade"] = grade_name(grade);
    return j.dump();
}

std::string check_report::to_table() const {
    std::ostringstream out;
    out << "campaign: " << campaign << '\n';
    out << "params:";
    if (params.empty())
        out << " (none)";
    for (const auto& [k, v] : params)
        out << ' ' << k << '=' << v;
    out << '\n';
    out << "range: [" << lo << ", " << hi << "]\n";
    out << "grade: " << grade_name(grade) << '\n';
    out << "status: " << status() << '\n';
    out << "violations: " << violations.size() << '\n';
    for (const auto& v : violations) {
        out << "  n=" << v.n;
        if (!v.lhs.empty() || !v.rhs.empty())
            out << "  lhs=" << v.lhs << "  rhs=" << v.rhs;
        if (!v.detail.empty())
            out << "  " << v.detail;
        out << '\n';
    }
    for (const auto& w : witnesses)
        out << "witness " << w.name << " = " << w.value << '\n';
    for (const auto& [k, v] : counts)
        out << "count " << k << " = " << v << '\n';
    return out.str();
}

} // namespace hookbias
