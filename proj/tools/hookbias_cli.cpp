#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hookbias/analysis.hpp"
#include "hookbias/bijections.hpp"
#include "hookbias/coefficient_table.hpp"
#include "hookbias/errors.hpp"
#include "hookbias/hookgf.hpp"
#include "hookbias/series.hpp"

namespace {

using hookbias::check_grade;
using hookbias::check_report;
using hookbias::coefficient_table;
using hookbias::truncated_series;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

// Guard against truncation orders whose quadratic-time expansions would eat
// the machine; anything above this needs an explicit override.
constexpr std::int64_t trunc_guard = 50000;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string iso_timestamp() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os)
        throw hookbias::io_error("cannot open output file: " + out_path);
    os << text;
    os.flush();
    if (!os)
        throw hookbias::io_error("cannot write output file: " + out_path);
}

std::string canonical_series(const std::string& name) {
    static const std::map<std::string, std::string> names = {
        {"b_t1", "b_t1"},     {"bt1", "b_t1"},
        {"b_32", "b_32"},     {"b32", "b_32"},
        {"b_2i", "b_2i"},     {"b2i", "b_2i"},
        {"diff_32_31", "diff_32_31"}, {"diff3231", "diff_32_31"},
        {"diff_2k", "diff_2k"},       {"diff2k", "diff_2k"},
        {"t_series", "t_series"},     {"tseries", "t_series"},
        {"s_series", "s_series"},     {"sseries", "s_series"},
        {"q_count", "q_count"},       {"qcount", "q_count"},
        {"s_sum", "s_sum"},           {"ssum", "s_sum"},
    };
    const auto it = names.find(name);
    return it == names.end() ? std::string() : it->second;
}

struct compute_opts {
    std::string series;
    std::int64_t trunc = -1;
    std::int64_t t = -1;
    std::int64_t i = -1;
    std::int64_t k = -1;
    std::string format = "tsv";
    std::string out;
    bool no_timestamp = false;
    bool force = false;
};

void check_guard(std::int64_t trunc, bool force) {
    if (trunc > trunc_guard && !force)
        throw usage_error("truncation order " + std::to_string(trunc) +
                          " exceeds the guard threshold " + std::to_string(trunc_guard) +
                          "; rerun with --force to override");
}

using param_list = std::vector<std::pair<std::string, std::string>>;

// Validates the parameter set for the requested series, records the resolved
// parameters, and returns a closure that expands it.
std::function<truncated_series()> plan_series(const std::string& canon, const compute_opts& o,
                                              param_list& params) {
    params.emplace_back("series", canon);
    const auto need = [&](std::int64_t v, const char* flag, std::int64_t minimum) {
        if (v < minimum)
            throw usage_error("--series " + canon + " requires " + flag + " >= " +
                              std::to_string(minimum));
    };
    if (canon == "b_t1") {
        need(o.t, "--t", 2);
        params.emplace_back("t", std::to_string(o.t));
    } else if (canon == "b_2i") {
        need(o.i, "--i", 1);
        params.emplace_back("i", std::to_string(o.i));
    } else if (canon == "diff_2k") {
        need(o.k, "--k", 1);
        params.emplace_back("k", std::to_string(o.k));
    }
    params.emplace_back("N", std::to_string(o.trunc));

    const std::int64_t trunc = o.trunc;
    const std::int64_t t = o.t, i = o.i, k = o.k;
    if (canon == "b_t1")
        return [=] { return hookbias::gf_b_t1(t, trunc); };
    if (canon == "b_32")
        return [=] { return hookbias::gf_b_32(trunc); };
    if (canon == "b_2i")
        return [=] { return hookbias::gf_b_2i(i, trunc); };
    if (canon == "diff_32_31")
        return [=] { return hookbias::gf_diff_32_31(trunc); };
    if (canon == "diff_2k")
        return [=] { return hookbias::gf_diff_2k(k, trunc); };
    if (canon == "t_series")
        return [=] { return hookbias::gf_t_series(trunc); };
    if (canon == "s_series")
        return [=] { return hookbias::gf_s_series(trunc); };
    if (canon == "q_count")
        return [=] { return hookbias::q_count_series(trunc); };
    if (canon == "s_sum")
        return [=] { return hookbias::s_sum_series(trunc); };
    throw usage_error("unknown series: " + canon);
}

std::string bracketed_name(const std::string& canon, const param_list& params) {
    std::string name = canon;
    for (const auto& [key, value] : params)
        if (key != "series")
            name += "[" + key + "=" + value + "]";
    return name;
}

coefficient_table obtain_table(const std::string& name,
                               const std::function<truncated_series()>& expand) {
    namespace fs = std::filesystem;
    const char* dir = std::getenv("HOOKBIAS_CACHE_DIR");
    if (dir != nullptr && *dir != '\0') {
        const fs::path path = fs::path(dir) / (name + ".tsv");
        if (fs::exists(path))
            return coefficient_table::load(path.string());
        coefficient_table tab = coefficient_table::from_series(name, expand());
        fs::create_directories(path.parent_path());
        tab.save(path.string());
        return tab;
    }
    return coefficient_table::from_series(name, expand());
}

std::string render_table(const coefficient_table& tab, const param_list& params,
                         const std::string& format, bool no_timestamp) {
    if (format == "tsv")
        return tab.to_text();
    if (format == "json") {
        nlohmann::ordered_json j;
        j["series"] = tab.series;
        if (!params.empty()) {
            nlohmann::ordered_json pj = nlohmann::ordered_json::object();
            for (const auto& [key, value] : params)
                pj[key] = value;
            j["params"] = pj;
        }
        j["trunc"] = tab.trunc();
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const hookbias::integer& c : tab.coeffs)
            arr.push_back(c.get_str());
        j["coefficients"] = arr;
        if (!no_timestamp)
            j["generated"] = iso_timestamp();
        return j.dump(2) + "\n";
    }
    if (format == "table") {
        std::ostringstream os;
        os << "series: " << tab.series << "\n";
        if (!params.empty()) {
            os << "params:";
            for (const auto& [key, value] : params)
                os << " " << key << "=" << value;
            os << "\n";
        }
        if (!no_timestamp)
            os << "generated: " << iso_timestamp() << "\n";
        os << "n\tcoefficient\n";
        for (std::size_t n = 0; n < tab.coeffs.size(); ++n)
            os << n << "\t" << tab.coeffs[n].get_str() << "\n";
        return os.str();
    }
    throw usage_error("unknown format: " + format + " (expected tsv, json or table)");
}

std::string render_report(const check_report& rep, check_report::json_flavor flavor,
                          const std::string& format, bool no_timestamp) {
    if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(rep.to_json(flavor));
        if (!no_timestamp)
            j["generated"] = iso_timestamp();
        return j.dump(2) + "\n";
    }
    if (format == "table") {
        std::string text = rep.to_table();
        if (!no_timestamp)
            text += "generated: " + iso_timestamp() + "\n";
        return text;
    }
    throw usage_error("unknown format: " + format + " (expected table or json)");
}

int report_exit_code(const check_report& rep) {
    return rep.grade == check_grade::assertion && !rep.passed() ? exit_fail : exit_ok;
}

int run_compute(const compute_opts& o) {
    if (o.trunc < 0)
        throw usage_error("--N must be >= 0");
    check_guard(o.trunc, o.force);
    const std::string canon = canonical_series(o.series);
    if (canon.empty())
        throw usage_error("unknown series: " + o.series +
                          " (expected one of b_t1, b_32, b_2i, diff_32_31, diff_2k, t_series, "
                          "s_series, q_count, s_sum)");
    param_list params;
    const auto expand = plan_series(canon, o, params);
    const coefficient_table tab = obtain_table(bracketed_name(canon, params), expand);
    write_output(render_table(tab, params, o.format, o.no_timestamp), o.out);
    return exit_ok;
}

struct verify_opts {
    std::string campaign;
    std::optional<std::int64_t> trunc, t, k, i, n, lo, hi;
    std::string format = "table";
    std::string out;
    bool no_timestamp = false;
    bool force = false;
};

int run_verify(const verify_opts& o) {
    const auto guarded = [&](std::int64_t v) {
        check_guard(v, o.force);
        return v;
    };
    check_report rep;
    const std::string& c = o.campaign;
    if (c == "theorem1") {
        rep = hookbias::verify_theorem1(guarded(o.trunc.value_or(1000)));
    } else if (c == "factored-diff") {
        rep = hookbias::verify_factored_diff(guarded(o.trunc.value_or(300)));
    } else if (c == "even-k") {
        if (!o.k)
            throw usage_error("campaign even-k requires --k");
        rep = hookbias::verify_even_k(*o.k, guarded(o.trunc.value_or(2000)));
    } else if (c == "atbt") {
        rep = hookbias::verify_At_Bt_identity(o.t.value_or(1), guarded(o.trunc.value_or(200)));
    } else if (c == "b24-b25") {
        rep = hookbias::decompose_b24_b25(guarded(o.trunc.value_or(400)));
    } else if (c == "b26-b27") {
        rep = hookbias::decompose_b26_b27(guarded(o.trunc.value_or(400)));
    } else if (c == "t7-s7") {
        if (o.n)
            rep = hookbias::t7_vs_s7(*o.n);
        else
            rep = hookbias::verify_t7_s7_range(o.lo.value_or(152), guarded(o.hi.value_or(600)));
    } else if (c == "positivity") {
        rep = hookbias::verify_positivity_thresholds(guarded(o.trunc.value_or(500)));
    } else if (c == "s-ratio") {
        rep = hookbias::s_ratio_scan(guarded(o.trunc.value_or(600)), o.k.value_or(1));
    } else if (c == "q-asymptotic") {
        rep = hookbias::q_asymptotic_check(guarded(o.trunc.value_or(1000)));
    } else if (c == "negative-tail") {
        rep = hookbias::negative_tail_check(o.t.value_or(1), guarded(o.trunc.value_or(1000)));
    } else {
        throw usage_error("unknown campaign: " + c +
                          " (expected one of theorem1, factored-diff, even-k, atbt, b24-b25, "
                          "b26-b27, t7-s7, positivity, s-ratio, q-asymptotic, negative-tail)");
    }
    write_output(render_report(rep, check_report::json_flavor::campaign_keys, o.format,
                               o.no_timestamp),
                 o.out);
    return report_exit_code(rep);
}

struct search_opts {
    std::int64_t k = -1;
    std::int64_t trunc = 2000;
    std::string format = "table";
    std::string out;
    bool no_timestamp = false;
    bool force = false;
};

int run_search(const search_opts& o) {
    check_guard(o.trunc, o.force);
    const check_report rep = hookbias::find_counterexamples_odd(o.k, o.trunc);
    write_output(render_report(rep, check_report::json_flavor::campaign_keys, o.format,
                               o.no_timestamp),
                 o.out);
    return report_exit_code(rep);
}

struct bijection_opts {
    std::int64_t i = -1;
    std::int64_t n = -1;
    std::string format = "table";
    std::string out;
    bool no_timestamp = false;
};

int run_bijection_check(const bijection_opts& o) {
    const check_report rep = hookbias::verify_bijection_suite(static_cast<int>(o.i), o.n);
    write_output(render_report(rep, check_report::json_flavor::bijection_keys, o.format,
                               o.no_timestamp),
                 o.out);
    return report_exit_code(rep);
}

struct import_opts {
    std::string in;
    std::string out;
    std::string format = "tsv";
    bool no_timestamp = false;
};

int run_import(const import_opts& o) {
    const coefficient_table tab = coefficient_table::load(o.in);
    write_output(render_table(tab, {}, o.format, o.no_timestamp), o.out);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact hook-count bias toolkit for restricted partitions"};
    app.require_subcommand(1);

    compute_opts c;
    CLI::App* compute = app.add_subcommand("compute", "Expand a series to a truncation order");
    compute->add_option("--series", c.series, "Series name (b_t1, b_32, b_2i, diff_32_31, "
                                              "diff_2k, t_series, s_series, q_count, s_sum)")
        ->required();
    compute->add_option("--N", c.trunc, "Truncation order (inclusive)")->required();
    compute->add_option("--t", c.t, "Regularity parameter (b_t1)");
    compute->add_option("--i", c.i, "Hook length parameter (b_2i)");
    compute->add_option("--k", c.k, "Hook length parameter (diff_2k)");
    compute->add_option("--format", c.format, "Output format: tsv, json, table");
    compute->add_option("--out", c.out, "Write to a file instead of stdout");
    compute->add_flag("--no-timestamp", c.no_timestamp, "Omit the timestamp (json/table only)");
    compute->add_flag("--force", c.force, "Override the truncation guard");

    verify_opts v;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification campaign");
    verify->add_option("--campaign", v.campaign, "Campaign name (theorem1, factored-diff, "
                                                 "even-k, atbt, b24-b25, b26-b27, t7-s7, "
                                                 "positivity, s-ratio, q-asymptotic, "
                                                 "negative-tail)")
        ->required();
    verify->add_option("--N", v.trunc, "Truncation order");
    verify->add_option("--t", v.t, "Window/regularity parameter");
    verify->add_option("--k", v.k, "Hook length or shift parameter");
    verify->add_option("--i", v.i, "Subset index");
    verify->add_option("--n", v.n, "Single weight to check (t7-s7)");
    verify->add_option("--lo", v.lo, "Range start (t7-s7)");
    verify->add_option("--hi", v.hi, "Range end (t7-s7)");
    verify->add_option("--format", v.format, "Output format: table, json");
    verify->add_option("--out", v.out, "Write to a file instead of stdout");
    verify->add_flag("--no-timestamp", v.no_timestamp, "Omit the timestamp");
    verify->add_flag("--force", v.force, "Override the truncation guard");

    search_opts s;
    CLI::App* search = app.add_subcommand("search",
                                          "List bias reversals for an odd hook length");
    search->add_option("--k", s.k, "Odd hook length (>= 3)")->required();
    search->add_option("--N", s.trunc, "Scan bound (default 2000)");
    search->add_option("--format", s.format, "Output format: table, json");
    search->add_option("--out", s.out, "Write to a file instead of stdout");
    search->add_flag("--no-timestamp", s.no_timestamp, "Omit the timestamp");
    search->add_flag("--force", s.force, "Override the truncation guard");

    bijection_opts b;
    CLI::App* bijection = app.add_subcommand("bijection-check",
                                             "Exercise one weight-reducing subset map");
    bijection->add_option("--i", b.i, "Subset index (1..6)")->required();
    bijection->add_option("--n", b.n, "Source weight (>= 3)")->required();
    bijection->add_option("--format", b.format, "Output format: table, json");
    bijection->add_option("--out", b.out, "Write to a file instead of stdout");
    bijection->add_flag("--no-timestamp", b.no_timestamp, "Omit the timestamp");

    compute_opts e;
    CLI::App* exporter = app.add_subcommand("export", "Expand a series and save it as TSV");
    exporter->add_option("--series", e.series, "Series name")->required();
    exporter->add_option("--N", e.trunc, "Truncation order (inclusive)")->required();
    exporter->add_option("--t", e.t, "Regularity parameter (b_t1)");
    exporter->add_option("--i", e.i, "Hook length parameter (b_2i)");
    exporter->add_option("--k", e.k, "Hook length parameter (diff_2k)");
    exporter->add_option("--out", e.out, "Destination file")->required();
    exporter->add_flag("--force", e.force, "Override the truncation guard");

    import_opts im;
    CLI::App* importer = app.add_subcommand("import", "Read a TSV table back and re-emit it");
    importer->add_option("--in", im.in, "Source file")->required();
    importer->add_option("--out", im.out, "Write to a file instead of stdout");
    importer->add_option("--format", im.format, "Output format: tsv, json, table");
    importer->add_flag("--no-timestamp", im.no_timestamp, "Omit the timestamp (json/table)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return exit_usage;
    }

    try {
        if (app.got_subcommand(compute))
            return run_compute(c);
        if (app.got_subcommand(verify))
            return run_verify(v);
        if (app.got_subcommand(search))
            return run_search(s);
        if (app.got_subcommand(bijection))
            return run_bijection_check(b);
        if (app.got_subcommand(exporter)) {
            e.format = "tsv";
            return run_compute(e);
        }
        if (app.got_subcommand(importer))
            return run_import(im);
        std::cerr << "error: no subcommand given\n";
        return exit_usage;
    } catch (const usage_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_usage;
    } catch (const hookbias::io_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_io;
    } catch (const hookbias::corrupt_table& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_io;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_fail;
    }
}
