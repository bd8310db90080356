// fracpart: reciprocally-weighted partition counting from the command line.
// Every subcommand is deterministic: identical argv gives byte-identical output.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracpart/asymptotics.hpp"
#include "fracpart/frac_dp.hpp"
#include "fracpart/partition.hpp"
#include "fracpart/power_series.hpp"

using namespace fracpart;
using ordered_json = nlohmann::ordered_json;

namespace {

struct OutputSpec {
    std::string format = "csv";  // csv | json | bfile
    int precision = 17;          // significant digits for floats
    std::string path;            // empty = stdout
};

std::string fmt_double(double v, int precision) {
    if (precision == 17) {
        // shortest round-trip representation
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, res.ptr);
    }
    std::ostringstream o;
    o.imbue(std::locale::classic());
    o << std::setprecision(precision) << v;
    return o.str();
}

struct Cell {
    std::string text;
    bool quote_in_json = false;

    Cell(std::uint64_t v) : text(std::to_string(v)) {}
    Cell(std::int64_t v) : text(std::to_string(v)) {}
    Cell(std::uint32_t v) : text(std::to_string(v)) {}
    Cell(const Rat& v) : text(v.get_str()), quote_in_json(true) {}
    Cell(double v, int precision) : text(fmt_double(v, precision)) {}
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

void write_table(const Table& t, const OutputSpec& spec) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    if (spec.format == "csv") {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out << (i ? "," : "") << t.columns[i];
        out << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << row[i].text;
            out << "\n";
        }
    } else if (spec.format == "json") {
        ordered_json doc;
        doc["rows"] = ordered_json::array();
        for (const auto& row : t.rows) {
            ordered_json obj;
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (row[i].quote_in_json)
                    obj[t.columns[i]] = row[i].text;
                else
                    obj[t.columns[i]] = ordered_json::parse(row[i].text);
            }
            doc["rows"].push_back(obj);
        }
        out << doc.dump(2) << "\n";
    } else {  // bfile: "index value" pairs from the first two columns
        for (const auto& row : t.rows)
            out << row[0].text << " " << row[1].text << "\n";
    }

    if (spec.path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(spec.path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + spec.path);
        f << out.str();
    }
}

void add_output_flags(CLI::App* cmd, OutputSpec& spec) {
    cmd->add_option("--format", spec.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "bfile"}))
        ->capture_default_str();
    cmd->add_option("--precision", spec.precision, "Significant digits for floats")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    cmd->add_option("--output", spec.path, "Write to file instead of stdout");
}

// Verification-style commands print one PASS/FAIL line per check and
// exit 1 on any failure.
struct Checker {
    bool ok = true;

    void check(bool cond, const std::string& name) {
        std::cout << (cond ? "PASS " : "FAIL ") << name << "\n";
        if (!cond) ok = false;
    }
    int exit_code() const { return ok ? 0 : 1; }
};

int run_bnk(std::uint32_t n_min, std::uint32_t n_max, std::uint32_t k_min,
            std::uint32_t k_max, const std::string& mode, std::uint32_t exact_cap,
            const OutputSpec& spec) {
    Table t;
    t.columns = {"n", "k", "value"};
    if (mode == "exact") {
        auto tri = bnk_exact(n_max, exact_cap);
        for (std::uint32_t n = n_min; n <= n_max; ++n)
            for (std::uint32_t k = k_min; k <= std::min(k_max, n); ++k)
                t.rows.push_back({n, k, tri.at(n, k)});
    } else {
        auto tri = bnk_float(n_max);
        for (std::uint32_t n = n_min; n <= n_max; ++n)
            for (std::uint32_t k = k_min; k <= std::min(k_max, n); ++k)
                t.rows.push_back({n, k, Cell(tri.at(n, k), spec.precision)});
    }
    write_table(t, spec);
    return 0;
}

int run_bseries(std::uint32_t N, const std::string& mode, std::uint32_t exact_cap,
                bool compensated, const OutputSpec& spec) {
    Table t;
    t.columns = {"n", "b"};
    if (mode == "exact") {
        auto s = b_series_exact(N, exact_cap);
        for (std::uint32_t n = 0; n <= N; ++n) t.rows.push_back({n, s.values[n]});
    } else {
        auto s = b_series_float(N, compensated);
        for (std::uint32_t n = 0; n <= N; ++n)
            t.rows.push_back({n, Cell(s.values[n], spec.precision)});
    }
    write_table(t, spec);
    return 0;
}

int run_ratio(std::uint32_t N, std::uint32_t window, const std::string& mode,
              std::uint32_t exact_cap, bool compensated, const OutputSpec& spec) {
    Table t;
    t.columns = {"n", "ratio"};
    if (mode == "exact") {
        auto r = ratio_series(b_series_exact(N, exact_cap));
        for (const auto& [n, v] : r)
            if (window == 0 || n > N - window) t.rows.push_back({n, v});
    } else {
        auto r = ratio_series(b_series_float(N, compensated));
        for (const auto& [n, v] : r)
            if (window == 0 || n > N - window) t.rows.push_back({n, Cell(v, spec.precision)});
    }
    write_table(t, spec);
    return 0;
}

int run_fit(std::uint32_t N, bool compensated, const OutputSpec& spec) {
    auto rep = estimate_C(N, compensated);
    Table t;
    t.columns = {"N", "raw_ratio", "c0", "c1", "raw_gap", "ansatz_gap"};
    t.rows.push_back({rep.N, Cell(rep.raw_ratio, spec.precision), Cell(rep.c0, spec.precision),
                      Cell(rep.c1, spec.precision), Cell(rep.raw_gap, spec.precision),
                      Cell(rep.ansatz_gap, spec.precision)});
    write_table(t, spec);
    return 0;
}

int run_fx(std::uint32_t n, std::uint32_t res_inv, bool integrate, const OutputSpec& spec) {
    auto s = sample_f(n, res_inv);
    Table t;
    t.columns = {"x", "f"};
    for (auto [x, v] : s.grid)
        t.rows.push_back({Cell(x, spec.precision), Cell(v, spec.precision)});
    write_table(t, spec);
    if (integrate) {
        std::cout << "integral " << fmt_double(integrate_f(s), spec.precision) << "\n";
    }
    return 0;
}

int run_series_verify(std::uint32_t N, std::uint32_t cols, std::uint32_t exact_cap) {
    Checker c;

    auto euler = euler_product_b(N);
    auto bn = b_series_exact(N, exact_cap);
    bool euler_ok = true;
    for (std::uint32_t n = 0; n <= N; ++n)
        if (euler[n] != bn.values[n]) euler_ok = false;
    c.check(euler_ok, "euler-product coefficients match the DP row sums, n <= " + std::to_string(N));

    auto tri = bnk_exact(N, exact_cap);
    bool col_ok = true;
    std::uint32_t kmax = std::min(cols, N);
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        auto g = gf_bnk(N, k);
        for (std::uint32_t n = 1; n <= N; ++n)
            if (g[n] != (k <= n ? tri.at(n, k) : Rat(0))) col_ok = false;
    }
    c.check(col_ok, "column generating functions match the DP columns, k <= " + std::to_string(kmax));

    auto cs = twisted_coeffs(N);
    bool diff_ok = true;
    for (std::uint32_t n = 0; n <= N; ++n) {
        Rat expect = bn.values[n];
        if (n >= 1) expect -= 2 * bn.values[n - 1];
        if (n >= 2) expect += bn.values[n - 2];
        if (cs[n] != expect) diff_ok = false;
    }
    c.check(diff_ok, "twisted coefficients equal the second difference of b");

    auto tails = twisted_partial_sums(N);
    bool tel_ok = true, bound_ok = true;
    for (const auto& tail : tails) {
        if (tail.partial_sum != tail.telescoped) tel_ok = false;
        if (to_double(tail.abs_partial_sum) > 4.1488) bound_ok = false;
    }
    c.check(tel_ok, "twisted partial sums telescope to b(m) - b(m-1)");
    c.check(bound_ok, "absolute partial sums stay under 4.1488");

    return c.exit_code();
}

int run_identities(const std::string& scheme, std::uint32_t to, std::uint32_t order) {
    Checker c;
    if (scheme == "cycle" || scheme == "all") {
        bool enum_ok = true;
        for (std::uint32_t n = 1; n <= to; ++n)
            if (brute_force_sum(n, WeightScheme::CycleIndex) != 1) enum_ok = false;
        c.check(enum_ok, "c(n)=1 for n <= " + std::to_string(to) + " (enumeration)");

        auto s = cycle_identity_series(order);
        bool series_ok = true;
        for (std::uint32_t n = 0; n <= order; ++n)
            if (s[n] != 1) series_ok = false;
        c.check(series_ok, "c(n)=1 for n <= " + std::to_string(order) + " (series)");
    }
    if (scheme == "bell" || scheme == "all") {
        std::uint32_t bto = std::min<std::uint32_t>(to, 25);
        auto bell = bell_triangle(std::max(bto, order));
        Int fac = 1;
        bool enum_ok = true;
        for (std::uint32_t n = 1; n <= bto; ++n) {
            fac *= n;
            if (brute_force_sum(n, WeightScheme::FactorialCycle) * fac != bell[n]) enum_ok = false;
        }
        c.check(enum_ok, "n! d(n) = Bell(n) for n <= " + std::to_string(bto) + " (enumeration)");

        auto s = bell_series(order);
        Int f2 = 1;
        bool series_ok = true;
        for (std::uint32_t n = 1; n <= order; ++n) {
            f2 *= n;
            if (s[n] * f2 != bell[n]) series_ok = false;
        }
        c.check(series_ok, "n! d(n) = Bell(n) for n <= " + std::to_string(order) + " (series)");
    }
    return c.exit_code();
}

int run_oracle(std::uint32_t to, std::uint32_t cap) {
    Checker c;
    bool sums_ok = brute_force_sum(0, WeightScheme::ReciprocalProduct, cap) == 1;
    if (to >= 1) {
        auto tri = bnk_exact(to);
        auto euler = euler_product_b(to);
        for (std::uint32_t n = 1; n <= to; ++n) {
            Rat bf = brute_force_sum(n, WeightScheme::ReciprocalProduct, cap);
            if (tri.row_sum(n) != bf || euler[n] != bf) sums_ok = false;
        }
    }
    c.check(sums_ok, "enumeration = DP = euler product for n <= " + std::to_string(to));
    return c.exit_code();
}

int run_mertens(std::uint32_t N, const OutputSpec& spec) {
    auto m = mertens(N);
    Table t;
    t.columns = {"n", "M"};
    for (std::uint32_t n = 1; n <= N; ++n)
        t.rows.push_back({n, Cell(std::int64_t{m[n - 1]})});
    write_table(t, spec);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reciprocally-weighted partition counting: exact and float b(n,k) tables,\n"
                 "generating-function cross-checks, limit-shape samples, and constant estimation."};
    app.require_subcommand(1);

    // bnk
    auto* bnk = app.add_subcommand("bnk", "Table of b(n,k) values");
    std::uint32_t bnk_n = 0, bnk_nmin = 0, bnk_kmin = 1, bnk_kmax = 0;
    std::string bnk_mode = "exact";
    std::uint32_t exact_cap = kDefaultExactCap;
    OutputSpec bnk_spec;
    bnk->add_option("--n", bnk_n, "Largest n (single row unless --n-min is given)")->required();
    bnk->add_option("--n-min", bnk_nmin, "Smallest n (default: --n)");
    bnk->add_option("--k-min", bnk_kmin, "Smallest k")->capture_default_str();
    bnk->add_option("--k-max", bnk_kmax, "Largest k (default: n)");
    bnk->add_option("--mode", bnk_mode, "exact | float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
    bnk->add_option("--exact-cap", exact_cap, "Exact-mode size cap")->capture_default_str();
    add_output_flags(bnk, bnk_spec);

    // bseries
    auto* bs = app.add_subcommand("bseries", "b(0..N)");
    std::uint32_t bs_N = 0;
    std::string bs_mode = "exact";
    bool compensated = false;
    OutputSpec bs_spec;
    bs->add_option("--to", bs_N, "Largest n")->required();
    bs->add_option("--mode", bs_mode, "exact | float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
    bs->add_option("--exact-cap", exact_cap, "Exact-mode size cap")->capture_default_str();
    bs->add_flag("--compensated", compensated, "Kahan accumulation in float mode");
    add_output_flags(bs, bs_spec);

    // ratio
    auto* ratio = app.add_subcommand("ratio", "b(n)/n for n = 1..N");
    std::uint32_t ratio_N = 0, ratio_window = 0;
    std::string ratio_mode = "float";
    OutputSpec ratio_spec;
    ratio->add_option("--to", ratio_N, "Largest n")->required();
    ratio->add_option("--window", ratio_window, "Print only the last W rows");
    ratio->add_option("--mode", ratio_mode, "exact | float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
    ratio->add_option("--exact-cap", exact_cap, "Exact-mode size cap")->capture_default_str();
    ratio->add_flag("--compensated", compensated, "Kahan accumulation in float mode");
    add_output_flags(ratio, ratio_spec);

    // fit
    auto* fit = app.add_subcommand("fit", "Two-point c0 + c1/n fit at (N-1, N) plus gaps to e^-gamma");
    std::uint32_t fit_N = 15000;
    OutputSpec fit_spec;
    fit->add_option("--to", fit_N, "N for the fit")->capture_default_str();
    fit->add_flag("--compensated", compensated, "Kahan accumulation");
    add_output_flags(fit, fit_spec);

    // fx
    auto* fx = app.add_subcommand("fx", "Limit-shape sample x -> b(n, floor(nx))");
    std::uint32_t fx_n = 2000, fx_res = 100;
    bool fx_integrate = false;
    OutputSpec fx_spec;
    fx->add_option("--n", fx_n, "Finite-size proxy n")->capture_default_str();
    fx->add_option("--res-inv", fx_res, "Grid resolution 1/h")->capture_default_str();
    fx->add_flag("--integrate", fx_integrate, "Also print the trapezoid integral");
    add_output_flags(fx, fx_spec);

    // series-verify
    auto* sv = app.add_subcommand("series-verify", "Cross-check generating functions against the DP");
    std::uint32_t sv_N = 200, sv_cols = 100;
    sv->add_option("--to", sv_N, "Truncation order")->capture_default_str();
    sv->add_option("--cols", sv_cols, "Columns checked against gf_bnk")->capture_default_str();
    sv->add_option("--exact-cap", exact_cap, "Exact-mode size cap")->capture_default_str();

    // identities
    auto* ids = app.add_subcommand("identities", "Cycle-index and Bell-number identities");
    std::string ids_scheme = "all";
    std::uint32_t ids_to = 40, ids_order = 100;
    ids->add_option("--scheme", ids_scheme, "cycle | bell | all")->check(CLI::IsMember({"cycle", "bell", "all"}))->capture_default_str();
    ids->add_option("--to", ids_to, "Enumeration limit")->capture_default_str();
    ids->add_option("--order", ids_order, "Series truncation order")->capture_default_str();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration vs DP vs euler product");
    std::uint32_t oracle_to = 30, enum_cap = kDefaultEnumerationCap;
    oracle->add_option("--to", oracle_to, "Largest n")->capture_default_str();
    oracle->add_option("--enum-cap", enum_cap, "Enumeration budget")->capture_default_str();

    // mertens
    auto* mer = app.add_subcommand("mertens", "Mertens function M(1..N)");
    std::uint32_t mer_N = 0;
    OutputSpec mer_spec;
    mer->add_option("--to", mer_N, "Largest n")->required();
    add_output_flags(mer, mer_spec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (bnk->parsed()) {
            std::uint32_t nmin = bnk->count("--n-min") ? bnk_nmin : bnk_n;
            std::uint32_t kmax = bnk->count("--k-max") ? bnk_kmax : bnk_n;
            if (nmin < 1 || nmin > bnk_n || bnk_kmin < 1) {
                std::cerr << "fracpart bnk: invalid n/k range\n";
                return 2;
            }
            return run_bnk(nmin, bnk_n, bnk_kmin, kmax, bnk_mode, exact_cap, bnk_spec);
        }
        if (bs->parsed()) return run_bseries(bs_N, bs_mode, exact_cap, compensated, bs_spec);
        if (ratio->parsed()) return run_ratio(ratio_N, ratio_window, ratio_mode, exact_cap, compensated, ratio_spec);
        if (fit->parsed()) return run_fit(fit_N, compensated, fit_spec);
        if (fx->parsed()) return run_fx(fx_n, fx_res, fx_integrate, fx_spec);
        if (sv->parsed()) return run_series_verify(sv_N, sv_cols, exact_cap);
        if (ids->parsed()) return run_identities(ids_scheme, ids_to, ids_order);
        if (oracle->parsed()) return run_oracle(oracle_to, enum_cap);
        if (mer->parsed()) return run_mertens(mer_N, mer_spec);
    } catch (const BudgetError& e) {
        std::cerr << "fracpart: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fracpart: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fracpart: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
