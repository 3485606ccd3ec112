#pragma once

// Command-line front end. Kept in a header so the whole surface can be
// driven in-process by tests; tools/main.cpp is a two-line wrapper.
//
// Exit codes: 0 success / all checks consistent, 1 mismatch or
// counterexample, 2 usage or input error.

#include "motzkin/bfile.hpp"
#include "motzkin/cores.hpp"
#include "motzkin/identities.hpp"
#include "motzkin/laurent.hpp"
#include "motzkin/triangles.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace motzkin::cli {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

inline std::vector<Integer> parse_coefficients(const std::string& csv) {
    std::vector<Integer> coeffs;
    std::string token;
    std::istringstream stream(csv);
    while (std::getline(stream, token, ',')) {
        if (!motzkin::detail::is_decimal_integer(token)) {
            throw std::invalid_argument("--coeffs: \"" + token + "\" is not an integer");
        }
        coeffs.emplace_back(token);
    }
    if (coeffs.empty()) {
        throw std::invalid_argument("--coeffs: expected a comma-separated integer list");
    }
    return coeffs;
}

namespace detail {

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [k, v] : r.values) values[k] = v;
    return nlohmann::json{
        {"identity", r.identity}, {"params", params}, {"values", values}, {"equal", r.equal}};
}

struct SweepTally {
    bool records = false;
    std::ostream* out = nullptr;
    long total = 0;
    long passed = 0;
    std::optional<VerificationReport> first_failure;

    void operator()(const VerificationReport& r) {
        ++total;
        if (r.equal) ++passed;
        else if (!first_failure) first_failure = r;
        if (records) *out << report_to_json(r).dump() << "\n";
    }

    int finish(std::ostream& plain_out) const {
        if (!records) {
            if (first_failure) {
                plain_out << "counterexample: " << first_failure->to_string() << "\n";
            }
            plain_out << passed << "/" << total << " pass\n";
        }
        return first_failure ? exit_mismatch : exit_ok;
    }
};

inline void emit_row(const std::string& kind, long n, const std::vector<Integer>& row,
                     bool records, std::ostream& out) {
    if (records) {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& v : row) values.push_back(v.get_str());
        out << nlohmann::json{{"kind", kind}, {"n", n}, {"row", values}}.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << " ";
            out << row[i].get_str();
        }
        out << "\n";
    }
}

}  // namespace detail

inline int run_triangle(const std::string& kind, long max_n, const std::string& coeffs_csv,
                        bool records, std::ostream& out) {
    LaurentPolynomial power(1);
    LaurentPolynomial base, post(1);
    long row_degree_step = 0, row_degree_extra = 0;
    bool use_polynomial = true;

    if (kind == "motzkin" || kind == "extended") {
        use_polynomial = false;
    } else if (kind == "trinomial") {
        base = LaurentPolynomial{{0, 1}, {1, 1}, {2, 1}};
        row_degree_step = 2;
    } else if (kind == "pascal") {
        base = LaurentPolynomial{{0, 1}, {1, 1}};
        row_degree_step = 1;
    } else if (kind == "catalan-variant") {
        base = LaurentPolynomial{{0, 1}, {1, 1}};
        post = LaurentPolynomial{{0, 1}, {1, -1}};
        row_degree_step = 1;
        row_degree_extra = 1;
    } else if (kind == "general") {
        if (coeffs_csv.empty()) {
            throw std::invalid_argument("--coeffs is required for --kind general");
        }
        const TriangleSpec spec(parse_coefficients(coeffs_csv));
        base = spec.polynomial();
        post = LaurentPolynomial{{0, 1}, {2, -1}};
        row_degree_step = spec.degree();
        row_degree_extra = 2;
    } else {
        throw std::invalid_argument("unknown triangle kind \"" + kind + "\"");
    }

    for (long n = 0; n <= max_n; ++n) {
        std::vector<Integer> row;
        if (kind == "motzkin") {
            row = motzkin_row(n);
        } else if (kind == "extended") {
            row.reserve(static_cast<std::size_t>(2 * n + 3));
            for (long k = 0; k <= 2 * n + 2; ++k) row.push_back(motzkin_extended(n, k));
        } else {
            const LaurentPolynomial poly = power * post;
            const long top = row_degree_step * n + row_degree_extra;
            row.reserve(static_cast<std::size_t>(top) + 1);
            for (long k = 0; k <= top; ++k) row.push_back(poly.coefficient(k));
        }
        detail::emit_row(kind, n, row, records, out);
        if (use_polynomial && n < max_n) power *= base;
    }
    return exit_ok;
}

inline int run_verify(const std::string& identity, long max_n, long max_s, long max_d,
                      long max_k, const std::string& coeffs_csv, bool records,
                      std::ostream& out) {
    detail::SweepTally tally;
    tally.records = records;
    tally.out = &out;

    if (identity == "theorem1") {
        if (max_n < 0) max_n = 200;
        for (long n = 0; n <= max_n; ++n) tally(check_theorem1(n));
    } else if (identity == "theorem2") {
        if (max_s < 0) max_s = 100;
        if (max_d < 0) max_d = 10;
        for (long s = 1; s <= max_s; ++s) {
            for (long d = 1; d <= max_d; ++d) tally(check_theorem2(s, d));
        }
    } else if (identity == "general") {
        if (coeffs_csv.empty()) {
            throw std::invalid_argument("--coeffs is required for \"verify general\"");
        }
        const TriangleSpec spec(parse_coefficients(coeffs_csv));
        if (max_n < 0) max_n = 30;
        for (long n = 0; n <= max_n; ++n) tally(check_general_identity(spec, n));
    } else if (identity == "pascal-analogy") {
        if (max_n < 0) max_n = 200;
        for (long n = 0; n <= max_n; ++n) tally(check_pascal_analogy(n));
    } else if (identity == "term-bridge") {
        if (max_k < 0) max_k = 500;
        if (max_d < 0) max_d = 20;
        for (long k = 0; k <= max_k; ++k) {
            for (long d = 1; d <= max_d; ++d) tally(check_term_bridge(k, d));
        }
    } else {
        throw std::invalid_argument("unknown identity \"" + identity + "\"");
    }
    return tally.finish(out);
}

inline int run_cores(long s, long d, bool by_size, bool records, std::ostream& out) {
    const CoreCount counts = count_simultaneous_cores_detailed(s, d);
    const Integer formula = conjecture_sum(s, d);
    const Integer triangle = require_divisible(motzkin_entry(s + d - 1, s), d, "cores");
    const bool consistent = counts.total == formula && formula == triangle;

    if (records) {
        VerificationReport r;
        r.identity = "conjecture";
        r.params = {{"s", std::to_string(s)}, {"d", std::to_string(d)}};
        r.values = {{"count", counts.total.get_str()},
                    {"formula", formula.get_str()},
                    {"triangle", triangle.get_str()}};
        r.equal = consistent;
        out << detail::report_to_json(r).dump() << "\n";
    } else {
        if (by_size) {
            for (const auto& [size, count] : counts.by_size) {
                out << "size " << size << ": " << count.get_str() << "\n";
            }
        }
        out << "count=" << counts.total.get_str() << " formula=" << formula.get_str()
            << " triangle=" << triangle.get_str() << " "
            << (consistent ? "consistent" : "INCONSISTENT") << "\n";
    }
    return consistent ? exit_ok : exit_mismatch;
}

namespace detail {

// index -> value mappings for the committed fixtures
inline Integer sequence_value(const std::string& selector, long index,
                              std::optional<std::pair<long, LaurentPolynomial>>& row_cache) {
    if (index < 0) {
        throw std::invalid_argument("sequence index must be nonnegative, got " +
                                    std::to_string(index));
    }
    if (selector == "problem-lhs") {
        return motzkin_adjacent_sum(index);
    }
    if (selector == "motzkin-row-concat") {
        long n = static_cast<long>((std::sqrt(8.0 * static_cast<double>(index) + 1.0) - 1.0) / 2.0);
        while ((n + 1) * (n + 2) / 2 <= index) ++n;
        while (n * (n + 1) / 2 > index) --n;
        return motzkin_entry(n, index - n * (n + 1) / 2);
    }
    if (selector == "trinomial-row-concat") {
        long n = static_cast<long>(std::sqrt(static_cast<double>(index)));
        while ((n + 1) * (n + 1) <= index) ++n;
        while (n * n > index) --n;
        if (!row_cache || row_cache->first != n) {
            row_cache = {n, pow(LaurentPolynomial{{0, 1}, {1, 1}, {2, 1}},
                                static_cast<unsigned long>(n))};
        }
        return row_cache->second.coefficient(index - n * n);
    }
    throw std::invalid_argument("unknown sequence \"" + selector + "\"");
}

inline std::string default_fixture_name(const std::string& selector) {
    if (selector == "problem-lhs") return "b026940.txt";
    if (selector == "motzkin-row-concat") return "b026300.txt";
    if (selector == "trinomial-row-concat") return "b027907.txt";
    throw std::invalid_argument("unknown sequence \"" + selector + "\"");
}

}  // namespace detail

inline int run_compare(const std::string& selector, const std::string& fixtures_dir,
                       const std::string& bfile_path, bool records, std::ostream& out) {
    std::filesystem::path path = bfile_path.empty()
        ? std::filesystem::path(fixtures_dir) / detail::default_fixture_name(selector)
        : std::filesystem::path(bfile_path);
    const BFile fixture = load_bfile(path);

    if (fixture.entries.empty()) {
        out << "warning: " << fixture.source_name << " has no entries; vacuous pass\n";
        return exit_ok;
    }

    std::optional<std::pair<long, LaurentPolynomial>> row_cache;
    for (const BFileEntry& entry : fixture.entries) {
        const Integer computed = detail::sequence_value(selector, entry.index, row_cache);
        const bool match = computed == entry.value;
        if (records) {
            VerificationReport r;
            r.identity = "compare-" + selector;
            r.params = {{"index", std::to_string(entry.index)},
                        {"source", fixture.source_name}};
            r.values = {{"fixture", entry.value.get_str()}, {"computed", computed.get_str()}};
            r.equal = match;
            out << detail::report_to_json(r).dump() << "\n";
        }
        if (!match) {
            if (!records) {
                out << "mismatch at index " << entry.index << ": fixture="
                    << entry.value.get_str() << " computed=" << computed.get_str() << "\n";
            }
            return exit_mismatch;
        }
    }
    if (!records) {
        out << "all " << fixture.entries.size() << " indices match (" << fixture.source_name
            << ")\n";
    }
    return exit_ok;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for the Motzkin triangle, palindromic triangle families,\n"
                 "and simultaneous core partitions"};
    app.name("motzkin");
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"plain", "records"});

    // triangle
    auto* tri = app.add_subcommand("triangle", "Print triangle rows 0..max-n");
    std::string tri_kind;
    long tri_max_n = 0;
    std::string tri_coeffs;
    std::string tri_format = "plain";
    tri->add_option("--kind", tri_kind, "Triangle family")
        ->required()
        ->check(CLI::IsMember({"motzkin", "extended", "trinomial", "pascal", "catalan-variant",
                               "general"}));
    tri->add_option("--max-n", tri_max_n, "Last row to print")
        ->required()
        ->check(CLI::NonNegativeNumber);
    tri->add_option("--coeffs", tri_coeffs, "Palindromic coefficients a_0,...,a_d (general kind)");
    tri->add_option("--format", tri_format, "Output format")->check(format_check);

    // verify
    auto* ver = app.add_subcommand("verify", "Run an identity check over a parameter sweep");
    std::string ver_identity;
    long ver_max_n = -1, ver_max_s = -1, ver_max_d = -1, ver_max_k = -1;
    std::string ver_coeffs;
    std::string ver_format = "plain";
    ver->add_option("identity", ver_identity, "Identity to verify")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "general", "pascal-analogy",
                               "term-bridge"}));
    ver->add_option("--max-n", ver_max_n, "Sweep n = 0..max-n")->check(CLI::NonNegativeNumber);
    ver->add_option("--max-s", ver_max_s, "Sweep s = 1..max-s")->check(CLI::PositiveNumber);
    ver->add_option("--max-d", ver_max_d, "Sweep d = 1..max-d")->check(CLI::PositiveNumber);
    ver->add_option("--max-k", ver_max_k, "Sweep k = 0..max-k")->check(CLI::NonNegativeNumber);
    ver->add_option("--coeffs", ver_coeffs, "Palindromic coefficients for \"general\"");
    ver->add_option("--format", ver_format, "Output format")->check(format_check);

    // cores
    auto* cor = app.add_subcommand("cores",
                                   "Count simultaneous (s, s+d, s+2d)-core partitions and "
                                   "compare against the closed forms");
    long cor_s = 0, cor_d = 0;
    bool cor_by_size = false;
    std::string cor_format = "plain";
    cor->add_option("--s", cor_s, "First modulus s")->required()->check(CLI::PositiveNumber);
    cor->add_option("--d", cor_d, "Common difference d")->required()->check(CLI::PositiveNumber);
    cor->add_flag("--by-size", cor_by_size, "Also print counts per partition size");
    cor->add_option("--format", cor_format, "Output format")->check(format_check);

    // compare
    auto* cmp = app.add_subcommand("compare", "Compare a computed sequence against a b-file");
    std::string cmp_selector;
    std::string cmp_fixtures = "fixtures";
    std::string cmp_bfile;
    std::string cmp_format = "plain";
    cmp->add_option("sequence", cmp_selector, "Sequence to compare")
        ->required()
        ->check(CLI::IsMember({"problem-lhs", "motzkin-row-concat", "trinomial-row-concat"}));
    cmp->add_option("--fixtures", cmp_fixtures, "Directory holding the b-file fixtures");
    cmp->add_option("--bfile", cmp_bfile, "Explicit b-file path (overrides --fixtures)");
    cmp->add_option("--format", cmp_format, "Output format")->check(format_check);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (tri->parsed()) {
            return run_triangle(tri_kind, tri_max_n, tri_coeffs, tri_format == "records", out);
        }
        if (ver->parsed()) {
            return run_verify(ver_identity, ver_max_n, ver_max_s, ver_max_d, ver_max_k,
                              ver_coeffs, ver_format == "records", out);
        }
        if (cor->parsed()) {
            return run_cores(cor_s, cor_d, cor_by_size, cor_format == "records", out);
        }
        if (cmp->parsed()) {
            return run_compare(cmp_selector, cmp_fixtures, cmp_bfile, cmp_format == "records",
                               out);
        }
        err << "error: no command given\n";
        return exit_usage;
    } catch (const arithmetic_fault& e) {
        err << "arithmetic fault: " << e.what() << "\n";
        return exit_mismatch;
    } catch (const bfile_error& e) {
        err << "input error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace motzkin::cli
