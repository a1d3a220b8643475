// Command-line surface: every computation of the library plus the
// verification suite.
//
// Exit codes: 0 success / all checks passed, 1 verification failures found,
// 2 invalid input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "residue_spectra/char_sums.hpp"
#include "residue_spectra/eta_series.hpp"
#include "residue_spectra/harness.hpp"
#include "residue_spectra/primes.hpp"
#include "residue_spectra/representations.hpp"
#include "residue_spectra/residue_counts.hpp"

namespace rs = residue_spectra;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitInvalid = 2;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<rs::i64> parse_int_list(const std::string& text) {
    std::vector<rs::i64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InvalidInput("empty entry in list '" + text + "'");
        std::size_t used = 0;
        out.push_back(std::stoll(item, &used));
        if (used != item.size()) throw InvalidInput("bad integer '" + item + "'");
    }
    if (out.empty()) throw InvalidInput("empty list");
    return out;
}

rs::PrimeField field_for(rs::u64 p) {
    if (p <= 3 || !rs::is_prime(p)) {
        throw InvalidInput("p must be a prime greater than 3");
    }
    return rs::PrimeField(p);
}

unsigned threads_from_env() {
    if (const char* env = std::getenv("RESIDUE_SPECTRA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0) return static_cast<unsigned>(v);
    }
    return 0; // auto
}

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& name) {
    if (name == "table") return Format::Table;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw InvalidInput("unknown format '" + name + "'");
}

void print_kv_table(const std::vector<std::pair<std::string, std::string>>& rows) {
    for (const auto& [key, value] : rows) std::cout << key << ": " << value << "\n";
}

void print_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
    bool first = true;
    for (const auto& [key, value] : rows) {
        std::cout << (first ? "" : ",") << key;
        first = false;
    }
    std::cout << "\r\n";
    first = true;
    for (const auto& [key, value] : rows) {
        std::cout << (first ? "" : ",") << value;
        first = false;
    }
    std::cout << "\r\n";
}

// ---- subcommand payloads -------------------------------------------------

int cmd_vcount(rs::u64 p, const std::string& poly_text, rs::i64 laurent_c, bool profile,
               Format format) {
    const auto fld = field_for(p);
    const auto coeffs = parse_int_list(poly_text);
    const auto f = rs::LaurentPoly::make(coeffs, laurent_c, fld);
    const rs::u64 count = rs::residue_count(f, fld);

    ordered_json doc;
    doc["p"] = p;
    doc["poly"] = coeffs;
    doc["laurent"] = laurent_c;
    doc["count"] = count;
    std::map<rs::u64, rs::u64> fibers;
    if (profile) {
        fibers = rs::residue_profile(f, fld);
        ordered_json prof = ordered_json::object();
        for (const auto& [value, multiplicity] : fibers) {
            prof[std::to_string(value)] = multiplicity;
        }
        doc["profile"] = prof;
    }

    switch (format) {
        case Format::Json:
            std::cout << doc.dump(2) << "\n";
            break;
        case Format::Csv:
            print_csv({{"p", std::to_string(p)}, {"count", std::to_string(count)}});
            if (profile) {
                std::cout << "residue,multiplicity\r\n";
                for (const auto& [value, multiplicity] : fibers) {
                    std::cout << value << "," << multiplicity << "\r\n";
                }
            }
            break;
        case Format::Table:
            print_kv_table({{"p", std::to_string(p)}, {"count", std::to_string(count)}});
            if (profile) {
                for (const auto& [value, multiplicity] : fibers) {
                    std::cout << "  " << value << " <- " << multiplicity << " preimages\n";
                }
            }
            break;
    }
    return kExitOk;
}

int cmd_curve(rs::u64 p, rs::i64 m, rs::i64 n, Format format) {
    const auto fld = field_for(p);
    const auto cc = rs::curve_point_count(fld.reduce(m), fld.reduce(n), fld);
    switch (format) {
        case Format::Json: {
            ordered_json doc;
            doc["p"] = p;
            doc["m"] = m;
            doc["n"] = n;
            doc["count"] = cc.count;
            doc["singular"] = cc.singular;
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            print_csv({{"p", std::to_string(p)},
                       {"count", std::to_string(cc.count)},
                       {"singular", cc.singular ? "true" : "false"}});
            break;
        case Format::Table:
            print_kv_table({{"p", std::to_string(p)},
                            {"count", std::to_string(cc.count)},
                            {"singular", cc.singular ? "true" : "false"}});
            break;
    }
    return kExitOk;
}

int cmd_eta(int level, rs::u64 nmax, std::optional<rs::u64> at, Format format) {
    if (level != 14 && level != 15 && level != 20 && level != 24) {
        throw InvalidInput("level must be one of 14, 15, 20, 24");
    }
    if (at) {
        if (*at < 1) throw InvalidInput("--at must be at least 1");
        const auto series = rs::eta_product(rs::EtaSpec::level(level), *at);
        const rs::i64 value = series.at(*at);
        switch (format) {
            case Format::Json: {
                ordered_json doc;
                doc["level"] = level;
                doc["n"] = *at;
                doc["a"] = value;
                std::cout << doc.dump(2) << "\n";
                break;
            }
            case Format::Csv:
                print_csv({{"n", std::to_string(*at)}, {"a", std::to_string(value)}});
                break;
            case Format::Table:
                std::cout << "a_" << level << "(" << *at << ") = " << value << "\n";
                break;
        }
        return kExitOk;
    }
    if (nmax < 1) throw InvalidInput("--nmax must be at least 1");
    const auto series = rs::eta_product(rs::EtaSpec::level(level), nmax);
    switch (format) {
        case Format::Json: {
            ordered_json doc;
            doc["level"] = level;
            ordered_json rows = ordered_json::array();
            for (rs::u64 n = 1; n <= nmax; ++n) rows.push_back({n, series.coeffs[n]});
            doc["coefficients"] = rows;
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "n,a\r\n";
            for (rs::u64 n = 1; n <= nmax; ++n) {
                std::cout << n << "," << series.coeffs[n] << "\r\n";
            }
            break;
        case Format::Table:
            for (rs::u64 n = 1; n <= nmax; ++n) {
                std::cout << "a_" << level << "(" << n << ") = " << series.coeffs[n] << "\n";
            }
            break;
    }
    return kExitOk;
}

int cmd_decompose(rs::u64 p, Format format) {
    const auto fld = field_for(p);
    if (p % 3 != 1) throw InvalidInput("decompose requires p = 1 (mod 3)");
    const auto d = rs::decompose(fld);
    const auto verdicts = rs::jacobi_check(fld, d);
    switch (format) {
        case Format::Json: {
            ordered_json doc;
            doc["p"] = p;
            doc["A"] = d.A;
            doc["B"] = d.B;
            doc["L"] = d.L;
            doc["M"] = d.M;
            doc["jacobi_A"] = verdicts.first;
            doc["jacobi_L"] = verdicts.second;
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            print_csv({{"p", std::to_string(p)},
                       {"A", std::to_string(d.A)},
                       {"B", std::to_string(d.B)},
                       {"L", std::to_string(d.L)},
                       {"M", std::to_string(d.M)},
                       {"jacobi_A", verdicts.first ? "true" : "false"},
                       {"jacobi_L", verdicts.second ? "true" : "false"}});
            break;
        case Format::Table: {
            auto signed_base = [](rs::i64 v) {
                return v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v);
            };
            std::cout << p << " = " << signed_base(d.A) << "^2 + 3*" << d.B << "^2, 4*" << p
                      << " = " << signed_base(d.L) << "^2 + 27*" << d.M << "^2\n";
            std::cout << "jacobi congruence for A: " << (verdicts.first ? "holds" : "FAILS")
                      << "\n";
            std::cout << "jacobi congruence for L: " << (verdicts.second ? "holds" : "FAILS")
                      << "\n";
            break;
        }
    }
    return kExitOk;
}

int cmd_forms(const std::string& coeff_text, rs::i64 n, bool triangular, Format format) {
    const auto coeffs = parse_int_list(coeff_text);
    if (coeffs.size() != 4) throw InvalidInput("--coeffs needs exactly four entries");
    for (rs::i64 c : coeffs) {
        if (c < 1) throw InvalidInput("form coefficients must be positive");
    }
    if (n < 0 || (!triangular && n < 1)) {
        throw InvalidInput(triangular ? "n must be nonnegative" : "n must be positive");
    }
    const rs::i64 count =
        triangular ? rs::triangular_count(coeffs[0], coeffs[1], coeffs[2], coeffs[3], n)
                   : rs::quaternary_count(coeffs[0], coeffs[1], coeffs[2], coeffs[3], n);
    switch (format) {
        case Format::Json: {
            ordered_json doc;
            doc["coeffs"] = coeffs;
            doc["n"] = n;
            doc["kind"] = triangular ? "triangular" : "quaternary";
            doc["count"] = count;
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            print_csv({{"n", std::to_string(n)}, {"count", std::to_string(count)}});
            break;
        case Format::Table:
            std::cout << (triangular ? "T" : "N") << "(" << coeffs[0] << "," << coeffs[1] << ","
                      << coeffs[2] << "," << coeffs[3] << ";" << n << ") = " << count << "\n";
            break;
    }
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& statement_names, rs::u64 pmin, rs::u64 pmax,
               rs::i64 param_max, const std::string& b_text, const std::string& c_text,
               unsigned threads, bool fail_fast, Format format) {
    rs::SuiteOptions options;
    if (pmin < 5) throw InvalidInput("--pmin must be at least 5");
    if (pmax < pmin) throw InvalidInput("--pmax must be at least --pmin");
    options.p_min = pmin;
    options.p_max = pmax;
    options.threads = threads;
    options.fail_fast = fail_fast;

    if (!statement_names.empty()) {
        options.statements.clear();
        for (const auto& name : statement_names) {
            if (name == "all") {
                options.statements.assign(rs::kAllStatements.begin(), rs::kAllStatements.end());
                continue;
            }
            const auto st = rs::statement_from_name(name);
            if (!st) throw InvalidInput("unknown statement '" + name + "'");
            if (std::find(options.statements.begin(), options.statements.end(), *st) ==
                options.statements.end()) {
                options.statements.push_back(*st);
            }
        }
    }
    if (param_max < 1) throw InvalidInput("--param-max must be at least 1");
    options.grid.param_max = param_max;
    if (!b_text.empty()) options.grid.b_values = parse_int_list(b_text);
    if (!c_text.empty()) options.grid.c_values = parse_int_list(c_text);

    const auto report = rs::run_suite(options);
    switch (format) {
        case Format::Json:
            std::cout << report.to_json() << "\n";
            break;
        case Format::Csv:
            std::cout << report.to_csv();
            break;
        case Format::Table:
            std::cout << report.to_table();
            break;
    }
    return report.total_failures() == 0 ? kExitOk : kExitFailures;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"residue-spectra: residue counts V_p, elliptic-curve point counts, "
                 "eta-product coefficients, quadratic-form representation numbers, and an "
                 "exhaustive verification harness for the closed forms connecting them"};
    app.require_subcommand(1);
    std::string format_name = "table";
    app.add_option("--format", format_name, "output format: table, json or csv")
        ->capture_default_str();

    // vcount
    auto* vcount = app.add_subcommand("vcount", "residue count V_p of a (Laurent) polynomial");
    rs::u64 vc_p = 0;
    std::string vc_poly;
    rs::i64 vc_laurent = 0;
    bool vc_profile = false;
    vcount->add_option("--p", vc_p, "odd prime > 3")->required();
    vcount->add_option("--poly", vc_poly, "comma-separated coefficients, lowest degree first")
        ->required();
    vcount->add_option("--laurent", vc_laurent, "coefficient c of the c/x term (default 0)");
    vcount->add_flag("--profile", vc_profile, "also print the residue profile");

    // curve
    auto* curve = app.add_subcommand("curve", "point count of y^2 = x^3 + mx + n over F_p");
    rs::u64 cv_p = 0;
    rs::i64 cv_m = 0, cv_n = 0;
    curve->add_option("--p", cv_p, "odd prime > 3")->required();
    curve->add_option("--m", cv_m, "coefficient m")->required();
    curve->add_option("--n", cv_n, "coefficient n")->required();

    // eta
    auto* eta = app.add_subcommand("eta", "eta-product coefficients a_N(n)");
    int eta_level = 14;
    rs::u64 eta_nmax = 50;
    rs::u64 eta_at_value = 0;
    eta->add_option("--level", eta_level, "level N in {14, 15, 20, 24}")->required();
    eta->add_option("--nmax", eta_nmax, "dump a_N(1..nmax)")->capture_default_str();
    auto* eta_at_opt = eta->add_option("--at", eta_at_value, "print only a_N(at)");

    // decompose
    auto* dec = app.add_subcommand("decompose", "p = A^2 + 3B^2, 4p = L^2 + 27M^2 for p = 1 (mod 3)");
    rs::u64 dec_p = 0;
    dec->add_option("--p", dec_p, "prime = 1 (mod 3)")->required();

    // forms
    auto* forms = app.add_subcommand("forms", "quaternary / triangular representation counts");
    std::string forms_coeffs;
    rs::i64 forms_n = 0;
    bool forms_triangular = false;
    forms->add_option("--coeffs", forms_coeffs, "a,b,c,d")->required();
    forms->add_option("--n", forms_n, "the represented integer")->required();
    forms->add_flag("--triangular", forms_triangular, "count T(a,b,c,d;n) instead of N");

    // verify
    auto* verify = app.add_subcommand("verify", "run the theorem harness over a prime range");
    std::vector<std::string> verify_statements;
    rs::u64 verify_pmin = 5, verify_pmax = 500;
    rs::i64 verify_param_max = 12;
    std::string verify_b, verify_c;
    unsigned verify_threads = threads_from_env();
    bool verify_fail_fast = false;
    bool verify_all = false;
    verify->add_option("--statement", verify_statements,
                       "statement id (repeatable); default: all");
    verify->add_flag("--all", verify_all, "run every statement (the default)");
    verify->add_option("--pmin", verify_pmin, "lower end of the prime range")
        ->capture_default_str();
    verify->add_option("--pmax", verify_pmax, "upper end of the prime range")
        ->capture_default_str();
    verify->add_option("--param-max", verify_param_max, "upper bound for the a/m/k/t grids")
        ->capture_default_str();
    verify->add_option("--b-values", verify_b, "comma-separated b grid for theorem 3.1");
    verify->add_option("--c-values", verify_c, "comma-separated c grid for theorem 3.1");
    verify->add_option("--threads", verify_threads,
                       "worker threads (0 = auto; env RESIDUE_SPECTRA_THREADS)");
    verify->add_flag("--fail-fast", verify_fail_fast, "stop after the first failing prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInvalid;
    }

    try {
        const Format format = parse_format(format_name);
        if (vcount->parsed()) return cmd_vcount(vc_p, vc_poly, vc_laurent, vc_profile, format);
        if (curve->parsed()) return cmd_curve(cv_p, cv_m, cv_n, format);
        if (eta->parsed()) {
            std::optional<rs::u64> at;
            if (eta_at_opt->count() > 0) at = eta_at_value;
            return cmd_eta(eta_level, eta_nmax, at, format);
        }
        if (dec->parsed()) return cmd_decompose(dec_p, format);
        if (forms->parsed()) return cmd_forms(forms_coeffs, forms_n, forms_triangular, format);
        if (verify->parsed()) {
            return cmd_verify(verify_statements, verify_pmin, verify_pmax, verify_param_max,
                              verify_b, verify_c, verify_threads, verify_fail_fast, format);
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const rs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
