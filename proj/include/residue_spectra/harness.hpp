#pragma once

#include <array>
#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "residue_spectra/eta_series.hpp"
#include "residue_spectra/modular.hpp"

namespace residue_spectra {

// The catalog of verified statements, each rendered as an executable
// predicate. A predicate computes its left side by brute force (value-set
// sweeps, character sums, convolutions, eta expansions) and its right side
// from the closed form, through disjoint code paths, and compares exactly.
enum class Statement {
    VpSquare,        // V_p(x^2) = (p+1)/2
    VonSterneck,     // V_p(x^3+a1x^2+a2x+a3) = (2p+(p/3))/3
    QuarticBinomial, // V_p(x^4+bx) = [(5p+7)/8] for p = 2 (mod 3)
    SunYeCubic,      // V_p(x^3+c/x) two-case display with a_24(p)
    SunYeQuartic,    // V_p(x^4-4x^2+4x) display with a_20(p), delta(p)
    Jacobi,          // A and L binomial congruences
    Lemma2_1,        // sum ((x(x^3+m))/p) = (m/p) sum ((x^3+m)/p) = -1
    Lemma2_2,        // the same sum against the A, B branches
    Thm2_1,          // V_p(x^2+2a/x) cases plus the iff-cubic-residue clause
    Thm3_1,          // both displays for V_p(x^2+bx+c/x)
    Thm3_2,          // V_p(x^2+6x+9/x) with L
    Thm3_3,          // a_14 / N(1,1,7,7;p) / T(1,1,7,7;p-2) identities
    Lemma4_1,        // quartic value-set display with delta(k,p)
    Lemma4_2,        // point-count twist transformation
    Thm4_1,          // #E_p(x^3-3x+2-9t) display with epsilon_p(t)
    Thm4_2,          // a_15(p) identities
};

inline constexpr std::array<Statement, 16> kAllStatements = {
    Statement::VpSquare,     Statement::VonSterneck, Statement::QuarticBinomial,
    Statement::SunYeCubic,   Statement::SunYeQuartic, Statement::Jacobi,
    Statement::Lemma2_1,     Statement::Lemma2_2,     Statement::Thm2_1,
    Statement::Thm3_1,       Statement::Thm3_2,       Statement::Thm3_3,
    Statement::Lemma4_1,     Statement::Lemma4_2,     Statement::Thm4_1,
    Statement::Thm4_2,
};

std::string_view statement_name(Statement s);
std::optional<Statement> statement_from_name(std::string_view name);

/// Outcome of one predicate instance. Exactly one of (checked, skipped)
/// applies: a skipped result records why its hypothesis failed, passes
/// vacuously and carries no lhs/rhs.
struct CheckResult {
    Statement statement{};
    u64 p = 0;
    std::map<std::string, i64> params;
    std::optional<i64> lhs;
    std::optional<i64> rhs;
    bool pass = false;
    std::string skip_reason; // empty unless skipped
    std::string error;       // set when the predicate threw; counted as failure

    bool skipped() const { return !skip_reason.empty(); }
    bool failed() const { return !skipped() && !pass; }
};

/// Shared read-only context for the predicates that consume series:
/// eta coefficients and the two fixed representation-count series.
class HarnessContext {
public:
    explicit HarnessContext(u64 cutoff);

    u64 cutoff() const { return eta_.cutoff(); }
    const EtaCache& eta() const { return eta_; }
    i64 n1177(u64 n) const;  // N(1,1,7,7;n)
    i64 t1177(u64 n) const;  // T(1,1,7,7;n)
    i64 n13515(u64 n) const; // N(1,3,5,15;n)

private:
    EtaCache eta_;
    std::vector<i64> n1177_;
    std::vector<i64> t1177_;
    std::vector<i64> n13515_;
};

// Predicates. Statements with several identities emit one CheckResult per
// identity, tagged with a "part" parameter.
std::vector<CheckResult> check_vp_square(const PrimeField& fld);
std::vector<CheckResult> check_von_sterneck(const PrimeField& fld, i64 a1, i64 a2, i64 a3);
std::vector<CheckResult> check_quartic_binomial(const PrimeField& fld, i64 b);
std::vector<CheckResult> check_sunye_cubic(const PrimeField& fld, i64 c, const HarnessContext& ctx);
std::vector<CheckResult> check_sunye_quartic(const PrimeField& fld, const HarnessContext& ctx);
std::vector<CheckResult> check_jacobi(const PrimeField& fld);
std::vector<CheckResult> check_lemma_2_1(const PrimeField& fld, i64 m);
std::vector<CheckResult> check_lemma_2_2(const PrimeField& fld, i64 m);
std::vector<CheckResult> check_thm_2_1(const PrimeField& fld, i64 a);
std::vector<CheckResult> check_thm_3_1(const PrimeField& fld, i64 b, i64 c);
std::vector<CheckResult> check_thm_3_2(const PrimeField& fld);
std::vector<CheckResult> check_thm_3_3(const PrimeField& fld, const HarnessContext& ctx);
std::vector<CheckResult> check_lemma_4_1(const PrimeField& fld, i64 k);
std::vector<CheckResult> check_lemma_4_2(const PrimeField& fld, i64 k);
std::vector<CheckResult> check_thm_4_1(const PrimeField& fld, i64 t);
std::vector<CheckResult> check_thm_4_2(const PrimeField& fld, const HarnessContext& ctx);

/// Parameter grids swept per prime. Values are reduced mod p at use; grid
/// entries that reduce to an inadmissible value produce skips.
struct GridConfig {
    i64 param_max = 12;                           // a, m, k, t run over 1..param_max
    std::vector<i64> b_values{1, 2, 3, 4, 5, 6};  // 6x6 (b, c) grid for Thm 3.1
    std::vector<i64> c_values{1, 2, 3, 9, 18, -216};
    std::vector<std::array<i64, 3>> cubic_triples{{{2, 1, 1}, {0, 1, 0}, {1, 2, 3}}};
    std::vector<i64> quartic_b_values{1, 2, 3};
    std::vector<i64> laurent_c_values{1, 2, 3};
};

struct StatementTally {
    Statement statement{};
    u64 checked = 0; // non-skipped; checked = passed + failures.size()
    u64 passed = 0;
    u64 skipped = 0;
    std::vector<CheckResult> failures;
};

struct SuiteReport {
    u64 p_min = 0;
    u64 p_max = 0;
    std::vector<StatementTally> statements;

    u64 total_checked() const;
    u64 total_failures() const;
    std::string to_json() const;  // see docs/report schema in README
    std::string to_table() const;
    std::string to_csv() const;
};

struct SuiteOptions {
    u64 p_min = 5;
    u64 p_max = 500;
    std::vector<Statement> statements{kAllStatements.begin(), kAllStatements.end()};
    GridConfig grid;
    unsigned threads = 0;   // 0 = hardware concurrency
    bool fail_fast = false; // stop after the first prime with a failure (serial)
};

// Sweeps every selected predicate over every prime in [p_min, p_max] and
// every grid point. Results are aggregated deterministically: the report is
// ordered by (statement, p, params) no matter how many workers ran, and two
// runs over the same range are byte-identical.
SuiteReport run_suite(const SuiteOptions& options);

namespace detail {
// Test hook: added to every computed lhs before comparison, so the suite can
// prove each predicate actually compares two independently computed sides.
extern std::atomic<i64> check_fault_offset;
} // namespace detail

} // namespace residue_spectra
