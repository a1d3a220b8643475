#include <sstream>

#include <json.hpp>

#include "residue_spectra/harness.hpp"

namespace residue_spectra {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json failure_json(const CheckResult& r) {
    ordered_json f;
    f["p"] = r.p;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    f["params"] = params;
    if (r.lhs) f["lhs"] = *r.lhs;
    if (r.rhs) f["rhs"] = *r.rhs;
    if (!r.error.empty()) f["error"] = r.error;
    return f;
}

std::string params_text(const CheckResult& r) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [key, value] : r.params) {
        if (!first) os << ", ";
        os << key << "=" << value;
        first = false;
    }
    os << "}";
    return os.str();
}

} // namespace

std::string SuiteReport::to_json() const {
    ordered_json doc;
    doc["range"] = {p_min, p_max};
    ordered_json stmts = ordered_json::array();
    for (const auto& tally : statements) {
        ordered_json s;
        s["id"] = std::string(statement_name(tally.statement));
        s["checked"] = tally.checked;
        s["passed"] = tally.passed;
        s["skipped"] = tally.skipped;
        ordered_json failures = ordered_json::array();
        for (const auto& f : tally.failures) failures.push_back(failure_json(f));
        s["failures"] = failures;
        stmts.push_back(std::move(s));
    }
    doc["statements"] = stmts;
    doc["total_checked"] = total_checked();
    doc["total_failures"] = total_failures();
    return doc.dump(2);
}

std::string SuiteReport::to_table() const {
    std::ostringstream os;
    os << "verification over primes [" << p_min << ", " << p_max << "]\n\n";
    os << "statement          checked   passed  skipped   failed\n";
    for (const auto& tally : statements) {
        const auto name = statement_name(tally.statement);
        os << name;
        for (std::size_t i = name.size(); i < 18; ++i) os << ' ';
        char line[64];
        std::snprintf(line, sizeof(line), "%8llu %8llu %8llu %8zu\n",
                      static_cast<unsigned long long>(tally.checked),
                      static_cast<unsigned long long>(tally.passed),
                      static_cast<unsigned long long>(tally.skipped), tally.failures.size());
        os << line;
    }
    os << "\ntotal checked: " << total_checked() << ", failures: " << total_failures() << "\n";
    for (const auto& tally : statements) {
        for (const auto& f : tally.failures) {
            os << "FAIL " << statement_name(tally.statement) << " p=" << f.p << " "
               << params_text(f);
            if (f.lhs && f.rhs) os << " lhs=" << *f.lhs << " rhs=" << *f.rhs;
            if (!f.error.empty()) os << " error=" << f.error;
            os << "\n";
        }
    }
    return os.str();
}

std::string SuiteReport::to_csv() const {
    std::ostringstream os;
    os << "statement,checked,passed,skipped,failed\r\n";
    for (const auto& tally : statements) {
        os << statement_name(tally.statement) << "," << tally.checked << "," << tally.passed << ","
           << tally.skipped << "," << tally.failures.size() << "\r\n";
    }
    return os.str();
}

} // namespace residue_spectra
