#include "qgalois/report.hpp"

#include <json.hpp>
#include <sstream>

namespace qgalois {

int Report::failure_count() const {
    int total = 0;
    for (const auto& c : checks)
        if (!c.pass) ++total;
    return total;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["config"] = {{"n", n},
                   {"m", m},
                   {"lambda_exp", lambda_exp},
                   {"mu", mu},
                   {"window", window},
                   {"suites", suites}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["instances"] = c.instances;
        if (!c.pass) {
            jc["failures"] = c.failures;
            jc["witness"] = c.witness;
            jc["lhs"] = c.lhs;
            jc["rhs"] = c.rhs;
        }
        j["checks"].push_back(jc);
    }
    if (!table.empty()) {
        nlohmann::ordered_json jt = nlohmann::ordered_json::object();
        for (const auto& [k, v] : table) jt[k] = v;
        j["table"] = jt;
    }
    j["failures"] = failure_count();
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "config: n=" << n << " m=" << m << " lambda=z^" << lambda_exp << " mu=" << mu
        << " window=" << window << "\n";
    if (!table.empty()) {
        out << "structure table:\n";
        for (const auto& [k, v] : table) out << "  " << k << " = " << v << "\n";
    }
    for (const auto& c : checks) {
        out << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (" << c.instances
            << " instances)";
        if (!c.pass) {
            out << "  failures=" << c.failures << "\n      witness: " << c.witness
                << "\n      lhs: " << c.lhs << "\n      rhs: " << c.rhs;
        }
        out << "\n";
    }
    if (!checks.empty())
        out << (failure_count() == 0 ? "all checks passed" : "CHECKS FAILED") << " ("
            << checks.size() << " checks, " << elapsed_ms << " ms)\n";
    return out.str();
}

}  // namespace qgalois
