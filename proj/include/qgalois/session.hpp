#pragma once

#include "qgalois/reflection.hpp"
#include "qgalois/report.hpp"

namespace qgalois {

struct RunConfig {
    int n = 2;
    int m = 1;
    int lambda_exp = 1;
    std::string mu_text = "0";
    int window = 3;
    std::vector<std::string> suites{"all"};
    std::string format = "text";  // text | json
    std::string out;              // output path, empty = stdout

    void validate() const;  // throws ConfigError
};

// Lazily builds the tower A -> X -> reflection for one configuration.
class Session {
  public:
    explicit Session(RunConfig cfg);

    const RunConfig& config() const { return cfg_; }
    Cyclotomic mu() const;

    const HopfPtr& hopf_a();
    const GaloisPtr& galois();
    const std::shared_ptr<const ReflectionContext>& reflection();

  private:
    RunConfig cfg_;
    HopfPtr hopf_;
    GaloisPtr galois_;
    std::shared_ptr<const ReflectionContext> refl_;
};

// Apply a named structure map (alpha, beta, S, Delta, sigma, sigma_X,
// theta_X, phi, phi_X, psi_X, gamma, ...) to a parsed literal; returns the
// canonical literal of the result. Throws ConfigError on unknown names and
// ParseError on bad literals.
std::string apply_structure_map(Session& s, const std::string& map, const std::string& expr);

// All map names accepted by apply_structure_map.
std::vector<std::string> structure_map_names();

}  // namespace qgalois
