#include "qgalois/session.hpp"

#include <numeric>

#include "qgalois/errors.hpp"
#include "qgalois/parse.hpp"

namespace qgalois {

void RunConfig::validate() const {
    if (n < 2) throw ConfigError("n must be >= 2");
    if (m < 1) throw ConfigError("m must be >= 1");
    if (std::gcd(((lambda_exp % n) + n) % n, n) != 1)
        throw ConfigError("lambda exponent must be coprime to n");
    if (std::gcd(m, n) != 1) throw ConfigError("m and n must be coprime");
    if (window < 0) throw ConfigError("window must be >= 0");
    if (format != "text" && format != "json") throw ConfigError("format must be text or json");
    try {
        parse_scalar(mu_text, n);
    } catch (const ParseError& e) {
        throw ConfigError(std::string("bad mu literal: ") + e.what());
    }
}

Session::Session(RunConfig cfg) : cfg_(std::move(cfg)) { cfg_.validate(); }

Cyclotomic Session::mu() const { return parse_scalar(cfg_.mu_text, cfg_.n); }

const HopfPtr& Session::hopf_a() {
    if (!hopf_) hopf_ = HopfStructure::build(
        Presentation::a_type(cfg_.n, cfg_.m, cfg_.lambda_exp), cfg_.window);
    return hopf_;
}

const GaloisPtr& Session::galois() {
    if (!galois_) galois_ = GaloisObject::build(hopf_a(), mu(), cfg_.window);
    return galois_;
}

const std::shared_ptr<const ReflectionContext>& Session::reflection() {
    if (!refl_) refl_ = std::make_shared<const ReflectionContext>(galois());
    return refl_;
}

std::vector<std::string> structure_map_names() {
    return {"Delta",   "S",          "S_inv",   "sigma",   "sigma_inv", "sigma_prime",
            "eps",     "phi",        "psi",     "beta",    "alpha",     "gamma",
            "sigma_X", "sigma_X_prime", "theta_X", "phi_X", "psi_X",    "delta_hat",
            "Delta_C", "S_C",        "eps_C",   "phi_C",   "psi_C",     "beta_C"};
}

std::string apply_structure_map(Session& s, const std::string& map, const std::string& expr) {
    GaloisPtr g = s.galois();
    HopfPtr h = s.hopf_a();

    // maps on A
    if (map == "Delta") return h->coproduct(parse_element(expr, h->pres())).str();
    if (map == "S") return h->antipode(parse_element(expr, h->pres())).str();
    if (map == "S_inv") return h->antipode_inv(parse_element(expr, h->pres())).str();
    if (map == "sigma") return h->sigma(parse_element(expr, h->pres())).str();
    if (map == "sigma_inv") return h->sigma_inv(parse_element(expr, h->pres())).str();
    if (map == "sigma_prime") return h->sigma_prime(parse_element(expr, h->pres())).str();
    if (map == "eps") return h->counit(parse_element(expr, h->pres())).str();
    if (map == "phi") return h->phi(parse_element(expr, h->pres())).str();
    if (map == "psi") return h->psi(parse_element(expr, h->pres())).str();
    if (map == "beta") return g->beta(parse_element(expr, h->pres())).str();
    // maps on X
    if (map == "alpha") return g->alpha(parse_element(expr, g->pres_x())).str();
    if (map == "gamma")
        return s.reflection()->c_context().gamma(parse_element(expr, g->pres_x())).str();
    if (map == "sigma_X") return g->sigma_X(parse_element(expr, g->pres_x())).str();
    if (map == "sigma_X_prime")
        return g->sigma_X_prime(parse_element(expr, g->pres_x())).str();
    if (map == "theta_X") return g->theta_X(parse_element(expr, g->pres_x())).str();
    if (map == "phi_X") return g->phi_X(parse_element(expr, g->pres_x())).str();
    if (map == "psi_X") return g->psi_X(parse_element(expr, g->pres_x())).str();
    if (map == "delta_hat") {
        auto hd = hat_delta_multiplier(h);
        return dual_act(*g, hd, parse_element(expr, g->pres_x())).str();
    }
    // maps on C
    if (map == "Delta_C" || map == "S_C" || map == "eps_C" || map == "phi_C" ||
        map == "psi_C" || map == "beta_C") {
        const auto& c = s.reflection()->c_context();
        if (map == "Delta_C") return c.hopf_c->coproduct(parse_element(expr, c.pres_c)).str();
        if (map == "S_C") return c.hopf_c->antipode(parse_element(expr, c.pres_c)).str();
        if (map == "eps_C") return c.hopf_c->counit(parse_element(expr, c.pres_c)).str();
        if (map == "phi_C") return c.hopf_c->phi(parse_element(expr, c.pres_c)).str();
        if (map == "psi_C") return s.reflection()->psi_C(parse_element(expr, c.pres_c)).str();
        return c.beta_c(parse_element(expr, c.pres_c)).str();
    }
    throw ConfigError("unknown map: " + map);
}

}  // namespace qgalois
