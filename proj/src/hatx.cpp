#include "qgalois/hatx.hpp"

#include <sstream>

#include "qgalois/errors.hpp"

namespace qgalois {

std::string hat_form_name(HatForm f) {
    switch (f) {
        case HatForm::PhiRight: return "phi_X(.x)";
        case HatForm::PhiLeft: return "phi_X(x.)";
        case HatForm::PsiRight: return "psi_X(.x)";
        case HatForm::PsiLeft: return "psi_X(x.)";
    }
    return "?";
}

HatX::HatX(GaloisPtr go, HatForm form, AlgebraElement rep)
    : go_(std::move(go)), form_(form), rep_(std::move(rep)) {}

Cyclotomic HatX::eval(const AlgebraElement& z) const {
    switch (form_) {
        case HatForm::PhiRight: return go_->phi_X(multiply(z, rep_));
        case HatForm::PhiLeft: return go_->phi_X(multiply(rep_, z));
        case HatForm::PsiRight: return go_->psi_X(multiply(z, rep_));
        case HatForm::PsiLeft: return go_->psi_X(multiply(rep_, z));
    }
    throw DomainError("bad form");
}

Cyclotomic HatX::eval_mono(MonKey z) const { return eval(go_->mono_x(z)); }

HatX HatX::to(HatForm target) const {
    if (target == form_) return *this;
    const auto& g = *go_;
    switch (form_) {
        case HatForm::PhiRight:
            switch (target) {
                // phi_X(. x) = phi_X(sigma_X^{-1}(x) .)
                case HatForm::PhiLeft: return HatX(go_, target, g.sigma_X_inv(rep_));
                // phi_X(. x) = psi_X(. x delta_X^{-1})
                case HatForm::PsiRight:
                    return HatX(go_, target, multiply(rep_, g.delta_X_inv()));
                case HatForm::PsiLeft: return to(HatForm::PsiRight).to(target);
                default: break;
            }
            break;
        case HatForm::PhiLeft:
            return HatX(go_, HatForm::PhiRight, g.sigma_X(rep_)).to(target);
        case HatForm::PsiRight:
            if (target == HatForm::PsiLeft)
                return HatX(go_, target, g.sigma_X_prime_inv(rep_));
            return HatX(go_, HatForm::PhiRight, multiply(rep_, g.delta_X())).to(target);
        case HatForm::PsiLeft:
            return HatX(go_, HatForm::PsiRight, g.sigma_X_prime(rep_)).to(target);
    }
    throw DomainError("bad form conversion");
}

HatX HatX::from_values(GaloisPtr go, const std::map<MonKey, Cyclotomic>& values) {
    // phi_X(z w) pairs the z-monomial (p, q) with the single partner
    // monomial (-p, n-1-q) of w, with constant lambda^{q p}.
    const auto& px = *go->pres_x();
    AlgebraElement rep(go->pres_x());
    for (const auto& [z, val] : values) {
        if (val.is_zero()) continue;
        MonKey partner{-z.p, px.n - 1 - z.q};
        rep.add_term(partner, val * px.lambda_pow(-static_cast<long>(z.q) * z.p));
    }
    return HatX(std::move(go), HatForm::PhiRight, std::move(rep));
}

HatX HatX::theta(int power) const {
    // (w o theta_X)(z) = phi_X(theta_X(z) x) = r phi_X(z theta_X^{-1}(x))
    // with r the phi_X-eigenvalue of theta_X (theta_X scales the monomials
    // with q = n-1 by lambda^{m(n-1)}).
    HatX cur = canonical();
    const auto& g = *go_;
    MonKey top{0, g.pres_x()->n - 1};
    Cyclotomic r = g.phi_X(g.theta_X(g.mono_x(top)));
    for (int i = 0; i < std::abs(power); ++i) {
        AlgebraElement rep = power > 0 ? g.theta_X_inv(cur.rep()).scaled(r)
                                       : g.theta_X(cur.rep()).scaled(r.inverse());
        cur = HatX(go_, HatForm::PhiRight, rep);
    }
    return cur;
}

HatX HatX::operator+(const HatX& o) const {
    HatX a = canonical(), b = o.canonical();
    return HatX(go_, HatForm::PhiRight, a.rep() + b.rep());
}

bool HatX::operator==(const HatX& o) const {
    return canonical().rep() == o.canonical().rep();
}

std::string HatX::str() const {
    std::ostringstream out;
    out << hat_form_name(form_) << " with x = " << rep_.str();
    return out.str();
}

namespace {
template <typename Dual>
HatX act_dual_impl(const HatX& w, const Dual& w1) {
    const auto& g = *w.galois();
    HatX psi = w.to(HatForm::PsiRight);
    AlgebraElement rep(g.pres_x());
    TensorElement co = g.alpha(psi.rep());
    for (const auto& [tk, tc] : co.terms()) {
        Cyclotomic v = w1.eval(g.hopf_a().antipode_mono(tk.b));
        if (v.is_zero()) continue;
        rep.add_term(tk.a, tc * v);
    }
    return HatX(w.galois(), HatForm::PsiRight, rep);
}
}  // namespace

HatX hatx_act_dual(const HatX& w, const DualElement& w1) { return act_dual_impl(w, w1); }
HatX hatx_act_dual(const HatX& w, const DualMultiplier& w1) { return act_dual_impl(w, w1); }

HatX dual_act_hatx(const DualElement& w1, const HatX& w) {
    return hatx_act_dual(w, dual_S_inv(w.galois()->hopf_a(), w1));
}

}  // namespace qgalois
