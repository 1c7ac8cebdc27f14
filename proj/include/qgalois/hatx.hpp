#pragma once

#include "qgalois/dual.hpp"

namespace qgalois {

// The four canonical presentations of an element of the restricted dual
// X^ = { phi_X(. x) } = { phi_X(x .) } = { psi_X(. x) } = { psi_X(x .) }.
enum class HatForm { PhiRight, PhiLeft, PsiRight, PsiLeft };

std::string hat_form_name(HatForm f);

// Element of X^: a representative in X plus a form tag. Form conversions
// go through sigma_X / sigma'_X / delta_X; equality is decided on the
// canonical PhiRight representative (phi_X is faithful).
class HatX {
  public:
    HatX(GaloisPtr go, HatForm form, AlgebraElement rep);

    static HatX phi_right(GaloisPtr go, const AlgebraElement& rep) {
        return HatX(std::move(go), HatForm::PhiRight, rep);
    }
    // Reconstruct phi_X(. w) from finitely many functional values
    // (z-monomial -> value); the values must exhaust the support.
    static HatX from_values(GaloisPtr go, const std::map<MonKey, Cyclotomic>& values);

    const GaloisPtr& galois() const { return go_; }
    HatForm form() const { return form_; }
    const AlgebraElement& rep() const { return rep_; }

    Cyclotomic eval(const AlgebraElement& z) const;
    Cyclotomic eval_mono(MonKey z) const;

    HatX to(HatForm target) const;
    HatX canonical() const { return to(HatForm::PhiRight); }

    // omega o theta_X^{power}
    HatX theta(int power) const;

    HatX scaled(const Cyclotomic& c) const { return HatX(go_, form_, rep_.scaled(c)); }
    HatX operator+(const HatX& o) const;

    bool operator==(const HatX& o) const;
    bool operator!=(const HatX& o) const { return !(*this == o); }
    bool is_zero() const { return rep_.is_zero(); }

    std::string str() const;

  private:
    GaloisPtr go_;
    HatForm form_;
    AlgebraElement rep_;
};

// Right action of A^ on X^: psi_X(. x) . w1 = w1(S(x_(1))) psi_X(. x_(0)).
HatX hatx_act_dual(const HatX& w, const DualElement& w1);
HatX hatx_act_dual(const HatX& w, const DualMultiplier& w1);
// Left action w1 . w := w . S^{-1}(w1).
HatX dual_act_hatx(const DualElement& w1, const HatX& w);

}  // namespace qgalois
