#pragma once

#include <mutex>

#include "qgalois/hopf.hpp"

namespace qgalois {

// Sparse vector over the representation basis e_{p,q}.
using RepVector = std::map<MonKey, Cyclotomic>;

// The Galois object X(n, m, lambda, mu) over the quantum group A:
// coaction alpha, the multiplier map beta, Galois maps V / W and inverses,
// the invariant functionals, modular and automorphism data, the cleft
// cocycle and the faithful representation.
class GaloisObject {
  public:
    static std::shared_ptr<const GaloisObject> build(HopfPtr hopf_a, const Cyclotomic& mu,
                                                     int window);

    const PresentationPtr& pres_a() const { return hopf_a_->pres(); }
    const PresentationPtr& pres_x() const { return pres_x_; }
    const HopfStructure& hopf_a() const { return *hopf_a_; }
    const HopfPtr& hopf_a_ptr() const { return hopf_a_; }
    const Cyclotomic& mu() const { return pres_x_->mu; }
    int window() const { return window_; }

    // coaction X -> X (x) A and the multiplier map A -> X (x) X; the
    // monomial maps return references into stable per-instance caches
    const TensorElement& alpha_mono(MonKey k) const;
    TensorElement alpha(const AlgebraElement& x) const;
    const TensorElement& beta_mono(MonKey k) const;
    TensorElement beta(const AlgebraElement& a) const;

    // Galois maps. V(x (x) y) = (x (x) 1) alpha(y), V^{-1}(x (x) a) =
    // (x (x) 1) beta(a); W(x (x) y) = alpha(x)(y (x) 1), W^{-1}(y (x) S(a)) =
    // beta(a)(1 (x) y).
    TensorElement galois_V(const TensorElement& xx) const;
    TensorElement galois_V_inv(const TensorElement& xa) const;
    TensorElement galois_W(const TensorElement& xx) const;
    TensorElement galois_W_inv(const TensorElement& xa) const;

    const SparseFunctional& phi_X() const { return phi_x_; }
    const SparseFunctional& psi_X() const { return psi_x_; }
    Cyclotomic phi_X(const AlgebraElement& x) const { return phi_x_.eval(x); }
    Cyclotomic psi_X(const AlgebraElement& x) const { return psi_x_.eval(x); }
    const AlgebraElement& delta_X() const { return delta_x_; }
    const AlgebraElement& delta_X_inv() const { return delta_x_inv_; }

    AlgebraElement sigma_X(const AlgebraElement& x) const;
    AlgebraElement sigma_X_inv(const AlgebraElement& x) const;
    AlgebraElement sigma_X_prime(const AlgebraElement& x) const;
    AlgebraElement sigma_X_prime_inv(const AlgebraElement& x) const;
    AlgebraElement theta_X(const AlgebraElement& x) const;
    AlgebraElement theta_X_inv(const AlgebraElement& x) const;

    // Miyashita-Ulbrich right action x . a = a^[1] x a^[2]
    AlgebraElement mu_action(const AlgebraElement& x, const AlgebraElement& a) const;

    // Cleft structure: the colinear section a^p b^q -> x^p y^q, its
    // convolution inverse, and the scalar cocycle.
    AlgebraElement cleft_section(MonKey k) const;
    AlgebraElement cleft_section_inv(MonKey k) const;
    Cyclotomic cocycle(MonKey a1, MonKey a2) const;

    // Faithful representation on basis vectors e_{p,q}.
    RepVector rep_apply_mono(MonKey op, const RepVector& v) const;
    RepVector rep_apply(const AlgebraElement& x, const RepVector& v) const;

    AlgebraElement unit_x() const { return AlgebraElement::unit(pres_x_); }
    AlgebraElement mono_x(MonKey k) const {
        return AlgebraElement::monomial(pres_x_, k, Cyclotomic::one(pres_x_->n));
    }
    AlgebraElement mono_a(MonKey k) const {
        return AlgebraElement::monomial(pres_a(), k, Cyclotomic::one(pres_a()->n));
    }

  private:
    GaloisObject(HopfPtr hopf_a, PresentationPtr pres_x);
    void check_construction() const;

    HopfPtr hopf_a_;
    PresentationPtr pres_x_;
    int window_ = 3;
    TensorElement alpha_g1_, alpha_g2_;  // X (x) A
    TensorElement beta_g1_, beta_g2_;    // X (x) X, first leg multiplied in X^op
    SparseFunctional phi_x_, psi_x_;
    AlgebraElement delta_x_, delta_x_inv_;

    mutable std::mutex cache_mu_;
    mutable std::map<MonKey, TensorElement> alpha_cache_;
    mutable std::map<MonKey, TensorElement> beta_cache_;
    mutable std::map<MonKey, AlgebraElement> section_inv_cache_;
};

using GaloisPtr = std::shared_ptr<const GaloisObject>;

}  // namespace qgalois
