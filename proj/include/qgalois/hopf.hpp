#pragma once

#include <memory>
#include <mutex>

#include "qgalois/tensor.hpp"

namespace qgalois {

// Hopf / algebraic-quantum-group structure on an A-type or C-type
// presentation: coproduct, counit, antipode, and the solved structure data
// (left integral phi, modular element delta, modular automorphism sigma,
// scaling constant tau). phi, delta, sigma and tau are solved from their
// defining identities over a finite window, then re-verified on a larger
// window; only phi's closed form on the A-family is kept as a cross-check.
class HopfStructure {
  public:
    // Throws SolverError / VerificationError when construction checks fail.
    static std::shared_ptr<const HopfStructure> build(PresentationPtr pres, int window);

    const PresentationPtr& pres() const { return pres_; }
    int solve_window() const { return solve_window_; }

    // Returns a reference into a per-instance cache (std::map nodes are
    // stable, so references stay valid across later insertions).
    const TensorElement& coproduct_mono(MonKey k) const;
    TensorElement coproduct(const AlgebraElement& e) const;

    Cyclotomic counit_mono(MonKey k) const;
    Cyclotomic counit(const AlgebraElement& e) const;

    AlgebraElement antipode_mono(MonKey k) const;
    AlgebraElement antipode(const AlgebraElement& e) const;
    AlgebraElement antipode_inv_mono(MonKey k) const;
    AlgebraElement antipode_inv(const AlgebraElement& e) const;
    // S^k for any integer k
    AlgebraElement antipode_pow(const AlgebraElement& e, int k) const;

    const SparseFunctional& phi() const { return phi_; }
    Cyclotomic phi(const AlgebraElement& e) const { return phi_.eval(e); }
    // psi = phi o S
    Cyclotomic psi(const AlgebraElement& e) const { return phi_.eval(antipode(e)); }
    Cyclotomic psi_mono(MonKey k) const { return phi_.eval(antipode_mono(k)); }

    const AlgebraElement& modular_element() const { return delta_; }
    const AlgebraElement& modular_element_inv() const { return delta_inv_; }
    const Cyclotomic& scaling_constant() const { return tau_; }
    // psi = psi_delta_ratio * phi(. delta)
    const Cyclotomic& psi_delta_ratio() const { return psi_delta_ratio_; }

    AlgebraElement sigma(const AlgebraElement& e) const;
    AlgebraElement sigma_inv(const AlgebraElement& e) const;
    AlgebraElement sigma_prime(const AlgebraElement& e) const;
    AlgebraElement sigma_prime_inv(const AlgebraElement& e) const;

    AlgebraElement unit() const { return AlgebraElement::unit(pres_); }

  private:
    explicit HopfStructure(PresentationPtr pres);

    void check_generator_images() const;
    void solve_phi();
    void solve_delta();
    void verify_sigma() const;
    void solve_tau();
    void check_psi_vs_delta();

    Cyclotomic sigma_mono_scale(MonKey k) const;

    PresentationPtr pres_;
    int solve_window_ = 2;
    TensorElement cop_g1_, cop_g2_;
    AlgebraElement s_g1_, s_g2_;
    SparseFunctional phi_;
    AlgebraElement delta_, delta_inv_;
    Cyclotomic tau_;
    Cyclotomic psi_delta_ratio_;

    mutable std::mutex cop_mu_;
    mutable std::map<MonKey, TensorElement> cop_cache_;
};

using HopfPtr = std::shared_ptr<const HopfStructure>;

}  // namespace qgalois
