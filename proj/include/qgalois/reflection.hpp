#pragma once

#include "qgalois/hatx.hpp"
#include "qgalois/linalg.hpp"

namespace qgalois {

struct BKey {
    long s = 0;
    int k = 0;
    auto operator<=>(const BKey&) const = default;
};

class ReflectionContext;

// Element of the reflection algebra B in the operator basis g_s h^k:
//   x^p y^q . g_s = [p = -s] x^p y^q
//   x^p y^q . h   = C_q x^{p+m} y^{q-1}
// with relations g_s g_t = [s=t] g_s, h g_s = g_{s+m} h, h^n = 0.
class BElement {
  public:
    explicit BElement(const ReflectionContext* ctx) : ctx_(ctx) {}
    static BElement basis(const ReflectionContext* ctx, long s, int k, const Cyclotomic& c);

    const std::map<BKey, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(BKey k, const Cyclotomic& c);

    BElement operator-() const;
    BElement& operator+=(const BElement& o);
    BElement& operator-=(const BElement& o);
    friend BElement operator+(BElement a, const BElement& b) { return a += b; }
    friend BElement operator-(BElement a, const BElement& b) { return a -= b; }
    BElement scaled(const Cyclotomic& c) const;

    friend BElement multiply(const BElement& b1, const BElement& b2);

    // right action on X
    AlgebraElement act_right(const AlgebraElement& x) const;
    // left action on X^: (b . w)(x) = w(x . b)
    HatX act_left(const HatX& w) const;

    bool operator==(const BElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const BElement& o) const { return !(*this == o); }
    std::string str() const;

  private:
    const ReflectionContext* ctx_;
    std::map<BKey, Cyclotomic> terms_;
};

// The reflected quantum group C presented on generators u, w with
// u w = lambda w u and mu + w^n = mu u^{mn}, its Hopf structure, the left
// coaction gamma on X and the inverse data beta_C.
struct CContext {
    PresentationPtr pres_c;
    HopfPtr hopf_c;
    TensorElement gamma_g1;  // C (x) X images of x, y
    TensorElement gamma_g2;
    TensorElement beta_c_g1;  // X (x) X, second leg multiplied in X^op
    TensorElement beta_c_g2;

    TensorElement gamma_mono(MonKey k) const;
    TensorElement gamma(const AlgebraElement& x) const;
    TensorElement beta_c_mono(MonKey k) const;
    TensorElement beta_c(const AlgebraElement& c) const;

    // left Galois map x (x) y -> gamma(x)(1 (x) y) and its beta_C inverse
    TensorElement galois_left(const TensorElement& xx) const;
    TensorElement galois_left_inv(const TensorElement& cx) const;
};

// Dual machinery around the Galois object: the C_q coefficients of the
// d-action, brackets into A^ and B, and the presented C.
class ReflectionContext {
  public:
    explicit ReflectionContext(GaloisPtr go);

    const GaloisObject& galois() const { return *go_; }
    const GaloisPtr& galois_ptr() const { return go_; }
    const HopfStructure& hopf_a() const { return go_->hopf_a(); }
    PresentationPtr pres_a() const { return go_->pres_a(); }
    PresentationPtr pres_x() const { return go_->pres_x(); }

    // C_q, q = 1..n-1, extracted from the d-action; cq(0) = 1 for products.
    const Cyclotomic& cq(int q) const { return cq_.at(q); }
    Cyclotomic cq_product(int q, int k) const;  // C_q C_{q-1} ... C_{q-k+1}
    const std::string& cq_closed_form() const { return cq_closed_form_; }

    BElement b_basis(long s, int k, const Cyclotomic& c) const {
        return BElement::basis(this, s, k, c);
    }

    // [w, w']_A^(a) = (w (x) w') (beta(a))
    DualElement bracket_Ahat(const HatX& w, const HatX& wp) const;

    // [w, w']_B from the right-action formula, expressed in the g_s h^k
    // basis; throws VerificationError when the operator leaves the span.
    BElement bracket_B(const HatX& w, const HatX& wp) const;

    // phi_B on a bracket pair: [w', w]_B -> w'(rep of w in psi-form)
    Cyclotomic phi_B_pair(const HatX& wp, const HatX& w) const;

    const CContext& c_context() const { return c_; }
    // [w, x]_C = (iota (x) w) gamma(x), an element of the presented C
    AlgebraElement bracket_C(const HatX& w, const AlgebraElement& x) const;

    // B x C pairing <b, [w, x]_C> = (b . w)(x), solved as a table over a
    // window of presented-C monomials. Throws when instances are
    // inconsistent (would falsify the presented identification).
    Cyclotomic pairing(const BElement& b, const AlgebraElement& c_elem) const;

    // psi_C solved from psi_C([w, x]_C) = w(1) psi_X(x)
    Cyclotomic psi_C(const AlgebraElement& c_elem) const;

    int hat_window() const { return hat_window_; }

  private:
    void extract_cq();
    static CContext build_c_context(const GaloisPtr& go);
    void solve_c_duality();

    GaloisPtr go_;
    std::vector<Cyclotomic> cq_;
    std::string cq_closed_form_;
    CContext c_;
    int hat_window_ = 2;
    long table_cwin_ = 0;               // solved p-range of both tables
    SparseFunctional psi_c_;            // on presented C monomials
    std::map<BKey, DualElement> pairing_table_;  // row per B basis element
    // pairing_table_ values are functionals on presented-C monomials stored
    // as MonKey -> scalar maps (reusing DualElement storage over pres_c).
};

}  // namespace qgalois
