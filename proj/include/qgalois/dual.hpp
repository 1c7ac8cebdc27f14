#pragma once

#include "qgalois/galois.hpp"

namespace qgalois {

// Element of the dual A^ in the dual-PBW basis F_{p,q},
// F_{p,q}(a^r b^s) = [p=r][q=s]. A finitely supported functional on A.
struct DualElement {
    PresentationPtr pres;  // the A presentation
    std::map<MonKey, Cyclotomic> terms;

    static DualElement zero(PresentationPtr p) { return DualElement{std::move(p), {}}; }
    static DualElement basis(PresentationPtr p, long i, int j, const Cyclotomic& c);
    // e_p = F_{p,0}
    static DualElement e_p(PresentationPtr p, long i);

    Cyclotomic eval(MonKey k) const;
    Cyclotomic eval(const AlgebraElement& a) const;

    void add_term(MonKey k, const Cyclotomic& c);
    DualElement operator-() const;
    DualElement& operator+=(const DualElement& o);
    DualElement& operator-=(const DualElement& o);
    friend DualElement operator+(DualElement a, const DualElement& b) { return a += b; }
    friend DualElement operator-(DualElement a, const DualElement& b) { return a -= b; }
    DualElement scaled(const Cyclotomic& c) const;

    bool operator==(const DualElement& o) const { return terms == o.terms; }
    bool is_zero() const { return terms.empty(); }
    std::string str() const;
};

// Functional on A given by a closed-form rule; may have infinite support
// (d, c, delta^ live in M(A^) and are never materialized).
struct DualMultiplier {
    std::string name;
    std::function<Cyclotomic(MonKey)> rule;

    Cyclotomic eval(MonKey k) const { return rule(k); }
    Cyclotomic eval(const AlgebraElement& a) const;
};

// Convolution product (w1 w2)(a) = (w1 (x) w2)(Delta(a)). The support of
// the product is confined to the first-index set of w1 (second legs of
// Delta share the first leg's a-exponent shifted by j m with the g2-degree
// j coming from w1's support).
DualElement dual_multiply(const HopfStructure& h, const DualElement& w1, const DualElement& w2);
DualElement multiplier_times(const HopfStructure& h, const DualMultiplier& m,
                             const DualElement& w);
DualElement times_multiplier(const HopfStructure& h, const DualElement& w,
                             const DualMultiplier& m);
// pointwise evaluation of a product of two rules
Cyclotomic multiplier_product_eval(const HopfStructure& h, const DualMultiplier& m1,
                                   const DualMultiplier& m2, MonKey at);

// left action w . x = (iota (x) w) alpha(x)
AlgebraElement dual_act(const GaloisObject& g, const DualElement& w, const AlgebraElement& x);
AlgebraElement dual_act(const GaloisObject& g, const DualMultiplier& m, const AlgebraElement& x);

// w o S / w o S^{-1} (finite again)
DualElement dual_S(const HopfStructure& h, const DualElement& w);
DualElement dual_S_inv(const HopfStructure& h, const DualElement& w);

// the multiplier rules of the example family
DualMultiplier d_multiplier(const PresentationPtr& pres);
DualMultiplier c_multiplier(const PresentationPtr& pres);
// delta^ = eps o sigma^{-1}
DualMultiplier hat_delta_multiplier(const HopfPtr& hopf);

}  // namespace qgalois
