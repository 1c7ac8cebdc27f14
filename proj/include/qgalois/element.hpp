#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qgalois/presentation.hpp"

namespace qgalois {

// Basis index of g1^p g2^q.
struct MonKey {
    long p = 0;
    int q = 0;
    auto operator<=>(const MonKey&) const = default;
};

// Element in normal form: sparse map over the PBW basis, all stored
// coefficients nonzero, 0 <= q < n. Immutable value semantics.
class AlgebraElement {
  public:
    explicit AlgebraElement(PresentationPtr pres);

    static AlgebraElement zero(PresentationPtr pres) { return AlgebraElement(pres); }
    static AlgebraElement unit(PresentationPtr pres);
    static AlgebraElement monomial(PresentationPtr pres, long p, int q,
                                   const Cyclotomic& coeff);
    static AlgebraElement monomial(PresentationPtr pres, MonKey k, const Cyclotomic& coeff);

    const PresentationPtr& pres() const { return pres_; }
    const std::map<MonKey, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    AlgebraElement scaled(const Cyclotomic& c) const;
    void add_term(MonKey k, const Cyclotomic& c);  // accumulate, prune zeros

    // Normal-form product. Throws ConfigError on presentation mismatch.
    friend AlgebraElement multiply(const AlgebraElement& e1, const AlgebraElement& e2);
    // multiply(e2, e1): the X^op leg of the beta maps.
    friend AlgebraElement opposite_multiply(const AlgebraElement& e1, const AlgebraElement& e2);

    // e >= 0 for general elements; e < 0 needs a single invertible term.
    AlgebraElement pow(long e) const;
    // Requires exactly one term with q = 0.
    AlgebraElement invert_monomial() const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    // Canonical literal, terms in lexicographic (p, q) order.
    std::string str() const;

  private:
    PresentationPtr pres_;
    std::map<MonKey, Cyclotomic> terms_;
};

// Product of two basis monomials as a list of normal-form terms
// (at most 2). The commutation constant is lambda^{-q1*p2}, from
// g2^q g1^p = lambda^{-qp} g1^p g2^q.
std::vector<std::pair<MonKey, Cyclotomic>> mono_mul(const Presentation& pres,
                                                    MonKey k1, MonKey k2);

// Linear functional with finite support on the PBW basis.
struct SparseFunctional {
    PresentationPtr pres;
    std::map<MonKey, Cyclotomic> values;

    Cyclotomic eval(const AlgebraElement& e) const;
    Cyclotomic eval(MonKey k) const;
};

// Gaussian binomial [k, j]_q by the Pascal recurrence
// [k, j]_q = [k-1, j-1]_q + q^j [k-1, j]_q.
Cyclotomic gaussian_binomial(int k, int j, const Cyclotomic& q);
// 1 + q + ... + q^{k-1}
Cyclotomic q_integer(int k, const Cyclotomic& q);

std::vector<MonKey> window_monomials(const Presentation& pres, int p_bound);
inline std::vector<MonKey> window_monomials(const Presentation& pres, Window w) {
    return window_monomials(pres, w.p_bound);
}

std::string mono_str(const Presentation& pres, MonKey k);

}  // namespace qgalois
