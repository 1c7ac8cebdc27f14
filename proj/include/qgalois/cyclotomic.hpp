#pragma once

#include <string>
#include <vector>

#include "qgalois/errors.hpp"
#include "qgalois/rational.hpp"

namespace qgalois {

namespace detail {
// Per-order data: the n-th cyclotomic polynomial and reduction rows for
// z^j, j = 0 .. 2*deg-2. Shared, immutable after creation.
struct CycField {
    int order = 0;
    int degree = 0;                              // deg Phi_n = euler_phi(n)
    std::vector<Integer> phi;                    // monic, length degree+1
    std::vector<std::vector<Rational>> zpow;     // z^j reduced, j < 2*degree-1
};
const CycField& cyc_field(int order);
}  // namespace detail

int euler_phi(int n);

// Element of Q(zeta_n) = Q[z]/Phi_n(z), stored reduced mod Phi_n.
// Immutable value type; all operations are pure.
class Cyclotomic {
  public:
    explicit Cyclotomic(int order);  // zero
    Cyclotomic(int order, const Rational& r);

    static Cyclotomic zero(int order) { return Cyclotomic(order); }
    static Cyclotomic one(int order) { return Cyclotomic(order, Rational(1)); }
    // zeta_n^e, e arbitrary (reduced mod n)
    static Cyclotomic root_power(int order, long e);

    int order() const { return field_->order; }
    int degree() const { return field_->degree; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // requires is_rational()
    Rational rational_part() const;
    const std::vector<Rational>& coefficients() const { return c_; }

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    Cyclotomic inverse() const;  // throws DomainError on zero
    Cyclotomic pow(long e) const;  // negative e via inverse

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Canonical literal: rational coefficients against 1, z^1, ..., with
    // explicit exponents, e.g. "1/2 - z^1 + 3*z^2".
    std::string str() const;

  private:
    const detail::CycField* field_;
    std::vector<Rational> c_;  // length degree

    void check_same_order(const Cyclotomic& o) const;
};

// lambda = zeta_n^{lambda_exp}; returns lambda^e.
Cyclotomic lambda_power(int order, int lambda_exp, long e);

}  // namespace qgalois
