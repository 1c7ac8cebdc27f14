#pragma once

#include <array>
#include <memory>
#include <string>

#include "qgalois/cyclotomic.hpp"

namespace qgalois {

// What g2^n reduces to. The three fixed relation shapes:
//   Zero          : g2^n = 0                      (A-family)
//   MuTop         : g2^n = mu * g1^{mn}           (X-family)
//   MuTopMinusOne : g2^n = mu * (g1^{mn} - 1)     (C-family)
enum class PowerReduction { Zero, MuTop, MuTopMinusOne };

struct Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

// One presented q-algebra: invertible g1, nilpotent-type g2 with
// g1 g2 = lambda g2 g1 and the reduction rule above. Basis g1^p g2^q,
// p in Z, 0 <= q < n.
struct Presentation {
    int n = 2;
    int m = 1;
    int lambda_exp = 1;  // lambda = zeta_n^{lambda_exp}
    PowerReduction reduction = PowerReduction::Zero;
    Cyclotomic mu;
    std::array<std::string, 2> gens{"a", "b"};

    Presentation(int n_, int m_, int lexp, PowerReduction red, Cyclotomic mu_,
                 std::array<std::string, 2> names);

    static PresentationPtr a_type(int n, int m, int lambda_exp = 1);
    static PresentationPtr x_type(int n, int m, int lambda_exp, const Cyclotomic& mu);
    static PresentationPtr c_type(int n, int m, int lambda_exp, const Cyclotomic& mu);

    Cyclotomic lambda_pow(long e) const { return lambda_power(n, lambda_exp, e); }
    Cyclotomic scalar(long v) const { return Cyclotomic(n, Rational(v)); }

    bool equals(const Presentation& o) const;
};

// Finite quantification domain {(p, q) : |p| <= p_bound, 0 <= q < n}.
struct Window {
    int p_bound = 3;
};

}  // namespace qgalois
