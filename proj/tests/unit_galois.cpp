#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgalois/galois.hpp"
#include "qgalois/linalg.hpp"

using namespace qgalois;

namespace {
GaloisPtr make(int n, int m, const Cyclotomic& mu, int window = 3) {
    auto h = HopfStructure::build(Presentation::a_type(n, m), window);
    return GaloisObject::build(h, mu, window);
}
}  // namespace

TEST_CASE("coaction values") {
    auto g = make(3, 1, Cyclotomic::one(3));
    auto X = g->pres_x();
    auto A = g->pres_a();
    // alpha(x) = x (x) a, alpha(1) = 1 (x) 1
    CHECK(g->alpha(g->mono_x({1, 0})) ==
          TensorElement::monomial(X, A, MonKey{1, 0}, MonKey{1, 0}, Cyclotomic::one(3)));
    CHECK(g->alpha(g->unit_x()) == TensorElement::unit(X, A));
    // alpha(y^2) = y^2 (x) a^2 + (1 + lambda^{-1}) y (x) a b + 1 (x) b^2
    TensorElement expect =
        TensorElement::monomial(X, A, MonKey{0, 2}, MonKey{2, 0}, Cyclotomic::one(3)) +
        TensorElement::monomial(X, A, MonKey{0, 1}, MonKey{1, 1},
                                Cyclotomic::one(3) + X->lambda_pow(-1)) +
        TensorElement::monomial(X, A, MonKey{0, 0}, MonKey{0, 2}, Cyclotomic::one(3));
    CHECK(g->alpha(g->mono_x({0, 2})) == expect);
    // (iota (x) eps) alpha = id on a window
    for (MonKey k : window_monomials(*X, 3)) {
        CHECK(g->alpha_mono(k).contract_leg2(
                  [&](MonKey a) { return g->hopf_a().counit_mono(a); }) == g->mono_x(k));
    }
}

TEST_CASE("beta values") {
    auto g = make(2, 1, Cyclotomic::one(2));
    auto X = g->pres_x();
    // beta(a) = x^{-1} (x) x, beta(1) = 1 (x) 1
    CHECK(g->beta_mono({1, 0}) ==
          TensorElement::monomial(X, X, MonKey{-1, 0}, MonKey{1, 0}, Cyclotomic::one(2)));
    CHECK(g->beta(AlgebraElement::unit(g->pres_a())) == TensorElement::unit(X, X));
    // beta(ab) extends with the first leg reversed; cross-checked via V
    TensorElement via_v = g->galois_V(g->beta_mono({1, 1}));
    CHECK(via_v == TensorElement::monomial(X, g->pres_a(), MonKey{0, 0}, MonKey{1, 1},
                                           Cyclotomic::one(2)));
}

TEST_CASE("Galois maps invert each other on window tensors") {
    for (auto cfg : std::vector<std::tuple<int, int, Cyclotomic>>{
             {2, 1, Cyclotomic::one(2)},
             {3, 1, Cyclotomic::root_power(3, 1)},
             {3, 2, Cyclotomic::zero(3)}}) {
        auto [n, m, mu] = cfg;
        auto g = make(n, m, mu, 2);
        auto X = g->pres_x();
        auto A = g->pres_a();
        for (MonKey k1 : window_monomials(*X, 2)) {
            for (MonKey k2 : window_monomials(*X, 2)) {
                auto xx = TensorElement::monomial(X, X, k1, k2, Cyclotomic::one(n));
                CHECK(g->galois_V_inv(g->galois_V(xx)) == xx);
                CHECK(g->galois_W_inv(g->galois_W(xx)) == xx);
                auto xa = TensorElement::monomial(X, A, k1, k2, Cyclotomic::one(n));
                CHECK(g->galois_V(g->galois_V_inv(xa)) == xa);
                CHECK(g->galois_W(g->galois_W_inv(xa)) == xa);
            }
        }
    }
}

TEST_CASE("invariant functionals") {
    auto g = make(3, 2, Cyclotomic::one(3));
    auto X = g->pres_x();
    const int n = 3, m = 2;
    CHECK(g->phi_X(g->mono_x({0, n - 1})).is_one());
    // psi_X(x^{m(1-n)} y^{n-1}) = lambda^{-m}
    CHECK(g->psi_X(g->mono_x({m * (1 - n), n - 1})) == X->lambda_pow(-m));
    // psi_X = phi_X(. delta_X) everywhere on a window
    for (MonKey k : window_monomials(*X, 5)) {
        CHECK(g->psi_X(g->mono_x(k)) == g->phi_X(multiply(g->mono_x(k), g->delta_X())));
        // defining invariances
        CHECK(g->alpha_mono(k).contract_leg2([&](MonKey a) {
            return g->hopf_a().phi(g->mono_a(a));
        }) == g->unit_x().scaled(g->phi_X(g->mono_x(k))));
        CHECK(g->alpha_mono(k).contract_leg1([&](MonKey x) {
            return g->phi_X(g->mono_x(x));
        }) == g->hopf_a().modular_element().scaled(g->phi_X(g->mono_x(k))));
        CHECK(g->alpha_mono(k).contract_leg1([&](MonKey x) {
            return g->psi_X(g->mono_x(x));
        }) == AlgebraElement::unit(g->pres_a()).scaled(g->psi_X(g->mono_x(k))));
    }
}

TEST_CASE("invariant functional is unique at window scale") {
    auto g = make(2, 1, Cyclotomic::one(2), 2);
    auto X = g->pres_x();
    const int n = 2;
    // unknowns: every first-leg monomial of alpha over the equation window,
    // which must reach the psi_X support at |p| = m(n-1);
    // equations from (omega (x) iota) alpha = omega(.) 1
    std::map<MonKey, int> index;
    std::vector<MonKey> keys;
    for (MonKey k : window_monomials(*X, 2)) {
        const TensorElement& co = g->alpha_mono(k);
        for (const auto& [tk, tc] : co.terms()) {
            if (index.emplace(tk.a, static_cast<int>(keys.size())).second)
                keys.push_back(tk.a);
        }
    }
    CMat rows;
    for (MonKey k : window_monomials(*X, 2)) {
        std::map<MonKey, CVec> by_a;  // A-monomial -> coefficient row
        const TensorElement& co = g->alpha_mono(k);
        for (const auto& [tk, tc] : co.terms()) {
            auto it = by_a.find(tk.b);
            if (it == by_a.end())
                it = by_a.emplace(tk.b, CVec(keys.size(), Cyclotomic::zero(n))).first;
            it->second[index.at(tk.a)] += tc;
        }
        for (auto& [a, row] : by_a) {
            if (a == MonKey{0, 0}) row[index.at(k)] -= Cyclotomic::one(n);
            rows.push_back(row);
        }
    }
    auto basis = nullspace(rows, static_cast<int>(keys.size()), n);
    REQUIRE(basis.size() == 1);
    // and the span is psi_X
    int support = index.at(MonKey{1 * (1 - 2), 1});
    Cyclotomic scale = g->psi_X(g->mono_x({-1, 1})) * basis[0][support].inverse();
    for (size_t i = 0; i < keys.size(); ++i)
        CHECK(basis[0][i] * scale == g->psi_X(g->mono_x(keys[i])));
}

TEST_CASE("phi_X faithful at window scale") {
    auto g = make(3, 1, Cyclotomic::one(3), 2);
    auto win = window_monomials(*g->pres_x(), 2);
    CMat gram;
    for (MonKey k1 : win) {
        CVec row;
        for (MonKey k2 : win)
            row.push_back(g->phi_X(multiply(g->mono_x(k1), g->mono_x(k2))));
        gram.push_back(std::move(row));
    }
    CHECK(rank(gram) == static_cast<int>(win.size()));
}

TEST_CASE("automorphisms") {
    auto g = make(3, 2, Cyclotomic::root_power(3, 1));
    auto X = g->pres_x();
    // table values
    CHECK(g->sigma_X(g->mono_x({1, 0})) == g->mono_x({1, 0}).scaled(X->lambda_pow(-1)));
    CHECK(g->sigma_X(g->mono_x({0, 1})) == g->mono_x({0, 1}));
    CHECK(g->theta_X(g->mono_x({1, 0})) == g->mono_x({1, 0}));
    CHECK(g->theta_X(g->mono_x({0, 1})) == g->mono_x({0, 1}).scaled(X->lambda_pow(X->m)));
    CHECK(g->theta_X(g->unit_x()) == g->unit_x());
    // sigma'_X by conjugation: on x it coincides with sigma_X
    CHECK(g->sigma_X_prime(g->mono_x({1, 0})) == g->sigma_X(g->mono_x({1, 0})));
    for (MonKey k : window_monomials(*X, 2)) {
        CHECK(g->sigma_X_inv(g->sigma_X(g->mono_x(k))) == g->mono_x(k));
        CHECK(g->theta_X_inv(g->theta_X(g->mono_x(k))) == g->mono_x(k));
    }
}

TEST_CASE("miyashita-ulbrich action") {
    auto g = make(2, 1, Cyclotomic::one(2), 2);
    auto A = g->pres_a();
    // x . a = x, 1 . a = 1
    CHECK(g->mu_action(g->mono_x({1, 0}), g->mono_a({1, 0})) == g->mono_x({1, 0}));
    CHECK(g->mu_action(g->unit_x(), g->mono_a({1, 0})) == g->unit_x());
    // module law over window triples
    auto winA = window_monomials(*A, 1);
    auto winX = window_monomials(*g->pres_x(), 1);
    for (MonKey x : winX)
        for (MonKey a1 : winA)
            for (MonKey a2 : winA) {
                AlgebraElement lhs =
                    g->mu_action(g->mono_x(x), multiply(g->mono_a(a1), g->mono_a(a2)));
                AlgebraElement rhs =
                    g->mu_action(g->mu_action(g->mono_x(x), g->mono_a(a1)), g->mono_a(a2));
                CHECK(lhs == rhs);
            }
    // counit collapse x a^[1] a^[2] = eps(a) x
    for (MonKey x : winX)
        for (MonKey a : winA) {
            AlgebraElement acc(g->pres_x());
            const TensorElement& bt = g->beta_mono(a);
            for (const auto& [tk, tc] : bt.terms())
                acc += multiply(multiply(g->mono_x(x), g->mono_x(tk.a)), g->mono_x(tk.b))
                           .scaled(tc);
            CHECK(acc == g->mono_x(x).scaled(g->hopf_a().counit_mono(a)));
        }
}

TEST_CASE("cocycle reproduces the closed-form table") {
    for (auto cfg : std::vector<std::tuple<int, int, Cyclotomic>>{
             {2, 1, Cyclotomic::one(2)},
             {3, 1, Cyclotomic::root_power(3, 1)},
             {3, 1, Cyclotomic::zero(3)}}) {
        auto [n, m, mu] = cfg;
        auto g = make(n, m, mu, 2);
        auto X = g->pres_x();
        for (long p = -2; p <= 2; ++p) {
            for (long r = -2; r <= 2; ++r) {
                for (int q = 0; q < n; ++q) {
                    for (int s = 0; s < n; ++s) {
                        Cyclotomic got = g->cocycle({p, q}, {r, s});
                        Cyclotomic expect = Cyclotomic::zero(n);
                        if (q == 0 && s == 0)
                            expect = Cyclotomic::one(n);
                        else if (q + s == n)
                            expect = mu * X->lambda_pow(-r * q);
                        CHECK(got == expect);
                    }
                }
            }
        }
    }
}

TEST_CASE("cleft section is colinear and convolution-invertible both ways") {
    auto g = make(3, 1, Cyclotomic::one(3), 2);
    auto A = g->pres_a();
    auto X = g->pres_x();
    for (MonKey c : window_monomials(*A, 2)) {
        // alpha(Phi(c)) = Phi(c_(1)) (x) c_(2)
        TensorElement lhs = g->alpha(g->cleft_section(c));
        TensorElement rhs(X, A);
        const TensorElement& cop = g->hopf_a().coproduct_mono(c);
        for (const auto& [tk, tc] : cop.terms())
            rhs += TensorElement::of(g->cleft_section(tk.a), g->mono_a(tk.b)).scaled(tc);
        CHECK(lhs == rhs);
        // PhiBar * Phi = eps(.) 1 (the right inverse too)
        AlgebraElement conv(X);
        for (const auto& [tk, tc] : cop.terms())
            conv += multiply(g->cleft_section_inv(tk.a), g->cleft_section(tk.b)).scaled(tc);
        CHECK(conv == g->unit_x().scaled(g->hopf_a().counit_mono(c)));
    }
}

TEST_CASE("representation acts per the table and faithfully") {
    for (auto mu : {Cyclotomic::one(2), Cyclotomic::zero(2)}) {
        auto g = make(2, 1, mu, 2);
        const int n = 2, m = 1;
        // y'^n e_{p,q} = mu lambda^{-pn} e_{p+nm,q} = mu x'^{mn} e_{p,q}
        for (long p = -2; p <= 2; ++p) {
            for (int q = 0; q < n; ++q) {
                RepVector v{{MonKey{p, q}, Cyclotomic::one(n)}};
                RepVector lhs = g->rep_apply(g->mono_x({0, 1}).pow(n), v);
                RepVector rhs = g->rep_apply(g->mono_x({static_cast<long>(m) * n, 0}).scaled(mu), v);
                CHECK(lhs == rhs);
                // x' y' = lambda y' x'
                RepVector a = g->rep_apply(multiply(g->mono_x({1, 0}), g->mono_x({0, 1})), v);
                RepVector b = g->rep_apply(
                    multiply(g->mono_x({0, 1}), g->mono_x({1, 0})).scaled(g->pres_x()->lambda_pow(1)),
                    v);
                CHECK(a == b);
            }
        }
        // distinct window monomials act independently
        auto win = window_monomials(*g->pres_x(), 1);
        std::map<std::pair<MonKey, MonKey>, int> cols;
        std::vector<CVec> rows;
        for (MonKey op : win) {
            std::map<std::pair<MonKey, MonKey>, Cyclotomic> entries;
            for (MonKey in : window_monomials(*g->pres_x(), 1)) {
                RepVector v{{in, Cyclotomic::one(n)}};
                for (const auto& [out, c] : g->rep_apply(g->mono_x(op), v))
                    entries.emplace(std::make_pair(in, out), c);
            }
            for (const auto& [key, c] : entries) cols.emplace(key, 0);
            rows.push_back({});
            (void)op;
        }
        int idx = 0;
        for (auto& [key, v] : cols) v = idx++;
        CMat mat;
        for (MonKey op : win) {
            CVec row(cols.size(), Cyclotomic::zero(n));
            for (MonKey in : window_monomials(*g->pres_x(), 1)) {
                RepVector v{{in, Cyclotomic::one(n)}};
                for (const auto& [out, c] : g->rep_apply(g->mono_x(op), v))
                    row[cols.at(std::make_pair(in, out))] += c;
            }
            mat.push_back(std::move(row));
        }
        CHECK(rank(mat) == static_cast<int>(win.size()));
    }
}

TEST_CASE("no-antipode witness") {
    for (auto cfg : std::vector<std::tuple<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
        auto [n, m] = cfg;
        for (bool zero_mu : {false, true}) {
            Cyclotomic mu = zero_mu ? Cyclotomic::zero(n) : Cyclotomic::root_power(n, 1);
            auto g = make(n, m, mu, 2);
            // candidate S_X(y) = -y x^{-m}; anti-multiplicativity would force
            // S_X(y)^n = S_X(y^n) = mu x^{-mn}
            AlgebraElement cand =
                multiply(g->mono_x({0, 1}), g->mono_x({-m, 0})).scaled(-Cyclotomic::one(n));
            AlgebraElement got = cand.pow(n);
            AlgebraElement want = g->mono_x({-static_cast<long>(m) * n, 0}).scaled(mu);
            if (zero_mu)
                CHECK(got == want);
            else
                CHECK(got != want);
        }
    }
}

TEST_CASE("randomized multi-term coaction and Galois-map laws") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> pd(-2, 2), cd(-2, 2);
    auto g = make(3, 1, Cyclotomic::root_power(3, 1), 2);
    auto X = g->pres_x();
    const int n = 3;
    std::uniform_int_distribution<int> qd(0, n - 1);
    auto rnd = [&] {
        AlgebraElement e(X);
        for (int t = 0; t < 3; ++t) {
            Cyclotomic coeff = Cyclotomic(n, rat(cd(rng))) +
                               Cyclotomic(n, rat(cd(rng))) * Cyclotomic::root_power(n, qd(rng));
            e += AlgebraElement::monomial(X, pd(rng), qd(rng), coeff);
        }
        return e;
    };
    for (int trial = 0; trial < 25; ++trial) {
        AlgebraElement e1 = rnd(), e2 = rnd();
        // alpha is an algebra homomorphism
        CHECK(g->alpha(multiply(e1, e2)) == tensor_multiply(g->alpha(e1), g->alpha(e2)));
        // V and W invert on random tensors
        TensorElement t = TensorElement::of(e1, e2);
        CHECK(g->galois_V_inv(g->galois_V(t)) == t);
        CHECK(g->galois_W_inv(g->galois_W(t)) == t);
        // sigma_X and theta_X are multiplicative
        CHECK(g->sigma_X(multiply(e1, e2)) == multiply(g->sigma_X(e1), g->sigma_X(e2)));
        CHECK(g->theta_X(multiply(e1, e2)) == multiply(g->theta_X(e1), g->theta_X(e2)));
    }
}
