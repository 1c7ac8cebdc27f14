#include "qgalois/suites.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>

#include "qgalois/errors.hpp"
#include "qgalois/linalg.hpp"
#include "qgalois/parse.hpp"

namespace qgalois {

namespace {

struct Check {
    std::string name;
    std::function<CheckResult()> run;
};

// Accumulates instance comparisons for one named check.
class Probe {
  public:
    explicit Probe(std::string name) { r_.name = std::move(name); }

    template <typename T>
    void eq(const T& lhs, const T& rhs, const std::function<std::string()>& witness) {
        ++r_.instances;
        if (lhs == rhs) return;
        ++r_.failures;
        if (r_.pass) {
            r_.pass = false;
            r_.witness = witness();
            r_.lhs = lhs.str();
            r_.rhs = rhs.str();
        }
    }

    void flag(bool ok, const std::function<std::string()>& witness, const std::string& lhs = "",
              const std::string& rhs = "") {
        ++r_.instances;
        if (ok) return;
        ++r_.failures;
        if (r_.pass) {
            r_.pass = false;
            r_.witness = witness();
            r_.lhs = lhs;
            r_.rhs = rhs;
        }
    }

    CheckResult done() { return r_; }

  private:
    CheckResult r_;
};

std::string suite_of(const std::string& name) { return name.substr(0, name.find('/')); }
std::string label_of(const std::string& name) {
    auto pos = name.find('/');
    return pos == std::string::npos ? name : name.substr(pos + 1);
}

bool selected(const std::string& name, const std::vector<std::string>& selection) {
    const std::string suite = suite_of(name);
    const std::string family = suite.substr(0, suite.find('-'));
    for (const auto& item : selection) {
        if (item == "all" || item == name || item == suite || item == family ||
            item == label_of(name))
            return true;
    }
    return false;
}

int thread_cap() {
    if (const char* env = std::getenv("QGALOIS_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    return 1;
}

using MonFn = std::function<AlgebraElement(MonKey)>;

MonFn lift(const PresentationPtr& pres,
           std::function<AlgebraElement(const AlgebraElement&)> f) {
    return [pres, f = std::move(f)](MonKey k) {
        return f(AlgebraElement::monomial(pres, k, Cyclotomic::one(pres->n)));
    };
}

// ---------------------------------------------------------------- hopf ---

void add_hopf_checks(std::vector<Check>& out, Session& s, bool c_side) {
    const std::string pre = c_side ? "hopf-c/" : "hopf-a/";
    HopfPtr h = c_side ? s.reflection()->c_context().hopf_c : s.hopf_a();
    const int P = s.config().window;
    PresentationPtr A = h->pres();
    const int n = A->n;
    auto mono = [A, n](MonKey k) { return AlgebraElement::monomial(A, k, Cyclotomic::one(n)); };
    auto win = window_monomials(*A, P);
    auto wit = [A](MonKey k) { return [A, k] { return mono_str(*A, k); }; };
    auto wit2 = [A](MonKey k1, MonKey k2) {
        return [A, k1, k2] { return mono_str(*A, k1) + " , " + mono_str(*A, k2); };
    };

    out.push_back({pre + "coassoc", [=]() {
        Probe p(pre + "coassoc");
        auto cop = [h](MonKey k) -> TensorElement { return h->coproduct_mono(k); };
        for (MonKey k : win) {
            const TensorElement& t = h->coproduct_mono(k);
            p.eq(Tensor3Element::expand_leg1(t, A, A, cop),
                 Tensor3Element::expand_leg2(t, A, A, cop), wit(k));
        }
        return p.done();
    }});

    out.push_back({pre + "counit", [=]() {
        Probe p(pre + "counit");
        for (MonKey k : win) {
            const TensorElement& t = h->coproduct_mono(k);
            p.eq(t.contract_leg1([&](MonKey a) { return h->counit_mono(a); }), mono(k), wit(k));
            p.eq(t.contract_leg2([&](MonKey a) { return h->counit_mono(a); }), mono(k), wit(k));
        }
        return p.done();
    }});

    out.push_back({pre + "antipode", [=]() {
        Probe p(pre + "antipode");
        for (MonKey k : win) {
            const TensorElement& t = h->coproduct_mono(k);
            AlgebraElement lhs(A), rhs(A);
            for (const auto& [tk, tc] : t.terms()) {
                lhs += multiply(h->antipode_mono(tk.a), mono(tk.b)).scaled(tc);
                rhs += multiply(mono(tk.a), h->antipode_mono(tk.b)).scaled(tc);
            }
            AlgebraElement eps1 = h->unit().scaled(h->counit_mono(k));
            p.eq(lhs, eps1, wit(k));
            p.eq(rhs, eps1, wit(k));
        }
        return p.done();
    }});

    out.push_back({pre + "tmap-bijective", [=]() {
        Probe p(pre + "tmap-bijective");
        auto t1 = [&](const TensorElement& t) {
            TensorElement acc(A, A);
            for (const auto& [tk, tc] : t.terms())
                acc += tensor_multiply(h->coproduct_mono(tk.a),
                                       TensorElement::of(h->unit(), mono(tk.b)))
                           .scaled(tc);
            return acc;
        };
        auto t1inv = [&](const TensorElement& t) {
            TensorElement acc(A, A);
            for (const auto& [tk, tc] : t.terms()) {
                TensorElement sleg = h->coproduct_mono(tk.a).map_leg2(
                    A, [&](MonKey a) { return h->antipode_mono(a); });
                acc += tensor_multiply(sleg, TensorElement::of(h->unit(), mono(tk.b))).scaled(tc);
            }
            return acc;
        };
        auto t2 = [&](const TensorElement& t) {
            TensorElement acc(A, A);
            for (const auto& [tk, tc] : t.terms())
                acc += tensor_multiply(TensorElement::of(mono(tk.a), h->unit()),
                                       h->coproduct_mono(tk.b))
                           .scaled(tc);
            return acc;
        };
        auto t2inv = [&](const TensorElement& t) {
            TensorElement acc(A, A);
            for (const auto& [tk, tc] : t.terms()) {
                TensorElement sleg = h->coproduct_mono(tk.b).map_leg1(
                    A, [&](MonKey a) { return h->antipode_mono(a); });
                acc += tensor_multiply(TensorElement::of(mono(tk.a), h->unit()), sleg).scaled(tc);
            }
            return acc;
        };
        for (MonKey k1 : win) {
            for (MonKey k2 : win) {
                TensorElement t =
                    TensorElement::monomial(A, A, k1, k2, Cyclotomic::one(n));
                p.eq(t1(t1inv(t)), t, wit2(k1, k2));
                p.eq(t1inv(t1(t)), t, wit2(k1, k2));
                p.eq(t2(t2inv(t)), t, wit2(k1, k2));
                p.eq(t2inv(t2(t)), t, wit2(k1, k2));
            }
        }
        return p.done();
    }});

    out.push_back({pre + "phi-left-invariant", [=]() {
        Probe p(pre + "phi-left-invariant");
        for (MonKey k : win)
            p.eq(h->coproduct_mono(k).contract_leg2(
                     [&](MonKey a) { return h->phi().eval(a); }),
                 h->unit().scaled(h->phi().eval(k)), wit(k));
        return p.done();
    }});

    out.push_back({pre + "psi-right-invariant", [=]() {
        Probe p(pre + "psi-right-invariant");
        for (MonKey k : win)
            p.eq(h->coproduct_mono(k).contract_leg1(
                     [&](MonKey a) { return h->psi_mono(a); }),
                 h->unit().scaled(h->psi_mono(k)), wit(k));
        return p.done();
    }});

    out.push_back({pre + "coproduct-homomorphism", [=]() {
        Probe p(pre + "coproduct-homomorphism");
        for (MonKey k1 : win)
            for (MonKey k2 : win)
                p.eq(h->coproduct(multiply(mono(k1), mono(k2))),
                     tensor_multiply(h->coproduct_mono(k1), h->coproduct_mono(k2)),
                     wit2(k1, k2));
        return p.done();
    }});

    out.push_back({pre + "antipode-antihomomorphism", [=]() {
        Probe p(pre + "antipode-antihomomorphism");
        for (MonKey k1 : win)
            for (MonKey k2 : win)
                p.eq(h->antipode(multiply(mono(k1), mono(k2))),
                     multiply(h->antipode_mono(k2), h->antipode_mono(k1)), wit2(k1, k2));
        return p.done();
    }});

    out.push_back({pre + "sigma-kms", [=]() {
        Probe p(pre + "sigma-kms");
        for (MonKey k1 : win) {
            p.eq(h->phi(h->sigma(mono(k1))), h->phi(mono(k1)), wit(k1));
            for (MonKey k2 : win)
                p.eq(h->phi(multiply(mono(k1), mono(k2))),
                     h->phi(multiply(mono(k2), h->sigma(mono(k1)))), wit2(k1, k2));
        }
        return p.done();
    }});

    out.push_back({pre + "sigma-automorphism", [=]() {
        Probe p(pre + "sigma-automorphism");
        for (MonKey k1 : win) {
            p.eq(h->sigma_inv(h->sigma(mono(k1))), mono(k1), wit(k1));
            for (MonKey k2 : win)
                p.eq(h->sigma(multiply(mono(k1), mono(k2))),
                     multiply(h->sigma(mono(k1)), h->sigma(mono(k2))), wit2(k1, k2));
        }
        return p.done();
    }});

    out.push_back({pre + "sigma-prime-kms", [=]() {
        Probe p(pre + "sigma-prime-kms");
        for (MonKey k1 : win)
            for (MonKey k2 : win)
                p.eq(h->psi(multiply(mono(k1), mono(k2))),
                     h->psi(multiply(mono(k2), h->sigma_prime(mono(k1)))), wit2(k1, k2));
        return p.done();
    }});

    out.push_back({pre + "delta-grouplike", [=]() {
        Probe p(pre + "delta-grouplike");
        const AlgebraElement& d = h->modular_element();
        p.eq(h->coproduct(d), TensorElement::of(d, d), [] { return std::string("delta"); });
        p.eq(h->counit(d), Cyclotomic::one(n), [] { return std::string("delta"); });
        for (MonKey k : win)
            p.eq(h->psi_mono(k), h->psi_delta_ratio() * h->phi(multiply(mono(k), d)), wit(k));
        return p.done();
    }});

    out.push_back({pre + "tau", [=]() {
        Probe p(pre + "tau");
        for (MonKey k : win)
            p.eq(h->phi(h->antipode_pow(mono(k), 2)), h->scaling_constant() * h->phi(mono(k)),
                 wit(k));
        return p.done();
    }});
}

// -------------------------------------------------------------- galois ---

void add_galois_checks(std::vector<Check>& out, Session& s) {
    GaloisPtr g = s.galois();
    HopfPtr h = s.hopf_a();
    const int P = s.config().window;
    PresentationPtr A = g->pres_a();
    PresentationPtr X = g->pres_x();
    const int n = X->n;
    auto winX = window_monomials(*X, P);
    auto winA = window_monomials(*A, P);
    auto monoX = [X, n](MonKey k) { return AlgebraElement::monomial(X, k, Cyclotomic::one(n)); };
    auto monoA = [A, n](MonKey k) { return AlgebraElement::monomial(A, k, Cyclotomic::one(n)); };
    auto witX = [X](MonKey k) { return [X, k] { return mono_str(*X, k); }; };
    auto witA = [A](MonKey k) { return [A, k] { return mono_str(*A, k); }; };
    auto witXX = [X](MonKey k1, MonKey k2) {
        return [X, k1, k2] { return mono_str(*X, k1) + " , " + mono_str(*X, k2); };
    };
    auto witAX = [A, X](MonKey a, MonKey x) {
        return [A, X, a, x] { return mono_str(*A, a) + " , " + mono_str(*X, x); };
    };

    auto sigmaX = lift(X, [g](const AlgebraElement& e) { return g->sigma_X(e); });
    auto sigmaXp = lift(X, [g](const AlgebraElement& e) { return g->sigma_X_prime(e); });
    auto thetaX = lift(X, [g](const AlgebraElement& e) { return g->theta_X(e); });
    auto s_pow = [h](int k) {
        return lift(h->pres(), [h, k](const AlgebraElement& e) { return h->antipode_pow(e, k); });
    };
    auto sigmaA = lift(A, [h](const AlgebraElement& e) { return h->sigma(e); });
    auto sigmaAp_inv = lift(A, [h](const AlgebraElement& e) { return h->sigma_prime_inv(e); });

    // identity suite i) .. xvi) (no xii in the numbering), the three lemmas
    // and the KMS law
    out.push_back({"galois/i", [=]() {
        Probe p("galois/i");
        for (MonKey k : winX)
            p.eq(g->alpha(g->sigma_X_prime(monoX(k))),
                 g->alpha_mono(k).map_leg1(X, sigmaXp).map_leg2(A, s_pow(-2)), witX(k));
        return p.done();
    }});

    out.push_back({"galois/ii", [=]() {
        Probe p("galois/ii");
        for (MonKey k : winA)
            p.eq(g->beta(h->antipode_inv(h->sigma(monoA(k)))),
                 g->beta_mono(k).swap_legs().map_leg1(X, sigmaX), witA(k));
        return p.done();
    }});

    out.push_back({"galois/iii", [=]() {
        Probe p("galois/iii");
        p.eq(g->alpha(g->delta_X()), TensorElement::of(g->delta_X(), h->modular_element()),
             [] { return std::string("delta_X"); });
        return p.done();
    }});

    out.push_back({"galois/iv", [=]() {
        Probe p("galois/iv");
        p.eq(g->beta(h->modular_element()), TensorElement::of(g->delta_X_inv(), g->delta_X()),
             [] { return std::string("delta"); });
        return p.done();
    }});

    out.push_back({"galois/v", [=]() {
        Probe p("galois/v");
        p.eq(g->sigma_X(g->delta_X()).scaled(h->scaling_constant()), g->delta_X(),
             [] { return std::string("delta_X"); });
        return p.done();
    }});

    out.push_back({"galois/vi", [=]() {
        Probe p("galois/vi");
        for (MonKey k : winX)
            p.eq(g->alpha(g->sigma_X(monoX(k))),
                 g->alpha_mono(k).map_leg1(X, thetaX).map_leg2(A, sigmaA), witX(k));
        return p.done();
    }});

    out.push_back({"galois/vii", [=]() {
        Probe p("galois/vii");
        for (MonKey k : winX)
            p.eq(g->alpha(g->theta_X(monoX(k))),
                 g->alpha_mono(k).map_leg1(X, thetaX).map_leg2(A, s_pow(2)), witX(k));
        return p.done();
    }});

    out.push_back({"galois/viii", [=]() {
        Probe p("galois/viii");
        for (MonKey k : winX)
            p.eq(g->alpha(g->theta_X(monoX(k))),
                 g->alpha_mono(k).map_leg1(X, sigmaX).map_leg2(A, sigmaAp_inv), witX(k));
        return p.done();
    }});

    out.push_back({"galois/ix", [=]() {
        Probe p("galois/ix");
        for (MonKey k : winX)
            p.eq(g->sigma_X(g->theta_X(monoX(k))), g->theta_X(g->sigma_X(monoX(k))), witX(k));
        return p.done();
    }});

    out.push_back({"galois/x", [=]() {
        Probe p("galois/x");
        p.eq(g->theta_X(g->delta_X()), g->delta_X(), [] { return std::string("delta_X"); });
        return p.done();
    }});

    out.push_back({"galois/xi", [=]() {
        Probe p("galois/xi");
        for (MonKey k : winX)
            p.eq(g->phi_X(g->theta_X(monoX(k))), h->scaling_constant() * g->phi_X(monoX(k)),
                 witX(k));
        return p.done();
    }});

    out.push_back({"galois/xiii", [=]() {
        Probe p("galois/xiii");
        for (MonKey k : winA)
            p.eq(g->beta(h->antipode(monoA(k))),
                 g->beta_mono(k).swap_legs().map_leg1(X, thetaX), witA(k));
        return p.done();
    }});

    out.push_back({"galois/xiv", [=]() {
        Probe p("galois/xiv");
        for (MonKey kx : winX) {
            for (MonKey ky : winX) {
                TensorElement acc(X, X);
                const TensorElement& co = g->alpha_mono(kx);
                for (const auto& [ak, ac] : co.terms()) {
                    AlgebraElement mid = multiply(g->theta_X(monoX(ak.a)), monoX(ky));
                    const TensorElement& bt = g->beta_mono(ak.b);
                    for (const auto& [bk, bc] : bt.terms())
                        acc += TensorElement::of(multiply(monoX(bk.a), mid), monoX(bk.b))
                                   .scaled(ac * bc);
                }
                p.eq(acc, TensorElement::of(monoX(ky), monoX(kx)), witXX(kx, ky));
            }
        }
        return p.done();
    }});

    out.push_back({"galois/xv", [=]() {
        Probe p("galois/xv");
        for (MonKey ka : winA) {
            for (MonKey ky : winX) {
                AlgebraElement acc(X);
                const TensorElement& bt = g->beta_mono(ka);
                for (const auto& [bk, bc] : bt.terms())
                    acc += multiply(g->theta_X(monoX(bk.b)),
                                    multiply(monoX(bk.a), monoX(ky)))
                               .scaled(bc);
                p.eq(acc, monoX(ky).scaled(h->counit_mono(ka)), witAX(ka, ky));
            }
        }
        return p.done();
    }});

    out.push_back({"galois/xvi", [=]() {
        Probe p("galois/xvi");
        for (MonKey k : winA)
            p.eq(g->beta(h->antipode_pow(monoA(k), 2)),
                 g->beta_mono(k).map_leg1(X, thetaX).map_leg2(X, thetaX), witA(k));
        return p.done();
    }});

    out.push_back({"galois/lemma-psi-flip", [=]() {
        Probe p("galois/lemma-psi-flip");
        auto psiX = [g](MonKey k) {
            return g->psi_X(AlgebraElement::monomial(g->pres_x(), k,
                                                     Cyclotomic::one(g->pres_x()->n)));
        };
        for (MonKey kx : winX) {
            for (MonKey ky : winX) {
                TensorElement lhs_t = tensor_multiply(
                    TensorElement::monomial(X, A, kx, MonKey{0, 0}, Cyclotomic::one(n)),
                    g->alpha_mono(ky));
                AlgebraElement lhs = h->antipode(lhs_t.contract_leg1(psiX));
                TensorElement rhs_t = tensor_multiply(
                    g->alpha_mono(kx),
                    TensorElement::monomial(X, A, ky, MonKey{0, 0}, Cyclotomic::one(n)));
                p.eq(lhs, rhs_t.contract_leg1(psiX), witXX(kx, ky));
            }
        }
        return p.done();
    }});

    out.push_back({"galois/lemma-phi-beta-1", [=]() {
        Probe p("galois/lemma-phi-beta-1");
        for (MonKey ka : winA) {
            for (MonKey kx : winX) {
                AlgebraElement lhs = g->alpha_mono(kx).contract_leg2([&](MonKey b) {
                    return h->phi(multiply(monoA(ka), monoA(b)));
                });
                AlgebraElement rhs = g->beta_mono(ka).contract_leg2([&](MonKey t2) {
                    return g->phi_X(multiply(monoX(t2), monoX(kx)));
                });
                p.eq(lhs, rhs, witAX(ka, kx));
            }
        }
        return p.done();
    }});

    out.push_back({"galois/lemma-phi-beta-2", [=]() {
        Probe p("galois/lemma-phi-beta-2");
        for (MonKey ka : winA) {
            for (MonKey kx : winX) {
                AlgebraElement sa = h->antipode_mono(ka);
                AlgebraElement lhs = g->alpha_mono(kx).contract_leg2(
                    [&](MonKey b) { return h->phi(multiply(monoA(b), sa)); });
                AlgebraElement rhs = g->beta_mono(ka).contract_leg1([&](MonKey t1) {
                    return g->phi_X(multiply(monoX(kx), monoX(t1)));
                });
                p.eq(lhs, rhs, witAX(ka, kx));
            }
        }
        return p.done();
    }});

    out.push_back({"galois/kms", [=]() {
        Probe p("galois/kms");
        for (MonKey kx : winX)
            for (MonKey ky : winX)
                p.eq(g->phi_X(multiply(monoX(ky), g->sigma_X(monoX(kx)))),
                     g->phi_X(multiply(monoX(kx), monoX(ky))), witXX(kx, ky));
        return p.done();
    }});

    // supporting structure checks of the coaction and functionals

    out.push_back({"galois/coaction-law", [=]() {
        Probe p("galois/coaction-law");
        auto alpha_fn = [g](MonKey k) -> TensorElement { return g->alpha_mono(k); };
        auto cop_fn = [h](MonKey k) -> TensorElement { return h->coproduct_mono(k); };
        for (MonKey k : winX) {
            const TensorElement& t = g->alpha_mono(k);
            p.eq(Tensor3Element::expand_leg1(t, X, A, alpha_fn),
                 Tensor3Element::expand_leg2(t, A, A, cop_fn), witX(k));
            // (iota (x) eps) alpha = id
            p.eq(t.contract_leg2([&](MonKey a) { return h->counit_mono(a); }), monoX(k),
                 witX(k));
        }
        return p.done();
    }});

    out.push_back({"galois/galois-v", [=]() {
        Probe p("galois/galois-v");
        for (MonKey k1 : winX) {
            for (MonKey k2 : winX) {
                auto xx = TensorElement::monomial(X, X, k1, k2, Cyclotomic::one(n));
                p.eq(g->galois_V_inv(g->galois_V(xx)), xx, witXX(k1, k2));
                auto xa = TensorElement::monomial(X, A, k1, k2, Cyclotomic::one(n));
                p.eq(g->galois_V(g->galois_V_inv(xa)), xa, witXX(k1, k2));
            }
        }
        return p.done();
    }});

    out.push_back({"galois/galois-w", [=]() {
        Probe p("galois/galois-w");
        for (MonKey k1 : winX) {
            for (MonKey k2 : winX) {
                auto xx = TensorElement::monomial(X, X, k1, k2, Cyclotomic::one(n));
                p.eq(g->galois_W_inv(g->galois_W(xx)), xx, witXX(k1, k2));
                auto xa = TensorElement::monomial(X, A, k1, k2, Cyclotomic::one(n));
                p.eq(g->galois_W(g->galois_W_inv(xa)), xa, witXX(k1, k2));
            }
        }
        return p.done();
    }});

    out.push_back({"galois/counit-collapse", [=]() {
        Probe p("galois/counit-collapse");
        for (MonKey kx : winX) {
            for (MonKey ka : winA) {
                AlgebraElement acc(X);
                const TensorElement& bt = g->beta_mono(ka);
                for (const auto& [bk, bc] : bt.terms())
                    acc += multiply(monoX(kx), multiply(monoX(bk.a), monoX(bk.b))).scaled(bc);
                p.eq(acc, monoX(kx).scaled(h->counit_mono(ka)), witAX(ka, kx));
            }
        }
        return p.done();
    }});

    out.push_back({"galois/beta-homomorphism", [=]() {
        Probe p("galois/beta-homomorphism");
        for (MonKey k1 : winA)
            for (MonKey k2 : winA)
                p.eq(g->beta(multiply(monoA(k1), monoA(k2))),
                     tensor_multiply(g->beta_mono(k1), g->beta_mono(k2), /*op_left=*/true,
                                     /*op_right=*/false),
                     [A, k1, k2] { return mono_str(*A, k1) + " , " + mono_str(*A, k2); });
        return p.done();
    }});

    out.push_back({"galois/mu-action", [=]() {
        Probe p("galois/mu-action");
        auto small = window_monomials(*X, std::min(P, 2));
        auto smallA = window_monomials(*A, std::min(P, 2));
        for (MonKey kx : small)
            for (MonKey a1 : smallA)
                for (MonKey a2 : smallA)
                    p.eq(g->mu_action(monoX(kx), multiply(monoA(a1), monoA(a2))),
                         g->mu_action(g->mu_action(monoX(kx), monoA(a1)), monoA(a2)),
                         witAX(a1, kx));
        return p.done();
    }});

    out.push_back({"galois/phi-x-defining", [=]() {
        Probe p("galois/phi-x-defining");
        for (MonKey k : winX) {
            p.eq(g->alpha_mono(k).contract_leg2(
                     [&](MonKey a) { return h->phi().eval(a); }),
                 g->unit_x().scaled(g->phi_X(monoX(k))), witX(k));
            p.eq(g->alpha_mono(k).contract_leg1(
                     [&](MonKey x) { return g->phi_X(monoX(x)); }),
                 h->modular_element().scaled(g->phi_X(monoX(k))), witX(k));
            p.eq(g->alpha_mono(k).contract_leg1(
                     [&](MonKey x) { return g->psi_X(monoX(x)); }),
                 AlgebraElement::unit(A).scaled(g->psi_X(monoX(k))), witX(k));
        }
        return p.done();
    }});

    out.push_back({"galois/psi-x-closed-form", [=]() {
        Probe p("galois/psi-x-closed-form");
        const int m = X->m;
        for (MonKey k : winX) {
            Cyclotomic expect = Cyclotomic::zero(n);
            if (k.q == n - 1 && k.p == static_cast<long>(m) * (1 - n))
                expect = X->lambda_pow(-m);
            p.eq(g->phi_X(multiply(monoX(k), g->delta_X())), expect, witX(k));
            p.eq(g->psi_X(monoX(k)), expect, witX(k));
        }
        return p.done();
    }});

    out.push_back({"galois/phi-x-faithful", [=]() {
        Probe p("galois/phi-x-faithful");
        CMat gram;
        for (MonKey k1 : winX) {
            CVec row;
            for (MonKey k2 : winX) row.push_back(g->phi_X(multiply(monoX(k1), monoX(k2))));
            gram.push_back(std::move(row));
        }
        int r = rank(std::move(gram));
        p.flag(r == static_cast<int>(winX.size()), [] { return std::string("gram rank"); },
               std::to_string(r), std::to_string(winX.size()));
        return p.done();
    }});

    out.push_back({"galois/invariant-unique", [=]() {
        Probe p("galois/invariant-unique");
        // the equation window must reach the psi_X support at |p| = m(n-1)
        auto eqwin = window_monomials(*X, std::max(P, X->m * (n - 1)));
        std::map<MonKey, int> index;
        std::vector<MonKey> keys;
        for (MonKey k : eqwin) {
            const TensorElement& co = g->alpha_mono(k);
            for (const auto& [tk, tc] : co.terms())
                if (index.emplace(tk.a, static_cast<int>(keys.size())).second)
                    keys.push_back(tk.a);
        }
        CMat rows;
        for (MonKey k : eqwin) {
            std::map<MonKey, CVec> by_a;
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
        auto basis = nullspace(std::move(rows), static_cast<int>(keys.size()), n);
        p.flag(basis.size() == 1, [] { return std::string("solution space"); },
               std::to_string(basis.size()), "1");
        if (basis.size() == 1) {
            // the span is psi_X
            Cyclotomic ratio = Cyclotomic::zero(n);
            bool ok = true;
            for (size_t i = 0; i < keys.size(); ++i) {
                Cyclotomic want = g->psi_X(monoX(keys[i]));
                if (ratio.is_zero() && !basis[0][i].is_zero())
                    ratio = want * basis[0][i].inverse();
                if (basis[0][i] * ratio != want) ok = false;
            }
            p.flag(ok && !ratio.is_zero(), [] { return std::string("span vs psi_X"); });
        }
        return p.done();
    }});

    out.push_back({"galois/no-antipode-witness", [=]() {
        Probe p("galois/no-antipode-witness");
        const int m = X->m;
        // anti-multiplicativity would force S_X(y)^n = S_X(y^n) = mu x^{-mn},
        // but the computed value of (-y x^{-m})^n is -mu
        AlgebraElement cand =
            multiply(monoX(MonKey{0, 1}), monoX(MonKey{-m, 0})).scaled(-Cyclotomic::one(n));
        AlgebraElement got = cand.pow(n);
        AlgebraElement want = monoX(MonKey{-static_cast<long>(m) * n, 0}).scaled(g->mu());
        p.eq(got, g->unit_x().scaled(-g->mu()),
             [] { return std::string("(-y x^-m)^n"); });
        bool obstructed = got != want;
        p.flag(g->mu().is_zero() ? !obstructed : obstructed,
               [] { return std::string("(-y x^-m)^n vs mu x^-mn"); }, got.str(), want.str());
        return p.done();
    }});

    out.push_back({"galois/theta-cross-check", [=]() {
        // theta_X closed form vs sigma_X(delta^ . x) through the dual
        Probe p("galois/theta-cross-check");
        auto hd = hat_delta_multiplier(h);
        for (MonKey k : winX)
            p.eq(g->sigma_X(dual_act(*g, hd, monoX(k))), g->theta_X(monoX(k)), witX(k));
        return p.done();
    }});
}

void add_cocycle_check(std::vector<Check>& out, Session& s) {
    GaloisPtr g = s.galois();
    const int P = s.config().window;
    PresentationPtr X = g->pres_x();
    PresentationPtr A = g->pres_a();
    const int n = X->n;
    out.push_back({"cocycle/table", [=]() {
        Probe p("cocycle/table");
        for (long i = -P; i <= P; ++i) {
            for (long r = -P; r <= P; ++r) {
                for (int q = 0; q < n; ++q) {
                    for (int t = 0; t < n; ++t) {
                        Cyclotomic got = g->cocycle({i, q}, {r, t});
                        Cyclotomic expect = Cyclotomic::zero(n);
                        if (q == 0 && t == 0)
                            expect = Cyclotomic::one(n);
                        else if (q + t == n)
                            expect = g->mu() * X->lambda_pow(-r * q);
                        p.eq(got, expect, [A, i, q, r, t] {
                            return mono_str(*A, {i, q}) + " , " + mono_str(*A, {r, t});
                        });
                    }
                }
            }
        }
        return p.done();
    }});
}

void add_rep_checks(std::vector<Check>& out, Session& s) {
    GaloisPtr g = s.galois();
    const int P = s.config().window;
    PresentationPtr X = g->pres_x();
    const int n = X->n, m = X->m;
    auto monoX = [X, n](MonKey k) { return AlgebraElement::monomial(X, k, Cyclotomic::one(n)); };

    out.push_back({"rep/relations", [=]() {
        Probe p("rep/relations");
        for (long i = -P; i <= P; ++i) {
            for (int q = 0; q < n; ++q) {
                RepVector v{{MonKey{i, q}, Cyclotomic::one(n)}};
                auto lhs = g->rep_apply(monoX({0, 1}).pow(n), v);
                auto rhs = g->rep_apply(
                    monoX({static_cast<long>(m) * n, 0}).scaled(g->mu()), v);
                p.flag(lhs == rhs, [X, i, q] { return "e_" + mono_str(*X, {i, q}); });
                auto a = g->rep_apply(multiply(monoX({1, 0}), monoX({0, 1})), v);
                auto b = g->rep_apply(
                    multiply(monoX({0, 1}), monoX({1, 0})).scaled(X->lambda_pow(1)), v);
                p.flag(a == b, [X, i, q] { return "e_" + mono_str(*X, {i, q}); });
                auto c = g->rep_apply(multiply(monoX({-1, 0}), monoX({1, 0})), v);
                p.flag(c == v, [X, i, q] { return "e_" + mono_str(*X, {i, q}); });
            }
        }
        return p.done();
    }});

    out.push_back({"rep/faithful", [=]() {
        Probe p("rep/faithful");
        auto win = window_monomials(*X, P);
        std::map<std::pair<MonKey, MonKey>, int> cols;
        for (MonKey op : win)
            for (MonKey in : win) {
                RepVector v{{in, Cyclotomic::one(n)}};
                for (const auto& [outk, c] : g->rep_apply(monoX(op), v))
                    cols.emplace(std::make_pair(in, outk), 0);
            }
        int idx = 0;
        for (auto& [key, v] : cols) v = idx++;
        CMat mat;
        for (MonKey op : win) {
            CVec row(cols.size(), Cyclotomic::zero(n));
            for (MonKey in : win) {
                RepVector v{{in, Cyclotomic::one(n)}};
                for (const auto& [outk, c] : g->rep_apply(monoX(op), v))
                    row[cols.at(std::make_pair(in, outk))] += c;
            }
            mat.push_back(std::move(row));
        }
        int r = rank(std::move(mat));
        p.flag(r == static_cast<int>(win.size()), [] { return std::string("operator rank"); },
               std::to_string(r), std::to_string(win.size()));
        return p.done();
    }});
}

// ---------------------------------------------------------------- dual ---

void add_dual_checks(std::vector<Check>& out, Session& s) {
    auto ctx = s.reflection();
    GaloisPtr g = s.galois();
    HopfPtr h = s.hopf_a();
    const int P = std::min(s.config().window, 3);
    PresentationPtr A = g->pres_a();
    PresentationPtr X = g->pres_x();
    const int n = A->n, m = A->m;
    auto monoA = [A, n](MonKey k) { return AlgebraElement::monomial(A, k, Cyclotomic::one(n)); };
    auto monoX = [X, n](MonKey k) { return AlgebraElement::monomial(X, k, Cyclotomic::one(n)); };

    out.push_back({"dual/phi-to-F", [=]() {
        // phi(. a^p b^q) has singleton support in the F basis
        Probe p("dual/phi-to-F");
        for (MonKey k : window_monomials(*A, P)) {
            DualElement expect = DualElement::basis(
                A, -k.p, n - 1 - k.q,
                A->lambda_pow(-static_cast<long>(n - 1 - k.q) * k.p));
            bool ok = true;
            for (MonKey z : window_monomials(*A, P + n * m + 2)) {
                if (h->phi(multiply(monoA(z), monoA(k))) != expect.eval(monoA(z))) ok = false;
            }
            p.flag(ok, [A, k] { return mono_str(*A, k); });
        }
        return p.done();
    }});

    out.push_back({"dual/translation", [=]() {
        Probe p("dual/translation");
        for (long i = -P; i <= P; ++i) {
            for (long j = -P; j <= P; ++j) {
                auto prod = dual_multiply(*h, DualElement::e_p(A, i), DualElement::e_p(A, j));
                p.eq(prod, i == j ? DualElement::e_p(A, i) : DualElement::zero(A),
                     [i, j] { return "e_" + std::to_string(i) + ", e_" + std::to_string(j); });
            }
            auto d = d_multiplier(A);
            p.eq(multiplier_times(*h, d, DualElement::e_p(A, i)),
                 times_multiplier(*h, DualElement::e_p(A, i - m), d),
                 [i] { return "d e_" + std::to_string(i); });
        }
        // d^n = 0 against window elements
        auto d = d_multiplier(A);
        for (MonKey k : window_monomials(*A, P)) {
            DualElement cur = DualElement::basis(A, k.p, k.q, Cyclotomic::one(n));
            for (int i = 0; i < n; ++i) cur = multiplier_times(*h, d, cur);
            p.flag(cur.is_zero(), [A, k] { return "d^n F[" + mono_str(*A, k) + "]"; });
        }
        return p.done();
    }});

    out.push_back({"dual/coproduct-covered", [=]() {
        Probe p("dual/coproduct-covered");
        auto d = d_multiplier(A);
        auto c = c_multiplier(A);
        auto win = window_monomials(*A, std::min(P, 2));
        for (MonKey k1 : win) {
            for (MonKey k2 : win) {
                AlgebraElement prod = multiply(monoA(k1), monoA(k2));
                for (long i = -P; i <= P; ++i) {
                    Cyclotomic rhs = Cyclotomic::zero(n);
                    for (long t = -2L * P - n * m; t <= 2L * P + n * m; ++t)
                        rhs += DualElement::e_p(A, t).eval(monoA(k1)) *
                               DualElement::e_p(A, i - t).eval(monoA(k2));
                    p.eq(DualElement::e_p(A, i).eval(prod), rhs, [A, k1, k2] {
                        return mono_str(*A, k1) + " , " + mono_str(*A, k2);
                    });
                }
                p.eq(d.eval(prod),
                     d.eval(monoA(k1)) * c.eval(monoA(k2)) +
                         h->counit_mono(k1) * d.eval(monoA(k2)),
                     [A, k1, k2] { return mono_str(*A, k1) + " , " + mono_str(*A, k2); });
            }
        }
        return p.done();
    }});

    out.push_back({"dual/associativity", [=]() {
        Probe p("dual/associativity");
        std::vector<DualElement> ws;
        for (MonKey k : window_monomials(*A, std::min(P, 1)))
            ws.push_back(DualElement::basis(A, k.p, k.q, Cyclotomic::one(n)));
        for (const auto& w1 : ws)
            for (const auto& w2 : ws)
                for (const auto& w3 : ws)
                    p.eq(dual_multiply(*h, dual_multiply(*h, w1, w2), w3),
                         dual_multiply(*h, w1, dual_multiply(*h, w2, w3)),
                         [] { return std::string("triple"); });
        return p.done();
    }});

    out.push_back({"dual/local-units", [=]() {
        Probe p("dual/local-units");
        for (MonKey k : window_monomials(*A, P)) {
            DualElement w = DualElement::basis(A, k.p, k.q, Cyclotomic::one(n));
            DualElement unit = DualElement::zero(A);
            for (long i = -P - 1; i <= P + 1; ++i) unit += DualElement::e_p(A, i);
            p.eq(dual_multiply(*h, unit, w), w, [A, k] { return mono_str(*A, k); });
        }
        return p.done();
    }});

    out.push_back({"dual/multiplier-associativity", [=]() {
        Probe p("dual/multiplier-associativity");
        auto d = d_multiplier(A);
        auto c = c_multiplier(A);
        std::vector<DualElement> ws;
        for (MonKey k : window_monomials(*A, std::min(P, 1)))
            ws.push_back(DualElement::basis(A, k.p, k.q, Cyclotomic::one(n)));
        for (const auto& mul : {d, c}) {
            for (const auto& w1 : ws) {
                for (const auto& w2 : ws) {
                    p.eq(multiplier_times(*h, mul, dual_multiply(*h, w1, w2)),
                         dual_multiply(*h, multiplier_times(*h, mul, w1), w2),
                         [&] { return mul.name + " . (w1 w2)"; });
                    p.eq(times_multiplier(*h, dual_multiply(*h, w1, w2), mul),
                         dual_multiply(*h, w1, times_multiplier(*h, w2, mul)),
                         [&] { return "(w1 w2) . " + mul.name; });
                    p.eq(dual_multiply(*h, times_multiplier(*h, w1, mul), w2),
                         dual_multiply(*h, w1, multiplier_times(*h, mul, w2)),
                         [&] { return "(w1 . " + mul.name + ") w2"; });
                }
            }
        }
        return p.done();
    }});

    out.push_back({"dual/hatx-local-units", [=]() {
        // right local units of A^ on X^: a broad enough sum of e_t fixes
        // psi_X(. x)
        Probe p("dual/hatx-local-units");
        GaloisPtr gg = g;
        for (MonKey k : window_monomials(*X, std::min(P, 2))) {
            HatX w(gg, HatForm::PsiRight, monoX(k));
            DualElement unit = DualElement::zero(A);
            long reach = std::abs(k.p) + static_cast<long>(n) * m + 2;
            for (long t = -reach; t <= reach; ++t) unit += DualElement::e_p(A, t);
            p.flag(hatx_act_dual(w, unit) == w, [X, k] { return mono_str(*X, k); });
        }
        return p.done();
    }});

    out.push_back({"dual/action-table", [=]() {
        Probe p("dual/action-table");
        auto d = d_multiplier(A);
        for (MonKey k : window_monomials(*X, P)) {
            // e_s action
            for (long t = -P - n * m; t <= P + n * m; ++t) {
                AlgebraElement expect = (k.p == t - static_cast<long>(m) * k.q)
                                            ? monoX(k)
                                            : AlgebraElement::zero(X);
                p.eq(dual_act(*g, DualElement::e_p(A, t), monoX(k)), expect,
                     [X, k, t] { return "e_" + std::to_string(t) + " . " + mono_str(*X, k); });
            }
            // d action: C_q x^p y^{q-1}
            AlgebraElement expect =
                k.q == 0 ? AlgebraElement::zero(X)
                         : monoX(MonKey{k.p, k.q - 1}).scaled(ctx->cq(k.q));
            p.eq(dual_act(*g, d, monoX(k)), expect,
                 [X, k] { return "d . " + mono_str(*X, k); });
        }
        // C_q matches its q-integer closed form
        p.flag(ctx->cq_closed_form() != "(no q-integer form matched)",
               [] { return std::string("C_q closed form"); });
        return p.done();
    }});
}

// ---------------------------------------------------------- reflection ---

struct HatCache {
    std::vector<HatX> hats;
    std::map<std::pair<MonKey, MonKey>, DualElement> br_a;
    std::map<std::pair<MonKey, MonKey>, BElement> br_b;
    std::shared_ptr<const ReflectionContext> ctx;

    const DualElement& a(const HatX& w, const HatX& wp) {
        auto key = std::make_pair(w.rep().terms().begin()->first,
                                  wp.rep().terms().begin()->first);
        auto it = br_a.find(key);
        if (it == br_a.end()) it = br_a.emplace(key, ctx->bracket_Ahat(w, wp)).first;
        return it->second;
    }
    const BElement& b(const HatX& w, const HatX& wp) {
        auto key = std::make_pair(w.rep().terms().begin()->first,
                                  wp.rep().terms().begin()->first);
        auto it = br_b.find(key);
        if (it == br_b.end()) it = br_b.emplace(key, ctx->bracket_B(w, wp)).first;
        return it->second;
    }
};

std::shared_ptr<HatCache> make_hat_cache(Session& s) {
    auto cache = std::make_shared<HatCache>();
    cache->ctx = s.reflection();
    GaloisPtr g = s.galois();
    int hw = cache->ctx->hat_window();
    for (MonKey k : window_monomials(*g->pres_x(), hw))
        cache->hats.push_back(HatX::phi_right(g, g->mono_x(k)));
    return cache;
}

void add_reflection_checks(std::vector<Check>& out, Session& s) {
    auto ctx = s.reflection();
    GaloisPtr g = s.galois();
    HopfPtr h = s.hopf_a();
    PresentationPtr A = g->pres_a();
    PresentationPtr X = g->pres_x();
    const int n = X->n, m = X->m;
    auto cache = make_hat_cache(s);
    const int hw = ctx->hat_window();
    auto wit_pair = [X](const HatX& w, const HatX& wp) {
        return [X, r1 = w.rep(), r2 = wp.rep()] { return r1.str() + " ; " + r2.str(); };
    };

    out.push_back({"reflection/hatx-forms", [=]() {
        Probe p("reflection/hatx-forms");
        for (const auto& w : cache->hats) {
            for (HatForm form : {HatForm::PhiLeft, HatForm::PsiRight, HatForm::PsiLeft}) {
                HatX conv = w.to(form);
                p.flag(conv.to(HatForm::PhiRight).rep() == w.rep(),
                       [&] { return w.rep().str() + " via " + hat_form_name(form); });
                bool same = true;
                for (MonKey z : window_monomials(*X, hw + (n - 1) * m))
                    if (conv.eval_mono(z) != w.eval_mono(z)) same = false;
                p.flag(same, [&] { return w.rep().str(); });
            }
        }
        return p.done();
    }});

    out.push_back({"reflection/b-relations", [=]() {
        Probe p("reflection/b-relations");
        auto win = window_monomials(*X, hw + n * m);
        auto agree = [&](const BElement& b1, const BElement& b2) {
            for (MonKey k : win)
                if (b1.act_right(g->mono_x(k)) != b2.act_right(g->mono_x(k))) return false;
            return true;
        };
        auto one = Cyclotomic::one(n);
        for (long t1 = -hw; t1 <= hw; ++t1) {
            for (long t2 = -hw; t2 <= hw; ++t2)
                p.flag(agree(multiply(ctx->b_basis(t1, 0, one), ctx->b_basis(t2, 0, one)),
                             t1 == t2 ? ctx->b_basis(t1, 0, one) : BElement(ctx.get())),
                       [t1, t2] { return "g_" + std::to_string(t1) + " g_" + std::to_string(t2); });
            p.flag(agree(multiply(ctx->b_basis(0, 1, one), ctx->b_basis(t1, 0, one)),
                         multiply(ctx->b_basis(t1 + m, 0, one), ctx->b_basis(0, 1, one))),
                   [t1] { return "h g_" + std::to_string(t1); });
        }
        BElement hn = ctx->b_basis(0, 1, one);
        for (int i = 1; i < n; ++i) hn = multiply(hn, ctx->b_basis(0, 1, one));
        p.flag(agree(hn, BElement(ctx.get())), [] { return std::string("h^n"); });
        return p.done();
    }});

    out.push_back({"reflection/bracket-b-span", [=]() {
        Probe p("reflection/bracket-b-span");
        // bracket_B throws when an operator leaves span{g_s h^k}
        for (const auto& w : cache->hats) {
            for (const auto& wp : cache->hats) {
                try {
                    cache->b(w, wp);
                    p.flag(true, wit_pair(w, wp));
                } catch (const VerificationError& e) {
                    p.flag(false, wit_pair(w, wp), e.what());
                }
            }
        }
        return p.done();
    }});

    out.push_back({"reflection/surjectivity", [=]() {
        Probe p("reflection/surjectivity");
        for (long t = -hw; t <= hw; ++t) {
            for (int k = 0; k < n; ++k) {
                HatX w = HatX::phi_right(g, g->mono_x({t, n - 1}));
                HatX wp = HatX::phi_right(
                    g, g->mono_x({-t + static_cast<long>(k) * m, n - 1 - k}));
                BElement b = ctx->bracket_B(w, wp);
                bool ok = b.terms().size() == 1 && b.terms().begin()->first == BKey{t, k} &&
                          !b.terms().begin()->second.is_zero();
                p.flag(ok, [t, k] { return "g_" + std::to_string(t) + " h^" + std::to_string(k); },
                       b.str());
            }
        }
        return p.done();
    }});

    out.push_back({"reflection/defining-identity", [=]() {
        Probe p("reflection/defining-identity");
        for (const auto& w : cache->hats)
            for (const auto& wp : cache->hats)
                for (const auto& wpp : cache->hats)
                    p.flag(cache->b(w, wp).act_left(wpp) ==
                               hatx_act_dual(w, cache->a(wp, wpp)),
                           wit_pair(w, wp));
        return p.done();
    }});

    out.push_back({"reflection/morita", [=]() {
        Probe p("reflection/morita");
        for (const auto& w : cache->hats) {
            for (const auto& wp : cache->hats) {
                HatX wm = w.theta(-1);
                for (const auto& wpp : cache->hats) {
                    // w'' . [w, w']_B via S_B^{-1}([w, w']_B) = [w', theta^{-1} w]_B
                    HatX lhs = ctx->bracket_B(wp, wm).act_left(wpp);
                    p.flag(lhs == dual_act_hatx(cache->a(wpp, w), wp), wit_pair(w, wp));
                }
            }
        }
        return p.done();
    }});

    out.push_back({"reflection/flip-law", [=]() {
        Probe p("reflection/flip-law");
        for (const auto& w : cache->hats) {
            for (const auto& wp : cache->hats) {
                HatX wpm = wp.theta(-1);
                for (const auto& wpp : cache->hats)
                    p.flag(dual_act_hatx(cache->a(w, wp), wpp) ==
                               hatx_act_dual(wpp, ctx->bracket_Ahat(wpm, w)),
                           wit_pair(w, wp));
            }
        }
        return p.done();
    }});

    out.push_back({"reflection/twisted-bracket", [=]() {
        Probe p("reflection/twisted-bracket");
        std::vector<DualElement> duals;
        for (MonKey k : window_monomials(*A, std::min(hw, 1)))
            duals.push_back(DualElement::basis(A, k.p, k.q, Cyclotomic::one(n)));
        for (const auto& w : cache->hats)
            for (const auto& wp : cache->hats)
                for (const auto& w1 : duals)
                    p.flag(ctx->bracket_B(hatx_act_dual(w, w1), wp) ==
                               ctx->bracket_B(w, dual_act_hatx(w1, wp)),
                           wit_pair(w, wp));
        return p.done();
    }});

    out.push_back({"reflection/sb-flip", [=]() {
        Probe p("reflection/sb-flip");
        // S_B(g_t h^k) through the canonical bracket realization of each
        // basis operator; well-definedness = the linear extension maps
        // every bracket pair to its flipped bracket.
        std::map<BKey, BElement> sb;
        for (long t = -2 * hw; t <= 2 * hw; ++t) {
            for (int k = 0; k < n; ++k) {
                HatX w = HatX::phi_right(g, g->mono_x({t, n - 1}));
                HatX wp = HatX::phi_right(
                    g, g->mono_x({-t + static_cast<long>(k) * m, n - 1 - k}));
                BElement b = ctx->bracket_B(w, wp);
                if (b.terms().size() != 1) continue;
                sb.emplace(BKey{t, k}, ctx->bracket_B(wp.theta(1), w)
                                           .scaled(b.terms().begin()->second.inverse()));
            }
        }
        for (const auto& w : cache->hats) {
            for (const auto& wp : cache->hats) {
                const BElement& b = cache->b(w, wp);
                BElement lin(ctx.get());
                bool covered = true;
                for (const auto& [k, c] : b.terms()) {
                    auto it = sb.find(k);
                    if (it == sb.end()) { covered = false; break; }
                    lin += it->second.scaled(c);
                }
                p.flag(covered && lin == ctx->bracket_B(wp.theta(1), w), wit_pair(w, wp));
            }
        }
        return p.done();
    }});

    out.push_back({"reflection/eps-b", [=]() {
        Probe p("reflection/eps-b");
        // eps_B on the realized basis, then eps_B([w, w']_B) = w(1) w'(1)
        std::map<BKey, Cyclotomic> eps;
        for (long t = -2 * hw; t <= 2 * hw; ++t) {
            for (int k = 0; k < n; ++k) {
                HatX w = HatX::phi_right(g, g->mono_x({t, n - 1}));
                HatX wp = HatX::phi_right(
                    g, g->mono_x({-t + static_cast<long>(k) * m, n - 1 - k}));
                BElement b = ctx->bracket_B(w, wp);
                if (b.terms().size() != 1) continue;
                Cyclotomic scale = b.terms().begin()->second;
                eps.emplace(BKey{t, k}, w.eval(g->unit_x()) * wp.eval(g->unit_x()) *
                                            scale.inverse());
            }
        }
        for (const auto& w : cache->hats) {
            for (const auto& wp : cache->hats) {
                const BElement& b = cache->b(w, wp);
                Cyclotomic acc = Cyclotomic::zero(n);
                bool covered = true;
                for (const auto& [k, c] : b.terms()) {
                    auto it = eps.find(k);
                    if (it == eps.end()) { covered = false; break; }
                    acc += c * it->second;
                }
                p.flag(covered && acc == w.eval(g->unit_x()) * wp.eval(g->unit_x()),
                       wit_pair(w, wp));
            }
        }
        return p.done();
    }});

    out.push_back({"reflection/phi-b", [=]() {
        Probe p("reflection/phi-b");
        // phi_B through bracket realizations; well-definedness = the basis
        // values reproduce every bracket pair
        std::map<BKey, Cyclotomic> phib;
        for (long t = -2 * hw; t <= 2 * hw; ++t) {
            for (int k = 0; k < n; ++k) {
                HatX w = HatX::phi_right(g, g->mono_x({t, n - 1}));
                HatX wp = HatX::phi_right(
                    g, g->mono_x({-t + static_cast<long>(k) * m, n - 1 - k}));
                BElement b = ctx->bracket_B(w, wp);
                if (b.terms().size() != 1) continue;
                phib.emplace(BKey{t, k},
                             ctx->phi_B_pair(w, wp) * b.terms().begin()->second.inverse());
            }
        }
        for (const auto& w : cache->hats) {
            for (const auto& wp : cache->hats) {
                const BElement& b = cache->b(w, wp);
                Cyclotomic acc = Cyclotomic::zero(n);
                bool covered = true;
                for (const auto& [k, c] : b.terms()) {
                    auto it = phib.find(k);
                    if (it == phib.end()) { covered = false; break; }
                    acc += c * it->second;
                }
                p.flag(covered && acc == ctx->phi_B_pair(w, wp), wit_pair(w, wp));
            }
        }
        // faithful at window scale
        CMat gram;
        std::vector<BKey> winb;
        for (long t = -hw; t <= hw; ++t)
            for (int k = 0; k < n; ++k) winb.push_back(BKey{t, k});
        for (BKey b1 : winb) {
            CVec row;
            for (long t = -hw - (n - 1) * m; t <= hw + (n - 1) * m; ++t) {
                for (int k = 0; k < n; ++k) {
                    BElement prod = multiply(ctx->b_basis(b1.s, b1.k, Cyclotomic::one(n)),
                                             ctx->b_basis(t, k, Cyclotomic::one(n)));
                    Cyclotomic acc = Cyclotomic::zero(n);
                    for (const auto& [kk, cc] : prod.terms()) acc += cc * phib.at(kk);
                    row.push_back(acc);
                }
            }
            gram.push_back(std::move(row));
        }
        int r = rank(std::move(gram));
        p.flag(r == static_cast<int>(winb.size()), [] { return std::string("gram rank"); },
               std::to_string(r), std::to_string(winb.size()));
        return p.done();
    }});

    out.push_back({"reflection/local-units", [=]() {
        Probe p("reflection/local-units");
        BElement unit(ctx.get());
        for (long t = -hw; t <= hw; ++t) unit += ctx->b_basis(t, 0, Cyclotomic::one(n));
        for (const auto& w : cache->hats)
            p.flag(unit.act_left(w) == w, [&] { return w.rep().str(); });
        return p.done();
    }});

    out.push_back({"reflection/vt-closed-form", [=]() {
        Probe p("reflection/vt-closed-form");
        auto small = window_monomials(*X, std::min(hw, 1));
        auto smallA = window_monomials(*A, std::min(hw, 1));
        for (MonKey xk : small) {
            for (MonKey ak : smallA) {
                for (MonKey zk : window_monomials(*X, hw)) {
                    for (MonKey yk : window_monomials(*X, hw)) {
                        AlgebraElement x = g->mono_x(xk), z = g->mono_x(zk), y = g->mono_x(yk);
                        TensorElement v = g->galois_V(TensorElement::of(z, y));
                        Cyclotomic lhs = Cyclotomic::zero(n);
                        for (const auto& [tk, tc] : v.terms())
                            lhs += tc * g->phi_X(multiply(g->mono_x(tk.a), x)) *
                                   h->phi(multiply(g->mono_a(ak), g->mono_a(tk.b)));
                        Cyclotomic rhs = Cyclotomic::zero(n);
                        const TensorElement& bt = g->beta_mono(ak);
                        for (const auto& [bk, bc] : bt.terms())
                            rhs += bc * g->phi_X(multiply(z, multiply(g->mono_x(bk.a), x))) *
                                   g->phi_X(multiply(g->mono_x(bk.b), y));
                        p.eq(lhs, rhs, [A, X, ak, xk] {
                            return mono_str(*A, ak) + " , " + mono_str(*X, xk);
                        });
                    }
                }
            }
        }
        return p.done();
    }});

    out.push_back({"reflection/delta-bracket", [=]() {
        Probe p("reflection/delta-bracket");
        for (const auto& w : cache->hats)
            for (const auto& wp : cache->hats)
                p.eq(cache->a(w, wp).eval(h->modular_element()),
                     w.eval(g->delta_X_inv()) * wp.eval(g->delta_X()), wit_pair(w, wp));
        return p.done();
    }});
}

void add_bigalois_checks(std::vector<Check>& out, Session& s) {
    auto ctx = s.reflection();
    GaloisPtr g = s.galois();
    PresentationPtr A = g->pres_a();
    PresentationPtr X = g->pres_x();
    const int n = X->n;
    const int P = s.config().window;
    const int hw = ctx->hat_window();
    const auto& c = ctx->c_context();
    auto monoX = [X, n](MonKey k) { return AlgebraElement::monomial(X, k, Cyclotomic::one(n)); };
    auto monoC = [pc = c.pres_c, n](MonKey k) {
        return AlgebraElement::monomial(pc, k, Cyclotomic::one(n));
    };
    auto witX = [X](MonKey k) { return [X, k] { return mono_str(*X, k); }; };
    auto witXX = [X](MonKey k1, MonKey k2) {
        return [X, k1, k2] { return mono_str(*X, k1) + " , " + mono_str(*X, k2); };
    };

    out.push_back({"bigalois/c-relations", [=]() {
        Probe p("bigalois/c-relations");
        auto u = monoC({1, 0}), w = monoC({0, 1});
        p.eq(multiply(u, w), multiply(w, u).scaled(c.pres_c->lambda_pow(1)),
             [] { return std::string("u w"); });
        p.eq(AlgebraElement::unit(c.pres_c).scaled(g->mu()) + w.pow(n),
             monoC({static_cast<long>(X->m) * n, 0}).scaled(g->mu()),
             [] { return std::string("w^n"); });
        return p.done();
    }});

    out.push_back({"bigalois/commuting-coactions", [=]() {
        Probe p("bigalois/commuting-coactions");
        for (MonKey k : window_monomials(*X, P)) {
            Tensor3Element lhs = Tensor3Element::expand_leg2(
                c.gamma_mono(k), X, A, [&](MonKey z) -> TensorElement { return g->alpha_mono(z); });
            Tensor3Element rhs = Tensor3Element::expand_leg1(
                g->alpha_mono(k), c.pres_c, X,
                [&](MonKey z) { return c.gamma_mono(z); });
            p.eq(lhs, rhs, witX(k));
        }
        return p.done();
    }});

    out.push_back({"bigalois/gamma-coaction", [=]() {
        Probe p("bigalois/gamma-coaction");
        auto cop_fn = [&](MonKey k) -> TensorElement { return c.hopf_c->coproduct_mono(k); };
        for (MonKey k : window_monomials(*X, P)) {
            TensorElement t = c.gamma_mono(k);
            // (Delta_C (x) iota) gamma = (iota (x) gamma) gamma
            Tensor3Element lhs = Tensor3Element::expand_leg1(t, c.pres_c, c.pres_c, cop_fn);
            Tensor3Element rhs = Tensor3Element::expand_leg2(
                t, c.pres_c, X, [&](MonKey z) { return c.gamma_mono(z); });
            p.eq(lhs, rhs, witX(k));
            // counit leg collapse
            p.eq(t.contract_leg1([&](MonKey z) { return c.hopf_c->counit_mono(z); }), monoX(k),
                 witX(k));
        }
        return p.done();
    }});

    out.push_back({"bigalois/left-galois", [=]() {
        Probe p("bigalois/left-galois");
        for (MonKey k1 : window_monomials(*X, P)) {
            for (MonKey k2 : window_monomials(*X, P)) {
                auto xx = TensorElement::monomial(X, X, k1, k2, Cyclotomic::one(n));
                p.eq(c.galois_left_inv(c.galois_left(xx)), xx, witXX(k1, k2));
                auto cx = TensorElement::monomial(c.pres_c, X, k1, k2, Cyclotomic::one(n));
                p.eq(c.galois_left(c.galois_left_inv(cx)), cx, witXX(k1, k2));
            }
        }
        return p.done();
    }});

    out.push_back({"bigalois/phi-x-c-invariant", [=]() {
        Probe p("bigalois/phi-x-c-invariant");
        for (MonKey k : window_monomials(*X, P)) {
            p.eq(c.gamma_mono(k).contract_leg2(
                     [&](MonKey z) { return g->phi_X(monoX(z)); }),
                 AlgebraElement::unit(c.pres_c).scaled(g->phi_X(monoX(k))), witX(k));
        }
        return p.done();
    }});

    out.push_back({"bigalois/psi-c", [=]() {
        Probe p("bigalois/psi-c");
        for (MonKey k : window_monomials(*X, P)) {
            p.eq(c.gamma_mono(k).contract_leg1([&](MonKey z) { return ctx->psi_C(monoC(z)); }),
                 g->unit_x().scaled(g->psi_X(monoX(k))), witX(k));
        }
        // proportional to the Hopf-solved right integral on C
        Cyclotomic ratio = Cyclotomic::zero(n);
        bool ok = true;
        for (MonKey z : window_monomials(*c.pres_c, std::min(P + n, 6))) {
            Cyclotomic a = ctx->psi_C(monoC(z)), b = c.hopf_c->psi(monoC(z));
            if (ratio.is_zero() && !b.is_zero() && !a.is_zero()) ratio = a * b.inverse();
        }
        for (MonKey z : window_monomials(*c.pres_c, std::min(P + n, 6)))
            if (ctx->psi_C(monoC(z)) != ratio * c.hopf_c->psi(monoC(z))) ok = false;
        p.flag(ok && !ratio.is_zero(), [] { return std::string("psi_C vs psi on C"); });
        return p.done();
    }});

    out.push_back({"bigalois/eps-c", [=]() {
        Probe p("bigalois/eps-c");
        for (MonKey k : window_monomials(*X, hw)) {
            HatX w = HatX::phi_right(g, g->mono_x(k));
            for (MonKey xk : window_monomials(*X, hw))
                p.eq(c.hopf_c->counit(ctx->bracket_C(w, monoX(xk))), w.eval_mono(xk),
                     witXX(k, xk));
        }
        return p.done();
    }});

    out.push_back({"bigalois/s-c", [=]() {
        Probe p("bigalois/s-c");
        for (MonKey wk : window_monomials(*X, hw)) {
            for (MonKey xk : window_monomials(*X, hw)) {
                AlgebraElement lhs = c.hopf_c->antipode(
                    ctx->bracket_C(HatX::phi_right(g, monoX(wk)), monoX(xk)));
                AlgebraElement rhs =
                    ctx->bracket_C(HatX(g, HatForm::PhiLeft, monoX(xk)), monoX(wk));
                p.eq(lhs, rhs, witXX(wk, xk));
            }
        }
        return p.done();
    }});

    out.push_back({"bigalois/pairing-product", [=]() {
        Probe p("bigalois/pairing-product");
        for (MonKey wk : window_monomials(*X, std::min(hw, 2))) {
            HatX w = HatX::phi_right(g, g->mono_x(wk));
            for (MonKey xk : window_monomials(*X, std::min(hw, 2))) {
                for (MonKey yk : window_monomials(*X, std::min(hw, 2))) {
                    AlgebraElement x = monoX(xk), y = monoX(yk);
                    // [w^(1), x]_C [w^(2), y]_C = [w, x y]_C in covered form
                    TensorElement gx = c.gamma(x), gy = c.gamma(y);
                    AlgebraElement prod_c(c.pres_c);
                    for (const auto& [t1, c1] : gx.terms())
                        for (const auto& [t2, c2] : gy.terms()) {
                            Cyclotomic v = w.eval(multiply(monoX(t1.b), monoX(t2.b)));
                            if (v.is_zero()) continue;
                            for (const auto& [ck, cc] : mono_mul(*c.pres_c, t1.a, t2.a))
                                prod_c.add_term(ck, c1 * c2 * cc * v);
                        }
                    p.eq(prod_c, ctx->bracket_C(w, multiply(x, y)), witXX(xk, yk));
                    // and the B pairing is consistent with the product rule
                    for (long t = -hw; t <= hw; ++t) {
                        for (int kk = 0; kk < n; ++kk) {
                            BElement b = ctx->b_basis(t, kk, Cyclotomic::one(n));
                            p.eq(ctx->pairing(b, prod_c), w.eval(b.act_right(multiply(x, y))),
                                 witXX(xk, yk));
                        }
                    }
                }
            }
        }
        return p.done();
    }});
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"hopf-a", "hopf-c",     "galois",    "cocycle",
            "rep",    "dual",       "reflection", "bigalois"};
}

void run_suites(Session& s, const std::vector<std::string>& selection, Report& report) {
    // assemble the full check list lazily per suite
    std::vector<Check> checks;
    auto wants = [&](const std::string& suite) {
        for (const auto& item : selection)
            if (item == "all" || item == suite) return true;
        return false;
    };
    bool need_deep = false;
    for (const auto& item : selection) {
        if (item == "all") need_deep = true;
        for (const std::string& deep : {"hopf", "hopf-c", "dual", "reflection", "bigalois"})
            if (item == deep) need_deep = true;
    }
    // galois labels (roman numerals, lemmas, ...) select individual checks;
    // conservatively build every suite whose prefix or labels could match.
    std::vector<Check> all;
    add_hopf_checks(all, s, /*c_side=*/false);
    add_galois_checks(all, s);
    add_cocycle_check(all, s);
    add_rep_checks(all, s);
    if (need_deep || [&] {
            // any selection item that is not matched by the shallow suites
            // may refer to a deep check; build them too
            for (const auto& item : selection) {
                bool matched = item == "hopf-a" || item == "galois" || item == "cocycle" ||
                               item == "rep";
                for (const auto& c : all)
                    if (item == c.name || item == label_of(c.name)) matched = true;
                if (!matched) return true;
            }
            return false;
        }()) {
        add_hopf_checks(all, s, /*c_side=*/true);
        add_dual_checks(all, s);
        add_reflection_checks(all, s);
        add_bigalois_checks(all, s);
    }
    (void)wants;
    for (auto& c : all)
        if (selected(c.name, selection)) checks.push_back(std::move(c));
    if (checks.empty())
        throw ConfigError("no checks match the suite selection");

    std::vector<CheckResult> results(checks.size());
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&]() {
        for (size_t i; (i = next.fetch_add(1)) < checks.size();) {
            try {
                results[i] = checks[i].run();
            } catch (const VerificationError& e) {
                CheckResult r;
                r.name = checks[i].name;
                r.pass = false;
                r.failures = 1;
                r.witness = e.what();
                results[i] = std::move(r);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    int threads = std::min<int>(thread_cap(), static_cast<int>(checks.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    for (auto& r : results) report.checks.push_back(std::move(r));
}

void fill_structure_table(Session& s, Report& report) {
    HopfPtr h = s.hopf_a();
    GaloisPtr g = s.galois();
    auto ctx = s.reflection();
    PresentationPtr A = h->pres();
    PresentationPtr X = g->pres_x();
    const int n = A->n;
    auto mono = [n](const PresentationPtr& p, MonKey k) {
        return AlgebraElement::monomial(p, k, Cyclotomic::one(n));
    };
    auto& t = report.table;
    t.emplace_back("phi(" + mono_str(*A, {0, n - 1}) + ")", h->phi(mono(A, {0, n - 1})).str());
    t.emplace_back("delta", h->modular_element().str());
    t.emplace_back("sigma(a)", h->sigma(mono(A, {1, 0})).str());
    t.emplace_back("sigma(b)", h->sigma(mono(A, {0, 1})).str());
    t.emplace_back("tau", h->scaling_constant().str());
    t.emplace_back("psi/phi(.delta) ratio", h->psi_delta_ratio().str());
    t.emplace_back("phi_X(" + mono_str(*X, {0, n - 1}) + ")",
                   g->phi_X(mono(X, {0, n - 1})).str());
    MonKey psupp{static_cast<long>(X->m) * (1 - n), n - 1};
    t.emplace_back("psi_X(" + mono_str(*X, psupp) + ")", g->psi_X(mono(X, psupp)).str());
    t.emplace_back("delta_X", g->delta_X().str());
    t.emplace_back("sigma_X(x)", g->sigma_X(mono(X, {1, 0})).str());
    t.emplace_back("sigma_X(y)", g->sigma_X(mono(X, {0, 1})).str());
    t.emplace_back("theta_X(x)", g->theta_X(mono(X, {1, 0})).str());
    t.emplace_back("theta_X(y)", g->theta_X(mono(X, {0, 1})).str());
    for (int q = 1; q < n; ++q)
        t.emplace_back("C_" + std::to_string(q), ctx->cq(q).str());
    t.emplace_back("C_q closed form", ctx->cq_closed_form());
    const auto& c = ctx->c_context();
    AlgebraElement wn = mono(c.pres_c, {0, 1}).pow(n);
    t.emplace_back("C relation w^n", wn.str());
    t.emplace_back("gamma(x)", c.gamma_mono({1, 0}).str());
    t.emplace_back("gamma(y)", c.gamma_mono({0, 1}).str());
}

}  // namespace qgalois
