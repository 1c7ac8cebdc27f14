#include "qgalois/galois.hpp"

#include "qgalois/errors.hpp"

namespace qgalois {

GaloisObject::GaloisObject(HopfPtr hopf_a, PresentationPtr pres_x)
    : hopf_a_(std::move(hopf_a)),
      pres_x_(std::move(pres_x)),
      alpha_g1_(pres_x_, hopf_a_->pres()),
      alpha_g2_(pres_x_, hopf_a_->pres()),
      beta_g1_(pres_x_, pres_x_),
      beta_g2_(pres_x_, pres_x_),
      phi_x_{pres_x_, {}},
      psi_x_{pres_x_, {}},
      delta_x_(pres_x_),
      delta_x_inv_(pres_x_) {}

std::shared_ptr<const GaloisObject> GaloisObject::build(HopfPtr hopf_a, const Cyclotomic& mu,
                                                        int window) {
    const auto& pa = *hopf_a->pres();
    if (pa.reduction != PowerReduction::Zero)
        throw ConfigError("Galois object construction expects the A-family");
    PresentationPtr px = Presentation::x_type(pa.n, pa.m, pa.lambda_exp, mu);
    auto g = std::shared_ptr<GaloisObject>(new GaloisObject(std::move(hopf_a), std::move(px)));
    g->window_ = window;

    const int n = pa.n, m = pa.m;
    const Cyclotomic one = Cyclotomic::one(n);
    // alpha(x) = x (x) a, alpha(y) = y (x) a^m + 1 (x) b
    g->alpha_g1_ = TensorElement::monomial(g->pres_x_, g->pres_a(), MonKey{1, 0}, MonKey{1, 0}, one);
    g->alpha_g2_ =
        TensorElement::monomial(g->pres_x_, g->pres_a(), MonKey{0, 1}, MonKey{m, 0}, one) +
        TensorElement::monomial(g->pres_x_, g->pres_a(), MonKey{0, 0}, MonKey{0, 1}, one);
    // beta~(a) = x^{-1} (x) x, beta~(b) = -y x^{-m} (x) x^m + 1 (x) y
    g->beta_g1_ = TensorElement::monomial(g->pres_x_, g->pres_x_, MonKey{-1, 0}, MonKey{1, 0}, one);
    g->beta_g2_ =
        TensorElement::monomial(g->pres_x_, g->pres_x_, MonKey{-m, 1},
                                MonKey{m, 0}, -g->pres_x_->lambda_pow(m)) +
        TensorElement::monomial(g->pres_x_, g->pres_x_, MonKey{0, 0}, MonKey{0, 1}, one);

    // closed forms: phi_X = delta-functional at y^{n-1}; delta_X = x^{(n-1)m};
    // psi_X = phi_X(. delta_X)
    g->phi_x_.values.emplace(MonKey{0, n - 1}, one);
    g->delta_x_ = AlgebraElement::monomial(g->pres_x_, static_cast<long>(n - 1) * m, 0, one);
    g->delta_x_inv_ = g->delta_x_.invert_monomial();
    for (MonKey k : window_monomials(*g->pres_x_, window + 2 + (n - 1) * m)) {
        Cyclotomic v = g->phi_x_.eval(multiply(g->mono_x(k), g->delta_x_));
        if (!v.is_zero()) g->psi_x_.values.emplace(k, v);
    }

    g->check_construction();
    return g;
}

void GaloisObject::check_construction() const {
    const auto& px = *pres_x_;
    const int n = px.n, m = px.m;
    const Cyclotomic lam = px.lambda_pow(1);

    // alpha images satisfy the X relations inside X (x) A
    if (tensor_multiply(alpha_g1_, alpha_g2_) != tensor_multiply(alpha_g2_, alpha_g1_).scaled(lam))
        throw VerificationError("coaction images violate x y = lambda y x");
    if (alpha_g2_.pow(n) != alpha_g1_.pow(static_cast<long>(m) * n).scaled(px.mu))
        throw VerificationError("coaction image of y violates the power relation");

    // beta~ is a homomorphism on the A presentation into X^op (x) X
    auto op_mul = [](const TensorElement& s, const TensorElement& t) {
        return tensor_multiply(s, t, /*op_left=*/true, /*op_right=*/false);
    };
    if (op_mul(beta_g1_, beta_g2_) != op_mul(beta_g2_, beta_g1_).scaled(lam))
        throw VerificationError("beta images violate a b = lambda b a");
    if (!beta_g2_.pow(n, /*op_left=*/true).is_zero())
        throw VerificationError("beta image of b is not nilpotent of order n");

    // (iota (x) eps) alpha = id and the Galois-inverse seeds on generators
    for (MonKey k : {MonKey{1, 0}, MonKey{-1, 0}, MonKey{0, 1}}) {
        TensorElement a = alpha_mono(k);
        AlgebraElement back =
            a.contract_leg2([&](MonKey ka) { return hopf_a_->counit_mono(ka); });
        if (back != mono_x(k)) throw VerificationError("(iota (x) eps) alpha is not the identity");
        // z_(0) z_(1)^[1] (x) z_(1)^[2] = 1 (x) z
        if (galois_V_inv(a) != TensorElement::monomial(pres_x_, pres_x_, MonKey{0, 0}, k,
                                                       Cyclotomic::one(px.n)))
            throw VerificationError("V-inverse seed fails on a generator");
    }
    for (MonKey k : {MonKey{1, 0}, MonKey{-1, 0}, MonKey{0, 1}}) {
        // c^[1] c^[2]_(0) (x) c^[2]_(1) = 1 (x) c
        if (galois_V(beta_mono(k)) != TensorElement::monomial(pres_x_, pres_a(), MonKey{0, 0}, k,
                                                              Cyclotomic::one(px.n)))
            throw VerificationError("V seed fails on a generator");
    }
}

const TensorElement& GaloisObject::alpha_mono(MonKey k) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = alpha_cache_.find(k);
        if (it != alpha_cache_.end()) return it->second;
    }
    TensorElement t = tensor_multiply(alpha_g1_.pow(k.p), alpha_g2_.pow(k.q));
    std::lock_guard<std::mutex> lock(cache_mu_);
    return alpha_cache_.emplace(k, std::move(t)).first->second;
}

TensorElement GaloisObject::alpha(const AlgebraElement& x) const {
    TensorElement acc(pres_x_, pres_a());
    for (const auto& [k, c] : x.terms()) acc += alpha_mono(k).scaled(c);
    return acc;
}

const TensorElement& GaloisObject::beta_mono(MonKey k) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = beta_cache_.find(k);
        if (it != beta_cache_.end()) return it->second;
    }
    // multiplicative with the first leg in X^op
    TensorElement t = tensor_multiply(beta_g1_.pow(k.p, /*op_left=*/true),
                                      beta_g2_.pow(k.q, /*op_left=*/true), /*op_left=*/true,
                                      /*op_right=*/false);
    std::lock_guard<std::mutex> lock(cache_mu_);
    return beta_cache_.emplace(k, std::move(t)).first->second;
}

TensorElement GaloisObject::beta(const AlgebraElement& a) const {
    TensorElement acc(pres_x_, pres_x_);
    for (const auto& [k, c] : a.terms()) acc += beta_mono(k).scaled(c);
    return acc;
}

TensorElement GaloisObject::galois_V(const TensorElement& xx) const {
    TensorElement acc(pres_x_, pres_a());
    for (const auto& [k, c] : xx.terms()) {
        TensorElement left =
            TensorElement::monomial(pres_x_, pres_a(), k.a, MonKey{0, 0}, c);
        acc += tensor_multiply(left, alpha_mono(k.b));
    }
    return acc;
}

TensorElement GaloisObject::galois_V_inv(const TensorElement& xa) const {
    TensorElement acc(pres_x_, pres_x_);
    for (const auto& [k, c] : xa.terms()) {
        TensorElement left = TensorElement::monomial(pres_x_, pres_x_, k.a, MonKey{0, 0}, c);
        acc += tensor_multiply(left, beta_mono(k.b));
    }
    return acc;
}

TensorElement GaloisObject::galois_W(const TensorElement& xx) const {
    TensorElement acc(pres_x_, pres_a());
    for (const auto& [k, c] : xx.terms()) {
        TensorElement right =
            TensorElement::monomial(pres_x_, pres_a(), k.b, MonKey{0, 0}, c);
        acc += tensor_multiply(alpha_mono(k.a), right);
    }
    return acc;
}

TensorElement GaloisObject::galois_W_inv(const TensorElement& xa) const {
    // W^{-1}(y (x) c) = beta(S^{-1}(c)) (1 (x) y)
    TensorElement acc(pres_x_, pres_x_);
    for (const auto& [k, c] : xa.terms()) {
        AlgebraElement a = hopf_a_->antipode_inv_mono(k.b);
        TensorElement right = TensorElement::monomial(pres_x_, pres_x_, MonKey{0, 0}, k.a, c);
        acc += tensor_multiply(beta(a), right);
    }
    return acc;
}

namespace {
AlgebraElement extend_on_generators(const PresentationPtr& pres, const AlgebraElement& img_g1,
                                    const AlgebraElement& img_g2, const AlgebraElement& e) {
    AlgebraElement acc(pres);
    for (const auto& [k, c] : e.terms())
        acc += multiply(img_g1.pow(k.p), img_g2.pow(k.q)).scaled(c);
    return acc;
}
}  // namespace

AlgebraElement GaloisObject::sigma_X(const AlgebraElement& x) const {
    const auto lam_inv = pres_x_->lambda_pow(-1);
    return extend_on_generators(pres_x_, mono_x(MonKey{1, 0}).scaled(lam_inv),
                                mono_x(MonKey{0, 1}), x);
}

AlgebraElement GaloisObject::sigma_X_inv(const AlgebraElement& x) const {
    return extend_on_generators(pres_x_, mono_x(MonKey{1, 0}).scaled(pres_x_->lambda_pow(1)),
                                mono_x(MonKey{0, 1}), x);
}

AlgebraElement GaloisObject::theta_X(const AlgebraElement& x) const {
    return extend_on_generators(pres_x_, mono_x(MonKey{1, 0}),
                                mono_x(MonKey{0, 1}).scaled(pres_x_->lambda_pow(pres_x_->m)), x);
}

AlgebraElement GaloisObject::theta_X_inv(const AlgebraElement& x) const {
    return extend_on_generators(pres_x_, mono_x(MonKey{1, 0}),
                                mono_x(MonKey{0, 1}).scaled(pres_x_->lambda_pow(-pres_x_->m)), x);
}

AlgebraElement GaloisObject::sigma_X_prime(const AlgebraElement& x) const {
    return multiply(multiply(delta_x_, sigma_X(x)), delta_x_inv_);
}

AlgebraElement GaloisObject::sigma_X_prime_inv(const AlgebraElement& x) const {
    return multiply(multiply(delta_x_inv_, sigma_X_inv(x)), delta_x_);
}

AlgebraElement GaloisObject::mu_action(const AlgebraElement& x, const AlgebraElement& a) const {
    AlgebraElement acc(pres_x_);
    for (const auto& [k, c] : a.terms()) {
        for (const auto& [tk, tc] : beta_mono(k).terms()) {
            acc += multiply(multiply(mono_x(tk.a), x), mono_x(tk.b)).scaled(c * tc);
        }
    }
    return acc;
}

AlgebraElement GaloisObject::cleft_section(MonKey k) const { return mono_x(k); }

AlgebraElement GaloisObject::cleft_section_inv(MonKey k) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = section_inv_cache_.find(k);
        if (it != section_inv_cache_.end()) return it->second;
    }
    // Solve Phi(c_(1)) PhiBar(c_(2)) = eps(c) 1 monomial-by-monomial; the
    // j = 0 term of the coproduct isolates PhiBar at (p, q).
    AlgebraElement rhs =
        k.q == 0 ? unit_x() : AlgebraElement::zero(pres_x_);
    TensorElement cop = hopf_a_->coproduct_mono(k);
    for (const auto& [tk, tc] : cop.terms()) {
        if (tk.a == MonKey{k.p, 0} && tk.b.q == k.q) continue;  // the j = 0 term
        rhs -= multiply(cleft_section(tk.a), cleft_section_inv(tk.b)).scaled(tc);
    }
    AlgebraElement result = multiply(mono_x(MonKey{-k.p, 0}), rhs);
    std::lock_guard<std::mutex> lock(cache_mu_);
    return section_inv_cache_.emplace(k, std::move(result)).first->second;
}

Cyclotomic GaloisObject::cocycle(MonKey a1, MonKey a2) const {
    // eta(c, c') = Phi(c_(1)) Phi(c'_(1)) PhiBar(c_(2) c'_(2)), a scalar.
    AlgebraElement acc(pres_x_);
    TensorElement c1 = hopf_a_->coproduct_mono(a1);
    TensorElement c2 = hopf_a_->coproduct_mono(a2);
    for (const auto& [k1, v1] : c1.terms()) {
        for (const auto& [k2, v2] : c2.terms()) {
            AlgebraElement tail(pres_x_);
            for (const auto& [kk, vv] : mono_mul(*pres_a(), k1.b, k2.b))
                tail += cleft_section_inv(kk).scaled(vv);
            acc += multiply(multiply(cleft_section(k1.a), cleft_section(k2.a)), tail)
                       .scaled(v1 * v2);
        }
    }
    if (acc.is_zero()) return Cyclotomic::zero(pres_x_->n);
    if (acc.terms().size() != 1 || acc.terms().begin()->first != MonKey{0, 0})
        throw VerificationError("cocycle value is not scalar: " + acc.str());
    return acc.terms().begin()->second;
}

RepVector GaloisObject::rep_apply_mono(MonKey op, const RepVector& v) const {
    const auto& px = *pres_x_;
    RepVector cur = v;
    // y' first, q times
    for (int i = 0; i < op.q; ++i) {
        RepVector next;
        for (const auto& [e, c] : cur) {
            if (e.q < px.n - 1) {
                MonKey out{e.p, e.q + 1};
                Cyclotomic val = c * px.lambda_pow(-e.p);
                auto [it, fresh] = next.emplace(out, val);
                if (!fresh) it->second += val;
            } else {
                MonKey out{e.p + static_cast<long>(px.n) * px.m, 0};
                Cyclotomic val = c * px.mu * px.lambda_pow(-e.p);
                if (!val.is_zero()) {
                    auto [it, fresh] = next.emplace(out, val);
                    if (!fresh) it->second += val;
                }
            }
        }
        cur = std::move(next);
    }
    // then x'^p
    RepVector out;
    for (const auto& [e, c] : cur) {
        if (c.is_zero()) continue;
        out.emplace(MonKey{e.p + op.p, e.q}, c);
    }
    return out;
}

RepVector GaloisObject::rep_apply(const AlgebraElement& x, const RepVector& v) const {
    RepVector acc;
    for (const auto& [k, c] : x.terms()) {
        for (const auto& [e, val] : rep_apply_mono(k, v)) {
            Cyclotomic add = val * c;
            auto [it, fresh] = acc.emplace(e, add);
            if (!fresh) it->second += add;
        }
    }
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second.is_zero()) it = acc.erase(it);
        else ++it;
    }
    return acc;
}

}  // namespace qgalois
