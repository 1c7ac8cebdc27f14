#include "qgalois/dual.hpp"

#include <set>
#include <sstream>

#include "qgalois/errors.hpp"

namespace qgalois {

DualElement DualElement::basis(PresentationPtr p, long i, int j, const Cyclotomic& c) {
    DualElement w{std::move(p), {}};
    w.add_term(MonKey{i, j}, c);
    return w;
}

DualElement DualElement::e_p(PresentationPtr p, long i) {
    return basis(std::move(p), i, 0, Cyclotomic::one(p->n));
}

Cyclotomic DualElement::eval(MonKey k) const {
    auto it = terms.find(k);
    return it == terms.end() ? Cyclotomic::zero(pres->n) : it->second;
}

Cyclotomic DualElement::eval(const AlgebraElement& a) const {
    Cyclotomic acc = Cyclotomic::zero(pres->n);
    for (const auto& [k, c] : a.terms()) acc += c * eval(k);
    return acc;
}

void DualElement::add_term(MonKey k, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

DualElement DualElement::operator-() const {
    DualElement r{pres, {}};
    for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
    return r;
}

DualElement& DualElement::operator+=(const DualElement& o) {
    for (const auto& [k, c] : o.terms) add_term(k, c);
    return *this;
}

DualElement& DualElement::operator-=(const DualElement& o) {
    for (const auto& [k, c] : o.terms) add_term(k, -c);
    return *this;
}

DualElement DualElement::scaled(const Cyclotomic& c) const {
    DualElement r{pres, {}};
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms) r.add_term(k, v * c);
    return r;
}

std::string DualElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        std::string cs = c.str();
        out << (first ? "" : " + ");
        out << "(" << cs << ")*F[" << k.p << "," << k.q << "]";
        first = false;
    }
    return out.str();
}

Cyclotomic DualMultiplier::eval(const AlgebraElement& a) const {
    Cyclotomic acc = Cyclotomic::zero(a.pres()->n);
    for (const auto& [k, c] : a.terms()) acc += c * rule(k);
    return acc;
}

namespace {

Cyclotomic convolve_at(const HopfStructure& h, const std::function<Cyclotomic(MonKey)>& f1,
                       const std::function<Cyclotomic(MonKey)>& f2, MonKey at) {
    Cyclotomic acc = Cyclotomic::zero(h.pres()->n);
    for (const auto& [tk, tc] : h.coproduct_mono(at).terms()) {
        Cyclotomic v1 = f1(tk.a);
        if (v1.is_zero()) continue;
        acc += tc * v1 * f2(tk.b);
    }
    return acc;
}

DualElement collect(const HopfStructure& h, const std::set<long>& p_candidates,
                    const std::function<Cyclotomic(MonKey)>& f1,
                    const std::function<Cyclotomic(MonKey)>& f2) {
    DualElement out = DualElement::zero(h.pres());
    for (long p : p_candidates) {
        for (int q = 0; q < h.pres()->n; ++q) {
            MonKey at{p, q};
            out.add_term(at, convolve_at(h, f1, f2, at));
        }
    }
    return out;
}

}  // namespace

DualElement dual_multiply(const HopfStructure& h, const DualElement& w1, const DualElement& w2) {
    std::set<long> ps;
    for (const auto& [k, c] : w1.terms) ps.insert(k.p);
    auto f1 = [&](MonKey k) { return w1.eval(k); };
    auto f2 = [&](MonKey k) { return w2.eval(k); };
    return collect(h, ps, f1, f2);
}

DualElement multiplier_times(const HopfStructure& h, const DualMultiplier& m,
                             const DualElement& w) {
    // (m w)(r, s) needs (r + j m, s - j) in supp(w)
    std::set<long> ps;
    for (const auto& [k, c] : w.terms)
        for (int j = 0; j < h.pres()->n; ++j) ps.insert(k.p - static_cast<long>(j) * h.pres()->m);
    auto f1 = [&](MonKey k) { return m.eval(k); };
    auto f2 = [&](MonKey k) { return w.eval(k); };
    return collect(h, ps, f1, f2);
}

DualElement times_multiplier(const HopfStructure& h, const DualElement& w,
                             const DualMultiplier& m) {
    std::set<long> ps;
    for (const auto& [k, c] : w.terms) ps.insert(k.p);
    auto f1 = [&](MonKey k) { return w.eval(k); };
    auto f2 = [&](MonKey k) { return m.eval(k); };
    return collect(h, ps, f1, f2);
}

Cyclotomic multiplier_product_eval(const HopfStructure& h, const DualMultiplier& m1,
                                   const DualMultiplier& m2, MonKey at) {
    return convolve_at(
        h, [&](MonKey k) { return m1.eval(k); }, [&](MonKey k) { return m2.eval(k); }, at);
}

AlgebraElement dual_act(const GaloisObject& g, const DualElement& w, const AlgebraElement& x) {
    return g.alpha(x).contract_leg2([&](MonKey k) { return w.eval(k); });
}

AlgebraElement dual_act(const GaloisObject& g, const DualMultiplier& m, const AlgebraElement& x) {
    return g.alpha(x).contract_leg2([&](MonKey k) { return m.eval(k); });
}

DualElement dual_S(const HopfStructure& h, const DualElement& w) {
    // (w o S)(r, s) needs S(a^r b^s) ~ (-r - m s, s) in supp(w)
    DualElement out = DualElement::zero(h.pres());
    for (const auto& [k, c] : w.terms) {
        MonKey at{-k.p - static_cast<long>(h.pres()->m) * k.q, k.q};
        out.add_term(at, w.eval(h.antipode_mono(at)));
    }
    return out;
}

DualElement dual_S_inv(const HopfStructure& h, const DualElement& w) {
    DualElement out = DualElement::zero(h.pres());
    for (const auto& [k, c] : w.terms) {
        MonKey at{-k.p - static_cast<long>(h.pres()->m) * k.q, k.q};
        out.add_term(at, w.eval(h.antipode_inv_mono(at)));
    }
    return out;
}

DualMultiplier d_multiplier(const PresentationPtr& pres) {
    const int n = pres->n;
    return DualMultiplier{"d", [n](MonKey k) {
                              return k.q == 1 ? Cyclotomic::one(n) : Cyclotomic::zero(n);
                          }};
}

DualMultiplier c_multiplier(const PresentationPtr& pres) {
    PresentationPtr p = pres;
    return DualMultiplier{"c", [p](MonKey k) {
                              return k.q == 0 ? p->lambda_pow(-k.p) : Cyclotomic::zero(p->n);
                          }};
}

DualMultiplier hat_delta_multiplier(const HopfPtr& hopf) {
    HopfPtr h = hopf;
    return DualMultiplier{"delta_hat", [h](MonKey k) {
                              AlgebraElement mono = AlgebraElement::monomial(
                                  h->pres(), k, Cyclotomic::one(h->pres()->n));
                              return h->counit(h->sigma_inv(mono));
                          }};
}

}  // namespace qgalois
