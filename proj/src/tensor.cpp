#include "qgalois/tensor.hpp"

#include <sstream>

#include "qgalois/errors.hpp"

namespace qgalois {

namespace {
void check_same(const PresentationPtr& a, const PresentationPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->equals(*b)) throw ConfigError("tensor leg presentation mismatch");
}
}  // namespace

TensorElement::TensorElement(PresentationPtr left, PresentationPtr right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (!left_ || !right_) throw ConfigError("null presentation");
    if (left_->n != right_->n) throw ConfigError("tensor legs over different scalar fields");
}

TensorElement TensorElement::unit(PresentationPtr left, PresentationPtr right) {
    TensorElement t(std::move(left), std::move(right));
    t.add_term(TKey{}, Cyclotomic::one(t.left_->n));
    return t;
}

TensorElement TensorElement::monomial(PresentationPtr left, PresentationPtr right, MonKey a,
                                      MonKey b, const Cyclotomic& coeff) {
    TensorElement t(std::move(left), std::move(right));
    t.add_term(TKey{a, b}, coeff);
    return t;
}

TensorElement TensorElement::of(const AlgebraElement& l, const AlgebraElement& r) {
    TensorElement t(l.pres(), r.pres());
    for (const auto& [ka, ca] : l.terms())
        for (const auto& [kb, cb] : r.terms()) t.add_term(TKey{ka, kb}, ca * cb);
    return t;
}

void TensorElement::add_term(TKey k, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator-() const {
    TensorElement r(left_, right_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    check_same(left_, o.left_);
    check_same(right_, o.right_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    check_same(left_, o.left_);
    check_same(right_, o.right_);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

TensorElement TensorElement::scaled(const Cyclotomic& c) const {
    TensorElement r(left_, right_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

TensorElement tensor_multiply(const TensorElement& t1, const TensorElement& t2, bool op_left,
                              bool op_right) {
    check_same(t1.left_, t2.left_);
    check_same(t1.right_, t2.right_);
    TensorElement r(t1.left_, t1.right_);
    for (const auto& [k1, c1] : t1.terms_) {
        for (const auto& [k2, c2] : t2.terms_) {
            auto lhs = op_left ? mono_mul(*t1.left_, k2.a, k1.a) : mono_mul(*t1.left_, k1.a, k2.a);
            auto rhs = op_right ? mono_mul(*t1.right_, k2.b, k1.b)
                                : mono_mul(*t1.right_, k1.b, k2.b);
            Cyclotomic c12 = c1 * c2;
            for (const auto& [ka, ca] : lhs)
                for (const auto& [kb, cb] : rhs) r.add_term(TKey{ka, kb}, c12 * ca * cb);
        }
    }
    return r;
}

TensorElement TensorElement::invert_monomial() const {
    if (terms_.size() != 1) throw DomainError("inverse of a non-monomial tensor");
    const auto& [k, c] = *terms_.begin();
    if (k.a.q != 0 || k.b.q != 0) throw DomainError("inverse of a non-invertible tensor monomial");
    return monomial(left_, right_, MonKey{-k.a.p, 0}, MonKey{-k.b.p, 0}, c.inverse());
}

TensorElement TensorElement::pow(long e, bool op_left, bool op_right) const {
    if (e < 0) return invert_monomial().pow(-e, op_left, op_right);
    TensorElement acc = unit(left_, right_);
    for (long i = 0; i < e; ++i) acc = tensor_multiply(acc, *this, op_left, op_right);
    return acc;
}

TensorElement TensorElement::swap_legs() const {
    TensorElement r(right_, left_);
    for (const auto& [k, c] : terms_) r.add_term(TKey{k.b, k.a}, c);
    return r;
}

TensorElement TensorElement::map_leg1(PresentationPtr new_left,
                                      const std::function<AlgebraElement(MonKey)>& f) const {
    TensorElement r(std::move(new_left), right_);
    for (const auto& [k, c] : terms_) {
        AlgebraElement img = f(k.a);
        for (const auto& [ka, ca] : img.terms()) r.add_term(TKey{ka, k.b}, c * ca);
    }
    return r;
}

TensorElement TensorElement::map_leg2(PresentationPtr new_right,
                                      const std::function<AlgebraElement(MonKey)>& f) const {
    TensorElement r(left_, std::move(new_right));
    for (const auto& [k, c] : terms_) {
        AlgebraElement img = f(k.b);
        for (const auto& [kb, cb] : img.terms()) r.add_term(TKey{k.a, kb}, c * cb);
    }
    return r;
}

AlgebraElement TensorElement::contract_leg1(const std::function<Cyclotomic(MonKey)>& f) const {
    AlgebraElement r(right_);
    for (const auto& [k, c] : terms_) r.add_term(k.b, c * f(k.a));
    return r;
}

AlgebraElement TensorElement::contract_leg2(const std::function<Cyclotomic(MonKey)>& f) const {
    AlgebraElement r(left_);
    for (const auto& [k, c] : terms_) r.add_term(k.a, c * f(k.b));
    return r;
}

bool TensorElement::operator==(const TensorElement& o) const { return terms_ == o.terms_; }

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        AlgebraElement lhs = AlgebraElement::monomial(left_, k.a, c);
        std::string piece = lhs.str() + " (x) " + mono_str(*right_, k.b);
        if (first) {
            out << piece;
            first = false;
        } else if (piece[0] == '-') {
            out << " - " << piece.substr(1);
        } else {
            out << " + " << piece;
        }
    }
    return out.str();
}

Tensor3Element::Tensor3Element(PresentationPtr l1, PresentationPtr l2, PresentationPtr l3)
    : p1_(std::move(l1)), p2_(std::move(l2)), p3_(std::move(l3)) {}

void Tensor3Element::add_term(T3Key k, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor3Element Tensor3Element::expand_leg1(const TensorElement& t, PresentationPtr p1,
                                           PresentationPtr p2,
                                           const std::function<TensorElement(MonKey)>& f) {
    Tensor3Element r(std::move(p1), std::move(p2), t.right());
    for (const auto& [k, c] : t.terms()) {
        TensorElement img = f(k.a);
        for (const auto& [tk, tc] : img.terms()) r.add_term(T3Key{tk.a, tk.b, k.b}, c * tc);
    }
    return r;
}

Tensor3Element Tensor3Element::expand_leg2(const TensorElement& t, PresentationPtr p2,
                                           PresentationPtr p3,
                                           const std::function<TensorElement(MonKey)>& f) {
    Tensor3Element r(t.left(), std::move(p2), std::move(p3));
    for (const auto& [k, c] : t.terms()) {
        TensorElement img = f(k.b);
        for (const auto& [tk, tc] : img.terms()) r.add_term(T3Key{k.a, tk.a, tk.b}, c * tc);
    }
    return r;
}

bool Tensor3Element::operator==(const Tensor3Element& o) const { return terms_ == o.terms_; }

std::string Tensor3Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        AlgebraElement lhs = AlgebraElement::monomial(p1_, k.a, c);
        out << (first ? "" : " + ") << lhs.str() << " (x) " << mono_str(*p2_, k.b) << " (x) "
            << mono_str(*p3_, k.c);
        first = false;
    }
    return out.str();
}

}  // namespace qgalois
