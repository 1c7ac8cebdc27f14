#pragma once

#include <functional>

#include "qgalois/element.hpp"

namespace qgalois {

struct TKey {
    MonKey a, b;
    auto operator<=>(const TKey&) const = default;
};

// Element of (left algebra) (x) (right algebra), legwise normal form.
class TensorElement {
  public:
    TensorElement(PresentationPtr left, PresentationPtr right);

    static TensorElement unit(PresentationPtr left, PresentationPtr right);
    static TensorElement monomial(PresentationPtr left, PresentationPtr right, MonKey a,
                                  MonKey b, const Cyclotomic& coeff);
    static TensorElement of(const AlgebraElement& l, const AlgebraElement& r);

    const PresentationPtr& left() const { return left_; }
    const PresentationPtr& right() const { return right_; }
    const std::map<TKey, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(TKey k, const Cyclotomic& c);
    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    TensorElement scaled(const Cyclotomic& c) const;

    // Legwise product; op_left / op_right reverse the factor order in that
    // leg (the X^op legs of the beta maps).
    friend TensorElement tensor_multiply(const TensorElement& t1, const TensorElement& t2,
                                         bool op_left, bool op_right);
    TensorElement pow(long e, bool op_left = false, bool op_right = false) const;
    TensorElement invert_monomial() const;

    TensorElement swap_legs() const;

    // Replace a leg monomial-wise by an element-valued map.
    TensorElement map_leg1(PresentationPtr new_left,
                           const std::function<AlgebraElement(MonKey)>& f) const;
    TensorElement map_leg2(PresentationPtr new_right,
                           const std::function<AlgebraElement(MonKey)>& f) const;

    // Apply a scalar-valued functional to one leg.
    AlgebraElement contract_leg1(const std::function<Cyclotomic(MonKey)>& f) const;
    AlgebraElement contract_leg2(const std::function<Cyclotomic(MonKey)>& f) const;

    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    std::string str() const;

  private:
    PresentationPtr left_, right_;
    std::map<TKey, Cyclotomic> terms_;
};

inline TensorElement tensor_multiply(const TensorElement& t1, const TensorElement& t2) {
    return tensor_multiply(t1, t2, false, false);
}

struct T3Key {
    MonKey a, b, c;
    auto operator<=>(const T3Key&) const = default;
};

// Three-leg tensors, used by coassociativity / coaction-law checks.
class Tensor3Element {
  public:
    Tensor3Element(PresentationPtr l1, PresentationPtr l2, PresentationPtr l3);

    void add_term(T3Key k, const Cyclotomic& c);
    const std::map<T3Key, Cyclotomic>& terms() const { return terms_; }

    // Expand leg 1 (resp. 2) of a two-leg tensor into two legs.
    static Tensor3Element expand_leg1(const TensorElement& t,
                                      PresentationPtr p1, PresentationPtr p2,
                                      const std::function<TensorElement(MonKey)>& f);
    static Tensor3Element expand_leg2(const TensorElement& t,
                                      PresentationPtr p2, PresentationPtr p3,
                                      const std::function<TensorElement(MonKey)>& f);

    bool operator==(const Tensor3Element& o) const;
    bool operator!=(const Tensor3Element& o) const { return !(*this == o); }

    std::string str() const;

  private:
    PresentationPtr p1_, p2_, p3_;
    std::map<T3Key, Cyclotomic> terms_;
};

}  // namespace qgalois
