#include "qgalois/element.hpp"

#include <numeric>
#include <sstream>

#include "qgalois/errors.hpp"

namespace qgalois {

Presentation::Presentation(int n_, int m_, int lexp, PowerReduction red, Cyclotomic mu_,
                           std::array<std::string, 2> names)
    : n(n_), m(m_), lambda_exp(lexp), reduction(red), mu(std::move(mu_)), gens(std::move(names)) {
    if (n < 2) throw ConfigError("n must be >= 2");
    if (m < 1) throw ConfigError("m must be >= 1");
    int le = ((lexp % n) + n) % n;
    if (std::gcd(le, n) != 1) throw ConfigError("lambda exponent must be coprime to n");
    if (reduction != PowerReduction::Zero && std::gcd(m, n) != 1)
        throw ConfigError("m and n must be coprime");
}

PresentationPtr Presentation::a_type(int n, int m, int lambda_exp) {
    return std::make_shared<Presentation>(n, m, lambda_exp, PowerReduction::Zero,
                                          Cyclotomic::zero(n),
                                          std::array<std::string, 2>{"a", "b"});
}

PresentationPtr Presentation::x_type(int n, int m, int lambda_exp, const Cyclotomic& mu) {
    return std::make_shared<Presentation>(n, m, lambda_exp, PowerReduction::MuTop, mu,
                                          std::array<std::string, 2>{"x", "y"});
}

PresentationPtr Presentation::c_type(int n, int m, int lambda_exp, const Cyclotomic& mu) {
    return std::make_shared<Presentation>(n, m, lambda_exp, PowerReduction::MuTopMinusOne, mu,
                                          std::array<std::string, 2>{"u", "w"});
}

bool Presentation::equals(const Presentation& o) const {
    return n == o.n && m == o.m && lambda_exp == o.lambda_exp && reduction == o.reduction &&
           mu == o.mu && gens == o.gens;
}

namespace {
void check_same(const PresentationPtr& a, const PresentationPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->equals(*b)) throw ConfigError("presentation mismatch");
}
}  // namespace

AlgebraElement::AlgebraElement(PresentationPtr pres) : pres_(std::move(pres)) {
    if (!pres_) throw ConfigError("null presentation");
}

AlgebraElement AlgebraElement::unit(PresentationPtr pres) {
    return monomial(std::move(pres), 0, 0, Cyclotomic::one(pres->n));
}

AlgebraElement AlgebraElement::monomial(PresentationPtr pres, long p, int q,
                                        const Cyclotomic& coeff) {
    return monomial(std::move(pres), MonKey{p, q}, coeff);
}

AlgebraElement AlgebraElement::monomial(PresentationPtr pres, MonKey k, const Cyclotomic& coeff) {
    AlgebraElement e(std::move(pres));
    if (k.q < 0 || k.q >= e.pres_->n) throw DomainError("monomial exponent out of range");
    e.add_term(k, coeff);
    return e;
}

void AlgebraElement::add_term(MonKey k, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(pres_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    check_same(pres_, o.pres_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    check_same(pres_, o.pres_);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

AlgebraElement AlgebraElement::scaled(const Cyclotomic& c) const {
    AlgebraElement r(pres_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

std::vector<std::pair<MonKey, Cyclotomic>> mono_mul(const Presentation& pres, MonKey k1,
                                                    MonKey k2) {
    std::vector<std::pair<MonKey, Cyclotomic>> out;
    Cyclotomic c = pres.lambda_pow(-static_cast<long>(k1.q) * k2.p);
    long p = k1.p + k2.p;
    int q = k1.q + k2.q;
    if (q < pres.n) {
        out.emplace_back(MonKey{p, q}, c);
        return out;
    }
    int j = q - pres.n;  // 0 <= j <= n-2, a single reduction suffices
    switch (pres.reduction) {
        case PowerReduction::Zero:
            break;
        case PowerReduction::MuTop:
            out.emplace_back(MonKey{p + static_cast<long>(pres.m) * pres.n, j}, c * pres.mu);
            break;
        case PowerReduction::MuTopMinusOne:
            out.emplace_back(MonKey{p + static_cast<long>(pres.m) * pres.n, j}, c * pres.mu);
            out.emplace_back(MonKey{p, j}, -(c * pres.mu));
            break;
    }
    return out;
}

AlgebraElement multiply(const AlgebraElement& e1, const AlgebraElement& e2) {
    check_same(e1.pres_, e2.pres_);
    AlgebraElement r(e1.pres_);
    for (const auto& [k1, c1] : e1.terms_) {
        for (const auto& [k2, c2] : e2.terms_) {
            for (const auto& [k, c] : mono_mul(*e1.pres_, k1, k2)) r.add_term(k, c1 * c2 * c);
        }
    }
    return r;
}

AlgebraElement opposite_multiply(const AlgebraElement& e1, const AlgebraElement& e2) {
    return multiply(e2, e1);
}

AlgebraElement AlgebraElement::invert_monomial() const {
    if (terms_.size() != 1) throw DomainError("inverse of a non-monomial element");
    const auto& [k, c] = *terms_.begin();
    if (k.q != 0) throw DomainError("inverse of a non-invertible monomial (g2 power present)");
    return monomial(pres_, -k.p, 0, c.inverse());
}

AlgebraElement AlgebraElement::pow(long e) const {
    if (e < 0) return invert_monomial().pow(-e);
    AlgebraElement acc = unit(pres_);
    for (long i = 0; i < e; ++i) acc = multiply(acc, *this);
    return acc;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (pres_.get() != o.pres_.get() && !pres_->equals(*o.pres_)) return false;
    return terms_ == o.terms_;
}

std::string mono_str(const Presentation& pres, MonKey k) {
    std::ostringstream out;
    if (k.p != 0) {
        out << pres.gens[0] << "^" << k.p;
        if (k.q != 0) out << "*";
    }
    if (k.q != 0) out << pres.gens[1] << "^" << k.q;
    if (k.p == 0 && k.q == 0) out << "1";
    return out.str();
}

namespace {
// coefficient * monomial as one literal term
std::string term_str(const Presentation& pres, MonKey k, const Cyclotomic& c) {
    std::string mono = mono_str(pres, k);
    bool unit_mono = (k.p == 0 && k.q == 0);
    size_t nterms = 0;
    for (const auto& x : c.coefficients())
        if (x != 0) ++nterms;
    std::string cs = c.str();
    if (unit_mono) return nterms > 1 ? "(" + cs + ")" : cs;
    if (c.is_one()) return mono;
    if ((-c).is_one()) return "-" + mono;
    if (nterms > 1) return "(" + cs + ")*" + mono;
    return cs + "*" + mono;
}
}  // namespace

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string t = term_str(*pres_, k, c);
        if (first) {
            out << t;
            first = false;
        } else if (!t.empty() && t[0] == '-') {
            out << " - " << t.substr(1);
        } else {
            out << " + " << t;
        }
    }
    return out.str();
}

Cyclotomic SparseFunctional::eval(MonKey k) const {
    auto it = values.find(k);
    return it == values.end() ? Cyclotomic::zero(pres->n) : it->second;
}

Cyclotomic SparseFunctional::eval(const AlgebraElement& e) const {
    Cyclotomic acc = Cyclotomic::zero(pres->n);
    for (const auto& [k, c] : e.terms()) acc += c * eval(k);
    return acc;
}

Cyclotomic gaussian_binomial(int k, int j, const Cyclotomic& q) {
    if (j < 0 || j > k) throw DomainError("gaussian binomial index out of range");
    const int order = q.order();
    std::vector<Cyclotomic> row(1, Cyclotomic::one(order));
    for (int kk = 1; kk <= k; ++kk) {
        std::vector<Cyclotomic> next(kk + 1, Cyclotomic::zero(order));
        for (int jj = 0; jj <= kk; ++jj) {
            if (jj > 0) next[jj] += row[jj - 1];
            if (jj < kk) next[jj] += q.pow(jj) * row[jj];
        }
        row = std::move(next);
    }
    return row[j];
}

Cyclotomic q_integer(int k, const Cyclotomic& q) {
    Cyclotomic acc = Cyclotomic::zero(q.order());
    for (int i = 0; i < k; ++i) acc += q.pow(i);
    return acc;
}

std::vector<MonKey> window_monomials(const Presentation& pres, int p_bound) {
    std::vector<MonKey> out;
    for (long p = -p_bound; p <= p_bound; ++p)
        for (int q = 0; q < pres.n; ++q) out.push_back(MonKey{p, q});
    return out;
}

}  // namespace qgalois
