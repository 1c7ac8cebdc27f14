#include "qgalois/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qgalois {

int euler_phi(int n) {
    int result = n;
    int k = n;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            result -= result / p;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

namespace detail {
namespace {

using IPoly = std::vector<Integer>;  // little-endian, no trailing zeros

IPoly x_pow_minus_one(int n) {
    IPoly p(n + 1, Integer(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

// Exact division of integer polynomials, divisor monic or with unit content.
IPoly divide_exact(IPoly num, const IPoly& den) {
    IPoly quot(num.size() - den.size() + 1, Integer(0));
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        Integer c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        for (size_t j = 0; j < den.size(); ++j)
            num[i + j] -= c * den[j];
    }
    return quot;
}

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
IPoly cyclotomic_poly(int n, std::map<int, IPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    IPoly p = x_pow_minus_one(n);
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_poly(d, memo));
    }
    memo[n] = p;
    return p;
}

std::unique_ptr<CycField> make_field(int n) {
    auto f = std::make_unique<CycField>();
    f->order = n;
    f->degree = euler_phi(n);
    std::map<int, IPoly> memo;
    f->phi = cyclotomic_poly(n, memo);
    // reduction table: z^j mod Phi_n for j = 0 .. 2*degree-2
    const int d = f->degree;
    std::vector<std::vector<Rational>> zp;
    for (int j = 0; j < 2 * d - 1 || j < d; ++j) {
        std::vector<Rational> row(d, Rational(0));
        if (j < d) {
            row[j] = 1;
        } else {
            // z^j = z * z^{j-1}, then reduce the top coefficient
            const auto& prev = zp[j - 1];
            std::vector<Rational> shifted(d + 1, Rational(0));
            for (int i = 0; i < d; ++i) shifted[i + 1] = prev[i];
            Rational top = shifted[d];
            for (int i = 0; i < d; ++i) {
                row[i] = shifted[i] - top * Rational(f->phi[i]);
                row[i].canonicalize();
            }
        }
        zp.push_back(std::move(row));
    }
    f->zpow = std::move(zp);
    return f;
}

}  // namespace

const CycField& cyc_field(int order) {
    if (order < 2) throw ConfigError("cyclotomic order must be >= 2");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_field(order)).first;
    return *it->second;
}

}  // namespace detail

Cyclotomic::Cyclotomic(int order)
    : field_(&detail::cyc_field(order)), c_(field_->degree, Rational(0)) {}

Cyclotomic::Cyclotomic(int order, const Rational& r) : Cyclotomic(order) { c_[0] = r; }

Cyclotomic Cyclotomic::root_power(int order, long e) {
    const auto& f = detail::cyc_field(order);
    long k = e % order;
    if (k < 0) k += order;
    if (static_cast<size_t>(k) < f.zpow.size()) {
        Cyclotomic z(order);
        z.c_ = f.zpow[k];
        return z;
    }
    // k beyond the reduction table (deg Phi_n can be much smaller than n)
    Cyclotomic zeta(order);
    if (f.degree == 1)
        zeta.c_[0] = -Rational(f.phi[0]);
    else
        zeta.c_ = f.zpow[1];
    return zeta.pow(k);
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw DomainError("scalar is not rational: " + str());
    return c_[0];
}

void Cyclotomic::check_same_order(const Cyclotomic& o) const {
    if (field_ != o.field_)
        throw ConfigError("cyclotomic order mismatch: " + std::to_string(order()) +
                          " vs " + std::to_string(o.order()));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same_order(o);
    const int d = field_->degree;
    std::vector<Rational> conv(2 * d - 1, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rational> out(d, Rational(0));
    for (int k = 0; k < 2 * d - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& row = field_->zpow[k];
        for (int i = 0; i < d; ++i)
            if (row[i] != 0) out[i] += conv[k] * row[i];
    }
    c_ = std::move(out);
    return *this;
}

namespace {
// polynomial helpers over Q for the extended Euclid inverse
using QPoly = std::vector<Rational>;

int qdeg(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly qsub_scaled(QPoly a, const QPoly& b, const Rational& c, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    return a;
}
}  // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(zeta_n)");
    // extended Euclid: r0 = Phi, r1 = this; track t with r = s*Phi + t*this
    const int d = field_->degree;
    QPoly r0(field_->phi.size());
    for (size_t i = 0; i < field_->phi.size(); ++i) r0[i] = Rational(field_->phi[i]);
    QPoly r1(c_.begin(), c_.end());
    QPoly t0(1, Rational(0)), t1(1, Rational(1));
    while (true) {
        int d1 = qdeg(r1);
        if (d1 < 0) throw SolverError("cyclotomic inverse: unexpected zero remainder");
        if (d1 == 0) {
            Rational inv = 1 / r1[0];
            Cyclotomic out(order());
            for (int i = 0; i < d && i < static_cast<int>(t1.size()); ++i) {
                out.c_[i] = t1[i] * inv;
                out.c_[i].canonicalize();
            }
            return out;
        }
        int d0 = qdeg(r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(t0, t1);
            continue;
        }
        Rational c = r0[d0] / r1[d1];
        r0 = qsub_scaled(std::move(r0), r1, c, d0 - d1);
        t0 = qsub_scaled(std::move(t0), t1, c, d0 - d1);
        std::swap(r0, r1);
        std::swap(t0, t1);
    }
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this;
    Cyclotomic acc = Cyclotomic::one(order());
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        if (k >>= 1) base *= base;
    }
    return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (field_ != o.field_) return false;
    return c_ == o.c_;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rational c = c_[k];
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        Rational a = neg ? Rational(-c) : c;
        if (k == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "z^" << k;
        }
    }
    return out.str();
}

Cyclotomic lambda_power(int order, int lambda_exp, long e) {
    long k = (static_cast<long>(lambda_exp) % order) * (e % order);
    return Cyclotomic::root_power(order, k);
}

}  // namespace qgalois
