#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "agcodes/field.hpp"

namespace agcodes {

/// Univariate polynomial over a shared finite field.  Coefficients ascending,
/// no trailing zeros; the zero polynomial has an empty coefficient vector and
/// degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(FieldRef F) : F_(std::move(F)) {}
    Polynomial(FieldRef F, std::vector<int> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
        for (int a : c_)
            if (a < 0 || a >= F_->size()) throw std::invalid_argument("coefficient out of range");
        trim();
    }

    static Polynomial zero(FieldRef F) { return Polynomial(std::move(F)); }
    static Polynomial constant(FieldRef F, int a) { return Polynomial(std::move(F), {a}); }
    static Polynomial x(FieldRef F) { return Polynomial(std::move(F), {0, 1}); }

    const FieldRef& field() const { return F_; }
    const std::vector<int>& coeffs() const { return c_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : 0; }
    int leading() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    Polynomial monic() const {
        if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
        return *this * constant(F_, F_->inv(leading()));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.require_same_field(b);
        std::vector<int> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.F_->add(a.coeff(int(i)), b.coeff(int(i)));
        return Polynomial(a.F_, std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const {
        std::vector<int> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = F_->neg(c_[i]);
        return Polynomial(F_, std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_field(b);
        if (a.is_zero() || b.is_zero()) return zero(a.F_);
        std::vector<int> r(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = a.F_->add(r[i + j], a.F_->mul(a.c_[i], b.c_[j]));
        return Polynomial(a.F_, std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_field(a.F_, b.F_) && a.c_ == b.c_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(long long e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        Polynomial r = constant(F_, 1), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    int eval(int a) const {
        int r = 0;
        for (int i = degree(); i >= 0; --i) r = F_->add(F_->mul(r, a), c_[i]);
        return r;
    }

    Polynomial derivative() const {
        if (degree() < 1) return zero(F_);
        std::vector<int> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) {
            int m = F_->from_int(long(i));
            r[i - 1] = F_->mul(c_[i], m);
        }
        return Polynomial(F_, std::move(r));
    }

    /// Coefficients reversed: represents x^degree * f(1/x).
    Polynomial reversed() const {
        std::vector<int> r(c_.rbegin(), c_.rend());
        return Polynomial(F_, std::move(r));
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += "+";
            std::string co = F_->to_string(c_[i]);
            bool paren = co.find('+') != std::string::npos;
            if (paren) co = "(" + co + ")";
            if (i == 0) {
                s += co;
            } else {
                if (c_[i] != 1) s += co + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

    void require_same_field(const Polynomial& o) const {
        if (!same_field(F_, o.F_))
            throw std::invalid_argument("polynomial operands over different fields");
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldRef F_;
    std::vector<int> c_;
};

inline std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    a.require_same_field(b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const FieldRef& F = a.field();
    Polynomial q = Polynomial::zero(F), r = a;
    int linv = F->inv(b.leading());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        int lead = F->mul(r.leading(), linv);
        std::vector<int> mono(shift + 1, 0);
        mono[shift] = lead;
        Polynomial m(F, std::move(mono));
        q = q + m;
        r = r - m * b;
    }
    return {q, r};
}

inline Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    return poly_divmod(a, b).first;
}
inline Polynomial operator%(const Polynomial& a, const Polynomial& b) {
    return poly_divmod(a, b).second;
}

inline bool divides(const Polynomial& d, const Polynomial& a) {
    return poly_divmod(a, d).second.is_zero();
}

/// Monic gcd; gcd(0,0) = 0.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

/// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
inline std::tuple<Polynomial, Polynomial, Polynomial> poly_ext_gcd(const Polynomial& a,
                                                                  const Polynomial& b) {
    const FieldRef& F = a.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(F, 1), s1 = Polynomial::zero(F);
    Polynomial t0 = Polynomial::zero(F), t1 = Polynomial::constant(F, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Polynomial u = Polynomial::constant(F, F->inv(r0.leading()));
    return {r0 * u, s0 * u, t0 * u};
}

/// Inverse of a modulo m (coprime required).
inline Polynomial poly_inv_mod(const Polynomial& a, const Polynomial& m) {
    auto [g, u, v] = poly_ext_gcd(a % m, m);
    (void)v;
    if (g.degree() != 0) throw std::domain_error("element not invertible modulo m");
    return u % m;
}

namespace detail {
/// Monic polynomial of the given degree whose lower coefficients are the
/// base-q digits of counter n.
inline Polynomial monic_from_counter(const FieldRef& F, int degree, long long n) {
    std::vector<int> c(degree + 1, 0);
    for (int i = 0; i < degree; ++i) { c[i] = int(n % F->size()); n /= F->size(); }
    c[degree] = 1;
    return Polynomial(F, std::move(c));
}
}  // namespace detail

inline bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) return false;
    const FieldRef& F = f.field();
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= F->size();
        for (long long n = 0; n < count; ++n)
            if (divides(detail::monic_from_counter(F, d, n), f)) return false;
    }
    return true;
}

/// Monic irreducible factors with multiplicities, ordered by (degree, counter).
/// The leading unit is dropped; factor the monic part of the input.
inline std::vector<std::pair<Polynomial, int>> factor(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    const FieldRef& F = f.field();
    Polynomial work = f.monic();
    std::vector<std::pair<Polynomial, int>> out;
    for (int d = 1; 2 * d <= work.degree(); ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= F->size();
        for (long long n = 0; n < count && work.degree() >= d; ++n) {
            Polynomial cand = detail::monic_from_counter(F, d, n);
            int mult = 0;
            while (true) {
                auto [q, r] = poly_divmod(work, cand);
                if (!r.is_zero()) break;
                work = q;
                ++mult;
            }
            if (mult > 0) out.emplace_back(cand, mult);
        }
    }
    if (work.degree() >= 1) out.emplace_back(work, 1);
    return out;
}

/// Largest e with p^e | f (p monic irreducible, f nonzero).
inline int multiplicity(const Polynomial& f, const Polynomial& p) {
    if (f.is_zero()) throw std::domain_error("zero polynomial has infinite multiplicity");
    int e = 0;
    Polynomial work = f;
    while (true) {
        auto [q, r] = poly_divmod(work, p);
        if (!r.is_zero()) return e;
        work = q;
        ++e;
    }
}

}  // namespace agcodes
