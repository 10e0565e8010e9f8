#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "agcodes/poly.hpp"

namespace agcodes {

/// Reduced fraction of polynomials: denominator monic, gcd(num, den) = 1,
/// zero is 0/1.  Immutable value semantics.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::constant(num_.field(), 1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        num_.require_same_field(den_);
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        reduce();
    }

    static RationalFunction zero(const FieldRef& F) {
        return RationalFunction(Polynomial::zero(F));
    }
    static RationalFunction one(const FieldRef& F) {
        return RationalFunction(Polynomial::constant(F, 1));
    }
    static RationalFunction constant(const FieldRef& F, int a) {
        return RationalFunction(Polynomial::constant(F, a));
    }
    static RationalFunction x(const FieldRef& F) { return RationalFunction(Polynomial::x(F)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const FieldRef& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("division by zero rational function");
        return one(field()) / *this;
    }
    RationalFunction pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction r = one(field()), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    /// Substitute x -> 1/x and clear powers: f(1/t) written as a reduced
    /// fraction in the same variable.  Used for expansions at infinity.
    RationalFunction substitute_reciprocal() const {
        if (is_zero()) return *this;
        const FieldRef& F = field();
        int dn = num_.degree(), dd = den_.degree();
        Polynomial rn = num_.reversed(), rd = den_.reversed();
        // f(1/t) = t^(dd-dn) * rn(t)/rd(t)
        int shift = dd - dn;
        if (shift >= 0) return RationalFunction(rn * Polynomial::x(F).pow(shift), rd);
        return RationalFunction(rn, rd * Polynomial::x(F).pow(-shift));
    }

    std::string to_string(const std::string& var = "x") const {
        std::string n = num_.to_string(var);
        if (den_.is_one()) return n;
        bool np = num_.degree() > 0;
        bool dp = den_.degree() > 0;
        std::string s = np ? "(" + n + ")" : n;
        std::string d = den_.to_string(var);
        return s + "/" + (dp ? "(" + d + ")" : d);
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(num_.field(), 1);
            return;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        int u = den_.leading();
        if (u != 1) {
            Polynomial ui = Polynomial::constant(num_.field(), num_.field()->inv(u));
            num_ = num_ * ui;
            den_ = den_ * ui;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

}  // namespace agcodes
