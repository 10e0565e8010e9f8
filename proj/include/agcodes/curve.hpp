#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agcodes/laurent.hpp"

namespace agcodes {

/// The curve is the projective line throughout; everything here hardcodes
/// that model.  The constant is exposed so downstream formulas read as the
/// general shape they specialize.
inline constexpr int kGenus = 0;

/// Image of f in the residue field at p; requires valuation(f, p) >= 0.
inline int evaluate(const RationalFunction& f, const Place& p) {
    auto v = valuation(f, p);
    if (v && *v < 0)
        throw std::domain_error("pole at place " + p.to_string() + ": cannot evaluate");
    if (f.is_zero()) return 0;
    const FieldRef& F = f.field();
    if (p.is_infinity()) {
        int dn = f.num().degree(), dd = f.den().degree();
        if (dn < dd) return 0;
        return F->div(f.num().leading(), f.den().leading());
    }
    const Polynomial& pp = p.poly();
    Polynomial n = f.num() % pp, d = f.den() % pp;
    const FieldRef& kappa = p.residue_field();
    auto embed = [&](const Polynomial& g) {
        if (p.degree() == 1) return g.coeff(0);
        std::vector<int> c = g.coeffs();
        c.resize(size_t(p.degree()), 0);
        return kappa->from_digits(c);
    };
    // reduced fraction: v >= 0 forces den coprime to p
    return kappa->div(embed(n), embed(d));
}

/// Principal divisor (f) = sum of valuations; f must be nonzero.  Its degree
/// is always 0.
inline Divisor divisor_of(const RationalFunction& f) {
    if (f.is_zero()) throw std::domain_error("the zero function has no divisor");
    Divisor d;
    for (const auto& [p, mult] : factor(f.num()))
        d = d + Divisor::single(Place::finite(p), mult);
    for (const auto& [p, mult] : factor(f.den()))
        d = d + Divisor::single(Place::finite(p), -long(mult));
    long at_inf = long(f.den().degree()) - long(f.num().degree());
    if (at_inf != 0) d = d + Divisor::single(Place::infinity(f.field()), at_inf);
    return d;
}

/// Basis of L(E) = {f : (f) + E >= 0} over F_q.  Genus-0 closed form: with
/// E = sum n_p * p + n_inf * inf, every member is Z * h / W where W collects
/// the allowed pole factors p^{n_p} (n_p > 0), Z the forced zero factors
/// p^{-n_p} (n_p < 0), and h runs over 1, x, ..., x^t with
/// t = deg W + n_inf - deg Z from the constraint at infinity.
inline std::vector<RationalFunction> riemann_roch_basis(const Divisor& E, const FieldRef& F) {
    Polynomial W = Polynomial::constant(F, 1), Z = Polynomial::constant(F, 1);
    long n_inf = 0;
    for (const auto& [p, n] : E.terms()) {
        if (p.is_infinity()) {
            n_inf = n;
        } else if (n > 0) {
            W = W * p.poly().pow(n);
        } else {
            Z = Z * p.poly().pow(-n);
        }
    }
    long t = long(W.degree()) + n_inf - long(Z.degree());
    std::vector<RationalFunction> basis;
    for (long i = 0; i <= t; ++i)
        basis.emplace_back(Z * Polynomial::x(F).pow(i), W);
    return basis;
}

inline long riemann_roch_dim(const Divisor& E) {
    return E.degree() >= 0 ? E.degree() + 1 : 0;
}

/// A rational differential h * dx.  On the projective line (dx) = -2 * inf,
/// so every nonzero differential has divisor degree -2; the constructor
/// recomputes and checks that.
class Differential {
public:
    explicit Differential(RationalFunction h) : h_(std::move(h)) {
        if (h_.is_zero()) throw std::domain_error("the zero differential is not allowed");
        div_ = divisor_of(h_) + Divisor::single(Place::infinity(h_.field()), -2);
        if (div_.degree() != 2 * (kGenus - 1))
            throw std::logic_error("differential divisor degree is not 2*(genus-1)");
    }

    static Differential dx(const FieldRef& F) { return Differential(RationalFunction::one(F)); }

    const RationalFunction& h() const { return h_; }
    const FieldRef& field() const { return h_.field(); }
    const Divisor& divisor() const { return div_; }

    Differential scaled(const RationalFunction& f) const { return Differential(h_ * f); }

    std::string to_string() const { return "(" + h_.to_string() + ")*dx"; }

private:
    RationalFunction h_;
    Divisor div_;
};

inline Divisor differential_divisor(const Differential& w) { return w.divisor(); }

inline std::optional<long> valuation(const Differential& w, const Place& p) {
    return w.divisor().coeff(p);
}

/// Coefficient of pi^-1 in the local expansion of w at a degree-1 place; at
/// infinity the chart is t = 1/x with dx = -t^-2 dt.
inline int residue(const Differential& w, const Place& p) {
    if (p.degree() != 1)
        throw std::domain_error("residues are only computed at degree-1 places");
    const FieldRef& F = w.field();
    RationalFunction h = w.h();
    long v;
    if (p.is_infinity()) {
        // w = h(x) dx = -t^-2 h(1/t) dt
        RationalFunction g = h.substitute_reciprocal();
        h = -(g / RationalFunction(Polynomial::x(F).pow(2)));
        // expand the coefficient function of dt in the t-chart, i.e. at (t);
        // reuse the finite-place machinery through the x variable
        auto vv = valuation(h, Place::rational_point(F, 0));
        v = *vv;
        if (v >= 0) return 0;
        auto s = LaurentSeries::expand(h, Place::rational_point(F, 0), -v);
        return s.digit(-1);
    }
    auto vv = valuation(h, p);
    v = *vv;
    if (v >= 0) return 0;
    auto s = LaurentSeries::expand(h, p, -v);
    return s.digit(-1);
}

/// For D = sum of distinct rational finite points (x - a_i), the differential
/// sum_i dx/(x - a_i) has a simple pole with residue 1 at every point of D.
/// Both properties are rechecked on the result.
inline Differential d_special_differential(const Divisor& D) {
    if (D.is_zero()) throw std::invalid_argument("D must be a nonempty sum of points");
    FieldRef F = D.support().front().field();
    RationalFunction h = RationalFunction::zero(F);
    for (const auto& [p, n] : D.terms()) {
        if (p.is_infinity())
            throw std::invalid_argument("the infinite place cannot appear in D");
        if (p.degree() != 1)
            throw std::invalid_argument("D must consist of degree-1 places");
        if (n != 1)
            throw std::invalid_argument(n > 1 ? "repeated place in D" : "negative coefficient in D");
        h = h + RationalFunction(Polynomial::constant(F, 1), p.poly());
    }
    Differential w(h);
    for (const auto& [p, n] : D.terms()) {
        if (w.divisor().coeff(p) != -1)
            throw std::logic_error("constructed differential lacks a simple pole at " +
                                   p.to_string());
        if (residue(w, p) != 1)
            throw std::logic_error("constructed differential has residue != 1 at " +
                                   p.to_string());
    }
    return w;
}

/// All degree-1 finite places, in canonical order; the standard evaluation
/// divisor sum_a (x - a).
inline Divisor all_rational_points(const FieldRef& F) {
    Divisor d;
    for (int a = 0; a < F->size(); ++a)
        d = d + Divisor::single(Place::rational_point(F, a));
    return d;
}

}  // namespace agcodes
