#pragma once

#include <string>
#include <vector>

#include "agcodes/errors.hpp"
#include "agcodes/parse.hpp"
#include "agcodes/poly.hpp"

namespace agcodes {

/// A closed point of the projective line over F_q: either a monic irreducible
/// polynomial (finite place) or the point at infinity.  The residue field is
/// built once at construction.
///
/// Canonical ordering: finite places before infinity; finite places by degree,
/// then lexicographically by the negated coefficient sequence, constant
/// coefficient first.  This makes the rational places (x-a) sort by a =
/// 0, 1, 2, ... which fixes the evaluation-point order of codes.
class Place {
public:
    static Place finite(const Polynomial& p) {
        if (!p.is_monic()) throw std::invalid_argument("place polynomial must be monic");
        if (!is_irreducible(p)) throw std::invalid_argument("place polynomial must be irreducible");
        Place pl;
        pl.F_ = p.field();
        pl.poly_ = p;
        pl.kappa_ = p.degree() == 1 ? pl.F_ : Field::extension(pl.F_, p.coeffs());
        return pl;
    }

    static Place infinity(const FieldRef& F) {
        Place pl;
        pl.F_ = F;
        pl.inf_ = true;
        pl.poly_ = Polynomial::zero(F);
        pl.kappa_ = F;
        return pl;
    }

    /// The place (x - a), a given as a field element index.
    static Place rational_point(const FieldRef& F, int a) {
        return finite(Polynomial(F, {F->neg(a), 1}));
    }

    bool is_infinity() const { return inf_; }
    const Polynomial& poly() const {
        if (inf_) throw std::domain_error("the infinite place has no polynomial");
        return poly_;
    }
    const FieldRef& field() const { return F_; }
    const FieldRef& residue_field() const { return kappa_; }
    int degree() const { return inf_ ? 1 : poly_.degree(); }

    /// For a degree-1 finite place (x - a), the point a.
    int point() const {
        if (inf_ || degree() != 1) throw std::domain_error("place is not a finite rational point");
        return F_->neg(poly_.coeff(0));
    }

    std::string to_string() const { return inf_ ? "(inf)" : "(" + poly_.to_string() + ")"; }

    friend bool operator==(const Place& a, const Place& b) {
        if (!same_field(a.F_, b.F_)) return false;
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.poly_ == b.poly_;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

    friend bool operator<(const Place& a, const Place& b) {
        if (a.inf_ != b.inf_) return b.inf_;
        if (a.inf_) return false;
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        const FieldRef& F = a.F_;
        for (int i = 0; i < a.degree(); ++i) {
            int ka = F->neg(a.poly_.coeff(i));
            int kb = F->neg(b.poly_.coeff(i));
            if (ka != kb) return ka < kb;
        }
        return false;
    }

private:
    Place() = default;

    FieldRef F_;
    bool inf_ = false;
    Polynomial poly_;
    FieldRef kappa_;
};

/// Parse "(inf)" or "(<monic irreducible>)"; non-monic input is normalized to
/// the monic generator of the same place.
inline Place parse_place(std::string_view text, const FieldRef& F, int line = 1, int column = 1) {
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw parse_error("empty place", line, column);
    std::string_view body = text.substr(b, e - b + 1);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    if (body == "inf" || body == "infinity" || body == "oo") return Place::infinity(F);
    Polynomial p = parse_polynomial(body, F, line, column + int(b));
    if (p.degree() < 1) throw parse_error("place polynomial must be nonconstant", line, column);
    p = p.monic();
    if (!is_irreducible(p))
        throw parse_error("place polynomial must be irreducible: " + p.to_string(), line, column);
    return Place::finite(p);
}

}  // namespace agcodes
