#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "agcodes/divisor.hpp"
#include "agcodes/place.hpp"

namespace agcodes {

/// Exact order of vanishing of f at p; std::nullopt encodes +infinity (f = 0).
inline std::optional<long> valuation(const RationalFunction& f, const Place& p) {
    if (f.is_zero()) return std::nullopt;
    if (p.is_infinity()) return long(f.den().degree()) - long(f.num().degree());
    return long(multiplicity(f.num(), p.poly())) - long(multiplicity(f.den(), p.poly()));
}

/// Truncated Laurent expansion at a place.  Digits are residue-field elements
/// at exponents val .. prec_end-1; everything below val is exactly zero, and
/// the leading stored digit is nonzero.  A series whose known digits are all
/// zero stores no digits and only the bound ("zero to precision prec_end").
/// The exact zero is a separate flag.
///
/// At a place of degree d >= 2 the digits are coefficients in F_q[x]/(p(x)),
/// and digit products overflow into higher positions; multiplication and
/// inversion therefore run on lifts in F_q[x]/(p(x)^N) and re-extract digits,
/// rather than convolving residue-field digits.  At the infinite place the
/// series lives in the chart t = 1/x, with uniformizer t.
class LaurentSeries {
public:
    static LaurentSeries zero(const Place& p) {
        LaurentSeries s(p);
        s.exact_zero_ = true;
        return s;
    }

    /// Known to vanish to order >= bound, nothing known beyond.
    static LaurentSeries zero_to_precision(const Place& p, long bound) {
        LaurentSeries s(p);
        s.val_ = bound;
        s.prec_end_ = bound;
        return s;
    }

    static LaurentSeries from_digits(const Place& p, long val, std::vector<int> digits) {
        long end = val + long(digits.size());
        return normalized(p, val, std::move(digits), end);
    }

    /// Expansion of f with N digits starting at the exact valuation.
    static LaurentSeries expand(const RationalFunction& f, const Place& p, long N) {
        if (N < 1) throw std::invalid_argument("expansion precision must be >= 1");
        if (f.is_zero()) return zero(p);
        const FieldRef& F = f.field();
        Polynomial pi = uniformizer_poly(p);
        Polynomial num = f.num(), den = f.den();
        if (p.is_infinity()) {
            RationalFunction g = f.substitute_reciprocal();
            num = g.num();
            den = g.den();
        }
        int a = multiplicity(num, pi), b = multiplicity(den, pi);
        long v = long(a) - long(b);
        Polynomial n0 = num / pi.pow(a);
        Polynomial d0 = den / pi.pow(b);
        Polynomial mod = pi.pow(N);
        Polynomial L = (n0 * poly_inv_mod(d0, mod)) % mod;
        LaurentSeries s(p);
        s.val_ = v;
        s.prec_end_ = v + N;
        s.digits_ = digits_from_poly(p, L, N);
        (void)F;
        return s;
    }

    const Place& place() const { return p_; }
    const FieldRef& residue_field() const { return p_.residue_field(); }
    bool is_exact_zero() const { return exact_zero_; }
    bool has_leading_digit() const { return !exact_zero_ && !digits_.empty(); }

    /// nullopt is +infinity (the exact zero); a series that is merely zero to
    /// known precision has an undetermined valuation.
    std::optional<long> valuation() const {
        if (exact_zero_) return std::nullopt;
        if (digits_.empty())
            throw precision_error("valuation undetermined: series is zero to precision " +
                                  std::to_string(prec_end_));
        return val_;
    }

    /// Digits are known strictly below this exponent.
    long precision_end() const {
        if (exact_zero_)
            throw std::domain_error("the exact zero series has unbounded precision");
        return prec_end_;
    }

    /// A lower bound on the valuation that is always available.
    long valuation_lower_bound() const {
        if (exact_zero_)
            throw std::domain_error("the exact zero series has no finite valuation bound");
        return digits_.empty() ? prec_end_ : val_;
    }

    /// Residue-field digit at exponent k; throws past the known window.
    int digit(long k) const {
        if (exact_zero_) return 0;
        if (k >= prec_end_)
            throw precision_error("digit at exponent " + std::to_string(k) +
                                  " beyond known precision " + std::to_string(prec_end_));
        if (digits_.empty() || k < val_) return 0;
        return digits_[size_t(k - val_)];
    }

    int known_digit_count() const { return int(digits_.size()); }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        a.require_same_place(b);
        if (a.exact_zero_) return b;
        if (b.exact_zero_) return a;
        long end = std::min(a.prec_end_, b.prec_end_);
        long lo = std::min(a.val_, b.val_);
        if (end <= lo) return zero_to_precision(a.p_, end);
        const FieldRef& kappa = a.residue_field();
        std::vector<int> d(size_t(end - lo), 0);
        for (long k = lo; k < end; ++k)
            d[size_t(k - lo)] = kappa->add(a.digit(k), b.digit(k));
        return normalized(a.p_, lo, std::move(d), end);
    }

    LaurentSeries operator-() const {
        if (exact_zero_) return *this;
        LaurentSeries s = *this;
        const FieldRef& kappa = residue_field();
        for (int& d : s.digits_) d = kappa->neg(d);
        return s;
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (-b);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        a.require_same_place(b);
        if (a.exact_zero_ || b.exact_zero_) return zero(a.p_);
        if (a.digits_.empty() || b.digits_.empty())
            return zero_to_precision(a.p_, a.valuation_lower_bound() + b.valuation_lower_bound());
        long n = std::min(a.known_digit_count(), b.known_digit_count());
        Polynomial pi = uniformizer_poly(a.p_);
        Polynomial mod = pi.pow(n);
        Polynomial L = (a.lift(n) * b.lift(n)) % mod;
        LaurentSeries s(a.p_);
        s.val_ = a.val_ + b.val_;
        s.prec_end_ = s.val_ + n;
        s.digits_ = digits_from_poly(a.p_, L, n);
        return s;  // unit times unit: leading digit stays nonzero
    }

    LaurentSeries inverse() const {
        if (exact_zero_) throw std::domain_error("cannot invert the zero series");
        if (digits_.empty())
            throw precision_error("cannot invert a series that is zero to known precision");
        long n = known_digit_count();
        Polynomial pi = uniformizer_poly(p_);
        Polynomial mod = pi.pow(n);
        Polynomial L = poly_inv_mod(lift(n), mod);
        LaurentSeries s(p_);
        s.val_ = -val_;
        s.prec_end_ = s.val_ + n;
        s.digits_ = digits_from_poly(p_, L, n);
        return s;
    }

    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
        return a * b.inverse();
    }

    /// Multiply by pi^delta: same digits at shifted exponents.
    LaurentSeries shifted(long delta) const {
        if (exact_zero_) return *this;
        LaurentSeries s = *this;
        s.val_ += delta;
        s.prec_end_ += delta;
        return s;
    }

    /// Drop knowledge beyond exponent end.
    LaurentSeries truncated(long end) const {
        if (exact_zero_) return *this;
        if (end >= prec_end_) return *this;
        long lo = digits_.empty() ? end : val_;
        if (end <= lo) return zero_to_precision(p_, end);
        std::vector<int> d(digits_.begin(), digits_.begin() + size_t(end - val_));
        return normalized(p_, val_, std::move(d), end);
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        if (!(a.p_ == b.p_)) return false;
        if (a.exact_zero_ != b.exact_zero_) return false;
        if (a.exact_zero_) return true;
        return a.val_ == b.val_ && a.prec_end_ == b.prec_end_ && a.digits_ == b.digits_;
    }

    std::string to_string() const {
        if (exact_zero_) return "0";
        const FieldRef& kappa = residue_field();
        std::string s = "[";
        for (size_t i = 0; i < digits_.size(); ++i) {
            if (i) s += ", ";
            s += kappa->to_string(digits_[i]);
        }
        s += "] * pi^" + std::to_string(digits_.empty() ? prec_end_ : val_) + " (known mod pi^" +
             std::to_string(prec_end_) + ")";
        return s;
    }

    /// Uniformizer as a polynomial in the chart variable: p(x) at a finite
    /// place, t at infinity.
    static Polynomial uniformizer_poly(const Place& p) {
        return p.is_infinity() ? Polynomial::x(p.field()) : p.poly();
    }

private:
    explicit LaurentSeries(const Place& p) : p_(p) {}

    static LaurentSeries normalized(const Place& p, long val, std::vector<int> digits, long end) {
        size_t lead = 0;
        while (lead < digits.size() && digits[lead] == 0) ++lead;
        LaurentSeries s(p);
        if (lead == digits.size()) {
            s.val_ = end;
            s.prec_end_ = end;
            return s;
        }
        s.val_ = val + long(lead);
        s.prec_end_ = end;
        s.digits_.assign(digits.begin() + lead, digits.end());
        return s;
    }

    void require_same_place(const LaurentSeries& o) const {
        if (!(p_ == o.p_))
            throw std::invalid_argument("series operands live at different places");
    }

    Polynomial lift_digit(int d) const {
        const FieldRef& F = p_.field();
        if (p_.degree() == 1) return Polynomial::constant(F, d);
        return Polynomial(F, p_.residue_field()->digits(d));
    }

    /// Sum of the first n digits times powers of the uniformizer, a
    /// polynomial representative of the unit part mod pi^n.
    Polynomial lift(long n) const {
        Polynomial pi = uniformizer_poly(p_);
        Polynomial L = Polynomial::zero(p_.field());
        Polynomial pw = Polynomial::constant(p_.field(), 1);
        for (long i = 0; i < n && i < long(digits_.size()); ++i) {
            L = L + lift_digit(digits_[size_t(i)]) * pw;
            pw = pw * pi;
        }
        return L;
    }

    static std::vector<int> digits_from_poly(const Place& p, Polynomial L, long n) {
        Polynomial pi = uniformizer_poly(p);
        const FieldRef& kappa = p.residue_field();
        std::vector<int> out(size_t(n), 0);
        for (long i = 0; i < n; ++i) {
            if (L.is_zero()) break;
            auto [q, rem] = poly_divmod(L, pi);
            if (p.degree() == 1) {
                out[size_t(i)] = rem.coeff(0);
            } else {
                std::vector<int> c = rem.coeffs();
                c.resize(size_t(p.degree()), 0);
                out[size_t(i)] = kappa->from_digits(c);
            }
            L = q;
        }
        return out;
    }

    Place p_;
    bool exact_zero_ = false;
    long val_ = 0;
    long prec_end_ = 0;
    std::vector<int> digits_;
};

/// Spec'd entry point: expansion with precision N digits from the valuation.
inline LaurentSeries laurent_expand(const RationalFunction& f, const Place& p, long N) {
    return LaurentSeries::expand(f, p, N);
}

}  // namespace agcodes
