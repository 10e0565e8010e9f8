#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace agcodes {

class Field;
using FieldRef = std::shared_ptr<const Field>;

/// A finite field, either F_p or an extension of another Field by a monic
/// irreducible modulus.  Elements are represented by int indices 0..q-1.
/// For a prime field the index is the residue itself; for an extension of a
/// base of size b, the index encodes the coefficient vector (c_0,...,c_{d-1})
/// of the element as a polynomial in the generator t, index = sum c_i * b^i.
/// Consequence: a base-field element keeps its index under embedding, and 0/1
/// are 0/1 in every field.
///
/// Instances are immutable and shared through FieldRef.  Operations on
/// elements of structurally different fields are a logic error; use
/// same_field to check.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldRef prime(int p);
    static FieldRef extension(const FieldRef& base, const std::vector<int>& modulus);
    /// Canonical field of order q = p^d: F_p extended by the first monic
    /// irreducible of degree d in coefficient-counter order.
    static FieldRef gf(int q);

    int size() const { return q_; }
    int characteristic() const { return p_; }
    bool is_prime_field() const { return base_ == nullptr; }
    const FieldRef& base() const { return base_; }
    /// Modulus coefficients over the base, ascending, monic; empty for F_p.
    const std::vector<int>& modulus() const { return mod_; }
    int extension_degree() const { return is_prime_field() ? 1 : int(mod_.size()) - 1; }
    int degree_over_prime() const;

    int zero() const { return 0; }
    int one() const { return 1; }

    int add(int a, int b) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long e) const;

    /// n mod p, as an element of the prime subfield (index-stable).
    int from_int(long long n) const;

    /// Coefficient vector over the base field, length extension_degree().
    std::vector<int> digits(int a) const;
    int from_digits(const std::vector<int>& d) const;

    /// Prime fields print as decimal; extensions as polynomials in t, e.g.
    /// "t+1".  Sums/negations never appear with signs (mod-p representatives).
    std::string to_string(int a) const;
    /// e.g. "GF(5)" or "GF(4) = GF(2)[t]/(t^2+t+1)".
    std::string describe() const;

    bool structurally_equal(const Field& o) const;

private:
    Field(int p, int q, FieldRef base, std::vector<int> mod)
        : p_(p), q_(q), base_(std::move(base)), mod_(std::move(mod)) {}

    void check(int a) const {
        if (a < 0 || a >= q_) throw std::out_of_range("field element index out of range");
    }
    void build_tables();

    // Plain polynomial helpers over the base field, coefficient vectors
    // ascending with no trailing zeros.  Used for modulus validation and for
    // direct (untabled) arithmetic.
    static std::vector<int> pv_trim(std::vector<int> v);
    static std::vector<int> pv_add(const Field& F, const std::vector<int>& a,
                                   const std::vector<int>& b);
    static std::vector<int> pv_mul(const Field& F, const std::vector<int>& a,
                                   const std::vector<int>& b);
    static std::vector<int> pv_rem(const Field& F, std::vector<int> a,
                                   const std::vector<int>& b);
    static bool modulus_irreducible(const Field& base, const std::vector<int>& mod);

    int mul_direct(int a, int b) const;
    int inv_direct(int a) const;

    int p_;
    int q_;
    FieldRef base_;
    std::vector<int> mod_;

    // Eager tables for small fields (q <= 256); empty otherwise.
    std::vector<int> add_tab_;
    std::vector<int> mul_tab_;
    std::vector<int> neg_tab_;
    std::vector<int> inv_tab_;
};

inline bool same_field(const FieldRef& a, const FieldRef& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->structurally_equal(*b);
}

inline bool Field::structurally_equal(const Field& o) const {
    if (p_ != o.p_ || q_ != o.q_) return false;
    if (is_prime_field() != o.is_prime_field()) return false;
    if (is_prime_field()) return true;
    return mod_ == o.mod_ && base_->structurally_equal(*o.base_);
}

inline int Field::degree_over_prime() const {
    int d = 1;
    for (const Field* f = this; !f->is_prime_field(); f = f->base_.get())
        d *= f->extension_degree();
    return d;
}

inline FieldRef Field::prime(int p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be >= 2");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
    auto f = std::shared_ptr<Field>(new Field(p, p, nullptr, {}));
    f->build_tables();
    return f;
}

inline FieldRef Field::extension(const FieldRef& base, const std::vector<int>& modulus) {
    if (!base) throw std::invalid_argument("extension requires a base field");
    std::vector<int> mod = pv_trim(modulus);
    if (int(mod.size()) < 3) throw std::invalid_argument("modulus degree must be >= 2");
    if (mod.back() != base->one()) throw std::invalid_argument("modulus must be monic");
    for (int c : mod) base->check(c);
    if (!modulus_irreducible(*base, mod))
        throw std::invalid_argument("modulus is reducible over the base field");
    int d = int(mod.size()) - 1;
    long long q = 1;
    for (int i = 0; i < d; ++i) {
        q *= base->size();
        if (q > (1 << 20)) throw std::invalid_argument("field too large");
    }
    auto f = std::shared_ptr<Field>(new Field(base->characteristic(), int(q), base, mod));
    f->build_tables();
    return f;
}

inline FieldRef Field::gf(int q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    int p = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    int d = 0;
    long long t = q;
    while (t % p == 0) { t /= p; ++d; }
    if (t != 1) throw std::invalid_argument("field order must be a prime power");
    FieldRef fp = prime(p);
    if (d == 1) return fp;
    // Counter order: coefficients c_0..c_{d-1} are the base-p digits of n.
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (long long n = 0; n < total; ++n) {
        std::vector<int> mod(d + 1, 0);
        long long m = n;
        for (int i = 0; i < d; ++i) { mod[i] = int(m % p); m /= p; }
        mod[d] = 1;
        if (modulus_irreducible(*fp, mod)) return extension(fp, mod);
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

inline void Field::build_tables() {
    if (q_ > 256) return;
    add_tab_.assign(size_t(q_) * q_, 0);
    mul_tab_.assign(size_t(q_) * q_, 0);
    neg_tab_.assign(q_, 0);
    inv_tab_.assign(q_, 0);
    if (is_prime_field()) {
        for (int a = 0; a < q_; ++a) {
            neg_tab_[a] = (q_ - a) % q_;
            for (int b = 0; b < q_; ++b) {
                add_tab_[size_t(a) * q_ + b] = (a + b) % q_;
                mul_tab_[size_t(a) * q_ + b] = int((long long)a * b % q_);
            }
        }
    } else {
        // digit-wise add/neg, polynomial mul/inv
        int b = base_->size();
        int d = extension_degree();
        auto digs = [&](int a) {
            std::vector<int> v(d);
            for (int i = 0; i < d; ++i) { v[i] = a % b; a /= b; }
            return v;
        };
        auto undigs = [&](const std::vector<int>& v) {
            int a = 0;
            for (int i = d - 1; i >= 0; --i) a = a * b + (i < int(v.size()) ? v[i] : 0);
            return a;
        };
        for (int a = 0; a < q_; ++a) {
            auto va = digs(a);
            std::vector<int> vn(d);
            for (int i = 0; i < d; ++i) vn[i] = base_->neg(va[i]);
            neg_tab_[a] = undigs(vn);
            for (int c = 0; c < q_; ++c) {
                auto vc = digs(c);
                std::vector<int> vs(d);
                for (int i = 0; i < d; ++i) vs[i] = base_->add(va[i], vc[i]);
                add_tab_[size_t(a) * q_ + c] = undigs(vs);
                auto prod = pv_rem(*base_, pv_mul(*base_, pv_trim(va), pv_trim(vc)), mod_);
                mul_tab_[size_t(a) * q_ + c] = undigs(prod);
            }
        }
    }
    for (int a = 1; a < q_; ++a) {
        // q is small here; scan is fine and avoids a second code path
        for (int c = 1; c < q_; ++c)
            if (mul_tab_[size_t(a) * q_ + c] == 1) { inv_tab_[a] = c; break; }
    }
}

inline int Field::add(int a, int b) const {
    check(a);
    check(b);
    if (!add_tab_.empty()) return add_tab_[size_t(a) * q_ + b];
    if (is_prime_field()) return (a + b) % q_;
    std::vector<int> r(extension_degree());
    int bs = base_->size(), x = a, y = b;
    for (int i = 0; i < extension_degree(); ++i) {
        r[i] = base_->add(x % bs, y % bs);
        x /= bs;
        y /= bs;
    }
    return from_digits(r);
}

inline int Field::neg(int a) const {
    check(a);
    if (!neg_tab_.empty()) return neg_tab_[a];
    if (is_prime_field()) return (q_ - a) % q_;
    std::vector<int> r(extension_degree());
    int bs = base_->size(), x = a;
    for (int i = 0; i < extension_degree(); ++i) {
        r[i] = base_->neg(x % bs);
        x /= bs;
    }
    return from_digits(r);
}

inline int Field::mul(int a, int b) const {
    check(a);
    check(b);
    if (!mul_tab_.empty()) return mul_tab_[size_t(a) * q_ + b];
    return mul_direct(a, b);
}

inline int Field::mul_direct(int a, int b) const {
    if (is_prime_field()) return int((long long)a * b % q_);
    auto prod = pv_rem(*base_, pv_mul(*base_, pv_trim(digits(a)), pv_trim(digits(b))), mod_);
    prod.resize(extension_degree(), 0);
    return from_digits(prod);
}

inline int Field::inv(int a) const {
    check(a);
    if (a == 0) throw std::domain_error("division by zero in finite field");
    if (!inv_tab_.empty()) return inv_tab_[a];
    return inv_direct(a);
}

inline int Field::inv_direct(int a) const {
    // a^(q-2); fine at the sizes direct mode serves
    return pow(a, q_ - 2);
}

inline int Field::pow(int a, long long e) const {
    check(a);
    if (e < 0) return pow(inv(a), -e);
    int r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

inline int Field::from_int(long long n) const {
    long long v = n % p_;
    if (v < 0) v += p_;
    return int(v);
}

inline std::vector<int> Field::digits(int a) const {
    check(a);
    if (is_prime_field()) return {a};
    std::vector<int> v(extension_degree());
    int bs = base_->size();
    for (int i = 0; i < extension_degree(); ++i) {
        v[i] = a % bs;
        a /= bs;
    }
    return v;
}

inline int Field::from_digits(const std::vector<int>& d) const {
    if (is_prime_field()) {
        if (d.size() != 1) throw std::invalid_argument("prime field digit vector must have length 1");
        check(d[0]);
        return d[0];
    }
    if (int(d.size()) > extension_degree())
        throw std::invalid_argument("digit vector longer than extension degree");
    int a = 0, bs = base_->size();
    for (int i = int(d.size()) - 1; i >= 0; --i) {
        base_->check(d[i]);
        a = a * bs + d[i];
    }
    return a;
}

inline std::string Field::to_string(int a) const {
    check(a);
    if (is_prime_field()) return std::to_string(a);
    auto v = digits(a);
    std::string s;
    for (int i = int(v.size()) - 1; i >= 0; --i) {
        if (v[i] == 0) continue;
        if (!s.empty()) s += "+";
        std::string c = base_->to_string(v[i]);
        bool paren = c.find('+') != std::string::npos;
        if (i == 0) {
            s += paren ? "(" + c + ")" : c;
        } else {
            if (v[i] != 1) s += (paren ? "(" + c + ")" : c) + "*";
            s += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

inline std::string Field::describe() const {
    if (is_prime_field()) return "GF(" + std::to_string(q_) + ")";
    std::string m;
    for (int i = int(mod_.size()) - 1; i >= 0; --i) {
        if (mod_[i] == 0) continue;
        if (!m.empty()) m += "+";
        std::string c = base_->to_string(mod_[i]);
        if (i == 0) {
            m += c;
        } else {
            if (mod_[i] != 1) m += c + "*";
            m += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return "GF(" + std::to_string(q_) + ") = " + base_->describe() + "[t]/(" + m + ")";
}

inline std::vector<int> Field::pv_trim(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

inline std::vector<int> Field::pv_add(const Field& F, const std::vector<int>& a,
                                      const std::vector<int>& b) {
    std::vector<int> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    return pv_trim(r);
}

inline std::vector<int> Field::pv_mul(const Field& F, const std::vector<int>& a,
                                      const std::vector<int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return pv_trim(r);
}

inline std::vector<int> Field::pv_rem(const Field& F, std::vector<int> a,
                                      const std::vector<int>& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    int linv = F.inv(b.back());
    while (a.size() >= b.size()) {
        int lead = F.mul(a.back(), linv);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = F.sub(a[shift + i], F.mul(lead, b[i]));
        a = pv_trim(std::move(a));
        if (a.size() < b.size()) break;
    }
    return a;
}

inline bool Field::modulus_irreducible(const Field& base, const std::vector<int>& mod) {
    int d = int(mod.size()) - 1;
    int q = base.size();
    // Trial division by all monic polynomials of degree 1..d/2.
    for (int deg = 1; 2 * deg <= d; ++deg) {
        long long count = 1;
        for (int i = 0; i < deg; ++i) count *= q;
        for (long long n = 0; n < count; ++n) {
            std::vector<int> cand(deg + 1, 0);
            long long m = n;
            for (int i = 0; i < deg; ++i) { cand[i] = int(m % q); m /= q; }
            cand[deg] = 1;
            if (pv_rem(base, mod, cand).empty()) return false;
        }
    }
    return true;
}

}  // namespace agcodes
