#pragma once

#include <map>
#include <string>
#include <vector>

#include "agcodes/curve.hpp"
#include "agcodes/linalg.hpp"

namespace agcodes {

/// Finite-support family of local r x r matrices with rational-function
/// entries: the matrix is the identity at every place not in the support.
/// Stored components always have nonzero determinant, and a component equal
/// to the identity is pruned, so equality of the support maps is a canonical
/// equality.  Global equivalence (isomorphism of the associated bundles) is
/// deliberately NOT quotiented out; splitting_type is the isomorphism
/// invariant.
class AdelicMatrix {
public:
    AdelicMatrix(int rank, FieldRef F) : r_(rank), F_(std::move(F)) {
        if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    }

    static AdelicMatrix identity(int rank, const FieldRef& F) { return AdelicMatrix(rank, F); }

    int rank() const { return r_; }
    const FieldRef& field() const { return F_; }

    /// Value copy with the component at p replaced (identity input erases).
    AdelicMatrix with_component(const Place& p, const RatMat& m) const {
        if (int(m.size()) != r_) throw std::invalid_argument("component has wrong rank");
        for (const auto& row : m)
            if (int(row.size()) != r_) throw std::invalid_argument("component is not square");
        AdelicMatrix out = *this;
        if (rat_is_identity(m)) {
            out.sup_.erase(p);
            return out;
        }
        if (rat_det(m).is_zero())
            throw std::invalid_argument("local component at " + p.to_string() + " is singular");
        out.sup_[p] = m;
        return out;
    }

    bool has_component(const Place& p) const { return sup_.count(p) > 0; }

    RatMat local(const Place& p) const {
        auto it = sup_.find(p);
        return it == sup_.end() ? rat_identity(F_, r_) : it->second;
    }

    std::vector<Place> support() const {
        std::vector<Place> s;
        s.reserve(sup_.size());
        for (const auto& [p, m] : sup_) s.push_back(p);
        return s;
    }

    const std::map<Place, RatMat>& components() const { return sup_; }

    friend AdelicMatrix operator*(const AdelicMatrix& a, const AdelicMatrix& b) {
        if (a.r_ != b.r_ || !same_field(a.F_, b.F_))
            throw std::invalid_argument("adelic matrix operands do not match");
        AdelicMatrix out(a.r_, a.F_);
        std::map<Place, RatMat> merged = a.sup_;
        for (const auto& [p, m] : b.sup_) {
            auto it = merged.find(p);
            if (it == merged.end())
                merged[p] = m;
            else
                it->second = rat_mul(it->second, m);
        }
        for (auto& [p, m] : merged)
            if (!rat_is_identity(m)) out.sup_[p] = std::move(m);
        return out;
    }

    AdelicMatrix inverse() const {
        AdelicMatrix out(r_, F_);
        for (const auto& [p, m] : sup_) out.sup_[p] = rat_inverse(m);
        return out;
    }

    AdelicMatrix transposed() const {
        AdelicMatrix out(r_, F_);
        for (const auto& [p, m] : sup_) out.sup_[p] = rat_transpose(m);
        return out;
    }

    friend bool operator==(const AdelicMatrix& a, const AdelicMatrix& b) {
        return a.r_ == b.r_ && same_field(a.F_, b.F_) && a.sup_ == b.sup_;
    }
    friend bool operator!=(const AdelicMatrix& a, const AdelicMatrix& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "rank " + std::to_string(r_) + " over GF(" + std::to_string(F_->size()) + ")";
        for (const auto& [p, m] : sup_) {
            s += "\n  " + p.to_string() + ": [";
            for (size_t i = 0; i < m.size(); ++i) {
                if (i) s += ",";
                s += "[";
                for (size_t j = 0; j < m[i].size(); ++j) {
                    if (j) s += ",";
                    s += m[i][j].to_string();
                }
                s += "]";
            }
            s += "]";
        }
        return s;
    }

private:
    int r_;
    FieldRef F_;
    std::map<Place, RatMat> sup_;
};

/// The rational function with valuation 1 at p and no other interaction used
/// in idele constructions: p(x) at a finite place, 1/x at infinity.
inline RationalFunction uniformizer(const Place& p) {
    const FieldRef& F = p.field();
    if (p.is_infinity())
        return RationalFunction(Polynomial::constant(F, 1), Polynomial::x(F));
    return RationalFunction(p.poly());
}

/// The characterizing idele of E as a rank-r scalar adelic matrix: at each
/// p in supp(E) the component is pi_p^{ord_p E} times the identity.
inline AdelicMatrix idele_of_divisor(const Divisor& E, int rank, const FieldRef& F) {
    AdelicMatrix g(rank, F);
    for (const auto& [p, n] : E.terms()) {
        RationalFunction u = uniformizer(p).pow(n);
        g = g.with_component(p, rat_scale(rat_identity(F, rank), u));
    }
    return g;
}

inline long order_of_det(const AdelicMatrix& g, const Place& p) {
    if (!g.has_component(p)) return 0;
    auto v = valuation(rat_det(g.local(p)), p);
    return *v;  // determinant is nonzero by the component invariant
}

/// deg(g) = sum over the support of ord_p(det g_p) * deg(p).
inline long degree(const AdelicMatrix& g) {
    long d = 0;
    for (const Place& p : g.support()) d += order_of_det(g, p) * p.degree();
    return d;
}

/// ι_E^sign * g; the degree shifts by sign * rank * deg E, which is asserted.
inline AdelicMatrix twist_by_divisor(const AdelicMatrix& g, const Divisor& E, int sign = 1) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    AdelicMatrix t = idele_of_divisor(sign == 1 ? E : -E, g.rank(), g.field());
    AdelicMatrix out = t * g;
    if (degree(out) != degree(g) + long(sign) * g.rank() * E.degree())
        throw std::logic_error("twist degree bookkeeping failed");
    return out;
}

/// ι_{(ω0)} * (g^{-1})^T.  The transpose is forced by the residue pairing:
/// the lattice dual of g_p^{-1} O^r under the coordinate dot product is
/// g_p^T O^r.  On the projective line the degree is -2r - deg(g), asserted.
inline AdelicMatrix serre_dual(const AdelicMatrix& g, const Differential& w0) {
    AdelicMatrix out =
        idele_of_divisor(w0.divisor(), g.rank(), g.field()) * g.inverse().transposed();
    if (degree(out) != g.rank() * 2 * (kGenus - 1) - degree(g))
        throw std::logic_error("dual degree bookkeeping failed");
    return out;
}

/// Unimodularity of the local components over all points of D: every entry
/// has valuation >= 0 and the determinant has valuation 0.  This is the cheap
/// equivalent of "all multiple orders vanish at D".
inline bool is_balanced(const AdelicMatrix& g, const Divisor& D) {
    for (const auto& [p, n] : D.terms()) {
        if (!g.has_component(p)) continue;
        RatMat m = g.local(p);
        for (const auto& row : m)
            for (const auto& e : row) {
                auto v = valuation(e, p);
                if (v && *v < 0) return false;
            }
        if (order_of_det(g, p) != 0) return false;
    }
    return true;
}

/// Require D to be a sum of distinct finite degree-1 places (the shape every
/// code construction needs).
inline void require_evaluation_divisor(const Divisor& D) {
    if (D.is_zero()) throw std::invalid_argument("evaluation divisor is empty");
    for (const auto& [p, n] : D.terms()) {
        if (p.is_infinity() || p.degree() != 1 || n != 1)
            throw std::invalid_argument(
                "evaluation divisor must be a sum of distinct finite rational points");
    }
}

/// ι_{(ω0)+D} * g^{-1}: the matrix whose evaluation code is the differential
/// code of g.  Requires g balanced at D and ω0 D-special; the result is
/// again balanced at D (simple pole of ω0 cancels the +1 from D), asserted.
inline AdelicMatrix omega_dual_matrix(const AdelicMatrix& g, const Differential& w0,
                                      const Divisor& D) {
    require_evaluation_divisor(D);
    if (!is_balanced(g, D)) throw std::invalid_argument("g is not balanced at D");
    for (const auto& [p, n] : D.terms())
        if (w0.divisor().coeff(p) != -1 || residue(w0, p) != 1)
            throw std::invalid_argument("differential is not D-special");
    AdelicMatrix out =
        idele_of_divisor(w0.divisor() + D, g.rank(), g.field()) * g.inverse().transposed();
    if (!is_balanced(out, D)) throw std::logic_error("dual matrix lost balance at D");
    return out;
}

}  // namespace agcodes
