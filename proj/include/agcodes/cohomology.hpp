#pragma once

#include <string>
#include <vector>

#include "agcodes/adele.hpp"

namespace agcodes {

/// Exact basis of the global sections H0(g) = {f in F^r : g_p f integral at
/// every p}, as r-tuples of rational functions over the constant field.
struct SectionSpace {
    int rank = 0;
    std::vector<std::vector<RationalFunction>> basis;
};

/// Membership test for the defining predicate of H0(g): g_p * f is integral
/// at all support places and f itself is integral everywhere else.
inline bool is_section(const AdelicMatrix& g, const std::vector<RationalFunction>& f) {
    int r = g.rank();
    if (int(f.size()) != r) throw std::invalid_argument("section tuple has wrong rank");
    bool all_zero = true;
    for (const auto& fj : f)
        if (!fj.is_zero()) all_zero = false;
    if (all_zero) return true;
    // support places: the transformed vector must be integral
    for (const Place& p : g.support()) {
        RatMat m = g.local(p);
        for (int i = 0; i < r; ++i) {
            RationalFunction w = RationalFunction::zero(g.field());
            for (int j = 0; j < r; ++j) w = w + m[i][j] * f[j];
            auto v = valuation(w, p);
            if (v && *v < 0) return false;
        }
    }
    // everywhere else the matrix is the identity: f itself must be integral,
    // so every pole of every component must lie in the support
    for (const auto& fj : f) {
        if (fj.is_zero()) continue;
        for (const auto& [pp, mult] : factor(fj.den())) {
            Place p = Place::finite(pp);
            if (!g.has_component(p)) return false;
        }
        if (fj.num().degree() > fj.den().degree() &&
            !g.has_component(Place::infinity(g.field())))
            return false;
    }
    return true;
}

/// Solve for H0(g) exactly.  Ambient space: componentwise L(C) with
/// C = sum_p max(0, -min_val(g_p^{-1})) * p over the support, which provably
/// contains every section.  Constraints: all negative-exponent digits of
/// (g_p * f)_i vanish; each residue-field digit contributes deg(p) linear
/// rows over the constant field.  The kernel is computed exactly.
inline SectionSpace h0_basis(const AdelicMatrix& g) {
    const FieldRef& F = g.field();
    int r = g.rank();
    std::vector<Place> support = g.support();

    Divisor C;
    for (const Place& p : support) {
        RatMat inv = rat_inverse(g.local(p));
        long m = 0;
        bool seen = false;
        for (const auto& row : inv)
            for (const auto& e : row) {
                if (e.is_zero()) continue;
                long v = *valuation(e, p);
                m = seen ? std::min(m, v) : v;
                seen = true;
            }
        long c = std::max(0L, -m);
        if (c > 0) C = C + Divisor::single(p, c);
    }

    std::vector<RationalFunction> ambient = riemann_roch_basis(C, F);
    int M = int(ambient.size());
    int unknowns = r * M;

    // count rows first, then fill
    struct Window {
        Place p;
        int i;
        long lo;  // digits [lo, 0) are constrained
    };
    std::vector<Window> windows;
    std::vector<std::vector<std::vector<RationalFunction>>> products;  // [place][i][j*M+m]
    for (const Place& p : support) {
        RatMat mat = g.local(p);
        std::vector<std::vector<RationalFunction>> rows(r);
        for (int i = 0; i < r; ++i) {
            long lo = 0;
            rows[i].resize(size_t(unknowns), RationalFunction::zero(F));
            for (int j = 0; j < r; ++j) {
                if (mat[i][j].is_zero()) continue;
                for (int m = 0; m < M; ++m) {
                    RationalFunction w = mat[i][j] * ambient[size_t(m)];
                    rows[i][size_t(j * M + m)] = w;
                    if (!w.is_zero()) lo = std::min(lo, *valuation(w, p));
                }
            }
            if (lo < 0) windows.push_back({p, i, lo});
        }
        products.push_back(std::move(rows));
    }

    long total_rows = 0;
    for (const auto& w : windows) total_rows += (-w.lo) * w.p.degree();
    FqMatrix A(F, int(total_rows), unknowns);

    int row0 = 0;
    for (const auto& w : windows) {
        size_t pidx = 0;
        while (!(support[pidx] == w.p)) ++pidx;
        int d = w.p.degree();
        const FieldRef& kappa = w.p.residue_field();
        for (int u = 0; u < unknowns; ++u) {
            const RationalFunction& prod = products[pidx][size_t(w.i)][size_t(u)];
            if (prod.is_zero()) continue;
            long v = *valuation(prod, w.p);
            if (v >= 0) continue;
            LaurentSeries s = LaurentSeries::expand(prod, w.p, -v);
            for (long k = std::max(v, w.lo); k < 0; ++k) {
                int digit = s.digit(k);
                if (digit == 0) continue;
                std::vector<int> coords =
                    d == 1 ? std::vector<int>{digit} : kappa->digits(digit);
                for (int t = 0; t < d; ++t) {
                    int row = row0 + int(k - w.lo) * d + t;
                    A.at(row, u) = coords[size_t(t)];
                }
            }
        }
        row0 += int(-w.lo) * d;
    }

    FqMatrix kernel = A.null_space();
    SectionSpace out;
    out.rank = r;
    for (int c = 0; c < kernel.cols(); ++c) {
        std::vector<RationalFunction> f(size_t(r), RationalFunction::zero(F));
        for (int j = 0; j < r; ++j)
            for (int m = 0; m < M; ++m) {
                int lambda = kernel.at(j * M + m, c);
                if (lambda != 0)
                    f[size_t(j)] =
                        f[size_t(j)] + RationalFunction::constant(F, lambda) * ambient[size_t(m)];
            }
        out.basis.push_back(std::move(f));
    }
    return out;
}

inline long h0_dim(const AdelicMatrix& g) { return long(h0_basis(g).basis.size()); }

/// h1 through the dual side: h0 of ι_{(ω0)} g^{-1}.  The value does not
/// depend on the chosen nonzero differential, which tests assert.
inline long h1_dim(const AdelicMatrix& g, const Differential& w0) {
    return h0_dim(serre_dual(g, w0));
}
inline long h1_dim(const AdelicMatrix& g) { return h1_dim(g, Differential::dx(g.field())); }

/// h0 - h1, asserted equal to deg(g) - r * (genus - 1).
inline long euler_char(const AdelicMatrix& g) {
    long chi = h0_dim(g) - h1_dim(g);
    if (chi != degree(g) - long(g.rank()) * (kGenus - 1))
        throw std::logic_error("Euler characteristic disagrees with degree formula");
    return chi;
}

namespace detail {

inline std::vector<long> splitting_type_bounded(const AdelicMatrix& g, long Mb) {
    int r = g.rank();
    Divisor inf = Divisor::single(Place::infinity(g.field()));
    // h(m) = sum_i max(0, a_i + m + 1), sampled for m = -Mb-1 .. Mb
    std::vector<long> h(size_t(2 * Mb + 2), 0);
    for (long m = -Mb - 1; m <= Mb; ++m)
        h[size_t(m + Mb + 1)] = h0_dim(twist_by_divisor(g, m * inf, 1));
    // A(v) = #{i : a_i >= v} = h(-v) - h(-v-1); multiplicity of v is
    // A(v) - A(v+1), read from the top down
    auto A = [&](long v) -> long {
        if (v > Mb) return 0;
        return h[size_t(-v + Mb + 1)] - h[size_t(-v + Mb)];
    };
    std::vector<long> type;
    for (long v = Mb; v >= -Mb; --v)
        for (long c = 0; c < A(v) - A(v + 1); ++c) type.push_back(v);
    long sum = 0;
    for (long a : type) sum += a;
    if (int(type.size()) != r || sum != degree(g))
        throw std::logic_error("splitting profile is inconsistent");
    return type;  // descending by construction
}

}  // namespace detail

/// The multiset (a_1 >= ... >= a_r) with the bundle of g isomorphic to the
/// direct sum of the O(a_i): recovered from the jump profile of
/// m -> h0(g * ι_{m∞}), using h(m) - h(m-1) = #{i : a_i >= -m}.  The sweep
/// window |deg(g)| + r + 1 covers every balanced instance; one widened retry
/// handles extreme types before declaring the profile inconsistent.
inline std::vector<long> splitting_type(const AdelicMatrix& g) {
    long Mb = std::abs(degree(g)) + g.rank() + 1;
    try {
        return detail::splitting_type_bounded(g, Mb);
    } catch (const std::logic_error&) {
        return detail::splitting_type_bounded(g, 2 * Mb + 2);
    }
}

struct SemistabilityReport {
    bool semistable = false;
    long degree = 0;
    int rank = 1;
    std::vector<long> type;  // descending

    /// slope as an exact pair (degree, rank)
    std::pair<long, int> slope() const { return {degree, rank}; }
};

/// On the projective line a bundle is semistable iff its splitting type is
/// constant; that equivalence is specific to genus 0, so any other genus is
/// refused rather than silently mishandled.
inline SemistabilityReport is_semistable(const AdelicMatrix& g) {
    if (kGenus != 0)
        throw std::logic_error("splitting-type semistability test is only valid for genus 0");
    SemistabilityReport rep;
    rep.degree = degree(g);
    rep.rank = g.rank();
    rep.type = splitting_type(g);
    rep.semistable = rep.type.front() == rep.type.back();
    return rep;
}

}  // namespace agcodes
