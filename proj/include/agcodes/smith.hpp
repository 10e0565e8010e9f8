#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "agcodes/adele.hpp"

namespace agcodes {

using LaurentMat = std::vector<std::vector<LaurentSeries>>;

/// Diagonalization M * g_p * N = diag(pi^{n_1}, ..., pi^{n_r}) over the local
/// ring at one place, to a stated precision.  M and N are unimodular
/// (determinant valuation 0), the orders are ascending, and their sum equals
/// ord_p(det g_p) exactly (the exact value is computed from the rational
/// entries and cross-checked).
struct LocalSmithForm {
    Place place;
    std::vector<long> orders;
    LaurentMat left;    // M
    LaurentMat right;   // N
    long precision;     // entries of M * g_p * N are certified mod pi^precision
};

namespace detail {

inline LaurentMat series_identity(const Place& p, int r, long end) {
    auto one = LaurentSeries::expand(RationalFunction::one(p.field()), p, std::max(1L, end));
    auto zero = LaurentSeries::zero(p);
    LaurentMat m(r, std::vector<LaurentSeries>(r, zero));
    for (int i = 0; i < r; ++i) m[i][i] = one.truncated(end);
    return m;
}

inline LaurentMat expand_matrix(const RatMat& a, const Place& p, long cutoff) {
    int r = int(a.size());
    LaurentMat m(r, std::vector<LaurentSeries>(r, LaurentSeries::zero(p)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (a[i][j].is_zero()) continue;
            long v = *valuation(a[i][j], p);
            long n = cutoff - v;
            if (n < 1) {
                m[i][j] = LaurentSeries::zero_to_precision(p, cutoff);
            } else {
                m[i][j] = LaurentSeries::expand(a[i][j], p, n);
            }
        }
    return m;
}

inline LaurentMat series_mul(const LaurentMat& a, const LaurentMat& b, const Place& p) {
    int n = int(a.size());
    LaurentMat c(n, std::vector<LaurentSeries>(n, LaurentSeries::zero(p)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_exact_zero()) continue;
            for (int j = 0; j < n; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
        }
    return c;
}

inline LocalSmithForm smith_attempt(const RatMat& A, const Place& p, long rel_precision,
                                    long exact_det_order) {
    int r = int(A.size());
    long vmin = 0;
    bool any = false;
    for (const auto& row : A)
        for (const auto& e : row)
            if (!e.is_zero()) {
                long v = *valuation(e, p);
                vmin = any ? std::min(vmin, v) : v;
                any = true;
            }
    long cutoff = vmin + rel_precision;
    LaurentMat a = expand_matrix(A, p, cutoff);
    LaurentMat M = series_identity(p, r, cutoff - vmin);
    LaurentMat N = series_identity(p, r, cutoff - vmin);

    for (int k = 0; k < r; ++k) {
        // pivot: certified minimal valuation in the trailing submatrix
        int pi = -1, pj = -1;
        long pv = 0;
        for (int i = k; i < r; ++i)
            for (int j = k; j < r; ++j) {
                if (!a[i][j].has_leading_digit()) continue;
                long v = *a[i][j].valuation();
                if (pi < 0 || v < pv) { pi = i; pj = j; pv = v; }
            }
        if (pi < 0)
            throw precision_error("no pivot certifiable in trailing submatrix");
        for (int i = k; i < r; ++i)
            for (int j = k; j < r; ++j)
                if (!a[i][j].has_leading_digit() && !a[i][j].is_exact_zero() &&
                    a[i][j].valuation_lower_bound() <= pv)
                    throw precision_error("pivot minimality not certifiable");
        if (pi != k) { std::swap(a[pi], a[k]); std::swap(M[pi], M[k]); }
        if (pj != k) {
            for (int i = 0; i < r; ++i) std::swap(a[i][pj], a[i][k]);
            for (int i = 0; i < r; ++i) std::swap(N[i][pj], N[i][k]);
        }
        LaurentSeries pinv = a[k][k].inverse();
        for (int i = k + 1; i < r; ++i) {
            if (a[i][k].is_exact_zero()) continue;
            LaurentSeries f = a[i][k] * pinv;
            for (int j = 0; j < r; ++j) a[i][j] = a[i][j] - f * a[k][j];
            for (int j = 0; j < r; ++j) M[i][j] = M[i][j] - f * M[k][j];
        }
        for (int j = k + 1; j < r; ++j) {
            if (a[k][j].is_exact_zero()) continue;
            LaurentSeries f = a[k][j] * pinv;
            for (int i = 0; i < r; ++i) a[i][j] = a[i][j] - f * a[i][k];
            for (int i = 0; i < r; ++i) N[i][j] = N[i][j] - f * N[i][k];
        }
    }

    std::vector<long> orders(r);
    for (int k = 0; k < r; ++k) {
        if (!a[k][k].has_leading_digit())
            throw precision_error("diagonal order not certifiable");
        orders[k] = *a[k][k].valuation();
    }
    if (std::accumulate(orders.begin(), orders.end(), 0L) != exact_det_order)
        throw precision_error("order sum disagrees with exact determinant order");

    // scale rows so the diagonal is pi^{n_k} on the nose (to precision)
    for (int k = 0; k < r; ++k) {
        LaurentSeries unit_inv = a[k][k].shifted(-orders[k]).inverse();
        for (int j = 0; j < r; ++j) {
            a[k][j] = a[k][j] * unit_inv;
            M[k][j] = M[k][j] * unit_inv;
        }
    }

    // simultaneous row/column permutation sorting the orders ascending
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int x, int y) { return orders[x] < orders[y]; });
    LocalSmithForm out{p, {}, LaurentMat(r), LaurentMat(r), 0};
    out.orders.resize(r);
    for (int i = 0; i < r; ++i) {
        out.orders[i] = orders[perm[i]];
        out.left[i] = M[perm[i]];
        out.right[i].resize(r, LaurentSeries::zero(p));
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out.right[i][j] = N[i][perm[j]];

    // certified precision: minimum knowledge bound over the transforms
    long prec = cutoff;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (!out.left[i][j].is_exact_zero())
                prec = std::min(prec, out.left[i][j].precision_end());
            if (!out.right[i][j].is_exact_zero())
                prec = std::min(prec, out.right[i][j].precision_end());
        }
    out.precision = prec;
    return out;
}

}  // namespace detail

/// Multiple orders and unimodular transforms at one place.  precision = 0
/// picks the automatic start 2 * (valuation spread) + 4; on a
/// precision-exhausted failure the expansion restarts from the exact rational
/// entries with doubled precision, up to 3 doublings.
inline LocalSmithForm local_smith_form(const AdelicMatrix& g, const Place& p,
                                       long precision = 0) {
    RatMat A = g.local(p);
    long det_order = order_of_det(g, p);
    long spread = 0;
    long vmin = 0, vmax = 0;
    bool any = false;
    for (const auto& row : A)
        for (const auto& e : row)
            if (!e.is_zero()) {
                long v = *valuation(e, p);
                if (!any) { vmin = vmax = v; any = true; }
                vmin = std::min(vmin, v);
                vmax = std::max(vmax, v);
            }
    if (any) spread = vmax - vmin;
    long N = precision > 0 ? precision : 2 * spread + 4;
    for (int attempt = 0;; ++attempt) {
        try {
            return detail::smith_attempt(A, p, N, det_order);
        } catch (const precision_error&) {
            if (attempt >= 3) throw;
            N *= 2;
        }
    }
}

inline std::vector<long> multiple_orders(const AdelicMatrix& g, const Place& p) {
    if (!g.has_component(p)) return std::vector<long>(g.rank(), 0);
    return local_smith_form(g, p).orders;
}

/// Recompute M * g_p * N and compare against diag(pi^{n_j}) digit by digit up
/// to the form's precision; used by the round-trip tests.
inline bool smith_roundtrip_ok(const AdelicMatrix& g, const LocalSmithForm& sf) {
    const Place& p = sf.place;
    int r = g.rank();
    long cutoff = sf.precision;
    LaurentMat a = detail::expand_matrix(g.local(p), p, cutoff);
    LaurentMat prod = detail::series_mul(detail::series_mul(sf.left, a, p), sf.right, p);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const LaurentSeries& e = prod[i][j];
            if (e.is_exact_zero()) {
                if (i == j) return false;
                continue;
            }
            long lo = e.valuation_lower_bound();
            long hi = std::min(e.precision_end(), cutoff);
            for (long k = lo; k < hi; ++k) {
                int want = (i == j && k == sf.orders[size_t(i)]) ? 1 : 0;
                if (e.digit(k) != want) return false;
            }
        }
    return true;
}

}  // namespace agcodes
