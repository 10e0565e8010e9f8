#pragma once

// Deterministic random generators for property tests.  Everything is seeded
// explicitly so failures reproduce exactly.

#include <cstdint>
#include <vector>

#include "agcodes/adele.hpp"

namespace testsupport {

using namespace agcodes;

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long uniform(long lo, long hi) {  // inclusive
        return lo + long(next() % std::uint64_t(hi - lo + 1));
    }
    int element(const FieldRef& F) { return int(next() % std::uint64_t(F->size())); }
    int nonzero(const FieldRef& F) { return 1 + int(next() % std::uint64_t(F->size() - 1)); }
};

inline Polynomial random_poly(const FieldRef& F, Rng& rng, int maxdeg, bool nonzero = true) {
    int d = int(rng.uniform(0, maxdeg));
    std::vector<int> c(size_t(d) + 1, 0);
    for (int i = 0; i <= d; ++i) c[size_t(i)] = rng.element(F);
    c[size_t(d)] = nonzero ? rng.nonzero(F) : c[size_t(d)];
    Polynomial p(F, c);
    if (nonzero && p.is_zero()) return Polynomial::constant(F, 1);
    return p;
}

inline RationalFunction random_rational(const FieldRef& F, Rng& rng, int maxdeg) {
    return RationalFunction(random_poly(F, rng, maxdeg), random_poly(F, rng, maxdeg));
}

/// Small pool of distinct places: two rational points, one degree-2 place,
/// and infinity.
inline std::vector<Place> place_pool(const FieldRef& F) {
    std::vector<Place> pool;
    pool.push_back(Place::rational_point(F, 0));
    if (F->size() > 2) pool.push_back(Place::rational_point(F, 1));
    // first irreducible quadratic in counter order
    for (long c = 0;; ++c) {
        Polynomial cand = agcodes::detail::monic_from_counter(F, 2, c);
        if (is_irreducible(cand)) {
            pool.push_back(Place::finite(cand));
            break;
        }
    }
    pool.push_back(Place::infinity(F));
    return pool;
}

/// Invertible local matrix L * diag(pi^e) * U with unit triangular factors;
/// off-diagonal entries are integral at p so the factors are units there.
inline RatMat random_local_matrix(const FieldRef& F, Rng& rng, int r, const Place& p,
                                  long emin, long emax) {
    RationalFunction pi = uniformizer(p);
    RatMat m = rat_identity(F, r);
    for (int i = 0; i < r; ++i) m[size_t(i)][size_t(i)] = pi.pow(rng.uniform(emin, emax));
    RatMat L = rat_identity(F, r), U = rat_identity(F, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            // integral-at-p entry: for a finite place any polynomial works,
            // at infinity use a constant or 1/x
            RationalFunction e = RationalFunction::zero(F);
            long pick = rng.uniform(0, 3);
            if (pick == 1) {
                e = RationalFunction::constant(F, rng.nonzero(F));
            } else if (pick == 2) {
                if (p.is_infinity())
                    e = RationalFunction(Polynomial::constant(F, rng.nonzero(F)),
                                         Polynomial::x(F));
                else
                    e = RationalFunction(random_poly(F, rng, 2));
            }
            if (i > j)
                L[size_t(i)][size_t(j)] = e;
            else
                U[size_t(i)][size_t(j)] = e;
        }
    return rat_mul(rat_mul(L, m), U);
}

/// Adelic matrix supported on a random subset of the pool with valuation
/// spread [emin, emax] on the diagonal factors.
inline AdelicMatrix random_adelic(const FieldRef& F, Rng& rng, int r, long emin, long emax,
                                  int max_places = 3) {
    std::vector<Place> pool = place_pool(F);
    AdelicMatrix g(r, F);
    int count = int(rng.uniform(0, max_places));
    for (int t = 0; t < count && t < int(pool.size()); ++t) {
        const Place& p = pool[size_t(rng.uniform(0, long(pool.size()) - 1))];
        g = g.with_component(p, random_local_matrix(F, rng, r, p, emin, emax));
    }
    return g;
}

/// Unimodular-at-p matrix: a product of elementary operations whose entries
/// are integral at p and whose determinant is a nonzero constant.
inline RatMat random_unit_at(const FieldRef& F, Rng& rng, int r, const Place& p) {
    RatMat u = rat_identity(F, r);
    for (int step = 0; step < 2 * r; ++step) {
        int i = int(rng.uniform(0, r - 1)), j = int(rng.uniform(0, r - 1));
        if (i == j) {
            RatMat d = rat_identity(F, r);
            d[size_t(i)][size_t(i)] = RationalFunction::constant(F, rng.nonzero(F));
            u = rat_mul(u, d);
            continue;
        }
        RatMat e = rat_identity(F, r);
        if (p.is_infinity())
            e[size_t(i)][size_t(j)] = RationalFunction(Polynomial::constant(F, rng.element(F)),
                                                       Polynomial::x(F));
        else
            e[size_t(i)][size_t(j)] = RationalFunction(random_poly(F, rng, 2, false));
        u = rat_mul(u, e);
    }
    return u;
}

}  // namespace testsupport
