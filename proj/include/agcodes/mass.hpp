#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <stdexcept>

namespace agcodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, long e) {
    if (e < 0) throw std::invalid_argument("big_pow wants a nonnegative exponent");
    BigInt acc = 1, b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline BigRat rat_pow(long q, long e) {
    if (e >= 0) return BigRat(big_pow(BigInt(q), e));
    return BigRat(BigInt(1), big_pow(BigInt(q), -e));
}

/// The arithmetic of one curve over F_q as it enters the mass formula: the
/// zeta numerator P(T) (degree 2*genus, P(0) = 1) and the genus.
struct ZetaData {
    long q = 2;
    long genus = 0;
    std::vector<BigInt> numerator;  // P(T) coefficients, ascending

    static ZetaData projective_line(long q) {
        ZetaData z;
        z.q = q;
        z.genus = 0;
        z.numerator = {BigInt(1)};
        return z;
    }

    BigRat numerator_at(const BigRat& t) const {
        BigRat acc = 0, p = 1;
        for (const BigInt& a : numerator) {
            acc += BigRat(a) * p;
            p *= t;
        }
        return acc;
    }

    BigInt class_number() const {
        // h = P(1)
        BigInt acc = 0;
        for (const BigInt& a : numerator) acc += a;
        return acc;
    }
};

/// Completed-zeta value at integer n >= 2:
///   q^{(genus-1) n} P(q^{-n}) / ((1 - q^{-n})(1 - q^{1-n})).
/// Finite and unambiguous in this range; n = 1 hits the pole and is handled
/// by the convention grid below.
inline BigRat zeta_hat_eval(const ZetaData& z, long n) {
    if (n < 2) throw std::invalid_argument("zeta_hat_eval wants n >= 2; n = 1 needs a convention");
    BigRat qn = rat_pow(z.q, -n);
    BigRat qn1 = rat_pow(z.q, 1 - n);
    BigRat num = rat_pow(z.q, (z.genus - 1) * n) * z.numerator_at(qn);
    BigRat den = (BigRat(1) - qn) * (BigRat(1) - qn1);
    return num / den;
}

/// Candidate finite stand-ins for the (divergent) n = 1 value, each dropping
/// the same ln q factor:
///   SResidue     q^genus P(1/q) / (q - 1)        residue in the s-plane
///   TResidueAbs  |res_{T=1/q} T Z(T)| = q^{genus-2} P(1/q) h-free form
///   ClassNumber  h q^{genus-1} / (q - 1)
enum class SpecialValueConvention { SResidue, TResidueAbs, ClassNumber };

inline const char* to_string(SpecialValueConvention c) {
    switch (c) {
        case SpecialValueConvention::SResidue: return "s-residue";
        case SpecialValueConvention::TResidueAbs: return "t-residue-abs";
        case SpecialValueConvention::ClassNumber: return "class-number";
    }
    return "?";
}

inline BigRat zeta_hat_special1(const ZetaData& z, SpecialValueConvention c) {
    BigRat qinv = rat_pow(z.q, -1);
    switch (c) {
        case SpecialValueConvention::SResidue:
            return rat_pow(z.q, z.genus) * z.numerator_at(qinv) / BigRat(z.q - 1);
        case SpecialValueConvention::TResidueAbs:
            return z.numerator_at(qinv) * rat_pow(z.q, 2 * z.genus - 2) /
                   (BigRat(z.q - 1) * rat_pow(z.q, z.genus - 1));
        case SpecialValueConvention::ClassNumber:
            return BigRat(z.class_number()) * rat_pow(z.q, z.genus - 1) / BigRat(z.q - 1);
    }
    throw std::logic_error("unreachable");
}

/// Sign attached to a composition with s parts: plus on odd s, or plus on
/// even s.
enum class SignConvention { PositiveOddParts, PositiveEvenParts };

inline const char* to_string(SignConvention c) {
    return c == SignConvention::PositiveOddParts ? "positive-odd-parts" : "positive-even-parts";
}

/// The alternating-sum mass candidate
///   beta_r = sum over compositions (n_1,..,n_s) of r of
///            sign(s) prod_j vhat(n_j) / prod_{j<s} (q^{n_j + n_{j+1}} - 1)
/// with vhat(1) supplied by the chosen convention.
inline BigRat beta_mass(const ZetaData& z, int r, SpecialValueConvention v1c,
                        SignConvention sc) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    std::vector<BigRat> vhat(size_t(r) + 1);
    vhat[1] = zeta_hat_special1(z, v1c);
    for (long n = 2; n <= r; ++n) vhat[size_t(n)] = zeta_hat_eval(z, n);

    BigRat total = 0;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            BigRat term = 1;
            for (size_t j = 0; j < parts.size(); ++j) {
                term *= vhat[size_t(parts[j])];
                if (j + 1 < parts.size()) {
                    BigInt d = big_pow(BigInt(z.q), parts[j] + parts[j + 1]) - 1;
                    term /= BigRat(d);
                }
            }
            size_t s = parts.size();
            bool positive = (sc == SignConvention::PositiveOddParts) ? (s % 2 == 1)
                                                                     : (s % 2 == 0);
            total += positive ? term : -term;
            return;
        }
        for (int n = 1; n <= remaining; ++n) {
            parts.push_back(n);
            self(self, remaining - n);
            parts.pop_back();
        }
    };
    rec(rec, r);
    return total;
}

inline BigInt gl_order(long q, int m) {
    BigInt acc = 1, qm = big_pow(BigInt(q), m);
    for (int i = 0; i < m; ++i) acc *= qm - big_pow(BigInt(q), i);
    return acc;
}

/// |Aut(O(a_1) + .. + O(a_r))| for a descending type: the block-diagonal
/// part contributes GL of each multiplicity, the unipotent radical
/// q^{a_i - a_j + 1} for every strictly decreasing pair.
inline BigInt split_bundle_aut_order(long q, const std::vector<long>& type) {
    for (size_t i = 0; i + 1 < type.size(); ++i)
        if (type[i] < type[i + 1]) throw std::invalid_argument("type must be descending");
    BigInt acc = 1;
    size_t i = 0;
    while (i < type.size()) {
        size_t j = i;
        while (j < type.size() && type[j] == type[i]) ++j;
        acc *= gl_order(q, int(j - i));
        i = j;
    }
    long unipotent = 0;
    for (size_t a = 0; a < type.size(); ++a)
        for (size_t b = 0; b < type.size(); ++b)
            if (type[a] > type[b]) unipotent += type[a] - type[b] + 1;
    return acc * big_pow(BigInt(q), unipotent);
}

/// Every rank-r degree-d bundle on the projective line splits; it is
/// semistable exactly when the type is constant, which forces r | d.  The
/// groupoid mass of the semistable locus is therefore 1/|GL_r(F_q)| or 0.
inline BigRat semistable_mass_oracle(long q, int r, long d) {
    if (((d % r) + r) % r != 0) return BigRat(0);
    return BigRat(BigInt(1), gl_order(q, r));
}

struct TotalMassResult {
    BigRat value;       // sum of 1/|Aut| over the enumerated types
    BigRat tail_bound;  // proven bound on everything not enumerated
    long max_spread = 0;
};

/// Mass of the whole rank-r degree-d stack: sum over all descending types of
/// 1/|Aut|.  Types are enumerated by spread a_1 - a_r; a type with spread
/// h >= 1 has |Aut| >= q^{h+1} and there are at most (h+1)^{r-2} of them, so
/// the tail is dominated by a convergent series and is cut off below eps.
inline TotalMassResult total_mass_oracle(long q, int r, long d, const BigRat& eps) {
    if (r < 1) throw std::invalid_argument("rank must be positive");
    TotalMassResult out;
    out.value = 0;
    if (r == 1) {
        out.value = BigRat(BigInt(1), BigInt(q - 1));
        out.tail_bound = 0;
        return out;
    }
    auto types_with_spread = [&](long h) {
        // offsets h = b_1 >= b_2 >= .. >= b_r = 0, type = a_r + offsets
        std::vector<std::vector<long>> found;
        std::vector<long> b(size_t(r), 0L);
        b[0] = h;
        b[size_t(r) - 1] = 0;
        auto rec = [&](auto&& self, int idx) -> void {
            if (idx == r - 1) {
                long s = 0;
                for (long v : b) s += v;
                long rem = d - s;
                long ar = rem >= 0 ? rem / r : -((-rem + r - 1) / r);
                if (ar * long(r) != rem) return;  // degree not attainable with this shape
                std::vector<long> type(size_t(r), 0L);
                for (int i = 0; i < r; ++i) type[size_t(i)] = b[size_t(i)] + ar;
                found.push_back(std::move(type));
                return;
            }
            long hi = b[size_t(idx) - 1];
            for (long v = hi; v >= 0; --v) {
                b[size_t(idx)] = v;
                self(self, idx + 1);
            }
        };
        rec(rec, 1);
        return found;
    };

    for (long h = 0;; ++h) {
        for (const auto& t : types_with_spread(h))
            out.value += BigRat(BigInt(1), split_bundle_aut_order(q, t));
        // tail over spreads j > h: each type has |Aut| >= q^{j+1}, and there
        // are at most (j+1)^{r-2} types of spread j, so the tail is below
        // sum_{j>h} (j+1)^{r-2} q^{-(j+1)}; the term ratio is at most
        // worst = ((j+2)/(j+1))^{r-2}/q at the first term, giving a
        // geometric majorant term/(1 - worst) once worst < 1
        long j = h + 1;
        BigRat term = rat_pow(q, -(j + 1));
        for (int e = 0; e < r - 2; ++e) term *= BigRat(j + 1);
        BigRat worst = BigRat(1) / BigRat(q);
        for (int e = 0; e < r - 2; ++e) worst *= BigRat(j + 2) / BigRat(j + 1);
        if (worst < 1) {
            BigRat tail = term / (BigRat(1) - worst);
            if (tail < eps) {
                out.tail_bound = tail;
                out.max_spread = h;
                return out;
            }
        }
        if (h > 10000) throw std::runtime_error("total mass enumeration failed to converge");
    }
}

struct CalibrationRow {
    SpecialValueConvention special;
    SignConvention sign;
    BigRat beta;
    bool matches = false;
};

struct CalibrationReport {
    long q = 0;
    int r = 0;
    BigRat oracle;       // semistable mass at degree 0
    BigRat total;        // total mass at degree 0 (partial sum)
    BigRat total_tail;   // proven bound on the unenumerated part
    std::vector<CalibrationRow> rows;
    std::string verdict;

    std::string to_text() const {
        std::ostringstream out;
        out << "q: " << q << "\n";
        out << "r: " << r << "\n";
        out << "oracle_semistable: " << oracle << "\n";
        out << "oracle_total: " << total << " (tail <= " << total_tail << ")\n";
        int i = 0;
        for (const CalibrationRow& row : rows) {
            ++i;
            out << "row." << i << ".convention: " << to_string(row.special) << "/"
                << to_string(row.sign) << "\n";
            out << "row." << i << ".beta: " << row.beta << "\n";
            out << "row." << i << ".match: " << (row.matches ? "true" : "false") << "\n";
        }
        out << "verdict: " << verdict << "\n";
        return out.str();
    }
};

/// Evaluate the alternating-sum candidate under all six conventions and
/// compare with the exact semistable mass at degree 0.  The verdict names the
/// matching convention when one exists and says so plainly when none does.
inline CalibrationReport calibrate_convention(long q, int r) {
    ZetaData z = ZetaData::projective_line(q);
    CalibrationReport rep;
    rep.q = q;
    rep.r = r;
    rep.oracle = semistable_mass_oracle(q, r, 0);
    TotalMassResult tm = total_mass_oracle(q, r, 0, BigRat(1, 1000000000L));
    rep.total = tm.value;
    rep.total_tail = tm.tail_bound;
    std::vector<std::string> matched;
    for (SpecialValueConvention sv :
         {SpecialValueConvention::SResidue, SpecialValueConvention::TResidueAbs,
          SpecialValueConvention::ClassNumber}) {
        for (SignConvention sc :
             {SignConvention::PositiveOddParts, SignConvention::PositiveEvenParts}) {
            CalibrationRow row;
            row.special = sv;
            row.sign = sc;
            row.beta = beta_mass(z, r, sv, sc);
            row.matches = (row.beta == rep.oracle);
            if (row.matches)
                matched.push_back(std::string(to_string(sv)) + "/" + to_string(sc));
            rep.rows.push_back(std::move(row));
        }
    }
    if (matched.empty()) {
        rep.verdict = "no listed convention matches the semistable mass";
    } else {
        rep.verdict = "matches: ";
        for (size_t i = 0; i < matched.size(); ++i) {
            if (i) rep.verdict += ", ";
            rep.verdict += matched[i];
        }
    }
    return rep;
}

}  // namespace agcodes
