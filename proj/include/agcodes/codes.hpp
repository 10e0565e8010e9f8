#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "agcodes/code.hpp"
#include "agcodes/cohomology.hpp"

namespace agcodes {

/// Evaluation vector of a section at the points of D, point-major then
/// component-minor: (f_1(p_1),..,f_r(p_1), f_1(p_2),..).
inline std::vector<int> evaluation_row(const std::vector<RationalFunction>& f,
                                       const std::vector<Place>& points) {
    std::vector<int> row;
    row.reserve(points.size() * f.size());
    for (const Place& p : points)
        for (const RationalFunction& fj : f) row.push_back(evaluate(fj, p));
    return row;
}

/// Evaluation code of rank r: sections of the lattice cut out by g, evaluated
/// at the n rational points of D.  Requires g balanced at D (integral local
/// components of determinant valuation zero), so evaluation is well defined
/// and the dimension is h0(g) - h0(g twisted down by D).
inline LinearCode build_code_F(const Divisor& D, const AdelicMatrix& g,
                               std::string label = "") {
    require_evaluation_divisor(D);
    if (!is_balanced(g, D)) throw std::invalid_argument("g must be balanced at the points of D");
    std::vector<Place> points = D.support();
    SectionSpace H = h0_basis(g);
    FqMatrix raw(g.field(), int(H.basis.size()), int(g.rank()) * int(points.size()));
    for (size_t i = 0; i < H.basis.size(); ++i) {
        std::vector<int> row = evaluation_row(H.basis[i], points);
        for (size_t j = 0; j < row.size(); ++j) raw.at(int(i), int(j)) = row[j];
    }
    LinearCode C = LinearCode::from_rows(g.field(), g.rank(), int(points.size()), raw,
                                         std::move(label));
    long expected = h0_dim(g) - h0_dim(twist_by_divisor(g, D, -1));
    if (C.k != expected)
        throw std::logic_error("evaluation code dimension disagrees with h0(g) - h0(g(-D))");
    return C;
}

/// Residue-side code of rank r: the evaluation code of the dual matrix
/// built from a D-special differential.  Its dimension is
/// h1(g(-D)) - h1(g), and it is the exact dual of build_code_F(D, g).
inline LinearCode build_code_Omega(const Divisor& D, const AdelicMatrix& g,
                                   const Differential& w0, std::string label = "") {
    AdelicMatrix h = omega_dual_matrix(g, w0, D);
    LinearCode C = build_code_F(D, h, std::move(label));
    long expected = h1_dim(twist_by_divisor(g, D, -1), w0) - h1_dim(g, w0);
    if (C.k != expected)
        throw std::logic_error("residue code dimension disagrees with h1(g(-D)) - h1(g)");
    return C;
}

inline LinearCode build_code_Omega(const Divisor& D, const AdelicMatrix& g,
                                   std::string label = "") {
    return build_code_Omega(D, g, d_special_differential(D), std::move(label));
}

/// Classical rank-1 evaluation code: L(E) evaluated at the points of D.
/// Supports of D and E must be disjoint.
inline LinearCode classical_CL(const Divisor& D, const Divisor& E, std::string label = "") {
    require_evaluation_divisor(D);
    for (const Place& p : D.support())
        if (E.coeff(p) != 0)
            throw std::invalid_argument("supports of D and E must be disjoint");
    FieldRef F;
    if (!D.support().empty())
        F = D.support().front().field();
    else if (!E.support().empty())
        F = E.support().front().field();
    else
        throw std::invalid_argument("cannot infer the base field from empty divisors");
    std::vector<Place> points = D.support();
    std::vector<RationalFunction> basis = riemann_roch_basis(E, F);
    FqMatrix raw(F, int(basis.size()), int(points.size()));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < points.size(); ++j)
            raw.at(int(i), int(j)) = evaluate(basis[i], points[j]);
    LinearCode C = LinearCode::from_rows(F, 1, int(points.size()), raw, std::move(label));
    long expected = riemann_roch_dim(E) - riemann_roch_dim(E - D);
    if (C.k != expected) throw std::logic_error("classical code dimension disagrees with l(E) - l(E-D)");
    return C;
}

/// Classical residue code: residues at the points of D of differentials with
/// divisor >= E - D, realized as L((w0) + D - E) * w0.
inline LinearCode classical_COmega_residue(const Divisor& D, const Divisor& E,
                                           const Differential& w0, std::string label = "") {
    require_evaluation_divisor(D);
    FieldRef F = D.support().front().field();
    Divisor H = differential_divisor(w0) + D - E;
    std::vector<Place> points = D.support();
    std::vector<RationalFunction> basis = riemann_roch_basis(H, F);
    FqMatrix raw(F, int(basis.size()), int(points.size()));
    for (size_t i = 0; i < basis.size(); ++i) {
        Differential w = w0.scaled(basis[i]);
        for (size_t j = 0; j < points.size(); ++j) raw.at(int(i), int(j)) = residue(w, points[j]);
    }
    return LinearCode::from_rows(F, 1, int(points.size()), raw, std::move(label));
}

inline LinearCode classical_COmega_residue(const Divisor& D, const Divisor& E,
                                           std::string label = "") {
    return classical_COmega_residue(D, E, d_special_differential(D), std::move(label));
}

/// Per-point vanishing pattern of a section: delta[i][j] = 1 when component j
/// vanishes at point i (the zero function counts as vanishing).
inline std::vector<std::vector<int>> vanishing_pattern(const std::vector<RationalFunction>& f,
                                                       const std::vector<Place>& points) {
    std::vector<std::vector<int>> delta(points.size(), std::vector<int>(f.size(), 0));
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) {
            if (f[j].is_zero()) {
                delta[i][j] = 1;
                continue;
            }
            std::optional<long> v = valuation(f[j], points[i]);
            delta[i][j] = (!v || *v >= 1) ? 1 : 0;
        }
    return delta;
}

/// The diagonal idele diag(pi^-delta_1,..,pi^-delta_r) at each point of D,
/// where delta_j records whether component j of f vanishes there.  Twisting g
/// by this element absorbs the zeroes of ev(f) into the lattice.
inline AdelicMatrix margin_element(const std::vector<RationalFunction>& f, const Divisor& D,
                                   const AdelicMatrix& g) {
    require_evaluation_divisor(D);
    if (!is_section(g, f)) throw std::invalid_argument("f must be a section of g");
    std::vector<Place> points = D.support();
    std::vector<std::vector<int>> delta = vanishing_pattern(f, points);
    AdelicMatrix chi(g.rank(), g.field());
    for (size_t i = 0; i < points.size(); ++i) {
        RatMat m = rat_identity(g.field(), g.rank());
        bool nontrivial = false;
        for (size_t j = 0; j < f.size(); ++j)
            if (delta[i][j]) {
                m[j][j] = uniformizer(points[i]).pow(-1);
                nontrivial = true;
            }
        if (nontrivial) chi = chi.with_component(points[i], m);
    }
    return chi;
}

/// g * margin_element(f, D, g).  The defining property, checked here, is that
/// f remains a section of the transformed matrix.
inline AdelicMatrix log_transform(const AdelicMatrix& g, const std::vector<RationalFunction>& f,
                                  const Divisor& D) {
    AdelicMatrix out = g * margin_element(f, D, g);
    if (!is_section(out, f)) throw std::logic_error("section lost under the vanishing twist");
    return out;
}

struct BoundCheck {
    std::string name;
    std::string status;  // "pass", "fail", "inconclusive", "n/a"
    long lhs = 0, rhs = 0;
    std::string detail;
};

/// Everything the audit learned about one code instance.  Serializes to flat
/// key: value lines; `violations` counts the failed checks.
struct CodeReport {
    int q = 0, r = 0, n = 0;
    long length = 0, k = 0, k_dual = 0;
    long degree_g = 0;
    bool semistable = false;
    std::vector<long> type;
    bool d_exact = false;
    bool empty_code = false;
    long d_symbol = 0, d_block = 0;
    long designed_bound = 0;  // nr - deg g
    std::vector<BoundCheck> checks;
    std::vector<int> distance_witness;

    long violations() const {
        long c = 0;
        for (const BoundCheck& b : checks)
            if (b.status == "fail") ++c;
        return c;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "q: " << q << "\n";
        out << "r: " << r << "\n";
        out << "n: " << n << "\n";
        out << "length: " << length << "\n";
        out << "k: " << k << "\n";
        out << "k_dual: " << k_dual << "\n";
        out << "degree_g: " << degree_g << "\n";
        out << "semistable: " << (semistable ? "true" : "false") << "\n";
        out << "splitting_type:";
        for (long t : type) out << " " << t;
        out << "\n";
        out << "empty_code: " << (empty_code ? "true" : "false") << "\n";
        if (!empty_code) {
            out << "d_symbol: " << d_symbol << "\n";
            out << "d_block: " << d_block << "\n";
            out << "d_exact: " << (d_exact ? "true" : "false") << "\n";
        }
        out << "designed_bound: " << designed_bound << "\n";
        for (const BoundCheck& b : checks) {
            out << "check." << b.name << ": " << b.status << "\n";
            out << "check." << b.name << ".lhs: " << b.lhs << "\n";
            out << "check." << b.name << ".rhs: " << b.rhs << "\n";
            if (!b.detail.empty()) out << "check." << b.name << ".detail: " << b.detail << "\n";
        }
        out << "violations: " << violations() << "\n";
        if (!distance_witness.empty()) {
            out << "distance_witness:";
            for (int v : distance_witness) out << " " << v;
            out << "\n";
        }
        return out.str();
    }
};

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace detail

/// Build the code, measure its distance within the budget, and test every
/// bound that theory promises: the symbol-distance floor rn - deg g for
/// semistable g, the rank-r Singleton window, and the semistable dimension
/// formulas; the interval case is reported honestly (a search can refute a
/// bound with a witness but can never confirm it).
inline CodeReport distance_bound_audit(const Divisor& D, const AdelicMatrix& g,
                                       long budget = 10000000) {
    CodeReport rep;
    LinearCode C = build_code_F(D, g);
    LinearCode Cd = build_code_Omega(D, g);
    SemistabilityReport ss = is_semistable(g);
    rep.q = g.field()->size();
    rep.r = g.rank();
    rep.n = C.n;
    rep.length = C.length();
    rep.k = C.k;
    rep.k_dual = Cd.k;
    rep.degree_g = degree(g);
    rep.semistable = ss.semistable;
    rep.type = ss.type;
    rep.designed_bound = long(rep.n) * rep.r - rep.degree_g;

    DistanceResult dist = min_distance(C, budget, 1);
    rep.d_exact = dist.exact;
    rep.empty_code = dist.empty;
    rep.d_symbol = dist.d_symbol;
    rep.d_block = dist.d_block;
    rep.distance_witness = dist.witness_codeword;

    auto push = [&](BoundCheck b) { rep.checks.push_back(std::move(b)); };

    {
        // dimension + dual dimension must tile the ambient space
        BoundCheck b;
        b.name = "duality_dimension";
        b.lhs = rep.k + rep.k_dual;
        b.rhs = rep.length;
        b.status = (b.lhs == b.rhs) ? "pass" : "fail";
        push(std::move(b));
    }
    {
        BoundCheck b;
        b.name = "distance_floor";
        b.lhs = rep.d_symbol;
        b.rhs = rep.designed_bound;
        if (rep.empty_code || rep.designed_bound < 1) {
            b.status = "n/a";
        } else if (!rep.semistable) {
            b.status = "n/a";
            b.detail = "floor is only promised for semistable g";
        } else if (rep.d_exact) {
            b.status = (rep.d_symbol >= rep.designed_bound) ? "pass" : "fail";
        } else if (rep.d_symbol < rep.designed_bound) {
            b.status = "fail";  // the found word already beats the floor
        } else {
            b.status = "inconclusive";
        }
        if (b.status == "fail") b.detail = "witness " + detail::join_ints(dist.witness_codeword);
        push(std::move(b));
    }
    {
        // r(n+1) <= k + d <= rn + 1 for nontrivial semistable instances
        BoundCheck b;
        b.name = "singleton_window";
        b.lhs = rep.k + rep.d_symbol;
        b.rhs = long(rep.r) * (rep.n + 1);
        if (rep.empty_code || !rep.semistable || rep.k == rep.length) {
            b.status = "n/a";
        } else if (rep.d_exact) {
            bool ok = b.lhs >= b.rhs && b.lhs <= long(rep.r) * rep.n + 1;
            b.status = ok ? "pass" : "fail";
        } else if (b.lhs > long(rep.r) * rep.n + 1) {
            b.status = "fail";
            b.detail = "upper bound already exceeded by the interval floor";
        } else {
            b.status = "inconclusive";
        }
        push(std::move(b));
    }
    {
        // semistable + -2r < deg g < rn pins both dimensions exactly
        BoundCheck b;
        b.name = "semistable_dimension";
        b.lhs = rep.k;
        b.rhs = rep.degree_g + rep.r;
        bool applicable = rep.semistable && -2L * rep.r < rep.degree_g &&
                          rep.degree_g < long(rep.r) * rep.n;
        if (!applicable) {
            b.status = "n/a";
        } else {
            bool ok = rep.k == rep.degree_g + rep.r &&
                      rep.k_dual == long(rep.r) * (rep.n - 1) - rep.degree_g;
            b.status = ok ? "pass" : "fail";
            if (!ok)
                b.detail = "k_dual " + std::to_string(rep.k_dual) + " expected " +
                           std::to_string(long(rep.r) * (rep.n - 1) - rep.degree_g);
        }
        push(std::move(b));
    }
    return rep;
}

}  // namespace agcodes
