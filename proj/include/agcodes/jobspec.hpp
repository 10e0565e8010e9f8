#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "agcodes/codes.hpp"
#include "agcodes/mass.hpp"
#include "agcodes/smith.hpp"

namespace agcodes {

/// One code instance as described by a spec file: the rank, the base field,
/// the evaluation divisor, and the adelic matrix given place by place.
struct JobSpec {
    int rank = 1;
    FieldRef F;
    Divisor D;
    AdelicMatrix g;

    JobSpec() : g(1, nullptr) {}
};

namespace detail {

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

/// Split "[[a,b],[c,d]]" into rows of entry strings.  Entries themselves
/// never contain commas or brackets.
inline std::vector<std::vector<std::string>> split_matrix_literal(const std::string& text,
                                                                  int line) {
    std::string s = strip(text);
    if (s.size() < 4 || s.front() != '[' || s.back() != ']')
        throw parse_error("matrix literal must look like [[..],[..]]", line, 1);
    std::vector<std::vector<std::string>> rows;
    size_t i = 1;
    while (i < s.size() - 1) {
        while (i < s.size() - 1 && (s[i] == ',' || isspace((unsigned char)s[i]))) ++i;
        if (i >= s.size() - 1) break;
        if (s[i] != '[') throw parse_error("expected '[' starting a matrix row", line, int(i) + 1);
        size_t j = s.find(']', i);
        if (j == std::string::npos) throw parse_error("unterminated matrix row", line, int(i) + 1);
        std::string row = s.substr(i + 1, j - i - 1);
        std::vector<std::string> entries;
        std::string cur;
        for (char c : row) {
            if (c == ',') {
                entries.push_back(strip(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        entries.push_back(strip(cur));
        rows.push_back(std::move(entries));
        i = j + 1;
    }
    if (rows.empty()) throw parse_error("empty matrix literal", line, 1);
    return rows;
}

}  // namespace detail

/// Line-oriented spec format.  '#' starts a comment.  The scalar keys come
/// first in any order, then one block per place:
///   rank: 2
///   field: 5
///   divisor: 1*(x) + 1*(x - 1)
///   place: (inf); matrix: [[1/x^2, 0], [0, 1/x^2]]
inline JobSpec parse_jobspec(const std::string& text) {
    JobSpec spec;
    bool have_rank = false, have_field = false, have_divisor = false;
    std::string divisor_text;
    struct PendingBlock {
        std::string place, matrix;
        int line;
    };
    std::vector<PendingBlock> blocks;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = detail::strip(raw);
        if (line.empty()) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'key: value'", lineno, 1);
        std::string key = detail::strip(line.substr(0, colon));
        std::string value = detail::strip(line.substr(colon + 1));
        if (key == "rank") {
            spec.rank = std::stoi(value);
            if (spec.rank < 1) throw parse_error("rank must be positive", lineno, 1);
            have_rank = true;
        } else if (key == "field") {
            spec.F = Field::gf(std::stoi(value));
            have_field = true;
        } else if (key == "divisor") {
            divisor_text = value;
            have_divisor = true;
        } else if (key == "place") {
            size_t semi = value.find(';');
            if (semi == std::string::npos)
                throw parse_error("place line wants 'place: <p>; matrix: [[..]]'", lineno, 1);
            std::string ptext = detail::strip(value.substr(0, semi));
            std::string rest = detail::strip(value.substr(semi + 1));
            if (rest.rfind("matrix:", 0) != 0)
                throw parse_error("expected 'matrix:' after the place", lineno, 1);
            blocks.push_back({ptext, detail::strip(rest.substr(7)), lineno});
        } else {
            throw parse_error("unknown key '" + key + "'", lineno, 1);
        }
    }
    if (!have_rank) throw parse_error("missing 'rank:'", lineno, 1);
    if (!have_field) throw parse_error("missing 'field:'", lineno, 1);
    if (!have_divisor) throw parse_error("missing 'divisor:'", lineno, 1);

    spec.D = parse_divisor(divisor_text, spec.F);
    spec.g = AdelicMatrix(spec.rank, spec.F);
    for (const auto& blk : blocks) {
        Place p = parse_place(blk.place, spec.F);
        auto rows = detail::split_matrix_literal(blk.matrix, blk.line);
        if (int(rows.size()) != spec.rank)
            throw parse_error("matrix must have rank-many rows", blk.line, 1);
        RatMat m;
        for (const auto& row : rows) {
            if (int(row.size()) != spec.rank)
                throw parse_error("matrix row must have rank-many entries", blk.line, 1);
            std::vector<RationalFunction> r;
            for (const std::string& e : row) r.push_back(parse_rational(e, spec.F, blk.line));
            m.push_back(std::move(r));
        }
        spec.g = spec.g.with_component(p, m);
    }
    return spec;
}

/// Canonical text for a spec; parse_jobspec(print_jobspec(s)) reproduces s.
inline std::string print_jobspec(const JobSpec& spec) {
    std::ostringstream out;
    out << "rank: " << spec.rank << "\n";
    out << "field: " << spec.F->size() << "\n";
    out << "divisor: " << spec.D.to_string() << "\n";
    for (const Place& p : spec.g.support()) {
        const RatMat& m = spec.g.local(p);
        out << "place: " << p.to_string() << "; matrix: [";
        for (size_t i = 0; i < m.size(); ++i) {
            if (i) out << ", ";
            out << "[";
            for (size_t j = 0; j < m[i].size(); ++j) {
                if (j) out << ", ";
                out << m[i][j].to_string();
            }
            out << "]";
        }
        out << "]\n";
    }
    return out.str();
}

struct RunOptions {
    long budget = 10000000;
    int precision = 0;       // 0 = let the series machinery pick
    std::string out_dir;     // empty = stdout only
    std::vector<long> qs = {2, 3};
    std::vector<int> rs = {1, 2, 3};
};

namespace detail {

inline void emit(const std::string& name, const std::string& body, const RunOptions& opt,
                 std::ostream& log) {
    if (opt.out_dir.empty()) {
        log << body;
        return;
    }
    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    std::string path = opt.out_dir + "/" + name;
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << body;
    log << "wrote " << path << "\n";
}

}  // namespace detail

/// `code`: build the evaluation code and its dual, export the generator
/// matrix and a report.  Exit 0 unless construction fails.
inline int run_code(const JobSpec& spec, const RunOptions& opt, std::ostream& log) {
    LinearCode C = build_code_F(spec.D, spec.g, "spec");
    CodeReport rep = distance_bound_audit(spec.D, spec.g, opt.budget);
    detail::emit("generator.txt", generator_export(C), opt, log);
    detail::emit("report.txt", rep.to_text(), opt, log);
    return 0;
}

/// `audit`: same construction, but the exit code carries the outcome:
/// 2 when any promised bound fails, 0 when all hold or are inconclusive.
inline int run_audit(const JobSpec& spec, const RunOptions& opt, std::ostream& log) {
    CodeReport rep = distance_bound_audit(spec.D, spec.g, opt.budget);
    detail::emit("report.txt", rep.to_text(), opt, log);
    return rep.violations() > 0 ? 2 : 0;
}

/// `rr`: cohomology of the spec's matrix plus every identity that must bind
/// it: the dimension formula, duality, and the local-orders consistency
/// check.  Exit 2 when an identity fails (euler_char throws in that case).
inline int run_rr(const JobSpec& spec, const RunOptions& opt, std::ostream& log) {
    std::ostringstream out;
    long h0 = h0_dim(spec.g);
    long h1 = h1_dim(spec.g);
    long deg = degree(spec.g);
    long chi = euler_char(spec.g);  // throws logic_error when h0 - h1 != deg + r
    out << "rank: " << spec.g.rank() << "\n";
    out << "degree: " << deg << "\n";
    out << "h0: " << h0 << "\n";
    out << "h1: " << h1 << "\n";
    out << "chi: " << chi << "\n";
    SemistabilityReport ss = is_semistable(spec.g);
    out << "splitting_type:";
    for (long t : ss.type) out << " " << t;
    out << "\n";
    out << "semistable: " << (ss.semistable ? "true" : "false") << "\n";
    for (const Place& p : spec.g.support()) {
        LocalSmithForm sf = local_smith_form(spec.g, p, opt.precision);
        out << "orders." << p.to_string() << ":";
        for (long n : sf.orders) out << " " << n;
        out << "\n";
        if (!smith_roundtrip_ok(spec.g, sf)) {
            detail::emit("rr.txt", out.str(), opt, log);
            log << "local factorization failed to reproduce the matrix at " << p.to_string()
                << "\n";
            return 2;
        }
    }
    detail::emit("rr.txt", out.str(), opt, log);
    return 0;
}

/// `beta`: the convention-calibration table for each requested (q, r).
/// Exit 0; the table itself is the product.
inline int run_beta(const RunOptions& opt, std::ostream& log) {
    std::ostringstream out;
    bool first = true;
    for (long q : opt.qs) {
        for (int r : opt.rs) {
            if (!first) out << "\n";
            first = false;
            out << calibrate_convention(q, r).to_text();
        }
    }
    detail::emit("beta.txt", out.str(), opt, log);
    return 0;
}

/// `selftest`: a fixed battery of identities with known answers; exits 2 on
/// the first failure.  Everything here is checked against independent values
/// frozen in the test suite as well.
inline int run_selftest(const RunOptions& opt, std::ostream& log) {
    auto check = [&log](bool ok, const std::string& what) {
        log << (ok ? "[ok] " : "[FAIL] ") << what << "\n";
        return ok;
    };
    bool all = true;
    {
        FieldRef F = Field::gf(5);
        Divisor D = all_rational_points(F);
        Divisor E = 2 * Divisor::single(Place::infinity(F));
        LinearCode C = classical_CL(D, E);
        DistanceResult d = min_distance(C, opt.budget);
        all &= check(C.n == 5 && C.k == 3 && d.exact && d.d_symbol == 3,
                     "classical [5,3,3] code over GF(5)");
        LinearCode CF = build_code_F(D, idele_of_divisor(E, 1, F));
        all &= check(same_row_space(CF.gen, C.gen), "rank-1 construction matches classical");
        LinearCode CO = build_code_Omega(D, idele_of_divisor(E, 1, F));
        all &= check(same_row_space(CO.gen, dual_code(C).gen),
                     "residue construction matches the dual");
    }
    {
        FieldRef F = Field::gf(2);
        RationalFunction x = RationalFunction::x(F);
        AdelicMatrix g(2, F);
        RatMat m = {{x, RationalFunction::one(F)}, {RationalFunction::zero(F), x}};
        g = g.with_component(Place::finite(Polynomial::x(F)), m);
        all &= check(h0_dim(g) == 4 && euler_char(g) == 4, "upper-triangular h0 and chi");
        SemistabilityReport ss = is_semistable(g);
        all &= check(ss.semistable && ss.type == std::vector<long>({1, 1}),
                     "upper-triangular splitting type");
        LocalSmithForm sf = local_smith_form(g, Place::finite(Polynomial::x(F)), opt.precision);
        all &= check(sf.orders == std::vector<long>({0, 2}) && smith_roundtrip_ok(g, sf),
                     "local factorization orders and round trip");
    }
    {
        all &= check(zeta_hat_eval(ZetaData::projective_line(2), 2) == BigRat(2, 3),
                     "zeta value at n = 2 over GF(2)");
        all &= check(semistable_mass_oracle(2, 3, 0) == BigRat(1, 168),
                     "rank-3 semistable mass over GF(2)");
    }
    return all ? 0 : 2;
}

}  // namespace agcodes
