#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agcodes/codes.hpp"

#include "support.hpp"

using namespace agcodes;
using testsupport::Rng;

namespace {

struct RsFixture {
    FieldRef F = Field::gf(5);
    Divisor D = all_rational_points(F);
    Divisor E = 2 * Divisor::single(Place::infinity(F));
};

}  // namespace

TEST_CASE("the classical [5,3,3] code over GF(5)") {
    RsFixture fx;
    LinearCode C = classical_CL(fx.D, fx.E);
    CHECK(C.n == 5);
    CHECK(C.r == 1);
    CHECK(C.k == 3);
    DistanceResult d = min_distance(C);
    CHECK(d.exact);
    CHECK(d.d_symbol == 3);
    CHECK(d.d_block == 3);
    CHECK(symbol_weight(d.witness_codeword) == 3);

    // the generator is systematic after reduction; evaluating x^2 gives the
    // codeword determined by the message (0, 1, 4)
    std::vector<int> cw = encode(C, {0, 1, 4});
    CHECK(cw == std::vector<int>({0, 1, 4, 4, 1}));
}

TEST_CASE("erasure decoding recovers any d-1 = 2 erased coordinates") {
    RsFixture fx;
    LinearCode C = classical_CL(fx.D, fx.E);
    std::vector<int> cw = encode(C, {0, 1, 4});
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            std::vector<bool> er(5, false);
            er[size_t(i)] = er[size_t(j)] = true;
            std::vector<int> w = cw;
            w[size_t(i)] = w[size_t(j)] = 0;  // the erased values are ignored
            ErasureDecodeResult dec = erasure_decode(C, w, er);
            REQUIRE(dec.ok);
            CHECK(dec.codeword == cw);
        }
    // three erasures must fail for some pattern (k = 3 survivors needed)
    std::vector<bool> er(5, false);
    er[0] = er[1] = er[2] = true;
    ErasureDecodeResult dec = erasure_decode(C, cw, er);
    // surviving columns 3,4 cannot determine a 3-dimensional message
    CHECK_FALSE(dec.ok);
}

TEST_CASE("residue code is the exact dual of the evaluation code") {
    RsFixture fx;
    LinearCode C = classical_CL(fx.D, fx.E);
    LinearCode CO = classical_COmega_residue(fx.D, fx.E);
    CHECK(CO.k == 2);
    CHECK(same_row_space(CO.gen, dual_code(C).gen));
}

TEST_CASE("rank-1 adelic construction recovers the classical code") {
    RsFixture fx;
    LinearCode CL = classical_CL(fx.D, fx.E);
    AdelicMatrix g = idele_of_divisor(fx.E, 1, fx.F);
    LinearCode CF = build_code_F(fx.D, g);
    CHECK(same_row_space(CF.gen, CL.gen));
    LinearCode CO = build_code_Omega(fx.D, g);
    CHECK(same_row_space(CO.gen, dual_code(CL).gen));
}

TEST_CASE("construction rejects unusable inputs") {
    RsFixture fx;
    // matrix not balanced at D: a component sitting on an evaluation point
    AdelicMatrix bad = idele_of_divisor(Divisor::single(Place::rational_point(fx.F, 0)), 1, fx.F);
    CHECK_THROWS_AS(build_code_F(fx.D, bad), std::invalid_argument);
    // repeated point in D
    CHECK_THROWS_AS(build_code_F(2 * fx.D, idele_of_divisor(fx.E, 1, fx.F)),
                    std::invalid_argument);
    // overlapping supports in the classical construction
    CHECK_THROWS_AS(classical_CL(fx.D, Divisor::single(Place::rational_point(fx.F, 0))),
                    std::invalid_argument);
}

TEST_CASE("code duality holds for random rank-2 instances") {
    Rng rng(73);
    FieldRef F = Field::gf(3);
    Divisor D = all_rational_points(F);  // 3 points
    Place inf = Place::infinity(F);
    int done = 0;
    for (int t = 0; t < 40 && done < 12; ++t) {
        // balanced-at-D matrices: support only at infinity
        RatMat m = testsupport::random_local_matrix(F, rng, 2, inf, -2, 2);
        AdelicMatrix g = AdelicMatrix(2, F).with_component(inf, m);
        LinearCode C = build_code_F(D, g);
        LinearCode CO = build_code_Omega(D, g);
        CHECK(C.k + CO.k == C.length());
        CHECK(same_row_space(CO.gen, dual_code(C).gen));
        ++done;
    }
    CHECK(done == 12);
}

TEST_CASE("symbol weight of an evaluation row counts non-vanishing entries") {
    RsFixture fx;
    AdelicMatrix g = idele_of_divisor(fx.E, 1, fx.F);
    SectionSpace H = h0_basis(g);
    std::vector<Place> pts = fx.D.support();
    for (const auto& f : H.basis) {
        std::vector<int> row = evaluation_row(f, pts);
        auto delta = vanishing_pattern(f, pts);
        long vanished = 0;
        for (const auto& d : delta)
            for (int v : d) vanished += v;
        CHECK(symbol_weight(row) == long(row.size()) - vanished);
    }
}

TEST_CASE("the vanishing twist keeps the section and lowers the degree") {
    RsFixture fx;
    AdelicMatrix g = idele_of_divisor(fx.E, 1, fx.F);
    RationalFunction x = RationalFunction::x(fx.F);
    std::vector<RationalFunction> f = {x * x};  // vanishes only at the point 0
    AdelicMatrix chi = margin_element(f, fx.D, g);
    CHECK(chi.support().size() == 1);
    CHECK(degree(chi) == -1);
    AdelicMatrix lt = log_transform(g, f, fx.D);
    CHECK(is_section(lt, f));
    CHECK(degree(lt) == degree(g) - 1);
    // a non-section is rejected up front
    std::vector<RationalFunction> notin = {RationalFunction(Polynomial::x(fx.F)).pow(3)};
    CHECK_THROWS_AS(margin_element(notin, fx.D, g), std::invalid_argument);
}

TEST_CASE("random vanishing twists preserve membership") {
    Rng rng(79);
    FieldRef F = Field::gf(5);
    Divisor D = all_rational_points(F);
    Place inf = Place::infinity(F);
    int done = 0;
    for (int t = 0; t < 60 && done < 15; ++t) {
        RatMat m = testsupport::random_local_matrix(F, rng, 2, inf, -3, 0);
        AdelicMatrix g = AdelicMatrix(2, F).with_component(inf, m);
        SectionSpace H = h0_basis(g);
        if (H.basis.empty()) continue;
        const auto& f = H.basis[size_t(rng.uniform(0, long(H.basis.size()) - 1))];
        bool nonzero = false;
        for (const auto& fj : f)
            if (!fj.is_zero()) nonzero = true;
        if (!nonzero) continue;
        AdelicMatrix lt = log_transform(g, f, D);  // asserts membership internally
        CHECK(is_section(lt, f));
        ++done;
    }
    CHECK(done == 15);
}

TEST_CASE("the rank-2 interleaved audit finds the known violations") {
    RsFixture fx;
    AdelicMatrix g2 = idele_of_divisor(fx.E, 2, fx.F);
    CodeReport rep = distance_bound_audit(fx.D, g2);
    CHECK(rep.q == 5);
    CHECK(rep.r == 2);
    CHECK(rep.n == 5);
    CHECK(rep.k == 6);
    CHECK(rep.k_dual == 4);
    CHECK(rep.degree_g == 4);
    CHECK(rep.semistable);
    CHECK(rep.type == std::vector<long>({2, 2}));
    CHECK(rep.d_exact);
    CHECK(rep.d_symbol == 3);
    CHECK(rep.d_block == 3);
    CHECK(rep.designed_bound == 6);
    CHECK(rep.violations() == 2);
    // the violation is witnessed by an actual codeword of weight 3
    REQUIRE(!rep.distance_witness.empty());
    CHECK(symbol_weight(rep.distance_witness) == 3);
    // the witness is in the code: it solves back to a message
    LinearCode C = build_code_F(fx.D, g2);
    std::vector<bool> none(size_t(C.length()), false);
    CHECK(erasure_decode(C, rep.distance_witness, none).ok);
    std::string text = rep.to_text();
    CHECK(text.find("check.distance_floor: fail") != std::string::npos);
    CHECK(text.find("check.semistable_dimension: pass") != std::string::npos);
    CHECK(text.find("violations: 2") != std::string::npos);
}

TEST_CASE("a clean rank-1 audit passes every applicable bound") {
    RsFixture fx;
    AdelicMatrix g = idele_of_divisor(fx.E, 1, fx.F);
    CodeReport rep = distance_bound_audit(fx.D, g);
    CHECK(rep.violations() == 0);
    CHECK(rep.d_symbol == 3);
    CHECK(rep.designed_bound == 3);  // n - deg g = 5 - 2
    std::string text = rep.to_text();
    CHECK(text.find("check.distance_floor: pass") != std::string::npos);
    CHECK(text.find("check.singleton_window: pass") != std::string::npos);
}

TEST_CASE("generator export prints the header and base-10 entries") {
    RsFixture fx;
    LinearCode C = classical_CL(fx.D, fx.E);
    std::string text = generator_export(C);
    CHECK(text.rfind("5 3 5 1 5\n", 0) == 0);
    // k rows follow
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == 4);
}

TEST_CASE("budget exhaustion degrades to an honest interval") {
    RsFixture fx;
    LinearCode C = classical_CL(fx.D, fx.E);
    DistanceResult d = min_distance(C, 10);  // 5^3 = 125 > 10
    CHECK_FALSE(d.exact);
    CHECK(d.d_symbol >= 3);  // the best found can never beat the true distance
    CHECK(d.lower_bound >= 1);
}
