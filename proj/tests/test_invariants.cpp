#include <doctest.h>

#include <random>
#include <vector>

#include "fano/errors.hpp"
#include "fano/invariants.hpp"
#include "fano/parser.hpp"
#include "test_util.hpp"

using namespace fano;
using namespace fano::testutil;

#ifndef FANO_SCENARIO_DIR
#define FANO_SCENARIO_DIR "scenarios"
#endif

namespace {

const VarId kX1 = intern_symbol("X1");
const VarId kX2 = intern_symbol("X2");
const VarId kX3 = intern_symbol("X3");
const std::vector<VarId> kV2 = {kX1, kX2};
const std::vector<VarId> kV3 = {kX1, kX2, kX3};

// the unique quartic fixed by the bundled order 168 group; the cyclic
// orientation matches the diagonal generator diag(w, w^2, w^4)
Poly klein_p4() { return parse_poly("X1^3*X3+X2^3*X1+X3^3*X2"); }

// determinant by cofactor expansion along a chosen row, as an independent
// cross-check of the elimination-based routine
Poly cofactor_det(const PolyMat& m, std::size_t row) {
    if (m.rows() == 1) return m.at(0, 0);
    Poly out;
    int sign = row % 2 == 0 ? 1 : -1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        PolyMat sub(m.rows() - 1, m.cols() - 1);
        for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            for (std::size_t c = 0, cc = 0; c < m.cols(); ++c) {
                if (c == j) continue;
                sub.at(rr, cc) = m.at(r, c);
                ++cc;
            }
            ++rr;
        }
        out += Cyclo(sign) * m.at(row, j) * cofactor_det(sub, 0);
        sign = -sign;
    }
    return out;
}

Poly random_homogeneous(std::mt19937_64& rng, const std::vector<VarId>& vars, unsigned deg) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> cut(0, deg);
    Poly p;
    for (int t = 0; t < 6; ++t) {
        unsigned a = cut(rng), rest = deg;
        Mono m;
        for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
            a = std::min(cut(rng), rest);
            if (a) m = m * Mono::var(vars[i], a);
            rest -= a;
        }
        if (rest) m = m * Mono::var(vars.back(), rest);
        p += Poly::term(m, Cyclo(coeff(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("hessian of a quadric is a constant") {
    CHECK(hessian_invariant(parse_poly("X1^2+X2^2+X3^2"), kV3, Cyclo(1)) == Poly(Q(8)));
    CHECK_THROWS(hessian_invariant(parse_poly("X1^2+X2"), kV3, Cyclo(1)));
}

TEST_CASE("klein degree six invariant from the hessian constructor") {
    Poly p6 = hessian_invariant(klein_p4(), kV3, Cyclo(Q(1, 54)));
    CHECK(p6.degree_in({kX1, kX2, kX3}) == 6);
    CHECK(p6.is_homogeneous_in({kX1, kX2, kX3}));
    // independent determinant oracle: cofactor expansion along each row
    PolyMat h = hessian_matrix(klein_p4(), kV3);
    for (std::size_t row = 0; row < 3; ++row)
        CHECK(Cyclo(Q(1, 54)) * cofactor_det(h, row) == p6);
    MatrixGroup g = load_group_file(std::string(FANO_SCENARIO_DIR) + "/groups/klein.json");
    CHECK(is_invariant(g, p6, kV3));
    CHECK(is_invariant(g, klein_p4(), kV3));
}

TEST_CASE("klein degree fourteen invariant from the bordered constructor") {
    Poly p4 = klein_p4();
    Poly p6 = hessian_invariant(p4, kV3, Cyclo(Q(1, 54)));
    Poly p14 = bordered_hessian_invariant(p4, p6, kV3, Cyclo(Q(1, 9)));
    CHECK(p14.degree_in({kX1, kX2, kX3}) == 14);
    MatrixGroup g = load_group_file(std::string(FANO_SCENARIO_DIR) + "/groups/klein.json");
    CHECK(is_invariant(g, p14, kV3));
    CHECK(bordered_hessian_invariant(p4, Poly(), kV3, Cyclo(1)).is_zero());
    // reynolds fixed point confirms invariance independently
    CHECK(reynolds(g, p14, kV3) == p14);
}

TEST_CASE("hessian degree law") {
    auto rng = make_rng(515);
    int nonzero = 0;
    for (int i = 0; i < 20; ++i) {
        unsigned d = 3 + (i % 3);
        Poly p = random_homogeneous(rng, kV3, d);
        if (p.is_zero()) continue;
        Poly h = hessian_invariant(p, kV3, Cyclo(1));
        if (h.is_zero()) continue;
        CHECK(h.degree_in({kX1, kX2, kX3}) == 3 * (d - 2));
        ++nonzero;
    }
    CHECK(nonzero > 10);
}

TEST_CASE("jacobian determinant of the hesse triple is invariant") {
    Poly p3 = parse_poly("X1^3+X2^3+X3^3");
    Poly q3 = parse_poly("X1*X2*X3");
    Poly p6 = parse_poly("X1^3*X2^3+X2^3*X3^3+X3^3*X1^3");
    Poly p9 = jacobian_invariant({p3, q3, p6}, kV3, Cyclo(1));
    CHECK(!p9.is_zero());
    CHECK(p9.degree_in({kX1, kX2, kX3}) == 9);
    MatrixGroup g = load_group_file(std::string(FANO_SCENARIO_DIR) + "/groups/hesse.json");
    CHECK(is_invariant(g, p9, kV3));
    // binary analogue for the two variable group
    Poly b6 = parse_poly("X1^5*X2-X1*X2^5");
    Poly b8 = parse_poly("X1^8+14*X1^4*X2^4+X2^8");
    Poly b12 = jacobian_invariant({b6, b8}, kV2, Cyclo(1));
    CHECK(b12.degree_in({kX1, kX2}) == 12);
    MatrixGroup a4 = load_group_file(std::string(FANO_SCENARIO_DIR) + "/groups/a4.json");
    CHECK(is_invariant(a4, b12, kV2));
}

TEST_CASE("invariant set validation") {
    MatrixGroup g = load_group_file(std::string(FANO_SCENARIO_DIR) + "/groups/hesse.json");
    InvariantSet s;
    s.vars = kV3;
    s.invariants.push_back({"P3", parse_poly("X1^3+X2^3+X3^3"), true, std::nullopt});
    s.invariants.push_back({"Q3", parse_poly("X1*X2*X3"), true, std::nullopt});
    s.invariants.push_back({"P6", parse_poly("X1^3*X2^3+X2^3*X3^3+X3^3*X1^3"), true, std::nullopt});
    s.lambda = 9;
    check_invariant_set(s, g);

    InvariantSet bad = s;
    bad.invariants[2] = {"nope", parse_poly("X1^3+X2^3"), true, std::nullopt};
    CHECK_THROWS_AS(check_invariant_set(bad, g), error);

    InvariantSet dep = s;
    dep.invariants[2] = {"sum", parse_poly("X1^3+X2^3+X3^3+X1*X2*X3"), true, std::nullopt};
    // still invariant, but algebraically dependent on the first two
    CHECK_THROWS_AS(check_invariant_set(dep, g), error);
}

namespace {

InvariantSet hesse_set() {
    InvariantSet s;
    s.vars = kV3;
    s.invariants.push_back({"P3", parse_poly("X1^3+X2^3+X3^3"), true, std::nullopt});
    s.invariants.push_back({"Q3", parse_poly("X1*X2*X3"), true, std::nullopt});
    s.invariants.push_back({"P6", parse_poly("X1^3*X2^3+X2^3*X3^3+X3^3*X1^3"), true, std::nullopt});
    s.lambda = 9;
    return s;
}

} // namespace

TEST_CASE("rewrite recovers generator expressions") {
    InvariantSet s = hesse_set();
    Poly p3 = s.invariants[0].p, q3 = s.invariants[1].p, p6 = s.invariants[2].p;
    VarId vP3 = intern_symbol("P3"), vQ3 = intern_symbol("Q3"), vP6 = intern_symbol("P6");

    Poly r = rewrite_in_generators(p6 * p6, s);
    CHECK(r == Poly::term(Mono::var(vP6, 2), Cyclo(1)));

    auto rng = make_rng(516);
    std::uniform_int_distribution<unsigned> e(0, 2);
    int checked = 0;
    for (int i = 0; i < 12; ++i) {
        unsigned a = e(rng), b = e(rng), c = e(rng);
        if (a + b + c == 0) continue;
        Poly p = p3.pow(a) * q3.pow(b) * p6.pow(c);
        Poly want(1);
        if (a) want = want * Poly::term(Mono::var(vP3, a), Cyclo(1));
        if (b) want = want * Poly::term(Mono::var(vQ3, b), Cyclo(1));
        if (c) want = want * Poly::term(Mono::var(vP6, c), Cyclo(1));
        CHECK(rewrite_in_generators(p, s) == want);
        ++checked;
    }
    CHECK(checked >= 8);

    // mixtures with scalar weights
    Poly mix = Cyclo(Q(4)) * p3.pow(2) + Cyclo(Q(-3)) * q3 * p3;
    Poly got = rewrite_in_generators(mix, s);
    Poly want = Cyclo(Q(4)) * Poly::term(Mono::var(vP3, 2), Cyclo(1)) +
                Cyclo(Q(-3)) * Poly::term(Mono::var(vP3, 1) * Mono::var(vQ3, 1), Cyclo(1));
    CHECK(got == want);
}

TEST_CASE("rewrite recovers the klein degree twelve combination") {
    Poly p4 = klein_p4();
    Poly p6 = hessian_invariant(p4, kV3, Cyclo(Q(1, 54)));
    Poly p14 = bordered_hessian_invariant(p4, p6, kV3, Cyclo(Q(1, 9)));
    InvariantSet s;
    s.vars = kV3;
    s.invariants.push_back({"P4", p4, true, std::nullopt});
    s.invariants.push_back({"P6", p6, true, std::nullopt});
    s.invariants.push_back({"P14", p14, true, std::nullopt});
    s.lambda = 42;
    Poly target = Cyclo(Q(4)) * p4.pow(3) + p6 * p6;
    Poly r = rewrite_in_generators(target, s);
    VarId vP4 = intern_symbol("P4"), vP6 = intern_symbol("P6");
    Poly want = Cyclo(Q(4)) * Poly::term(Mono::var(vP4, 3), Cyclo(1)) +
                Poly::term(Mono::var(vP6, 2), Cyclo(1));
    CHECK(r == want);
}

TEST_CASE("rewrite failures are certified") {
    InvariantSet s = hesse_set();
    CHECK_THROWS_AS(rewrite_in_generators(Poly::variable(kX1), s), rewrite_error);
    CHECK_THROWS_AS(rewrite_in_generators(parse_poly("X1^3-X2^3"), s), rewrite_error);
}

TEST_CASE("declared evaluations extend to expressions") {
    InvariantSet s = hesse_set();
    s.invariants[0].evaluation = RadElem::parse("t");
    s.invariants[1].evaluation = RadElem::parse("1");
    s.invariants[2].evaluation = RadElem::parse("t^(1/2)");
    VarId vP3 = intern_symbol("P3"), vQ3 = intern_symbol("Q3"), vP6 = intern_symbol("P6");
    VarId t = intern_symbol("t");

    Poly e = Poly::term(Mono::var(vP3, 2) * Mono::var(vQ3, 1), Cyclo(1));
    CHECK(phi_eval(e, s).rational_part() == RatExpr::variable(t).pow(2));

    Poly f = Poly::term(Mono::var(vP6, 2), Cyclo(1));
    CHECK(phi_eval(f, s).rational_part() == RatExpr::variable(t));

    Poly g = Poly::term(Mono::var(vP6, 1), Cyclo(1));
    CHECK(!phi_eval(g, s).is_rational());

    InvariantSet missing = hesse_set();
    CHECK_THROWS_AS(phi_eval(e, missing), error);
}
