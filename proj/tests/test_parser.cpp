#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "fano/errors.hpp"
#include "fano/parser.hpp"
#include "test_util.hpp"

using namespace fano;
using namespace fano::testutil;

namespace {

const VarId kX1 = intern_symbol("X1");
const VarId kX2 = intern_symbol("X2");
const VarId kX3 = intern_symbol("X3");
const VarId kT = intern_symbol("t");

Poly pvar(VarId v) { return Poly::variable(v); }

} // namespace

TEST_CASE("parser handles sums of powers") {
    Poly p = parse_poly("X1^3+X2^3+X3^3");
    Poly want = pvar(kX1).pow(3) + pvar(kX2).pow(3) + pvar(kX3).pow(3);
    CHECK(p == want);
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("(X1+X2)^2") == (pvar(kX1) + pvar(kX2)).pow(2));
}

TEST_CASE("parser precedence and associativity") {
    CHECK(parse_poly("1+2*3") == Poly(Q(7)));
    CHECK(parse_poly("2*3+1") == Poly(Q(7)));
    CHECK(parse_poly("10-4-3") == Poly(Q(3)));
    CHECK(parse_ratexpr("24/4/3") == RatExpr(Q(2)));
    CHECK(parse_poly("-X1^2") == -pvar(kX1).pow(2));
    CHECK(parse_poly("(-X1)^2") == pvar(kX1).pow(2));
    CHECK(parse_poly("2^3") == Poly(Q(8)));
    CHECK(parse_ratexpr("2^(-3)") == RatExpr(Q(1), Q(8)));
}

TEST_CASE("parser rejects chained exponents") {
    CHECK_THROWS_AS(parse_expression("2^3^2"), parse_error);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_expression("X1 + + X2");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 6);
    }
    try {
        parse_expression("X1+\n  )");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 3);
    }
    CHECK_THROWS_AS(parse_expression(""), parse_error);
    CHECK_THROWS_AS(parse_expression("X1+X2)"), parse_error);
    CHECK_THROWS_AS(parse_expression("(X1+X2"), parse_error);
    CHECK_THROWS_AS(parse_expression("X1^(1/0)"), parse_error);
}

TEST_CASE("symbol collection") {
    auto syms = expr_symbols(parse_expression("X1*t+w*X2^2"));
    CHECK(syms == std::set<std::string>{"X1", "X2", "t", "w"});
}

TEST_CASE("root of unity evaluation") {
    RatExpr z = parse_ratexpr("w^2+w+1", 3);
    CHECK(z.is_zero());
    RatExpr i2 = parse_ratexpr("w*w", 4);
    CHECK(i2 == RatExpr(Q(-1)));
    CHECK_THROWS_AS(parse_poly("w+1", 1), error);
}

TEST_CASE("rational expressions and failure modes") {
    RatExpr r = parse_ratexpr("(t^2-t+1)^3/(t^2-t)^2");
    Poly t = pvar(kT);
    RatExpr want(
        (t.pow(2) - t + Poly(Q(1))).pow(3),
        (t.pow(2) - t).pow(2));
    CHECK(r == want);
    CHECK_THROWS_AS(parse_poly("X1/X2"), error);
    CHECK_THROWS_AS(parse_ratexpr("1/(X1-X1)"), error);
    CHECK_THROWS_AS(parse_ratexpr("t^(1/3)"), error);
    // division by a constant still lands in the polynomial ring
    CHECK(parse_poly("X1/2") == Cyclo(Q(1, 2)) * pvar(kX1));
}

namespace {

Expr num(long v) {
    Expr e;
    e.kind = Expr::Kind::number;
    e.value = Q(v);
    return e;
}

Expr sym(const std::string& n) {
    Expr e;
    e.kind = Expr::Kind::symbol;
    e.name = n;
    return e;
}

Expr node(Expr::Kind k, Expr a, Expr b) {
    Expr e;
    e.kind = k;
    e.kids.push_back(std::move(a));
    e.kids.push_back(std::move(b));
    return e;
}

Expr neg(Expr a) {
    Expr e;
    e.kind = Expr::Kind::neg;
    e.kids.push_back(std::move(a));
    return e;
}

Expr powed(Expr base, Q expo) {
    Expr e;
    e.kind = Expr::Kind::pow;
    e.kids.push_back(std::move(base));
    e.exponent = std::move(expo);
    return e;
}

Expr random_tree(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> leaf(0, 5);
    if (depth <= 0 || leaf(rng) == 0) {
        if (leaf(rng) < 3) return num(std::uniform_int_distribution<long>(0, 12)(rng));
        static const std::vector<std::string> names = {"X1", "X2", "X3", "t", "lam", "mu", "w"};
        return sym(names[std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng)]);
    }
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
        case 0: return node(Expr::Kind::add, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 1: return node(Expr::Kind::sub, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 2: return node(Expr::Kind::mul, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 3: return node(Expr::Kind::div, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 4: return neg(random_tree(rng, depth - 1));
        default: {
            static const std::vector<Q> expos = {
                Q(0), Q(1), Q(2), Q(5), Q(-1), Q(-3), Q(1, 2), Q(-1, 2), Q(2, 3), Q(7, 2)};
            return powed(random_tree(rng, depth - 1),
                         expos[std::uniform_int_distribution<std::size_t>(0, expos.size() - 1)(rng)]);
        }
    }
}

} // namespace

TEST_CASE("printing round-trips through the parser") {
    for (const char* s : {"X1^3+X2^3+X3^3", "t^(1/3)*(t-1)^(1/3)", "0",
                          "-(2/3)*(2*t-1)/(t*(t-1))", "X1*(65536*X1^10-16896*X1^5*X2^5-11*X2^10)",
                          "w^2*X1+w*X2", "1/2+t^(-7/2)"}) {
        Expr e = parse_expression(s);
        CHECK(parse_expression(print_expression(e)) == e);
    }
    auto rng = make_rng(404);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        Expr e = random_tree(rng, 8);
        std::string s = print_expression(e);
        CAPTURE(s);
        CHECK(parse_expression(s) == e);
        ++checked;
    }
    CHECK(checked == 400);
}

TEST_CASE("printed polynomials parse back to the same value") {
    auto rng = make_rng(405);
    for (int i = 0; i < 120; ++i) {
        Poly p = random_poly(rng, {kX1, kX2, kT}, 5, 3, 12);
        // coefficients may canonicalize into subfields, so pin the ambient
        // conductor on both sides
        CHECK(parse_poly(p.str(12), 12) == p);
        CHECK(parse_poly(p.str(), p.coefficient_conductor()) == p);
    }
}
