#include <doctest.h>

#include <random>
#include <vector>

#include "fano/ideal.hpp"
#include "fano/parser.hpp"
#include "test_util.hpp"

using namespace fano;
using namespace fano::testutil;

namespace {

const VarId kGX = intern_symbol("x");
const VarId kGY = intern_symbol("y");
const VarId kGZ = intern_symbol("z");
const VarId kGT = intern_symbol("t");

const std::vector<VarId> kXY = {kGX, kGY};
const std::vector<VarId> kXYZ = {kGX, kGY, kGZ};

GPoly gp(const std::string& s, const std::vector<VarId>& vars) {
    return to_gpoly(parse_poly(s), vars);
}

GPoly random_gpoly(std::mt19937_64& rng, const std::vector<VarId>& vars, int terms) {
    std::uniform_int_distribution<unsigned> expo(0, 3);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> witht(0, 3);
    GPoly p;
    for (int i = 0; i < terms; ++i) {
        GMono m = GMono::one(vars.size());
        for (std::size_t j = 0; j < vars.size(); ++j) m.e[j] = expo(rng);
        RatExpr c(Q(coeff(rng)));
        if (witht(rng) == 0) c = c * RatExpr::variable(kGT);
        p = p + GPoly::term(m, c);
    }
    return p;
}

} // namespace

TEST_CASE("grevlex orders degree first, then reverse lex") {
    GMono x{{1, 0, 0}}, y{{0, 1, 0}}, z{{0, 0, 1}};
    GrevlexGreater gt;
    CHECK(gt(x, y));
    CHECK(gt(y, z));
    CHECK(gt(x * x, y * z));
    CHECK(gt(x * y, y * y));
    CHECK(gt(y * y, x * z));
    CHECK(gt(x * z, y * z));
    CHECK(gt(y * z, z * z));
    CHECK(!gt(x, x));
    CHECK(gt(z * z, x)); // degree dominates
}

TEST_CASE("gpoly arithmetic matches expansion") {
    auto rng = make_rng(909);
    for (int i = 0; i < 50; ++i) {
        GPoly a = random_gpoly(rng, kXYZ, 4);
        GPoly b = random_gpoly(rng, kXYZ, 4);
        CHECK(expand_gpoly(a + b, kXYZ) == expand_gpoly(a, kXYZ) + expand_gpoly(b, kXYZ));
        CHECK(expand_gpoly(a * b, kXYZ) == expand_gpoly(a, kXYZ) * expand_gpoly(b, kXYZ));
        CHECK(expand_gpoly(a - b, kXYZ) == expand_gpoly(a, kXYZ) - expand_gpoly(b, kXYZ));
    }
    // coefficients keep non-main variables
    GPoly p = gp("t*x^2+y", kXY);
    CHECK(p.leading_coeff() == RatExpr::variable(kGT));
    CHECK(p.leading_mono() == GMono{{2, 0}});
}

TEST_CASE("buchberger closes the classic x^2+y^2, xy example") {
    auto basis = buchberger({gp("x^2+y^2", kXY), gp("x*y", kXY)});
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == gp("x*y", kXY));
    CHECK(basis[1] == gp("x^2+y^2", kXY));
    CHECK(basis[2] == gp("y^3", kXY));
    CHECK(normal_form(gp("x^3", kXY), basis).is_zero());
    CHECK(normal_form(gp("y^2", kXY), basis) == gp("y^2", kXY));
    CHECK(normal_form(gp("x^3+x*y+7", kXY), basis) == gp("7", kXY));
}

TEST_CASE("principal ideals reduce by plain division") {
    std::vector<GPoly> basis = {gp("y^2-1", kXY).monic()};
    CHECK(normal_form(gp("y^4-1", kXY), basis).is_zero());
    CHECK(normal_form(gp("y^3", kXY), basis) == gp("y", kXY));
    CHECK(normal_form(gp("x*y^2-x", kXY), basis).is_zero());
    // substitution ideal with a rational-function value
    GPoly gen = gp("x", kXY) - GPoly::term(GMono::one(2), RatExpr::variable(kGT).inverse());
    CHECK(normal_form(gp("x^2", kXY), {gen}) ==
          GPoly::term(GMono::one(2), RatExpr::variable(kGT).pow(-2)));
}

TEST_CASE("normal form is stable on ideal shifts and products") {
    auto rng = make_rng(910);
    auto basis = buchberger({gp("x^2+y^2", kXY), gp("x*y", kXY)});
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        GPoly f = random_gpoly(rng, kXY, 4);
        GPoly g = random_gpoly(rng, kXY, 4);
        GPoly h = random_gpoly(rng, kXY, 3);
        // adding a multiple of the ideal does not change the normal form
        CHECK(normal_form(f + h * basis[0], basis) == normal_form(f, basis));
        CHECK(normal_form(f + h * basis[1], basis) == normal_form(f, basis));
        // NF is multiplicative up to reduction
        CHECK(normal_form(f * g, basis) ==
              normal_form(normal_form(f, basis) * normal_form(g, basis), basis));
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("buchberger output is deterministic") {
    auto run = [] {
        auto basis = buchberger({gp("x^2+y^2+z^2-1", kXYZ), gp("x*y-z", kXYZ),
                                 gp("x-z^2", kXYZ)});
        std::string s;
        for (const auto& g : basis) s += gpoly_str(g, kXYZ) + ";";
        return s;
    };
    std::string a = run();
    CHECK(a == run());
    CHECK(!a.empty());
}

TEST_CASE("groebner membership certificates") {
    // (x+y)^3 lies in <x+y>
    CHECK(normal_form(gp("(x+y)^3", kXY), buchberger({gp("x+y", kXY)})).is_zero());
    // x^2+y^2 does not lie in <x*y>
    CHECK(!normal_form(gp("x^2+y^2", kXY), buchberger({gp("x*y", kXY)})).is_zero());
    // spheres: z^4 - 2z^2 + 1 - w^2... use x,y,z: check <x^2+y^2-1, x^2-y>
    auto basis = buchberger({gp("x^2+y^2-1", kXY), gp("x^2-y", kXY)});
    CHECK(normal_form(gp("y^2+y-1", kXY), basis).is_zero());
}

TEST_CASE("gpoly conversion rejects main-variable denominators") {
    RatExpr bad = RatExpr(Poly(1)) / RatExpr::variable(kGX);
    CHECK_THROWS(to_gpoly(bad, kXY));
    RatExpr ok = RatExpr::variable(kGX) / RatExpr::variable(kGT);
    GPoly p = to_gpoly(ok, kXY);
    CHECK(expand_gpoly(p, kXY) == ok);
}
