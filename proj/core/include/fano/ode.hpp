#ifndef FANO_ODE_HPP
#define FANO_ODE_HPP

#include <string>
#include <utility>
#include <vector>

#include "fano/radical.hpp"

namespace fano {

// Monic linear operator x^(n) + c_{n-1} x^(n-1) + ... + c_0 x in a single
// independent variable. Coefficients live in a radical extension of the
// rational function field so gauge-transformed equations stay exact.
class LinearODE {
  public:
    // coeffs holds c_0 .. c_{n-1}; the leading coefficient is implicitly 1
    LinearODE(VarId var, std::vector<RadElem> coeffs);
    static LinearODE from_rational(VarId var, std::vector<RatExpr> coeffs);

    unsigned order() const { return static_cast<unsigned>(c_.size()); }
    VarId var() const { return var_; }
    const std::vector<RadElem>& coefficients() const { return c_; }
    const RadElem& coefficient(unsigned k) const;

    bool has_rational_coefficients() const;
    std::vector<RatExpr> rational_coefficients() const;

    bool operator==(const LinearODE& o) const;
    bool operator!=(const LinearODE& o) const { return !(*this == o); }

    std::string str(unsigned conductor = 0) const;

  private:
    VarId var_;
    std::vector<RadElem> c_;
};

// Product prod_i b_i^{e_i} with rational function bases and rational
// exponents. Closed under inversion and rational powers, and its logarithmic
// derivative is an honest rational function, which is exactly what the
// conjugation formulas consume.
class GaugeFactor {
  public:
    GaugeFactor(VarId var, std::vector<std::pair<RatExpr, Q>> factors);
    // accepts the usual written form, eg "t^(-1/3)*(t-1)^(-1/3)"
    static GaugeFactor parse(const std::string& text, unsigned conductor = 1);

    VarId var() const { return var_; }
    const std::vector<std::pair<RatExpr, Q>>& factors() const { return f_; }
    bool is_trivial() const { return f_.empty(); }

    GaugeFactor inverse() const;
    GaugeFactor pow(const Q& e) const;
    GaugeFactor operator*(const GaugeFactor& o) const;

    // f'/f = sum e_i b_i'/b_i
    RatExpr log_derivative() const;
    RadElem as_radelem() const;

    std::string str(unsigned conductor = 0) const;

  private:
    VarId var_;
    std::vector<std::pair<RatExpr, Q>> f_;
};

// Equation satisfied by f*y when y runs over solutions of eq. Monic again;
// conjugating by f and then by 1/f returns the original equation.
LinearODE conjugate_by_factor(const LinearODE& eq, const GaugeFactor& f);

// Equation satisfied by y(z) = x(rho(z)) for solutions x of eq, where rho is
// a nonconstant rational map written in new_var. Requires rational
// coefficients.
LinearODE pullback(const LinearODE& eq, const RatExpr& rho, VarId new_var);

// L(p) for a polynomial p in the equation variable.
RadElem apply_operator(const LinearODE& eq, const Poly& p);

// Taylor coefficients of a univariate rational function at an ordinary point.
std::vector<Cyclo> taylor_coefficients(const RatExpr& f, VarId var, const Cyclo& at,
                                       unsigned count);

// Power series solution around an ordinary point from the first n
// coefficients; requires rational coefficients that are finite at the point.
std::vector<Cyclo> solve_series(const LinearODE& eq, const Cyclo& at,
                                const std::vector<Cyclo>& initial, unsigned count);

} // namespace fano

#endif
