#ifndef FANO_IDEAL_HPP
#define FANO_IDEAL_HPP

#include <map>
#include <vector>

#include "fano/poly.hpp"
#include "fano/ratexpr.hpp"

namespace fano {

// Exponent vector over a fixed ordered list of main variables. All monomials
// in one computation share the same arity.
struct GMono {
    std::vector<unsigned> e;

    static GMono one(std::size_t nvars) { return GMono{std::vector<unsigned>(nvars, 0)}; }
    unsigned degree() const;
    bool is_one() const;
    bool divides(const GMono& o) const;
    GMono operator*(const GMono& o) const;
    GMono divided_into(const GMono& o) const; // o / *this, requires divides(o)
    GMono lcm(const GMono& o) const;
    bool coprime(const GMono& o) const;
    bool operator==(const GMono& o) const { return e == o.e; }
};

// Graded reverse lexicographic order, descending, so map iteration starts at
// the leading term.
struct GrevlexGreater {
    bool operator()(const GMono& a, const GMono& b) const;
};

// Polynomial in the main variables with coefficients in the rational-function
// field of everything else (time and parameters).
class GPoly {
  public:
    using TermMap = std::map<GMono, RatExpr, GrevlexGreater>;

    GPoly() = default;
    static GPoly term(const GMono& m, const RatExpr& c);

    bool is_zero() const { return t_.empty(); }
    const TermMap& terms() const { return t_; }
    const GMono& leading_mono() const;
    const RatExpr& leading_coeff() const;
    unsigned degree() const;

    GPoly operator-() const;
    GPoly operator+(const GPoly& o) const;
    GPoly operator-(const GPoly& o) const;
    GPoly operator*(const GPoly& o) const;
    GPoly mul_term(const GMono& m, const RatExpr& c) const;
    GPoly scaled(const RatExpr& c) const;
    GPoly monic() const;

    bool operator==(const GPoly& o) const { return t_ == o.t_; }
    bool operator!=(const GPoly& o) const { return !(*this == o); }

  private:
    TermMap t_;
    void prune();
};

// Remainder of full division by the basis; canonical once basis is a Groebner
// basis.
GPoly normal_form(const GPoly& f, const std::vector<GPoly>& basis);

// Buchberger with the coprime-lead criterion, followed by interreduction.
// Result is monic, self-reduced, and sorted by leading monomial.
std::vector<GPoly> buchberger(std::vector<GPoly> gens);

// Split each term's monomial over main_vars (by position); everything else
// stays in the coefficient.
GPoly to_gpoly(const Poly& p, const std::vector<VarId>& main_vars);
GPoly to_gpoly(const RatExpr& r, const std::vector<VarId>& main_vars);

// Re-expand over the whole variable set.
RatExpr expand_gpoly(const GPoly& g, const std::vector<VarId>& main_vars);

std::string gpoly_str(const GPoly& g, const std::vector<VarId>& main_vars,
                      unsigned conductor = 0);

} // namespace fano

#endif
