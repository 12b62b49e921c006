#ifndef FANO_RATEXPR_HPP
#define FANO_RATEXPR_HPP

#include <map>
#include <set>
#include <string>
#include <utility>

#include "fano/poly.hpp"

namespace fano {

// Quotient of two polynomials. Kept only lightly normalized: denominators are
// monic with common monomial content stripped, but num/den are not forced
// coprime. equals() compares by cross multiplication, so representation never
// affects semantics; reduced() makes a best effort at actual cancellation.
class RatExpr {
  public:
    RatExpr() : n_(), d_(1) {}
    RatExpr(const Poly& p) : n_(p), d_(1) {}
    RatExpr(const Q& q) : n_(q), d_(1) {}
    RatExpr(long v) : n_(v), d_(1) {}
    RatExpr(Poly num, Poly den);
    static RatExpr variable(VarId v) { return RatExpr(Poly::variable(v)); }

    const Poly& num() const { return n_; }
    const Poly& den() const { return d_; }
    bool is_zero() const { return n_.is_zero(); }
    bool is_poly() const { return d_.is_constant(); }
    bool is_constant() const { return n_.is_constant() && d_.is_constant(); }
    Cyclo constant_value() const;
    Poly as_poly() const; // throws unless the denominator divides exactly

    RatExpr operator-() const;
    RatExpr operator+(const RatExpr& o) const;
    RatExpr operator-(const RatExpr& o) const;
    RatExpr operator*(const RatExpr& o) const;
    RatExpr operator/(const RatExpr& o) const;
    RatExpr& operator+=(const RatExpr& o) { *this = *this + o; return *this; }
    RatExpr& operator-=(const RatExpr& o) { *this = *this - o; return *this; }
    RatExpr& operator*=(const RatExpr& o) { *this = *this * o; return *this; }
    RatExpr& operator/=(const RatExpr& o) { *this = *this / o; return *this; }
    RatExpr inverse() const;
    RatExpr pow(long e) const;

    bool equals(const RatExpr& o) const;
    bool operator==(const RatExpr& o) const { return equals(o); }
    bool operator!=(const RatExpr& o) const { return !equals(o); }

    RatExpr derivative(VarId v) const;
    RatExpr substituted(const std::map<VarId, RatExpr>& vals) const;
    RatExpr evaluated(const std::map<VarId, Cyclo>& vals) const;
    Cyclo eval_all(const std::map<VarId, Cyclo>& vals) const;

    RatExpr reduced() const;
    void reduce_in_place();

    // Unique display form: numerator and denominator integral with no common
    // rational factor, denominator leading coefficient positive when rational.
    std::pair<Poly, Poly> display_pair() const;
    std::string str(unsigned conductor = 0) const;

    std::set<VarId> variables() const;

  private:
    Poly n_, d_;
    void normalize();
};

// Evaluate a polynomial with rational-expression values for some variables.
RatExpr eval_poly(const Poly& p, const std::map<VarId, RatExpr>& vals);

// gcd of two univariate dense coefficient vectors over the cyclotomic field;
// exposed for tests.
std::vector<Cyclo> univariate_gcd(std::vector<Cyclo> a, std::vector<Cyclo> b);

} // namespace fano

#endif
