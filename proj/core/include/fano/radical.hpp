#ifndef FANO_RADICAL_HPP
#define FANO_RADICAL_HPP

#include <map>
#include <memory>
#include <vector>

#include "fano/parser.hpp"
#include "fano/ratexpr.hpp"

namespace fano {

// One flat radical r with r^index = radicand; radicands are rational in the
// independent variable and parameters, never in other radicals.
struct Radical {
    RatExpr radicand;
    unsigned index; // >= 2
};

class RadicalTower {
  public:
    RadicalTower() = default;
    explicit RadicalTower(std::vector<Radical> rads) : rads_(std::move(rads)) {}
    const std::vector<Radical>& radicals() const { return rads_; }
    std::size_t size() const { return rads_.size(); }
    std::size_t basis_size() const;

  private:
    std::vector<Radical> rads_;
};

using TowerPtr = std::shared_ptr<const RadicalTower>;

// Element of the radical extension: a finite sum of rational-function
// multiples of radical monomials r_0^{e_0}...r_{k-1}^{e_{k-1}}, e_j < index_j.
// Mixed-tower arithmetic merges towers, matching radicals by radicand and
// index. Equality is coefficientwise, which is exact on every bundled tower.
class RadElem {
  public:
    using Key = std::vector<unsigned>;

    RadElem(); // zero over the empty tower
    RadElem(const RatExpr& r);
    RadElem(const Poly& p) : RadElem(RatExpr(p)) {}
    RadElem(const Q& q) : RadElem(RatExpr(q)) {}
    RadElem(long v) : RadElem(RatExpr(v)) {}

    // r_j^e over the given tower, times an optional rational factor.
    static RadElem monomial(TowerPtr tower, const Key& exponents,
                            const RatExpr& coeff = RatExpr(1));
    static RadElem from_expr(const Expr& e, unsigned conductor = 1);
    static RadElem parse(const std::string& text, unsigned conductor = 1);

    TowerPtr tower() const { return tower_; }
    const std::map<Key, RatExpr>& terms() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const; // lies in the base rational-function field
    RatExpr rational_part() const; // throws unless is_rational

    RadElem operator-() const;
    RadElem operator+(const RadElem& o) const;
    RadElem operator-(const RadElem& o) const;
    RadElem operator*(const RadElem& o) const;
    RadElem operator/(const RadElem& o) const;
    RadElem& operator+=(const RadElem& o) { *this = *this + o; return *this; }
    RadElem& operator-=(const RadElem& o) { *this = *this - o; return *this; }
    RadElem& operator*=(const RadElem& o) { *this = *this * o; return *this; }
    RadElem& operator/=(const RadElem& o) { *this = *this / o; return *this; }
    RadElem pow(long e) const;

    bool equals(const RadElem& o) const;
    bool operator==(const RadElem& o) const { return equals(o); }
    bool operator!=(const RadElem& o) const { return !equals(o); }

    // d/dv using r' = r g'/(index g); stays on the same basis.
    RadElem derivative(VarId v) const;

    // substitute exact scalar values for parameters (not the time variable
    // when it appears inside radicands of surviving radicals)
    RadElem evaluated(const std::map<VarId, Cyclo>& vals) const;

    std::string str(unsigned conductor = 0) const;

  private:
    TowerPtr tower_;
    std::map<Key, RatExpr> c_;
    void prune();
};

} // namespace fano

#endif
