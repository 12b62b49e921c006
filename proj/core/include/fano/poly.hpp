#ifndef FANO_POLY_HPP
#define FANO_POLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fano/cyclo.hpp"
#include "fano/symbols.hpp"

namespace fano {

// Sparse monomial: sorted (variable, exponent) pairs, no zero exponents.
struct Mono {
    std::vector<std::pair<VarId, std::uint32_t>> e;

    static Mono one() { return {}; }
    static Mono var(VarId v, std::uint32_t k = 1);

    std::size_t degree() const;
    std::uint32_t exponent(VarId v) const;
    bool is_one() const { return e.empty(); }

    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;        // this | o
    Mono divided_into(const Mono& o) const;   // o / this (requires divides)
    Mono gcd(const Mono& o) const;

    bool operator==(const Mono& o) const { return e == o.e; }
    std::size_t hash() const;
};

// Canonical term order for storage and printing: total degree descending, then
// earlier variables with larger exponents first.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse multivariate polynomial over Q(zeta_N) scalars. All variables (orbit
// coordinates, the independent variable, free parameters) share one namespace;
// operations that care about a distinguished subset take it as an argument.
class Poly {
  public:
    using TermMap = std::map<Mono, Cyclo, MonoLess>;

    Poly() = default;
    Poly(const Cyclo& c);
    Poly(const Q& q) : Poly(Cyclo(q)) {}
    Poly(long v) : Poly(Cyclo(v)) {}
    static Poly variable(VarId v);
    static Poly term(const Mono& m, const Cyclo& c);

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Cyclo constant_value() const; // 0 if zero; throws if nonconstant
    std::size_t term_count() const { return t_.size(); }

    std::size_t degree() const;                       // total degree, 0 for 0
    std::size_t degree_in(VarId v) const;
    std::size_t degree_in(const std::set<VarId>& vs) const;
    bool is_homogeneous_in(const std::set<VarId>& vs, std::size_t* deg = nullptr) const;
    std::set<VarId> variables() const;
    bool uses_variable(VarId v) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly scaled(const Cyclo& c) const;
    Poly mul_mono(const Mono& m, const Cyclo& c) const;
    Poly div_mono(const Mono& m) const; // m must divide every term
    Poly pow(std::uint64_t e) const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(VarId v) const;
    Poly substituted(const std::map<VarId, Poly>& vals) const;
    Poly evaluated(const std::map<VarId, Cyclo>& vals) const; // partial evaluation
    Cyclo eval_all(const std::map<VarId, Cyclo>& vals) const;

    // Division helpers for fraction-free elimination.
    static std::optional<Poly> divide_exact(const Poly& num, const Poly& den);

    // Common monomial factor and rational scalar content (of all coefficients).
    Mono monomial_content() const;
    Q rational_content() const; // positive; 0 for the zero polynomial
    const Cyclo& leading_coeff() const; // w.r.t. canonical order; poly must be nonzero
    const Mono& leading_mono() const;

    // lcm of the coefficient conductors: the smallest ambient n whose root of
    // unity can express every coefficient
    unsigned coefficient_conductor() const;
    // Canonical text form. Nonzero conductor fixes what w means; 0 prints
    // against coefficient_conductor().
    std::string str(unsigned conductor = 0) const;

    // Internal: drop zero coefficients; exposed for builders.
    void prune();
    TermMap& mutable_terms() { return t_; }

  private:
    TermMap t_;
};

Poly operator*(const Cyclo& c, const Poly& p);

// gcd of rational contents, sign-normalized; used in display normalization.
Q q_content_gcd(const Q& a, const Q& b);

} // namespace fano

#endif
