#ifndef FANO_CYCLO_HPP
#define FANO_CYCLO_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

unsigned euler_phi(unsigned n);

// Monic integer coefficients of the n-th cyclotomic polynomial, constant term
// first, length phi(n)+1. Cached.
const std::vector<Z>& cyclotomic_poly(unsigned n);

// Element of Q(zeta_N) as a coefficient vector of length phi(N) in the power
// basis 1, zeta, ..., zeta^{phi(N)-1}, reduced mod the cyclotomic polynomial.
// Canonical form: conductor 1 whenever the value is rational.
class Cyclo {
  public:
    Cyclo() : n_(1), c_(1, Q(0)) {}
    Cyclo(const Q& q) : n_(1), c_(1, q) {}
    Cyclo(long v) : n_(1), c_(1, Q(v)) {}
    static Cyclo zeta(unsigned n);
    static Cyclo from_coeffs(unsigned n, std::vector<Q> coeffs); // reduces + canonicalizes

    unsigned conductor() const { return n_; }
    const std::vector<Q>& coeffs() const { return c_; }
    // Coefficient vector over the power basis of zeta_n for any multiple n of
    // the conductor; lets mixed-conductor values print against one ambient n.
    std::vector<Q> coeffs_at(unsigned n) const;

    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    const Q& rational() const; // throws if not rational

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;
    Cyclo inv() const;
    Cyclo pow(long e) const;
    Cyclo& operator+=(const Cyclo& o) { *this = *this + o; return *this; }
    Cyclo& operator-=(const Cyclo& o) { *this = *this - o; return *this; }
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }
    // Total order on canonical forms, used for deterministic containers.
    int cmp(const Cyclo& o) const;

    std::complex<double> to_complex() const;
    std::size_t hash() const;
    std::string str() const; // debug form; pretty printing lives in printer.cpp

  private:
    unsigned n_;
    std::vector<Q> c_;
    void canonicalize();
    // Raw embedding into Q(zeta_m) without re-canonicalizing, so coefficient
    // vectors of both operands line up during arithmetic.
    Cyclo promoted_raw(unsigned m) const;
};

} // namespace fano

#endif
