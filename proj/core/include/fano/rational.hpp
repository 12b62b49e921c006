#ifndef FANO_RATIONAL_HPP
#define FANO_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "fano/errors.hpp"

namespace fano {

using Q = mpq_class;
using Z = mpz_class;

inline Q q_of(long n, long d = 1) { Q q(n, d); q.canonicalize(); return q; }

inline Q q_parse(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline Q q_pow(const Q& b, long e) {
    if (e == 0) return Q(1);
    Q r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), a);
    if (e < 0) {
        if (b == 0) throw error("zero to negative power");
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

inline std::string q_str(const Q& q) { return q.get_str(); }

inline bool q_is_integer(const Q& q) { return q.get_den() == 1; }

inline double q_double(const Q& q) { return q.get_d(); }

// Hash of the canonical form; gmp keeps mpq_class canonicalized.
inline std::size_t q_hash(const Q& q) {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](const mpz_class& z) {
        std::size_t limbs = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < limbs; ++i) {
            h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
            h *= 1099511628211ull;
        }
        h ^= static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 2);
        h *= 1099511628211ull;
    };
    mix(q.get_num());
    mix(q.get_den());
    return h;
}

} // namespace fano

#endif
