#ifndef FANO_TEST_UTIL_HPP
#define FANO_TEST_UTIL_HPP

#include <random>

#include "fano/cyclo.hpp"
#include "fano/poly.hpp"

namespace fano::testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0xf0a7dead) { return std::mt19937_64(seed); }

inline Q random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return q_of(num(rng), den(rng));
}

inline Cyclo random_cyclo(std::mt19937_64& rng, unsigned conductor) {
    std::vector<Q> cs(euler_phi(conductor));
    for (auto& q : cs) q = random_q(rng);
    return Cyclo::from_coeffs(conductor, cs);
}

// Sparse random polynomial: up to max_terms monomials in the given variables.
inline Poly random_poly(std::mt19937_64& rng, const std::vector<VarId>& vars,
                        unsigned max_terms = 4, unsigned max_exp = 3, unsigned conductor = 4) {
    std::uniform_int_distribution<unsigned> nterms(0, max_terms), expo(0, max_exp);
    Poly p;
    unsigned n = nterms(rng);
    for (unsigned i = 0; i < n; ++i) {
        Mono m;
        for (VarId v : vars) m = m * Mono::var(v, expo(rng));
        p += Poly::term(m, random_cyclo(rng, conductor));
    }
    return p;
}

} // namespace fano::testutil

#endif
