#ifndef FANO_DYNSYS_HPP
#define FANO_DYNSYS_HPP

#include <vector>

#include "fano/group.hpp"
#include "fano/invariants.hpp"
#include "fano/linalg.hpp"

namespace fano {

// First order system dX/dt = F(X, t) cut out by d/dt P_i(X(t)) = phi_i'(t)
// over the declared primary invariants. The right side is stored factored,
// F_i = sum_k num[i][k] * weights[k] / delta, which is also the display form.
struct DynSystem {
    std::vector<VarId> vars;
    VarId tvar = 0;
    std::vector<Poly> primaries;
    std::vector<RatExpr> phi;       // declared evaluations of the primaries
    std::vector<RatExpr> phi_prime; // d/dt of phi
    Poly delta;                     // common display denominator
    std::vector<std::vector<Poly>> num;
    std::vector<RatExpr> weights;   // phi_prime columns, or {1} once solved in
    bool autonomous = false;        // no explicit tvar on the right side

    std::size_t dim() const { return vars.size(); }
    std::vector<RatExpr> rhs() const;
    std::vector<RatExpr> orbit_relations() const; // P_i - phi_i, cut the orbit
};

// F = M(X)^{-1} (phi_i'), M the jacobian of the primaries. When every primary
// carries a product split over the base generators, the jacobian factors as
// C(P) * M_base and the C part is inverted symbolically first; that keeps the
// common denominator down to det(M_base) times the solved column and matches
// the reduced display of the autonomous examples. The defining identity
// M * F = phi' is rechecked exactly before returning either way.
//
// Display normalization: the direct route scales delta to a primitive integer
// polynomial with positive leading coefficient; the factored route instead
// scales the first numerator that way and lets delta follow, which is how the
// solved systems are displayed.
DynSystem build_associated_system(const InvariantSet& s, VarId tvar);

// F(g X) = g F(X) for every generator of g; throws on the first violation.
void check_equivariance(const DynSystem& d, const MatrixGroup& g);

} // namespace fano

#endif
