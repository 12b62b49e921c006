#ifndef FANO_INVARIANTS_HPP
#define FANO_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fano/group.hpp"
#include "fano/linalg.hpp"
#include "fano/radical.hpp"

namespace fano {

PolyMat jacobian_matrix(const std::vector<Poly>& ps, const std::vector<VarId>& vars);
PolyMat hessian_matrix(const Poly& p, const std::vector<VarId>& vars);

// c * det of the second-partials matrix. Homogeneous input of degree d gives
// degree n(d-2) when nonzero.
Poly hessian_invariant(const Poly& p, const std::vector<VarId>& vars, const Cyclo& c);

// c * det of the hessian of p bordered by the gradient of q (zero corner).
Poly bordered_hessian_invariant(const Poly& p, const Poly& q,
                                const std::vector<VarId>& vars, const Cyclo& c);

// c * det of the jacobian of ps.
Poly jacobian_invariant(const std::vector<Poly>& ps, const std::vector<VarId>& vars,
                        const Cyclo& c);

struct Invariant {
    std::string name;
    Poly p;
    bool primary = false;
    std::optional<RadElem> evaluation; // declared value of Phi on this generator
    // Declared factorization over base generators, by name with exponents.
    // Empty for a base generator; check_invariant_set verifies the expansion.
    std::vector<std::pair<std::string, unsigned>> product;
    VarId symbol() const { return intern_symbol(name); }
};

struct InvariantSet {
    std::vector<VarId> vars;
    std::vector<Invariant> invariants;
    unsigned lambda = 0; // projective weight: common degree of the coordinate ratios

    const Invariant& by_name(const std::string& name) const;
    std::vector<std::size_t> primary_indices() const;
    std::vector<Poly> primary_polys() const;
    std::vector<std::size_t> base_indices() const; // entries without a product split
};

// Exact generator-invariance of every P_i plus algebraic independence of the
// primaries (jacobian determinant not identically zero). Throws on violation.
void check_invariant_set(const InvariantSet& s, const MatrixGroup& g);

// Expresses a homogeneous invariant as a polynomial in the generators, found
// by exact linear algebra on the weighted products of matching degree. The
// result uses one symbol per generator name; re-expansion is verified before
// returning. Throws rewrite_error when p is outside the generated subring at
// this degree.
Poly rewrite_in_generators(const Poly& p, const InvariantSet& s);

// Evaluates an expression in generator symbols through the declared
// evaluations (the morphism Phi on the invariant ring).
RadElem phi_eval(const Poly& expr_in_generators, const InvariantSet& s);

} // namespace fano

#endif
