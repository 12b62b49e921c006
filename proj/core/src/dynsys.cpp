#include "fano/dynsys.hpp"

#include <map>
#include <set>

#include "fano/errors.hpp"

namespace fano {

namespace {

// Content with the sign of the (rational) leading coefficient, so that
// dividing by it gives a primitive integer polynomial with positive lead.
Q signed_content(const Poly& p) {
    FANO_CHECK(!p.is_zero(), "signed content of the zero polynomial");
    const Cyclo& lead = p.leading_coeff();
    FANO_CHECK(lead.is_rational(), "display normalization needs a rational leading coefficient");
    Q c = p.rational_content();
    if (lead.rational() < 0) c = -c;
    return c;
}

// Transposed cofactors: adj(i, k) = (-1)^{i+k} det(m without row k, column i),
// so that m^{-1} = adj / det(m).
PolyMat adjugate(const PolyMat& m) {
    std::size_t n = m.rows();
    PolyMat adj(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            PolyMat sub(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == k) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    sub.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            Poly d = det(sub);
            adj.at(i, k) = ((i + k) % 2) ? -d : d;
        }
    return adj;
}

} // namespace

std::vector<RatExpr> DynSystem::rhs() const {
    std::vector<RatExpr> f;
    RatExpr d{Poly(1), delta};
    for (std::size_t i = 0; i < num.size(); ++i) {
        RatExpr acc;
        for (std::size_t k = 0; k < weights.size(); ++k)
            acc += RatExpr(num[i][k]) * weights[k];
        f.push_back((acc * d).reduced());
    }
    return f;
}

std::vector<RatExpr> DynSystem::orbit_relations() const {
    std::vector<RatExpr> rel;
    for (std::size_t i = 0; i < primaries.size(); ++i)
        rel.push_back(RatExpr(primaries[i]) - phi[i]);
    return rel;
}

DynSystem build_associated_system(const InvariantSet& s, VarId tvar) {
    DynSystem d;
    d.vars = s.vars;
    d.tvar = tvar;

    std::vector<std::size_t> prim = s.primary_indices();
    std::size_t n = s.vars.size();
    if (prim.size() != n) throw error("need one primary invariant per coordinate");
    bool factored = false;
    for (std::size_t i : prim) {
        d.primaries.push_back(s.invariants[i].p);
        const auto& inv = s.invariants[i];
        if (!inv.evaluation.has_value())
            throw error("primary " + inv.name + " has no evaluation");
        if (!inv.evaluation->is_rational())
            throw error("primary " + inv.name + " needs a rational evaluation");
        d.phi.push_back(inv.evaluation->rational_part());
        d.phi_prime.push_back(d.phi.back().derivative(tvar));
        if (!inv.product.empty()) factored = true;
    }
    d.autonomous = true;
    for (const RatExpr& dp : d.phi_prime)
        if (dp.num().uses_variable(tvar) || dp.den().uses_variable(tvar)) d.autonomous = false;

    if (!factored) {
        PolyMat m = jacobian_matrix(d.primaries, s.vars);
        Poly det_m = det(m);
        if (det_m.is_zero())
            throw singular_matrix_error("invariants not algebraically independent");
        Q c = signed_content(det_m);
        d.delta = det_m.scaled(Cyclo(Q(1) / c));
        PolyMat adj = adjugate(m);
        for (std::size_t i = 0; i < n; ++i) {
            d.num.emplace_back();
            for (std::size_t k = 0; k < n; ++k)
                d.num[i].push_back(adj.at(i, k).scaled(Cyclo(Q(1) / c)));
        }
        d.weights = d.phi_prime;
    } else {
        // Collect the base generators the products reference, in declaration
        // order, and the exponent rows of the factorization.
        std::vector<std::string> base_names;
        auto base_pos = [&](const std::string& name) -> std::size_t {
            for (std::size_t j = 0; j < base_names.size(); ++j)
                if (base_names[j] == name) return j;
            base_names.push_back(name);
            return base_names.size() - 1;
        };
        std::vector<std::map<std::size_t, unsigned>> expo(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& inv = s.invariants[prim[i]];
            if (inv.product.empty()) {
                expo[i][base_pos(inv.name)] += 1;
            } else {
                for (const auto& [name, e] : inv.product) expo[i][base_pos(name)] += e;
            }
        }
        if (base_names.size() != n)
            throw error("factored build needs one base generator per coordinate");

        // Chain rule on the products: grad P_i = sum_j C_ij grad g_j with
        // C_ij a monomial in the base generators. Solving C u = phi' first
        // keeps everything in the small symbol algebra.
        std::vector<VarId> base_syms;
        std::vector<Poly> base_polys;
        for (const auto& name : base_names) {
            base_syms.push_back(intern_symbol(name));
            base_polys.push_back(s.by_name(name).p);
        }
        RatMat c_mat(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto it = expo[i].find(j);
                if (it == expo[i].end() || it->second == 0) continue;
                Mono mo;
                for (const auto& [l, e] : expo[i])
                    if (e > (l == j ? 1u : 0u))
                        mo = mo * Mono::var(base_syms[l], e - (l == j ? 1 : 0));
                c_mat.at(i, j) = RatExpr(Poly::term(mo, Cyclo(long(it->second))));
            }
        std::vector<RatExpr> u = solve_linear(c_mat, d.phi_prime);
        std::map<VarId, RatExpr> base_vals;
        for (std::size_t j = 0; j < n; ++j) base_vals.emplace(base_syms[j], RatExpr(base_polys[j]));
        for (RatExpr& uj : u) uj = uj.substituted(base_vals).reduced();

        PolyMat m_base = jacobian_matrix(base_polys, s.vars);
        Poly det_base = det(m_base);
        if (det_base.is_zero())
            throw singular_matrix_error("invariants not algebraically independent");
        PolyMat adj = adjugate(m_base);

        // Common denominator: det(M_base) times a divisibility-refined
        // accumulation of the solved column's denominators. The denominators
        // appearing here are nested powers of the base invariants, so the
        // divide-or-absorb chain reaches their lcm without a multivariate gcd.
        Poly den_u(1);
        for (const RatExpr& uj : u) {
            const Poly& q = uj.den();
            if (q.is_constant()) continue;
            if (Poly::divide_exact(den_u, q))
                continue; // q | den_u already
            if (Poly::divide_exact(q, den_u))
                den_u = q;
            else
                den_u = den_u * q;
        }
        Poly den_common = det_base * den_u;
        std::vector<Poly> combined;
        RatExpr den_r{Poly(1), den_common};
        for (std::size_t i = 0; i < n; ++i) {
            RatExpr fi;
            for (std::size_t k = 0; k < n; ++k)
                fi += RatExpr(adj.at(i, k)) * u[k];
            fi = fi * RatExpr(Poly(1), det_base);
            combined.push_back((fi / den_r).as_poly());
        }
        FANO_CHECK(!combined[0].is_zero(), "first component of the solved system vanishes");
        Q c = signed_content(combined[0]);
        Cyclo inv_c{Q(1) / c};
        d.delta = den_common.scaled(inv_c);
        for (std::size_t i = 0; i < n; ++i)
            d.num.push_back({combined[i].scaled(inv_c)});
        d.weights = {RatExpr(1)};
    }

    // The defining identity, rechecked on the assembled display form.
    std::vector<RatExpr> f = d.rhs();
    PolyMat m = jacobian_matrix(d.primaries, s.vars);
    for (std::size_t i = 0; i < n; ++i) {
        RatExpr acc;
        for (std::size_t j = 0; j < n; ++j) acc += RatExpr(m.at(i, j)) * f[j];
        FANO_CHECK(acc == d.phi_prime[i], "defining identity M F = phi' failed");
    }
    return d;
}

void check_equivariance(const DynSystem& d, const MatrixGroup& g) {
    // Checked on the display form, one weight column at a time: the weights
    // depend only on the time variable, so they pass through the action and
    // F(g X) = g F(X) is the cross-multiplied identity
    //   num_k(g X) delta(X) = (sum_l g_lk num_l(X)) delta(g X)
    // per column. This never forms the summed rational function, whose
    // unreduced denominator would grow as delta^n.
    std::size_t n = d.dim();
    for (const CMat& gen : g.generators()) {
        Poly delta_g = act(gen, d.delta, d.vars);
        for (std::size_t j = 0; j < d.weights.size(); ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Poly lhs = act(gen, d.num[k][j], d.vars) * d.delta;
                Poly rhs;
                for (std::size_t l = 0; l < n; ++l) {
                    Cyclo c = gen.at(static_cast<unsigned>(l), static_cast<unsigned>(k));
                    if (!c.is_zero()) rhs += c * d.num[l][j];
                }
                rhs = rhs * delta_g;
                if (lhs != rhs)
                    throw error("system is not equivariant under a generator of " + g.name());
            }
    }
}

} // namespace fano
