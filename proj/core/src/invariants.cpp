#include "fano/invariants.hpp"

#include <algorithm>
#include <map>

#include "fano/errors.hpp"

namespace fano {

PolyMat jacobian_matrix(const std::vector<Poly>& ps, const std::vector<VarId>& vars) {
    PolyMat m(ps.size(), vars.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < vars.size(); ++j)
            m.at(i, j) = ps[i].derivative(vars[j]);
    return m;
}

PolyMat hessian_matrix(const Poly& p, const std::vector<VarId>& vars) {
    PolyMat m(vars.size(), vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        Poly di = p.derivative(vars[i]);
        for (std::size_t j = 0; j < vars.size(); ++j) m.at(i, j) = di.derivative(vars[j]);
    }
    return m;
}

Poly hessian_invariant(const Poly& p, const std::vector<VarId>& vars, const Cyclo& c) {
    FANO_CHECK(p.is_homogeneous_in(std::set<VarId>(vars.begin(), vars.end())),
               "hessian constructor needs a homogeneous input");
    return c * det(hessian_matrix(p, vars));
}

Poly bordered_hessian_invariant(const Poly& p, const Poly& q,
                                const std::vector<VarId>& vars, const Cyclo& c) {
    std::set<VarId> vs(vars.begin(), vars.end());
    FANO_CHECK(p.is_homogeneous_in(vs) && q.is_homogeneous_in(vs),
               "bordered hessian constructor needs homogeneous inputs");
    std::size_t n = vars.size();
    PolyMat m(n + 1, n + 1);
    PolyMat h = hessian_matrix(p, vars);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = h.at(i, j);
    for (std::size_t j = 0; j < n; ++j) {
        Poly dq = q.derivative(vars[j]);
        m.at(n, j) = dq;
        m.at(j, n) = dq;
    }
    return c * det(m);
}

Poly jacobian_invariant(const std::vector<Poly>& ps, const std::vector<VarId>& vars,
                        const Cyclo& c) {
    FANO_CHECK(ps.size() == vars.size(), "jacobian constructor needs a square system");
    return c * det(jacobian_matrix(ps, vars));
}

const Invariant& InvariantSet::by_name(const std::string& name) const {
    for (const Invariant& inv : invariants)
        if (inv.name == name) return inv;
    throw error("unknown invariant: " + name);
}

std::vector<std::size_t> InvariantSet::primary_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < invariants.size(); ++i)
        if (invariants[i].primary) out.push_back(i);
    return out;
}

std::vector<Poly> InvariantSet::primary_polys() const {
    std::vector<Poly> out;
    for (std::size_t i : primary_indices()) out.push_back(invariants[i].p);
    return out;
}

std::vector<std::size_t> InvariantSet::base_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < invariants.size(); ++i)
        if (invariants[i].product.empty()) out.push_back(i);
    return out;
}

void check_invariant_set(const InvariantSet& s, const MatrixGroup& g) {
    for (const Invariant& inv : s.invariants) {
        for (const CMat& gen : g.generators()) {
            if (!is_invariant(gen, inv.p, s.vars))
                throw error("invariant " + inv.name + " is not fixed by a generator");
        }
    }
    for (const Invariant& inv : s.invariants) {
        if (inv.product.empty()) continue;
        Poly expanded(1);
        for (const auto& [name, e] : inv.product)
            expanded = expanded * s.by_name(name).p.pow(e);
        if (expanded != inv.p)
            throw error("declared product for " + inv.name + " does not expand to it");
    }
    std::vector<Poly> prim = s.primary_polys();
    FANO_CHECK(prim.size() == s.vars.size(),
               "primary invariants must match the number of coordinates");
    if (det(jacobian_matrix(prim, s.vars)).is_zero())
        throw error("primary invariants are algebraically dependent");
}

namespace {

// all exponent tuples e with sum_i e_i w_i = target
void weighted_tuples(const std::vector<unsigned>& weights, unsigned target,
                     std::size_t from, std::vector<unsigned>& cur,
                     std::vector<std::vector<unsigned>>& out) {
    if (from == weights.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e * weights[from] <= target; ++e) {
        cur[from] = e;
        weighted_tuples(weights, target - e * weights[from], from + 1, cur, out);
    }
    cur[from] = 0;
}

} // namespace

Poly rewrite_in_generators(const Poly& p, const InvariantSet& s) {
    if (p.is_zero()) return Poly();
    std::set<VarId> vs(s.vars.begin(), s.vars.end());
    FANO_CHECK(p.is_homogeneous_in(vs), "rewrite needs a homogeneous input");
    unsigned target = p.degree_in(vs);
    std::vector<unsigned> weights;
    for (const Invariant& inv : s.invariants) {
        unsigned d = inv.p.degree_in(vs);
        FANO_CHECK(d > 0, "generator " + inv.name + " has degree zero");
        weights.push_back(d);
    }
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> cur(weights.size(), 0);
    weighted_tuples(weights, target, 0, cur, tuples);
    if (tuples.empty())
        throw rewrite_error("no generator products reach degree " + std::to_string(target));

    // column per tuple: the expanded product, collected monomial by monomial
    std::vector<Poly> products;
    std::map<Mono, std::size_t, MonoLess> rows;
    for (const auto& t : tuples) {
        Poly prod(1);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i]) prod = prod * s.invariants[i].p.pow(static_cast<long>(t[i]));
        for (const auto& [m, c] : prod.terms()) rows.try_emplace(m, rows.size());
        products.push_back(std::move(prod));
    }
    for (const auto& [m, c] : p.terms()) rows.try_emplace(m, rows.size());

    std::size_t nr = rows.size(), nc = tuples.size();
    std::vector<std::vector<Cyclo>> a(nr, std::vector<Cyclo>(nc + 1));
    for (std::size_t j = 0; j < nc; ++j)
        for (const auto& [m, c] : products[j].terms()) a[rows.at(m)][j] = c;
    for (const auto& [m, c] : p.terms()) a[rows.at(m)][nc] = c;

    // gaussian elimination over the scalar field, solving A lambda = rhs
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        std::size_t piv = r;
        while (piv < nr && a[piv][col].is_zero()) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[r]);
        Cyclo inv = a[r][col].inv();
        for (std::size_t j = col; j <= nc; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || a[i][col].is_zero()) continue;
            Cyclo f = a[i][col];
            for (std::size_t j = col; j <= nc; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < nr; ++i)
        if (!a[i][nc].is_zero())
            throw rewrite_error("input is outside the subring generated at this degree");

    std::vector<Cyclo> lambda(nc);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) lambda[pivot_col[i]] = a[i][nc];

    Poly out;
    Poly check;
    for (std::size_t j = 0; j < nc; ++j) {
        if (lambda[j].is_zero()) continue;
        Mono m;
        for (std::size_t i = 0; i < tuples[j].size(); ++i)
            if (tuples[j][i]) m = m * Mono::var(s.invariants[i].symbol(), tuples[j][i]);
        out += Poly::term(m, lambda[j]);
        check += Poly(lambda[j]) * products[j];
    }
    FANO_CHECK(check == p, "re-expansion of the rewritten form failed");
    return out;
}

RadElem phi_eval(const Poly& expr_in_generators, const InvariantSet& s) {
    std::map<VarId, RadElem> vals;
    for (const Invariant& inv : s.invariants) {
        if (inv.evaluation) vals.emplace(inv.symbol(), *inv.evaluation);
    }
    RadElem out;
    for (const auto& [m, c] : expr_in_generators.terms()) {
        RadElem term{RatExpr(Poly(c))};
        for (const auto& [v, k] : m.e) {
            auto it = vals.find(v);
            if (it == vals.end())
                throw error("no declared evaluation for " + symbol_name(v));
            term = term * it->second.pow(static_cast<long>(k));
        }
        out += term;
    }
    return out;
}

} // namespace fano
