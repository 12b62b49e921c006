#include "fano/ideal.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "fano/errors.hpp"

namespace fano {

unsigned GMono::degree() const {
    unsigned d = 0;
    for (unsigned k : e) d += k;
    return d;
}

bool GMono::is_one() const {
    for (unsigned k : e)
        if (k) return false;
    return true;
}

bool GMono::divides(const GMono& o) const {
    FANO_CHECK(e.size() == o.e.size(), "monomial arity mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

GMono GMono::operator*(const GMono& o) const {
    FANO_CHECK(e.size() == o.e.size(), "monomial arity mismatch");
    GMono r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

GMono GMono::divided_into(const GMono& o) const {
    FANO_CHECK(divides(o), "monomial does not divide");
    GMono r = o;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
    return r;
}

GMono GMono::lcm(const GMono& o) const {
    FANO_CHECK(e.size() == o.e.size(), "monomial arity mismatch");
    GMono r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(r.e[i], o.e[i]);
    return r;
}

bool GMono::coprime(const GMono& o) const {
    FANO_CHECK(e.size() == o.e.size(), "monomial arity mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] && o.e[i]) return false;
    return true;
}

bool GrevlexGreater::operator()(const GMono& a, const GMono& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // same degree: greater means smaller in the last differing coordinate
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    }
    return false;
}

void GPoly::prune() {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second.is_zero()) it = t_.erase(it);
        else ++it;
    }
}

GPoly GPoly::term(const GMono& m, const RatExpr& c) {
    GPoly r;
    if (!c.is_zero()) r.t_.emplace(m, c);
    return r;
}

const GMono& GPoly::leading_mono() const {
    FANO_CHECK(!t_.empty(), "zero polynomial has no leading term");
    return t_.begin()->first;
}

const RatExpr& GPoly::leading_coeff() const {
    FANO_CHECK(!t_.empty(), "zero polynomial has no leading term");
    return t_.begin()->second;
}

unsigned GPoly::degree() const {
    return t_.empty() ? 0 : leading_mono().degree();
}

GPoly GPoly::operator-() const {
    GPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

GPoly GPoly::operator+(const GPoly& o) const {
    GPoly r = *this;
    for (const auto& [m, c] : o.t_) {
        auto [it, fresh] = r.t_.try_emplace(m, c);
        if (!fresh) it->second += c;
    }
    r.prune();
    return r;
}

GPoly GPoly::operator-(const GPoly& o) const { return *this + (-o); }

GPoly GPoly::operator*(const GPoly& o) const {
    GPoly r;
    for (const auto& [ma, ca] : t_) {
        for (const auto& [mb, cb] : o.t_) {
            RatExpr c = ca * cb;
            if (c.is_zero()) continue;
            auto [it, fresh] = r.t_.try_emplace(ma * mb, c);
            if (!fresh) it->second += c;
        }
    }
    r.prune();
    return r;
}

GPoly GPoly::mul_term(const GMono& m, const RatExpr& c) const {
    GPoly r;
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : t_) {
        RatExpr nc = cc * c;
        if (!nc.is_zero()) r.t_.emplace(mm * m, nc);
    }
    return r;
}

GPoly GPoly::scaled(const RatExpr& c) const {
    return mul_term(GMono::one(t_.empty() ? 0 : t_.begin()->first.e.size()), c);
}

GPoly GPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

GPoly normal_form(const GPoly& f, const std::vector<GPoly>& basis) {
    GPoly r;
    GPoly p = f;
    while (!p.is_zero()) {
        const GMono lm = p.leading_mono();
        const RatExpr lc = p.leading_coeff();
        bool reduced = false;
        for (const GPoly& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_mono().divides(lm)) {
                p = p - g.mul_term(g.leading_mono().divided_into(lm),
                                   lc / g.leading_coeff());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            GPoly t = GPoly::term(lm, lc);
            r = r + t;
            p = p - t;
        }
    }
    return r;
}

namespace {

GPoly spoly(const GPoly& f, const GPoly& g) {
    GMono l = f.leading_mono().lcm(g.leading_mono());
    return f.mul_term(f.leading_mono().divided_into(l), f.leading_coeff().inverse()) -
           g.mul_term(g.leading_mono().divided_into(l), g.leading_coeff().inverse());
}

} // namespace

std::vector<GPoly> buchberger(std::vector<GPoly> gens) {
    std::vector<GPoly> basis;
    for (const GPoly& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (basis[i].leading_mono().coprime(basis[j].leading_mono())) continue;
        GPoly r = normal_form(spoly(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        r = r.monic();
        for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
        basis.push_back(std::move(r));
    }
    // interreduce until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<GPoly> others;
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (k != i) others.push_back(basis[k]);
            GPoly h = normal_form(basis[i], others);
            if (h != basis[i]) {
                changed = true;
                if (h.is_zero()) {
                    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                    --i;
                } else {
                    basis[i] = h.monic();
                }
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const GPoly& a, const GPoly& b) {
        return GrevlexGreater{}(b.leading_mono(), a.leading_mono());
    });
    return basis;
}

GPoly to_gpoly(const Poly& p, const std::vector<VarId>& main_vars) {
    std::unordered_map<VarId, std::size_t> pos;
    for (std::size_t i = 0; i < main_vars.size(); ++i) pos.emplace(main_vars[i], i);
    std::map<GMono, Poly, GrevlexGreater> acc;
    for (const auto& [m, c] : p.terms()) {
        GMono gm = GMono::one(main_vars.size());
        Mono rest;
        for (const auto& [v, k] : m.e) {
            auto it = pos.find(v);
            if (it != pos.end()) gm.e[it->second] = k;
            else rest = rest * Mono::var(v, k);
        }
        acc[gm] += Poly::term(rest, c);
    }
    GPoly r;
    for (const auto& [m, c] : acc) r = r + GPoly::term(m, RatExpr(c));
    return r;
}

GPoly to_gpoly(const RatExpr& r, const std::vector<VarId>& main_vars) {
    for (VarId v : main_vars)
        FANO_CHECK(!r.den().uses_variable(v),
                   "denominator must not involve the main variables");
    return to_gpoly(r.num(), main_vars).scaled(RatExpr(Poly(1), r.den()));
}

RatExpr expand_gpoly(const GPoly& g, const std::vector<VarId>& main_vars) {
    RatExpr out;
    for (const auto& [m, c] : g.terms()) {
        Mono mono;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i]) mono = mono * Mono::var(main_vars[i], m.e[i]);
        out += c * RatExpr(Poly::term(mono, Cyclo(1)));
    }
    return out;
}

std::string gpoly_str(const GPoly& g, const std::vector<VarId>& main_vars,
                      unsigned conductor) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : g.terms()) {
        if (!first) os << "+";
        os << "(" << c.str(conductor) << ")";
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (!m.e[i]) continue;
            os << "*" << symbol_name(main_vars[i]);
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
        first = false;
    }
    return os.str();
}

} // namespace fano
