#include "fano/poly.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fano/config.hpp"
#include "fano/errors.hpp"

namespace fano {

Config& config() {
    thread_local Config cfg;
    return cfg;
}

namespace {
// function-local so symbols can be interned from static initializers
struct SymbolTable {
    std::vector<std::string> names;
    std::unordered_map<std::string, VarId> ids;
    std::mutex mutex;
};
SymbolTable& symtab() {
    static SymbolTable table;
    return table;
}
} // namespace

VarId intern_symbol(const std::string& name) {
    auto& t = symtab();
    std::lock_guard<std::mutex> lock(t.mutex);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return it->second;
    VarId id = static_cast<VarId>(t.names.size());
    t.names.push_back(name);
    t.ids.emplace(name, id);
    return id;
}

const std::string& symbol_name(VarId id) {
    auto& t = symtab();
    std::lock_guard<std::mutex> lock(t.mutex);
    FANO_CHECK(id < t.names.size(), "unknown symbol id");
    return t.names[id];
}

bool symbol_exists(const std::string& name) {
    auto& t = symtab();
    std::lock_guard<std::mutex> lock(t.mutex);
    return t.ids.count(name) > 0;
}

Mono Mono::var(VarId v, std::uint32_t k) {
    Mono m;
    if (k > 0) m.e.push_back({v, k});
    return m;
}

std::size_t Mono::degree() const {
    std::size_t d = 0;
    for (const auto& [v, k] : e) d += k;
    return d;
}

std::uint32_t Mono::exponent(VarId v) const {
    for (const auto& [w, k] : e)
        if (w == v) return k;
    return 0;
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    r.e.reserve(e.size() + o.e.size());
    std::size_t i = 0, j = 0;
    while (i < e.size() && j < o.e.size()) {
        if (e[i].first < o.e[j].first) r.e.push_back(e[i++]);
        else if (e[i].first > o.e[j].first) r.e.push_back(o.e[j++]);
        else { r.e.push_back({e[i].first, e[i].second + o.e[j].second}); ++i; ++j; }
    }
    while (i < e.size()) r.e.push_back(e[i++]);
    while (j < o.e.size()) r.e.push_back(o.e[j++]);
    return r;
}

bool Mono::divides(const Mono& o) const {
    std::size_t j = 0;
    for (const auto& [v, k] : e) {
        while (j < o.e.size() && o.e[j].first < v) ++j;
        if (j >= o.e.size() || o.e[j].first != v || o.e[j].second < k) return false;
    }
    return true;
}

Mono Mono::divided_into(const Mono& o) const {
    Mono r;
    std::size_t i = 0;
    for (const auto& [v, k] : o.e) {
        std::uint32_t sub = 0;
        while (i < e.size() && e[i].first < v) ++i;
        if (i < e.size() && e[i].first == v) sub = e[i].second;
        FANO_CHECK(k >= sub, "monomial division underflow");
        if (k > sub) r.e.push_back({v, k - sub});
    }
    return r;
}

Mono Mono::gcd(const Mono& o) const {
    Mono r;
    std::size_t i = 0, j = 0;
    while (i < e.size() && j < o.e.size()) {
        if (e[i].first < o.e[j].first) ++i;
        else if (e[i].first > o.e[j].first) ++j;
        else {
            r.e.push_back({e[i].first, std::min(e[i].second, o.e[j].second)});
            ++i; ++j;
        }
    }
    return r;
}

std::size_t Mono::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& [v, k] : e) {
        h ^= (static_cast<std::size_t>(v) << 17) ^ k;
        h *= 1099511628211ull;
    }
    return h;
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    std::size_t da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // earlier variable, larger exponent first
    std::size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first != b.e[j].first) return a.e[i].first < b.e[j].first;
        if (a.e[i].second != b.e[j].second) return a.e[i].second > b.e[j].second;
        ++i; ++j;
    }
    return i < a.e.size();
}

Poly::Poly(const Cyclo& c) {
    if (!c.is_zero()) t_.emplace(Mono::one(), c);
}

Poly Poly::variable(VarId v) {
    Poly p;
    p.t_.emplace(Mono::var(v), Cyclo(1));
    return p;
}

Poly Poly::term(const Mono& m, const Cyclo& c) {
    Poly p;
    if (!c.is_zero()) p.t_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

Cyclo Poly::constant_value() const {
    if (t_.empty()) return Cyclo(0);
    FANO_CHECK(is_constant(), "polynomial is not constant");
    return t_.begin()->second;
}

std::size_t Poly::degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

std::size_t Poly::degree_in(VarId v) const {
    std::size_t d = 0;
    for (const auto& [m, c] : t_) d = std::max<std::size_t>(d, m.exponent(v));
    return d;
}

std::size_t Poly::degree_in(const std::set<VarId>& vs) const {
    std::size_t d = 0;
    for (const auto& [m, c] : t_) {
        std::size_t s = 0;
        for (const auto& [v, k] : m.e)
            if (vs.count(v)) s += k;
        d = std::max(d, s);
    }
    return d;
}

bool Poly::is_homogeneous_in(const std::set<VarId>& vs, std::size_t* deg) const {
    bool first = true;
    std::size_t d0 = 0;
    for (const auto& [m, c] : t_) {
        std::size_t s = 0;
        for (const auto& [v, k] : m.e)
            if (vs.count(v)) s += k;
        if (first) { d0 = s; first = false; }
        else if (s != d0) return false;
    }
    if (deg) *deg = d0;
    return true;
}

std::set<VarId> Poly::variables() const {
    std::set<VarId> vs;
    for (const auto& [m, c] : t_)
        for (const auto& [v, k] : m.e) vs.insert(v);
    return vs;
}

bool Poly::uses_variable(VarId v) const {
    for (const auto& [m, c] : t_)
        if (m.exponent(v) > 0) return true;
    return false;
}

void Poly::prune() {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second.is_zero()) it = t_.erase(it);
        else ++it;
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) {
        auto [it, fresh] = t_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) {
        auto [it, fresh] = t_.try_emplace(m, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

Poly Poly::operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
Poly Poly::operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }

namespace {
struct MonoHash {
    std::size_t operator()(const Mono& m) const { return m.hash(); }
};

void check_degree_budget(std::size_t da, std::size_t db) {
    std::size_t bound = config().degree_bound;
    if (da + db > bound)
        throw degree_bound_error("polynomial product degree " + std::to_string(da + db) +
                                 " exceeds the configured bound " + std::to_string(bound));
}
} // namespace

Poly Poly::operator*(const Poly& o) const {
    if (t_.empty() || o.t_.empty()) return Poly();
    check_degree_budget(degree(), o.degree());
    if (o.t_.size() == 1) {
        const auto& [m, c] = *o.t_.begin();
        return mul_mono(m, c);
    }
    if (t_.size() == 1) {
        const auto& [m, c] = *t_.begin();
        return o.mul_mono(m, c);
    }
    std::unordered_map<Mono, Cyclo, MonoHash> acc;
    acc.reserve(t_.size() * 2);
    for (const auto& [ma, ca] : t_) {
        for (const auto& [mb, cb] : o.t_) {
            Mono m = ma * mb;
            auto [it, fresh] = acc.try_emplace(m, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    Poly r;
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) r.t_.emplace(std::move(m), std::move(c));
    }
    return r;
}

Poly Poly::scaled(const Cyclo& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    for (auto& [m, cc] : r.t_) cc *= c;
    r.prune();
    return r;
}

Poly Poly::mul_mono(const Mono& m, const Cyclo& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    auto hint = r.t_.end();
    for (const auto& [mm, cc] : t_) {
        Cyclo nc = cc * c;
        if (!nc.is_zero()) hint = r.t_.emplace_hint(hint, mm * m, std::move(nc));
    }
    return r;
}

Poly Poly::div_mono(const Mono& m) const {
    if (m.is_one()) return *this;
    Poly r;
    auto hint = r.t_.end();
    for (const auto& [mm, cc] : t_) hint = r.t_.emplace_hint(hint, m.divided_into(mm), cc);
    return r;
}

Poly operator*(const Cyclo& c, const Poly& p) { return p.scaled(c); }

Poly Poly::pow(std::uint64_t e) const {
    if (e == 0) return Poly(1);
    Poly base = *this, acc(1);
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Poly Poly::derivative(VarId v) const {
    Poly r;
    for (const auto& [m, c] : t_) {
        std::uint32_t k = m.exponent(v);
        if (k == 0) continue;
        Mono dm;
        for (const auto& [w, kk] : m.e) {
            if (w == v) {
                if (kk > 1) dm.e.push_back({w, kk - 1});
            } else dm.e.push_back({w, kk});
        }
        Cyclo nc = c * Cyclo(Q(static_cast<long>(k)));
        auto [it, fresh] = r.t_.try_emplace(dm, nc);
        if (!fresh) it->second += nc;
    }
    r.prune();
    return r;
}

namespace {

// Generalized Horner: bucket the terms by the exponent of one substituted
// variable, recurse on the bucket contents, then fold from the top exponent
// down. Keeps intermediate products near the result's own size instead of
// expanding every monomial independently.
Poly subst_horner(std::vector<std::pair<Mono, Cyclo>>& terms,
                  const std::map<VarId, Poly>& vals) {
    VarId v = 0;
    std::uint32_t maxe = 0;
    for (const auto& [m, c] : terms)
        for (const auto& [var, e] : m.e)
            if (e > maxe && vals.count(var)) {
                v = var;
                maxe = e;
            }
    if (maxe == 0) {
        Poly out;
        for (auto& [m, c] : terms) out += Poly::term(m, c);
        return out;
    }
    std::map<std::uint32_t, std::vector<std::pair<Mono, Cyclo>>, std::greater<>> buckets;
    for (auto& [m, c] : terms) {
        std::uint32_t e = 0;
        Mono rest;
        for (const auto& [var, k] : m.e) {
            if (var == v) e = k;
            else rest.e.push_back({var, k});
        }
        buckets[e].emplace_back(std::move(rest), c);
    }
    const Poly& val = vals.at(v);
    Poly acc;
    std::uint32_t prev = 0;
    for (auto& [e, sub] : buckets) {
        for (std::uint32_t i = e; i < prev; ++i) acc = acc * val;
        acc += subst_horner(sub, vals);
        prev = e;
    }
    for (std::uint32_t i = 0; i < prev; ++i) acc = acc * val;
    return acc;
}

} // namespace

Poly Poly::substituted(const std::map<VarId, Poly>& vals) const {
    std::vector<std::pair<Mono, Cyclo>> terms(t_.begin(), t_.end());
    return subst_horner(terms, vals);
}

Poly Poly::evaluated(const std::map<VarId, Cyclo>& vals) const {
    std::map<VarId, std::vector<Cyclo>> powers;
    auto power_of = [&](VarId v, std::uint32_t k) -> const Cyclo& {
        auto& ladder = powers[v];
        if (ladder.empty()) ladder.push_back(Cyclo(1));
        while (ladder.size() <= k) ladder.push_back(ladder.back() * vals.at(v));
        return ladder[k];
    };
    Poly result;
    for (const auto& [m, c] : t_) {
        Cyclo coeff = c;
        Mono rest;
        for (const auto& [v, k] : m.e) {
            if (vals.count(v)) coeff *= power_of(v, k);
            else rest.e.push_back({v, k});
        }
        if (coeff.is_zero()) continue;
        auto [it, fresh] = result.t_.try_emplace(rest, coeff);
        if (!fresh) it->second += coeff;
    }
    result.prune();
    return result;
}

Cyclo Poly::eval_all(const std::map<VarId, Cyclo>& vals) const {
    Poly p = evaluated(vals);
    FANO_CHECK(p.is_constant(), "evaluation left free variables");
    return p.constant_value();
}

std::optional<Poly> Poly::divide_exact(const Poly& num, const Poly& den) {
    FANO_CHECK(!den.is_zero(), "division by zero polynomial");
    Poly r = num, q;
    const Mono& dlm = den.leading_mono();
    const Cyclo& dlc = den.leading_coeff();
    Cyclo dinv = dlc.inv();
    while (!r.is_zero()) {
        const Mono& rlm = r.leading_mono();
        if (!dlm.divides(rlm)) return std::nullopt;
        Mono qm = dlm.divided_into(rlm);
        Cyclo qc = r.leading_coeff() * dinv;
        q += Poly::term(qm, qc);
        r -= den.mul_mono(qm, qc);
    }
    return q;
}

Mono Poly::monomial_content() const {
    FANO_CHECK(!t_.empty(), "monomial content of zero");
    auto it = t_.begin();
    Mono g = it->first;
    for (++it; it != t_.end() && !g.is_one(); ++it) g = g.gcd(it->first);
    return g;
}

Q q_content_gcd(const Q& a, const Q& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Q r;
    mpz_gcd(r.get_num_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(r.get_den_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    r.canonicalize();
    return r;
}

Q Poly::rational_content() const {
    Q g(0);
    for (const auto& [m, c] : t_)
        for (const auto& q : c.coeffs()) g = q_content_gcd(g, q);
    return g;
}

const Cyclo& Poly::leading_coeff() const {
    FANO_CHECK(!t_.empty(), "leading coefficient of zero");
    return t_.begin()->second;
}

const Mono& Poly::leading_mono() const {
    FANO_CHECK(!t_.empty(), "leading monomial of zero");
    return t_.begin()->first;
}

namespace {

std::string mono_str(const Mono& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, k] : m.e) {
        if (!first) os << "*";
        os << symbol_name(v);
        if (k != 1) os << "^" << k;
        first = false;
    }
    return os.str();
}

// w-polynomial form of a cyclotomic scalar, e.g. "2*w^2-w+1", with w read as
// the root of unity of the given conductor.
std::string cyclo_inner_str(const Cyclo& c, unsigned conductor) {
    const std::vector<Q> cs = c.coeffs_at(conductor);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i] == 0) continue;
        Q q = cs[i];
        if (first) {
            if (q < 0) { os << "-"; q = -q; }
        } else {
            os << (q < 0 ? "-" : "+");
            if (q < 0) q = -q;
        }
        bool unit = (q == 1) && i > 0;
        if (!unit) os << q_str(q);
        if (i > 0) {
            if (!unit) os << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

unsigned Poly::coefficient_conductor() const {
    unsigned n = 1;
    for (const auto& [m, c] : t_) n = std::lcm(n, c.conductor());
    return n;
}

std::string Poly::str(unsigned conductor) const {
    if (t_.empty()) return "0";
    if (conductor == 0) conductor = coefficient_conductor();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        std::string ms = mono_str(m);
        if (c.is_rational()) {
            Q q = c.rational();
            bool neg = q < 0;
            Q a = neg ? Q(-q) : q;
            if (first) { if (neg) os << "-"; }
            else os << (neg ? "-" : "+");
            if (ms.empty()) os << q_str(a);
            else if (a == 1) os << ms;
            else os << q_str(a) << "*" << ms;
        } else {
            if (!first) os << "+";
            os << "(" << cyclo_inner_str(c, conductor) << ")";
            if (!ms.empty()) os << "*" << ms;
        }
        first = false;
    }
    return os.str();
}

} // namespace fano
