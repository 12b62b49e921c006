#include "fano/radical.hpp"

#include <sstream>

#include "fano/errors.hpp"
#include "fano/linalg.hpp"

namespace fano {

std::size_t RadicalTower::basis_size() const {
    std::size_t n = 1;
    for (const Radical& r : rads_) n *= r.index;
    return n;
}

namespace {

const TowerPtr& empty_tower() {
    static TowerPtr t = std::make_shared<RadicalTower>();
    return t;
}

bool same_radical(const Radical& a, const Radical& b) {
    return a.index == b.index && a.radicand == b.radicand;
}

// Union of two towers plus the position of each original radical in the union.
struct Merge {
    TowerPtr tower;
    std::vector<std::size_t> pos_a, pos_b;
};

Merge merge_towers(const TowerPtr& a, const TowerPtr& b) {
    Merge m;
    if (a == b || (b->size() == 0)) {
        m.tower = a;
        m.pos_a.resize(a->size());
        for (std::size_t i = 0; i < a->size(); ++i) m.pos_a[i] = i;
        m.pos_b.clear();
        if (a == b) m.pos_b = m.pos_a;
        return m;
    }
    if (a->size() == 0) {
        m.tower = b;
        m.pos_b.resize(b->size());
        for (std::size_t i = 0; i < b->size(); ++i) m.pos_b[i] = i;
        return m;
    }
    std::vector<Radical> merged = a->radicals();
    m.pos_a.resize(a->size());
    for (std::size_t i = 0; i < a->size(); ++i) m.pos_a[i] = i;
    m.pos_b.resize(b->size());
    for (std::size_t i = 0; i < b->size(); ++i) {
        const Radical& r = b->radicals()[i];
        std::size_t found = merged.size();
        for (std::size_t j = 0; j < merged.size(); ++j) {
            if (same_radical(merged[j], r)) { found = j; break; }
        }
        if (found == merged.size()) merged.push_back(r);
        m.pos_b[i] = found;
    }
    m.tower = std::make_shared<RadicalTower>(std::move(merged));
    return m;
}

RadElem::Key remap_key(const RadElem::Key& k, const std::vector<std::size_t>& pos,
                       std::size_t size) {
    RadElem::Key out(size, 0);
    for (std::size_t i = 0; i < k.size(); ++i) out[pos[i]] = k[i];
    return out;
}

} // namespace

RadElem::RadElem() : tower_(empty_tower()) {}

RadElem::RadElem(const RatExpr& r) : tower_(empty_tower()) {
    if (!r.is_zero()) c_.emplace(Key{}, r);
}

RadElem RadElem::monomial(TowerPtr tower, const Key& exponents, const RatExpr& coeff) {
    FANO_CHECK(exponents.size() == tower->size(), "exponent arity mismatch");
    for (std::size_t j = 0; j < exponents.size(); ++j)
        FANO_CHECK(exponents[j] < tower->radicals()[j].index, "exponent out of range");
    RadElem e;
    e.tower_ = std::move(tower);
    if (!coeff.is_zero()) e.c_.emplace(exponents, coeff);
    e.prune();
    return e;
}

void RadElem::prune() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.is_zero()) it = c_.erase(it);
        else ++it;
    }
    if (tower_->size() == 0) return;
    // drop radicals no term uses, so cancellations demote cleanly
    std::vector<bool> used(tower_->size(), false);
    for (const auto& [k, v] : c_)
        for (std::size_t j = 0; j < k.size(); ++j)
            if (k[j] > 0) used[j] = true;
    std::size_t keep = 0;
    for (bool u : used) keep += u ? 1 : 0;
    if (keep == tower_->size()) return;
    std::vector<Radical> rads;
    std::vector<std::size_t> newpos(tower_->size(), 0);
    for (std::size_t j = 0; j < tower_->size(); ++j) {
        if (used[j]) {
            newpos[j] = rads.size();
            rads.push_back(tower_->radicals()[j]);
        }
    }
    TowerPtr nt = rads.empty() ? empty_tower()
                               : std::make_shared<RadicalTower>(std::move(rads));
    std::map<Key, RatExpr> nc;
    for (auto& [k, v] : c_) {
        Key nk(nt->size(), 0);
        for (std::size_t j = 0; j < k.size(); ++j)
            if (used[j]) nk[newpos[j]] = k[j];
        nc.emplace(std::move(nk), std::move(v));
    }
    tower_ = std::move(nt);
    c_ = std::move(nc);
}

bool RadElem::is_rational() const {
    for (const auto& [k, v] : c_)
        for (unsigned e : k)
            if (e) return false;
    return true;
}

RatExpr RadElem::rational_part() const {
    FANO_CHECK(is_rational(), "element is not rational");
    if (c_.empty()) return RatExpr(0);
    return c_.begin()->second;
}

RadElem RadElem::operator-() const {
    RadElem r = *this;
    for (auto& [k, v] : r.c_) v = -v;
    return r;
}

RadElem RadElem::operator+(const RadElem& o) const {
    Merge m = merge_towers(tower_, o.tower_);
    RadElem r;
    r.tower_ = m.tower;
    for (const auto& [k, v] : c_) r.c_[remap_key(k, m.pos_a, m.tower->size())] += v;
    for (const auto& [k, v] : o.c_) r.c_[remap_key(k, m.pos_b, m.tower->size())] += v;
    r.prune();
    return r;
}

RadElem RadElem::operator-(const RadElem& o) const { return *this + (-o); }

RadElem RadElem::operator*(const RadElem& o) const {
    Merge m = merge_towers(tower_, o.tower_);
    const auto& rads = m.tower->radicals();
    RadElem r;
    r.tower_ = m.tower;
    for (const auto& [ka, va] : c_) {
        Key a = remap_key(ka, m.pos_a, m.tower->size());
        for (const auto& [kb, vb] : o.c_) {
            Key k = remap_key(kb, m.pos_b, m.tower->size());
            RatExpr coeff = va * vb;
            for (std::size_t j = 0; j < k.size(); ++j) {
                k[j] += a[j];
                while (k[j] >= rads[j].index) {
                    k[j] -= rads[j].index;
                    coeff = coeff * rads[j].radicand;
                }
            }
            r.c_[k] += coeff;
        }
    }
    r.prune();
    return r;
}

namespace {

// Mixed-radix enumeration of all exponent keys of a tower.
std::vector<RadElem::Key> enumerate_basis(const RadicalTower& t) {
    std::vector<RadElem::Key> keys;
    keys.push_back(RadElem::Key(t.size(), 0));
    for (std::size_t j = 0; j < t.size(); ++j) {
        std::size_t prev = keys.size();
        for (unsigned e = 1; e < t.radicals()[j].index; ++e) {
            for (std::size_t i = 0; i < prev; ++i) {
                RadElem::Key k = keys[i];
                k[j] = e;
                keys.push_back(std::move(k));
            }
        }
    }
    return keys;
}

} // namespace

RadElem RadElem::operator/(const RadElem& o) const {
    FANO_CHECK(!o.is_zero(), "division by zero");
    if (is_zero()) return RadElem();
    if (o.is_rational()) {
        RadElem r = *this;
        RatExpr inv = o.rational_part().inverse();
        for (auto& [k, v] : r.c_) v = v * inv;
        return r;
    }
    if (o.c_.size() == 1) {
        // monomial divisor: invert directly via r^{m-e} r^e = radicand
        const auto& [k, c] = *o.c_.begin();
        const auto& rads = o.tower_->radicals();
        Key inv_key(k.size(), 0);
        RatExpr coeff = c.inverse();
        for (std::size_t j = 0; j < k.size(); ++j) {
            if (k[j] == 0) continue;
            inv_key[j] = rads[j].index - k[j];
            coeff = coeff / rads[j].radicand;
        }
        return *this * monomial(o.tower_, inv_key, coeff);
    }
    // general case: solve divisor * x = this over the merged basis
    Merge m = merge_towers(tower_, o.tower_);
    const RadicalTower& t = *m.tower;
    std::size_t n = t.basis_size();
    FANO_CHECK(n <= 64, "radical division basis too large");
    auto basis = enumerate_basis(t);
    std::map<Key, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    RadElem divisor = RadElem::monomial(m.tower, Key(t.size(), 0), RatExpr(1)) * o;
    RadElem self = RadElem::monomial(m.tower, Key(t.size(), 0), RatExpr(1)) * *this;
    RatMat a(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        RadElem prod = divisor * RadElem::monomial(m.tower, basis[col], RatExpr(1));
        // prune may have shrunk prod's tower; remap through a fresh merge
        Merge pm = merge_towers(m.tower, prod.tower_);
        FANO_CHECK(pm.tower->size() == t.size(), "unexpected tower growth");
        for (const auto& [k, v] : prod.c_) {
            Key kk = remap_key(k, pm.pos_b, t.size());
            a.at(index.at(kk), col) = v;
        }
    }
    std::vector<RatExpr> rhs(n);
    {
        Merge sm = merge_towers(m.tower, self.tower_);
        FANO_CHECK(sm.tower->size() == t.size(), "unexpected tower growth");
        for (const auto& [k, v] : self.c_) rhs[index.at(remap_key(k, sm.pos_b, t.size()))] = v;
    }
    auto x = solve_linear(a, rhs);
    RadElem r;
    r.tower_ = m.tower;
    for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero()) r.c_.emplace(basis[i], x[i]);
    r.prune();
    return r;
}

RadElem RadElem::pow(long e) const {
    if (e == 0) return RadElem(RatExpr(1));
    RadElem base = *this;
    if (e < 0) base = RadElem(RatExpr(1)) / base;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    RadElem acc(RatExpr(1));
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool RadElem::equals(const RadElem& o) const {
    return (*this - o).is_zero();
}

RadElem RadElem::derivative(VarId v) const {
    const auto& rads = tower_->radicals();
    RadElem r;
    r.tower_ = tower_;
    for (const auto& [k, c] : c_) {
        RatExpr factor(0);
        for (std::size_t j = 0; j < k.size(); ++j) {
            if (k[j] == 0) continue;
            const Radical& rad = rads[j];
            factor += RatExpr(Poly(Q(static_cast<long>(k[j]))), Poly(Q(static_cast<long>(rad.index)))) *
                      rad.radicand.derivative(v) / rad.radicand;
        }
        RatExpr nc = c.derivative(v) + c * factor;
        if (!nc.is_zero()) r.c_[k] += nc;
    }
    r.prune();
    return r;
}

RadElem RadElem::evaluated(const std::map<VarId, Cyclo>& vals) const {
    std::vector<Radical> rads;
    std::vector<bool> dead(tower_->size(), false);
    for (std::size_t j = 0; j < tower_->size(); ++j) {
        Radical r = tower_->radicals()[j];
        r.radicand = r.radicand.evaluated(vals);
        if (r.radicand.is_zero()) dead[j] = true;
        rads.push_back(std::move(r));
    }
    RadElem out;
    out.tower_ = std::make_shared<RadicalTower>(std::move(rads));
    for (const auto& [k, c] : c_) {
        bool drop = false;
        for (std::size_t j = 0; j < k.size(); ++j)
            if (k[j] > 0 && dead[j]) { drop = true; break; }
        if (drop) continue; // the radical itself evaluates to zero
        RatExpr nc = c.evaluated(vals);
        if (!nc.is_zero()) out.c_[k] += nc;
    }
    out.prune();
    return out;
}

RadElem RadElem::from_expr(const Expr& e, unsigned conductor) {
    switch (e.kind) {
        case Expr::Kind::number:
            return RadElem(RatExpr(e.value));
        case Expr::Kind::symbol:
            if (e.name == "w") {
                if (conductor <= 1) throw error("symbol w needs a conductor greater than 1");
                return RadElem(RatExpr(Poly(Cyclo::zeta(conductor))));
            }
            return RadElem(RatExpr::variable(intern_symbol(e.name)));
        case Expr::Kind::neg:
            return -from_expr(e.kids[0], conductor);
        case Expr::Kind::add:
            return from_expr(e.kids[0], conductor) + from_expr(e.kids[1], conductor);
        case Expr::Kind::sub:
            return from_expr(e.kids[0], conductor) - from_expr(e.kids[1], conductor);
        case Expr::Kind::mul:
            return from_expr(e.kids[0], conductor) * from_expr(e.kids[1], conductor);
        case Expr::Kind::div:
            return from_expr(e.kids[0], conductor) / from_expr(e.kids[1], conductor);
        case Expr::Kind::pow: {
            RadElem base = from_expr(e.kids[0], conductor);
            if (q_is_integer(e.exponent))
                return base.pow(static_cast<long>(e.exponent.get_num().get_si()));
            if (!base.is_rational())
                throw error("nested radicals are not supported");
            RatExpr g = base.rational_part();
            if (g.is_zero()) {
                if (e.exponent > 0) return RadElem();
                throw error("zero to a negative fractional power");
            }
            long p = static_cast<long>(e.exponent.get_num().get_si());
            long q = static_cast<long>(e.exponent.get_den().get_si());
            long rem = ((p % q) + q) % q;
            long whole = (p - rem) / q;
            auto tower = std::make_shared<RadicalTower>(
                std::vector<Radical>{Radical{g, static_cast<unsigned>(q)}});
            RadElem r = monomial(tower, {static_cast<unsigned>(rem)});
            if (whole != 0) r = r * RadElem(g.pow(whole));
            return r;
        }
    }
    throw error("unreachable expression kind");
}

RadElem RadElem::parse(const std::string& text, unsigned conductor) {
    return from_expr(parse_expression(text), conductor);
}

std::string RadElem::str(unsigned conductor) const {
    if (c_.empty()) return "0";
    const auto& rads = tower_->radicals();
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : c_) {
        if (!first) os << "+";
        os << "(" << c.str(conductor) << ")";
        for (std::size_t j = 0; j < k.size(); ++j) {
            if (k[j] == 0) continue;
            Q ex = Q(static_cast<long>(k[j])) / Q(static_cast<long>(rads[j].index));
            std::string base = rads[j].radicand.str(conductor);
            bool simple = !base.empty() && base.find_first_of("+-*/^()") == std::string::npos;
            os << "*";
            if (simple) os << base;
            else os << "(" << base << ")";
            os << "^(" << q_str(ex) << ")";
        }
        first = false;
    }
    return os.str();
}

} // namespace fano
