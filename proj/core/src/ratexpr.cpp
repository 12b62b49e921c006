#include "fano/ratexpr.hpp"

#include <numeric>
#include <sstream>

#include "fano/config.hpp"
#include "fano/errors.hpp"

namespace fano {

RatExpr::RatExpr(Poly num, Poly den) : n_(std::move(num)), d_(std::move(den)) {
    normalize();
}

void RatExpr::normalize() {
    FANO_CHECK(!d_.is_zero(), "zero denominator");
    if (n_.is_zero()) {
        d_ = Poly(1);
        return;
    }
    Mono g = n_.monomial_content().gcd(d_.monomial_content());
    if (!g.is_one()) {
        n_ = n_.div_mono(g);
        d_ = d_.div_mono(g);
    }
    const Cyclo& lc = d_.leading_coeff();
    if (!(lc == Cyclo(1))) {
        Cyclo inv = lc.inv();
        n_ = n_.scaled(inv);
        d_ = d_.scaled(inv);
    }
    if (n_.term_count() + d_.term_count() > config().ratexpr_gcd_threshold) reduce_in_place();
}

Cyclo RatExpr::constant_value() const {
    return n_.constant_value() / d_.constant_value();
}

Poly RatExpr::as_poly() const {
    if (d_.is_constant()) return n_.scaled(d_.constant_value().inv());
    auto q = Poly::divide_exact(n_, d_);
    FANO_CHECK(q.has_value(), "denominator does not divide numerator");
    return *q;
}

RatExpr RatExpr::operator-() const {
    RatExpr r = *this;
    r.n_ = -r.n_;
    return r;
}

RatExpr RatExpr::operator+(const RatExpr& o) const {
    if (d_ == o.d_) return RatExpr(n_ + o.n_, d_);
    return RatExpr(n_ * o.d_ + o.n_ * d_, d_ * o.d_);
}

RatExpr RatExpr::operator-(const RatExpr& o) const {
    if (d_ == o.d_) return RatExpr(n_ - o.n_, d_);
    return RatExpr(n_ * o.d_ - o.n_ * d_, d_ * o.d_);
}

RatExpr RatExpr::operator*(const RatExpr& o) const {
    return RatExpr(n_ * o.n_, d_ * o.d_);
}

RatExpr RatExpr::operator/(const RatExpr& o) const {
    FANO_CHECK(!o.is_zero(), "division by zero expression");
    return RatExpr(n_ * o.d_, d_ * o.n_);
}

RatExpr RatExpr::inverse() const {
    FANO_CHECK(!is_zero(), "inverse of zero expression");
    return RatExpr(d_, n_);
}

RatExpr RatExpr::pow(long e) const {
    if (e == 0) return RatExpr(Poly(1));
    RatExpr base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    return RatExpr(base.n_.pow(k), base.d_.pow(k));
}

bool RatExpr::equals(const RatExpr& o) const {
    if (n_ == o.n_ && d_ == o.d_) return true;
    return n_ * o.d_ == o.n_ * d_;
}

RatExpr RatExpr::derivative(VarId v) const {
    if (d_.is_constant()) return RatExpr(n_.derivative(v), d_);
    return RatExpr(n_.derivative(v) * d_ - n_ * d_.derivative(v), d_ * d_);
}

RatExpr eval_poly(const Poly& p, const std::map<VarId, RatExpr>& vals) {
    std::map<VarId, std::vector<RatExpr>> powers;
    auto power_of = [&](VarId v, std::uint32_t k) -> const RatExpr& {
        auto& ladder = powers[v];
        if (ladder.empty()) ladder.push_back(RatExpr(Poly(1)));
        while (ladder.size() <= k) ladder.push_back(ladder.back() * vals.at(v));
        return ladder[k];
    };
    RatExpr result;
    for (const auto& [m, c] : p.terms()) {
        RatExpr term((Poly(c)));
        Mono rest;
        for (const auto& [v, k] : m.e) {
            if (vals.count(v)) term = term * power_of(v, k);
            else rest.e.push_back({v, k});
        }
        result += RatExpr(term.num().mul_mono(rest, Cyclo(1)), term.den());
    }
    return result;
}

RatExpr RatExpr::substituted(const std::map<VarId, RatExpr>& vals) const {
    return eval_poly(n_, vals) / eval_poly(d_, vals);
}

RatExpr RatExpr::evaluated(const std::map<VarId, Cyclo>& vals) const {
    return RatExpr(n_.evaluated(vals), d_.evaluated(vals));
}

Cyclo RatExpr::eval_all(const std::map<VarId, Cyclo>& vals) const {
    Cyclo den = d_.eval_all(vals);
    FANO_CHECK(!den.is_zero(), "denominator vanishes at the evaluation point");
    return n_.eval_all(vals) / den;
}

namespace {

// dense univariate view of a polynomial in its single variable
std::vector<Cyclo> to_dense(const Poly& p, VarId v) {
    std::vector<Cyclo> c(p.degree_in(v) + 1, Cyclo(0));
    for (const auto& [m, coeff] : p.terms()) c[m.exponent(v)] += coeff;
    return c;
}

Poly from_dense(const std::vector<Cyclo>& c, VarId v) {
    Poly p;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) p += Poly::term(Mono::var(v, static_cast<std::uint32_t>(i)), c[i]);
    return p;
}

std::size_t dense_deg(const std::vector<Cyclo>& a) {
    std::size_t d = a.size();
    while (d > 0 && a[d - 1].is_zero()) --d;
    return d; // significant length; 0 means zero polynomial
}

} // namespace

std::vector<Cyclo> univariate_gcd(std::vector<Cyclo> a, std::vector<Cyclo> b) {
    // lengths, not degrees: len = deg + 1 for nonzero, 0 for zero
    while (true) {
        std::size_t lb = dense_deg(b);
        if (lb == 0) break;
        std::size_t la = dense_deg(a);
        if (la < lb) {
            std::swap(a, b);
            continue;
        }
        Cyclo lead_inv = b[lb - 1].inv();
        for (std::size_t len = la; len >= lb; --len) {
            Cyclo f = a[len - 1] * lead_inv;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < lb; ++j) a[len - lb + j] -= f * b[j];
        }
        a.resize(lb > 1 ? lb - 1 : 1, Cyclo(0));
        std::swap(a, b);
    }
    std::size_t la = dense_deg(a);
    if (la == 0) return {Cyclo(0)};
    Cyclo inv = a[la - 1].inv();
    a.resize(la);
    for (auto& c : a) c *= inv;
    return a;
}

void RatExpr::reduce_in_place() {
    if (n_.is_zero() || d_.is_constant()) return;
    if (auto q = Poly::divide_exact(n_, d_)) {
        n_ = *q;
        d_ = Poly(1);
        return;
    }
    if (auto q = Poly::divide_exact(d_, n_)) {
        // num/den = 1/q
        n_ = Poly(1);
        d_ = *q;
        const Cyclo& lc = d_.leading_coeff();
        if (!(lc == Cyclo(1))) {
            Cyclo inv = lc.inv();
            n_ = n_.scaled(inv);
            d_ = d_.scaled(inv);
        }
        return;
    }
    std::set<VarId> vars = n_.variables();
    for (VarId v : d_.variables()) vars.insert(v);
    if (vars.size() != 1) return;
    VarId v = *vars.begin();
    auto g = univariate_gcd(to_dense(n_, v), to_dense(d_, v));
    if (dense_deg(g) <= 1) return;
    Poly gp = from_dense(g, v);
    auto qn = Poly::divide_exact(n_, gp);
    auto qd = Poly::divide_exact(d_, gp);
    FANO_CHECK(qn.has_value() && qd.has_value(), "gcd division failed");
    n_ = *qn;
    d_ = *qd;
    const Cyclo& lc = d_.leading_coeff();
    if (!(lc == Cyclo(1))) {
        Cyclo inv = lc.inv();
        n_ = n_.scaled(inv);
        d_ = d_.scaled(inv);
    }
}

RatExpr RatExpr::reduced() const {
    RatExpr r = *this;
    r.reduce_in_place();
    return r;
}

std::pair<Poly, Poly> RatExpr::display_pair() const {
    if (n_.is_zero()) return {Poly(0), Poly(1)};
    Q alpha = n_.rational_content(), beta = d_.rational_content();
    FANO_CHECK(alpha != 0 && beta != 0, "content of nonzero polynomial is zero");
    Poly nn = n_.scaled(Cyclo(Q(1) / alpha));
    Poly dd = d_.scaled(Cyclo(Q(1) / beta));
    Q ratio = alpha / beta; // canonical u/v with v > 0
    Poly outn = nn.scaled(Cyclo(Q(ratio.get_num())));
    Poly outd = dd.scaled(Cyclo(Q(ratio.get_den())));
    const Cyclo& dl = outd.leading_coeff();
    if (dl.is_rational() && dl.rational() < 0) {
        outn = outn.scaled(Cyclo(-1));
        outd = outd.scaled(Cyclo(-1));
    }
    return {outn, outd};
}

std::string RatExpr::str(unsigned conductor) const {
    auto [nn, dd] = display_pair();
    if (conductor == 0)
        conductor = std::lcm(nn.coefficient_conductor(), dd.coefficient_conductor());
    if (dd == Poly(1)) return nn.str(conductor);
    std::ostringstream os;
    os << "(" << nn.str(conductor) << ")/(" << dd.str(conductor) << ")";
    return os.str();
}

std::set<VarId> RatExpr::variables() const {
    std::set<VarId> vs = n_.variables();
    for (VarId v : d_.variables()) vs.insert(v);
    return vs;
}

} // namespace fano
