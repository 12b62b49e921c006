#include "fano/ode.hpp"

#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "fano/errors.hpp"
#include "fano/parser.hpp"

namespace fano {

LinearODE::LinearODE(VarId var, std::vector<RadElem> coeffs) : var_(var), c_(std::move(coeffs)) {
    FANO_CHECK(!c_.empty(), "a linear equation needs order at least one");
}

LinearODE LinearODE::from_rational(VarId var, std::vector<RatExpr> coeffs) {
    std::vector<RadElem> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.emplace_back(r);
    return LinearODE(var, std::move(c));
}

const RadElem& LinearODE::coefficient(unsigned k) const {
    FANO_CHECK(k < c_.size(), "coefficient index out of range");
    return c_[k];
}

bool LinearODE::has_rational_coefficients() const {
    for (const auto& c : c_)
        if (!c.is_rational()) return false;
    return true;
}

std::vector<RatExpr> LinearODE::rational_coefficients() const {
    FANO_CHECK(has_rational_coefficients(), "equation has radical coefficients");
    std::vector<RatExpr> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.rational_part());
    return out;
}

bool LinearODE::operator==(const LinearODE& o) const {
    if (var_ != o.var_ || c_.size() != o.c_.size()) return false;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].equals(o.c_[k])) return false;
    return true;
}

std::string LinearODE::str(unsigned conductor) const {
    std::ostringstream os;
    os << "x^(" << order() << ")";
    for (unsigned k = order(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        const std::string cs =
            c_[k].is_rational() ? c_[k].rational_part().str(conductor) : c_[k].str(conductor);
        os << " + (" << cs << ")";
        if (k == 0)
            os << "*x";
        else
            os << "*x^(" << k << ")";
    }
    os << " = 0";
    return os.str();
}

GaugeFactor::GaugeFactor(VarId var, std::vector<std::pair<RatExpr, Q>> factors) : var_(var) {
    for (auto& [base, e] : factors) {
        FANO_CHECK(!base.is_zero(), "gauge factor base must be nonzero");
        if (e == 0 || base == RatExpr(1)) continue;
        bool merged = false;
        for (auto& [b2, e2] : f_)
            if (b2 == base) {
                e2 += e;
                merged = true;
                break;
            }
        if (!merged) f_.emplace_back(base, e);
    }
    for (std::size_t i = f_.size(); i-- > 0;)
        if (f_[i].second == 0) f_.erase(f_.begin() + static_cast<std::ptrdiff_t>(i));
}

namespace {

void collect_factors(const Expr& e, const Q& outer, unsigned conductor,
                     std::vector<std::pair<RatExpr, Q>>& out) {
    switch (e.kind) {
    case Expr::Kind::mul:
        collect_factors(e.kids[0], outer, conductor, out);
        collect_factors(e.kids[1], outer, conductor, out);
        return;
    case Expr::Kind::div:
        collect_factors(e.kids[0], outer, conductor, out);
        collect_factors(e.kids[1], -outer, conductor, out);
        return;
    case Expr::Kind::pow:
        collect_factors(e.kids[0], outer * e.exponent, conductor, out);
        return;
    default:
        out.emplace_back(expr_to_ratexpr(e, conductor), outer);
        return;
    }
}

} // namespace

GaugeFactor GaugeFactor::parse(const std::string& text, unsigned conductor) {
    std::vector<std::pair<RatExpr, Q>> factors;
    collect_factors(parse_expression(text), Q(1), conductor, factors);
    std::set<VarId> vars;
    for (const auto& [base, e] : factors) {
        for (VarId v : base.num().variables()) vars.insert(v);
        for (VarId v : base.den().variables()) vars.insert(v);
    }
    FANO_CHECK(vars.size() == 1, "gauge factor must use exactly one variable");
    return GaugeFactor(*vars.begin(), std::move(factors));
}

GaugeFactor GaugeFactor::inverse() const { return pow(Q(-1)); }

GaugeFactor GaugeFactor::pow(const Q& e) const {
    std::vector<std::pair<RatExpr, Q>> f = f_;
    for (auto& [base, ex] : f) ex *= e;
    return GaugeFactor(var_, std::move(f));
}

GaugeFactor GaugeFactor::operator*(const GaugeFactor& o) const {
    FANO_CHECK(var_ == o.var_, "gauge factors use different variables");
    std::vector<std::pair<RatExpr, Q>> f = f_;
    f.insert(f.end(), o.f_.begin(), o.f_.end());
    return GaugeFactor(var_, std::move(f));
}

RatExpr GaugeFactor::log_derivative() const {
    RatExpr out;
    for (const auto& [base, e] : f_) out += RatExpr(Poly(e)) * base.derivative(var_) / base;
    return out;
}

RadElem GaugeFactor::as_radelem() const {
    RadElem out{RatExpr(1)};
    for (const auto& [base, e] : f_) {
        const mpz_class num = e.get_num(), den = e.get_den();
        FANO_CHECK(num.fits_slong_p() && den.fits_slong_p(), "gauge exponent out of range");
        const long p = num.get_si(), q = den.get_si();
        const long rem = ((p % q) + q) % q;
        out = out * RadElem(base.pow((p - rem) / q));
        if (rem) {
            auto tower = std::make_shared<const RadicalTower>(
                std::vector<Radical>{Radical{base, static_cast<unsigned>(q)}});
            out = out * RadElem::monomial(tower, {static_cast<unsigned>(rem)});
        }
    }
    return out;
}

std::string GaugeFactor::str(unsigned conductor) const {
    if (f_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [base, e] : f_) {
        if (!first) os << "*";
        first = false;
        os << "(" << base.str(conductor) << ")";
        if (e == 1) continue;
        if (e.get_den() == 1)
            os << "^(" << e.get_num().get_str() << ")";
        else
            os << "^(" << e.get_num().get_str() << "/" << e.get_den().get_str() << ")";
    }
    return os.str();
}

LinearODE conjugate_by_factor(const LinearODE& eq, const GaugeFactor& f) {
    FANO_CHECK(f.is_trivial() || f.var() == eq.var(),
               "gauge factor variable must match the equation");
    const unsigned n = eq.order();
    const VarId t = eq.var();
    const RatExpr u = f.log_derivative();

    // (g y)^(k) / g  =  sum_j b[k][j] y^(j)  with  g = 1/f,  g'/g = -u
    std::vector<std::vector<RatExpr>> b(n + 1, std::vector<RatExpr>(n + 1));
    b[0][0] = RatExpr(1);
    for (unsigned k = 0; k < n; ++k)
        for (unsigned j = 0; j <= k + 1; ++j) {
            RatExpr v = b[k][j].derivative(t) - u * b[k][j];
            if (j) v += b[k][j - 1];
            b[k + 1][j] = v;
        }

    std::vector<RadElem> c;
    c.reserve(n);
    for (unsigned j = 0; j < n; ++j) {
        RadElem acc{b[n][j]};
        for (unsigned k = j; k < n; ++k) acc = acc + eq.coefficient(k) * RadElem(b[k][j]);
        c.push_back(acc);
    }
    return LinearODE(t, std::move(c));
}

LinearODE pullback(const LinearODE& eq, const RatExpr& rho, VarId new_var) {
    FANO_CHECK(eq.has_rational_coefficients(), "pullback requires rational coefficients");
    const unsigned n = eq.order();
    const RatExpr drho = rho.derivative(new_var);
    FANO_CHECK(!drho.is_zero(), "pullback map must be nonconstant");
    const std::vector<RatExpr> a = eq.rational_coefficients();
    const std::map<VarId, RatExpr> sub = {{eq.var(), rho}};

    // x^(k) evaluated along rho  =  sum_j gamma[k][j] y^(j)
    std::vector<std::vector<RatExpr>> gamma(n + 1, std::vector<RatExpr>(n + 1));
    gamma[0][0] = RatExpr(1);
    for (unsigned k = 0; k < n; ++k)
        for (unsigned j = 0; j <= k + 1; ++j) {
            RatExpr v = gamma[k][j].derivative(new_var);
            if (j) v += gamma[k][j - 1];
            gamma[k + 1][j] = v / drho;
        }

    const RatExpr scale = drho.pow(static_cast<long>(n));
    std::vector<RatExpr> c;
    c.reserve(n);
    for (unsigned j = 0; j < n; ++j) {
        RatExpr acc = gamma[n][j];
        for (unsigned k = j; k < n; ++k) acc += a[k].substituted(sub) * gamma[k][j];
        c.push_back(acc * scale);
    }
    return LinearODE::from_rational(new_var, std::move(c));
}

RadElem apply_operator(const LinearODE& eq, const Poly& p) {
    RadElem out{RatExpr(0)};
    Poly d = p;
    for (unsigned k = 0; k < eq.order(); ++k) {
        out = out + eq.coefficient(k) * RadElem(RatExpr(d));
        d = d.derivative(eq.var());
    }
    return out + RadElem(RatExpr(d));
}

namespace {

std::vector<Cyclo> dense_univariate(const Poly& p, VarId var) {
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.e) FANO_CHECK(v == var, "expected a univariate function");
    std::vector<Cyclo> out(p.is_zero() ? 1 : p.degree_in(var) + 1, Cyclo(0));
    for (const auto& [m, c] : p.terms()) out[m.exponent(var)] = c;
    return out;
}

// in place: coefficients of p(at + tau) from coefficients of p(t)
void taylor_shift(std::vector<Cyclo>& c, const Cyclo& at) {
    if (c.size() < 2 || at.is_zero()) return;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        for (std::size_t j = c.size() - 1; j-- > i;) c[j] = c[j] + at * c[j + 1];
}

Q falling_factorial(unsigned m, unsigned k) {
    Q out(1);
    for (unsigned i = 0; i < k; ++i) out *= Q(long(m - i));
    return out;
}

} // namespace

std::vector<Cyclo> taylor_coefficients(const RatExpr& f, VarId var, const Cyclo& at,
                                       unsigned count) {
    std::vector<Cyclo> num = dense_univariate(f.num(), var);
    std::vector<Cyclo> den = dense_univariate(f.den(), var);
    taylor_shift(num, at);
    taylor_shift(den, at);
    FANO_CHECK(!den[0].is_zero(), "function has a pole at the expansion point");
    std::vector<Cyclo> out(count, Cyclo(0));
    for (unsigned m = 0; m < count; ++m) {
        Cyclo s = m < num.size() ? num[m] : Cyclo(0);
        for (unsigned j = 1; j <= m && j < den.size(); ++j) s = s - den[j] * out[m - j];
        out[m] = s / den[0];
    }
    return out;
}

std::vector<Cyclo> solve_series(const LinearODE& eq, const Cyclo& at,
                                const std::vector<Cyclo>& initial, unsigned count) {
    const unsigned n = eq.order();
    FANO_CHECK(initial.size() == n, "need exactly order many initial coefficients");
    FANO_CHECK(count >= n, "series length shorter than the initial data");
    const std::vector<RatExpr> a = eq.rational_coefficients();
    std::vector<std::vector<Cyclo>> as;
    as.reserve(n);
    for (const auto& ak : a) as.push_back(taylor_coefficients(ak, eq.var(), at, count));

    std::vector<Cyclo> x = initial;
    x.reserve(count);
    for (unsigned r = 0; x.size() < count; ++r) {
        Cyclo s(0);
        for (unsigned k = 0; k < n; ++k)
            for (unsigned d = 0; d <= r; ++d)
                s = s + as[k][d] * x[r - d + k] * Cyclo(falling_factorial(r - d + k, k));
        x.push_back(Cyclo(0) - s / Cyclo(falling_factorial(r + n, n)));
    }
    return x;
}

} // namespace fano
