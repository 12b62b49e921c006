#include "fano/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "fano/errors.hpp"

namespace fano {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, used to build cyclotomics from
// x^n - 1 = prod_{d|n} Phi_d.
std::vector<Z> zpoly_div_exact(std::vector<Z> num, const std::vector<Z>& den) {
    FANO_CHECK(!den.empty() && den.back() == 1, "divisor must be monic");
    if (num.size() < den.size()) {
        for (const auto& c : num) FANO_CHECK(c == 0, "non-exact division");
        return {Z(0)};
    }
    std::vector<Z> quot(num.size() - den.size() + 1, Z(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Z q = num[i + den.size() - 1];
        quot[i] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
    }
    for (const auto& c : num) FANO_CHECK(c == 0, "non-exact division");
    return quot;
}

std::map<unsigned, std::vector<Z>> g_cyclo_cache;
std::mutex g_cyclo_mutex;

std::vector<Z> compute_cyclotomic(unsigned n);

const std::vector<Z>& cyclotomic_locked(unsigned n) {
    auto it = g_cyclo_cache.find(n);
    if (it != g_cyclo_cache.end()) return it->second;
    auto poly = compute_cyclotomic(n);
    return g_cyclo_cache.emplace(n, std::move(poly)).first->second;
}

std::vector<Z> compute_cyclotomic(unsigned n) {
    if (n == 1) return {Z(-1), Z(1)};
    std::vector<Z> num(n + 1, Z(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) num = zpoly_div_exact(std::move(num), cyclotomic_locked(d));
    }
    return num;
}

} // namespace

const std::vector<Z>& cyclotomic_poly(unsigned n) {
    FANO_CHECK(n >= 1, "conductor must be positive");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_locked(n);
}

namespace {

// Reduce a raw coefficient vector mod Phi_n down to length phi(n).
std::vector<Q> reduce_mod_phi(unsigned n, std::vector<Q> coeffs) {
    unsigned phi = euler_phi(n);
    const auto& mod = cyclotomic_poly(n);
    for (std::size_t i = coeffs.size(); i-- > phi;) {
        Q q = coeffs[i];
        if (q == 0) continue;
        coeffs[i] = 0;
        for (unsigned j = 0; j < phi; ++j) coeffs[i - phi + j] -= q * Q(mod[j]);
    }
    coeffs.resize(phi, Q(0));
    return coeffs;
}

// Power-basis representations at conductor n of zeta_n^{(n/m) j}, j < phi(m).
// Used to decide membership in the subfield Q(zeta_m) and rewrite there. When
// every basis vector is a plain power below the reduction threshold the
// columns are unit vectors and membership is a support check (unit_pos set).
struct SubfieldBasis {
    std::vector<std::vector<Q>> cols;
    std::vector<unsigned> unit_pos; // empty unless all columns are unit vectors
};

const SubfieldBasis& subfield_basis(unsigned n, unsigned m) {
    static std::map<std::pair<unsigned, unsigned>, SubfieldBasis> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    unsigned phim = euler_phi(m), phin = euler_phi(n), step = n / m;
    SubfieldBasis b;
    b.cols.reserve(phim);
    for (unsigned j = 0; j < phim; ++j) {
        std::vector<Q> raw(static_cast<std::size_t>(step) * j + 1, Q(0));
        raw.back() = 1;
        b.cols.push_back(reduce_mod_phi(n, std::move(raw)));
    }
    if (static_cast<std::size_t>(step) * (phim - 1) < phin) {
        for (unsigned j = 0; j < phim; ++j) b.unit_pos.push_back(step * j);
    }
    return cache.emplace(key, std::move(b)).first->second;
}

// If c (length phi(n)) lies in the span of the subfield basis for m | n,
// overwrite c with the length-phi(m) coordinates and report success.
bool demote_coords(unsigned n, unsigned m, std::vector<Q>& c) {
    const SubfieldBasis& basis = subfield_basis(n, m);
    unsigned rows = euler_phi(n), ncols = euler_phi(m);
    if (!basis.unit_pos.empty()) {
        std::vector<Q> sol(ncols, Q(0));
        std::size_t next = 0;
        for (unsigned i = 0; i < rows; ++i) {
            bool allowed = next < basis.unit_pos.size() && basis.unit_pos[next] == i;
            if (allowed) {
                sol[next++] = c[i];
            } else if (c[i] != 0) {
                return false;
            }
        }
        c = std::move(sol);
        return true;
    }
    const auto& cols = basis.cols;
    // Gaussian elimination on [cols | c]; tiny sizes, exact arithmetic.
    std::vector<std::vector<Q>> a(rows, std::vector<Q>(ncols + 1, Q(0)));
    for (unsigned i = 0; i < rows; ++i) {
        for (unsigned j = 0; j < ncols; ++j) a[i][j] = cols[j][i];
        a[i][ncols] = c[i];
    }
    std::vector<int> pivot_col_of_row(rows, -1);
    unsigned rank = 0;
    for (unsigned j = 0; j < ncols && rank < rows; ++j) {
        unsigned p = rank;
        while (p < rows && a[p][j] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        Q inv = Q(1) / a[rank][j];
        for (unsigned k = j; k <= ncols; ++k) a[rank][k] *= inv;
        for (unsigned i = 0; i < rows; ++i) {
            if (i == rank || a[i][j] == 0) continue;
            Q f = a[i][j];
            for (unsigned k = j; k <= ncols; ++k) a[i][k] -= f * a[rank][k];
        }
        pivot_col_of_row[rank] = static_cast<int>(j);
        ++rank;
    }
    for (unsigned i = rank; i < rows; ++i)
        if (a[i][ncols] != 0) return false; // inconsistent: not in the subfield
    std::vector<Q> sol(ncols, Q(0));
    for (unsigned i = 0; i < rank; ++i) sol[pivot_col_of_row[i]] = a[i][ncols];
    c = std::move(sol);
    return true;
}

} // namespace

void Cyclo::canonicalize() {
    if (c_.empty()) c_.assign(1, Q(0));
    while (n_ > 1) {
        // fast path: all higher coordinates zero means the value is rational
        bool rational = true;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) { rational = false; break; }
        if (rational) {
            Q v = c_[0];
            n_ = 1;
            c_.assign(1, v);
            return;
        }
        // try each maximal proper cyclotomic subfield
        bool demoted = false;
        for (unsigned p = 2; p <= n_ && !demoted; ++p) {
            if (n_ % p != 0) continue;
            // p must be prime; composite p with p | n has a prime factor already tried
            bool prime = true;
            for (unsigned d = 2; d * d <= p; ++d)
                if (p % d == 0) { prime = false; break; }
            if (!prime) continue;
            unsigned m = n_ / p;
            if (m == 1) continue; // rational fast path already failed
            if (demote_coords(n_, m, c_)) {
                n_ = m;
                demoted = true;
            }
        }
        if (!demoted) return;
    }
    c_.resize(1, Q(0));
}

Cyclo Cyclo::zeta(unsigned n) {
    FANO_CHECK(n >= 1, "conductor must be positive");
    unsigned phi = euler_phi(n);
    Cyclo z;
    z.n_ = n;
    z.c_.assign(phi, Q(0));
    if (n == 1) {
        z.c_[0] = 1;
    } else if (n == 2) {
        z.c_[0] = -1; // zeta_2 = -1, phi(2)=1
        z.canonicalize();
    } else {
        z.c_[1] = 1;
        z.canonicalize(); // n = 2 mod 4 demotes, e.g. zeta_6 = 1 + zeta_3
    }
    return z;
}

Cyclo Cyclo::from_coeffs(unsigned n, std::vector<Q> coeffs) {
    Cyclo r;
    r.n_ = n;
    r.c_ = reduce_mod_phi(n, std::move(coeffs));
    r.canonicalize();
    return r;
}

bool Cyclo::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

const Q& Cyclo::rational() const {
    FANO_CHECK(n_ == 1, "value is not rational");
    return c_[0];
}

Cyclo Cyclo::promoted_raw(unsigned m) const {
    if (m == n_) return *this;
    FANO_CHECK(m % n_ == 0, "conductor promotion requires divisibility");
    unsigned step = m / n_;
    std::vector<Q> big((c_.size() - 1) * step + 1, Q(0));
    for (std::size_t i = 0; i < c_.size(); ++i) big[i * step] = c_[i];
    Cyclo r;
    r.n_ = m;
    r.c_ = reduce_mod_phi(m, std::move(big));
    return r;
}

std::vector<Q> Cyclo::coeffs_at(unsigned n) const {
    return promoted_raw(n).c_;
}

namespace {
unsigned common_conductor(const Cyclo& a, const Cyclo& b) {
    return static_cast<unsigned>(std::lcm(a.conductor(), b.conductor()));
}
} // namespace

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    unsigned m = common_conductor(*this, o);
    Cyclo a = promoted_raw(m), b = o.promoted_raw(m);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.canonicalize();
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    if (n_ == 1 && o.n_ == 1) return Cyclo(c_[0] * o.c_[0]);
    if (n_ == 1) { // rational scale
        if (c_[0] == 0) return Cyclo();
        Cyclo r = o;
        for (auto& q : r.c_) q *= c_[0];
        r.canonicalize();
        return r;
    }
    if (o.n_ == 1) return o * *this;
    unsigned m = common_conductor(*this, o);
    Cyclo a = promoted_raw(m), b = o.promoted_raw(m);
    std::vector<Q> prod(a.c_.size() + b.c_.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return from_coeffs(m, std::move(prod));
}

namespace {

// Univariate polynomials over Q, coefficient vectors with constant term first.
using QP = std::vector<Q>;

std::size_t qp_deg(const QP& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d; // length of significant part (0 means zero polynomial)
}

} // namespace

Cyclo Cyclo::inv() const {
    FANO_CHECK(!is_zero(), "division by zero");
    if (n_ == 1) return Cyclo(Q(1) / c_[0]);
    // extended euclid: s*self + t*Phi_n = gcd (= nonzero constant)
    const auto& modz = cyclotomic_poly(n_);
    QP r0(modz.size());
    for (std::size_t i = 0; i < modz.size(); ++i) r0[i] = Q(modz[i]);
    QP r1 = c_;
    QP s0 = {Q(0)}, s1 = {Q(1)}; // coefficients of self
    while (qp_deg(r1) > 1) {
        // one euclid step: r0 = q*r1 + r2
        std::size_t d0 = qp_deg(r0), d1 = qp_deg(r1);
        if (d1 == 0) throw error("cyclotomic inverse: zero remainder before unit");
        if (d0 < d1) { std::swap(r0, r1); std::swap(s0, s1); continue; }
        QP q(d0 - d1 + 1, Q(0));
        QP rem = r0;
        while (true) {
            std::size_t da = qp_deg(rem);
            if (da < d1) break;
            Q f = rem[da - 1] / r1[d1 - 1];
            q[da - d1] += f;
            for (std::size_t j = 0; j < d1; ++j) rem[da - d1 + j] -= f * r1[j];
            rem[da - 1] = 0;
        }
        // s2 = s0 - q*s1
        QP qs(q.size() + s1.size() - 1, Q(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        QP s2(std::max(s0.size(), qs.size()), Q(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(s2);
        if (qp_deg(r1) <= 1) break;
    }
    FANO_CHECK(qp_deg(r1) == 1 && r1[0] != 0, "element not invertible mod cyclotomic");
    Q unit = r1[0];
    for (auto& q : s1) q /= unit;
    return from_coeffs(n_, std::move(s1));
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inv(); }

Cyclo Cyclo::pow(long e) const {
    if (e == 0) return Cyclo(Q(1));
    Cyclo base = e < 0 ? inv() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Cyclo acc(Q(1));
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Cyclo::operator==(const Cyclo& o) const { return cmp(o) == 0; }

int Cyclo::cmp(const Cyclo& o) const {
    if (n_ != o.n_) {
        // still possibly equal only if both rational, but canonical form forbids that
        return n_ < o.n_ ? -1 : 1;
    }
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int s = ::cmp(c_[i], o.c_[i]);
        if (s != 0) return s < 0 ? -1 : 1;
    }
    return 0;
}

std::complex<double> Cyclo::to_complex() const {
    constexpr double tau = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double angle = tau * static_cast<double>(i) / static_cast<double>(n_);
        acc += q_double(c_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::size_t Cyclo::hash() const {
    std::size_t h = n_ * 1099511628211ull;
    for (const auto& q : c_) h = h * 31 + q_hash(q);
    return h;
}

std::string Cyclo::str() const {
    if (n_ == 1) return q_str(c_[0]);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << q_str(c_[i]);
    }
    os << "]_" << n_;
    return os.str();
}

} // namespace fano
