#include "fano/linalg.hpp"

#include "fano/errors.hpp"

namespace fano {

PolyMat matmul(const PolyMat& a, const PolyMat& b) {
    FANO_CHECK(a.cols() == b.rows(), "matmul shape mismatch");
    PolyMat r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Poly det(const PolyMat& m) {
    FANO_CHECK(m.rows() == m.cols(), "determinant needs a square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Poly(1);
    PolyMat a = m;
    int sign = 1;
    Poly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a.at(r, k).is_zero()) ++r;
            if (r == n) return Poly(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                auto q = Poly::divide_exact(num, prev);
                FANO_CHECK(q.has_value(), "bareiss division not exact");
                a.at(i, j) = std::move(*q);
            }
            a.at(i, k) = Poly(0);
        }
        prev = a.at(k, k);
    }
    Poly d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

std::vector<Poly> drop_column_minors(const PolyMat& m) {
    FANO_CHECK(m.cols() == m.rows() + 1, "expected shape n x (n+1)");
    std::size_t n = m.rows();
    std::vector<Poly> minors;
    minors.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        PolyMat sub(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j <= n; ++j) {
                if (j == k) continue;
                sub.at(i, jj++) = m.at(i, j);
            }
        }
        minors.push_back(det(sub));
    }
    return minors;
}

std::vector<RatExpr> kernel_vector(const PolyMat& m) {
    auto minors = drop_column_minors(m);
    std::size_t n = m.rows();
    // v_k = (-1)^k minor_k spans the kernel when the rank is n
    std::size_t last = n + 1;
    for (std::size_t k = n + 1; k-- > 0;) {
        if (!minors[k].is_zero()) { last = k; break; }
    }
    if (last == n + 1) throw singular_matrix_error("kernel is not one dimensional");
    std::vector<RatExpr> v(n + 1);
    RatExpr scale(minors[last]);
    if ((last % 2) == 1) scale = -scale;
    for (std::size_t k = 0; k <= n; ++k) {
        RatExpr mk(minors[k]);
        if ((k % 2) == 1) mk = -mk;
        v[k] = mk / scale;
    }
    return v;
}

std::vector<RatExpr> solve_linear(const RatMat& a, const std::vector<RatExpr>& rhs) {
    FANO_CHECK(a.rows() == a.cols() && rhs.size() == a.rows(), "solve shape mismatch");
    std::size_t n = a.rows();
    // clear each row to polynomials, multiplying by every distinct denominator
    PolyMat ap(n, n);
    std::vector<Poly> bp(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Poly> dens;
        auto note = [&dens](const Poly& d) {
            if (d.is_constant()) return;
            for (const Poly& seen : dens)
                if (seen == d) return;
            dens.push_back(d);
        };
        for (std::size_t j = 0; j < n; ++j) note(a.at(i, j).den());
        note(rhs[i].den());
        auto cleared = [&dens](const RatExpr& x) {
            Poly p = x.num();
            for (const Poly& d : dens)
                if (!(d == x.den())) p = p * d;
            if (x.den().is_constant()) p = p.scaled(x.den().constant_value().inv());
            return p;
        };
        for (std::size_t j = 0; j < n; ++j) ap.at(i, j) = cleared(a.at(i, j));
        bp[i] = cleared(rhs[i]);
    }
    Poly d = det(ap);
    if (d.is_zero()) throw singular_matrix_error("system matrix is singular");
    std::vector<RatExpr> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        PolyMat aj = ap;
        for (std::size_t i = 0; i < n; ++i) aj.at(i, j) = bp[i];
        x[j] = RatExpr(det(aj), d);
    }
    return x;
}

} // namespace fano
