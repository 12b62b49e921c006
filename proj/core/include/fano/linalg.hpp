#ifndef FANO_LINALG_HPP
#define FANO_LINALG_HPP

#include <vector>

#include "fano/poly.hpp"
#include "fano/ratexpr.hpp"

namespace fano {

template <typename T>
class Mat {
  public:
    Mat() : r_(0), c_(0) {}
    Mat(std::size_t r, std::size_t c) : r_(r), c_(c), e_(r * c) {}
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& at(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

  private:
    std::size_t r_, c_;
    std::vector<T> e_;
};

using PolyMat = Mat<Poly>;
using RatMat = Mat<RatExpr>;

PolyMat matmul(const PolyMat& a, const PolyMat& b);

// Fraction-free Bareiss determinant; every division is exact.
Poly det(const PolyMat& m);

// m is n x (n+1); minor k is the determinant of m with column k removed.
std::vector<Poly> drop_column_minors(const PolyMat& m);

// Kernel of a rank-n matrix of shape n x (n+1), scaled so the last nonzero
// entry is 1. Throws singular_matrix_error when the rank is deficient.
std::vector<RatExpr> kernel_vector(const PolyMat& m);

// Cramer solve of a square system after clearing row denominators.
std::vector<RatExpr> solve_linear(const RatMat& a, const std::vector<RatExpr>& rhs);

} // namespace fano

#endif
