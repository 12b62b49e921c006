#ifndef FANO_GROUP_HPP
#define FANO_GROUP_HPP

#include <string>
#include <vector>

#include "fano/cyclo.hpp"
#include "fano/poly.hpp"

namespace fano {

// Dense square matrix over the cyclotomic scalars.
class CMat {
  public:
    explicit CMat(unsigned n) : n_(n), a_(std::size_t(n) * n) {}
    static CMat identity(unsigned n);

    unsigned dim() const { return n_; }
    Cyclo& at(unsigned r, unsigned c) { return a_[std::size_t(r) * n_ + c]; }
    const Cyclo& at(unsigned r, unsigned c) const { return a_[std::size_t(r) * n_ + c]; }

    CMat operator*(const CMat& o) const;
    Cyclo det() const;
    bool operator==(const CMat& o) const;
    bool operator!=(const CMat& o) const { return !(*this == o); }
    std::size_t hash() const;
    std::string str() const;

  private:
    unsigned n_;
    std::vector<Cyclo> a_;
};

// Finite matrix group given by generators; the element list is closed under
// products, which for invertible generators of a finite group includes all
// inverses and the identity.
class MatrixGroup {
  public:
    MatrixGroup(std::string name, std::vector<CMat> gens,
                std::size_t declared_order = 0);

    const std::string& name() const { return name_; }
    unsigned dim() const { return dim_; }
    const std::vector<CMat>& generators() const { return gens_; }
    const std::vector<CMat>& elements() const; // closes lazily
    std::size_t order() const { return elements().size(); }
    std::size_t declared_order() const { return declared_; }

  private:
    std::string name_;
    unsigned dim_;
    std::vector<CMat> gens_;
    std::size_t declared_;
    mutable std::vector<CMat> elements_;
};

// Breadth-first closure; errors on a non-invertible generator or when the
// bound from config().group_order_bound is exceeded.
std::vector<CMat> close_group(const std::vector<CMat>& gens);

// Linear substitution X_j -> sum_l X_l g_{lj}; vars fixes which symbols are
// the coordinates and their order.
Poly act(const CMat& g, const Poly& p, const std::vector<VarId>& vars);

bool is_invariant(const CMat& g, const Poly& p, const std::vector<VarId>& vars);
bool is_invariant(const MatrixGroup& G, const Poly& p, const std::vector<VarId>& vars);

// Averaging projector (1/|G|) sum_g act(g, p) onto the invariant ring.
Poly reynolds(const MatrixGroup& G, const Poly& p, const std::vector<VarId>& vars);

// Group file: JSON object with name, dimension, conductor, optional order,
// and generators as row-major arrays of expression strings.
MatrixGroup load_group_file(const std::string& path);

} // namespace fano

#endif
