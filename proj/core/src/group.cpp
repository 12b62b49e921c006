#include "fano/group.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "fano/config.hpp"
#include "fano/errors.hpp"
#include "fano/parser.hpp"

namespace fano {

CMat CMat::identity(unsigned n) {
    CMat m(n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = Cyclo(1);
    return m;
}

CMat CMat::operator*(const CMat& o) const {
    FANO_CHECK(n_ == o.n_, "matrix dimension mismatch");
    CMat r(n_);
    for (unsigned i = 0; i < n_; ++i) {
        for (unsigned k = 0; k < n_; ++k) {
            const Cyclo& x = at(i, k);
            if (x.is_zero()) continue;
            for (unsigned j = 0; j < n_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    }
    return r;
}

Cyclo CMat::det() const {
    // Gaussian elimination; the scalars form a field, so division is exact.
    CMat m = *this;
    Cyclo d(1);
    for (unsigned col = 0; col < n_; ++col) {
        unsigned piv = col;
        while (piv < n_ && m.at(piv, col).is_zero()) ++piv;
        if (piv == n_) return Cyclo(0);
        if (piv != col) {
            for (unsigned j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Cyclo inv = m.at(col, col).inv();
        for (unsigned r = col + 1; r < n_; ++r) {
            Cyclo f = m.at(r, col) * inv;
            if (f.is_zero()) continue;
            for (unsigned j = col; j < n_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

bool CMat::operator==(const CMat& o) const {
    return n_ == o.n_ && a_ == o.a_;
}

std::size_t CMat::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ n_;
    for (const Cyclo& c : a_) h = h * 0x100000001b3ULL ^ c.hash();
    return h;
}

std::string CMat::str() const {
    std::ostringstream os;
    os << "[";
    for (unsigned r = 0; r < n_; ++r) {
        if (r) os << ";";
        for (unsigned c = 0; c < n_; ++c) {
            if (c) os << ",";
            os << at(r, c).str();
        }
    }
    os << "]";
    return os.str();
}

namespace {
struct CMatHash {
    std::size_t operator()(const CMat& m) const { return m.hash(); }
};
} // namespace

std::vector<CMat> close_group(const std::vector<CMat>& gens) {
    FANO_CHECK(!gens.empty(), "group needs at least one generator");
    unsigned n = gens.front().dim();
    for (const CMat& g : gens) {
        FANO_CHECK(g.dim() == n, "generators must share a dimension");
        FANO_CHECK(!g.det().is_zero(), "generator is not invertible");
    }
    std::size_t bound = config().group_order_bound;
    std::unordered_set<CMat, CMatHash> seen;
    std::vector<CMat> elements;
    std::vector<CMat> frontier;
    CMat id = CMat::identity(n);
    seen.insert(id);
    elements.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<CMat> next;
        for (const CMat& e : frontier) {
            for (const CMat& g : gens) {
                CMat p = e * g;
                if (seen.insert(p).second) {
                    FANO_CHECK(seen.size() <= bound, "group order bound exceeded");
                    elements.push_back(p);
                    next.push_back(std::move(p));
                }
            }
        }
        frontier = std::move(next);
    }
    return elements;
}

MatrixGroup::MatrixGroup(std::string name, std::vector<CMat> gens,
                         std::size_t declared_order)
    : name_(std::move(name)),
      dim_(gens.empty() ? 0 : gens.front().dim()),
      gens_(std::move(gens)),
      declared_(declared_order) {
    FANO_CHECK(!gens_.empty(), "group needs at least one generator");
}

const std::vector<CMat>& MatrixGroup::elements() const {
    if (elements_.empty()) {
        elements_ = close_group(gens_);
        FANO_CHECK(declared_ == 0 || elements_.size() == declared_,
                   "group order differs from the declared order");
    }
    return elements_;
}

Poly act(const CMat& g, const Poly& p, const std::vector<VarId>& vars) {
    FANO_CHECK(g.dim() == vars.size(), "matrix dimension mismatch");
    std::map<VarId, Poly> sub;
    for (unsigned j = 0; j < g.dim(); ++j) {
        Poly img;
        for (unsigned l = 0; l < g.dim(); ++l) {
            if (g.at(l, j).is_zero()) continue;
            img += Poly(g.at(l, j)) * Poly::variable(vars[l]);
        }
        sub.emplace(vars[j], std::move(img));
    }
    return p.substituted(sub);
}

bool is_invariant(const CMat& g, const Poly& p, const std::vector<VarId>& vars) {
    return act(g, p, vars) == p;
}

bool is_invariant(const MatrixGroup& G, const Poly& p, const std::vector<VarId>& vars) {
    for (const CMat& g : G.generators())
        if (!is_invariant(g, p, vars)) return false;
    return true;
}

Poly reynolds(const MatrixGroup& G, const Poly& p, const std::vector<VarId>& vars) {
    Poly sum;
    for (const CMat& g : G.elements()) sum += act(g, p, vars);
    return Cyclo(Q(1) / Q(static_cast<long>(G.order()))) * sum;
}

MatrixGroup load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open group file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw error("invalid JSON in " + path + ": " + e.what());
    }
    for (const char* key : {"name", "dimension", "conductor", "generators"})
        if (!j.contains(key)) throw error(path + ": missing field " + key);
    unsigned dim = j["dimension"].get<unsigned>();
    unsigned conductor = j["conductor"].get<unsigned>();
    std::size_t declared = j.value("order", std::size_t(0));
    std::vector<CMat> gens;
    for (const auto& gj : j["generators"]) {
        if (gj.size() != dim) throw error(path + ": generator row count mismatch");
        CMat m(dim);
        for (unsigned r = 0; r < dim; ++r) {
            if (gj[r].size() != dim) throw error(path + ": generator column count mismatch");
            for (unsigned c = 0; c < dim; ++c) {
                RatExpr v = parse_ratexpr(gj[r][c].get<std::string>(), conductor);
                if (!v.is_constant())
                    throw error(path + ": matrix entry is not constant");
                m.at(r, c) = v.constant_value();
            }
        }
        gens.push_back(std::move(m));
    }
    return MatrixGroup(j["name"].get<std::string>(), std::move(gens), declared);
}

} // namespace fano
