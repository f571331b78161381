#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qjl/gq.hpp"

namespace qjl {

// Sparse ring element: basis index -> coefficient.
using RingElem = std::map<int, GQ>;

// Finite graded commutative ring with a basis, structure constants and a
// linear functional on the top degree. Basis element 0 is the unit.
class GradedRing {
public:
    using Product = std::vector<std::pair<int, GQ>>;

    GradedRing() = default;
    // products[i * n + j] = sparse expansion of b_i * b_j; integrate[i] is the
    // value of the functional on b_i (ignored unless deg b_i = dim).
    // Throws ModelError when the data violates the ring invariants.
    GradedRing(int dim, std::vector<std::string> names, std::vector<int> degrees, std::vector<Product> products,
               std::vector<GQ> integrate);

    // Q[h]/(h^(dim+1)) with the functional h^dim -> top.
    static GradedRing truncated_polynomial(int dim, const GQ &top, const std::string &var = "h");
    static GradedRing tensor(const GradedRing &a, const GradedRing &b);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(names_.size()); }
    int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    const std::string &name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    // -1 when absent.
    int index_of(const std::string &name) const;
    const Product &product(int i, int j) const { return products_[static_cast<std::size_t>(i * size() + j)]; }
    const GQ &integral_of(int i) const { return integrate_[static_cast<std::size_t>(i)]; }

    RingElem mul(const RingElem &a, const RingElem &b) const;
    RingElem pow(const RingElem &a, int e) const;
    RingElem degree_part(const RingElem &a, int k) const;
    GQ integrate(const RingElem &a) const;
    std::string str(const RingElem &a) const;

private:
    void validate() const;

    int dim_ = 0;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<Product> products_;
    std::vector<GQ> integrate_;
};

RingElem operator+(RingElem a, const RingElem &b);
RingElem operator-(RingElem a, const RingElem &b);
RingElem operator*(RingElem a, const GQ &s);
RingElem ring_unit();

} // namespace qjl
