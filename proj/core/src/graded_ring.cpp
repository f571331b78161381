#include "qjl/graded_ring.hpp"

#include <sstream>

#include "qjl/errors.hpp"

namespace qjl {

namespace {

void add_into(RingElem &a, int i, const GQ &c)
{
    if (c.is_zero()) {
        return;
    }
    auto it = a.find(i);
    if (it == a.end()) {
        a.emplace(i, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        a.erase(it);
    }
}

} // namespace

RingElem operator+(RingElem a, const RingElem &b)
{
    for (const auto &[i, c] : b) {
        add_into(a, i, c);
    }
    return a;
}

RingElem operator-(RingElem a, const RingElem &b)
{
    for (const auto &[i, c] : b) {
        add_into(a, i, -c);
    }
    return a;
}

RingElem operator*(RingElem a, const GQ &s)
{
    if (s.is_zero()) {
        return {};
    }
    for (auto &[i, c] : a) {
        c *= s;
    }
    return a;
}

RingElem ring_unit()
{
    return {{0, GQ(1)}};
}

GradedRing::GradedRing(int dim, std::vector<std::string> names, std::vector<int> degrees,
                       std::vector<Product> products, std::vector<GQ> integrate)
    : dim_(dim), names_(std::move(names)), degrees_(std::move(degrees)), products_(std::move(products)),
      integrate_(std::move(integrate))
{
    validate();
}

void GradedRing::validate() const
{
    const int n = size();
    if (dim_ < 0) {
        throw ModelError("negative dimension");
    }
    if (n == 0 || static_cast<int>(degrees_.size()) != n || static_cast<int>(integrate_.size()) != n ||
        static_cast<int>(products_.size()) != n * n) {
        throw ModelError("ring data has inconsistent sizes");
    }
    if (degrees_[0] != 0) {
        throw ModelError("basis element 0 must be the unit in degree 0");
    }
    for (int i = 0; i < n; ++i) {
        if (degree(i) < 0 || degree(i) > dim_) {
            throw ModelError("basis element '" + name(i) + "' has degree outside [0, dim]");
        }
        for (int j = i + 1; j < n; ++j) {
            if (names_[static_cast<std::size_t>(i)] == names_[static_cast<std::size_t>(j)]) {
                throw ModelError("duplicate basis name '" + name(i) + "'");
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (product(0, i) != Product{{i, GQ(1)}} || product(i, 0) != Product{{i, GQ(1)}}) {
            throw ModelError("basis element 0 does not act as the unit on '" + name(i) + "'");
        }
        for (int j = 0; j < n; ++j) {
            for (const auto &[k, c] : product(i, j)) {
                if (k < 0 || k >= n || degree(k) != degree(i) + degree(j)) {
                    throw ModelError("product " + name(i) + "*" + name(j) + " is not homogeneous of degree " +
                                     std::to_string(degree(i) + degree(j)));
                }
            }
            RingElem ij;
            RingElem ji;
            for (const auto &[k, c] : product(i, j)) {
                add_into(ij, k, c);
            }
            for (const auto &[k, c] : product(j, i)) {
                add_into(ji, k, c);
            }
            if (ij != ji) {
                throw ModelError("multiplication table is not commutative at " + name(i) + "*" + name(j));
            }
        }
    }
    // associativity on basis triples
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            for (int k = 1; k < n; ++k) {
                if (degree(i) + degree(j) + degree(k) > dim_) {
                    continue;
                }
                RingElem a{{i, GQ(1)}}, b{{j, GQ(1)}}, c{{k, GQ(1)}};
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    throw ModelError("multiplication table is not associative at " + name(i) + "," + name(j) +
                                     "," + name(k));
                }
            }
        }
    }
    bool any_top = false;
    for (int i = 0; i < n; ++i) {
        if (degree(i) == dim_ && !integral_of(i).is_zero()) {
            any_top = true;
        }
    }
    if (!any_top) {
        throw ModelError("integration functional vanishes on the top degree");
    }
}

GradedRing GradedRing::truncated_polynomial(int dim, const GQ &top, const std::string &var)
{
    const int n = dim + 1;
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (int i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1" : (i == 1 ? var : var + "^" + std::to_string(i)));
        degrees.push_back(i);
    }
    std::vector<Product> prod(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i + j < n) {
                prod[static_cast<std::size_t>(i * n + j)] = {{i + j, GQ(1)}};
            }
        }
    }
    std::vector<GQ> integ(static_cast<std::size_t>(n));
    integ[static_cast<std::size_t>(dim)] = top;
    return GradedRing(dim, std::move(names), std::move(degrees), std::move(prod), std::move(integ));
}

GradedRing GradedRing::tensor(const GradedRing &a, const GradedRing &b)
{
    const int na = a.size();
    const int nb = b.size();
    const int n = na * nb;
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<GQ> integ;
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) {
            std::string nm;
            if (i == 0 && j == 0) {
                nm = "1";
            } else if (i == 0) {
                nm = "b." + b.name(j);
            } else if (j == 0) {
                nm = "a." + a.name(i);
            } else {
                nm = "a." + a.name(i) + "*b." + b.name(j);
            }
            names.push_back(nm);
            degrees.push_back(a.degree(i) + b.degree(j));
            integ.push_back(a.degree(i) == a.dim() && b.degree(j) == b.dim() ? a.integral_of(i) * b.integral_of(j)
                                                                             : GQ());
        }
    }
    std::vector<Product> prod(static_cast<std::size_t>(n * n));
    for (int i1 = 0; i1 < na; ++i1) {
        for (int j1 = 0; j1 < nb; ++j1) {
            for (int i2 = 0; i2 < na; ++i2) {
                for (int j2 = 0; j2 < nb; ++j2) {
                    RingElem r;
                    for (const auto &[ka, ca] : a.product(i1, i2)) {
                        for (const auto &[kb, cb] : b.product(j1, j2)) {
                            add_into(r, ka * nb + kb, ca * cb);
                        }
                    }
                    prod[static_cast<std::size_t>((i1 * nb + j1) * n + (i2 * nb + j2))] =
                        Product(r.begin(), r.end());
                }
            }
        }
    }
    return GradedRing(a.dim() + b.dim(), std::move(names), std::move(degrees), std::move(prod), std::move(integ));
}

int GradedRing::index_of(const std::string &nm) const
{
    for (int i = 0; i < size(); ++i) {
        if (name(i) == nm) {
            return i;
        }
    }
    return -1;
}

RingElem GradedRing::mul(const RingElem &a, const RingElem &b) const
{
    RingElem r;
    for (const auto &[i, ca] : a) {
        for (const auto &[j, cb] : b) {
            for (const auto &[k, c] : product(i, j)) {
                add_into(r, k, ca * cb * c);
            }
        }
    }
    return r;
}

RingElem GradedRing::pow(const RingElem &a, int e) const
{
    RingElem r = ring_unit();
    for (int i = 0; i < e; ++i) {
        r = mul(r, a);
    }
    return r;
}

RingElem GradedRing::degree_part(const RingElem &a, int k) const
{
    RingElem r;
    for (const auto &[i, c] : a) {
        if (degree(i) == k) {
            r.emplace(i, c);
        }
    }
    return r;
}

GQ GradedRing::integrate(const RingElem &a) const
{
    GQ s;
    for (const auto &[i, c] : a) {
        if (degree(i) == dim_) {
            s += c * integral_of(i);
        }
    }
    return s;
}

std::string GradedRing::str(const RingElem &a) const
{
    if (a.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[i, c] : a) {
        os << (first ? "" : " + ") << "(" << c.str() << ")*" << name(i);
        first = false;
    }
    return os.str();
}

} // namespace qjl
