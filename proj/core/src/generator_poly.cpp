#include "qjl/generator_poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qjl/errors.hpp"

namespace qjl {

namespace {

constexpr const char *kNames[kNumSyms] = {"E1", "P", "E3", "E4", "e2", "e4", "e6"};
constexpr int kWeights[kNumSyms] = {1, 2, 3, 4, 2, 4, 6};

std::string coeff_text(const GQ &c)
{
    if (c.is_real()) {
        return to_string(c.re());
    }
    return "(" + c.str() + ")";
}

} // namespace

const char *sym_name(Sym s)
{
    return kNames[static_cast<int>(s)];
}

int sym_weight(Sym s)
{
    return kWeights[static_cast<int>(s)];
}

Sym sym_from_name(const std::string &name)
{
    for (int i = 0; i < kNumSyms; ++i) {
        if (name == kNames[i]) {
            return static_cast<Sym>(i);
        }
    }
    throw ParseError("unknown symbol '" + name + "'");
}

int monomial_weight(const Monomial &m)
{
    int w = 0;
    for (int i = 0; i < kNumSyms; ++i) {
        w += m[static_cast<std::size_t>(i)] * kWeights[i];
    }
    return w;
}

std::vector<Monomial> monomials_of_weight(int w, const std::vector<Sym> &allowed)
{
    std::vector<Monomial> out;
    Monomial m{};
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
        if (idx == allowed.size()) {
            if (left == 0) {
                out.push_back(m);
            }
            return;
        }
        int s = static_cast<int>(allowed[idx]);
        for (int e = left / kWeights[s]; e >= 0; --e) {
            m[static_cast<std::size_t>(s)] = e;
            rec(idx + 1, left - e * kWeights[s]);
        }
        m[static_cast<std::size_t>(s)] = 0;
    };
    if (w >= 0) {
        rec(0, w);
    }
    return out;
}

GeneratorPoly::GeneratorPoly(GQ c)
{
    add_term(Monomial{}, c);
}

GeneratorPoly::GeneratorPoly(Sym s)
{
    Monomial m{};
    m[static_cast<std::size_t>(s)] = 1;
    add_term(m, GQ(1));
}

GeneratorPoly GeneratorPoly::monomial(const Monomial &m, GQ c)
{
    GeneratorPoly p;
    p.add_term(m, c);
    return p;
}

void GeneratorPoly::add_term(const Monomial &m, const GQ &c)
{
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

bool GeneratorPoly::is_homogeneous() const
{
    return components().size() <= 1;
}

int GeneratorPoly::weight() const
{
    auto comps = components();
    if (comps.size() > 1) {
        throw WeightError("polynomial " + str() + " is not weight-homogeneous");
    }
    return comps.empty() ? 0 : comps.begin()->first;
}

std::map<int, GeneratorPoly> GeneratorPoly::components() const
{
    std::map<int, GeneratorPoly> out;
    for (const auto &[m, c] : terms_) {
        out[monomial_weight(m)].add_term(m, c);
    }
    return out;
}

int GeneratorPoly::degree(Sym s) const
{
    int d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m[static_cast<std::size_t>(s)]);
    }
    return d;
}

GeneratorPoly &GeneratorPoly::operator+=(const GeneratorPoly &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

GeneratorPoly &GeneratorPoly::operator-=(const GeneratorPoly &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

GeneratorPoly &GeneratorPoly::operator*=(const GQ &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_) {
        v *= c;
    }
    return *this;
}

GeneratorPoly operator*(const GeneratorPoly &a, const GeneratorPoly &b)
{
    GeneratorPoly r;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            Monomial m;
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

GeneratorPoly GeneratorPoly::pow(unsigned e) const
{
    GeneratorPoly r(GQ(1));
    for (unsigned i = 0; i < e; ++i) {
        r = r * *this;
    }
    return r;
}

std::string GeneratorPoly::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial &m = it->first;
        GQ c = it->second;
        bool negative = c.is_real() && sgn(c.re()) < 0;
        if (negative) {
            c = -c;
        }
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool constant = monomial_weight(m) == 0 && std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
        bool wrote = false;
        if (constant || !c.is_one()) {
            os << coeff_text(c);
            wrote = true;
        }
        for (int i = 0; i < kNumSyms; ++i) {
            int e = m[static_cast<std::size_t>(i)];
            if (e == 0) {
                continue;
            }
            os << (wrote ? "*" : "") << kNames[i];
            if (e > 1) {
                os << "^" << e;
            }
            wrote = true;
        }
    }
    return os.str();
}

} // namespace qjl
