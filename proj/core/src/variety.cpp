#include "qjl/variety.hpp"

#include <algorithm>

#include <json.hpp>

#include "qjl/errors.hpp"

namespace qjl {

using nlohmann::json;

void VarietyModel::validate() const
{
    auto it = chern.find(0);
    if (it == chern.end() || !it->second.is_one() || ring.degree_part(chern, 0).size() != 1) {
        throw ModelError("total Chern class must start with 1");
    }
    for (const auto &[i, c] : chern) {
        if (i < 0 || i >= ring.size()) {
            throw ModelError("Chern class refers to a missing basis element");
        }
    }
    for (const auto &d : divisors) {
        if (d.delta == -1) {
            throw DegenerateDivisorError("divisor coefficient delta = -1 makes theta(-(delta+1)z) vanish");
        }
        if (d.cls.empty()) {
            throw ModelError("divisor class is zero");
        }
        for (const auto &[i, c] : d.cls) {
            if (i < 0 || i >= ring.size() || ring.degree(i) != 1) {
                throw ModelError("divisor class must be of degree 1");
            }
        }
    }
}

namespace {

// Coefficients of (1+h)^(n+1) / prod (1 + d_i h) up to h^dim.
std::vector<Rational> chern_of_ci(int n, const std::vector<int> &degrees, int dim)
{
    std::vector<Rational> c(static_cast<std::size_t>(dim + 1));
    // binomial(n+1, k)
    Rational b = 1;
    for (int k = 0; k <= dim; ++k) {
        c[static_cast<std::size_t>(k)] = b;
        b = b * (n + 1 - k) / (k + 1);
    }
    for (int d : degrees) {
        // divide by (1 + d h)
        for (int k = 1; k <= dim; ++k) {
            c[static_cast<std::size_t>(k)] -= d * c[static_cast<std::size_t>(k - 1)];
        }
    }
    return c;
}

VarietyModel hypersurface_like(int n, const std::vector<int> &degrees, const std::string &name)
{
    if (n < 0) {
        throw ModelError("ambient dimension must be nonnegative");
    }
    int dim = n - static_cast<int>(degrees.size());
    if (dim < 0) {
        throw ModelError("too many equations for P^" + std::to_string(n));
    }
    Rational top = 1;
    for (int d : degrees) {
        if (d < 1) {
            throw ModelError("degrees must be positive");
        }
        top *= d;
    }
    VarietyModel m;
    m.name = name;
    m.ring = GradedRing::truncated_polynomial(dim, GQ(top));
    std::vector<Rational> c = chern_of_ci(n, degrees, dim);
    for (int k = 0; k <= dim; ++k) {
        if (c[static_cast<std::size_t>(k)] != 0) {
            m.chern[k] = GQ(c[static_cast<std::size_t>(k)]);
        }
    }
    m.validate();
    return m;
}

Rational rational_field(const json &v)
{
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Rational(v.get<long>());
    }
    throw ModelError("expected a rational as string or integer");
}

RingElem ring_elem_from_json(const GradedRing &ring, const json &v)
{
    RingElem r;
    if (v.is_string()) {
        int i = ring.index_of(v.get<std::string>());
        if (i < 0) {
            throw ModelError("unknown basis element '" + v.get<std::string>() + "'");
        }
        r[i] = GQ(1);
        return r;
    }
    if (!v.is_object()) {
        throw ModelError("ring element must be a basis name or an object {name: coefficient}");
    }
    for (auto it = v.begin(); it != v.end(); ++it) {
        int i = ring.index_of(it.key());
        if (i < 0) {
            throw ModelError("unknown basis element '" + it.key() + "'");
        }
        Rational c = rational_field(it.value());
        if (c != 0) {
            r[i] = r[i] + GQ(c);
        }
    }
    return r;
}

GradedRing explicit_ring(const json &j)
{
    int dim = j.at("dim").get<int>();
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (const auto &b : j.at("basis")) {
        names.push_back(b.at("name").get<std::string>());
        degrees.push_back(b.at("degree").get<int>());
    }
    const int n = static_cast<int>(names.size());
    if (n == 0 || degrees[0] != 0) {
        throw ModelError("the first basis element must be the degree-0 unit");
    }
    auto idx = [&](const std::string &nm) {
        for (int i = 0; i < n; ++i) {
            if (names[static_cast<std::size_t>(i)] == nm) {
                return i;
            }
        }
        throw ModelError("unknown basis element '" + nm + "'");
    };
    std::vector<GradedRing::Product> prod(static_cast<std::size_t>(n * n));
    std::vector<bool> given(static_cast<std::size_t>(n * n), false);
    for (int i = 0; i < n; ++i) {
        prod[static_cast<std::size_t>(i)] = {{i, GQ(1)}};
        prod[static_cast<std::size_t>(i * n)] = {{i, GQ(1)}};
        given[static_cast<std::size_t>(i)] = given[static_cast<std::size_t>(i * n)] = true;
    }
    if (j.contains("mult")) {
        for (const auto &entry : j.at("mult")) {
            if (!entry.is_array() || entry.size() != 3) {
                throw ModelError("mult entries are [a, b, {name: coefficient}]");
            }
            int a = idx(entry[0].get<std::string>());
            int b = idx(entry[1].get<std::string>());
            GradedRing::Product p;
            for (auto it = entry[2].begin(); it != entry[2].end(); ++it) {
                Rational c = rational_field(it.value());
                if (c != 0) {
                    p.emplace_back(idx(it.key()), GQ(c));
                }
            }
            prod[static_cast<std::size_t>(a * n + b)] = p;
            prod[static_cast<std::size_t>(b * n + a)] = p;
            given[static_cast<std::size_t>(a * n + b)] = given[static_cast<std::size_t>(b * n + a)] = true;
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!given[static_cast<std::size_t>(a * n + b)] &&
                degrees[static_cast<std::size_t>(a)] + degrees[static_cast<std::size_t>(b)] <= dim) {
                throw ModelError("missing product " + names[static_cast<std::size_t>(a)] + "*" +
                                 names[static_cast<std::size_t>(b)]);
            }
        }
    }
    std::vector<GQ> integ(static_cast<std::size_t>(n));
    for (auto it = j.at("integrate").begin(); it != j.at("integrate").end(); ++it) {
        integ[static_cast<std::size_t>(idx(it.key()))] = GQ(rational_field(it.value()));
    }
    return GradedRing(dim, std::move(names), std::move(degrees), std::move(prod), std::move(integ));
}

VarietyModel model_from_json(const json &j)
{
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "point" || s == "pt") {
            return model_point();
        }
        if (s == "K3") {
            return model_hypersurface(3, 4);
        }
        if (s == "F1") {
            return model_f1();
        }
        if (s.size() >= 2 && s[0] == 'P' && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
            return model_projective(std::stoi(s.substr(1)));
        }
        throw ModelError("unknown model name '" + s + "'");
    }
    if (!j.is_object() || !j.contains("type")) {
        throw ModelError("model must be a name or an object with a 'type'");
    }
    const std::string type = j.at("type").get<std::string>();
    VarietyModel m;
    if (type == "point") {
        m = model_point();
    } else if (type == "projective") {
        m = model_projective(j.at("n").get<int>());
    } else if (type == "hypersurface") {
        m = model_hypersurface(j.at("n").get<int>(), j.at("d").get<int>());
    } else if (type == "ci") {
        m = model_ci(j.at("n").get<int>(), j.at("degrees").get<std::vector<int>>());
    } else if (type == "product") {
        const json &fs = j.at("factors");
        if (!fs.is_array() || fs.empty()) {
            throw ModelError("product needs a nonempty 'factors' array");
        }
        m = model_from_json(fs[0]);
        for (std::size_t i = 1; i < fs.size(); ++i) {
            m = model_product(m, model_from_json(fs[i]));
        }
    } else if (type == "explicit") {
        m.name = j.value("name", std::string("explicit"));
        m.ring = explicit_ring(j);
        m.chern = ring_elem_from_json(m.ring, j.at("chern"));
    } else {
        throw ModelError("unknown model type '" + type + "'");
    }
    if (j.contains("divisors")) {
        for (const auto &d : j.at("divisors")) {
            Divisor div;
            div.cls = ring_elem_from_json(m.ring, d.at("class"));
            div.delta = d.at("delta").get<long>();
            div.label = d.at("class").is_string() ? d.at("class").get<std::string>() : d.at("class").dump();
            m.divisors.push_back(std::move(div));
        }
    }
    m.validate();
    return m;
}

} // namespace

VarietyModel model_point()
{
    VarietyModel m;
    m.name = "point";
    m.ring = GradedRing::truncated_polynomial(0, GQ(1));
    m.chern = ring_unit();
    return m;
}

VarietyModel model_projective(int n)
{
    if (n < 1) {
        throw ModelError("P^n needs n >= 1");
    }
    return hypersurface_like(n, {}, "P" + std::to_string(n));
}

VarietyModel model_hypersurface(int n, int d)
{
    if (n < 1 || d < 1) {
        throw ModelError("hypersurface needs n >= 1 and d >= 1");
    }
    return hypersurface_like(n, {d}, "X_" + std::to_string(d) + " in P" + std::to_string(n));
}

VarietyModel model_ci(int n, const std::vector<int> &degrees)
{
    std::string name = "CI(";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        name += (i ? "," : "") + std::to_string(degrees[i]);
    }
    return hypersurface_like(n, degrees, name + ") in P" + std::to_string(n));
}

VarietyModel model_product(const VarietyModel &a, const VarietyModel &b)
{
    VarietyModel m;
    m.name = a.name + " x " + b.name;
    m.ring = GradedRing::tensor(a.ring, b.ring);
    const int nb = b.ring.size();
    for (const auto &[i, ci] : a.chern) {
        for (const auto &[j, cj] : b.chern) {
            m.chern[i * nb + j] = ci * cj;
        }
    }
    for (const auto &d : a.divisors) {
        Divisor e{{}, d.delta, d.label};
        for (const auto &[i, c] : d.cls) {
            e.cls[i * nb] = c;
        }
        m.divisors.push_back(std::move(e));
    }
    for (const auto &d : b.divisors) {
        Divisor e{{}, d.delta, d.label};
        for (const auto &[j, c] : d.cls) {
            e.cls[j] = c;
        }
        m.divisors.push_back(std::move(e));
    }
    m.validate();
    return m;
}

VarietyModel model_f1()
{
    using P = GradedRing::Product;
    // basis 1, H, E, pt
    std::vector<P> prod(16);
    for (int i = 0; i < 4; ++i) {
        prod[static_cast<std::size_t>(i)] = {{i, GQ(1)}};
        prod[static_cast<std::size_t>(i * 4)] = {{i, GQ(1)}};
    }
    prod[1 * 4 + 1] = {{3, GQ(1)}};
    prod[2 * 4 + 2] = {{3, GQ(-1)}};
    VarietyModel m;
    m.name = "F1";
    m.ring = GradedRing(2, {"1", "H", "E", "pt"}, {0, 1, 1, 2}, prod, {GQ(), GQ(), GQ(), GQ(1)});
    m.chern = {{0, GQ(1)}, {1, GQ(3)}, {2, GQ(-1)}, {3, GQ(4)}};
    m.validate();
    return m;
}

VarietyModel parse_model(const std::string &text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &) {
        // a bare name such as point or P2
        j = text;
    }
    try {
        return model_from_json(j);
    } catch (const json::exception &e) {
        throw ModelError(std::string("malformed model description: ") + e.what());
    }
}

} // namespace qjl
