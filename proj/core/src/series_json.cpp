#include "qjl/series_json.hpp"

#include <json.hpp>

#include "qjl/errors.hpp"

namespace qjl {

using nlohmann::json;

namespace {

json poly_to_json(const LaurentPoly &p)
{
    json arr = json::array();
    for (long e = p.low(); e <= p.high() && !p.is_zero(); ++e) {
        GQ c = p.coeff(e);
        if (!c.is_zero()) {
            arr.push_back(json::array({e, to_string(c.re()), to_string(c.im())}));
        }
    }
    return arr;
}

LaurentPoly poly_from_json(const json &arr)
{
    if (!arr.is_array()) {
        throw ParseError("polynomial must be an array of [exp, re, im]");
    }
    LaurentPoly p;
    for (const auto &t : arr) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_string() || !t[2].is_string()) {
            throw ParseError("polynomial term must be [exp, \"re\", \"im\"]");
        }
        p += LaurentPoly::monomial(t[0].get<long>(),
                                   GQ(parse_rational(t[1].get<std::string>()), parse_rational(t[2].get<std::string>())));
    }
    return p;
}

json parse_or_throw(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

template <class T> T field(const json &j, const char *key)
{
    if (!j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
    }
}

} // namespace

std::string to_json(const QYSeries &s, int indent)
{
    json terms = json::array();
    for (long n = 0; n < s.trunc(); ++n) {
        const ZetaRat &c = s.coeff(n);
        if (!c.is_zero()) {
            terms.push_back({{"n", n}, {"coeff", {{"num", poly_to_json(c.num())}, {"den", poly_to_json(c.den())}}}});
        }
    }
    json j = {{"weight", s.weight()}, {"q_offset", to_string(s.q_offset())}, {"trunc", s.trunc()}, {"terms", terms}};
    return j.dump(indent);
}

QYSeries qy_series_from_json(const std::string &text)
{
    json j = parse_or_throw(text);
    int weight = field<int>(j, "weight");
    Rational offset = parse_rational(field<std::string>(j, "q_offset"));
    long trunc = field<long>(j, "trunc");
    if (trunc < 0) {
        throw ParseError("negative trunc");
    }
    QYSeries s = QYSeries::zero(trunc, weight, offset);
    for (const auto &t : field<json>(j, "terms")) {
        long n = field<long>(t, "n");
        if (n < 0 || n >= trunc) {
            throw ParseError("term index " + std::to_string(n) + " outside [0, trunc)");
        }
        json c = field<json>(t, "coeff");
        LaurentPoly den = c.contains("den") ? poly_from_json(c["den"]) : LaurentPoly(GQ(1));
        if (den.is_zero()) {
            throw ParseError("zero denominator");
        }
        s.set_coeff(n, ZetaRat(poly_from_json(field<json>(c, "num")), den));
    }
    return s;
}

std::string to_json(const QSeries &s, int indent)
{
    json terms = json::array();
    for (long n = 0; n < s.trunc(); ++n) {
        const GQ &c = s.coeffs()[static_cast<std::size_t>(n)];
        if (!c.is_zero()) {
            terms.push_back({{"n", n}, {"re", to_string(c.re())}, {"im", to_string(c.im())}});
        }
    }
    json j = {{"weight", s.weight()}, {"q_offset", to_string(s.offset())}, {"step", s.step()},
              {"trunc", s.trunc()}, {"terms", terms}};
    return j.dump(indent);
}

QSeries q_series_from_json(const std::string &text)
{
    json j = parse_or_throw(text);
    long trunc = field<long>(j, "trunc");
    long step = field<long>(j, "step");
    if (trunc < 0 || step < 1) {
        throw ParseError("bad trunc or step");
    }
    std::vector<GQ> v(static_cast<std::size_t>(trunc));
    for (const auto &t : field<json>(j, "terms")) {
        long n = field<long>(t, "n");
        if (n < 0 || n >= trunc) {
            throw ParseError("term index outside [0, trunc)");
        }
        v[static_cast<std::size_t>(n)] =
            GQ(parse_rational(field<std::string>(t, "re")), parse_rational(field<std::string>(t, "im")));
    }
    return QSeries(parse_rational(field<std::string>(j, "q_offset")), step, std::move(v), field<int>(j, "weight"));
}

} // namespace qjl
