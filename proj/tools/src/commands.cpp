#include "qjl_cli/commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qjl/dmvv.hpp"
#include "qjl/errors.hpp"
#include "qjl/genus.hpp"
#include "qjl/quasi_jacobi.hpp"
#include "qjl/series_json.hpp"
#include "qjl/theta.hpp"
#include "qjl/transform_lab.hpp"
#include "qjl/variety.hpp"
#include "qjl_cli/expr.hpp"

namespace qjl::cli {

RunConfig RunConfig::from_environment()
{
    RunConfig cfg;
    if (const char *v = std::getenv("QJL_TRUNC_N"); v != nullptr && *v != '\0') {
        char *end = nullptr;
        long n = std::strtol(v, &end, 10);
        if (*end != '\0' || n <= 0) {
            throw ParseError(std::string("QJL_TRUNC_N must be a positive integer, got '") + v + "'");
        }
        cfg.trunc_N = n;
    }
    return cfg;
}

namespace {

using cplx = std::complex<double>;
using json = nlohmann::json;

// "@path" reads the file, anything else is taken literally.
std::string load_text(const std::string &arg)
{
    if (arg.empty() || arg[0] != '@') {
        return arg;
    }
    std::ifstream in(arg.substr(1));
    if (!in) {
        throw ParseError("cannot read " + arg.substr(1));
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        out.push_back(cur);
    }
    return out;
}

// "re" or "re,im" with rational parts.
GQ parse_gq(const std::string &s)
{
    auto parts = split(s, ',');
    if (parts.size() == 1) {
        return GQ(parse_rational(parts[0]));
    }
    if (parts.size() == 2) {
        return GQ(parse_rational(parts[0]), parse_rational(parts[1]));
    }
    throw ParseError("expected 're' or 're,im', got '" + s + "'");
}

cplx parse_complex(const std::string &s)
{
    auto parts = split(s, ',');
    try {
        if (parts.size() == 1) {
            return {std::stod(parts[0]), 0.0};
        }
        if (parts.size() == 2) {
            return {std::stod(parts[0]), std::stod(parts[1])};
        }
    } catch (const std::logic_error &) {
    }
    throw ParseError("expected 're' or 're,im', got '" + s + "'");
}

Gamma parse_gamma(const std::string &s)
{
    if (s == "S") {
        return Gamma::S();
    }
    if (s == "T") {
        return Gamma::T();
    }
    auto parts = split(s, ',');
    if (parts.size() != 4) {
        throw ParseError("gamma must be S, T or 'a,b,c,d'");
    }
    try {
        return {std::stol(parts[0]), std::stol(parts[1]), std::stol(parts[2]), std::stol(parts[3])};
    } catch (const std::logic_error &) {
        throw ParseError("gamma entries must be integers");
    }
}

// "i,j;i,j" or "" for the empty basis.
std::vector<AnomalyTerm> parse_basis(const std::string &s)
{
    std::vector<AnomalyTerm> out;
    for (const auto &item : split(s, ';')) {
        if (item.empty()) {
            continue;
        }
        auto ij = split(item, ',');
        if (ij.size() != 2) {
            throw ParseError("anomaly term must be 'i,j', got '" + item + "'");
        }
        try {
            out.emplace_back(std::stoi(ij[0]), std::stoi(ij[1]));
        } catch (const std::logic_error &) {
            throw ParseError("anomaly term must be 'i,j', got '" + item + "'");
        }
    }
    return out;
}

std::string y_text(const LaurentPoly &p, const char *var = "y")
{
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    for (long l = p.low(); l <= p.high(); ++l) {
        GQ c = p.coeff(l);
        if (c.is_zero()) {
            continue;
        }
        bool neg = c.is_real() && sgn(c.re()) < 0;
        if (!s.empty()) {
            s += neg ? " - " : " + ";
        } else if (neg) {
            s += "-";
        }
        GQ a = neg ? -c : c;
        std::string cs = a.is_real() ? to_string(a.re()) : "(" + a.str() + ")";
        if (l == 0) {
            s += cs;
        } else {
            if (!a.is_one()) {
                s += cs + "*";
            }
            s += var;
            if (l != 1) {
                s += "^" + std::to_string(l);
            }
        }
    }
    return s;
}

std::string qy_text(const QYPoly &p)
{
    std::string s;
    for (std::size_t m = 0; m < p.size(); ++m) {
        if (p[m].is_zero()) {
            continue;
        }
        if (!s.empty()) {
            s += " + ";
        }
        std::string c = y_text(p[m]);
        if (m == 0) {
            s += p[m].is_monomial() ? c : "(" + c + ")";
        } else {
            s += "(" + c + ")*q" + (m == 1 ? std::string() : "^" + std::to_string(m));
        }
    }
    return s.empty() ? "0" : s;
}

struct Context {
    RunConfig cfg;
    std::ostream &out;
    std::ostream &err;
    std::string output_name = "text";
    long N = 0; // 0: use the command's default
    long n_or(long fallback) const { return N > 0 ? N : fallback; }
};

void add_common(CLI::App *sub, Context &ctx)
{
    sub->add_option("-N,--trunc", ctx.N, "q-truncation order")->check(CLI::PositiveNumber);
    sub->add_option("--output", ctx.output_name, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

Output output_of(const Context &ctx)
{
    if (ctx.output_name == "json") {
        return Output::Json;
    }
    if (ctx.output_name == "csv") {
        return Output::Csv;
    }
    return Output::Text;
}

int int_check(bool ok)
{
    return ok ? kOk : kCheckFailed;
}

} // namespace

namespace {

struct Args {
    std::string expr, series, lhs, rhs, f, g, model, zeta, torsion, target, law = "invariant";
    std::string gamma = "S", basis, tau = "0,2", z = "0.3,0.1", basis_set = "default";
    std::string scale = "1", additive = "0", q_power = "0";
    long zeta_power = 0;
    int weight = std::numeric_limits<int>::min();
    int n = 1;
    long m = 1, cutoff = 2000, layers = 5, q_order = 0, y_range = 8;
    bool recognize = false, normalized = false, literal = false, swap = false;
};

QYSeries series_of_target(const Args &a, long N)
{
    if (a.target == "theta") {
        return theta(N);
    }
    return expand(parse_poly(a.target), N);
}

void print_series(Context &ctx, const QYSeries &s)
{
    if (output_of(ctx) == Output::Json) {
        ctx.out << to_json(s) << "\n";
    } else {
        ctx.out << s.str() << "\n";
    }
}

void print_series(Context &ctx, const QSeries &s)
{
    if (output_of(ctx) == Output::Json) {
        ctx.out << to_json(s) << "\n";
    } else {
        ctx.out << s.str() << "\n";
    }
}

int cmd_genus(Context &ctx, const Args &a, bool pair)
{
    VarietyModel model = parse_model(load_text(a.model));
    const long N = ctx.n_or(ctx.cfg.trunc_N);
    if (a.recognize) {
        QYSeries s = normalized_elliptic_genus(model, N, pair);
        GeneratorPoly p = recognize(s, default_basis(), model.dim());
        if (output_of(ctx) == Output::Json) {
            Depth d = depth(p);
            ctx.out << json{{"model", model.name}, {"weight", model.dim()}, {"poly", p.str()}, {"depth", {d.s, d.t}}}
                           .dump()
                    << "\n";
        } else {
            ctx.out << p.str() << "\n";
        }
        return kOk;
    }
    print_series(ctx, a.normalized ? normalized_elliptic_genus(model, N, pair) : elliptic_genus(model, N, pair));
    return kOk;
}

int cmd_chi_y(Context &ctx, const Args &a)
{
    VarietyModel model = parse_model(load_text(a.model));
    LaurentPoly raw = q0_layer(model);
    LaurentPoly chi = chi_y(model);
    GQ at_minus_one = chi.evaluate(GQ(-1));
    GQ top = model.euler_number();
    if (output_of(ctx) == Output::Json) {
        ctx.out << json{{"model", model.name},
                        {"chi_y", y_text(chi)},
                        {"q0_layer", y_text(raw)},
                        {"chi_minus_1", at_minus_one.str()},
                        {"c_top", top.str()}}
                       .dump()
                << "\n";
    } else {
        ctx.out << "chi_y: " << y_text(chi) << "\n"
                << "q^0 layer of zeta^d Ell: " << y_text(raw) << "\n"
                << "chi_{-1}: " << at_minus_one.str() << "\n"
                << "c_top: " << top.str() << "\n";
    }
    return int_check(at_minus_one == top);
}

int cmd_ochanine(Context &ctx, const Args &a)
{
    VarietyModel model = parse_model(load_text(a.model));
    const long N = ctx.n_or(ctx.cfg.trunc_N);
    QSeries direct = ochanine_direct(model, N);
    QSeries via = ochanine_via_specialization(model, N);
    auto diff = first_difference(direct, via);
    if (output_of(ctx) == Output::Json) {
        ctx.out << json{{"direct", json::parse(to_json(direct))},
                        {"via_specialization", json::parse(to_json(via))},
                        {"dimension_factor", ochanine_dimension_factor(model.dim()).str()},
                        {"equal", !diff.has_value()}}
                       .dump()
                << "\n";
    } else {
        ctx.out << "direct: " << direct.str() << "\n"
                << "via z=1/2: " << via.str() << "\n"
                << "dimension factor: " << ochanine_dimension_factor(model.dim()).str() << "\n";
        if (diff) {
            ctx.out << "first difference at q^" << to_string(*diff) << "\n";
        } else {
            ctx.out << "equal\n";
        }
    }
    return int_check(!diff);
}

int cmd_specialize(Context &ctx, const Args &a)
{
    const long N = ctx.n_or(ctx.cfg.trunc_N);
    QYSeries s;
    if (!a.model.empty()) {
        s = elliptic_genus(parse_model(load_text(a.model)), N);
    } else if (!a.series.empty()) {
        s = qy_series_from_json(load_text(a.series));
    } else if (!a.expr.empty()) {
        s = expand(parse_poly(a.expr), N);
    } else {
        throw ParseError("one of --model, --series, --expr is required");
    }
    if (!a.torsion.empty()) {
        auto parts = split(a.torsion, ',');
        if (parts.size() != 2) {
            throw ParseError("--torsion expects 'alpha,beta'");
        }
        print_series(ctx, s.specialize_torsion(std::stol(parts[0]), std::stol(parts[1])));
    } else if (!a.zeta.empty()) {
        print_series(ctx, s.specialize_zeta(parse_gq(a.zeta)));
    } else {
        throw ParseError("one of --zeta, --torsion is required");
    }
    return kOk;
}

int cmd_shift(Context &ctx, const Args &a)
{
    const long N = ctx.n_or(ctx.cfg.identity_N);
    QYSeries s = series_of_target(a, N);
    ShiftExpectation law;
    if (a.law == "theta") {
        law = theta_shift_law(a.m);
    } else if (a.law == "e1") {
        law = ebar1_shift_law(a.m);
    } else if (a.law == "invariant") {
        law = invariant_shift_law();
    } else if (a.law == "custom") {
        law.scale = parse_gq(a.scale);
        law.zeta_power = a.zeta_power;
        law.q_power = parse_rational(a.q_power);
        law.additive = parse_gq(a.additive);
    } else {
        throw ParseError("--law must be theta, e1, invariant or custom");
    }
    ShiftReport r = shift_check(s, a.m, law);
    if (output_of(ctx) == Output::Json) {
        json j{{"equal", r.equal}, {"checked_to", to_string(r.checked_to)}, {"note", r.note}};
        if (r.first_mismatch) {
            j["first_mismatch"] = to_string(*r.first_mismatch);
        }
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << (r.equal ? "equal" : "differs") << ": " << r.note;
        if (r.first_mismatch) {
            ctx.out << ", first mismatch at q^" << to_string(*r.first_mismatch);
        }
        ctx.out << "\n";
    }
    return int_check(r.equal);
}

int cmd_modular(Context &ctx, const Args &a)
{
    const long N = ctx.n_or(40);
    QYSeries s = series_of_target(a, N);
    const int k = a.weight == std::numeric_limits<int>::min() ? s.weight() : a.weight;
    AnomalyFit fit = modular_check(s, k, parse_gamma(a.gamma), default_sample_points(), parse_basis(a.basis));
    if (output_of(ctx) == Output::Json) {
        ctx.out << fit.to_json() << "\n";
    } else {
        ctx.out << "gamma " << fit.gamma.str() << ", weight " << fit.weight << ", residual " << fit.residual
                << ", condition " << fit.condition << "\n";
        for (std::size_t i = 0; i < fit.basis.size(); ++i) {
            ctx.out << "  (cz/(ct+d))^" << fit.basis[i].first << " (c/(ct+d))^" << fit.basis[i].second << ": "
                    << fit.coefficients[i].real() << (fit.coefficients[i].imag() < 0 ? " - " : " + ")
                    << std::fabs(fit.coefficients[i].imag()) << "i\n";
        }
    }
    return int_check(fit.residual < ctx.cfg.float_tol);
}

int cmd_lattice(Context &ctx, const Args &a)
{
    const long N = ctx.n_or(40);
    const cplx tau = parse_complex(a.tau), z = parse_complex(a.z);
    cplx brute = brute_lattice_sum({a.n, a.cutoff, a.cutoff, a.swap}, z, tau);
    ComplexEval ev = ebar(a.n, N).eval_complex(tau, z);
    cplx series = ev.value * std::pow(cplx(0, 2 * M_PI), a.n);
    double diff = std::abs(brute - series);
    if (output_of(ctx) == Output::Json) {
        ctx.out << json{{"n", a.n},
                        {"lattice", {brute.real(), brute.imag()}},
                        {"series", {series.real(), series.imag()}},
                        {"difference", diff}}
                       .dump()
                << "\n";
    } else {
        ctx.out.precision(15);
        ctx.out << "lattice sum: " << brute << "\nseries:      " << series << "\ndifference:  " << diff << "\n";
    }
    return int_check(diff < ctx.cfg.float_tol);
}

DmvvTable table_for(const VarietyModel &model, long need_m)
{
    return extract_cml(elliptic_genus(model, need_m), model.dim() % 2);
}

int cmd_dmvv(Context &ctx, const Args &a)
{
    VarietyModel model = parse_model(load_text(a.model));
    const long P = a.layers, M = a.q_order;
    DmvvTable t = table_for(model, std::max(ctx.n_or(ctx.cfg.trunc_N), P * M + 1));
    TripleSeries ts = borcherds_product(t, P, M, a.y_range);
    if (output_of(ctx) == Output::Csv) {
        ctx.out << ts.to_csv();
        return kOk;
    }
    if (output_of(ctx) == Output::Json) {
        json layers = json::array();
        for (long n = 0; n <= P; ++n) {
            layers.push_back(qy_text(ts.layers[static_cast<std::size_t>(n)]));
        }
        ctx.out << json{{"model", model.name}, {"normalizer", t.normalizer}, {"layers", layers}}.dump() << "\n";
        return kOk;
    }
    for (long n = 0; n <= P; ++n) {
        ctx.out << "p^" << n << ": " << qy_text(ts.layers[static_cast<std::size_t>(n)]) << "\n";
    }
    return kOk;
}

int cmd_sym_genus(Context &ctx, const Args &a)
{
    VarietyModel model = parse_model(load_text(a.model));
    const long M = a.q_order;
    DmvvTable t = table_for(model, std::max(ctx.n_or(ctx.cfg.trunc_N), a.n * M + 1));
    QYPoly layer = sym_product_genus(t, a.n, M, a.y_range);
    if (output_of(ctx) == Output::Csv) {
        ctx.out << "m,l,value\n";
        for (std::size_t m = 0; m < layer.size(); ++m) {
            const LaurentPoly &p = layer[m];
            for (long l = p.low(); !p.is_zero() && l <= p.high(); ++l) {
                if (!p.coeff(l).is_zero()) {
                    ctx.out << m << "," << l << "," << p.coeff(l).str() << "\n";
                }
            }
        }
    } else {
        ctx.out << qy_text(layer) << "\n";
    }
    return kOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    Context ctx{RunConfig{}, out, err};
    try {
        ctx.cfg = RunConfig::from_environment();
    } catch (const Error &e) {
        err << e.what() << "\n";
        return kUsage;
    }
    Args a;
    CLI::App app{"Exact series engine for quasi-Jacobi forms and elliptic genera", "qjl"};
    app.require_subcommand(1);
    std::map<CLI::App *, std::function<int()>> handlers;
    auto sub = [&](const std::string &name, const std::string &help, std::function<int()> fn) {
        CLI::App *s = app.add_subcommand(name, help);
        add_common(s, ctx);
        handlers[s] = std::move(fn);
        return s;
    };

    auto *expand_cmd = sub("expand", "q,zeta-expansion of a polynomial in the generators", [&] {
        print_series(ctx, expand(parse_poly(a.expr), ctx.n_or(ctx.cfg.trunc_N)));
        return kOk;
    });
    expand_cmd->add_option("--expr", a.expr, "polynomial, e.g. \"9/2*E1^2 - 3/2*P\"")->required();

    auto *rec = sub("recognize", "write a JSON series as a polynomial in the generators", [&] {
        QYSeries s = qy_series_from_json(load_text(a.series));
        const int w = a.weight == std::numeric_limits<int>::min() ? s.weight() : a.weight;
        GeneratorPoly p = recognize(s, a.basis_set == "all" ? all_symbols() : default_basis(), w);
        out << p.str() << "\n";
        return kOk;
    });
    rec->add_option("--series", a.series, "series JSON, or @file")->required();
    rec->add_option("--weight", a.weight, "weight (default: the series tag)");
    rec->add_option("--basis", a.basis_set, "default or all")->check(CLI::IsMember({"default", "all"}));

    auto *dep = sub("depth", "(E1-degree, e2-degree) of a polynomial", [&] {
        Depth d = depth(parse_poly(a.expr));
        out << "(" << d.s << "," << d.t << ")\n";
        return kOk;
    });
    dep->add_option("--expr", a.expr)->required();

    auto *ident = sub("identity", "exact comparison of two polynomials as series", [&] {
        IdentityReport r = identity_check(parse_poly(a.lhs), parse_poly(a.rhs), ctx.n_or(ctx.cfg.identity_N));
        out << r.str() << "\n";
        return int_check(r.equal);
    });
    ident->add_option("--lhs", a.lhs)->required();
    ident->add_option("--rhs", a.rhs)->required();

    auto *rc = sub("rc-bracket", "Rankin-Cohen bracket of two polynomials", [&] {
        GeneratorPoly f = parse_poly(a.f), g = parse_poly(a.g);
        const int k = f.weight(), l = g.weight();
        GeneratorPoly r = a.literal ? rc_bracket_literal(f, k, g, l)
                                    : (a.n == 1 ? rc_bracket(f, k, g, l) : rc_bracket_n(f, k, g, l, a.n));
        Depth d = depth(r);
        const int w = r.is_zero() ? k + l + 2 * (a.literal ? 1 : a.n) : r.weight();
        if (output_of(ctx) == Output::Json) {
            out << json{{"bracket", r.str()}, {"weight", w}, {"depth", {d.s, d.t}}}.dump() << "\n";
        } else {
            out << r.str() << "\nweight " << w << ", depth (" << d.s << "," << d.t << ")\n";
        }
        return kOk;
    });
    rc->add_option("--f", a.f)->required();
    rc->add_option("--g", a.g)->required();
    rc->add_option("--n", a.n, "order")->check(CLI::NonNegativeNumber);
    rc->add_flag("--literal", a.literal, "k D(f) g - l D(g) f instead");

    for (bool pair : {false, true}) {
        auto *gs = sub(pair ? "pair-genus" : "genus",
                       pair ? "elliptic genus of a model with its divisors" : "elliptic genus of a model",
                       [&, pair] { return cmd_genus(ctx, a, pair); });
        gs->add_option("--model", a.model, "name, JSON, or @file")->required();
        gs->add_flag("--recognize", a.recognize, "normalize and write in the generators");
        gs->add_flag("--normalized", a.normalized, "multiply by (theta'(0)/theta(z))^dim");
    }

    sub("chi-y", "chi_y genus from the q^0 layer", [&] { return cmd_chi_y(ctx, a); })
        ->add_option("--model", a.model)
        ->required();
    sub("ochanine", "Ochanine genus, directly and from z = 1/2", [&] { return cmd_ochanine(ctx, a); })
        ->add_option("--model", a.model)
        ->required();

    auto *spec = sub("specialize", "fix zeta, or z = (alpha tau + beta)/2", [&] { return cmd_specialize(ctx, a); });
    spec->add_option("--model", a.model, "elliptic genus of this model");
    spec->add_option("--series", a.series, "series JSON, or @file");
    spec->add_option("--expr", a.expr, "polynomial in the generators");
    spec->add_option("--zeta", a.zeta, "zeta value 're' or 're,im'");
    spec->add_option("--torsion", a.torsion, "'alpha,beta'");

    auto *sh = sub("shift-check", "exact check of z -> z + m tau", [&] { return cmd_shift(ctx, a); });
    sh->add_option("--target", a.target, "polynomial in the generators, or theta")->required();
    sh->add_option("--m", a.m);
    sh->add_option("--law", a.law, "theta, e1, invariant or custom");
    sh->add_option("--scale", a.scale, "custom law: scale 're[,im]'");
    sh->add_option("--zeta-power", a.zeta_power, "custom law: power of zeta");
    sh->add_option("--q-power", a.q_power, "custom law: power of q");
    sh->add_option("--additive", a.additive, "custom law: additive constant");

    auto *mc = sub("modular-check", "anomaly fit under an SL2(Z) element (N defaults to 40)",
                   [&] { return cmd_modular(ctx, a); });
    mc->add_option("--target", a.target, "polynomial in the generators")->required();
    mc->add_option("--gamma", a.gamma, "S, T or 'a,b,c,d'");
    mc->add_option("--basis", a.basis, "anomaly terms 'i,j;i,j' for (cz/(ct+d))^i (c/(ct+d))^j");
    mc->add_option("--weight", a.weight, "weight (default: the series tag)");

    auto *lo = sub("lattice-oracle", "brute-force lattice sum against the series (N defaults to 40)",
                   [&] { return cmd_lattice(ctx, a); });
    lo->add_option("--n", a.n)->check(CLI::PositiveNumber);
    lo->add_option("--tau", a.tau, "'re,im'");
    lo->add_option("--z", a.z, "'re,im'");
    lo->add_option("--cutoff", a.cutoff)->check(CLI::PositiveNumber);
    lo->add_flag("--swap", a.swap, "inner sum over a, outer over b");

    auto *dm = sub("dmvv", "symmetric-product generating series", [&] { return cmd_dmvv(ctx, a); });
    dm->add_option("--model", a.model)->required();
    dm->add_option("--layers", a.layers, "highest power of p")->check(CLI::NonNegativeNumber);
    dm->add_option("--q-order", a.q_order, "highest power of q")->check(CLI::NonNegativeNumber);
    dm->add_option("--y-range", a.y_range, "|l| bound for CSV output")->check(CLI::NonNegativeNumber);

    auto *sg = sub("sym-genus", "p^n layer of the symmetric-product series", [&] { return cmd_sym_genus(ctx, a); });
    sg->add_option("--model", a.model)->required();
    sg->add_option("--n", a.n)->check(CLI::NonNegativeNumber);
    sg->add_option("--q-order", a.q_order)->check(CLI::NonNegativeNumber);
    sg->add_option("--y-range", a.y_range)->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    for (auto &[s, fn] : handlers) {
        if (!s->parsed()) {
            continue;
        }
        try {
            return fn();
        } catch (const PrecisionError &e) {
            err << e.what() << "\n";
            return kPrecision;
        } catch (const ParseError &e) {
            err << e.what() << "\n";
            return kUsage;
        } catch (const ModelError &e) {
            err << e.what() << "\n";
            return kUsage;
        } catch (const Error &e) {
            err << e.what() << "\n";
            return kCheckFailed;
        } catch (const std::invalid_argument &e) {
            err << "invalid argument: " << e.what() << "\n";
            return kUsage;
        }
    }
    return kUsage;
}

} // namespace qjl::cli
