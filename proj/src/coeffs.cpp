#include "nlscanon/coeffs.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nlscanon/errors.hpp"

namespace nlscanon::coeffs {

CoeffFn CoeffFn::constant(double v) {
    return {[v](double) { return v; }, [](double) { return 0.0; }};
}

CoeffFn CoeffFn::analytic(std::function<double(double)> value,
                          std::function<double(double)> deriv) {
    return {std::move(value), std::move(deriv)};
}

CoeffFn CoeffFn::numeric(std::function<double(double)> value, double step) {
    auto v = value;
    return {std::move(value), [v, step](double t) {
                return (v(t + step) - v(t - step)) / (2.0 * step);
            }};
}

namespace {

void check_finite(double v, const char* which, double t) {
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "coefficient " << which << " evaluated non-finite at t = " << t;
        throw EvaluationError(os.str());
    }
}

} // namespace

CoeffValues eval_coeffs(const CoefficientSet& set, double t) {
    if (!std::isfinite(t))
        throw EvaluationError("coefficient evaluation requested at non-finite t");
    CoeffValues v;
    v.a = set.a(t);
    check_finite(v.a, "a", t);
    v.b = set.b(t);
    check_finite(v.b, "b", t);
    v.c = set.c(t);
    check_finite(v.c, "c", t);
    v.d = set.d(t);
    check_finite(v.d, "d", t);
    v.f = set.f(t);
    check_finite(v.f, "f", t);
    v.g = set.g(t);
    check_finite(v.g, "g", t);
    v.da = set.a.deriv(t);
    check_finite(v.da, "a'", t);
    v.dd = set.d.deriv(t);
    check_finite(v.dd, "d'", t);
    return v;
}

TauSigma tau_sigma(const CoefficientSet& set, double t) {
    const CoeffValues v = eval_coeffs(set, t);
    if (v.a == 0.0) {
        std::ostringstream os;
        os << "a(t) = 0 at t = " << t << "; tau is singular";
        throw SingularCoefficientError(os.str());
    }
    TauSigma ts;
    ts.tau = v.da / v.a - 2.0 * v.c + 4.0 * v.d;
    ts.sigma = v.a * v.b - v.c * v.d + v.d * v.d +
               v.d * v.da / (2.0 * v.a) - 0.5 * v.dd;
    return ts;
}

CoefficientSet free_particle(double h0) {
    CoefficientSet s;
    s.a = CoeffFn::constant(1.0);
    s.b = CoeffFn::constant(0.0);
    s.c = CoeffFn::constant(0.0);
    s.d = CoeffFn::constant(0.0);
    s.f = CoeffFn::constant(0.0);
    s.g = CoeffFn::constant(0.0);
    s.h0 = h0;
    s.preset = Preset::free_particle;
    s.name = "free_particle";
    return s;
}

CoefficientSet harmonic(double omega, double h0) {
    if (omega == 0.0)
        throw DomainError("harmonic preset requires omega != 0");
    CoefficientSet s = free_particle(h0);
    s.b = CoeffFn::constant(omega * omega / 4.0);
    s.preset = Preset::harmonic;
    s.name = "harmonic";
    s.p1 = omega;
    return s;
}

CoefficientSet exponential(double k, double h0) {
    if (k == 0.0)
        throw DomainError("exponential preset requires k != 0");
    CoefficientSet s = free_particle(h0);
    s.b = CoeffFn::constant(-k * k);
    s.d = CoeffFn::constant(-k);
    s.preset = Preset::exponential;
    s.name = "exponential";
    s.p1 = k;
    return s;
}

CoefficientSet plasma(double k, double h0) {
    if (k == 0.0)
        throw DomainError("plasma preset requires k != 0");
    CoefficientSet s = free_particle(h0);
    s.f = CoeffFn::constant(2.0 * k);
    s.preset = Preset::plasma;
    s.name = "plasma";
    s.p1 = k;
    return s;
}

CoefficientSet example3(double alpha0, double beta0, double gamma0, double g0,
                        double h0) {
    CoefficientSet s = free_particle(h0);
    s.f = CoeffFn::analytic(
        [g0, beta0, alpha0](double t) {
            const double q = 1.0 + 4.0 * alpha0 * t;
            return -g0 * beta0 * beta0 * beta0 / (q * q * q);
        },
        [g0, beta0, alpha0](double t) {
            const double q = 1.0 + 4.0 * alpha0 * t;
            return 12.0 * alpha0 * g0 * beta0 * beta0 * beta0 / (q * q * q * q);
        });
    s.preset = Preset::example3;
    s.name = "example3";
    s.p1 = alpha0;
    s.p2 = beta0;
    s.p3 = gamma0;
    s.p4 = g0;
    return s;
}

namespace {

CoeffFn term_sum_from_json(const nlohmann::json& spec, const std::string& key,
                           double default_constant) {
    if (!spec.contains(key))
        return CoeffFn::constant(default_constant);
    const auto& terms = spec.at(key);
    if (!terms.is_array())
        throw EvaluationError("coefficient '" + key + "' must be a term array");

    struct Term {
        int kind; // 0 poly, 1 sin, 2 cos, 3 exp
        double coef, p;
    };
    std::vector<Term> parsed;
    for (const auto& t : terms) {
        const std::string type = t.at("type").get<std::string>();
        Term term{};
        term.coef = t.at("coef").get<double>();
        if (type == "poly") {
            term.kind = 0;
            term.p = t.value("n", 0.0);
        } else if (type == "sin") {
            term.kind = 1;
            term.p = t.at("w").get<double>();
        } else if (type == "cos") {
            term.kind = 2;
            term.p = t.at("w").get<double>();
        } else if (type == "exp") {
            term.kind = 3;
            term.p = t.at("r").get<double>();
        } else {
            throw EvaluationError("unknown coefficient term type '" + type + "'");
        }
        parsed.push_back(term);
    }
    auto value = [parsed](double t) {
        double s = 0.0;
        for (const auto& q : parsed) {
            switch (q.kind) {
            case 0: s += q.coef * std::pow(t, q.p); break;
            case 1: s += q.coef * std::sin(q.p * t); break;
            case 2: s += q.coef * std::cos(q.p * t); break;
            default: s += q.coef * std::exp(q.p * t); break;
            }
        }
        return s;
    };
    auto deriv = [parsed](double t) {
        double s = 0.0;
        for (const auto& q : parsed) {
            switch (q.kind) {
            case 0:
                if (q.p != 0.0)
                    s += q.coef * q.p * std::pow(t, q.p - 1.0);
                break;
            case 1: s += q.coef * q.p * std::cos(q.p * t); break;
            case 2: s += -q.coef * q.p * std::sin(q.p * t); break;
            default: s += q.coef * q.p * std::exp(q.p * t); break;
            }
        }
        return s;
    };
    return CoeffFn::analytic(value, deriv);
}

} // namespace

CoefficientSet from_json_text(const std::string& text) {
    nlohmann::json spec;
    try {
        spec = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw EvaluationError(std::string("coefficient JSON parse error: ") +
                              e.what());
    }
    CoefficientSet s;
    s.a = term_sum_from_json(spec, "a", 1.0);
    s.b = term_sum_from_json(spec, "b", 0.0);
    s.c = term_sum_from_json(spec, "c", 0.0);
    s.d = term_sum_from_json(spec, "d", 0.0);
    s.f = term_sum_from_json(spec, "f", 0.0);
    s.g = term_sum_from_json(spec, "g", 0.0);
    s.h0 = spec.value("h0", -2.0);
    s.preset = Preset::custom;
    s.name = spec.value("name", std::string("custom"));
    if (s.a(0.0) == 0.0)
        throw SingularCoefficientError("custom coefficients require a(0) != 0");
    return s;
}

CoefficientSet from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw EvaluationError("cannot open coefficient file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

} // namespace nlscanon::coeffs
