#include "mellin/limits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mellin/series.hpp"
#include "mellin/specfun.hpp"

namespace mellin {

LimitSequenceSpec LimitSequenceSpec::fig1() { return LimitSequenceSpec{FigureId::fig1, "1"}; }

LimitSequenceSpec LimitSequenceSpec::fig2(std::string b) { return LimitSequenceSpec{FigureId::fig2, std::move(b)}; }

LimitSequenceSpec LimitSequenceSpec::parse(const std::string& name, const std::string& b) {
    if (name == "fig1") return fig1();
    if (name == "fig2") {
        PrecisionGuard g(30);
        Real v;
        try {
            v = Real::parse(b);
        } catch (const Error&) {
            throw ConfigError("b is not a number: " + b);
        }
        if (!(v.sign() > 0)) throw ConfigError("fig2 requires b > 0");
        return fig2(b);
    }
    throw ConfigError("unknown sequence '" + name + "' (expected fig1 or fig2)");
}

std::string LimitSequenceSpec::name() const { return id == FigureId::fig1 ? "fig1" : "fig2"; }

long LimitSequenceSpec::first_n() const { return id == FigureId::fig1 ? 2 : 1; }

Real LimitSequenceSpec::b_value() const { return Real::parse(b); }

Real LimitSequenceSpec::claimed_limit() const {
    if (id == FigureId::fig1) return Real(1) / (Real(2) - exp(Real(1)) * 2L);
    return Real(-1) / (exp(b_value()) * 2L);
}

int working_digits_for(long n, int target) {
    double lg = std::lgamma(static_cast<double>(n) + 1.0) / std::log(10.0);
    return target + static_cast<int>(std::ceil(std::max(0.0, lg))) + 15;
}

Real sequence_term(const LimitSequenceSpec& spec, long n) {
    if (n < spec.first_n())
        throw DomainError(spec.name() + " is undefined at n = " + std::to_string(n) +
                          (spec.id == FigureId::fig1 ? " (pole of zeta at 1)" : ""));
    Real sigma = Real(1) / Real(n);
    Real fact = gamma(Real(n + 1));
    if (spec.id == FigureId::fig1) {
        SeriesResult s = exp_family_sum(ExpKind::bose, Real(1), sigma);
        return s.value.re - zeta(Real(n)) * fact;
    }
    Real b = spec.b_value();
    SeriesResult s = omega(b, sigma);
    return s.value.re - fact / pow(b, n);
}

std::vector<SequencePoint> sequence_values(const LimitSequenceSpec& spec, const std::vector<long>& ns,
                                           const PrecisionContext& ctx, const LimitOptions& opt) {
    for (long n : ns) {
        if (n < spec.first_n())
            throw DomainError(spec.name() + " is undefined at n = " + std::to_string(n));
        int w = working_digits_for(n, ctx.target_digits) + (opt.certify ? 10 : 0);
        if (w > opt.max_digits)
            throw PrecisionCeiling("n = " + std::to_string(n) + " needs " + std::to_string(w) +
                                   " working digits, ceiling " + std::to_string(opt.max_digits));
    }
    std::vector<SequencePoint> out;
    out.reserve(ns.size());
    for (long n : ns) {
        PrecisionContext c = ctx.with_working(std::max(ctx.working_digits, working_digits_for(n, ctx.target_digits)));
        SequencePoint p;
        p.n = n;
        if (opt.certify) {
            Complex v = refine([&](const PrecisionContext&) { return Complex(sequence_term(spec, n)); }, c);
            p.value = v.re;
            p.working_digits = c.working_digits + 10;
        } else {
            PrecisionGuard g(c.working_digits);
            p.value = sequence_term(spec, n);
            p.working_digits = c.working_digits;
        }
        out.push_back(std::move(p));
    }
    return out;
}

TrendData LimitReport::trend() const {
    TrendData t;
    t.limit = limit;
    for (size_t i = 0; i < points.size(); ++i) t.points.push_back(TrendPoint{points[i].n, points[i].value, residuals[i]});
    return t;
}

LimitReport limit_report(const LimitSequenceSpec& spec, const std::vector<long>& ns, const PrecisionContext& ctx,
                         const LimitOptions& opt) {
    LimitReport r;
    r.spec = spec;
    r.points = sequence_values(spec, ns, ctx, opt);
    int top = ctx.working_digits;
    for (const auto& p : r.points) top = std::max(top, p.working_digits);
    PrecisionGuard g(top);
    r.limit = spec.claimed_limit();
    for (const auto& p : r.points) r.residuals.push_back(abs(p.value - r.limit));
    r.pass = trend_decreasing(r.trend());
    if (!r.pass) r.message = "TrendViolation: residuals are not strictly decreasing over the top half of the range";
    return r;
}

std::string figure_csv(const std::vector<LimitSequenceSpec>& specs, const std::vector<long>& ns,
                       const PrecisionContext& ctx, const LimitOptions& opt) {
    std::ostringstream os;
    os << "n,value,limit,residual,digits\n";
    int shown = ctx.target_digits;
    for (const auto& spec : specs) {
        if (ns.empty()) continue;
        auto pts = sequence_values(spec, ns, ctx, opt);
        for (const auto& p : pts) {
            PrecisionGuard g(p.working_digits);
            Real lim = spec.claimed_limit();
            os << p.n << ',' << to_string(p.value, shown) << ',' << to_string(lim, shown) << ','
               << to_string(abs(p.value - lim), 6) << ',' << p.working_digits << '\n';
        }
    }
    return os.str();
}

Real sbid_sum(const Real& b, long n) {
    if (n < 1) throw DomainError("SbId needs n >= 1");
    Real sum(0);
    Real pw(1);  // (-b)^j / j!
    for (long j = 0; j <= n; ++j) {
        if (j > 0) pw = pw * (-b) / Real(j);
        sum += zeta(Real(-j) / Real(n)) * pw;
    }
    return sum;
}

Real as2_ratio(const Real& b, long n) {
    Real nn(n);
    Real env = sqrt(const_pi() * nn * 2L) * pow(nn / (exp(Real(1)) * b), n);
    return omega(b, Real(1) / nn).value.re / env;
}

Real fig1_envelope_ratio(long n) {
    Real nn(n);
    Real env = sqrt(const_pi() * 2L) * pow(nn, nn + ldexp(Real(1), -1)) * exp(-nn);
    return exp_family_sum(ExpKind::bose, Real(1), Real(1) / nn).value.re / env;
}

Real aitken_estimate(const std::vector<SequencePoint>& pts) {
    if (pts.size() < 3) throw DomainError("Aitken needs three points");
    const Real& x0 = pts[pts.size() - 3].value;
    const Real& x1 = pts[pts.size() - 2].value;
    const Real& x2 = pts[pts.size() - 1].value;
    Real d2 = x2 - x1 * 2L + x0;
    if (d2.is_zero()) return x2;
    Real d = x2 - x1;
    return x2 - d * d / d2;
}

std::vector<long> parse_index_range(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    auto to_long = [&text](const std::string& s) {
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(s, &pos);
        } catch (const std::exception&) {
            throw ConfigError("bad index range '" + text + "'");
        }
        if (pos != s.size()) throw ConfigError("bad index range '" + text + "'");
        return v;
    };
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_long(item));
            continue;
        }
        std::string lo = item.substr(0, dots), rest = item.substr(dots + 2);
        long step = 1;
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            step = to_long(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        long a = to_long(lo), b = to_long(rest);
        if (step <= 0) throw ConfigError("range step must be positive in '" + text + "'");
        for (long v = a; v <= b; v += step) out.push_back(v);
    }
    return out;
}

}  // namespace mellin
