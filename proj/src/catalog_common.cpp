#include "catalog_common.hpp"

#include <algorithm>
#include <cmath>

#include "mellin/limits.hpp"

namespace mellin::cat {

namespace {
constexpr double kLn10 = 2.302585092994046;
}  // namespace

Real eps_here() { return ldexp(Real(1), -current_bits()); }

IdentityRecord make(std::string id, std::string group, std::string anchor, std::string lhs_text,
                    std::string rhs_text, std::vector<ParamSpec> params, Eval lhs, Eval rhs) {
    IdentityRecord r;
    r.id = std::move(id);
    r.group = std::move(group);
    r.anchor = std::move(anchor);
    r.lhs_text = std::move(lhs_text);
    r.rhs_text = std::move(rhs_text);
    r.params = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

IdentityRecord make_trend(std::string id, std::string group, std::string anchor, std::string lhs_text,
                          std::string rhs_text, std::vector<ParamSpec> params,
                          std::function<TrendData(const EvalContext&)> trend) {
    IdentityRecord r = make(std::move(id), std::move(group), std::move(anchor), std::move(lhs_text),
                            std::move(rhs_text), std::move(params), nullptr, nullptr);
    r.kind = RecordKind::trend;
    r.trend = std::move(trend);
    return r;
}

void require(bool ok, const std::string& why) {
    if (!ok) throw InvalidParams(why);
}

Real pi() { return const_pi(); }
Real euler() { return const_euler(); }
Real two_pi() { return const_pi() * 2L; }
Real half() { return ldexp(Real(1), -1); }
Real frac(long p, long q) { return Real(p) / Real(q); }

double zeta_growth(double sigma) {
    if (sigma >= 1.0) return 0.25;
    if (sigma >= 0.0) return (1.0 - sigma) / 2.0 + 0.25;
    return 0.5 - sigma + 0.25;
}

namespace {

QuadratureOptions options_for(const EvalContext& e) {
    QuadratureOptions o;
    o.parallel = e.parallel;
    return o;
}

ContourSpec spec_of(const Real& c, const Integrand& f, const DecayModel& d, bool symmetric) {
    ContourSpec s;
    s.c = c;
    s.integrand = f;
    s.decay = d;
    s.symmetric = symmetric;
    s.part = symmetric ? Part::real_only : Part::full;
    return s;
}

}  // namespace

Estimate line(const EvalContext& e, const Real& c, const Integrand& f, const DecayModel& d) {
    auto r = integrate_vertical(spec_of(c, f, d, false), e.ctx, options_for(e));
    return Estimate(r.value, r.error_estimate);
}

Estimate line_re(const EvalContext& e, const Real& c, const Integrand& f, const DecayModel& d) {
    auto r = integrate_vertical(spec_of(c, f, d, true), e.ctx, options_for(e));
    return Estimate(r.value, r.error_estimate);
}

Estimate line_re_pole(const EvalContext& e, const Real& c, const Integrand& f, const DecayModel& d) {
    auto r = half_residue_integrate(spec_of(c, f, d, true), Real(0), Complex(0), e.ctx, options_for(e));
    return Estimate(r.value, r.error_estimate);
}

Estimate half_axis(const EvalContext& e, const std::function<Real(const Real&)>& g, double rate, double power) {
    ContourSpec s = spec_of(Real(0), [g](const Complex& z) { return Complex(g(z.im)); },
                            DecayModel::custom(rate, power), true);
    auto r = integrate_vertical(s, e.ctx, options_for(e));
    // integrate_vertical returns (1/π)∫_0^V
    Real p = const_pi();
    return Estimate(r.value * p, r.error_estimate * p);
}

Estimate mellin_half_line(const EvalContext& e, const std::function<Real(const Real&)>& h, double left_power) {
    if (!(left_power > 0.0)) throw DomainError("integrand is not integrable at 0");
    auto k = [&h](const Real& u) {
        Real x = exp(u);
        return h(x) * x;
    };
    double log_tol = -(e.ctx.working_digits + 2) * kLn10;
    auto ln_abs = [](const Real& v) { return v.is_zero() ? -INFINITY : v.log10_abs() * kLn10; };
    // left end from the power law, right end by scanning the fast decay
    double u0 = -2.0;
    double lnC = ln_abs(k(Real(u0))) - left_power * u0;
    double uL = std::floor((log_tol - lnC) / left_power) - 1.0;
    double uR = 0.0;
    int below = 0;
    for (double u = 0.0; u < 60.0; u += 0.5) {
        if (ln_abs(k(Real(u))) < log_tol - 3.0) {
            if (++below == 2) {
                uR = u;
                break;
            }
        } else {
            below = 0;
        }
    }
    if (uR == 0.0) throw ConvergenceError("integrand does not decay on the half line");
    auto r = integrate_interval([&k](const Real& u) { return Complex(k(u)); }, Real(uL), Real(uR), e.ctx, 2.0,
                                e.parallel);
    Real left_tail = abs(k(Real(uL))) / Real(left_power);
    return Estimate(r.value, r.error_estimate + left_tail + tenth_power(e.ctx.working_digits));
}

Estimate interval(const EvalContext& e, const std::function<Real(const Real&)>& g, const Real& a, const Real& b) {
    auto r = integrate_interval([&g](const Real& v) { return Complex(g(v)); }, a, b, e.ctx, 1.0, e.parallel);
    return Estimate(r.value, r.error_estimate);
}

Estimate bose(const Real& x, const Real& sigma) { return Estimate::of(exp_family_sum(ExpKind::bose, x, sigma)); }
Estimate fermi(const Real& x, const Real& sigma) { return Estimate::of(exp_family_sum(ExpKind::fermi, x, sigma)); }
Estimate omega_sum(const Real& x, const Real& sigma) { return Estimate::of(omega(x, sigma)); }

Estimate series(const std::function<Complex(long)>& term, long k0, const std::function<Real(long)>& tail) {
    return Estimate::of(sum_with_bound(term, k0, tail));
}

Estimate geometric(const std::function<Complex(long)>& term, long k0, double r) {
    if (!(r < 1.0)) throw ConvergenceError("ratio bound must be below 1");
    Real eps = eps_here();
    Real one(1);
    Real factor = Real(r) / Real(1.0 - r);
    Complex sum(0);
    for (long k = k0; k < k0 + 10000000; ++k) {
        Complex t = term(k);
        sum += t;
        Real bound = abs(t) * factor;
        if (bound < eps * max(one, abs(sum))) return Estimate(sum, bound + eps * max(one, abs(sum)));
    }
    throw ConvergenceError("geometric series did not converge");
}

Real coth_minus_inv(const Real& y) {
    if (abs(y) > half()) return cosh(y) / sinh(y) - Real(1) / y;
    // Σ_{n≥1} 2^{2n} B_{2n} y^{2n-1}/(2n)!
    Real eps = eps_here();
    Real sum(0);
    Real y2 = y * y;
    Real pw = y;       // y^{2n-1}
    Real fact(2);      // (2n)!
    Real four_n(4);    // 2^{2n}
    for (int n = 1; n < 2000; ++n) {
        if (n > 1) {
            pw *= y2;
            fact = fact * static_cast<long>((2 * n - 1) * (2 * n));
            four_n = four_n * 4L;
        }
        Real t = four_n * bernoulli_real(2 * n) * pw / fact;
        sum += t;
        if (abs(t) < eps * abs(sum)) return sum;
    }
    throw ConvergenceError("coth series did not converge");
}

Estimate pole_sum(const Real& a, const std::function<Complex(long)>& weight, double growth) {
    PoleSeriesOptions o;
    o.growth = growth;
    return Estimate::of(imaginary_pole_series(a, weight, o));
}

std::vector<long> index_param(const Params& p, const std::string& name) {
    auto it = p.raw().find(name);
    if (it == p.raw().end()) throw InvalidParams("missing parameter '" + name + "'");
    std::vector<long> out;
    try {
        out = parse_index_range(it->second);
    } catch (const ConfigError& e) {
        throw InvalidParams(e.what());
    }
    if (out.size() < 2) throw InvalidParams("parameter '" + name + "' needs at least two indices");
    return out;
}

Complex cx(const Real& re, const Real& im) { return Complex(re, im); }
Complex cpow(const Real& base, const Complex& w) { return pow(base, w); }

}  // namespace mellin::cat
