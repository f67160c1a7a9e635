#pragma once

// Helpers shared by the catalog translation units.

#include <functional>
#include <string>
#include <vector>

#include "mellin/contour.hpp"
#include "mellin/registry.hpp"
#include "mellin/series.hpp"
#include "mellin/specfun.hpp"

namespace mellin::cat {

using Eval = std::function<Estimate(const EvalContext&)>;
using Integrand = std::function<Complex(const Complex&)>;

IdentityRecord make(std::string id, std::string group, std::string anchor, std::string lhs_text,
                    std::string rhs_text, std::vector<ParamSpec> params, Eval lhs, Eval rhs);

// Validity predicate helpers; each throws InvalidParams with the reason.
void require(bool ok, const std::string& why);

// 2^{-bits} at the calling thread's precision.
Real eps_here();

Real pi();
Real euler();
Real two_pi();
Real half();
Real frac(long p, long q);

// Polynomial growth exponent of |ζ(σ+iv)| in |v| (convexity bound plus slack).
double zeta_growth(double sigma);

// (1/2π) ∫ f(c+iv) dv.
Estimate line(const EvalContext& e, const Real& c, const Integrand& f, const DecayModel& d);
// (1/2π) ∫ Re f(c+iv) dv for f(c-iv) = conj f(c+iv).
Estimate line_re(const EvalContext& e, const Real& c, const Integrand& f, const DecayModel& d);
// As line_re, through a pole on the line at v = 0 with a purely imaginary singular part.
Estimate line_re_pole(const EvalContext& e, const Real& c, const Integrand& f, const DecayModel& d);
// ∫_0^∞ g(v) dv for g decaying like v^power e^{-rate v}.
Estimate half_axis(const EvalContext& e, const std::function<Real(const Real&)>& g, double rate, double power);
// ∫_0^∞ h(x) dx for h(x) ~ x^{left_power - 1} at 0 and super-exponential decay
// at ∞, through x = e^u.
Estimate mellin_half_line(const EvalContext& e, const std::function<Real(const Real&)>& h, double left_power);
// ∫_a^b g over unit panels.
Estimate interval(const EvalContext& e, const std::function<Real(const Real&)>& g, const Real& a, const Real& b);

// Σ_{j≥1} 1/(e^{x j^σ} - 1), Σ 1/(e^{x j^σ} + 1), Σ e^{-x j^σ}.
Estimate bose(const Real& x, const Real& sigma);
Estimate fermi(const Real& x, const Real& sigma);
Estimate omega_sum(const Real& x, const Real& sigma);

// Σ_{k≥k0} term(k) with |tail from k| ≤ tail(k).
Estimate series(const std::function<Complex(long)>& term, long k0, const std::function<Real(long)>& tail);
// Σ_{k≥k0} term(k) for terms that shrink at least geometrically with ratio ≤ r < 1
// from k0 on.
Estimate geometric(const std::function<Complex(long)>& term, long k0, double r);

// coth(y) - 1/y, accurate for small y.
Real coth_minus_inv(const Real& y);

// Σ_{k≥1} weight(k) over the imaginary poles 2πik/ln a.
Estimate pole_sum(const Real& a, const std::function<Complex(long)>& weight, double growth = 1.0);

// Index list parameter ("2..12", "2..12:2", "1,2,3").
std::vector<long> index_param(const Params& p, const std::string& name);

// Complex helpers.
Complex cx(const Real& re, const Real& im);
Complex cpow(const Real& base, const Complex& w);

// Records whose sides are a trend: residual of value(n) to a limit over n.
IdentityRecord make_trend(std::string id, std::string group, std::string anchor, std::string lhs_text,
                          std::string rhs_text, std::vector<ParamSpec> params,
                          std::function<TrendData(const EvalContext&)> trend);

// ∫_0^∞ (1 - cos bt)/sinh²(πt) dt and ∫_0^∞ t sin(bt)/sinh²(πt) dt.
Estimate j3a_integral(const EvalContext& e, const Real& b);
Estimate j3b_integral(const EvalContext& e, const Real& b);
// -π Σ_{j≥0} a^{j+1} ∫_0^∞ (1 - cos(t/a^{j+1}))/sinh²(πt) dt, the interchanged
// form of Σ_{k≥0} ζ(-2k-1)/((2k+1)!(a^{2k+1} - 1)).
Estimate appendix_b_chain(const EvalContext& e, const Real& a);

void add_g1_g3(std::vector<IdentityRecord>& out);
void add_g4_g5(std::vector<IdentityRecord>& out);
void add_g6(std::vector<IdentityRecord>& out);
void add_g7(std::vector<IdentityRecord>& out);
void add_g8_appendix(std::vector<IdentityRecord>& out);

}  // namespace mellin::cat
