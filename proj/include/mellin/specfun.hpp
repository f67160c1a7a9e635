#pragma once

#include <gmpxx.h>

#include "mellin/mpnum.hpp"
#include "mellin/result.hpp"

namespace mellin {

// Exact B_k; B_1 = -1/2, zero for odd k > 1.
mpq_class bernoulli(int k);
// B_k rounded to the current precision.
Real bernoulli_real(int k);

// The functions without a context run at the calling thread's precision.
Complex gamma(const Complex& z);
Real gamma(const Real& x);
// Continuous branch of log Γ on Re z > 0 (sum of principal logs after shifting).
Complex log_gamma(const Complex& z);
Complex zeta(const Complex& s);
Real zeta(const Real& x);
// Γ(a, x) for x > 0.
Real gamma_upper(const Real& a, const Real& x);

Complex gamma(const Complex& z, const PrecisionContext& ctx);
Complex zeta(const Complex& s, const PrecisionContext& ctx);

// ψ_q(z) = -ln(1-q) + ln q Σ_{k≥0} q^{k+z}/(1-q^{k+z}).
SeriesResult q_digamma_series(const Real& q, const Complex& z);
Complex q_digamma(const Real& q, const Complex& z, const PrecisionContext& ctx);

// θ3(0, x) = 1 + 2 Σ_{k≥1} x^{k²}.
SeriesResult theta3_series(const Real& x);
Real theta3(const Real& x, const PrecisionContext& ctx);

// Υ(s, b) = ζ(s) b^{-s/2} Γ(s/2).
Complex upsilon(const Complex& s, const Real& b);
Complex upsilon(const Complex& s, const Real& b, const PrecisionContext& ctx);

enum class HalfLine { zeta, gamma };

struct PolarParts {
    Real modulus;
    Real phase;
    // zeta only: distance of (closed-form phase - phase) from the nearest multiple of π
    Real closed_form_residual;
    // zeta only: +1 when ζ = e^{iα}|ζ| with α from the closed form, -1 when ζ = -e^{iα}|ζ|
    int closed_form_sign = 1;
};

// Closed form α(1/2+iv) = v ln(2π)/2 - θ/2 - 9π/8 + arctan(e^{πv})/2 with θ = arg Γ(1/2+iv).
Real zeta_phase_closed_form(const Real& v);
PolarParts polar_parts(HalfLine which, const Real& v);
PolarParts polar_parts(HalfLine which, const Real& v, const PrecisionContext& ctx);

}  // namespace mellin
