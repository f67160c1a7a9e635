#pragma once

#include <functional>

#include "mellin/jet.hpp"
#include "mellin/mpnum.hpp"
#include "mellin/result.hpp"

namespace mellin {

// Σ_{k≥k0} term(k), stopping once bound(k) (a bound on Σ_{j≥k} |term(j)|)
// falls below 2^{-bits}·max(1, |partial sum|). Functions without a context
// run at the calling thread's precision.
SeriesResult sum_with_bound(const std::function<Complex(long)>& term, long k0,
                            const std::function<Real(long)>& bound, long max_terms = 50000000);

// A term f(t) of a series Σ_{j≥start} f(j), summed as Σ_{j<M} f(j) plus an
// Euler-Maclaurin tail at M.
struct EmTerm {
    std::function<Real(const Real&)> value;
    std::function<Jet(const Jet&)> jet;
    std::function<Real(long)> tail_integral;  // ∫_M^∞ f
    // Derivatives alternate in sign (completely monotone f); then the
    // remainder is bounded by the first omitted correction.
    bool completely_monotone = true;
};

SeriesResult em_sum(const EmTerm& f, long start, long M);
// Default tail point for the current precision.
long em_default_point();

enum class ExpKind { plain, bose, fermi };
// plain: Σ_{j≥1} e^{-x j^σ}; bose: Σ 1/(e^{x j^σ}-1); fermi: Σ 1/(e^{x j^σ}+1).
SeriesResult exp_family_sum(ExpKind kind, const Real& x, const Real& sigma);

// ω(b, σ) = Σ_{j≥1} e^{-b j^σ}.
SeriesResult omega(const Real& b, const Real& sigma);
SeriesResult omega(const Real& b, const Real& sigma, const PrecisionContext& ctx);

// Σ_{k≥k0} 1/(a^{uk+w} + sign).
SeriesResult lambert_sum(const Real& a, int sign, const Real& u, const Real& w, long k0);
SeriesResult lambert_sum(const Real& a, int sign, const Real& u, const Real& w, long k0,
                         const PrecisionContext& ctx);

// Σ_{k≥1} weight(k), where weight(k) involves Γ(2πik/ln a) and the rest of
// the weight grows at most like y^growth, y = 2πk/ln a.
struct PoleSeriesOptions {
    double growth = 1.0;
    double min_log_a = 0.05;
    long max_terms = 10000;
};
SeriesResult imaginary_pole_series(const Real& a, const std::function<Complex(long)>& weight,
                                   const PoleSeriesOptions& opt = {});
SeriesResult imaginary_pole_series(const Real& a, const std::function<Complex(long)>& weight,
                                   const PrecisionContext& ctx, const PoleSeriesOptions& opt = {});

// Σ_{k≥k0} term(k) with the certificate |term(k)| ≤ A r^k / k!.
SeriesResult alternating_factorial_series(const std::function<Complex(long)>& term, long k0,
                                          const Real& A, const Real& r);
SeriesResult alternating_factorial_series(const std::function<Complex(long)>& term, long k0,
                                          const Real& A, const Real& r, const PrecisionContext& ctx);

// Σ_{j≥0} 2^j cosh(2^j b)/sinh²(2^j b), which telescopes to (1/2)/sinh²(b/2).
SeriesResult telescoping_check(const Real& b);
SeriesResult telescoping_check(const Real& b, const PrecisionContext& ctx);

// Σ_{n≥0} f(a^n) for f decaying at least like e^{-x}: terms are cut once
// a^n exceeds the precision horizon.
SeriesResult hyperpower_sum(const Real& a, const std::function<Complex(const Real&)>& f, long n0 = 0);

}  // namespace mellin
