#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "mellin/mpnum.hpp"

namespace mellin {

// Envelope |f(c+iv)| <= M |v|^power e^{-rate |v|} for |v| >= v0. M is
// measured from samples; rate and power are certified by the caller.
struct DecayModel {
    double rate = 1.5707963267948966;
    double power = 0.0;
    double v0 = 2.0;

    // |Γ(c+iv)| ~ √(2π)|v|^{c-1/2} e^{-π|v|/2}; extra covers polynomial
    // growth of the remaining factors (zeta on a vertical line, ...).
    static DecayModel gamma_like(double c, double extra = 0.0);
    static DecayModel gamma_squared_like(double c, double extra = 0.0);
    static DecayModel custom(double rate, double power);
};

enum class Part { full, real_only };

struct ContourSpec {
    Real c;
    std::function<Complex(const Complex&)> integrand;
    Part part = Part::full;
    DecayModel decay;
    // f(c-iv) = conj f(c+iv): integrate Re f over [0, V] and double.
    bool symmetric = false;
};

struct QuadratureOptions {
    bool parallel = true;
    // Integrate one more stretch past V and fold it into the error estimate.
    bool check_truncation = true;
    // Fixed truncation height instead of the envelope (<= 0: automatic).
    double height = 0.0;
    double max_height = 4000.0;
    int max_depth = 12;
    // Gauss-Legendre order per panel (<= 0: from the working precision).
    int order = 0;
};

struct QuadratureResult {
    Complex value;
    Real truncation_height;
    long panels = 0;
    Real error_estimate;
    long evaluations = 0;
    // Paired half residue reported by half_residue_integrate.
    Complex half_residue;
};

// Gauss-Legendre rule on [-1, 1] at `bits` precision; cached.
struct GaussLegendreRule {
    int order;
    long bits;
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
std::shared_ptr<const GaussLegendreRule> gauss_legendre(int order, long bits);
int default_order(long digits);

// (1/2π) ∫ f(c+iv) dv over the whole line.
QuadratureResult integrate_vertical(const ContourSpec& spec, const PrecisionContext& ctx,
                                    const QuadratureOptions& opt = {});
// Same computation with the panel loop forced serial.
QuadratureResult integrate_vertical_serial(const ContourSpec& spec, const PrecisionContext& ctx,
                                           QuadratureOptions opt = {});

struct ShiftReport {
    QuadratureResult at_old;
    QuadratureResult at_new;
    Complex residue_sum;
    // (1/2πi)∫_{c} - (1/2πi)∫_{c'} - Σ Res, for c' < c
    Complex mismatch;
    Real tolerance;
};

// Moves the line from spec.c to new_c and checks the residue bookkeeping:
// I(c) = I(c') + Σ Res (poles strictly between, c' < c). Throws
// ResidueMismatch when the difference exceeds the combined error.
ShiftReport shift_contour(const ContourSpec& spec, const std::vector<std::pair<Complex, Complex>>& residues,
                          const Real& new_c, const PrecisionContext& ctx, const QuadratureOptions& opt = {});

// Real-part quadrature through a pole at c + i·pole_v whose singular part is
// purely imaginary. Throws NonIntegrableSingularity if Re f blows up there.
QuadratureResult half_residue_integrate(const ContourSpec& spec, const Real& pole_v, const Complex& half_residue,
                                        const PrecisionContext& ctx, const QuadratureOptions& opt = {});

// ∫_a^b g over width-`width` panels with adaptive bisection.
QuadratureResult integrate_interval(const std::function<Complex(const Real&)>& g, const Real& a, const Real& b,
                                    const PrecisionContext& ctx, double width = 1.0, bool parallel = true);

}  // namespace mellin
