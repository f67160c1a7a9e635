#pragma once

// Property grids shared by the unit suite and the acceptance binary. Each
// returns the list of violations; an empty list means the property holds.

#include <functional>
#include <string>
#include <vector>

#include "mellin/contour.hpp"
#include "mellin/errors.hpp"
#include "mellin/mpnum.hpp"
#include "mellin/series.hpp"
#include "mellin/specfun.hpp"

namespace mellin::props {

using Violations = std::vector<std::string>;

inline std::string show(const Real& x) { return to_string(x, 8); }

// Evaluations at D and D + 10 digits agree to at least D - 2 digits.
inline Violations refinement_stability(int D = 30) {
    Violations v;
    struct Case {
        const char* name;
        std::function<Complex()> f;
    };
    const Complex z(Real(0.3), Real(2.0));
    const Complex w(Real(-2.5), Real(3.0));
    std::vector<Case> cases = {
        {"exp", [] { return Complex(exp(Real(1))); }},
        {"log", [z] { return log(z); }},
        {"sinh", [z] { return sinh(z); }},
        {"coth", [] { return coth(Complex(Real(1) / Real(2))); }},
        {"atan", [z] { return atan(z); }},
        {"pow", [z] { return pow(z, Complex(Real(1) / Real(3), Real(1))); }},
        {"gamma", [z] { return gamma(z); }},
        {"gamma_left", [w] { return gamma(w); }},
        {"zeta", [z] { return zeta(z); }},
        {"zeta_left", [w] { return zeta(w); }},
        {"zeta_critical", [] { return zeta(Complex(Real(1) / Real(2), Real(14))); }},
        {"upsilon", [z] { return upsilon(z, Real(2)); }},
        {"omega", [] { return omega(const_pi(), Real(2)).value; }},
        {"bose", [] { return exp_family_sum(ExpKind::bose, Real(1), Real(1) / Real(3)).value; }},
        {"theta3", [] { return Complex(theta3_series(Real(1) / Real(3)).value); }},
        {"q_digamma", [] { return q_digamma_series(Real(1) / Real(2), Complex(1)).value; }},
    };
    for (const auto& c : cases) {
        Complex lo, hi;
        {
            PrecisionGuard g(D);
            lo = c.f();
        }
        {
            PrecisionGuard g(D + 10);
            hi = c.f();
        }
        PrecisionGuard g(D + 10);
        int agreed = digits_agreed(lo, hi, D + 10);
        if (agreed < D - 2) v.push_back(std::string(c.name) + " agrees to " + std::to_string(agreed) + " digits");
    }
    return v;
}

// A series value at D digits differs from the value at D + 20 digits (many
// more terms) by no more than its reported tail bound plus rounding.
inline Violations tail_honesty(int D = 30) {
    Violations v;
    struct Case {
        const char* name;
        std::function<SeriesResult()> f;
    };
    std::vector<Case> cases = {
        {"omega(pi,2)", [] { return omega(const_pi(), Real(2)); }},
        {"omega(1,1/4)", [] { return omega(Real(1), Real(1) / Real(4)); }},
        {"omega(2,1/3)", [] { return omega(Real(2), Real(1) / Real(3)); }},
        {"bose(1,1/2)", [] { return exp_family_sum(ExpKind::bose, Real(1), Real(1) / Real(2)); }},
        {"fermi(1,1)", [] { return exp_family_sum(ExpKind::fermi, Real(1), Real(1)); }},
        {"lambert(2,+1)", [] { return lambert_sum(Real(2), 1, Real(1), Real(0), 1); }},
        {"lambert(3,-1)", [] { return lambert_sum(Real(3), -1, Real(2), Real(1), 1); }},
        {"lambert(1.2,+1)", [] { return lambert_sum(Real(6) / Real(5), 1, Real(1), Real(0), 1); }},
        {"theta3(1/3)", [] { return theta3_series(Real(1) / Real(3)); }},
        {"theta3(0.9)", [] { return theta3_series(Real(9) / Real(10)); }},
        {"q_digamma(1/2)", [] { return q_digamma_series(Real(1) / Real(2), Complex(1)); }},
        {"telescoping(1)", [] { return telescoping_check(Real(1)); }},
        {"pole_series(e)",
         [] {
             Real a = exp(Real(1));
             return imaginary_pole_series(a, [a](long k) {
                 Complex s(Real(0), const_pi() * Real(2 * k) / log(a));
                 return gamma(s) * zeta(s);
             });
         }},
        {"alt_factorial(2)",
         [] {
             return alternating_factorial_series(
                 [](long k) {
                     Real t(1);
                     for (long j = 1; j <= k; ++j) t = t / Real(j);
                     t = t / (pow(Real(2), k) - Real(1));
                     return Complex(k % 2 ? -t : t);
                 },
                 1, Real(1), Real(1));
         }},
    };
    for (const auto& c : cases) {
        SeriesResult lo, hi;
        {
            PrecisionGuard g(D);
            lo = c.f();
        }
        {
            PrecisionGuard g(D + 20);
            hi = c.f();
        }
        PrecisionGuard g(D + 20);
        Real diff = abs(lo.value - hi.value);
        Real allowed = lo.tail_bound + tenth_power(D) * max(Real(1), abs(hi.value));
        if (!(diff <= allowed))
            v.push_back(std::string(c.name) + ": change " + show(diff) + " exceeds bound " + show(lo.tail_bound));
        if (hi.terms_used < lo.terms_used)
            v.push_back(std::string(c.name) + ": more digits used fewer terms");
    }
    return v;
}

// Doubling the truncation height changes a contour integral by less than
// its error estimate.
inline Violations truncation_honesty(int D = 20) {
    Violations v;
    PrecisionGuard g(D + 10);
    auto ctx = PrecisionContext::for_target(D);
    struct Case {
        const char* name;
        ContourSpec spec;
    };
    Real b(2);
    std::vector<Case> cases;
    {
        ContourSpec s;
        s.c = Real(3) / Real(2);
        s.integrand = [b](const Complex& z) { return zeta(z) * pow(b, -z) * gamma(z); };
        s.part = Part::real_only;
        s.symmetric = true;
        s.decay = DecayModel::gamma_like(1.5, 0.0);
        cases.push_back({"zeta-gamma c=3/2", s});
    }
    {
        ContourSpec s;
        s.c = Real(1) / Real(2);
        s.integrand = [](const Complex& z) { return zeta(z) * gamma(z); };
        s.part = Part::real_only;
        s.symmetric = true;
        s.decay = DecayModel::gamma_like(0.5, 0.5);
        cases.push_back({"critical line", s});
    }
    {
        ContourSpec s;
        s.c = Real(-1) / Real(2);
        s.integrand = [b](const Complex& t) { return pow(b, -t) * gamma(t); };
        s.decay = DecayModel::gamma_like(-0.5);
        cases.push_back({"gamma c=-1/2", s});
    }
    for (const auto& c : cases) {
        QuadratureOptions o;
        o.parallel = false;
        QuadratureResult r = integrate_vertical(c.spec, ctx, o);
        QuadratureOptions o2 = o;
        o2.height = 2.0 * r.truncation_height.to_double();
        o2.max_height = o2.height + 1.0;
        QuadratureResult r2 = integrate_vertical(c.spec, ctx, o2);
        Real diff = abs(r.value - r2.value);
        Real allowed = r.error_estimate + tenth_power(D + 2) * max(Real(1), abs(r.value));
        if (!(diff <= allowed))
            v.push_back(std::string(c.name) + ": change " + show(diff) + " exceeds estimate " + show(r.error_estimate));
    }
    return v;
}

// Γ(z)Γ(1-z) sin(πz) = π on a grid of non-integer points.
inline Violations gamma_reflection(int D = 30) {
    Violations v;
    PrecisionGuard g(D + 10);
    Real tol = tenth_power(D);
    for (int i = -7; i <= 7; ++i) {
        for (int j = -4; j <= 4; ++j) {
            Complex z(Real(i) / Real(3) + Real(1) / Real(7), Real(j) * Real(3) / Real(4));
            Complex lhs = gamma(z) * gamma(Complex(1) - z) * sin_pi(z);
            Real err = abs(lhs - Complex(const_pi())) / const_pi();
            if (!(err < tol)) v.push_back("z = " + to_string(z, 6) + ": relative residual " + show(err));
        }
    }
    return v;
}

// Υ(s, π) = Υ(1 - s, π) in the strip 0 < Re s < 1, and the general form
// Υ(s, b) = Υ(1 - s, b)(b/π)^{1/2 - s}.
inline Violations upsilon_symmetry(int D = 30) {
    Violations v;
    PrecisionGuard g(D + 10);
    Real tol = tenth_power(D);
    Real p = const_pi();
    for (int i = 1; i <= 5; ++i) {
        for (int j = -3; j <= 3; ++j) {
            Complex s(Real(i) / Real(6), Real(j) * Real(5) / Real(4));
            Complex a = upsilon(s, p), b = upsilon(Complex(1) - s, p);
            Real err = abs(a - b) / max(Real(1), abs(a));
            if (!(err < tol)) v.push_back("pi, s = " + to_string(s, 6) + ": residual " + show(err));
            Real bb(2);
            Complex c = upsilon(s, bb);
            Complex d = upsilon(Complex(1) - s, bb) * pow(bb / p, Complex(Real(1) / Real(2)) - s);
            err = abs(c - d) / max(Real(1), abs(c));
            if (!(err < tol)) v.push_back("b = 2, s = " + to_string(s, 6) + ": residual " + show(err));
        }
    }
    return v;
}

// |Γ(1/2 + iv)| = sqrt(π/cosh(πv)) and the polar reconstruction of ζ and Γ
// on the critical line.
inline Violations half_line_modulus(int D = 30) {
    Violations v;
    PrecisionGuard g(D + 10);
    Real tol = tenth_power(D);
    Real p = const_pi();
    for (const char* vs : {"0.1", "1", "5", "20"}) {
        Real t = Real::parse(vs);
        Complex z(Real(1) / Real(2), t);
        Real m = abs(gamma(z));
        Real closed = sqrt(p / cosh(p * t));
        Real err = abs(m - closed) / closed;
        if (!(err < tol)) v.push_back(std::string("|Gamma(1/2+i") + vs + ")| residual " + show(err));
        PolarParts gp = polar_parts(HalfLine::gamma, t);
        if (!(abs(gp.modulus - closed) / closed < tol)) v.push_back(std::string("gamma modulus at ") + vs);
        Complex rec = expi(gp.phase) * gp.modulus;
        if (!(abs(rec - gamma(z)) / closed < tol)) v.push_back(std::string("gamma reconstruction at ") + vs);
        PolarParts zp = polar_parts(HalfLine::zeta, t);
        Complex zr = expi(zp.phase) * zp.modulus;
        Complex zv = zeta(z);
        if (!(abs(zr - zv) < tol * max(Real(1), abs(zv)))) v.push_back(std::string("zeta reconstruction at ") + vs);
        if (!(zp.closed_form_residual < tol * Real(1000)))
            v.push_back(std::string("zeta phase closed form residual at ") + vs + ": " + show(zp.closed_form_residual));
    }
    return v;
}

// ζ(1 - 2k) = -B_{2k}/(2k) for k ≤ 30, and B_{2k} = (-1)^{k+1} 2 (2k)! ζ(2k)/(2π)^{2k}.
inline Violations bernoulli_zeta_bridge(int D = 30) {
    Violations v;
    PrecisionGuard g(D + 10);
    Real tol = tenth_power(D);
    Real fact(1);
    for (int k = 1; k <= 30; ++k) {
        fact = fact * Real(2 * k - 1) * Real(2 * k);
        Real B = bernoulli_real(2 * k);
        Real z = zeta(Real(1 - 2 * k));
        Real want = -B / Real(2 * k);
        if (!(abs(z - want) <= tol * max(Real(1), abs(want)))) v.push_back("zeta(1-2k) at k = " + std::to_string(k));
        Real viaz = fact * zeta(Real(2 * k)) * Real(2) / pow(const_pi() * Real(2), 2 * k);
        if (k % 2 == 0) viaz = -viaz;
        if (!(abs(viaz - B) <= tol * max(Real(1), abs(B)))) v.push_back("B_2k from zeta at k = " + std::to_string(k));
    }
    return v;
}

// f(conj z) = conj f(z) for the real-coefficient functions.
inline Violations conjugate_symmetry(int D = 30) {
    Violations v;
    PrecisionGuard g(D + 10);
    PrecisionContext ctx = PrecisionContext::for_target(D);
    Real tol = tenth_power(D);
    const Fn fns[] = {Fn::exp, Fn::log, Fn::sqrt, Fn::sin, Fn::cos, Fn::sinh, Fn::cosh,
                      Fn::tanh, Fn::coth, Fn::csch, Fn::sech, Fn::arctan};
    for (Fn f : fns) {
        for (int j = 1; j <= 3; ++j) {
            Complex z(Real(j) / Real(3), Real(j) * Real(7) / Real(10));
            Complex a = eval_elementary(f, conj(z), ctx), b = conj(eval_elementary(f, z, ctx));
            if (!(abs(a - b) <= tol * max(Real(1), abs(b))))
                v.push_back("function " + std::to_string(static_cast<int>(f)) + " at " + to_string(z, 6));
        }
    }
    Complex z(Real(3) / Real(10), Real(2));
    if (!(abs(gamma(conj(z)) - conj(gamma(z))) < tol)) v.push_back("gamma conjugate symmetry");
    if (!(abs(zeta(conj(z)) - conj(zeta(z))) < tol)) v.push_back("zeta conjugate symmetry");
    return v;
}

// Σ 1/(a^k + 1) = Σ 1/(a^k - 1) - 2 Σ 1/(a^{2k} - 1) for a in {2, 3, 10}, and
// Σ_{k≥2} k(-1)^k/(b^{k-1} - 1) = Σ_{n≥1} (1 + 2bⁿ)/(1 + bⁿ)² for b in {2, 3}.
inline Violations lambert_relations(int D = 30) {
    Violations v;
    PrecisionGuard g(D + 10);
    Real tol = tenth_power(D);
    for (int a : {2, 3, 10}) {
        Real A(a);
        Complex l = lambert_sum(A, 1, Real(1), Real(0), 1).value;
        Complex r = lambert_sum(A, -1, Real(1), Real(0), 1).value - lambert_sum(A, -1, Real(2), Real(0), 1).value * Real(2);
        if (!(abs(l - r) < tol)) v.push_back("elementary Lambert relation at a = " + std::to_string(a));
    }
    for (int bi : {2, 3}) {
        Real b(bi);
        Real lhs(0), rhs(0), eps = tenth_power(D + 8);
        for (long k = 2;; ++k) {
            Real t = Real(k) / (pow(b, k - 1) - Real(1));
            lhs += k % 2 ? -t : t;
            if (t < eps) break;
        }
        for (long n = 1;; ++n) {
            Real bn = pow(b, n);
            Real t = (Real(1) + bn * 2L) / ((Real(1) + bn) * (Real(1) + bn));
            rhs += t;
            if (t < eps) break;
        }
        if (!(abs(lhs - rhs) < tol)) v.push_back("expansion/transposition at b = " + std::to_string(bi));
    }
    return v;
}

struct Suite {
    const char* name;
    std::function<Violations()> run;
};

inline std::vector<Suite> all_suites() {
    return {
        {"refinement stability", [] { return refinement_stability(); }},
        {"tail-bound honesty", [] { return tail_honesty(); }},
        {"truncation honesty", [] { return truncation_honesty(); }},
        {"gamma reflection", [] { return gamma_reflection(); }},
        {"upsilon symmetry", [] { return upsilon_symmetry(); }},
        {"half-line modulus", [] { return half_line_modulus(); }},
        {"bernoulli-zeta bridge", [] { return bernoulli_zeta_bridge(); }},
        {"conjugate symmetry", [] { return conjugate_symmetry(); }},
        {"lambert relations", [] { return lambert_relations(); }},
    };
}

}  // namespace mellin::props
