#include <doctest.h>

#include "check.hpp"
#include "mellin/contour.hpp"
#include "mellin/errors.hpp"
#include "mellin/specfun.hpp"

using namespace mellin;
using mellin::test::agree;

namespace {

// Γ(s) x^{-s}: the inverse Mellin transform gives e^{-x}.
ContourSpec cahen_mellin(const Real& c, const Real& x) {
    ContourSpec spec;
    spec.c = c;
    spec.integrand = [x](const Complex& s) { return gamma(s) * pow(x, -s); };
    spec.decay = DecayModel::gamma_like(c.to_double());
    return spec;
}

}  // namespace

TEST_SUITE("contour") {
    TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
        PrecisionGuard g(40);
        auto rule = gauss_legendre(20, current_bits());
        Real sum(0), moment(0);
        for (size_t k = 0; k < rule->nodes.size(); ++k) {
            sum += rule->weights[k];
            moment += rule->weights[k] * pow(rule->nodes[k], 10L);
        }
        CHECK(digits_agreed(Complex(sum), Complex(2), 40) >= 38);
        CHECK(digits_agreed(Complex(moment), Complex(Real(2) / Real(11)), 40) >= 38);
        CHECK(gauss_legendre(20, current_bits()) == rule);
        CHECK(default_order(60) >= default_order(20));
    }

    TEST_CASE("inverse Mellin transform of gamma") {
        auto ctx = PrecisionContext::for_target(25);
        QuadratureResult r = integrate_vertical(cahen_mellin(Real(1), Real(1)), ctx);
        PrecisionGuard g(40);
        CHECK(agree(r.value, "0.36787944117144232159552377016146086744581113103176") >= 24);
        CHECK(r.error_estimate < tenth_power(20));
        CHECK(r.truncation_height > Real(2));
    }

    TEST_CASE("the value does not depend on the abscissa") {
        auto ctx = PrecisionContext::for_target(20);
        PrecisionGuard g(30);
        Real x = Real(1) / Real(2);
        Complex first = integrate_vertical(cahen_mellin(Real(1) / Real(2), x), ctx).value;
        for (const char* c : {"1", "2.5", "4"}) {
            Complex v = integrate_vertical(cahen_mellin(Real::parse(c), x), ctx).value;
            CHECK(digits_agreed(v, first, 20) >= 19);
        }
        CHECK(digits_agreed(first, Complex(exp(-x)), 20) >= 19);
    }

    TEST_CASE("Gamma zeta kernel recovers a Bose sum") {
        auto ctx = PrecisionContext::for_target(20);
        ContourSpec spec;
        spec.c = Real(2);
        spec.integrand = [](const Complex& s) { return gamma(s) * zeta(s); };
        spec.decay = DecayModel::gamma_like(2.0, 0.5);
        QuadratureResult r = integrate_vertical(spec, ctx);
        PrecisionGuard g(30);
        CHECK(digits_agreed(r.value, Complex(Real(1) / expm1(Real(1))), 20) >= 19);
    }

    TEST_CASE("symmetric reduction matches the full line") {
        auto ctx = PrecisionContext::for_target(20);
        ContourSpec full = cahen_mellin(Real(3) / Real(2), Real(2));
        ContourSpec half = full;
        half.symmetric = true;
        Complex a = integrate_vertical(full, ctx).value;
        Complex b = integrate_vertical(half, ctx).value;
        PrecisionGuard g(30);
        CHECK(digits_agreed(a, b, 20) >= 19);
        CHECK(abs(a.im) < tenth_power(19));
    }

    TEST_CASE("parallel and serial panels give identical bits") {
        auto ctx = PrecisionContext::for_target(25);
        ContourSpec spec = cahen_mellin(Real(1), Real(3) / Real(2));
        QuadratureResult p = integrate_vertical(spec, ctx);
        QuadratureResult s = integrate_vertical_serial(spec, ctx);
        CHECK(p.value.re == s.value.re);
        CHECK(p.value.im == s.value.im);
        CHECK(p.panels == s.panels);
        CHECK(p.evaluations == s.evaluations);
    }

    TEST_CASE("shifting past the pole at zero") {
        auto ctx = PrecisionContext::for_target(20);
        ContourSpec spec = cahen_mellin(Real(1), Real(1));
        std::vector<std::pair<Complex, Complex>> res{{Complex(0), Complex(1)}};
        ShiftReport r = shift_contour(spec, res, Real(-1) / Real(2), ctx);
        CHECK(abs(r.mismatch) <= r.tolerance);
        PrecisionGuard g(30);
        CHECK(digits_agreed(r.at_new.value, Complex(exp(Real(-1)) - Real(1)), 20) >= 18);
        // leaving the residue out must be caught
        CHECK_THROWS_AS(shift_contour(spec, {}, Real(-1) / Real(2), ctx), ResidueMismatch);
        // a shift that crosses nothing
        ShiftReport z = shift_contour(spec, {}, Real(1) / Real(2), ctx);
        CHECK(abs(z.mismatch) <= z.tolerance);
    }

    TEST_CASE("half residue through an on-line pole") {
        auto ctx = PrecisionContext::for_target(20);
        ContourSpec spec = cahen_mellin(Real(0), Real(1));
        spec.part = Part::real_only;
        spec.decay = DecayModel::gamma_like(0.0);
        QuadratureResult r = half_residue_integrate(spec, Real(0), Complex(Real(1) / Real(2)), ctx);
        PrecisionGuard g(30);
        // principal value: e^{-1} minus half the residue at s = 0
        CHECK(digits_agreed(r.value, Complex(exp(Real(-1)) - Real(1) / Real(2)), 20) >= 18);
        CHECK(r.half_residue.re == Real(1) / Real(2));
        ContourSpec sq = spec;
        sq.integrand = [](const Complex& s) { return gamma(s) * gamma(s); };
        sq.decay = DecayModel::gamma_squared_like(0.0);
        CHECK_THROWS_AS(half_residue_integrate(sq, Real(0), Complex(0), ctx), NonIntegrableSingularity);
        ContourSpec whole = cahen_mellin(Real(0), Real(1));
        CHECK_THROWS_AS(half_residue_integrate(whole, Real(0), Complex(0), ctx), NonIntegrableSingularity);
    }

    TEST_CASE("a false decay certificate is rejected") {
        auto ctx = PrecisionContext::for_target(20);
        ContourSpec spec = cahen_mellin(Real(1), Real(1));
        spec.decay = DecayModel::custom(5.0, 0.0);
        CHECK_THROWS_AS(integrate_vertical(spec, ctx), DecayViolation);
        spec.decay = DecayModel::custom(0.0, 0.0);
        CHECK_THROWS_AS(integrate_vertical(spec, ctx), DecayViolation);
    }

    TEST_CASE("slow decay hits the height ceiling") {
        auto ctx = PrecisionContext::for_target(20);
        ContourSpec spec = cahen_mellin(Real(1), Real(1));
        spec.decay = DecayModel::custom(0.001, 0.0);
        QuadratureOptions opt;
        opt.max_height = 100.0;
        CHECK_THROWS_AS(integrate_vertical(spec, ctx, opt), SlowDecay);
    }

    TEST_CASE("truncation is honest at twice the height") {
        auto ctx = PrecisionContext::for_target(20);
        ContourSpec spec = cahen_mellin(Real(1), Real(2));
        QuadratureResult r = integrate_vertical(spec, ctx);
        QuadratureOptions opt;
        opt.height = 2.0 * r.truncation_height.to_double();
        QuadratureResult r2 = integrate_vertical(spec, ctx, opt);
        PrecisionGuard g(30);
        CHECK(abs(r.value - r2.value) <= r.error_estimate + r2.error_estimate + tenth_power(20));
    }

    TEST_CASE("interval quadrature") {
        auto ctx = PrecisionContext::for_target(30);
        QuadratureResult r =
            integrate_interval([](const Real& t) { return Complex(exp(-t * t)); }, Real(0), Real(8), ctx);
        PrecisionGuard g(40);
        // √π/2 erf(8), erfc(8) ~ 1e-29
        Real want = sqrt(const_pi()) / Real(2);
        CHECK(abs(r.value.re - want) < tenth_power(28));
        CHECK_THROWS_AS(integrate_interval([](const Real&) { return Complex(1); }, Real(0), Real(1), ctx, 0.0),
                        DomainError);
    }
}
