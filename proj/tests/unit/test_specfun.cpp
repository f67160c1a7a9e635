#include <doctest.h>

#include "check.hpp"
#include "mellin/errors.hpp"
#include "mellin/specfun.hpp"

using namespace mellin;
using mellin::test::agree;

TEST_SUITE("specfun") {
    TEST_CASE("bernoulli numbers are exact") {
        CHECK(bernoulli(2) == mpq_class(1, 6));
        CHECK(bernoulli(12) == mpq_class(-691, 2730));
        CHECK(bernoulli(3) == 0);
        CHECK(bernoulli(1) == mpq_class(-1, 2));
        CHECK(bernoulli(0) == 1);
        CHECK(bernoulli(30) == mpq_class("8615841276005/14322"));
    }

    TEST_CASE("gamma at known points") {
        PrecisionGuard g(40);
        CHECK(agree(gamma(Complex(Real(1) / Real(2))), "1.7724538509055160272981674833411451827975") >= 38);
        CHECK(gamma(Real(5)) == Real(24));
        Complex z(Real(3) / Real(10), Real(2));
        CHECK(agree(gamma(z), "0.05746533756958803529108302167932438622893245696583719722",
                    "-0.07498491258264613768098849738609505676204792257735026962") >= 38);
        CHECK(agree(Complex(abs(gamma(Complex(Real(1) / Real(2), Real(1))))),
                    "0.52059096361675194552520293044566002478631405589646") >= 38);
    }

    TEST_CASE("gamma agrees with MPFR on the real axis") {
        PrecisionGuard g(50);
        for (const char* x : {"0.1", "2.5", "7.25", "-3.5", "31.7"}) {
            Real v = Real::parse(x);
            Real ref;
            mpfr_gamma(ref.raw(), v.raw(), MPFR_RNDN);
            CHECK(digits_agreed(gamma(Complex(v)), Complex(ref), 50) >= 46);
        }
    }

    TEST_CASE("gamma poles") {
        CHECK_THROWS_AS(gamma(Complex(0)), DomainError);
        CHECK_THROWS_AS(gamma(Complex(-3)), DomainError);
        PrecisionGuard g(30);
        // close to, but not on, a pole
        CHECK_NOTHROW(gamma(Complex(Real(-3) + tenth_power(25))));
    }

    TEST_CASE("log gamma is continuous") {
        PrecisionGuard g(40);
        Complex z(Real(3), Real(4));
        CHECK(agree(log_gamma(z), "-1.75662678460378411053060418162327578515670661",
                    "4.74266443803465792819488940755002274088830335") >= 38);
    }

    TEST_CASE("upper incomplete gamma") {
        PrecisionGuard g(40);
        CHECK(agree(gamma_upper(Real(5) / Real(2), Real(3)), "0.407069175871302998434239174728110744495690367") >= 38);
    }

    TEST_CASE("zeta at known points") {
        PrecisionGuard g(40);
        Real p = const_pi();
        CHECK(digits_agreed(Complex(zeta(Real(2))), Complex(p * p / Real(6)), 40) >= 38);
        CHECK(zeta(Real(0)) == Real(-1) / Real(2));
        CHECK(agree(Complex(zeta(Real(-1))), "-0.0833333333333333333333333333333333333333333") >= 38);
        CHECK(zeta(Real(-4)).is_zero());
        CHECK(agree(zeta(Complex(Real(1) / Real(2), Real(14))), "0.022241142609993589246213199203968626386786243194924",
                    "-0.1032581232664500579023630955525738345075490304641") >= 38);
        CHECK(agree(zeta(Complex(Real(-5) / Real(2), Real(3))), "0.068763679033646481628477665999946440568558232462822",
                    "0.13398028393783442697393013742957341956212785139016") >= 38);
        CHECK_THROWS_AS(zeta(Complex(1)), DomainError);
    }

    TEST_CASE("zeta agrees with MPFR on the real axis") {
        PrecisionGuard g(50);
        for (const char* x : {"0.5", "1.5", "3", "-2.5", "-11", "20"}) {
            Real v = Real::parse(x);
            Real ref;
            mpfr_zeta(ref.raw(), v.raw(), MPFR_RNDN);
            CHECK(digits_agreed(Complex(zeta(v)), Complex(ref), 50) >= 46);
        }
    }

    TEST_CASE("q-digamma against brute force") {
        PrecisionGuard g(40);
        SeriesResult s = q_digamma_series(Real(1) / Real(2), Complex(1));
        CHECK(agree(s.value, "-0.42052903435604577978473693040691371323492850975789") >= 38);
        CHECK(s.tail_bound < tenth_power(38));
        // direct partial sum with ten times the terms
        Real q = Real(1) / Real(2), sum(0);
        for (int k = 0; k < 10 * s.terms_used + 10; ++k) {
            Real qk = pow(q, k + 1);
            sum += qk / (Real(1) - qk);
        }
        Real brute = -log(Real(1) - q) + log(q) * sum;
        CHECK(abs(brute - s.value.re) <= s.tail_bound + tenth_power(38));
        CHECK_THROWS_AS(q_digamma(Real(3) / Real(2), Complex(1), PrecisionContext::for_target(20)), DomainError);
    }

    TEST_CASE("q-digamma form of a Lambert sum") {
        PrecisionGuard g(40);
        // ψ_{1/2}(1)/ln 2 - 1 = Σ 1/(1 - 2^k)
        Complex psi = q_digamma_series(Real(1) / Real(2), Complex(1)).value;
        Real lhs = psi.re / log(Real(2)) - Real(1);
        Real direct(0);
        for (int k = 1; k < 200; ++k) direct += Real(1) / (Real(1) - pow(Real(2), k));
        CHECK(abs(lhs - direct) < tenth_power(35));
    }

    TEST_CASE("theta function") {
        PrecisionGuard g(40);
        Real p = const_pi();
        SeriesResult t = theta3_series(exp(-p));
        CHECK(agree(t.value, "1.0864348112133080145753161215102234570702057072452") >= 38);
        CHECK(digits_agreed(t.value, Complex(pow(p, Real(1) / Real(4)) / gamma(Real(3) / Real(4))), 40) >= 38);
        CHECK(theta3_series(tenth_power(30)).value.re == Real(1) + tenth_power(30) * 2L);
        CHECK_THROWS_AS(theta3(Real(1), PrecisionContext::for_target(20)), DomainError);
        // θ₃² - 1 = 4 Σ (-1)^k x^{2k+1}/(1 - x^{2k+1}) at x = 1/3
        Real x = Real(1) / Real(3), sum(0);
        for (int k = 0; k < 200; ++k) {
            Real xk = pow(x, 2 * k + 1);
            Real term = xk / (Real(1) - xk);
            sum += k % 2 ? -term : term;
        }
        Real th = theta3_series(x).value.re;
        CHECK(abs(th * th - Real(1) - sum * 4L) < tenth_power(36));
    }

    TEST_CASE("upsilon") {
        PrecisionGuard g(40);
        Real p = const_pi();
        CHECK(digits_agreed(upsilon(Complex(2), p), Complex(p / Real(6)), 40) >= 38);
        Complex s(Real(3) / Real(10), Real(2));
        CHECK(agree(upsilon(s, Real(2)), "-0.2197245103684366386946964256203716746764675465821806772",
                    "-0.0549814629546823401417393319693612758794123061487269372") >= 38);
        Complex third(Real(1) / Real(3));
        CHECK(digits_agreed(upsilon(third, p), upsilon(Complex(1) - third, p), 40) >= 38);
    }

    TEST_CASE("polar parts on the critical line") {
        PrecisionGuard g(40);
        PolarParts g0 = polar_parts(HalfLine::gamma, Real(0));
        CHECK(digits_agreed(Complex(g0.modulus), Complex(sqrt(const_pi())), 40) >= 38);
        CHECK(abs(g0.phase) < tenth_power(38));
        PolarParts g1 = polar_parts(HalfLine::gamma, Real(1));
        CHECK(agree(g1.modulus, "0.52059096361675194552520293044566002478631405589646") >= 38);
        for (const char* v : {"0.5", "1", "3", "14.5", "30"}) {
            PolarParts z = polar_parts(HalfLine::zeta, Real::parse(v));
            CHECK(z.closed_form_residual < tenth_power(35));
            CHECK(abs(z.closed_form_sign) == 1);
        }
        // below the first zero the closed form and arg ζ share a sign
        CHECK(polar_parts(HalfLine::zeta, Real(1)).closed_form_sign == 1);
    }

    TEST_CASE("context overloads certify by refinement") {
        auto ctx = PrecisionContext::for_target(30);
        Complex z = zeta(Complex(Real(1) / Real(2), Real(14)), ctx);
        PrecisionGuard g(40);
        CHECK(agree(z, "0.022241142609993589246213199203968626386786243194924",
                    "-0.1032581232664500579023630955525738345075490304641") >= 30);
        Complex gm = gamma(Complex(Real(3) / Real(10), Real(2)), ctx);
        CHECK(agree(gm, "0.05746533756958803529108302167932438622893245696583719722",
                    "-0.07498491258264613768098849738609505676204792257735026962") >= 30);
    }
}
