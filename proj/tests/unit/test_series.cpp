#include <doctest.h>

#include "check.hpp"
#include "mellin/errors.hpp"
#include "mellin/series.hpp"
#include "mellin/specfun.hpp"

using namespace mellin;
using mellin::test::agree;

TEST_SUITE("series") {
    TEST_CASE("sum with an explicit bound") {
        PrecisionGuard g(40);
        auto term = [](long k) { return Complex(Real(1) / (Real(k) * Real(k))); };
        // Σ_{k≥K} 1/k² ≤ 1/(K-1)
        auto bound = [](long k) { return Real(1) / Real(k - 1); };
        CHECK_THROWS_AS(sum_with_bound(term, 2, bound, 1000), ConvergenceError);
        auto geo = [](long k) { return Complex(pow(Real(1) / Real(3), k)); };
        SeriesResult r = sum_with_bound(geo, 1, [](long k) { return pow(Real(1) / Real(3), k) * Real(3) / Real(2); });
        CHECK(digits_agreed(r.value, Complex(Real(1) / Real(2)), 40) >= 38);
    }

    TEST_CASE("omega") {
        PrecisionGuard g(45);
        SeriesResult w = omega(const_pi(), Real(2));
        CHECK(agree(w.value, "0.043217405606654007287658060755111728535102853622609") >= 43);
        Real closed = pow(const_pi(), Real(1) / Real(4)) / (gamma(Real(3) / Real(4)) * 2L) - Real(1) / Real(2);
        CHECK(digits_agreed(w.value, Complex(closed), 45) >= 43);
        SeriesResult e = omega(Real(3), Real(1));
        CHECK(digits_agreed(e.value, Complex(Real(1) / expm1(Real(3))), 45) >= 43);
        CHECK(omega(Real(100000), Real(1)).value.re < tenth_power(40));
        CHECK(w.tail_bound < tenth_power(44));
    }

    TEST_CASE("omega with small exponent uses the Euler-Maclaurin tail") {
        PrecisionGuard g(45);
        // Σ e^{-2 j^{1/3}} needs ~10^5 terms directly
        SeriesResult w = omega(Real(2), Real(1) / Real(3));
        Real v = w.value.re - Real(6) / Real(8);
        CHECK(agree(v, "-0.16760034069567601034273267156706390870471737249002682347495") >= 42);
        CHECK(w.terms_used < 2000);
    }

    TEST_CASE("exponential family sums") {
        PrecisionGuard g(45);
        SeriesResult b = exp_family_sum(ExpKind::bose, Real(1), Real(1) / Real(2));
        Real v = b.value.re - zeta(Real(2)) * 2L;
        CHECK(agree(v, "-1.22764268686739475610672469209450646205202864") >= 42);
        // Σ 1/(e^j + 1) = Σ 1/(e^j - 1) - 2 Σ 1/(e^{2j} - 1)
        Real f = exp_family_sum(ExpKind::fermi, Real(1), Real(1)).value.re;
        Real bb = exp_family_sum(ExpKind::bose, Real(1), Real(1)).value.re;
        Real b2 = exp_family_sum(ExpKind::bose, Real(2), Real(1)).value.re;
        CHECK(abs(f - (bb - b2 * 2L)) < tenth_power(43));
    }

    TEST_CASE("lambert sums") {
        PrecisionGuard g(45);
        SeriesResult a = lambert_sum(Real(2), 1, Real(2), Real(0), 1);
        CHECK(agree(a.value, "0.27940026240596014417053014693406824998201985034083") >= 43);
        // Σ 1/(2^{2k}+1) = Σ (-1)^{k+1}/(2^{2k} - 1)
        Real alt(0);
        for (int k = 1; k < 200; ++k) {
            Real t = Real(1) / (pow(Real(2), 2 * k) - Real(1));
            alt += k % 2 ? t : -t;
        }
        CHECK(abs(a.value.re - alt) < tenth_power(43));
        SeriesResult p = lambert_sum(Real(2), 1, Real(1), Real(0), 1);
        CHECK(agree(p.value, "0.76449978034844420919131974725549848255769699885753") >= 43);
        CHECK(lambert_sum(Real::parse("1e50"), 1, Real(1), Real(0), 1).value.re < tenth_power(49));
        CHECK_THROWS_AS(lambert_sum(Real(1), 1, Real(1), Real(0), 1), ConvergenceError);
    }

    TEST_CASE("imaginary pole series") {
        PrecisionGuard g(35);
        Real two_pi = const_pi() * Real(2);
        // the weight vanishes term by term at a = 2
        Real ln2 = log(Real(2));
        SeriesResult z = imaginary_pole_series(Real(2), [&](long k) {
            Complex w(Real(0), two_pi * Real(k) / ln2);
            return (Complex(1) - pow(Real(2), -w)) * gamma(w);
        });
        CHECK(abs(z.value) < tenth_power(30));
        PoleSeriesOptions opt;
        CHECK_THROWS_AS(imaginary_pole_series(Real(1) + tenth_power(3), [](long) { return Complex(1); }, opt),
                        SlowDecay);
    }

    TEST_CASE("pole series truncation is honest when the cutoff doubles") {
        PrecisionGuard g(30);
        Real a(3);
        Real l = log(a);
        auto w = [&](long k) {
            Complex s(Real(0), const_pi() * Real(2 * k) / l);
            return gamma(s) * zeta(s);
        };
        SeriesResult s = imaginary_pole_series(a, w);
        Complex direct(0);
        for (long k = 1; k <= 2 * s.terms_used; ++k) direct += w(k);
        CHECK(abs(direct - s.value) <= s.tail_bound + tenth_power(28));
    }

    TEST_CASE("alternating factorial series") {
        PrecisionGuard g(45);
        auto term = [](long k) {
            Real t(1);
            for (long j = 1; j <= k; ++j) t = t / Real(j);
            t = t / (pow(Real(2), k) - Real(1));
            return Complex(k % 2 ? -t : t);
        };
        SeriesResult s = alternating_factorial_series(term, 1, Real(1), Real(1));
        CHECK(agree(s.value, "-0.85461332089277831405532738201815034858762101522318") >= 43);
        Real rhs(0);
        for (int j = 1; j < 200; ++j) rhs += expm1(-pow(Real(2), -j));
        CHECK(abs(s.value.re - rhs) < tenth_power(43));
        // Σ (-1)^k ζ(2k+1)/(2k+1)!
        auto zterm = [](long k) {
            Real t = zeta(Real(2 * k + 1));
            for (long j = 2; j <= 2 * k + 1; ++j) t = t / Real(j);
            return Complex(k % 2 ? -t : t);
        };
        SeriesResult z = alternating_factorial_series(zterm, 1, Real(2), Real(1));
        CHECK(agree(z.value, "-0.19189908550626482798114607722643984340430910237755") >= 43);
    }

    TEST_CASE("euler-maclaurin sum") {
        PrecisionGuard g(45);
        EmTerm f;
        f.value = [](const Real& t) {
            Real u = Real(1) / t;
            return sin(u) - u;
        };
        f.jet = [](const Jet& t) {
            Jet u = pow(t, Real(-1));
            return sin(u) - u;
        };
        f.tail_integral = [](long M) {
            Real Mr(M), sum(0), fact(6);
            for (long k = 1; k < 40; ++k) {
                if (k > 1) fact = fact * Real(2 * k) * Real(2 * k + 1);
                Real t = pow(Mr, -2 * k) / (fact * Real(2 * k));
                sum += k % 2 ? -t : t;
            }
            return sum;
        };
        f.completely_monotone = false;
        SeriesResult s = em_sum(f, 1, em_default_point());
        CHECK(agree(s.value, "-0.19189908550626482798114607722643984340430910237755") >= 42);
        CHECK(em_default_point() >= 32);
    }

    TEST_CASE("jets give Taylor coefficients") {
        PrecisionGuard g(40);
        Jet t = Jet::variable(6, Real(1) / Real(2));
        Jet e = exp(t);
        // exp^{(k)}(1/2) = e^{1/2}
        for (int k = 0; k <= 6; ++k) CHECK(digits_agreed(Complex(e.derivative(k)), Complex(exp(Real(1) / Real(2))), 40) >= 37);
        Jet s = sin(t) * sin(t) + cos(t) * cos(t);
        CHECK(digits_agreed(Complex(s[0]), Complex(1), 40) >= 38);
        for (int k = 1; k <= 6; ++k) CHECK(abs(s[k]) < tenth_power(37));
        Jet l = log(exp(t));
        CHECK(abs(l[1] - Real(1)) < tenth_power(37));
        CHECK(abs(l[3]) < tenth_power(37));
    }

    TEST_CASE("telescoping check") {
        PrecisionGuard g(45);
        SeriesResult t = telescoping_check(Real(1));
        CHECK(agree(t.value, "1.8413471884155846378908270454329992057633112533011") >= 43);
        for (const char* b : {"0.5", "2", "7"}) {
            Real bb = Real::parse(b);
            Real h = sinh(bb / Real(2));
            CHECK(digits_agreed(telescoping_check(bb).value, Complex(Real(1) / (h * h * 2L)), 45) >= 43);
        }
    }

    TEST_CASE("hyperpower sum") {
        PrecisionGuard g(45);
        // Σ_{n≥0} 1/sinh(2ⁿ) = coth(1/2) - 1
        SeriesResult s = hyperpower_sum(Real(2), [](const Real& x) { return Complex(Real(1) / sinh(x)); });
        CHECK(agree(s.value, "1.1639534137386528487700040102180231170937386021508") >= 43);
    }

    TEST_CASE("context overloads") {
        auto ctx = PrecisionContext::for_target(30);
        SeriesResult w = omega(const_pi(), Real(2), ctx);
        PrecisionGuard g(45);
        CHECK(agree(w.value, "0.043217405606654007287658060755111728535102853622609") >= 30);
    }
}
