#include <doctest.h>

#include <thread>

#include "check.hpp"
#include "mellin/errors.hpp"
#include "mellin/mpnum.hpp"

using namespace mellin;
using mellin::test::agree;

TEST_SUITE("mpnum") {
    TEST_CASE("precision guard sets and restores the thread precision") {
        PrecisionGuard outer(30);
        long bits = current_bits();
        {
            PrecisionGuard inner(100);
            CHECK(current_digits() >= 100);
            Real x(1);
            CHECK(x.precision() == current_bits());
        }
        CHECK(current_bits() == bits);
    }

    TEST_CASE("precision is per thread") {
        PrecisionGuard g(50);
        long here = current_bits();
        long there = 0;
        std::thread t([&] {
            PrecisionGuard g2(200);
            there = current_bits();
        });
        t.join();
        CHECK(there > here);
        CHECK(current_bits() == here);
    }

    TEST_CASE("context validation") {
        CHECK_NOTHROW(PrecisionContext::for_target(30).validate());
        PrecisionContext bad{30, 30, 10};
        CHECK_THROWS_AS(bad.validate(), ConfigError);
    }

    TEST_CASE("parsing and printing") {
        PrecisionGuard g(40);
        CHECK(Real::parse("1/4") == Real(0.25));
        CHECK(Real::parse("-3") == Real(-3));
        CHECK(agree(Real::parse("pi"), "3.14159265358979323846264338327950288419716939937510") >= 38);
        CHECK_THROWS(Real::parse("abc"));
        CHECK(to_string(Real(1) / Real(4), 10).find("0.25") == 0);
        CHECK(to_string(Real(-2), 5) == "-2");
    }

    TEST_CASE("elementary values") {
        PrecisionGuard g(60);
        auto ctx = PrecisionContext::for_target(50);
        CHECK(eval_elementary(Fn::exp, Complex(0), ctx).re == Real(1));
        Complex c = eval_elementary(Fn::coth, Complex(Real(1) / Real(2)), ctx) - Complex(1);
        CHECK(agree(c, "1.1639534137386528487700040102180231170937386021508") >= 48);
        Complex s = eval_elementary(Fn::sinh, Complex(Real(0), const_pi()), ctx);
        CHECK(abs(s) < tenth_power(50));
        CHECK(agree(Complex(exp(Real(1))), "2.7182818284590452353602874713526624977572470937") >= 45);
        CHECK(agree(Complex(const_euler()), "0.57721566490153286060651209008240243104215933593992") >= 48);
    }

    TEST_CASE("complex functions") {
        PrecisionGuard g(40);
        Complex z(Real(3) / Real(10), Real(2));
        Complex e = exp(log(z));
        CHECK(digits_agreed(e, z, 40) >= 37);
        Complex r = sqrt(z);
        CHECK(digits_agreed(r * r, z, 40) >= 37);
        CHECK(sin_pi(Complex(3)).re.is_zero());
        CHECK(sin_pi(Real(-2)).is_zero());
        CHECK(cos_pi(Real(1) / Real(2)).is_zero());
        Complex p = pow(Real(2), Complex(Real(0), Real(1)));
        CHECK(agree(p, "0.7692389013639721265783299936612707014408959949119638532", "0.6389612763136348011500329114647017842572305378305797295") >= 30);
    }

    TEST_CASE("domain errors at poles and branch points") {
        auto ctx = PrecisionContext::for_target(20);
        CHECK_THROWS_AS(eval_elementary(Fn::log, Complex(0), ctx), DomainError);
        CHECK_THROWS_AS(eval_elementary(Fn::coth, Complex(0), ctx), DomainError);
        CHECK_THROWS_AS(eval_elementary(Fn::csch, Complex(0), ctx), DomainError);
        CHECK_THROWS_AS(fn_from_name("nope"), DomainError);
    }

    TEST_CASE("overflow is reported") {
        auto ctx = PrecisionContext::for_target(20);
        Complex big(Real::parse("1e300000000000"));
        CHECK_THROWS_AS(eval_elementary(Fn::exp, big, ctx), PrecisionOverflow);
    }

    TEST_CASE("refine returns the higher-precision value") {
        auto ctx = PrecisionContext::for_target(30);
        Complex v = refine([](const PrecisionContext&) { return Complex(exp(Real(1))); }, ctx);
        PrecisionGuard g(50);
        CHECK(agree(v, "2.7182818284590452353602874713526624977572470937") >= 40);
        Complex gam = refine([](const PrecisionContext&) { return Complex(const_euler()); },
                             PrecisionContext::for_target(50));
        CHECK(agree(gam, "0.57721566490153286060651209008240243104215933593992") >= 50);
    }

    TEST_CASE("refine detects cancellation") {
        // a result that moves with the working precision above the target
        auto wobble = [](const PrecisionContext& c) { return Complex(Real(1) + tenth_power(c.working_digits - 12)); };
        CHECK_THROWS_AS(refine(wobble, PrecisionContext::for_target(30)), UnstableEvaluation);
    }

    TEST_CASE("digits agreed") {
        PrecisionGuard g(40);
        Complex a(Real(1)), b(Real(1) + tenth_power(20));
        int d = digits_agreed(a, b, 40);
        CHECK(d >= 19);
        CHECK(d <= 21);
        CHECK(digits_agreed(a, a, 40) == 40);
    }
}
