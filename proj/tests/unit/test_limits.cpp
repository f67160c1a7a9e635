#include <doctest.h>

#include <sstream>

#include "check.hpp"
#include "mellin/errors.hpp"
#include "mellin/limits.hpp"

using namespace mellin;
using mellin::test::agree;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_SUITE("limits") {
    TEST_CASE("sequence terms against independent values") {
        PrecisionGuard g(45);
        // Σ e^{-j} - 1 = 1/(e - 1) - 1
        Real f21 = sequence_term(LimitSequenceSpec::fig2("1"), 1);
        CHECK(digits_agreed(Complex(f21), Complex(Real(1) / expm1(Real(1)) - Real(1)), 45) >= 43);
        Real f23 = sequence_term(LimitSequenceSpec::fig2("2"), 3);
        CHECK(agree(f23, "-0.16760034069567601034273267156706390870471737249002682347495") >= 42);
        Real f12 = sequence_term(LimitSequenceSpec::fig1(), 2);
        CHECK(agree(f12, "-1.22764268686739475610672469209450646205202864") >= 42);
    }

    TEST_CASE("claimed limits") {
        PrecisionGuard g(40);
        Real e = exp(Real(1));
        CHECK(digits_agreed(Complex(LimitSequenceSpec::fig1().claimed_limit()),
                            Complex(Real(1) / (Real(2) - e * 2L)), 40) >= 38);
        CHECK(digits_agreed(Complex(LimitSequenceSpec::fig2("3").claimed_limit()),
                            Complex(-Real(1) / (exp(Real(3)) * 2L)), 40) >= 38);
        CHECK(LimitSequenceSpec::parse("fig2", "1/2").b_value() == Real(1) / Real(2));
        CHECK_THROWS(LimitSequenceSpec::parse("fig3"));
    }

    TEST_CASE("domain and precision ceiling") {
        auto ctx = PrecisionContext::for_target(20);
        CHECK_THROWS_AS(sequence_values(LimitSequenceSpec::fig1(), {1}, ctx), DomainError);
        LimitOptions opt;
        opt.max_digits = 60;
        CHECK_THROWS_AS(sequence_values(LimitSequenceSpec::fig2("1"), {2, 40}, ctx, opt), PrecisionCeiling);
        CHECK(working_digits_for(10, 20) == 20 + 7 + 15);
        CHECK(working_digits_for(1, 20) == 35);
    }

    TEST_CASE("residuals shrink toward the limit") {
        auto ctx = PrecisionContext::for_target(20);
        LimitReport r = limit_report(LimitSequenceSpec::fig2("1"), parse_index_range("2..8"), ctx);
        CHECK(r.pass);
        REQUIRE(r.residuals.size() == 7);
        CHECK(r.residuals.back() < r.residuals.front());
        LimitReport f1 = limit_report(LimitSequenceSpec::fig1(), parse_index_range("6..10"), ctx);
        CHECK(f1.pass);
    }

    TEST_CASE("figure csv") {
        auto ctx = PrecisionContext::for_target(15);
        std::string csv = figure_csv({LimitSequenceSpec::fig2("1"), LimitSequenceSpec::fig2("2")}, {1, 2, 3}, ctx);
        auto rows = lines_of(csv);
        REQUIRE(rows.size() == 7);
        CHECK(rows[0] == "n,value,limit,residual,digits");
        CHECK(rows[1].rfind("1,-0.41802329313067", 0) == 0);
        std::string empty = figure_csv({LimitSequenceSpec::fig1()}, {}, ctx);
        CHECK(lines_of(empty).size() == 1);
    }

    TEST_CASE("auxiliary sequences") {
        PrecisionGuard g(40);
        CHECK(agree(sbid_sum(Real(2), 200), "-0.068918043593611153232") >= 20);
        CHECK_THROWS_AS(sbid_sum(Real(2), 0), DomainError);
        Real r10 = abs(as2_ratio(Real(1), 10) - Real(1));
        Real r20 = abs(as2_ratio(Real(1), 20) - Real(1));
        CHECK(r20 < r10);
        Real e8 = abs(fig1_envelope_ratio(8) - Real(1));
        Real e12 = abs(fig1_envelope_ratio(12) - Real(1));
        CHECK(e12 < e8);
    }

    TEST_CASE("aitken on a geometric sequence") {
        PrecisionGuard g(30);
        std::vector<SequencePoint> pts;
        for (long n = 1; n <= 3; ++n) pts.push_back({n, Real(2) + pow(Real(1) / Real(3), n), 30});
        CHECK(digits_agreed(Complex(aitken_estimate(pts)), Complex(2), 30) >= 28);
    }

    TEST_CASE("index ranges") {
        CHECK(parse_index_range("2..5") == std::vector<long>{2, 3, 4, 5});
        CHECK(parse_index_range("2..10:4") == std::vector<long>{2, 6, 10});
        CHECK(parse_index_range("1,3,7..8") == std::vector<long>{1, 3, 7, 8});
        CHECK(parse_index_range("").empty());
        CHECK_THROWS_AS(parse_index_range("2..x"), ConfigError);
        CHECK_THROWS_AS(parse_index_range("2..5:0"), ConfigError);
    }
}
