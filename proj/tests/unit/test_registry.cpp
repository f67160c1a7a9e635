#include <doctest.h>

#include <set>

#include "check.hpp"
#include "mellin/errors.hpp"
#include "mellin/registry.hpp"

using namespace mellin;
using mellin::test::agree;

TEST_SUITE("registry") {
    TEST_CASE("catalog shape") {
        const auto& all = catalog();
        CHECK(all.size() >= 45);
        std::set<std::string> ids;
        for (const auto& r : all) {
            CHECK_MESSAGE(ids.insert(r.id).second, "duplicate id " << r.id);
            CHECK(!r.lhs_text.empty());
            CHECK(!r.rhs_text.empty());
            CHECK(std::find(group_names().begin(), group_names().end(), r.group) != group_names().end());
            if (r.kind == RecordKind::trend)
                CHECK(static_cast<bool>(r.trend));
            else
                CHECK((r.lhs && r.rhs));
        }
        for (const auto& g : group_names()) CHECK_MESSAGE(!list_identities(g).empty(), "empty group " << g);
    }

    TEST_CASE("filters") {
        auto g3 = list_identities("G3");
        CHECK(g3.size() == 6);
        for (auto* r : g3) CHECK(r->group == "G3");
        CHECK(list_identities("GA").size() == 5);
        auto pre = list_identities("T3n");
        CHECK(pre.size() == 5);
        CHECK(list_identities("nothing-like-this").empty());
        CHECK(find_identity("Ts2") != nullptr);
        CHECK(find_identity("ts2") == nullptr);
        CHECK(list_identities().size() == catalog().size());
    }

    TEST_CASE("verify a record with defaults") {
        auto ctx = PrecisionContext::for_target(40);
        VerificationReport r = verify("Ts2", {}, ctx);
        CHECK(r.pass);
        CHECK(r.status == "pass");
        CHECK(r.digits_agreed >= 40);
        PrecisionGuard g(50);
        CHECK(agree(r.lhs, "1.1639534137386528487700040102180231170937386021508") >= 40);
        CHECK(r.wall_ms >= 0.0);
    }

    TEST_CASE("parameter overrides") {
        auto ctx = PrecisionContext::for_target(30);
        VerificationReport r = verify("eqno6", {{"b", "1"}}, ctx);
        CHECK(r.pass);
        PrecisionGuard g(45);
        CHECK(agree(r.rhs, "1.8413471884155846378908270454329992057633112533011") >= 30);
        CHECK(r.params.at("b") == "1");
        VerificationReport x = verify("X3a", {{"a", "2"}}, ctx);
        CHECK(x.pass);
        CHECK(agree(x.lhs, "0.27940026240596014417053014693406824998201985034083") >= 30);
        VerificationReport c = verify("CosSq", {{"a", "3/2"}}, ctx);
        CHECK(c.pass);
    }

    TEST_CASE("invalid parameters are rejected before evaluation") {
        auto ctx = PrecisionContext::for_target(20);
        CHECK_THROWS_AS(verify("eqno6", {{"b", "-1"}}, ctx), InvalidParams);
        CHECK_THROWS_AS(verify("eqno6", {{"zz", "1"}}, ctx), InvalidParams);
        CHECK_THROWS_AS(verify("eqno6", {{"b", "x"}}, ctx), InvalidParams);
        CHECK_THROWS_AS(verify("NoSuchId", {}, ctx), InvalidParams);
        // -b s > 1 fails for b = 1, s = -1/2
        CHECK_THROWS_AS(verify("Jb", {{"b", "1"}, {"s", "-1/2"}}, ctx), InvalidParams);
        CHECK_THROWS_AS(verify("X3a", {{"a", "1"}}, ctx), InvalidParams);
    }

    TEST_CASE("a contour record") {
        auto ctx = PrecisionContext::for_target(20);
        VerificationReport r = verify("Jb", {{"b", "3"}, {"s", "-1/2"}}, ctx);
        CHECK(r.pass);
        CHECK(r.digits_agreed >= 20);
        CHECK(r.lhs_error < tenth_power(20));
    }

    TEST_CASE("verify_all is sorted and reports each record") {
        auto ctx = PrecisionContext::for_target(20);
        auto reps = verify_all("G3", ctx, 1);
        REQUIRE(reps.size() == 6);
        for (size_t k = 1; k < reps.size(); ++k) CHECK(reps[k - 1].id < reps[k].id);
        for (const auto& r : reps) CHECK_MESSAGE(r.pass, r.id << ": " << r.message);
        auto ga = verify_all("GA", ctx);
        CHECK(ga.size() == 5);
        for (const auto& r : ga) CHECK_MESSAGE(r.pass, r.id << ": " << r.message);
        CHECK(verify_all("nothing-like-this", ctx).empty());
    }

    TEST_CASE("parallel and serial verification agree") {
        auto ctx = PrecisionContext::for_target(20);
        VerifyOptions serial;
        serial.parallel = false;
        VerificationReport a = verify("Ein1", {}, ctx);
        VerificationReport b = verify("Ein1", {}, ctx, serial);
        CHECK(a.lhs.re == b.lhs.re);
        CHECK(a.rhs.re == b.rhs.re);
    }

    TEST_CASE("trend records") {
        auto ctx = PrecisionContext::for_target(20);
        VerificationReport r = verify("SbId", {}, ctx);
        CHECK(r.kind == RecordKind::trend);
        CHECK(r.pass);
        CHECK(trend_decreasing(r.trend));
        TrendData up;
        for (int k = 1; k <= 4; ++k) up.points.push_back({k, Real(k), Real(k)});
        CHECK_FALSE(trend_decreasing(up));
    }

    TEST_CASE("estimate arithmetic propagates errors") {
        PrecisionGuard g(30);
        Estimate a{Complex(Real(2)), tenth_power(10)};
        Estimate b{Complex(Real(3)), tenth_power(12)};
        Estimate s = a + b;
        CHECK(s.value.re == Real(5));
        CHECK(s.error >= tenth_power(10));
        Estimate p = a * b;
        CHECK(p.value.re == Real(6));
        CHECK(p.error >= tenth_power(10) * 3L);
        Estimate q = a / b;
        CHECK(q.error > Real(0));
    }

    TEST_CASE("params parse exact values") {
        PrecisionGuard g(30);
        Params p({{"a", "3/2"}, {"n", "7"}, {"x", "pi"}});
        CHECK(p.real("a") == Real(3) / Real(2));
        CHECK(p.integer("n") == 7);
        CHECK(agree(p.real("x"), "3.14159265358979323846264338327950288") >= 29);
        CHECK_THROWS_AS(p.integer("a"), InvalidParams);
        CHECK_THROWS_AS(p.real("missing"), InvalidParams);
    }
}
