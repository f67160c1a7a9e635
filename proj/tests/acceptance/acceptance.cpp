// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "catalog_common.hpp"
#include "mellin/errors.hpp"
#include "mellin/limits.hpp"
#include "mellin/registry.hpp"
#include "mellin/series.hpp"
#include "mellin/specfun.hpp"
#include "properties.hpp"

using namespace mellin;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string params_text(const ParamMap& m) {
    std::string s;
    for (const auto& [k, v] : m) s += (s.empty() ? "" : ";") + k + "=" + v;
    return s;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

// Collects detail lines; a criterion passes when no check failed.
struct Criterion {
    std::vector<std::string> notes;
    bool ok = true;

    void check(bool cond, const std::string& what) {
        notes.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
        ok = ok && cond;
    }

    // Registry verification to `digits`, optionally within `max_s` seconds
    // and with |lhs - rhs| below `abs_tol`.
    void identity(const std::string& id, const ParamMap& params, int digits, double max_s = 0.0,
                  const Real* abs_tol = nullptr) {
        std::string label = id + (params.empty() ? "" : " [" + params_text(params) + "]");
        try {
            auto t0 = std::chrono::steady_clock::now();
            VerificationReport r = verify(id, params, PrecisionContext::for_target(digits));
            double s = seconds_since(t0);
            bool cond = r.pass && r.digits_agreed >= digits;
            std::ostringstream os;
            os << label << " agreed=" << r.digits_agreed << "/" << digits << " diff=" << to_string(r.abs_diff, 3)
               << " t=" << fmt(s) << "s";
            if (max_s > 0.0) {
                cond = cond && s < max_s;
                os << " (limit " << fmt(max_s) << "s)";
            }
            if (abs_tol) {
                cond = cond && r.abs_diff < *abs_tol;
                os << " tol=" << to_string(*abs_tol, 2);
            }
            if (!r.message.empty()) os << " " << r.message;
            check(cond, os.str());
        } catch (const std::exception& ex) {
            check(false, label + " threw " + ex.what());
        }
    }

    void guarded(const std::string& label, const std::function<void()>& f) {
        try {
            f();
        } catch (const std::exception& ex) {
            check(false, label + " threw " + ex.what());
        }
    }
};

struct Entry {
    int number;
    std::string title;
    std::function<void(Criterion&)> run;
};

void c1(Criterion& c) {
    for (const char* b : {"1/2", "1", "2"}) c.identity("eqno6", {{"b", b}}, 30, 1.0);
}

void c2(Criterion& c) { c.identity("Ts2", {}, 40, 1.0); }

void c3(Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    for (const char* a : {"2", "3"})
        for (const char* id : {"X3a", "Eq3", "Eq4", "Pid1"}) c.identity(id, {{"a", a}}, 30);
    double s = seconds_since(t0);
    c.check(s < 5.0, "all eight in " + fmt(s) + "s (limit 5s)");
}

void c4(Criterion& c) {
    for (const char* x : {"1/5", "1/3", "1/2"}) c.identity("Ls", {{"x", x}}, 30);
}

void c5(Criterion& c) {
    for (const char* b : {"1/2", "2", "1"}) c.identity("SxId2", {{"b", b}}, 30);
}

void c6(Criterion& c) {
    Real tol = tenth_power(20);
    c.identity("T2b2", {{"b", "1"}}, 25, 60.0, &tol);
    c.identity("T2b3b", {}, 25, 60.0, &tol);
    c.identity("V3sm1", {{"b", "2"}}, 25, 60.0, &tol);
    c.identity("F5", {}, 25, 60.0, &tol);
}

void c7(Criterion& c) {
    c.identity("Fs2nc0", {{"n", "1"}}, 20);
    c.identity("Ga1", {{"n", "1"}}, 20);
    for (const char* id : {"T3nA", "T3nB", "T3nC", "T3nD", "T3nE"}) c.identity(id, {{"n", "1"}, {"b", "pi"}}, 20);
    c.guarded("omega(pi, 2) closed form", [&] {
        auto ctx = PrecisionContext::for_target(20);
        Complex w = omega(const_pi(), Real(2), ctx).value;
        PrecisionGuard g(ctx.working_digits);
        Real closed = pow(const_pi(), Real(1) / Real(4)) / (gamma(Real(3) / Real(4)) * 2L) - Real(1) / Real(2);
        int d = digits_agreed(w, Complex(closed), ctx.working_digits);
        c.check(d >= 20, "omega(pi, 2) = pi^{1/4}/(2 Gamma(3/4)) - 1/2 agreed=" + std::to_string(d) + "/20");
    });
}

void c8(Criterion& c) {
    c.identity("Jb", {{"b", "2"}, {"s", "-1"}}, 20);
    c.identity("Jb", {{"b", "3"}, {"s", "-1/2"}}, 20);
    c.identity("Jb", {{"b", "3/2"}, {"s", "-2"}}, 20);
    // the classic forms: ζ(b)Γ(b) for s = -1 and ζ(2b)Γ(b) for s = -2
    c.guarded("Jb classic cases", [&] {
        auto ctx = PrecisionContext::for_target(20);
        VerificationReport one = verify("Jb", {{"b", "2"}, {"s", "-1"}}, ctx);
        VerificationReport two = verify("Jb", {{"b", "3/2"}, {"s", "-2"}}, ctx);
        PrecisionGuard g(ctx.working_digits);
        Real p = const_pi();
        int d1 = digits_agreed(one.lhs, Complex(p * p / Real(6)), ctx.working_digits);
        int d2 = digits_agreed(two.lhs, Complex(zeta(Real(3)) * gamma(Real(3) / Real(2))), ctx.working_digits);
        c.check(d1 >= 20, "s = -1: integral vs zeta(2) Gamma(2) agreed=" + std::to_string(d1) + "/20");
        c.check(d2 >= 20, "s = -2: integral vs zeta(3) Gamma(3/2) agreed=" + std::to_string(d2) + "/20");
    });
}

void c9(Criterion& c) {
    for (const char* b : {"1", "2"}) {
        c.identity("J3a", {{"b", b}}, 25);
        c.identity("J3b", {{"b", b}}, 25);
    }
    c.guarded("Bernoulli chain", [&] {
        auto ctx = PrecisionContext::for_target(25);
        PrecisionGuard g(ctx.working_digits);
        Params none(ParamMap{});
        EvalContext e{ctx, none, true};
        Real a(2);
        Estimate chain = cat::appendix_b_chain(e, a);
        // Σ_{k≥0} ζ(-2k-1)/((2k+1)!(a^{2k+1}-1)), terms ~ B_{2k+2}/(2k+2)! ~ (2π)^{-2k}
        Real zsum(0), fact(1);
        for (long k = 0; k < 200; ++k) {
            if (k > 0) fact = fact * Real(2 * k) * Real(2 * k + 1);
            zsum += zeta(Real(-2 * k - 1)) / (fact * (pow(a, 2 * k + 1) - Real(1)));
        }
        // -(1/2) Σ_{k≥1} (coth(a^{-k}/2) - 2a^k)
        Real csum(0);
        for (long k = 1; k < 200; ++k) {
            // coth(x) - 1/x ~ x/3 cancels about 2 log10(1/x) digits
            PrecisionGuard more(ctx.working_digits + (k + 1) * 2 * 30103 / 100000 + 5);
            Real x = pow(a, -k) / Real(2);
            csum += Real(1) / tanh(x) - Real(1) / x;
        }
        csum = -csum / Real(2);
        int dz = digits_agreed(chain.value, Complex(zsum), 25);
        int dc = digits_agreed(chain.value, Complex(csum), 25);
        c.check(dz >= 25, "chain vs zeta-sum side agreed=" + std::to_string(dz) + "/25 value=" + to_string(chain.value.re, 25));
        c.check(dc >= 25, "chain vs coth series agreed=" + std::to_string(dc) + "/25");
        c.check(chain.error < tenth_power(25), "chain error bound " + to_string(chain.error, 3));
    });
}

void c10(Criterion& c) {
    auto ctx = PrecisionContext::for_target(20);
    auto show = [](const LimitReport& r) {
        std::string s;
        size_t k0 = r.residuals.size() / 2;
        for (size_t k = k0; k < r.residuals.size(); ++k)
            s += (s.empty() ? "" : " ") + std::to_string(r.points[k].n) + ":" + to_string(r.residuals[k], 3);
        return s;
    };
    c.guarded("fig1", [&] {
        LimitReport r = limit_report(LimitSequenceSpec::fig1(), parse_index_range("6..12"), ctx);
        c.check(r.pass, "fig1 n=6..12 residuals " + show(r));
    });
    for (const char* b : {"1", "2", "3"}) {
        c.guarded(std::string("fig2 b=") + b, [&] {
            LimitReport r = limit_report(LimitSequenceSpec::fig2(b), parse_index_range("4..10"), ctx);
            c.check(r.pass, std::string("fig2 b=") + b + " n=4..10 residuals " + show(r));
        });
    }
    c.guarded("SbId", [&] {
        PrecisionGuard g(ctx.working_digits);
        Real b(2);
        Real res = abs(sbid_sum(b, 200) + Real(1) / (exp(b) * 2L));
        c.check(res < Real(1) / Real(100), "SbId n=200 b=2 residual " + to_string(res, 3));
    });
}

void c11(Criterion& c) { c.identity("Ex1AB", {}, 30, 5.0); }

void c12(Criterion& c) {
    for (const auto& s : props::all_suites()) {
        c.guarded(s.name, [&] {
            auto t0 = std::chrono::steady_clock::now();
            auto bad = s.run();
            std::string what = std::string(s.name) + ": " + std::to_string(bad.size()) + " violations in " +
                               fmt(seconds_since(t0)) + "s";
            for (const auto& b : bad) what += "\n       " + b;
            c.check(bad.empty(), what);
        });
    }
}

}  // namespace

int main() {
    std::vector<Entry> entries = {
        {1, "telescoping hyperbolic sum at b in {1/2, 1, 2}, 30 digits, < 1 s each", c1},
        {2, "sum of 1/sinh(2^n) = coth(1/2) - 1, 40 digits, < 1 s", c2},
        {3, "Lambert and q-digamma identities at a in {2, 3}, 30 digits, < 5 s", c3},
        {4, "theta identity at x in {0.2, 1/3, 0.5}, 30 digits", c4},
        {5, "Poisson-Jacobi sum form at b in {1/2, 2, 1}, 30 digits", c5},
        {6, "vertical-line quadrature vs closed forms within 1e-20, < 60 s each", c6},
        {7, "half-residue family at n = 1, b = pi, 20 digits", c7},
        {8, "generalized Riemann integral at three (b, s), 20 digits", c8},
        {9, "sinh^{-2} integrals and the Bernoulli chain at a = 2, 25 digits", c9},
        {10, "limit sequences: strictly decreasing residuals", c10},
        {11, "sin(1/k) - 1/k sum vs odd zeta series, 30 digits, < 5 s", c11},
        {12, "property suites with zero violations", c12},
    };
    int failed = 0;
    for (const auto& e : entries) {
        Criterion c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.check(false, std::string("uncaught ") + ex.what());
        }
        double s = seconds_since(t0);
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << e.number << ": " << e.title << " [" << fmt(s)
                  << "s]\n";
        for (const auto& n : c.notes) std::cout << "     " << n << '\n';
        std::cout.flush();
        failed += c.ok ? 0 : 1;
    }
    std::cout << (12 - failed) << "/12 criteria passed\n";
    return failed;
}
