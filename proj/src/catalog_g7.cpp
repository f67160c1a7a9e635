#include <cmath>

#include "catalog_common.hpp"
#include "mellin/limits.hpp"

namespace mellin::cat {

namespace {

Estimate rc(const Real& x) { return Estimate(Complex(x)); }

// ζ(k z) b^{-z} Γ(z), the integrand family of the exponential transform pair
Integrand zbg(const Real& k, const Real& b) {
    return [k, b](const Complex& z) { return zeta(z * k) * cpow(b, -z) * gamma(z); };
}

DecayModel zbg_decay(double k, double c) { return DecayModel::gamma_like(c, zeta_growth(k * c)); }

Estimate full_line(const EvalContext& e, const Real& c, const Integrand& f, const DecayModel& d) {
    return rc(two_pi()) * line(e, c, f, d);
}
Estimate full_re(const EvalContext& e, const Real& c, const Integrand& f, const DecayModel& d) {
    return rc(two_pi()) * line_re(e, c, f, d);
}
Estimate full_re_pole(const EvalContext& e, const Real& c, const Integrand& f, const DecayModel& d) {
    return rc(two_pi()) * line_re_pole(e, c, f, d);
}

// b^{1/s} Γ(1 - 1/s)
Real omega_residue(const Real& b, const Real& s) { return pow(b, Real(1) / s) * gamma(Real(1) - Real(1) / s); }

// Σ_{j=0}^{N} ζ(k j)(-b)^j/j!
Real zeta_poly(const Real& k, const Real& b, long N) {
    Real sum(0), pw(1);
    for (long j = 0; j <= N; ++j) {
        if (j > 0) pw = pw * (-b) / Real(j);
        sum += zeta(k * j) * pw;
    }
    return sum;
}

long strip_index(const Real& c) { return (-floor(c)).to_long() - 1; }

void check_pos(const Params& p, const char* name) {
    require(p.real(name).sign() > 0, std::string("requires ") + name + " > 0");
}
void check_s_negative(const Params& p) { require(p.real("s").sign() < 0, "requires s < 0"); }

TrendData from_report(const LimitReport& r) { return r.trend(); }

void check_indices(const Params& p, long lo) {
    for (long n : index_param(p, "n")) require(n >= lo, "requires n >= " + std::to_string(lo));
}

// ratio(n) → 1
TrendData ratio_trend(const std::vector<long>& ns, const std::function<Real(long)>& ratio) {
    TrendData t;
    t.limit = Real(1);
    for (long n : ns) {
        Real v = ratio(n);
        t.points.push_back(TrendPoint{n, v, abs(v - Real(1))});
    }
    return t;
}

// ∫ ζ(-N-1/2+iv) b^{N+1/2-iv} Γ(-N-1/2+iv) dv
Estimate t2e_integral(const EvalContext& e, const Real& b, long N) {
    Real c = -Real(N) - half();
    return full_re(e, c, zbg(Real(1), b), zbg_decay(1.0, c.to_double()));
}

struct T3nCase {
    const char* id;
    const char* p;
    const char* label;
    const char* lhs;
    const char* rhs;
};

}  // namespace

void add_g7(std::vector<IdentityRecord>& out) {
    {
        auto r = make(
            "T2x", "G7", "Exponential transform pair on a vertical line, -1 < s < 0",
            "(1/2π)∫ ζ(-s(c+iv)) b^{-c-iv} Γ(c+iv) dv", "ω(b, -s) = Σ_{j≥1} e^{-b j^{-s}}",
            {{"b", "2", "b > 0"}, {"s", "-1/2", "-1 < s < 0"}, {"c", "3", "c > -1/s"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b"), s = e.params.real("s"), c = e.params.real("c");
                return line_re(e, c, zbg(-s, b), zbg_decay(-s.to_double(), c.to_double()));
            },
            [](const EvalContext& e) { return omega_sum(e.params.real("b"), -e.params.real("s")); });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            Real s = p.real("s");
            require(s.sign() < 0 && s > Real(-1), "requires -1 < s < 0");
            require(p.real("c") > -(Real(1) / s), "requires c > -1/s");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Jb", "G7", "Generalized Riemann integral of the theta analogue", "∫_0^∞ x^{b-1} Σ_{j≥1} e^{-x j^{-s}} dx",
            "ζ(-b s) Γ(b)", {{"b", "3", "b > 0 and -b s > 1"}, {"s", "-1/2", "s < 0"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b"), sigma = -e.params.real("s");
                auto h = [b, sigma](const Real& x) { return pow(x, b - Real(1)) * omega(x, sigma).value.re; };
                return mellin_half_line(e, h, b.to_double() - 1.0 / sigma.to_double());
            },
            [](const EvalContext& e) {
                Real b = e.params.real("b"), s = e.params.real("s");
                return rc(zeta(-(b * s)) * gamma(b));
            });
        r.check = [](const Params& p) {
            check_s_negative(p);
            check_pos(p, "b");
            require(-(p.real("b") * p.real("s")) > Real(1), "requires -b s > 1 (integrable at x = 0)");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make("T2xa", "G7", "Residue term for 0 < c < -1/s", "(1/2π)∫ ζ(-s(c+iv)) b^{-c-iv} Γ(c+iv) dv",
                      "ω(b, -s) - b^{1/s} Γ(1 - 1/s)",
                      {{"b", "2", "b > 0"}, {"s", "-2", "s < 0"}, {"c", "1/4", "0 < c < -1/s"}},
                      [](const EvalContext& e) {
                          Real b = e.params.real("b"), s = e.params.real("s"), c = e.params.real("c");
                          return line_re(e, c, zbg(-s, b), zbg_decay(-s.to_double(), c.to_double()));
                      },
                      [](const EvalContext& e) {
                          Real b = e.params.real("b"), s = e.params.real("s");
                          return omega_sum(b, -s) - rc(omega_residue(b, s));
                      });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            check_s_negative(p);
            Real c = p.real("c");
            require(c.sign() > 0 && c < -(Real(1) / p.real("s")), "requires 0 < c < -1/s");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "T2c", "G7", "Line moved N+1 units left", "∫ ζ(-s(c+iv)) b^{-c-iv} Γ(c+iv) dv",
            "2π (ω(b, -s) - Σ_{j=0}^{N} ζ(sj)(-b)^j/j! - b^{1/s} Γ(1 - 1/s)), -N-1 < c < -N",
            {{"b", "2", "b > 0"}, {"s", "-1/2", "s < 0"}, {"c", "-3/2", "c < 0, not an integer"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b"), s = e.params.real("s"), c = e.params.real("c");
                return full_re(e, c, zbg(-s, b), zbg_decay(-s.to_double(), c.to_double()));
            },
            [](const EvalContext& e) {
                Real b = e.params.real("b"), s = e.params.real("s"), c = e.params.real("c");
                Real fin = zeta_poly(s, b, strip_index(c)) + omega_residue(b, s);
                return rc(two_pi()) * (omega_sum(b, -s) - rc(fin));
            });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            check_s_negative(p);
            Real c = p.real("c");
            require(c.sign() < 0 && !c.is_integer(), "requires c < 0, not an integer");
            require(c > Real(-12), "requires c > -12");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make("T2b1", "G7", "s = -1 on either side of the zeta pole", "∫ ζ(c+iv) b^{-c-iv} Γ(c+iv) dv",
                      "2π (1/(e^b - 1) - X/b), X = 0 for c > 1, X = 1 for 0 < c < 1",
                      {{"b", "2", "b > 0"}, {"c", "3/2", "c > 0, c != 1"}},
                      [](const EvalContext& e) {
                          Real b = e.params.real("b"), c = e.params.real("c");
                          return full_re(e, c, zbg(Real(1), b), zbg_decay(1.0, c.to_double()));
                      },
                      [](const EvalContext& e) {
                          Real b = e.params.real("b"), c = e.params.real("c");
                          Real X = c > Real(1) ? Real(0) : Real(1);
                          return rc(two_pi() * (Real(1) / expm1(b) - X / b));
                      });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            Real c = p.real("c");
            require(c.sign() > 0 && c != Real(1), "requires c > 0 and c != 1");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make("T2b2", "G7", "Line through the zeta pole, imaginary singular part",
                      "∫ Re(ζ(1+iv) b^{-iv} Γ(1+iv)) dv", "2π b (1/(e^b - 1) - 1/(2b))", {{"b", "1", "b > 0"}},
                      [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          auto f = [b](const Complex& z) { return zeta(z) * cpow(b, Complex(1) - z) * gamma(z); };
                          return full_re_pole(e, Real(1), f, zbg_decay(1.0, 1.0));
                      },
                      [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          return rc(two_pi() * b * (Real(1) / expm1(b) - Real(1) / (b * 2L)));
                      });
        r.check = [](const Params& p) { check_pos(p, "b"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "T2B", "G7", "Half residue at c = 0", "∫_0^∞ Re(ζ(isv) b^{iv} Γ(-iv)) dv",
            "π ω(b, -s) - π b^{1/s} Γ(1 - 1/s) + π/4", {{"b", "1", "b > 0"}, {"s", "-1", "s < 0"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b"), s = e.params.real("s");
                auto f = [b, s](const Complex& z) { return zeta(z * s) * cpow(b, z) * gamma(-z); };
                // (1/2π)∫_{-∞}^{∞} = (1/π)∫_0^∞ for an even real part
                return rc(pi()) * line_re_pole(e, Real(0), f, DecayModel::gamma_like(0.0, zeta_growth(0.0)));
            },
            [](const EvalContext& e) {
                Real b = e.params.real("b"), s = e.params.real("s");
                return rc(pi()) * omega_sum(b, -s) - rc(pi() * omega_residue(b, s) - pi() / 4L);
            });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            check_s_negative(p);
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make("V3sm1", "G7", "s = -1 at c = 0 (constant +1/4 from the half residue)",
                      "∫ ζ(iv) b^{-iv} Γ(iv) dv", "2π (1/(e^b - 1) - 1/b + 1/4)", {{"b", "2", "b > 0"}},
                      [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          return full_re_pole(e, Real(0), zbg(Real(1), b), zbg_decay(1.0, 0.0));
                      },
                      [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          return rc(two_pi() * (Real(1) / expm1(b) - Real(1) / b + Real(1) / Real(4)));
                      });
        r.check = [](const Params& p) { check_pos(p, "b"); };
        out.push_back(std::move(r));
    }
    out.push_back(make("T2b3b", "G7", "Critical line at b = 1", "∫ ζ(1/2+iv) Γ(1/2+iv) dv", "2π (1/(e - 1) - 1)", {},
                       [](const EvalContext& e) {
                           return full_re(e, half(), zbg(Real(1), Real(1)), zbg_decay(1.0, 0.5));
                       },
                       [](const EvalContext&) {
                           return rc(two_pi() * (Real(1) / expm1(Real(1)) - Real(1)));
                       }));

    // s = -2: theta function transform
    auto t3b_lhs = [](const EvalContext& e) {
        Real b = e.params.real("b"), c = e.params.real("c");
        // integrand written in w = c - iv
        auto f = [b, c](const Complex& z) {
            Complex w = Complex(c * 2L) - z;
            return zeta(w * Real(2)) * cpow(b, -w) * gamma(w);
        };
        return full_line(e, c, f, zbg_decay(2.0, c.to_double()));
    };
    // ∫ ζ(1 - 2c + 2iv) Γ(1/2 - c + iv) (π²/b)^{-iv} dv
    auto t3b1_integral = [](const EvalContext& e) {
        Real b = e.params.real("b"), c = e.params.real("c");
        Real c1 = half() - c;
        Real base = pi() * pi() / b;
        auto f = [c1, base](const Complex& z) {
            return zeta(z * Real(2)) * gamma(z) * cpow(base, Complex(c1) - z);
        };
        return full_line(e, c1, f, zbg_decay(2.0, c1.to_double()));
    };
    auto t3_params = [] { return std::vector<ParamSpec>{{"b", "2", "b > 0"}, {"c", "1/4", "0 < c < 1/2"}}; };
    auto t3_check = [](const Params& p) {
        check_pos(p, "b");
        Real c = p.real("c");
        require(c.sign() > 0 && c < half(), "requires 0 < c < 1/2");
    };
    {
        auto r = make("T3B", "G7", "s = -2 inside the strip", "∫ ζ(2c - 2iv) b^{-c+iv} Γ(c - iv) dv",
                      "2π Σ_{j≥1} e^{-b j²} - π^{3/2}/√b", t3_params(), t3b_lhs, [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          return rc(two_pi()) * omega_sum(b, Real(2)) - rc(pow(pi(), Real(3) / Real(2)) / sqrt(b));
                      });
        r.check = t3_check;
        out.push_back(std::move(r));
    }
    {
        auto r = make("T3Int", "G7", "Riemann function reflection of the s = -2 integral",
                      "∫ ζ(2c - 2iv) b^{-c+iv} Γ(c - iv) dv",
                      "b^{-c} π^{2c - 1/2} ∫ ζ(1 - 2c + 2iv) Γ(1/2 - c + iv) (π²/b)^{-iv} dv", t3_params(), t3b_lhs,
                      [t3b1_integral](const EvalContext& e) {
                          Real b = e.params.real("b"), c = e.params.real("c");
                          return rc(pow(b, -c) * pow(pi(), c * 2L - half())) * t3b1_integral(e);
                      });
        r.check = t3_check;
        out.push_back(std::move(r));
    }
    {
        auto r = make("T3B1", "G7", "Reflected variables c → 1/2 - c, b → π²/b",
                      "∫ ζ(1 - 2c + 2iv) Γ(1/2 - c + iv) (π²/b)^{-iv} dv",
                      "2π^{2-2c} b^{c-1/2} Σ_{j≥1} e^{-π² j²/b} - π^{3/2-2c} b^c", t3_params(), t3b1_integral,
                      [](const EvalContext& e) {
                          Real b = e.params.real("b"), c = e.params.real("c");
                          Real p = pi();
                          return rc(pow(p, Real(2) - c * 2L) * pow(b, c - half()) * 2L) *
                                     omega_sum(p * p / b, Real(2)) -
                                 rc(pow(p, Real(3) / Real(2) - c * 2L) * pow(b, c));
                      });
        r.check = t3_check;
        out.push_back(std::move(r));
    }
    {
        auto r = make("SxId2", "G7", "Poisson-Jacobi transform, sum form",
                      "Σ_{j≥1} e^{-π b j²} - b^{-1/2} Σ_{j≥1} e^{-π j²/b}", "b^{-1/2}/2 - 1/2", {{"b", "1/2", "b > 0"}},
                      [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          return omega_sum(pi() * b, Real(2)) - rc(Real(1) / sqrt(b)) * omega_sum(pi() / b, Real(2));
                      },
                      [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          return rc((Real(1) / sqrt(b) - Real(1)) / 2L);
                      });
        r.check = [](const Params& p) { check_pos(p, "b"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make("PJt", "G7", "Poisson-Jacobi transform, theta form", "θ₃(0, b) = Σ_{j∈ℤ} e^{-π b j²}",
                      "b^{-1/2} θ₃(0, 1/b)", {{"b", "1/2", "b > 0"}},
                      [](const EvalContext& e) {
                          return Estimate::of(theta3_series(exp(-(pi() * e.params.real("b")))));
                      },
                      [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          return rc(Real(1) / sqrt(b)) *
                                 (rc(Real(1)) + rc(Real(2)) * omega_sum(pi() / b, Real(2)));
                      });
        r.check = [](const Params& p) { check_pos(p, "b"); };
        out.push_back(std::move(r));
    }

    // s = -2n
    auto g_half = [](const Real& n) { return gamma(Real(1) + Real(1) / (n * 2L)); };
    {
        auto r = make(
            "T2nA", "G7", "s = -2n for any c", "∫ Re(ζ(2n(c+iv)) b^{-iv-c} Γ(iv+c)) dv",
            "π (X + 2ω(b, 2n) - 2Y b^{-1/(2n)} Γ(1 + 1/(2n))), X, Y ∈ {1, 1/2, 0} by c against 0 and 1/(2n)",
            {{"b", "pi", "b > 0"}, {"n", "1", "integer n >= 1"}, {"c", "1/5", "-3 < c, c not a negative integer"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b"), c = e.params.real("c");
                long n = e.params.integer("n");
                Real k(2 * n);
                auto f = zbg(k, b);
                DecayModel d = zbg_decay(2.0 * n, c.to_double());
                if (c.is_zero() || c == Real(1) / k) return full_re_pole(e, c, f, d);
                return full_re(e, c, f, d);
            },
            [g_half](const EvalContext& e) {
                Real b = e.params.real("b"), c = e.params.real("c");
                Real nn(e.params.integer("n"));
                Real q = Real(1) / (nn * 2L);
                Real X = c.sign() < 0 ? Real(1) : (c.is_zero() ? half() : Real(0));
                Real Y = c < q ? Real(1) : (c == q ? half() : Real(0));
                return rc(pi()) * (rc(X) + rc(Real(2)) * omega_sum(b, nn * 2L) -
                                   rc(Y * pow(b, -q) * g_half(nn) * 2L));
            });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            require(p.integer("n") >= 1, "requires integer n >= 1");
            Real c = p.real("c");
            require(c > Real(-3), "requires c > -3");
            require(!(c.sign() < 0 && c.is_integer()), "requires c not a negative integer");
        };
        out.push_back(std::move(r));
    }
    const T3nCase cases[] = {
        {"T3nA", "-1/2", "p < 0", "∫ ζ(2p + 2ivn) b^{-iv} Γ(p/n + iv) dv",
         "π b^{p/n} (1 + 2ω(b, 2n) - 2b^{-1/(2n)} Γ(1 + 1/(2n)))"},
        {"T3nB", "1", "p > 1/2", "∫ Re(ζ(2p + 2ivn) b^{-iv} Γ(p/n + iv)) dv", "2π b^{p/n} ω(b, 2n)"},
        {"T3nC", "1/2", "p = 1/2", "∫ Re(ζ(1 + 2ivn) b^{-iv} Γ(1/(2n) + iv)) dv",
         "π (2b^{1/(2n)} ω(b, 2n) - Γ(1 + 1/(2n)))"},
        {"T3nD", "1/4", "0 < p < 1/2", "∫ Re(ζ(2p + 2ivn) b^{-iv} Γ(p/n + iv)) dv",
         "2π b^{p/n} (ω(b, 2n) - b^{-1/(2n)} Γ(1 + 1/(2n)))"},
        {"T3nE", "0", "p = 0", "∫ Re(ζ(2ivn) b^{-iv} Γ(iv)) dv",
         "π (1/2 + 2ω(b, 2n) - 2b^{-1/(2n)} Γ(1 + 1/(2n)))"},
    };
    for (int i = 0; i < 5; ++i) {
        const T3nCase& tc = cases[i];
        char which = tc.id[3];
        std::vector<ParamSpec> params{{"b", "pi", "b > 0"}, {"n", "1", "integer n >= 1"}};
        if (which != 'C' && which != 'E') params.push_back({"p", tc.p, tc.label});
        auto r = make(
            tc.id, "G7", std::string("c = p/n family, ") + tc.label, tc.lhs, tc.rhs, params,
            [which](const EvalContext& e) {
                Real b = e.params.real("b");
                long n = e.params.integer("n");
                Real nn(n);
                Real p = which == 'C' ? half() : which == 'E' ? Real(0) : e.params.real("p");
                Real c = p / nn;
                // ζ(2n z) b^{-(z - c)} Γ(z) on Re z = p/n
                auto f = [nn, b, c](const Complex& z) {
                    return zeta(z * (nn * 2L)) * cpow(b, Complex(c) - z) * gamma(z);
                };
                DecayModel d = zbg_decay(2.0 * n, c.to_double());
                if (which == 'A') return full_line(e, c, f, d);
                if (which == 'C' || which == 'E') return full_re_pole(e, c, f, d);
                return full_re(e, c, f, d);
            },
            [which, g_half](const EvalContext& e) {
                Real b = e.params.real("b");
                Real nn(e.params.integer("n"));
                Real p = which == 'C' ? half() : which == 'E' ? Real(0) : e.params.real("p");
                Real q = Real(1) / (nn * 2L);
                Estimate w = omega_sum(b, nn * 2L);
                Real G = g_half(nn);
                Real bp = pow(b, p / nn);
                switch (which) {
                    case 'A':
                        return rc(pi() * bp) * (rc(Real(1)) + rc(Real(2)) * w - rc(pow(b, -q) * G * 2L));
                    case 'B': return rc(two_pi() * bp) * w;
                    case 'C': return rc(pi()) * (rc(pow(b, q) * 2L) * w - rc(G));
                    case 'D': return rc(two_pi() * bp) * (w - rc(pow(b, -q) * G));
                    default: return rc(pi()) * (rc(half()) + rc(Real(2)) * w - rc(pow(b, -q) * G * 2L));
                }
            });
        r.check = [which](const Params& p) {
            check_pos(p, "b");
            require(p.integer("n") >= 1, "requires integer n >= 1");
            if (which == 'C' || which == 'E') return;
            Real v = p.real("p");
            switch (which) {
                case 'A': require(v.sign() < 0 && v > Real(-3), "requires -3 < p < 0"); break;
                case 'B': require(v > half() && v < Real(6), "requires 1/2 < p < 6"); break;
                default: require(v.sign() > 0 && v < half(), "requires 0 < p < 1/2");
            }
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Tc1a", "G7", "s = -1/n with c = -n - 1/2",
            "∫ Re(ζ(-1 - 1/(2n) + iv/n) b^{n+1/2-iv} Γ(-n-1/2+iv)) dv + 2π Σ_{j=0}^{n} ζ(-j/n)(-b)^j/j!",
            "2π Σ_{j≥1} e^{-b j^{1/n}} - 2π b^{-n} Γ(1 + n)", {{"b", "2", "b > 0"}, {"n", "1", "integer n >= 1"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                long n = e.params.integer("n");
                Real nn(n), c = -nn - half();
                Estimate I = full_re(e, c, zbg(Real(1) / nn, b), zbg_decay(1.0 / n, c.to_double()));
                return I + rc(two_pi() * zeta_poly(-(Real(1) / nn), b, n));
            },
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                long n = e.params.integer("n");
                Real nn(n);
                return rc(two_pi()) * omega_sum(b, Real(1) / nn) - rc(two_pi() * gamma(nn + Real(1)) / pow(b, n));
            });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            long n = p.integer("n");
            require(n >= 1 && n <= 8, "requires integer 1 <= n <= 8");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Q1", "G7", "s = -2n with c = -n - 1/2",
            "b^{n+1/2} ∫ ζ(2inv - 2n² - n) b^{-iv} Γ(-n-1/2+iv) dv",
            "π + 2π (Σ_{j≥1} e^{-b j^{2n}} - b^{-1/(2n)} Γ(1 + 1/(2n)))",
            {{"b", "2", "b > 0"}, {"n", "1", "integer n >= 1"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                long n = e.params.integer("n");
                Real nn(n), c = -nn - half();
                return full_re(e, c, zbg(nn * 2L, b), zbg_decay(2.0 * n, c.to_double()));
            },
            [g_half](const EvalContext& e) {
                Real b = e.params.real("b");
                Real nn(e.params.integer("n"));
                Real q = Real(1) / (nn * 2L);
                return rc(pi()) + rc(two_pi()) * (omega_sum(b, nn * 2L) - rc(pow(b, -q) * g_half(nn)));
            });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            long n = p.integer("n");
            require(n >= 1 && n <= 4, "requires integer 1 <= n <= 4");
        };
        out.push_back(std::move(r));
    }
    auto q2_lhs = [](const EvalContext& e) {
        Real b = e.params.real("b");
        auto f = [b](const Complex& t) { return cpow(b, -t) * gamma(t - Complex(half())); };
        return line_re(e, Real(0), f, DecayModel::gamma_like(-0.5));
    };
    {
        auto r = make("Q2", "G7", "Limit n → 0 of the s = -2n case", "(1/2π)∫ b^{-iv} Γ(-1/2 + iv) dv",
                      "b^{-1/2} (e^{-b} - 1)", {{"b", "2", "b > 0"}}, q2_lhs, [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          return rc(expm1(-b) / sqrt(b));
                      });
        r.check = [](const Params& p) { check_pos(p, "b"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Q2c", "G7", "Residues of the wrapped contour", "(1/2πi)∫_{-i∞}^{i∞} b^{-t} Γ(-1/2 + t) dt",
            "b^{-1/2} Σ_{n≥1} (-b)^n/n!", {{"b", "2", "b > 0"}}, q2_lhs, [](const EvalContext& e) {
                Real b = e.params.real("b");
                auto term = [b](long n) {
                    Real t(1);
                    for (long j = 1; j <= n; ++j) t = t * (-b) / Real(j);
                    return Complex(t);
                };
                Estimate s = Estimate::of(alternating_factorial_series(term, 1, Real(1), b));
                return rc(Real(1) / sqrt(b)) * s;
            });
        r.check = [](const Params& p) { check_pos(p, "b"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "T2Gen", "G7", "s = -(2n+1) with c = -N - 1/2",
            "∫ ζ((n+1/2)(2iv - 2N - 1)) b^{N+1/2-iv} Γ(-N-1/2+iv) dv + 2π Σ_{j=0}^{N} ζ(-(2n+1)j)(-b)^j/j!",
            "2π Σ_{j≥1} e^{-b j^{2n+1}} - 2π b^{-1/(2n+1)} Γ((2n+2)/(2n+1))",
            {{"b", "2", "b > 0"}, {"n", "1", "integer n >= 0"}, {"N", "1", "integer N >= 0"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                long n = e.params.integer("n"), N = e.params.integer("N");
                Real k(2 * n + 1), c = -Real(N) - half();
                Estimate I = full_re(e, c, zbg(k, b), zbg_decay(2.0 * n + 1, c.to_double()));
                return I + rc(two_pi() * zeta_poly(-k, b, N));
            },
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                Real k(2 * e.params.integer("n") + 1);
                return rc(two_pi()) * omega_sum(b, k) -
                       rc(two_pi() * pow(b, -(Real(1) / k)) * gamma((k + Real(1)) / k));
            });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            long n = p.integer("n"), N = p.integer("N");
            require(n >= 0 && n <= 4, "requires integer 0 <= n <= 4");
            require(N >= 0 && N <= 6, "requires integer 0 <= N <= 6");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Tinv", "G7", "Invariance of the integral across a trivial zero",
            "∫ ζ((n+1/2)(2iv - 4N + 1)) b^{-iv} Γ(-2N + 1/2 + iv) dv",
            "b ∫ ζ((n+1/2)(2iv - 4N - 1)) b^{-iv} Γ(-2N - 1/2 + iv) dv",
            {{"b", "2", "b > 0"}, {"n", "1", "integer n >= 0"}, {"N", "1", "integer N >= 1"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                long n = e.params.integer("n"), N = e.params.integer("N");
                Real k(2 * n + 1), c = -Real(2 * N) + half();
                auto f = [k, b, c](const Complex& z) { return zeta(z * k) * cpow(b, Complex(c) - z) * gamma(z); };
                return full_re(e, c, f, zbg_decay(2.0 * n + 1, c.to_double()));
            },
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                long n = e.params.integer("n"), N = e.params.integer("N");
                Real k(2 * n + 1), c = -Real(2 * N) - half();
                auto f = [k, b, c](const Complex& z) { return zeta(z * k) * cpow(b, Complex(c) - z) * gamma(z); };
                return rc(b) * full_re(e, c, f, zbg_decay(2.0 * n + 1, c.to_double()));
            });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            long n = p.integer("n"), N = p.integer("N");
            require(n >= 0 && n <= 4, "requires integer 0 <= n <= 4");
            require(N >= 1 && N <= 3, "requires integer 1 <= N <= 3");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "T2eLIM", "G7", "s = -1 with c = -N - 1/2, before the limit N → ∞",
            "∫ ζ(-N-1/2+iv) b^{N+1/2-iv} Γ(-N-1/2+iv) dv + 2π Σ_{j=0}^{N} ζ(-j)(-b)^j/j!",
            "2π Σ_{j≥1} e^{-bj} - 2π/b", {{"b", "2", "0 < b < 2π"}, {"N", "4", "integer N >= 0"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                long N = e.params.integer("N");
                return t2e_integral(e, b, N) + rc(two_pi() * zeta_poly(Real(-1), b, N));
            },
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                return rc(two_pi()) * omega_sum(b, Real(1)) - rc(two_pi() / b);
            });
        r.check = [](const Params& p) {
            Real b = p.real("b");
            require(b.sign() > 0 && b < two_pi(), "requires 0 < b < 2π");
            long N = p.integer("N");
            require(N >= 0 && N <= 12, "requires integer 0 <= N <= 12");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "But", "G7", "Bernoulli generating function through zeta at negative integers",
            "Σ_{j≥0} ζ(-j)(-b)^j/j!", "1/(e^b - 1) - 1/b", {{"b", "1", "0 < b < 2π"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                auto term = [b](long j) {
                    Real t = zeta(Real(-j)) * pow(-b, j);
                    for (long i = 2; i <= j; ++i) t = t / Real(i);
                    return Complex(t);
                };
                // |ζ(-j) b^j/j!| = 2ζ(j+1) b^j/(2π)^{j+1} ≤ (π²/3) b^j/(2π)^{j+1}
                Real x = b / two_pi();
                auto tail = [x](long k) {
                    return pi() * pi() / Real(3) * pow(x, k) / (two_pi() * (Real(1) - x));
                };
                return series(term, 0, tail);
            },
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                return rc(Real(1) / expm1(b) - Real(1) / b);
            });
        r.check = [](const Params& p) {
            Real b = p.real("b");
            require(b.sign() > 0 && b < two_pi(), "requires 0 < b < 2π");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make("Sexp", "G7", "Geometric series", "Σ_{j≥1} e^{-bj}", "1/(e^b - 1)", {{"b", "1", "b > 0"}},
                      [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          Real q = exp(-b);
                          auto term = [q](long j) { return Complex(pow(q, j)); };
                          auto tail = [q](long k) { return pow(q, k) / (Real(1) - q); };
                          return series(term, 1, tail);
                      },
                      [](const EvalContext& e) { return rc(Real(1) / expm1(e.params.real("b"))); });
        r.check = [](const Params& p) { check_pos(p, "b"); };
        out.push_back(std::move(r));
    }

    // trend records
    {
        auto r = make_trend("T2bIdX", "G7", "n → ∞ of the Bose sum minus ζ(n)Γ(n+1)",
                            "Σ_{j≥1} 1/(e^{j^{1/n}} - 1) - ζ(n) Γ(n + 1) over n", "1/(2 - 2e)",
                            {{"n", "2..12", "index list, n >= 2"}}, [](const EvalContext& e) {
                                return from_report(limit_report(LimitSequenceSpec::fig1(),
                                                                index_param(e.params, "n"), e.ctx));
                            });
        r.check = [](const Params& p) { check_indices(p, 2); };
        out.push_back(std::move(r));
    }
    {
        auto r = make_trend("T2bAsy", "G7", "Stirling-type growth of the Bose sum",
                            "Σ_{j≥1} 1/(e^{j^{1/n}} - 1) / (√(2π) n^{n+1/2} e^{-n}) over n", "1",
                            {{"n", "6..20:2", "index list, n >= 1"}}, [](const EvalContext& e) {
                                return ratio_trend(index_param(e.params, "n"),
                                                   [](long n) { return fig1_envelope_ratio(n); });
                            });
        r.check = [](const Params& p) { check_indices(p, 1); };
        out.push_back(std::move(r));
    }
    {
        auto r = make_trend("SbId", "G7", "Finite zeta sum at negative fractions",
                            "Σ_{j=0}^{n} ζ(-j/n)(-b)^j/j! over n", "-1/(2e^b)",
                            {{"b", "2", "b > 0"}, {"n", "25..200:25", "index list, n >= 1"}},
                            [](const EvalContext& e) {
                                Real b = e.params.real("b");
                                Real lim = Real(-1) / (exp(b) * 2L);
                                TrendData t;
                                t.limit = lim;
                                for (long n : index_param(e.params, "n")) {
                                    Real v = sbid_sum(b, n);
                                    t.points.push_back(TrendPoint{n, v, abs(v - lim)});
                                }
                                return t;
                            });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            check_indices(p, 1);
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make_trend("Sgenf", "G7", "n → ∞ of the theta analogue minus b^{-n}Γ(1+n)",
                            "Σ_{j≥1} e^{-b j^{1/n}} - b^{-n} Γ(1 + n) over n", "-1/(2e^b)",
                            {{"b", "1", "b > 0"}, {"n", "2..10", "index list, n >= 1"}},
                            [](const EvalContext& e) {
                                auto spec = LimitSequenceSpec::fig2(e.params.raw().at("b"));
                                return from_report(limit_report(spec, index_param(e.params, "n"), e.ctx));
                            });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            check_indices(p, 1);
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make_trend("As2", "G7", "Stirling-type growth of the theta analogue",
                            "Σ_{j≥1} e^{-b j^{1/n}} / (√(2πn) (n/(eb))^n) over n", "1",
                            {{"b", "2", "b > 0"}, {"n", "8..24:2", "index list, n >= 1"}},
                            [](const EvalContext& e) {
                                Real b = e.params.real("b");
                                return ratio_trend(index_param(e.params, "n"),
                                                   [b](long n) { return as2_ratio(b, n); });
                            });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            check_indices(p, 1);
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make_trend("T2eLimz", "G7", "The s = -1 integral vanishes as N → ∞",
                            "∫ ζ(-N-1/2+iv) b^{N+1/2-iv} Γ(-N-1/2+iv) dv over N", "0",
                            {{"b", "2", "b > 0"}, {"n", "2..10:2", "index list of N, N >= 0"}},
                            [](const EvalContext& e) {
                                Real b = e.params.real("b");
                                TrendData t;
                                t.limit = Real(0);
                                for (long N : index_param(e.params, "n")) {
                                    Real v = t2e_integral(e, b, N).value.re;
                                    t.points.push_back(TrendPoint{N, v, abs(v)});
                                }
                                return t;
                            });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            for (long N : index_param(p, "n")) require(N >= 0 && N <= 12, "requires 0 <= N <= 12");
        };
        out.push_back(std::move(r));
    }
}

}  // namespace mellin::cat
