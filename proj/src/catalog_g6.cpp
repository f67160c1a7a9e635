#include <cmath>

#include "catalog_common.hpp"
#include "mellin/limits.hpp"

namespace mellin::cat {

namespace {

// ζ(-s z) Γ(z) ζ(z)
Complex fall_integrand(const Real& s, const Complex& z) { return zeta(-(s * z)) * gamma(z) * zeta(z); }

DecayModel fall_decay(double s, double c) {
    return DecayModel::gamma_like(c, zeta_growth(c) + zeta_growth(-s * c));
}

Estimate fall_integral(const EvalContext& e, const Real& s, const Real& c) {
    auto f = [s](const Complex& z) { return fall_integrand(s, z); };
    return line_re(e, c, f, fall_decay(s.to_double(), c.to_double()));
}

// integrand times (2^{1-z} - 1)
Estimate fall4_integral(const EvalContext& e, const Real& s, const Real& c) {
    auto f = [s](const Complex& z) { return fall_integrand(s, z) * (cpow(Real(2), Complex(1) - z) - Complex(1)); };
    return line_re(e, c, f, fall_decay(s.to_double(), c.to_double()));
}

Estimate rc(const Real& x) { return Estimate(Complex(x)); }

// Γ(-1/s) ζ(-1/s) / s
Real g_term(const Real& s) {
    Real q = -(Real(1) / s);
    return gamma(q) * zeta(q) / s;
}

void check_s_negative(const Params& p) { require(p.real("s").sign() < 0, "requires s < 0"); }

void check_not_integer(const Real& c) {
    require(!c.is_integer(), "requires c strictly between consecutive integers");
}

long strip_index(const Real& c) { return (-floor(c)).to_long() - 1; }  // -N-1 < c < -N

// ∫ Re over the whole line, scaled from the (1/2π) form.
Estimate full_re(const EvalContext& e, const Real& c, const Integrand& f, const DecayModel& d) {
    return rc(two_pi()) * line_re(e, c, f, d);
}
Estimate full_re_pole(const EvalContext& e, const Real& c, const Integrand& f, const DecayModel& d) {
    return rc(two_pi()) * line_re_pole(e, c, f, d);
}

Real zg(const Real& x) { return zeta(x) * gamma(x); }

Estimate fs2nc0_rhs(long n) {
    Real nn(n), q = Real(1) / (nn * 2L);
    return rc(two_pi()) * bose(Real(1), nn * 2L) -
           rc(pi() / nn * zg(q) + zeta(nn * 2L) * pi() * 2L + pi() / 4L);
}

Estimate fb1c0_rhs(long n) {
    Real nn(n), q = Real(1) / (nn * 2L);
    return rc(two_pi()) * bose(Real(2), nn * 2L) -
           rc(pi() * pow(Real(2), -q) / nn * zg(q) + zeta(nn * 2L) * pi() + pi() / 4L);
}

Estimate gba1_rhs(long n) {
    Real nn(n), c = Real(1) / (nn * 2L);
    Estimate diff = bose(Real(1), nn * 2L) - bose(Real(2), nn * 2L);
    return rc(pi() * zeta(nn * 2L)) - rc(two_pi()) * diff +
           rc(pi() * (Real(1) - pow(Real(2), -c)) * zeta(c) * gamma(Real(1) + c));
}

// Trend of a closed side over n toward a fixed limit.
TrendData closed_trend(const std::vector<long>& ns, const std::function<Estimate(long)>& value, const Real& limit) {
    TrendData t;
    t.limit = limit;
    for (long n : ns) {
        Estimate v = value(n);
        t.points.push_back(TrendPoint{n, v.value.re, abs(v.value.re - limit)});
    }
    return t;
}

void check_index_from(const Params& p, long lo) {
    for (long n : index_param(p, "n")) require(n >= lo, "requires n >= " + std::to_string(lo));
}

void check_n(const Params& p, long lo) {
    long n = p.integer("n");
    require(n >= lo, "requires integer n >= " + std::to_string(lo));
}

Real e_const() { return exp(Real(1)); }

// |ζ(1/2+iv)|²
Real zeta_sq(const Real& v) { return norm(zeta(Complex(half(), v))); }

}  // namespace

void add_g6(std::vector<IdentityRecord>& out) {
    {
        auto r = make("F11", "G6", "Line integral of zeta(-s z) Gamma(z) zeta(z) with both sides convergent",
                      "(1/2π)∫ ζ(-s(c+iv)) Γ(c+iv) ζ(c+iv) dv", "Σ_{j≥1} 1/(e^{j^{-s}} - 1)",
                      {{"s", "-1/2", "s < 0"}, {"c", "5/2", "c > 1 and c > -1/s"}},
                      [](const EvalContext& e) { return fall_integral(e, e.params.real("s"), e.params.real("c")); },
                      [](const EvalContext& e) { return bose(Real(1), -e.params.real("s")); });
        r.check = [](const Params& p) {
            check_s_negative(p);
            Real s = p.real("s"), c = p.real("c");
            require(c > Real(1) && c > -(Real(1) / s), "requires c > 1 and c > -1/s");
        };
        out.push_back(std::move(r));
    }
    struct FallRow {
        const char* id;
        const char* s;
        const char* c;
        const char* domain;
        const char* rhs;
    };
    const FallRow rows[] = {
        {"Fall-r1", "-2", "2", "c > 1 and c > -1/s", "0"},
        {"Fall-r2", "-1/2", "3/2", "c > 1 and c < -1/s", "Γ(-1/s) ζ(-1/s)/s"},
        {"Fall-r3", "-4", "1/2", "0 < c < 1 and c > -1/s", "-ζ(-s)"},
        {"Fall-r4", "-1/2", "1/2", "0 < c < 1 and c < -1/s", "Γ(-1/s) ζ(-1/s)/s - ζ(-s)"},
        {"Fall-r5", "-1/2", "-1/2", "-N-1 < c < -N",
         "Γ(-1/s) ζ(-1/s)/s - ζ(-s) - Σ_{j=0}^{N} (-1)^j ζ(sj) ζ(-j)/j!"},
    };
    for (int row = 1; row <= 5; ++row) {
        const FallRow& fr = rows[row - 1];
        auto r = make(
            fr.id, "G6", "Residues collected as the line moves left, row " + std::to_string(row),
            "(1/2π)∫ ζ(-s(c+iv)) Γ(c+iv) ζ(c+iv) dv - Σ_{j≥1} 1/(e^{j^{-s}} - 1)", fr.rhs,
            {{"s", fr.s, "s < 0"}, {"c", fr.c, fr.domain}},
            [](const EvalContext& e) {
                Real s = e.params.real("s");
                return fall_integral(e, s, e.params.real("c")) - bose(Real(1), -s);
            },
            [row](const EvalContext& e) {
                Real s = e.params.real("s"), c = e.params.real("c");
                switch (row) {
                    case 1: return rc(Real(0));
                    case 2: return rc(g_term(s));
                    case 3: return rc(-zeta(-s));
                    case 4: return rc(g_term(s) - zeta(-s));
                    default: {
                        long N = strip_index(c);
                        Real sum(0), fact(1);
                        for (long j = 0; j <= N; ++j) {
                            if (j > 0) fact = fact * j;
                            Real t = zeta(s * j) * zeta(Real(-j)) / fact;
                            sum += j % 2 ? -t : t;
                        }
                        return rc(g_term(s) - zeta(-s) - sum);
                    }
                }
            });
        r.check = [row](const Params& p) {
            check_s_negative(p);
            Real s = p.real("s"), c = p.real("c");
            Real pole = -(Real(1) / s);
            switch (row) {
                case 1: require(c > Real(1) && c > pole, "requires c > 1 and c > -1/s"); break;
                case 2: require(c > Real(1) && c < pole, "requires c > 1 and c < -1/s"); break;
                case 3:
                    require(c.sign() > 0 && c < Real(1) && c > pole, "requires 0 < c < 1 and c > -1/s");
                    break;
                case 4:
                    require(c.sign() > 0 && c < Real(1) && c < pole, "requires 0 < c < 1 and c < -1/s");
                    break;
                default:
                    require(c.sign() < 0, "requires c < 0");
                    check_not_integer(c);
            }
        };
        out.push_back(std::move(r));
    }
    const FallRow rows4[] = {
        {"Fall4-r1", "-1/2", "5/2", "c > -1/s", "0"},
        {"Fall4-r2", "-1/2", "3/2", "0 < c < -1/s", "Γ(-1/s) ζ(-1/s)(2^{1+1/s} - 1)/s"},
        {"Fall4-r3", "-1/2", "-1/2", "-N-1 < c < -N",
         "Γ(-1/s) ζ(-1/s)(2^{1+1/s} - 1)/s - Σ_{j=1}^{N} (2^{2j} - 1) ζ((2j-1)s) B_{2j}/(2j)! - 1/4"},
    };
    for (int row = 1; row <= 3; ++row) {
        const FallRow& fr = rows4[row - 1];
        auto r = make(
            fr.id, "G6", "Alternating companion of the residue table, row " + std::to_string(row),
            "(1/2π)∫ ζ(-s(c+iv)) Γ(c+iv) ζ(c+iv)(2^{1-c-iv} - 1) dv + Σ_{j≥1} 1/(e^{j^{-s}} + 1)", fr.rhs,
            {{"s", fr.s, "s < 0"}, {"c", fr.c, fr.domain}},
            [](const EvalContext& e) {
                Real s = e.params.real("s");
                return fall4_integral(e, s, e.params.real("c")) + fermi(Real(1), -s);
            },
            [row](const EvalContext& e) {
                Real s = e.params.real("s"), c = e.params.real("c");
                if (row == 1) return rc(Real(0));
                Real G = g_term(s) * (pow(Real(2), Real(1) + Real(1) / s) - Real(1));
                if (row == 2) return rc(G);
                long N = strip_index(c);
                Real sum(0), fact(1);
                for (long j = 1; j <= N; ++j) {
                    fact = fact * ((2 * j - 1) * (2 * j));
                    sum += (pow(Real(2), 2 * j) - Real(1)) / fact * zeta(s * (2 * j - 1)) * bernoulli_real(2 * j);
                }
                return rc(G - sum - Real(1) / Real(4));
            });
        r.check = [row](const Params& p) {
            check_s_negative(p);
            Real s = p.real("s"), c = p.real("c");
            Real pole = -(Real(1) / s);
            if (row == 1) {
                require(c > pole, "requires c > -1/s");
            } else if (row == 2) {
                require(c.sign() > 0 && c < pole, "requires 0 < c < -1/s");
            } else {
                require(c.sign() < 0, "requires c < 0");
                check_not_integer(c);
            }
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make("F1", "G6", "Alternating transform pair on the line",
                      "(1/2π)∫ ζ(-s(c+iv)) Γ(c+iv) ζ(c+iv)(1 - 2^{1-c-iv}) dv", "Σ_{j≥1} 1/(e^{j^{-s}} + 1)",
                      {{"s", "-2", "s < 0"}, {"c", "1", "c > -1/s"}},
                      [](const EvalContext& e) {
                          return -fall4_integral(e, e.params.real("s"), e.params.real("c"));
                      },
                      [](const EvalContext& e) { return fermi(Real(1), -e.params.real("s")); });
        r.check = [](const Params& p) {
            check_s_negative(p);
            require(p.real("c") > -(Real(1) / p.real("s")), "requires c > -1/s");
        };
        out.push_back(std::move(r));
    }
    auto s_minus_gamma = [] { return bose(Real(1), Real(1)) - rc(euler()); };
    auto s2_combo = [] { return rc(Real(2)) * bose(Real(2), Real(1)) - rc(euler() - log(Real(2))); };
    out.push_back(make(
        "F5", "G6", "Limit s → -1 on the critical line", "(1/2π)∫ ζ(1/2+iv)² Γ(1/2+iv) dv", "Σ_{j≥1} 1/(e^j - 1) - γ",
        {},
        [](const EvalContext& e) {
            auto f = [](const Complex& z) {
                Complex zz = zeta(z);
                return zz * zz * gamma(z);
            };
            return line_re(e, half(), f, DecayModel::gamma_like(0.5, 2 * zeta_growth(0.5)));
        },
        [s_minus_gamma](const EvalContext&) { return s_minus_gamma(); }));
    out.push_back(make(
        "F5b", "G6", "Polar form on the critical line with the closed-form zeta phase",
        "(1/√π)∫_0^∞ |ζ(1/2+iv)|² cos(2α + θ)/√cosh(πv) dv, 2α + θ = v ln 2π - 9π/4 + arctan e^{πv}",
        "Σ_{j≥1} 1/(e^j - 1) - γ", {},
        [](const EvalContext& e) {
            Real l2p = log(two_pi()), nine = pi() * 9L / 4L;
            auto g = [l2p, nine](const Real& v) {
                Real ph = v * l2p - nine + atan(exp(pi() * v));
                return zeta_sq(v) * cos(ph) / sqrt(cosh(pi() * v));
            };
            return rc(Real(1) / sqrt(pi())) * half_axis(e, g, M_PI / 2, 1.0);
        },
        [s_minus_gamma](const EvalContext&) { return s_minus_gamma(); }));
    out.push_back(make(
        "F5b4", "G6", "Trigonometric expansion of the polar form",
        "∫_0^∞ |ζ(1/2+iv)|²/cosh(πv) (cos(v ln 2π) cosh(πv/2) - sin(v ln 2π) sinh(πv/2)) dv",
        "√π (Σ_{j≥1} 1/(e^j - 1) - γ)", {},
        [](const EvalContext& e) {
            Real l2p = log(two_pi());
            auto g = [l2p](const Real& v) {
                Real a = v * l2p, h = pi() * v / 2L;
                return zeta_sq(v) / cosh(pi() * v) * (cos(a) * cosh(h) - sin(a) * sinh(h));
            };
            return half_axis(e, g, M_PI / 2, 1.0);
        },
        [s_minus_gamma](const EvalContext&) { return rc(sqrt(pi())) * s_minus_gamma(); }));
    out.push_back(make(
        "F4c", "G6", "Alternating limit s → -1 on the critical line", "∫ ζ(1/2+iv)² Γ(1/2+iv) 2^{-iv} dv",
        "√2 π (2 Σ_{j≥1} 1/(e^{2j} - 1) - γ + ln 2)", {},
        [](const EvalContext& e) {
            auto f = [](const Complex& z) {
                Complex zz = zeta(z);
                return zz * zz * gamma(z) * cpow(Real(2), half() - z);
            };
            return full_re(e, half(), f, DecayModel::gamma_like(0.5, 2 * zeta_growth(0.5)));
        },
        [s2_combo](const EvalContext&) { return rc(sqrt(Real(2)) * pi()) * s2_combo(); }));
    out.push_back(make(
        "F4dR2", "G6", "Trigonometric form of the alternating limit",
        "∫ |ζ(1/2+iv)|²/cosh(πv) (sinh(πv/2) sin(v ln π) - cosh(πv/2) cos(v ln π)) dv",
        "-√(2π) (2 Σ_{j≥1} 1/(e^{2j} - 1) - γ + ln 2)", {},
        [](const EvalContext& e) {
            Real lp = log(pi());
            auto g = [lp](const Real& v) {
                Real a = v * lp, h = pi() * v / 2L;
                return zeta_sq(v) / cosh(pi() * v) * (sinh(h) * sin(a) - cosh(h) * cos(a));
            };
            return rc(Real(2)) * half_axis(e, g, M_PI / 2, 1.0);
        },
        [s2_combo](const EvalContext&) { return rc(-sqrt(two_pi())) * s2_combo(); }));

    // s = -2n, c = 0 with the half residue at v = 0
    auto n_param = [](const char* def, const char* dom) { return std::vector<ParamSpec>{{"n", def, dom}}; };
    {
        auto r = make(
            "Fs2nc0", "G6", "Half residue at v = 0 for s = -2n", "∫ Re(ζ(2ivn) Γ(iv) ζ(iv)) dv",
            "2π Σ_{j≥1} 1/(e^{j^{2n}} - 1) - (π/n) ζ(1/(2n)) Γ(1/(2n)) - 2π ζ(2n) - π/4", n_param("1", "integer n >= 1"),
            [](const EvalContext& e) {
                Real two_n(2 * e.params.integer("n"));
                auto f = [two_n](const Complex& z) { return zeta(z * two_n) * gamma(z) * zeta(z); };
                return full_re_pole(e, Real(0), f, DecayModel::gamma_like(0.0, 2 * zeta_growth(0.0)));
            },
            [](const EvalContext& e) { return fs2nc0_rhs(e.params.integer("n")); });
        r.check = [](const Params& p) { check_n(p, 1); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Fb1c0", "G6", "Half residue at v = 0, alternating combination", "∫ Re(2^{-iv} ζ(2ivn) Γ(iv) ζ(iv)) dv",
            "2π Σ_{j≥1} 1/(e^{2j^{2n}} - 1) - (π 2^{-1/(2n)}/n) ζ(1/(2n)) Γ(1/(2n)) - π ζ(2n) - π/4",
            n_param("1", "integer n >= 1"),
            [](const EvalContext& e) {
                Real two_n(2 * e.params.integer("n"));
                auto f = [two_n](const Complex& z) {
                    return cpow(Real(2), -z) * zeta(z * two_n) * gamma(z) * zeta(z);
                };
                return full_re_pole(e, Real(0), f, DecayModel::gamma_like(0.0, 2 * zeta_growth(0.0)));
            },
            [](const EvalContext& e) { return fb1c0_rhs(e.params.integer("n")); });
        r.check = [](const Params& p) { check_n(p, 1); };
        out.push_back(std::move(r));
    }
    out.push_back(make(
        "Fb3Pr", "G6", "Riemann function form of the alternating half-residue case",
        "∫ Re(Υ(2iv, 2) ζ(iv)) dv, Υ(s, b) = ζ(s) b^{-s/2} Γ(s/2)",
        "-ζ(1/2) π^{3/2} √2/2 - π³/6 + 2π Σ_{j≥1} 1/(e^{2j²} - 1) - π/4", {},
        [](const EvalContext& e) {
            auto f = [](const Complex& z) { return upsilon(z * Real(2), Real(2)) * zeta(z); };
            return full_re_pole(e, Real(0), f, DecayModel::gamma_like(0.0, 2 * zeta_growth(0.0)));
        },
        [](const EvalContext&) {
            Real p = pi();
            Real c = -zeta(half()) * pow(p, Real(3) / Real(2)) * sqrt(Real(2)) / 2L - p * p * p / 6L - p / 4L;
            return rc(c) + rc(p * 2L) * bose(Real(2), Real(2));
        }));
    out.push_back(make(
        "Fb3aPr", "G6", "Reflected Riemann function form",
        "∫ Re(ζ(1 - 2iv) (π²/2)^{iv} Γ(1/2 - iv) ζ(iv)) dv",
        "π^{3/2} (-ζ(1/2) √(π/2) - π²/6 + 2 Σ_{j≥1} 1/(e^{2j²} - 1) - 1/4)", {},
        [](const EvalContext& e) {
            Real base = pi() * pi() / 2L;
            auto f = [base](const Complex& z) {
                return zeta(Complex(1) - z * Real(2)) * cpow(base, z) * gamma(Complex(half()) - z) * zeta(z);
            };
            return full_re_pole(e, Real(0), f, DecayModel::custom(M_PI / 2, zeta_growth(1.0) + zeta_growth(0.0)));
        },
        [](const EvalContext&) {
            Real p = pi();
            Real c = -zeta(half()) * sqrt(p / 2L) - p * p / 6L - Real(1) / Real(4);
            return rc(pow(p, Real(3) / Real(2))) * (rc(c) + rc(Real(2)) * bose(Real(2), Real(2)));
        }));
    {
        auto r = make_trend(
            "Fs2nc0Lim", "G6", "n → ∞ of the half-residue case", "closed side of Fs2nc0 over n",
            "π(13 - 5e)/(4e - 4)", n_param("2..14", "index list, n >= 1"), [](const EvalContext& e) {
                Real E = e_const();
                return closed_trend(index_param(e.params, "n"), fs2nc0_rhs,
                                    pi() * (Real(13) - E * 5L) / (E * 4L - Real(4)));
            });
        r.check = [](const Params& p) { check_index_from(p, 1); };
        out.push_back(std::move(r));
    }
    {
        auto r = make_trend(
            "Fb1c0Lim", "G6", "n → ∞ of the alternating half-residue case", "closed side of Fb1c0 over n",
            "π(9 - e²)/(4(e² - 1))", n_param("2..14", "index list, n >= 1"), [](const EvalContext& e) {
                Real E2 = exp(Real(2));
                return closed_trend(index_param(e.params, "n"), fb1c0_rhs,
                                    pi() * (Real(9) - E2) / ((E2 - Real(1)) * 4L));
            });
        r.check = [](const Params& p) { check_index_from(p, 1); };
        out.push_back(std::move(r));
    }

    // c = 1/(2n): pole of ζ(1 + 2ivn) at v = 0 in the imaginary part only
    {
        auto r = make(
            "Ga1", "G6", "Half residues at c = 1/(2n)", "∫ Re(ζ(1 + 2ivn) Γ(1/(2n) + iv) ζ(1/(2n) + iv)) dv",
            "2π Σ_{j≥1} 1/(e^{j^{2n}} - 1) - π ζ(1/(2n)) Γ(1 + 1/(2n)) - 2π ζ(2n)", n_param("1", "integer n >= 1"),
            [](const EvalContext& e) {
                long n = e.params.integer("n");
                Real c = Real(1) / Real(2 * n), two_n(2 * n);
                auto f = [c, two_n](const Complex& z) {
                    return zeta(Complex(1) + (z - Complex(c)) * two_n) * gamma(z) * zeta(z);
                };
                double cd = 0.5 / n;
                return full_re_pole(e, c, f, DecayModel::gamma_like(cd, zeta_growth(cd) + zeta_growth(1.0)));
            },
            [](const EvalContext& e) {
                long n = e.params.integer("n");
                Real nn(n), c = Real(1) / (nn * 2L);
                return rc(two_pi()) * bose(Real(1), nn * 2L) -
                       rc(pi() * zeta(c) * gamma(Real(1) + c) + two_pi() * zeta(nn * 2L));
            });
        r.check = [](const Params& p) { check_n(p, 1); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Gba1", "G6", "Half residues at c = 1/(2n), alternating combination",
            "∫ Re((2^{-1/(2n) - iv} - 1) ζ(1 + 2ivn) ζ(1/(2n) + iv) Γ(1/(2n) + iv)) dv",
            "π ζ(2n) - 2π (Σ 1/(e^{j^{2n}} - 1) - Σ 1/(e^{2j^{2n}} - 1)) + π (1 - 2^{-1/(2n)}) ζ(1/(2n)) Γ(1 + 1/(2n))",
            n_param("1", "integer n >= 1"),
            [](const EvalContext& e) {
                long n = e.params.integer("n");
                Real c = Real(1) / Real(2 * n), two_n(2 * n);
                auto f = [c, two_n](const Complex& z) {
                    return (cpow(Real(2), -z) - Complex(1)) * zeta(Complex(1) + (z - Complex(c)) * two_n) * zeta(z) *
                           gamma(z);
                };
                double cd = 0.5 / n;
                return full_re_pole(e, c, f, DecayModel::gamma_like(cd, zeta_growth(cd) + zeta_growth(1.0)));
            },
            [](const EvalContext& e) { return gba1_rhs(e.params.integer("n")); });
        r.check = [](const Params& p) { check_n(p, 1); };
        out.push_back(std::move(r));
    }
    {
        auto r = make_trend("Gb3", "G6", "n → ∞ of the alternating combination at c = 1/(2n)",
                            "closed side of Gba1 over n", "π(e² - 2e - 1)/((e - 1)(e + 1))",
                            n_param("2..14", "index list, n >= 1"), [](const EvalContext& e) {
                                Real E = e_const();
                                Real lim = pi() * (E * E - E * 2L - Real(1)) / ((E - Real(1)) * (E + Real(1)));
                                return closed_trend(index_param(e.params, "n"), gba1_rhs, lim);
                            });
        r.check = [](const Params& p) { check_index_from(p, 1); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "GA1", "G6", "Line at c = 1/n", "∫ Re(ζ(2 + 2ivn) Γ(1/n + iv) ζ(1/n + iv)) dv",
            "2π Σ_{j≥1} 1/(e^{j^{2n}} - 1) - 2π ζ(2n)", n_param("2", "integer n >= 2"),
            [](const EvalContext& e) {
                long n = e.params.integer("n");
                Real c = Real(1) / Real(n), two_n(2 * n);
                auto f = [c, two_n](const Complex& z) {
                    return zeta(Complex(2) + (z - Complex(c)) * two_n) * gamma(z) * zeta(z);
                };
                double cd = 1.0 / n;
                return full_re(e, c, f, DecayModel::gamma_like(cd, zeta_growth(cd) + zeta_growth(2.0)));
            },
            [](const EvalContext& e) {
                Real nn(e.params.integer("n"));
                return rc(two_pi()) * bose(Real(1), nn * 2L) - rc(two_pi() * zeta(nn * 2L));
            });
        r.check = [](const Params& p) { check_n(p, 2); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "G1A", "G6", "Line at c = 1/(4n)", "∫ Re(ζ(1/2 + 2ivn) Γ(1/(4n) + iv) ζ(1/(4n) + iv)) dv",
            "2π Σ_{j≥1} 1/(e^{j^{2n}} - 1) - (π/n) ζ(1/(2n)) Γ(1/(2n)) - 2π ζ(2n)", n_param("1", "integer n >= 1"),
            [](const EvalContext& e) {
                long n = e.params.integer("n");
                Real c = Real(1) / Real(4 * n), two_n(2 * n);
                auto f = [c, two_n](const Complex& z) {
                    return zeta(Complex(half()) + (z - Complex(c)) * two_n) * gamma(z) * zeta(z);
                };
                double cd = 0.25 / n;
                return full_re(e, c, f, DecayModel::gamma_like(cd, zeta_growth(cd) + zeta_growth(0.5)));
            },
            [](const EvalContext& e) {
                Real nn(e.params.integer("n")), q = Real(1) / (nn * 2L);
                return rc(two_pi()) * bose(Real(1), nn * 2L) - rc(pi() / nn * zg(q) + two_pi() * zeta(nn * 2L));
            });
        r.check = [](const Params& p) { check_n(p, 1); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Gd", "G6", "s = -n with c = 1/(2n)", "∫ Re(ζ(1/2 + ivn) Γ(1/(2n) + iv) ζ(1/(2n) + iv)) dv",
            "2π Σ_{j≥1} 1/(e^{j^n} - 1) - 2π ζ(1/n) Γ(1 + 1/n) - 2π ζ(n) (limit 2π(Σ 1/(e^j - 1) - γ) at n = 1)",
            n_param("2", "integer n >= 1"),
            [](const EvalContext& e) {
                long n = e.params.integer("n");
                Real c = Real(1) / Real(2 * n), nn(n);
                auto f = [c, nn](const Complex& z) {
                    return zeta(Complex(half()) + (z - Complex(c)) * nn) * gamma(z) * zeta(z);
                };
                double cd = 0.5 / n;
                return full_re(e, c, f, DecayModel::gamma_like(cd, zeta_growth(cd) + zeta_growth(0.5)));
            },
            [](const EvalContext& e) {
                long n = e.params.integer("n");
                Real nn(n);
                // the poles at z = 1/n and z = 1 merge into a double pole at n = 1
                if (n == 1) return rc(two_pi()) * (bose(Real(1), Real(1)) - rc(euler()));
                Real q = Real(1) / nn;
                return rc(two_pi()) * bose(Real(1), nn) -
                       rc(two_pi() * (zeta(q) * gamma(Real(1) + q) + zeta(nn)));
            });
        r.check = [](const Params& p) { check_n(p, 1); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Ge", "G6", "s = -1/n with c = 1/2", "∫ Re(ζ(1/(2n) + iv/n) Γ(1/2 + iv) ζ(1/2 + iv)) dv",
            "2π Σ_{j≥1} 1/(e^{j^{1/n}} - 1) - 2π ζ(n) Γ(n + 1) - 2π ζ(1/n)", n_param("2", "integer n >= 2"),
            [](const EvalContext& e) {
                long n = e.params.integer("n");
                Real nn(n);
                auto f = [nn](const Complex& z) { return zeta(z / nn) * gamma(z) * zeta(z); };
                return full_re(e, half(), f,
                               DecayModel::gamma_like(0.5, zeta_growth(0.5) + zeta_growth(0.5 / n)));
            },
            [](const EvalContext& e) {
                long n = e.params.integer("n");
                Real nn(n);
                return rc(two_pi()) * bose(Real(1), Real(1) / nn) -
                       rc(two_pi() * (zeta(nn) * gamma(nn + Real(1)) + zeta(Real(1) / nn)));
            });
        r.check = [](const Params& p) { check_n(p, 2); };
        out.push_back(std::move(r));
    }
    {
        auto r = make_trend(
            "GeAsy", "G6", "n → ∞ of the s = -1/n case",
            "4π (ζ(n) Γ(n + 1) + ζ(1/n) - Σ_{j≥1} 1/(e^{j^{1/n}} - 1)) over n",
            "∫ Re(Γ(1/2 + iv) ζ(1/2 + iv)) dv", n_param("4..12", "index list, n >= 2"),
            [](const EvalContext& e) {
                auto f = [](const Complex& z) { return gamma(z) * zeta(z); };
                Estimate L = full_re(e, half(), f, DecayModel::gamma_like(0.5, zeta_growth(0.5)));
                auto ns = index_param(e.params, "n");
                auto pts = sequence_values(LimitSequenceSpec::fig1(), ns, e.ctx);
                TrendData t;
                t.limit = L.value.re;
                for (const auto& p : pts) {
                    PrecisionGuard g(p.working_digits);
                    Real v = pi() * 4L * (zeta(Real(1) / Real(p.n)) - p.value);
                    t.points.push_back(TrendPoint{p.n, v, abs(v - t.limit)});
                }
                return t;
            });
        r.check = [](const Params& p) { check_index_from(p, 2); };
        out.push_back(std::move(r));
    }
}

}  // namespace mellin::cat
