#include "catalog_common.hpp"

namespace mellin::cat {

namespace {

// Σ_{k≥1} (coth(a^{-k}/2) - 2a^k) = Σ f(a^{-k}/2), f(y) = coth y - 1/y, |f(y)| ≤ y/3.
Estimate coth_sum_a(const Real& a) {
    auto term = [a](long k) { return Complex(coth_minus_inv(ldexp(pow(a, -k), -1))); };
    auto tail = [a](long k) { return ldexp(pow(a, -k), -1) / Real(3) * a / (a - Real(1)); };
    return series(term, 1, tail);
}

Real L_of(const Real& a) { return log(a); }

Estimate lhs_eqno9(const Real& a) {
    return Estimate::of(hyperpower_sum(a, [](const Real& p) { return Complex(Real(1) / expm1(p)); }));
}

// Σ_{k≥0} ζ(-2k-1)/((2k+1)!(a^{2k+1}-1))
Estimate zeta_odd_sum(const Real& a) {
    auto term = [a](long k) {
        Real f(1);
        for (long j = 2; j <= 2 * k + 1; ++j) f = f * j;
        return Complex(zeta(Real(-2 * k - 1)) / (f * (pow(a, 2 * k + 1) - Real(1))));
    };
    auto tail = [a](long k) {
        return Real(4.2) / (pow(two_pi(), 2 * k + 2) * (pow(a, 2 * k + 1) - Real(1)));
    };
    return series(term, 0, tail);
}

// Re Σ_{k≥1} w(z_k) Γ(z_k) ζ(z_k), z_k = 2πik/ln a
Estimate gz_poles(const Real& a, const std::function<Complex(const Complex&)>& w) {
    Real L = log(a);
    return re(pole_sum(a, [L, w](long k) {
        Complex z(Real(0), two_pi() * k / L);
        return w(z) * gamma(z) * zeta(z);
    }));
}

void check_a(const Params& p) { require(p.real("a") > Real(1), "requires a > 1"); }

std::vector<ParamSpec> a_param(const char* def = "2") { return {{"a", def, "base, a > 1"}}; }

}  // namespace

void add_g1_g3(std::vector<IdentityRecord>& out) {
    // ---- G1
    {
        auto r = make(
            "Erd2", "G1", "Mellin transform of 1/sinh(ax)", "∫_0^∞ x^{s-1}/sinh(a x) dx",
            "2 a^{-s}(1-2^{-s}) Γ(s) ζ(s)", {{"a", "3/2", "a > 0"}, {"s", "5/2", "s > 1"}},
            [](const EvalContext& e) {
                Real a = e.params.real("a"), s = e.params.real("s");
                return mellin_half_line(
                    e, [a, s](const Real& x) { return pow(x, s - Real(1)) / sinh(a * x); },
                    s.to_double() - 1.0);
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a"), s = e.params.real("s");
                return Estimate(Complex(Real(2) * pow(a, -s) * (Real(1) - pow(Real(2), -s)) * gamma(s) * zeta(s)));
            });
        r.check = [](const Params& p) {
            require(p.real("a").sign() > 0, "requires a > 0");
            require(p.real("s") > Real(1), "requires s > 1");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "eqno5", "G1", "Differentiated 1/sinh transform", "∫_0^∞ x^s cosh(a x)/(2 sinh²(a x)) dx",
            "a^{-s-1}(1-2^{-s}) Γ(s+1) ζ(s)", {{"a", "3/2", "a > 0"}, {"s", "5/2", "s > 1"}},
            [](const EvalContext& e) {
                Real a = e.params.real("a"), s = e.params.real("s");
                return mellin_half_line(
                    e,
                    [a, s](const Real& x) {
                        Real sh = sinh(a * x);
                        return pow(x, s) * cosh(a * x) / (sh * sh * 2L);
                    },
                    s.to_double() - 1.0);
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a"), s = e.params.real("s");
                return Estimate(Complex(pow(a, -s - Real(1)) * (Real(1) - pow(Real(2), -s)) * gamma(s + Real(1)) *
                                        zeta(s)));
            });
        r.check = [](const Params& p) {
            require(p.real("a").sign() > 0, "requires a > 0");
            require(p.real("s") > Real(1), "requires s > 1");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Eq5b", "G1", "Sum of the differentiated pair over a^j",
            "Σ_{j≥0} a^j cosh(a^j b)/(cosh(2 a^j b) - 1)",
            "(1/2π)∫ b^{-s-1}(1-2^{-s})Γ(s+1)ζ(s)/(1-a^{-s}) dv, s = c+iv",
            {{"a", "3", "a > 1"}, {"b", "1", "b > 0"}, {"c", "2", "c > 1"}},
            [](const EvalContext& e) {
                Real a = e.params.real("a"), b = e.params.real("b");
                return Estimate::of(hyperpower_sum(a, [b](const Real& p) {
                    Real x = p * b;
                    Real sh = sinh(x);
                    return Complex(p * cosh(x) / (sh * sh * 2L));
                }));
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a"), b = e.params.real("b"), c = e.params.real("c");
                auto f = [a, b](const Complex& s) {
                    Complex one(1);
                    return cpow(b, -s - one) * (one - cpow(Real(2), -s)) * gamma(s + one) * zeta(s) /
                           (one - cpow(a, -s));
                };
                return line(e, c, f, DecayModel::gamma_like(c.to_double() + 1.0, 1.0));
            });
        r.check = [](const Params& p) {
            check_a(p);
            require(p.real("b").sign() > 0, "requires b > 0");
            require(p.real("c") > Real(1), "requires c > 1");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "eqno6", "G1", "Telescoping hyperbolic sum over 2^j", "Σ_{j≥0} 2^j cosh(2^j b)/sinh²(2^j b)",
            "1/(2 sinh²(b/2))", {{"b", "1", "b > 0"}},
            [](const EvalContext& e) { return Estimate::of(telescoping_check(e.params.real("b"))); },
            [](const EvalContext& e) {
                Real s = sinh(ldexp(e.params.real("b"), -1));
                return Estimate(Complex(Real(1) / (s * s * 2L)));
            });
        r.check = [](const Params& p) { require(p.real("b").sign() > 0, "requires b > 0"); };
        out.push_back(std::move(r));
    }

    // ---- G2
    {
        auto r = make(
            "eqno9", "G2", "Bose sum over a^n assembled from its residues", "Σ_{n≥0} 1/(e^{a^n} - 1)",
            "(γ - ln(2π√a))/(2 ln a) + a/(a-1) + Σ_k ζ(-2k-1)/((2k+1)!(a^{2k+1}-1)) + (2/ln a) Re Σ_k Γ(z_k)ζ(z_k)",
            a_param(), [](const EvalContext& e) { return lhs_eqno9(e.params.real("a")); },
            [](const EvalContext& e) {
                Real a = e.params.real("a");
                Real L = L_of(a);
                Real head = (euler() - log(two_pi() * sqrt(a))) / (L * 2L) + a / (a - Real(1));
                Estimate poles = gz_poles(a, [](const Complex&) { return Complex(1); });
                return Estimate(Complex(head)) + zeta_odd_sum(a) + Estimate(Complex(Real(2) / L)) * poles;
            });
        r.check = check_a;
        out.push_back(std::move(r));
    }
    {
        auto r = make("eqno10", "G2", "Odd zeta sum as a coth series", "Σ_{k≥0} ζ(-2k-1)/((2k+1)!(a^{2k+1}-1))",
                      "-(1/2) Σ_{k≥1} (coth(a^{-k}/2) - 2a^k)", a_param(),
                      [](const EvalContext& e) { return zeta_odd_sum(e.params.real("a")); },
                      [](const EvalContext& e) {
                          return Estimate(Complex(Real(-0.5))) * coth_sum_a(e.params.real("a"));
                      });
        r.check = check_a;
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "eqno11", "G2", "Imaginary-pole residue sum in closed terms", "Re Σ_{k≥1} Γ(z_k) ζ(z_k), z_k = 2πik/ln a",
            "-a ln a/(2(a-1)) - (γ - ln(2π√a))/4 + (ln a/2) Σ_{n≥0} 1/(e^{a^n}-1) + (ln a/4) Σ_k (coth(a^{-k}/2) - 2a^k)",
            a_param(),
            [](const EvalContext& e) {
                return gz_poles(e.params.real("a"), [](const Complex&) { return Complex(1); });
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a");
                Real L = L_of(a);
                Real head = -(a * L) / ((a - Real(1)) * 2L) - (euler() - log(two_pi() * sqrt(a))) / Real(4);
                return Estimate(Complex(head)) + Estimate(Complex(L / 2L)) * lhs_eqno9(a) +
                       Estimate(Complex(L / 4L)) * coth_sum_a(a);
            });
        r.check = check_a;
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "X2b", "G2", "Fermi sum over a^n", "Σ_{n≥0} 1/(e^{a^n} + 1)",
            "-ln(2/(π√a))/(2 ln a) - (1/2)Σ_k (coth(a^{-k}/2) - 2coth(a^{-k})) - γ/(2 ln a) - (4/ln a) Re Σ_k (2^{-z_k} - 1/2)Γ(z_k)ζ(z_k)",
            a_param(),
            [](const EvalContext& e) {
                return Estimate::of(hyperpower_sum(e.params.real("a"), [](const Real& p) {
                    return Complex(Real(1) / (exp(p) + Real(1)));
                }));
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a");
                Real L = L_of(a);
                // coth(y) - 2coth(2y) = f(y) - 2f(2y), |.| ≤ 5y/3
                auto term = [a](long k) {
                    Real y = ldexp(pow(a, -k), -1);
                    return Complex(coth_minus_inv(y) - coth_minus_inv(y * 2L) * 2L);
                };
                auto tail = [a](long k) { return ldexp(pow(a, -k), -1) * Real(5) / Real(3) * a / (a - Real(1)); };
                Estimate s = series(term, 1, tail);
                Estimate poles = gz_poles(a, [](const Complex& z) { return cpow(Real(2), -z) - Complex(half()); });
                Real head = -log(Real(2) / (pi() * sqrt(a))) / (L * 2L) - euler() / (L * 2L);
                return Estimate(Complex(head)) - Estimate(Complex(half())) * s -
                       Estimate(Complex(Real(4) / L)) * poles;
            });
        r.check = check_a;
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "X1Add", "G2", "Sum of the Bose and Fermi forms", "Σ_{n≥0} 1/sinh(a^n)",
            "-Σ_k (coth(a^{-k}/2) - coth(a^{-k}) - a^k) - a/(1-a) - ln 2/ln a + (4/ln a) Re Σ_k (1-2^{-z_k})Γ(z_k)ζ(z_k)",
            a_param(),
            [](const EvalContext& e) {
                return Estimate::of(
                    hyperpower_sum(e.params.real("a"), [](const Real& p) { return Complex(Real(1) / sinh(p)); }));
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a");
                Real L = L_of(a);
                auto term = [a](long k) {
                    Real y = ldexp(pow(a, -k), -1);
                    return Complex(coth_minus_inv(y) - coth_minus_inv(y * 2L));
                };
                auto tail = [a](long k) { return ldexp(pow(a, -k), -1) * a / (a - Real(1)); };
                Estimate s = series(term, 1, tail);
                Estimate poles = gz_poles(a, [](const Complex& z) { return Complex(1) - cpow(Real(2), -z); });
                Real head = -(a / (Real(1) - a)) - const_ln2() / L;
                return Estimate(Complex(head)) - s + Estimate(Complex(Real(4) / L)) * poles;
            });
        r.check = check_a;
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "X1Minus", "G2", "Difference of the Bose and Fermi forms", "Σ_{n≥0} e^{-a^n}/sinh(a^n)",
            "-ln π/ln a - 1/2 + a/(a-1) + γ/ln a + Σ_k (a^k - coth(a^{-k})) + (4/ln a) Re Σ_k 2^{-z_k}Γ(z_k)ζ(z_k)",
            a_param(),
            [](const EvalContext& e) {
                return Estimate::of(hyperpower_sum(e.params.real("a"), [](const Real& p) {
                    return Complex(exp(-p) / sinh(p));
                }));
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a");
                Real L = L_of(a);
                auto term = [a](long k) { return Complex(-coth_minus_inv(pow(a, -k))); };
                auto tail = [a](long k) { return pow(a, -k) / Real(3) * a / (a - Real(1)); };
                Estimate s = series(term, 1, tail);
                Estimate poles = gz_poles(a, [](const Complex& z) { return cpow(Real(2), -z); });
                Real head = -log(pi()) / L - half() + a / (a - Real(1)) + euler() / L;
                return Estimate(Complex(head)) + s + Estimate(Complex(Real(4) / L)) * poles;
            });
        r.check = check_a;
        out.push_back(std::move(r));
    }
    out.push_back(make(
        "Ts2", "G2", "Reciprocal sinh over powers of two", "Σ_{n≥0} 1/sinh(2^n)", "coth(1/2) - 1", {},
        [](const EvalContext&) {
            return Estimate::of(hyperpower_sum(Real(2), [](const Real& p) { return Complex(Real(1) / sinh(p)); }));
        },
        [](const EvalContext&) {
            Real h = half();
            return Estimate(Complex(cosh(h) / sinh(h) - Real(1)));
        }));
    {
        auto r = make(
            "H25b", "G2", "Finite cosecant telescoping at imaginary argument", "Σ_{n=0}^{N} 1/sin(2^n x), x = i y",
            "cot(x/2) - cot(2^N x)", {{"N", "20", "integer 0..60"}, {"y", "1", "y > 0"}},
            [](const EvalContext& e) {
                long N = e.params.integer("N");
                Complex x(Real(0), e.params.real("y"));
                Complex s(0);
                for (long n = 0; n <= N; ++n) s += Complex(1) / sin(x * ldexp(Real(1), n));
                return Estimate(s);
            },
            [](const EvalContext& e) {
                long N = e.params.integer("N");
                Complex x(Real(0), e.params.real("y"));
                auto cot = [](const Complex& z) { return cos(z) / sin(z); };
                return Estimate(cot(x * half()) - cot(x * ldexp(Real(1), N)));
            });
        r.check = [](const Params& p) {
            long N = p.integer("N");
            require(N >= 0 && N <= 60, "requires 0 <= N <= 60");
            require(p.real("y").sign() > 0, "requires y > 0");
        };
        out.push_back(std::move(r));
    }

    // ---- G3
    {
        auto r = make("X3a", "G3", "Lambert sum with even exponents, alternating form", "Σ_{k≥1} 1/(a^{2k} + 1)",
                      "Σ_{k≥1} (-1)^{k+1}/(a^{2k} - 1)", a_param(),
                      [](const EvalContext& e) {
                          return Estimate::of(lambert_sum(e.params.real("a"), 1, Real(2), Real(0), 1));
                      },
                      [](const EvalContext& e) {
                          Real a = e.params.real("a");
                          auto term = [a](long k) {
                              Real t = Real(1) / (pow(a, 2 * k) - Real(1));
                              return Complex(k % 2 ? t : -t);
                          };
                          auto tail = [a](long k) { return Real(1) / (pow(a, 2 * k) - Real(1)); };
                          return series(term, 1, tail);
                      });
        r.check = check_a;
        out.push_back(std::move(r));
    }
    auto psi = [](const Real& q) { return Estimate::of(q_digamma_series(q, Complex(1))); };
    {
        auto r = make("Eq3", "G3", "Lambert sum through q-digamma values", "Σ_{k≥1} 1/(1 + a^k)",
                      "(ln(1+1/a) - ψ_{1/a}(1) + ψ_{1/a²}(1))/ln a", a_param(),
                      [](const EvalContext& e) {
                          return Estimate::of(lambert_sum(e.params.real("a"), 1, Real(1), Real(0), 1));
                      },
                      [psi](const EvalContext& e) {
                          Real a = e.params.real("a");
                          Real L = log(a);
                          Estimate v = Estimate(Complex(log1p(Real(1) / a))) - psi(Real(1) / a) + psi(Real(1) / (a * a));
                          return v / Estimate(Complex(L));
                      });
        r.check = check_a;
        out.push_back(std::move(r));
    }
    {
        auto r = make("Pid1", "G3", "q-digamma at unit argument", "Σ_{k≥1} 1/(1 - a^k)",
                      "(ψ_{1/a}(1) + ln(a-1))/ln a - 1", a_param(),
                      [](const EvalContext& e) {
                          return -Estimate::of(lambert_sum(e.params.real("a"), -1, Real(1), Real(0), 1));
                      },
                      [psi](const EvalContext& e) {
                          Real a = e.params.real("a");
                          Real L = log(a);
                          return (psi(Real(1) / a) + Estimate(Complex(log(a - Real(1))))) / Estimate(Complex(L)) -
                                 Estimate(1);
                      });
        r.check = check_a;
        out.push_back(std::move(r));
    }
    {
        auto r = make("Eq4", "G3", "Odd-exponent Lambert sum through q-digamma", "Σ_{k≥1} 1/(1 - a^{2k+1})",
                      "1/(a-1) - ψ_{1/a²}(1)/(2 ln a) + ψ_{1/a}(1)/ln a + ln((a-1)/(a+1))/(2 ln a)", a_param(),
                      [](const EvalContext& e) {
                          return -Estimate::of(lambert_sum(e.params.real("a"), -1, Real(2), Real(1), 1));
                      },
                      [psi](const EvalContext& e) {
                          Real a = e.params.real("a");
                          Real L = log(a);
                          Estimate invL(Complex(Real(1) / L));
                          Real one(1);
                          return Estimate(Complex(one / (a - one))) -
                                 psi(one / (a * a)) * Estimate(Complex(one / (L * 2L))) + psi(one / a) * invL +
                                 Estimate(Complex(log((a - one) / (a + one)) / (L * 2L)));
                      });
        r.check = check_a;
        out.push_back(std::move(r));
    }
    {
        auto r = make("Ls", "G3", "Sum of two squares via the theta function",
                      "4 Σ_{k≥0} (-1)^k x^{2k+1}/(1 - x^{2k+1})", "θ3(0, x)² - 1", {{"x", "1/5", "0 < x < 1"}},
                      [](const EvalContext& e) {
                          Real x = e.params.real("x");
                          auto term = [x](long k) {
                              Real p = pow(x, 2 * k + 1);
                              Real t = p / (Real(1) - p) * 4L;
                              return Complex(k % 2 ? -t : t);
                          };
                          auto tail = [x](long k) {
                              Real p = pow(x, 2 * k + 1);
                              return p / (Real(1) - p) * 4L;
                          };
                          return series(term, 0, tail);
                      },
                      [](const EvalContext& e) {
                          Estimate t = Estimate::of(theta3_series(e.params.real("x")));
                          return t * t - Estimate(1);
                      });
        r.check = [](const Params& p) {
            Real x = p.real("x");
            require(x.sign() > 0 && x < Real(1), "requires 0 < x < 1");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make("Triv", "G3", "Elementary rearrangement of Lambert sums", "Σ_{k≥1} 1/(1 + a^k)",
                      "-Σ_{k≥1} 1/(1 - a^k) + 2 Σ_{k≥1} 1/(1 - a^{2k})", a_param(),
                      [](const EvalContext& e) {
                          return Estimate::of(lambert_sum(e.params.real("a"), 1, Real(1), Real(0), 1));
                      },
                      [](const EvalContext& e) {
                          Real a = e.params.real("a");
                          return Estimate::of(lambert_sum(a, -1, Real(1), Real(0), 1)) -
                                 Estimate(2) * Estimate::of(lambert_sum(a, -1, Real(2), Real(0), 1));
                      });
        r.check = check_a;
        out.push_back(std::move(r));
    }
}

}  // namespace mellin::cat
