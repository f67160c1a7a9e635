#include "catalog_common.hpp"

namespace mellin::cat {

namespace {

Real huge() { return Real(1e30); }

void check_base(const Params& p, const char* name) {
    require(p.real(name) > Real(1), std::string("requires ") + name + " > 1");
}

// Σ_{j≥1} Γ(2πij/L), real part, for the base e^L.
Estimate gamma_poles(const Real& base) {
    Real L = log(base);
    return re(pole_sum(base, [L](long k) { return gamma(Complex(Real(0), two_pi() * k / L)); }, 0.0));
}

Estimate hyper_exp(const Real& b) {
    return Estimate::of(hyperpower_sum(b, [](const Real& p) { return Complex(exp(-p)); }));
}

// Σ_{k≥1} (-1)^k/(k!(b^k - 1))
Estimate alt_factorial(const Real& b) {
    auto term = [b](long k) {
        Real f(1);
        for (long j = 2; j <= k; ++j) f = f * j;
        Real t = Real(1) / (f * (pow(b, k) - Real(1)));
        return Complex(k % 2 ? -t : t);
    };
    return Estimate::of(alternating_factorial_series(term, 1, b / (b - Real(1)), Real(1) / b));
}

// Σ_{j≥j0} (e^{-x_j} - 1) with x_j = base^{-j}, |terms| ≤ x_j.
Estimate inverse_hyper(const Real& base, long j0) {
    auto term = [base](long j) { return Complex(expm1(-pow(base, -j))); };
    auto tail = [base](long k) { return pow(base, -k) * base / (base - Real(1)); };
    return series(term, j0, tail);
}

// (L/2) Σ_{j≥0} (e^{-B^{-j}} - 1 + e^{-B^j}) + (1/4 - 1/(2e)) L + γ/2, B = e^L
Estimate gamma_pole_closed(const Real& L) {
    Real B = exp(L);
    Estimate s = inverse_hyper(B, 0) + hyper_exp(B);
    Real c = (Real(1) / Real(4) - Real(1) / (exp(Real(1)) * 2L)) * L + euler() / 2L;
    return Estimate(Complex(L / 2L)) * s + Estimate(Complex(c));
}

}  // namespace

void add_g4_g5(std::vector<IdentityRecord>& out) {
    // ---- G4
    {
        auto r = make("GId", "G4", "Difference of shifted reciprocals", "1/(a^m + e^{-t}) - 1/(a^m + e^t)",
                      "2 sinh t/(a^{2m} + 2a^m cosh t + 1)",
                      {{"a", "2", "a > 0"}, {"m", "2", "m real"}, {"t", "7/10", "t real"}},
                      [](const EvalContext& e) {
                          Real am = pow(e.params.real("a"), e.params.real("m")), t = e.params.real("t");
                          return Estimate(Complex(Real(1) / (am + exp(-t)) - Real(1) / (am + exp(t))));
                      },
                      [](const EvalContext& e) {
                          Real am = pow(e.params.real("a"), e.params.real("m")), t = e.params.real("t");
                          return Estimate(
                              Complex(sinh(t) * 2L / (am * am + am * cosh(t) * 2L + Real(1))));
                      });
        r.check = [](const Params& p) { require(p.real("a").sign() > 0, "requires a > 0"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Pr", "G4", "Shifted Lambert sum from the 1/(a+x) transform pair", "Σ_{n≥0} 1/(a^n + e^t)",
            "(2t + ln a)e^{-t}/(2 ln a) - Σ_k (-1)^k e^{-(k+1)t}/(a^k - 1) + (2π/ln a) Im Σ_k e^{(2πik - ln a)t/ln a} csch(2kπ²/ln a)",
            {{"a", "2", "a > 1"}, {"t", "7/10", "t > -ln a"}},
            [](const EvalContext& e) {
                Real a = e.params.real("a"), et = exp(e.params.real("t"));
                auto term = [a, et](long n) { return Complex(Real(1) / (pow(a, n) + et)); };
                auto tail = [a](long k) { return pow(a, -k) * a / (a - Real(1)); };
                return series(term, 0, tail);
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a"), t = e.params.real("t");
                Real L = log(a);
                Real head = (t * 2L + L) * exp(-t) / (L * 2L);
                auto t1 = [a, t](long k) {
                    Real v = exp(-t * (k + 1)) / (pow(a, k) - Real(1));
                    return Complex(k % 2 ? -v : v);
                };
                Estimate s1 = geometric(t1, 1, (exp(-t) / a).to_double());
                Real x = pi() * pi() * 2L / L;
                auto t2 = [L, t, x](long k) {
                    Complex ph = exp(Complex(-t, two_pi() * k * t / L));
                    return ph * (Real(1) / sinh(x * k));
                };
                Estimate s2 = geometric(t2, 1, std::exp(-x.to_double()));
                return Estimate(Complex(head)) - s1 + Estimate(Complex(two_pi() / L)) * im(s2);
            });
        r.check = [](const Params& p) {
            check_base(p, "a");
            require(p.real("t") > -log(p.real("a")), "requires t > -ln a");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Ex4Ans", "G4", "Quadratic-denominator Lambert sum", "Σ_{n≥0} 1/(a^{2mn} + 2a^{mn} cosh t + 1)",
            "1/2 - (2π coth t/(m ln a)) Σ_k sin(2πkt/(m ln a))/sinh(2kπ²/(m ln a)) - (1/sinh t) Σ_k (-1)^k sinh((k+1)t)/(a^{mk} - 1) - t coth t/(m ln a)",
            {{"a", "2", "a > 1"}, {"m", "2", "m > 0"}, {"t", "7/10", "0 < t < m ln a"}},
            [](const EvalContext& e) {
                Real am = pow(e.params.real("a"), e.params.real("m")), ct = cosh(e.params.real("t"));
                auto term = [am, ct](long n) {
                    Real p = pow(am, n);
                    return Complex(Real(1) / (p * p + p * ct * 2L + Real(1)));
                };
                auto tail = [am](long k) { return pow(am, -2 * k) / (Real(1) - Real(1) / (am * am)); };
                return series(term, 0, tail);
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a"), m = e.params.real("m"), t = e.params.real("t");
                Real mL = m * log(a);
                Real am = pow(a, m);
                Real coth_t = cosh(t) / sinh(t);
                Real x = pi() * pi() * 2L / mL;
                auto t1 = [t, mL, x](long k) { return Complex(sin(two_pi() * k * t / mL) / sinh(x * k)); };
                auto tail1 = [x](long k) { return Real(1) / (sinh(x * k) * (Real(1) - exp(-x))); };
                Estimate s1 = series(t1, 1, tail1);
                auto t2 = [t, am](long k) {
                    Real v = sinh(t * (k + 1)) / (pow(am, k) - Real(1));
                    return Complex(k % 2 ? -v : v);
                };
                Estimate s2 = geometric(t2, 1, (exp(t) / am).to_double());
                Real head = half() - t * coth_t / mL;
                return Estimate(Complex(head)) - Estimate(Complex(two_pi() * coth_t / mL)) * s1 -
                       Estimate(Complex(Real(1) / sinh(t))) * s2;
            });
        r.check = [](const Params& p) {
            check_base(p, "a");
            require(p.real("m").sign() > 0, "requires m > 0");
            Real t = p.real("t");
            require(t.sign() > 0 && t < p.real("m") * log(p.real("a")), "requires 0 < t < m ln a");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Ct1", "G4", "t → 0 limit of the quadratic Lambert sum", "Σ_{n≥0} 1/(b^n + 1)²",
            "1/2 - 1/ln b - (4π²/ln² b) Σ_k k csch(2kπ²/ln b) + Σ_{k≥2} k(-1)^k/(b^{k-1} - 1)", {{"b", "2", "b > 1"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                auto term = [b](long n) {
                    Real d = pow(b, n) + Real(1);
                    return Complex(Real(1) / (d * d));
                };
                auto tail = [b](long k) { return pow(b, -2 * k) / (Real(1) - pow(b, -2)); };
                return series(term, 0, tail);
            },
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                Real L = log(b);
                Real x = pi() * pi() * 2L / L;
                auto t1 = [x](long k) { return Complex(Real(k) / sinh(x * k)); };
                Estimate s1 = geometric(t1, 1, 2.0 * std::exp(-x.to_double()));
                double bd = b.to_double();
                long kstar = static_cast<long>(std::ceil(1.0 / (bd - 1.0))) + 1;
                auto t2 = [b](long k) {
                    Real v = Real(k) / (pow(b, k - 1) - Real(1));
                    return Complex(k % 2 ? -v : v);
                };
                auto tail2 = [b, kstar](long k) {
                    if (k < kstar) return huge();
                    return Real(k) / (pow(b, k - 1) - Real(1));
                };
                Estimate s2 = series(t2, 2, tail2);
                Real head = half() - Real(1) / L;
                return Estimate(Complex(head)) - Estimate(Complex(pi() * pi() * 4L / (L * L))) * s1 + s2;
            });
        r.check = [](const Params& p) { check_base(p, "b"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Sumbk", "G4", "Alternating sum transposed into a Lambert-type sum", "Σ_{k≥2} k(-1)^k/(b^{k-1} - 1)",
            "Σ_{n≥1} (1 + 2b^n)/(1 + b^n)²", {{"b", "2", "b > 1"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                long kstar = static_cast<long>(std::ceil(1.0 / (b.to_double() - 1.0))) + 1;
                auto t2 = [b](long k) {
                    Real v = Real(k) / (pow(b, k - 1) - Real(1));
                    return Complex(k % 2 ? -v : v);
                };
                auto tail2 = [b, kstar](long k) {
                    if (k < kstar) return huge();
                    return Real(k) / (pow(b, k - 1) - Real(1));
                };
                return series(t2, 2, tail2);
            },
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                auto term = [b](long n) {
                    Real p = pow(b, n);
                    Real d = p + Real(1);
                    return Complex((p * 2L + Real(1)) / (d * d));
                };
                auto tail = [b](long k) { return pow(b, -k) * 2L * b / (b - Real(1)); };
                return series(term, 1, tail);
            });
        r.check = [](const Params& p) { check_base(p, "b"); };
        out.push_back(std::move(r));
    }
    auto lambert_sq = [](const Real& b) {
        auto term = [b](long n) {
            Real p = pow(b, n);
            Real d = p + Real(1);
            return Complex(p / (d * d));
        };
        auto tail = [b](long k) { return pow(b, -k) * b / (b - Real(1)); };
        return series(term, 1, tail) - Estimate(Complex(Real(1) / (log(b) * 2L)));
    };
    {
        auto r = make(
            "Ct1C", "G4", "Transformation between generalized Lambert series", "Σ_{n≥1} b^n/(1 + b^n)² - 1/(2 ln b)",
            "-1/8 + (4π²/ln² b) Σ_{j≥0} q^{1+2j}/(q^{1+2j} - 1)², q = e^{2π²/ln b}", {{"b", "2", "b > 1"}},
            [lambert_sq](const EvalContext& e) { return lambert_sq(e.params.real("b")); },
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                Real L = log(b);
                Real lq = pi() * pi() * 2L / L;
                auto term = [lq](long j) {
                    Real qm = exp(lq * (2 * j + 1));
                    Real d = qm - Real(1);
                    return Complex(qm / (d * d));
                };
                auto tail = [lq](long k) {
                    Real iq = exp(-lq);
                    Real d = Real(1) - iq;
                    return exp(-lq * (2 * k + 1)) / ((Real(1) - iq * iq) * d * d);
                };
                Estimate s = series(term, 0, tail);
                return Estimate(Complex(Real(-1) / Real(8))) + Estimate(Complex(pi() * pi() * 4L / (L * L))) * s;
            });
        r.check = [](const Params& p) { check_base(p, "b"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make("Blim", "G4", "b → 1 limit of the Lambert transformation", "Σ_{n≥1} b^n/(1 + b^n)² - 1/(2 ln b)",
                      "-1/8 (exponentially small correction below 1e-44 for 1 < b ≤ 1.2)",
                      {{"b", "11/10", "1 < b <= 6/5"}},
                      [lambert_sq](const EvalContext& e) { return lambert_sq(e.params.real("b")); },
                      [](const EvalContext&) { return Estimate(Complex(Real(-1) / Real(8))); });
        r.check = [](const Params& p) {
            Real b = p.real("b");
            require(b > Real(1) && b <= Real(6) / Real(5), "requires 1 < b <= 6/5");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "CosSq", "G4", "Squared hyperbolic secant and cosecant sums", "Σ_{j≥1} sech²(jπa) - a^{-2} Σ_{j≥0} csch²((j+1/2)π/a)",
            "1/(πa) - 1/2", {{"a", "1", "a > 0"}},
            [](const EvalContext& e) {
                Real a = e.params.real("a");
                Real x = pi() * a, y = pi() / a;
                auto t1 = [x](long j) {
                    Real c = cosh(x * j);
                    return Complex(Real(1) / (c * c));
                };
                auto tail1 = [x](long k) { return exp(-x * (2 * k)) * 4L / (Real(1) - exp(-x * 2L)); };
                auto t2 = [y](long j) {
                    Real s = sinh(y * (Real(j) + half()));
                    return Complex(Real(1) / (s * s));
                };
                auto tail2 = [y](long k) {
                    Real d = Real(1) - exp(-y);
                    return exp(-y * (Real(2 * k) + Real(1))) * 4L / (d * d * (Real(1) - exp(-y * 2L)));
                };
                return series(t1, 1, tail1) - Estimate(Complex(Real(1) / (a * a))) * series(t2, 0, tail2);
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a");
                return Estimate(Complex(Real(1) / (pi() * a) - half()));
            });
        r.check = [](const Params& p) { require(p.real("a").sign() > 0, "requires a > 0"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Ex4ANs2", "G4", "Quadratic Lambert sum at a^m = e^t",
            "Σ_{n≥0} 1/(e^{2nt} + 2e^{nt} cosh t + 1)",
            "1/2 - coth t - (1/sinh t) Σ_k (-1)^k sinh((k+1)t)/(e^{tk} - 1), the non-decaying part e^t/2 Abel-summed",
            {{"t", "7/10", "t > 0"}},
            [](const EvalContext& e) {
                Real et = exp(e.params.real("t")), ct = cosh(e.params.real("t"));
                auto term = [et, ct](long n) {
                    Real p = pow(et, n);
                    return Complex(Real(1) / (p * p + p * ct * 2L + Real(1)));
                };
                auto tail = [et](long k) { return pow(et, -2 * k) / (Real(1) - pow(et, -2)); };
                return series(term, 0, tail);
            },
            [](const EvalContext& e) {
                Real t = e.params.real("t");
                Real et = exp(t);
                // sinh((k+1)t)/(e^{tk}-1) = e^t/2 + (e^t - e^{-(k+1)t})/(2(e^{tk}-1)); Σ(-1)^k over
                // the constant part has Abel sum -e^t/4
                auto term = [t, et](long k) {
                    Real v = (et - exp(-t * (k + 1))) / ((pow(et, k) - Real(1)) * 2L);
                    return Complex(k % 2 ? -v : v);
                };
                auto tail = [t, et](long k) { return (et - exp(-t * (k + 1))) / ((pow(et, k) - Real(1)) * 2L); };
                Estimate s = series(term, 1, tail) - Estimate(Complex(et / 4L));
                Real head = half() - cosh(t) / sinh(t);
                return Estimate(Complex(head)) - Estimate(Complex(Real(1) / sinh(t))) * s;
            });
        r.check = [](const Params& p) { require(p.real("t").sign() > 0, "requires t > 0"); };
        out.push_back(std::move(r));
    }

    // ---- G5
    auto b_param = [] { return std::vector<ParamSpec>{{"b", "3", "b > 1"}}; };
    {
        auto r = make(
            "Ein1", "G5", "Hyperpower sum from the exponential transform pair", "Σ_{j≥0} e^{-b^j}",
            "(1/2π)∫ Γ(c+iv)/(1 - b^{-c-iv}) dv", {{"b", "3", "b > 1"}, {"c", "1/2", "c > 0"}},
            [](const EvalContext& e) { return hyper_exp(e.params.real("b")); },
            [](const EvalContext& e) {
                Real b = e.params.real("b"), c = e.params.real("c");
                auto f = [b](const Complex& s) { return gamma(s) / (Complex(1) - cpow(b, -s)); };
                return line(e, c, f, DecayModel::gamma_like(c.to_double(), 0.5));
            });
        r.check = [](const Params& p) {
            check_base(p, "b");
            require(p.real("c").sign() > 0, "requires c > 0");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "E2", "G5", "Contour shifted past the double pole at 0", "Σ_{j≥0} e^{-b^j}",
            "1/2 - γ/ln b + (1/2π)∫_{c=-1/2} Γ(s)/(1 - b^{-s}) dv + (2/ln b) Re Σ_k Γ(2πik/ln b)", b_param(),
            [](const EvalContext& e) { return hyper_exp(e.params.real("b")); },
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                Real L = log(b);
                auto f = [b](const Complex& s) { return gamma(s) / (Complex(1) - cpow(b, -s)); };
                Estimate I = line(e, Real(-0.5), f, DecayModel::gamma_like(-0.5, 0.5));
                return Estimate(Complex(half() - euler() / L)) + I +
                       Estimate(Complex(Real(2) / L)) * gamma_poles(b);
            });
        r.check = [](const Params& p) { check_base(p, "b"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "E4a", "G5", "Hyperpower sum after the line integral vanishes", "Σ_{j≥0} e^{-b^j}",
            "1/2 - γ/ln b - Σ_{k≥1} (-1)^k/(k!(b^k - 1)) + (2/ln b) Re Σ_k Γ(2πik/ln b)", b_param(),
            [](const EvalContext& e) { return hyper_exp(e.params.real("b")); },
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                Real L = log(b);
                return Estimate(Complex(half() - euler() / L)) - alt_factorial(b) +
                       Estimate(Complex(Real(2) / L)) * gamma_poles(b);
            });
        r.check = [](const Params& p) { check_base(p, "b"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make("Sx", "G5", "Alternating factorial Lambert sum as an inverse hyperpower sum",
                      "Σ_{k≥1} (-1)^k/(k!(b^k - 1))", "Σ_{j≥1} (e^{-b^{-j}} - 1)", b_param(),
                      [](const EvalContext& e) { return alt_factorial(e.params.real("b")); },
                      [](const EvalContext& e) { return inverse_hyper(e.params.real("b"), 1); });
        r.check = [](const Params& p) { check_base(p, "b"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make("E4B", "G5", "Gamma values on the imaginary axis as hyperpower sums",
                      "Re Σ_{k≥1} Γ(2πik/ln b)",
                      "(ln b/2) Σ_{j≥0} (e^{-b^{-j}} - 1 + e^{-b^j}) + (1/4 - 1/(2e)) ln b + γ/2", b_param(),
                      [](const EvalContext& e) { return gamma_poles(e.params.real("b")); },
                      [](const EvalContext& e) { return gamma_pole_closed(log(e.params.real("b"))); });
        r.check = [](const Params& p) { check_base(p, "b"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make("E4B1", "G5", "Gamma values at 2πik/b as double-exponential sums", "Re Σ_{k≥1} Γ(2πik/b)",
                      "(b/2) Σ_{j≥0} (e^{-e^{-jb}} - 1 + e^{-e^{jb}}) + (1/4 - 1/(2e)) b + γ/2",
                      {{"b", "1", "b >= 1/20"}},
                      [](const EvalContext& e) { return gamma_poles(exp(e.params.real("b"))); },
                      [](const EvalContext& e) { return gamma_pole_closed(e.params.real("b")); });
        r.check = [](const Params& p) {
            require(p.real("b") >= Real(1) / Real(20), "requires b >= 1/20 (pole series decay)");
        };
        out.push_back(std::move(r));
    }
}

}  // namespace mellin::cat
