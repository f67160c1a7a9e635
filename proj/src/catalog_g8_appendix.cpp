#include "catalog_common.hpp"

namespace mellin::cat {

namespace {

Estimate rc(const Real& x) { return Estimate(Complex(x)); }

Real factorial(long n) {
    Real f(1);
    for (long i = 2; i <= n; ++i) f = f * Real(i);
    return f;
}

// Σ_{k≥K} |c_k| given |c_{k+1}| ≤ ρ(K)|c_k| for k ≥ K
Real ratio_tail(const Real& first, const Real& rho) {
    if (!(rho < Real(1))) return Real(1e30);
    return first / (Real(1) - rho);
}

void check_pos(const Params& p, const char* name) {
    require(p.real(name).sign() > 0, std::string("requires ") + name + " > 0");
}

}  // namespace

Estimate j3a_integral(const EvalContext& e, const Real& b) {
    Real p = pi();
    // 1 - cos(bt) = 2 sin²(bt/2), free of cancellation near t = 0
    auto g = [b, p](const Real& t) {
        Real s = sin(b * t / 2L), d = sinh(p * t);
        return s * s * 2L / (d * d);
    };
    return half_axis(e, g, 2.0 * 3.141592653589793, 0.0);
}

Estimate j3b_integral(const EvalContext& e, const Real& b) {
    Real p = pi();
    auto g = [b, p](const Real& t) {
        Real d = sinh(p * t);
        return sin(b * t) * t / (d * d);
    };
    return half_axis(e, g, 2.0 * 3.141592653589793, 1.0);
}

// -π Σ_{j≥0} a^{j+1} ∫_0^∞ (1 - cos(t/a^{j+1}))/sinh²(πt) dt
Estimate appendix_b_chain(const EvalContext& e, const Real& a) {
    Real eps = eps_here();
    // a^{j+1} J(a^{-(j+1)}) ≤ a^{-(j+1)}/(12π) since ∫ t²/sinh²(πt) = 1/(6π)
    Real scale = Real(1) / (pi() * 12L);
    Real p = pi();
    Estimate sum(Complex(0));
    Real aj = a;
    for (long j = 0; j < 100000; ++j, aj = aj * a) {
        // a^{j+1} J(b) = b ∫ 2(sin(bt/2)/b)²/sinh²(πt) with b = a^{-(j+1)}; the
        // rescaled integrand is O(1), so the quadrature error is not amplified
        Real b = Real(1) / aj;
        auto g = [b, p](const Real& t) {
            Real s = sin(b * t / 2L) / b, d = sinh(p * t);
            return s * s * 2L / (d * d);
        };
        Estimate term = rc(b) * half_axis(e, g, 2.0 * 3.141592653589793, 2.0);
        sum = sum + term;
        Real tail = scale / (aj * a) / (Real(1) - Real(1) / a);
        if (tail < eps) return rc(-pi()) * (sum + Estimate(Complex(0), tail));
    }
    throw ConvergenceError("chain over j did not converge");
}

void add_g8_appendix(std::vector<IdentityRecord>& out) {
    {
        auto r = make(
            "Ex1", "G8", "Sine transform pair summed over the free variable", "Σ_{k≥1} sin(k^{-s})",
            "Σ_{k≥0} (-1)^k ζ((2k+1)s)/(2k+1)!", {{"s", "2", "s > 1"}},
            [](const EvalContext& e) {
                Real s = e.params.real("s");
                EmTerm f;
                f.value = [s](const Real& t) { return sin(pow(t, -s)); };
                f.jet = [s](const Jet& t) { return sin(pow(t, -s)); };
                f.tail_integral = [s](long M) {
                    // Σ_k (-1)^k M^{1-s(2k+1)}/((2k+1)!(s(2k+1)-1))
                    Real Mr(M), sum(0), eps = eps_here();
                    for (long k = 0;; ++k) {
                        Real q = s * Real(2 * k + 1);
                        Real t = pow(Mr, Real(1) - q) / (factorial(2 * k + 1) * (q - Real(1)));
                        sum += k % 2 ? -t : t;
                        if (t < eps * abs(sum)) return sum;
                    }
                };
                f.completely_monotone = false;
                return Estimate::of(em_sum(f, 1, em_default_point()));
            },
            [](const EvalContext& e) {
                Real s = e.params.real("s");
                Real zs = zeta(s);
                auto term = [s](long k) {
                    Real t = zeta(s * Real(2 * k + 1)) / factorial(2 * k + 1);
                    return Complex(k % 2 ? -t : t);
                };
                // ζ((2k+1)s) ≤ ζ(s); the factorials shrink by (2k+2)(2k+3) ≥ 6
                auto tail = [zs](long K) { return zs * Real(6) / (factorial(2 * K + 1) * Real(5)); };
                return series(term, 0, tail);
            });
        r.check = [](const Params& p) {
            Real s = p.real("s");
            require(s > Real(1) && s <= Real(12), "requires 1 < s <= 12");
        };
        out.push_back(std::move(r));
    }
    out.push_back(make(
        "Ex1AB", "G8", "The case s = 1", "Σ_{k≥1} (sin(1/k) - 1/k)", "Σ_{k≥1} (-1)^k ζ(2k+1)/(2k+1)!", {},
        [](const EvalContext&) {
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
                // Σ_{k≥1} (-1)^k M^{-2k}/((2k+1)! 2k)
                Real Mr(M), sum(0), eps = eps_here();
                for (long k = 1;; ++k) {
                    Real t = pow(Mr, -2 * k) / (factorial(2 * k + 1) * Real(2 * k));
                    sum += k % 2 ? -t : t;
                    if (t < eps * abs(sum)) return sum;
                }
            };
            f.completely_monotone = false;
            return Estimate::of(em_sum(f, 1, em_default_point()));
        },
        [](const EvalContext&) {
            auto term = [](long k) {
                Real t = zeta(Real(2 * k + 1)) / factorial(2 * k + 1);
                return Complex(k % 2 ? -t : t);
            };
            // |c_k| ≤ ζ(3)/(2k+1)! ≤ 2/k!
            return Estimate::of(alternating_factorial_series(term, 1, Real(2), Real(1)));
        }));

    // Appendix A
    {
        auto r = make(
            "Bsum1", "GA", "Residue sum through ζ(-k) = (-1)^k B_{k+1}/(k+1)",
            "Σ_{k≥1} b^{2k-2} ζ(1-2k)/Γ(2k-1)", "-(1/2) Σ_{k≥1} b^{2k-2} B_{2k}/(k Γ(2k-1))",
            {{"b", "1", "0 < b < 2π"}},
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                auto term = [b](long k) { return Complex(pow(b, 2 * k - 2) * zeta(Real(1 - 2 * k)) / factorial(2 * k - 2)); };
                return series(term, 1, [b](long K) {
                    // |B_{2k}| ≤ (π²/3)(2k)!/(2π)^{2k}, so |c_k| ≤ (π²/3)(2k-1) b^{2k-2}/(2π)^{2k}
                    Real x = b / two_pi();
                    Real first = pi() * pi() / Real(3) * Real(2 * K - 1) * pow(x, 2 * K - 2) / (two_pi() * two_pi());
                    return ratio_tail(first, x * x * Real(2 * K + 1) / Real(2 * K - 1));
                });
            },
            [](const EvalContext& e) {
                Real b = e.params.real("b");
                auto term = [b](long k) {
                    return Complex(-(pow(b, 2 * k - 2) * bernoulli_real(2 * k)) / (factorial(2 * k - 2) * Real(2 * k)));
                };
                return series(term, 1, [b](long K) {
                    Real x = b / two_pi();
                    Real first = pi() * pi() / Real(3) * Real(2 * K - 1) * pow(x, 2 * K - 2) / (two_pi() * two_pi());
                    return ratio_tail(first, x * x * Real(2 * K + 1) / Real(2 * K - 1));
                });
            });
        r.check = [](const Params& p) {
            Real b = p.real("b");
            require(b.sign() > 0 && b < two_pi(), "requires 0 < b < 2π");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make("B2k-bridge", "GA", "Integral representation of the Bernoulli numbers (sign (-1)^{k+1})",
                      "(-1)^{k+1} π ∫_0^∞ t^{2k}/sinh²(πt) dt", "B_{2k}", {{"k", "2", "integer k >= 1"}},
                      [](const EvalContext& e) {
                          long k = e.params.integer("k");
                          Real p = pi();
                          auto g = [k, p](const Real& t) {
                              Real d = sinh(p * t);
                              return pow(t, 2 * k) / (d * d);
                          };
                          Estimate I = half_axis(e, g, 2.0 * 3.141592653589793, 2.0 * k);
                          return rc(k % 2 ? p : -p) * I;
                      },
                      [](const EvalContext& e) { return rc(bernoulli_real(2 * e.params.integer("k"))); });
        r.check = [](const Params& p) {
            long k = p.integer("k");
            require(k >= 1 && k <= 20, "requires integer 1 <= k <= 20");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make("Sumx", "GA", "Closed form of the interchanged series",
                      "Σ_{k≥1} (-1)^k (bt)^{2k}/(k Γ(2k-1))", "2 - 2 bt sin(bt) - 2 cos(bt)",
                      {{"b", "1", "b > 0"}, {"t", "7/10", "t >= 0"}},
                      [](const EvalContext& e) {
                          Real x = e.params.real("b") * e.params.real("t");
                          auto term = [x](long k) {
                              Real c = pow(x, 2 * k) / (factorial(2 * k - 2) * Real(k));
                              return Complex(k % 2 ? -c : c);
                          };
                          // (2k-2)! k ≥ k!, so |c_k| ≤ (x²)^k/k!
                          return Estimate::of(alternating_factorial_series(term, 1, Real(1), x * x));
                      },
                      [](const EvalContext& e) {
                          Real x = e.params.real("b") * e.params.real("t");
                          Real s = sin(x / 2L);
                          // 2 - 2cos x = 4 sin²(x/2)
                          return rc(s * s * 4L - x * sin(x) * 2L);
                      });
        r.check = [](const Params& p) {
            check_pos(p, "b");
            Real t = p.real("t");
            require(t.sign() >= 0 && p.real("b") * t <= Real(40), "requires t >= 0 and b t <= 40");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make("J3a", "GA", "Cosine integral against sinh^{-2}", "∫_0^∞ (1 - cos(bt))/sinh²(πt) dt",
                      "(b coth(b/2) - 2)/(2π)", {{"b", "1", "0 < b <= 6"}},
                      [](const EvalContext& e) { return j3a_integral(e, e.params.real("b")); },
                      [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          // b coth(b/2) - 2 = 2 (y coth y - 1) with y = b/2
                          Real y = b / 2L;
                          return rc(y * coth_minus_inv(y) * 2L / two_pi());
                      });
        r.check = [](const Params& p) {
            Real b = p.real("b");
            require(b.sign() > 0 && b <= Real(6), "requires 0 < b <= 6");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make("J3b", "GA", "Sine integral against sinh^{-2}", "∫_0^∞ t sin(bt)/sinh²(πt) dt",
                      "(b - sinh b)/(2π (1 - cosh b))", {{"b", "1", "0 < b <= 6"}},
                      [](const EvalContext& e) { return j3b_integral(e, e.params.real("b")); },
                      [](const EvalContext& e) {
                          Real b = e.params.real("b");
                          Real h = sinh(b / 2L);
                          // 1 - cosh b = -2 sinh²(b/2)
                          return rc((sinh(b) - b) / (two_pi() * h * h * 2L));
                      });
        r.check = [](const Params& p) {
            Real b = p.real("b");
            require(b.sign() > 0 && b <= Real(6), "requires 0 < b <= 6");
        };
        out.push_back(std::move(r));
    }

    // Appendix B
    {
        auto r = make(
            "T4b", "GB", "The residue sum of the hyperpower Bose series",
            "Σ_{k≥0} ζ(-2k-1)/((2k+1)! (a^{2k+1} - 1))", "-Σ_{k≥0} B_{2k+2}/((2k+2)! (a^{2k+1} - 1))",
            {{"a", "2", "a > 1"}},
            [](const EvalContext& e) {
                Real a = e.params.real("a");
                double r = 1.0 / (4.0 * 9.8696 * a.to_double() * a.to_double());
                return geometric(
                    [a](long k) {
                        return Complex(zeta(Real(-2 * k - 1)) / (factorial(2 * k + 1) * (pow(a, 2 * k + 1) - Real(1))));
                    },
                    0, r);
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a");
                double r = 1.0 / (4.0 * 9.8696 * a.to_double() * a.to_double());
                return geometric(
                    [a](long k) {
                        return Complex(-bernoulli_real(2 * k + 2) / (factorial(2 * k + 2) * (pow(a, 2 * k + 1) - Real(1))));
                    },
                    0, r);
            });
        r.check = [](const Params& p) { require(p.real("a") > Real(1), "requires a > 1"); };
        out.push_back(std::move(r));
    }
    {
        auto r = make("Aik", "GB", "Geometric expansion of the denominator", "1/(1 - a^{-2k-1})",
                      "Σ_{j≥0} a^{-(2k+1)j}", {{"a", "2", "a > 1"}, {"k", "1", "integer k >= 0"}},
                      [](const EvalContext& e) {
                          Real a = e.params.real("a");
                          long k = e.params.integer("k");
                          return rc(Real(1) / (Real(1) - pow(a, -(2 * k + 1))));
                      },
                      [](const EvalContext& e) {
                          Real a = e.params.real("a");
                          long k = e.params.integer("k");
                          Real q = pow(a, -(2 * k + 1));
                          double r = q.to_double();
                          return geometric([q](long j) { return Complex(pow(q, j)); }, 0, r);
                      });
        r.check = [](const Params& p) {
            require(p.real("a") >= Real(1.05), "requires a >= 1.05");
            long k = p.integer("k");
            require(k >= 0 && k <= 50, "requires integer 0 <= k <= 50");
        };
        out.push_back(std::move(r));
    }
    {
        auto r = make(
            "Sid", "GB", "Inner sum after interchanging the order of summation",
            "Σ_{k≥0} (-1)^k (t/a)^{2k+2}/(a^{j(2k+1)} (2k+2)!)", "a^j (1 - cos(t/a^{j+1}))",
            {{"a", "2", "a > 1"}, {"j", "2", "integer j >= 0"}, {"t", "9/10", "t >= 0"}},
            [](const EvalContext& e) {
                Real a = e.params.real("a"), t = e.params.real("t");
                long j = e.params.integer("j");
                Real x = t / a, aj = pow(a, j);
                auto term = [x, aj](long k) {
                    Real c = pow(x, 2 * k + 2) / (pow(aj, 2 * k + 1) * factorial(2 * k + 2));
                    return Complex(k % 2 ? -c : c);
                };
                // (2k+2)! ≥ k!
                Real A = x * x / aj, r = x * x / (aj * aj);
                return Estimate::of(alternating_factorial_series(term, 0, A, r));
            },
            [](const EvalContext& e) {
                Real a = e.params.real("a"), t = e.params.real("t");
                long j = e.params.integer("j");
                Real s = sin(t / pow(a, j + 1) / 2L);
                return rc(pow(a, j) * s * s * 2L);
            });
        r.check = [](const Params& p) {
            require(p.real("a") > Real(1), "requires a > 1");
            long j = p.integer("j");
            require(j >= 0 && j <= 60, "requires integer 0 <= j <= 60");
            Real t = p.real("t");
            require(t.sign() >= 0 && t <= Real(100), "requires 0 <= t <= 100");
        };
        out.push_back(std::move(r));
    }
}

}  // namespace mellin::cat
