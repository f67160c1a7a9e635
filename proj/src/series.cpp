#include "mellin/series.hpp"

#include <algorithm>
#include <cmath>

#include "mellin/specfun.hpp"

namespace mellin {

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr double kPi = 3.141592653589793;

Real eps_here() { return ldexp(Real(1), -current_bits()); }
double log_eps_here() { return -static_cast<double>(current_bits()) * 0.6931471805599453; }

Real from_log(double l) {
    if (l < -1e8) return Real(0);
    return exp(Real(l));
}

// log of an upper bound for Γ(a, y); +inf when y is too small for the bound.
double log_upper_gamma_bound(double a, double y) {
    if (a <= 1.0) return (a - 1.0) * std::log(y) - y;
    if (y < 2.0 * (a - 1.0) + 1.0) return INFINITY;
    return (a - 1.0) * std::log(y) - y + std::log(2.0);
}

}  // namespace

SeriesResult sum_with_bound(const std::function<Complex(long)>& term, long k0,
                            const std::function<Real(long)>& bound, long max_terms) {
    Real eps = eps_here();
    Real one(1);
    Complex sum(0);
    long k = k0;
    for (; k < k0 + max_terms; ++k) {
        sum += term(k);
        Real b = bound(k + 1);
        if (b < eps * max(one, abs(sum))) {
            SeriesResult r;
            r.value = sum;
            r.terms_used = k - k0 + 1;
            r.tail_bound = b;
            return r;
        }
    }
    throw ConvergenceError("series did not reach tolerance within " + std::to_string(max_terms) + " terms");
}

long em_default_point() { return std::max<long>(32, static_cast<long>(0.45 * current_digits()) + 10); }

SeriesResult em_sum(const EmTerm& f, long start, long M) {
    M = std::max(M, start);
    Real sum(0);
    for (long j = start; j < M; ++j) sum += f.value(Real(j));
    Real Mr(M);
    sum += f.tail_integral(M);
    sum += ldexp(f.value(Mr), -1);

    int kmax = static_cast<int>(0.8 * current_digits()) + 24;
    Real eps = eps_here();
    Real one(1);
    // jets are built at a modest order first and widened only if needed
    for (int order_k = std::min(16, kmax);; order_k = std::min(2 * order_k, kmax)) {
        Jet jet = f.jet(Jet::variable(2 * order_k + 1, Mr));
        Real acc = sum;
        Real prev;
        bool have_prev = false;
        for (int k = 1; k <= order_k; ++k) {
            // B_{2k}/(2k)! f^{(2k-1)}(M) = B_{2k}/(2k) c_{2k-1}
            Real t = bernoulli_real(2 * k) / static_cast<long>(2 * k) * jet[2 * k - 1];
            Real at = abs(t);
            if (have_prev && at > prev && !at.is_zero())
                throw ConvergenceError("Euler-Maclaurin corrections grow at M = " + std::to_string(M));
            acc -= t;
            if (at < eps * max(one, abs(acc))) {
                SeriesResult r;
                r.value = Complex(acc);
                r.terms_used = M - start + k;
                r.tail_bound = at + eps * max(one, abs(acc));
                return r;
            }
            prev = at;
            have_prev = true;
        }
        if (order_k == kmax) break;
    }
    throw ConvergenceError("Euler-Maclaurin corrections did not converge at M = " + std::to_string(M));
}

namespace {

// ∫_M^∞ Σ_m c_m e^{-m x t^σ} dt = Σ_m c_m (1/σ)(m x)^{-1/σ} Γ(1/σ, m x M^σ),
// c_m = 1 (bose) or (-1)^{m+1} (fermi).
Real exp_tail_integral(ExpKind kind, const Real& x, const Real& sigma, long M) {
    Real a = Real(1) / sigma;
    Real y = x * pow(Real(M), sigma);
    if (kind == ExpKind::plain) return a * pow(x, -a) * gamma_upper(a, y);
    Real eps = eps_here();
    Real sum(0);
    for (long m = 1; m < 100000; ++m) {
        Real mx = x * m;
        Real t = a * pow(mx, -a) * gamma_upper(a, y * m);
        if (kind == ExpKind::fermi && m % 2 == 0) t = -t;
        sum += t;
        if (abs(t) < eps * abs(sum)) return sum;
    }
    throw ConvergenceError("tail integral series did not converge");
}

Real exp_term(ExpKind kind, const Real& u) {
    switch (kind) {
        case ExpKind::plain: return exp(-u);
        case ExpKind::bose: return Real(1) / expm1(u);
        case ExpKind::fermi: return Real(1) / (exp(u) + Real(1));
    }
    return Real(0);
}

Jet exp_term(ExpKind kind, const Jet& u) {
    switch (kind) {
        case ExpKind::plain: return exp(-u);
        case ExpKind::bose: return Real(1) / expm1(u);
        case ExpKind::fermi: return Real(1) / (exp(u) + Real(1));
    }
    return u;
}

Real power_of_index(long j, const Real& sigma, bool int_sigma, long isig) {
    if (int_sigma) return pow(Real(j), isig);
    return pow(Real(j), sigma);
}

}  // namespace

SeriesResult exp_family_sum(ExpKind kind, const Real& x, const Real& sigma) {
    if (x.sign() <= 0 || sigma.sign() <= 0) throw DomainError("exp_family_sum requires x > 0, sigma > 0");
    double xd = x.to_double(), sd = sigma.to_double();
    double leps = log_eps_here() - 4.0;
    double a = 1.0 / sd;
    // smallest J whose integral tail bound is below eps
    auto log_tail = [&](double J) {
        double y = xd * std::pow(J, sd);
        double l = -std::log(sd) - a * std::log(xd) + log_upper_gamma_bound(a, y);
        if (kind == ExpKind::bose) l -= std::log1p(-std::exp(-y));
        return l;
    };
    double J = std::max(2.0, std::pow((-leps + 10.0) / xd, a));
    const double direct_limit = 30000.0;
    while (J <= direct_limit && log_tail(J) > leps) J = std::ceil(J * 1.2) + 1;

    bool int_sigma = sigma.is_integer() && sd < 64;
    long isig = int_sigma ? sigma.to_long() : 0;
    if (J <= direct_limit) {
        long Jl = static_cast<long>(J);
        Real sum(0);
        for (long j = 1; j <= Jl; ++j) sum += exp_term(kind, x * power_of_index(j, sigma, int_sigma, isig));
        SeriesResult r;
        r.value = Complex(sum);
        r.terms_used = Jl;
        r.tail_bound = from_log(log_tail(static_cast<double>(Jl)));
        return r;
    }

    EmTerm f;
    f.value = [&](const Real& t) { return exp_term(kind, x * pow(t, sigma)); };
    f.jet = [&](const Jet& t) { return exp_term(kind, pow(t, sigma) * x); };
    f.tail_integral = [&](long M) { return exp_tail_integral(kind, x, sigma, M); };
    f.completely_monotone = kind != ExpKind::fermi && sd <= 1.0;
    long M = em_default_point();
    for (int attempt = 0; attempt < 4; ++attempt, M *= 2) {
        try {
            return em_sum(f, 1, M);
        } catch (const ConvergenceError&) {
            if (attempt == 3) throw;
        }
    }
    throw ConvergenceError("exp_family_sum failed");
}

SeriesResult omega(const Real& b, const Real& sigma) {
    if (b.sign() <= 0 || sigma.sign() <= 0) throw DomainError("omega requires b > 0, sigma > 0");
    return exp_family_sum(ExpKind::plain, b, sigma);
}

SeriesResult omega(const Real& b, const Real& sigma, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    return omega(b, sigma);
}

SeriesResult lambert_sum(const Real& a, int sign, const Real& u, const Real& w, long k0) {
    if (sign != 1 && sign != -1) throw DomainError("lambert_sum sign must be +1 or -1");
    if (!(a > Real(1) + eps_here())) throw ConvergenceError("lambert_sum requires a > 1");
    if (u.sign() <= 0) throw DomainError("lambert_sum exponent map must be increasing");
    if ((u * k0 + w).sign() <= 0 && sign == -1) throw DomainError("lambert_sum exponent must be positive");
    Real one(1);
    Real inv_au = pow(a, -u);
    auto term = [&](long k) {
        Real p = pow(a, u * k + w);
        return Complex(one / (p + Real(sign)));
    };
    auto bound = [&](long k) {
        Real q = pow(a, -(u * k + w));
        if (!(q < Real(0.5))) return Real(1e30);
        return q / ((one - q) * (one - inv_au));
    };
    return sum_with_bound(term, k0, bound);
}

SeriesResult lambert_sum(const Real& a, int sign, const Real& u, const Real& w, long k0,
                         const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    return lambert_sum(a, sign, u, w, k0);
}

SeriesResult imaginary_pole_series(const Real& a, const std::function<Complex(long)>& weight,
                                   const PoleSeriesOptions& opt) {
    if (!(a > Real(1))) throw DomainError("imaginary_pole_series requires a > 1");
    double L = log(a).to_double();
    if (L < opt.min_log_a)
        throw SlowDecay("ln a = " + std::to_string(L) + " below " + std::to_string(opt.min_log_a));
    double leps = log_eps_here() - 4.0;
    // |Γ(iy)| = sqrt(π/(y sinh πy)), times the growth allowance
    auto log_env = [&](long k) {
        double y = 2.0 * kPi * k / L;
        double lsinh = kPi * y - std::log(2.0) + std::log1p(-std::exp(-2.0 * kPi * y));
        return 0.5 * (std::log(kPi) - std::log(y) - lsinh) + opt.growth * std::log(std::max(y, 1.0)) + std::log(10.0);
    };
    double q = std::exp(-2.0 * kPi * kPi / L);
    long K = 1;
    while (log_env(K + 1) - std::log1p(-q) > leps) {
        ++K;
        if (K > opt.max_terms)
            throw SlowDecay("imaginary pole series needs more than " + std::to_string(opt.max_terms) + " terms");
    }
    Complex sum(0);
    for (long k = 1; k <= K; ++k) sum += weight(k);
    SeriesResult r;
    r.value = sum;
    r.terms_used = K;
    r.tail_bound = from_log(log_env(K + 1) - std::log1p(-q));
    return r;
}

SeriesResult imaginary_pole_series(const Real& a, const std::function<Complex(long)>& weight,
                                   const PrecisionContext& ctx, const PoleSeriesOptions& opt) {
    PrecisionGuard g(ctx.working_digits);
    return imaginary_pole_series(a, weight, opt);
}

SeriesResult alternating_factorial_series(const std::function<Complex(long)>& term, long k0,
                                          const Real& A, const Real& r) {
    double lA = std::log(std::max(1e-300, A.to_double()));
    double lr = std::log(std::max(1e-300, r.to_double()));
    double rd = r.to_double();
    auto bound = [&](long k) {
        if (k + 1 <= 2.0 * rd) return Real(1e30);
        // A r^k/k! times the geometric factor 1/(1 - r/(k+1))
        double l = lA + k * lr - std::lgamma(static_cast<double>(k) + 1.0) - std::log1p(-rd / (k + 1.0));
        return from_log(l);
    };
    return sum_with_bound(term, k0, bound);
}

SeriesResult alternating_factorial_series(const std::function<Complex(long)>& term, long k0,
                                          const Real& A, const Real& r, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    return alternating_factorial_series(term, k0, A, r);
}

SeriesResult hyperpower_sum(const Real& a, const std::function<Complex(const Real&)>& f, long n0) {
    if (!(a > Real(1))) throw DomainError("hyperpower_sum requires a > 1");
    Real eps = eps_here();
    Real one(1);
    Complex sum(0);
    Real prev(0);
    Real x = pow(a, n0);
    for (long n = n0; n < n0 + 100000; ++n, x = x * a) {
        Complex t = f(x);
        Real at = abs(t);
        sum += t;
        // decay is at least exponential in a^n, so once terms shrink by more
        // than a factor 4 the remainder is below the last term
        if (n > n0 + 1 && at < eps * max(one, abs(sum)) && at * Real(4) < prev) {
            SeriesResult r;
            r.value = sum;
            r.terms_used = n - n0 + 1;
            r.tail_bound = at;
            return r;
        }
        prev = at;
    }
    throw ConvergenceError("hyperpower_sum did not converge");
}

SeriesResult telescoping_check(const Real& b) {
    if (b.sign() <= 0) throw DomainError("telescoping_check requires b > 0");
    auto f = [&](const Real& p) {
        Real x = p * b;
        Real s = sinh(x);
        return Complex(p * cosh(x) / (s * s));
    };
    return hyperpower_sum(Real(2), f, 0);
}

SeriesResult telescoping_check(const Real& b, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    return telescoping_check(b);
}

}  // namespace mellin
