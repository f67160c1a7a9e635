#include "mellin/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace mellin {

namespace {

constexpr double kLn2 = 0.69314718055994531;
constexpr double kTwoPi = 6.2831853071795865;

Real rounded(const Real& x) {
    Real r;
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Complex rounded(const Complex& z) { return Complex(rounded(z.re), rounded(z.im)); }

bool is_nonpositive_integer(const Complex& z) {
    return z.im.is_zero() && z.re.is_integer() && z.re.sign() <= 0;
}

// ---- Bernoulli numbers ----

class BernoulliTable {
public:
    mpq_class even(int k2) {
        std::lock_guard<std::mutex> lock(mu_);
        int k = k2 / 2;
        while (static_cast<int>(table_.size()) <= k) extend();
        return table_[k];
    }

private:
    // Σ_{j=0}^{k} C(2k+1, 2j) B_{2j} = (2k+1)/2
    void extend() {
        int k = static_cast<int>(table_.size());
        if (k == 0) {
            table_.emplace_back(1);
            return;
        }
        mpz_class n = 2 * k + 1;
        mpq_class acc(n, 2);
        mpz_class binom = 1;  // C(2k+1, 0)
        for (int j = 0; j < k; ++j) {
            acc -= mpq_class(binom) * table_[j];
            // advance C(2k+1, 2j) -> C(2k+1, 2j+2)
            binom = binom * (n - 2 * j) * (n - 2 * j - 1) / ((2 * j + 1) * (2 * j + 2));
        }
        mpq_class b = acc / mpq_class(n);
        b.canonicalize();
        table_.push_back(b);
    }

    std::mutex mu_;
    std::vector<mpq_class> table_;
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable t;
    return t;
}

// Per-thread rounded tables keyed by precision.
struct RealTables {
    std::vector<Real> b2k_over_fact;   // B_{2k}/(2k)!, index k
    std::vector<Real> stirling;        // B_{2k}/(2k(2k-1)), index k
    std::vector<Real> ln;              // ln n, index n

    const Real& b_over_fact(int k) {
        while (static_cast<int>(b2k_over_fact.size()) <= k) {
            int j = static_cast<int>(b2k_over_fact.size());
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), 2 * j);
            mpq_class q = bernoulli_table().even(2 * j) / mpq_class(f);
            Real r;
            mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
            b2k_over_fact.push_back(std::move(r));
        }
        return b2k_over_fact[k];
    }
    const Real& stirling_coeff(int k) {
        while (static_cast<int>(stirling.size()) <= k) {
            int j = static_cast<int>(stirling.size());
            Real r;
            if (j > 0) {
                mpq_class q = bernoulli_table().even(2 * j) / mpq_class(2 * j * (2 * j - 1));
                mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
            }
            stirling.push_back(std::move(r));
        }
        return stirling[k];
    }
    const Real& log_n(long n) {
        while (static_cast<long>(ln.size()) <= n) {
            long j = static_cast<long>(ln.size());
            ln.push_back(j == 0 ? Real(0) : log(Real(j)));
        }
        return ln[n];
    }
};

RealTables& tables() {
    thread_local std::map<long, RealTables> by_bits;
    return by_bits[current_bits()];
}

// ---- Gamma ----

// log Γ(w) by Stirling's series; |w| large, Re w > 0.
Complex stirling_log_gamma(const Complex& w) {
    Complex lw = log(w);
    Complex res = (w - Complex(Real(0.5))) * lw - w + Complex(ldexp(log(ldexp(const_pi(), 1)), -1));
    Complex inv = Complex(1) / w;
    Complex inv2 = inv * inv;
    Complex p = inv;
    double eps_log = -static_cast<double>(current_bits()) * 0.30103 - 2;
    double scale = std::max(0.0, abs(res).log10_abs());
    double prev = INFINITY;
    for (int k = 1; k < 100000; ++k) {
        Complex term = p * tables().stirling_coeff(k);
        double tl = abs(term).log10_abs();
        if (tl > prev) break;  // asymptotic series started to diverge
        res += term;
        if (tl < eps_log + scale - 1) break;
        prev = tl;
        p = p * inv2;
    }
    return res;
}

long stirling_radius() { return static_cast<long>(0.13 * current_bits()) + 6; }

long guard_bits_for(const Complex& z) {
    double m = std::max(2.0, std::hypot(z.re.to_double(), z.im.to_double()));
    return 24 + static_cast<long>(std::log2(m * std::log(m) + 2));
}

}  // namespace

mpq_class bernoulli(int k) {
    if (k < 0) throw DomainError("negative Bernoulli index");
    if (k == 1) return mpq_class(-1, 2);
    if (k % 2 == 1) return mpq_class(0);
    return bernoulli_table().even(k);
}

Real bernoulli_real(int k) {
    mpq_class q = bernoulli(k);
    Real r;
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Complex gamma(const Complex& z) {
    if (is_nonpositive_integer(z)) throw DomainError("Gamma pole at " + to_string(z.re, 10));
    if (z.re < Real(0.5)) {
        Complex s = sin_pi(z);
        return Complex(const_pi()) / (s * gamma(Complex(1) - z));
    }
    long outer = current_bits();
    Complex out;
    {
        auto g = PrecisionGuard::from_bits(outer + guard_bits_for(z));
        Complex w = rounded(z);
        long R = stirling_radius();
        long r = 0;
        double re = w.re.to_double(), im = std::fabs(w.im.to_double());
        if (std::hypot(re, im) < R) r = std::max<long>(0, static_cast<long>(std::ceil(std::sqrt(std::max(0.0, double(R) * R - im * im)) - re)));
        Complex prod(1);
        for (long j = 0; j < r; ++j) prod = prod * (w + Complex(Real(j)));
        Complex lg = stirling_log_gamma(w + Complex(Real(r)));
        out = exp(lg) / prod;
    }
    return rounded(out);
}

Real gamma(const Real& x) { return gamma(Complex(x)).re; }

Complex log_gamma(const Complex& z) {
    if (z.re.sign() <= 0) throw DomainError("log_gamma requires Re z > 0");
    long outer = current_bits();
    Complex out;
    {
        auto g = PrecisionGuard::from_bits(outer + guard_bits_for(z));
        Complex w = rounded(z);
        long R = stirling_radius();
        long r = 0;
        double re = w.re.to_double(), im = std::fabs(w.im.to_double());
        if (std::hypot(re, im) < R) r = std::max<long>(0, static_cast<long>(std::ceil(std::sqrt(std::max(0.0, double(R) * R - im * im)) - re)));
        Complex acc = stirling_log_gamma(w + Complex(Real(r)));
        for (long j = 0; j < r; ++j) acc -= log(w + Complex(Real(j)));
        out = acc;
    }
    return rounded(out);
}

Complex gamma(const Complex& z, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    return gamma(z);
}

Real gamma_upper(const Real& a, const Real& x) {
    if (x.sign() <= 0) throw DomainError("gamma_upper requires x > 0");
    Real r;
    mpfr_gamma_inc(r.raw(), a.raw(), x.raw(), MPFR_RNDN);
    if (!r.is_finite()) throw PrecisionOverflow("incomplete gamma out of range");
    return r;
}

// ---- Zeta ----

namespace {

struct EmPlan {
    long n;
    int k;
};

// Picks N (direct terms) and K (Bernoulli corrections) so the last kept
// correction is below 2^{-bits}; log-magnitudes in double precision.
EmPlan plan_zeta(double sigma, double t, long bits) {
    double eps = -static_cast<double>(bits) * kLn2 - 4.0;
    double as = std::hypot(sigma, t);
    long n = std::max<long>(8, static_cast<long>(std::ceil(std::fabs(t) / kTwoPi * 0.6 + bits * 0.05)));
    for (int attempt = 0; attempt < 200; ++attempt) {
        double ln_n = std::log(static_cast<double>(n));
        // |B_2/2!| = 1/12
        double lt = std::log(1.0 / 12.0) + std::log(std::max(as, 1e-300)) - (sigma + 1) * ln_n;
        for (int k = 1; k < 4000; ++k) {
            if (lt < eps) return {n, k};
            double a = std::hypot(sigma + 2 * k - 1, t), b = std::hypot(sigma + 2 * k, t);
            double ratio = std::log(a) + std::log(b) - 2 * std::log(kTwoPi) - 2 * ln_n;
            if (ratio >= -0.05) break;
            lt += ratio;
        }
        n = static_cast<long>(std::ceil(n * 1.3)) + 1;
    }
    throw ConvergenceError("zeta: no Euler-Maclaurin plan");
}

Complex zeta_em(const Complex& s) {
    EmPlan plan = plan_zeta(s.re.to_double(), s.im.to_double(), current_bits());
    long N = plan.n;
    // n^{-s} for n < N, built multiplicatively from prime powers.
    std::vector<Complex> pw(static_cast<size_t>(N + 1));
    std::vector<long> spf(static_cast<size_t>(N + 1), 0);
    for (long i = 2; i <= N; ++i)
        if (spf[i] == 0)
            for (long j = i; j <= N; j += i)
                if (spf[j] == 0) spf[j] = i;
    Complex minus_s = -s;
    Complex sum(1);
    pw[1] = Complex(1);
    for (long n = 2; n <= N; ++n) {
        long p = spf[n];
        if (p != n) {
            pw[n] = pw[p] * pw[n / p];
        } else {
            const Real& ln = tables().log_n(n);
            Real mag = exp(minus_s.re * ln);
            if (s.im.is_zero())
                pw[n] = Complex(mag);
            else
                pw[n] = expi(minus_s.im * ln) * mag;
        }
        if (n < N) sum += pw[n];
    }
    const Complex& Nps = pw[N];
    Real Nr(N);
    // N^{1-s}/(s-1) + N^{-s}/2
    sum += Nps * Nr / (s - Complex(1));
    sum += Complex(ldexp(Nps.re, -1), ldexp(Nps.im, -1));
    Real invN2 = Real(1) / (Nr * Nr);
    Complex poch = s;                       // s(s+1)...(s+2k-2)
    Complex npow = Nps / Nr;                // N^{-s-2k+1}
    for (int k = 1; k <= plan.k; ++k) {
        sum += poch * npow * tables().b_over_fact(k);
        Complex a = s + Complex(Real(2 * k - 1));
        Complex b = s + Complex(Real(2 * k));
        poch = poch * a * b;
        npow = npow * invN2;
    }
    return sum;
}

}  // namespace

Complex zeta(const Complex& s) {
    if (s.im.is_zero()) {
        if (s.re == Real(1)) throw DomainError("zeta pole at s = 1");
        if (s.re.is_zero()) return Complex(Real(-0.5));
        if (s.re.sign() < 0 && s.re.is_integer() && ldexp(s.re, -1).is_integer()) return Complex(0);
    }
    long outer = current_bits();
    Complex out;
    {
        auto g = PrecisionGuard::from_bits(outer + 16);
        Complex w = rounded(s);
        if (w.re < Real(0.5)) {
            Complex one_minus = Complex(1) - w;
            Complex f = pow(Real(2), w) * pow(const_pi(), w - Complex(1));
            f = f * sin_pi(Complex(ldexp(w.re, -1), ldexp(w.im, -1)));
            out = f * gamma(one_minus) * zeta_em(one_minus);
        } else {
            out = zeta_em(w);
        }
    }
    return rounded(out);
}

Real zeta(const Real& x) { return zeta(Complex(x)).re; }

Complex zeta(const Complex& s, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    return zeta(s);
}

// ---- q-digamma, theta, upsilon ----

SeriesResult q_digamma_series(const Real& q, const Complex& z) {
    if (!(q.sign() > 0 && q < Real(1))) throw DomainError("q_digamma requires 0 < q < 1");
    Real lq = log(q);
    Real eps = ldexp(Real(1), -current_bits());
    Complex sum(0);
    Real one(1);
    long k = 0;
    Real tail;
    for (;; ++k) {
        Complex qk = exp((Complex(Real(k)) + z) * lq);
        Complex den = Complex(1) - qk;
        if (den.re.is_zero() && den.im.is_zero()) throw DomainError("q_digamma pole");
        sum += qk / den;
        // remaining terms bounded by a geometric series in q
        Real m = abs(qk) * q;
        if (m < Real(0.5)) {
            tail = m / ((one - q) * (one - m));
            if (tail < eps * max(one, abs(sum))) break;
        }
        if (k > 10000000) throw ConvergenceError("q_digamma: too many terms");
    }
    SeriesResult r;
    r.value = Complex(-log1p(-q)) + sum * lq;
    r.terms_used = k + 1;
    r.tail_bound = tail * abs(lq);
    return r;
}

Complex q_digamma(const Real& q, const Complex& z, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    return q_digamma_series(q, z).value;
}

SeriesResult theta3_series(const Real& x) {
    if (!(x.sign() > 0 && x < Real(1))) throw DomainError("theta3 requires 0 < x < 1");
    Real eps = ldexp(Real(1), -current_bits());
    Real sum(0), one(1);
    long k = 1;
    Real tail;
    for (;; ++k) {
        Real t = pow(x, k * k);
        sum += t;
        // Σ_{j>k} x^{j²} ≤ x^{(k+1)²}/(1 - x^{2k+3})
        Real next = pow(x, (k + 1) * (k + 1));
        tail = next / (one - pow(x, 2 * k + 3));
        if (tail < eps) break;
        if (k > 100000000) throw ConvergenceError("theta3: too many terms");
    }
    SeriesResult r;
    r.value = Complex(one + ldexp(sum, 1));
    r.terms_used = k;
    r.tail_bound = ldexp(tail, 1);
    return r;
}

Real theta3(const Real& x, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    return theta3_series(x).value.re;
}

Complex upsilon(const Complex& s, const Real& b) {
    if (b.sign() <= 0) throw DomainError("upsilon requires b > 0");
    Complex half(ldexp(s.re, -1), ldexp(s.im, -1));
    return zeta(s) * pow(b, -half) * gamma(half);
}

Complex upsilon(const Complex& s, const Real& b, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    return upsilon(s, b);
}

// ---- polar parts on the critical line ----

Real zeta_phase_closed_form(const Real& v) {
    Real pi = const_pi();
    Real theta = log_gamma(Complex(Real(0.5), v)).im;
    Real a = ldexp(v * log(ldexp(pi, 1)), -1) - ldexp(theta, -1) - pi * Real(9) / Real(8);
    return a + ldexp(atan(exp(pi * v)), -1);
}

PolarParts polar_parts(HalfLine which, const Real& v) {
    PolarParts p;
    Complex s(Real(0.5), v);
    if (which == HalfLine::gamma) {
        p.modulus = abs(gamma(s));
        p.phase = log_gamma(s).im;
        p.closed_form_residual = Real(0);
        return p;
    }
    Complex z = zeta(s);
    Real pi = const_pi();
    Real alpha = zeta_phase_closed_form(v);
    Real a = arg(z);
    Real delta = alpha - a;
    Real two_pi = ldexp(pi, 1);
    Real m = round(delta / two_pi);
    p.modulus = abs(z);
    p.phase = a + m * two_pi;
    Real rest = delta - m * two_pi;  // in [-π, π]
    Real k = round(rest / pi);
    p.closed_form_residual = abs(rest - k * pi);
    p.closed_form_sign = k.is_zero() ? 1 : -1;
    return p;
}

PolarParts polar_parts(HalfLine which, const Real& v, const PrecisionContext& ctx) {
    PrecisionGuard g(ctx.working_digits);
    return polar_parts(which, v);
}

}  // namespace mellin
