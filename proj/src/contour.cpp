#include "mellin/contour.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mellin {

namespace {

constexpr double kLn10 = 2.302585092994046;

std::mutex g_rule_mutex;
std::map<std::pair<int, long>, std::shared_ptr<const GaussLegendreRule>> g_rules;

std::shared_ptr<GaussLegendreRule> build_rule(int m, long bits) {
    auto guard = PrecisionGuard::from_bits(bits + 32);
    auto rule = std::make_shared<GaussLegendreRule>();
    rule->order = m;
    rule->bits = bits;
    rule->nodes.resize(static_cast<size_t>(m));
    rule->weights.resize(static_cast<size_t>(m));
    Real eps = ldexp(Real(1), -(bits + 16));
    Real one(1), two(2);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        Real x(std::cos(M_PI * (i + 0.75) / (m + 0.5)));
        Real dp;
        for (int it = 0; it < 100; ++it) {
            // P_m(x) and P_m'(x) by the three-term recurrence
            Real p0(1), p1 = x;
            for (int k = 2; k <= m; ++k) {
                Real p2 = (x * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) / static_cast<long>(k);
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            if (m == 1) p0 = one;
            dp = (p0 - x * p1) * static_cast<long>(m) / (one - x * x);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < eps) break;
        }
        Real w = two / ((one - x * x) * dp * dp);
        auto lo = static_cast<size_t>(i), hi = static_cast<size_t>(m - 1 - i);
        auto to_bits = [&](const Real& v) {
            auto g = PrecisionGuard::from_bits(bits);
            Real r;
            mpfr_set(r.raw(), v.raw(), MPFR_RNDN);
            return r;
        };
        rule->nodes[lo] = to_bits(-x);
        rule->nodes[hi] = to_bits(x);
        rule->weights[lo] = to_bits(w);
        rule->weights[hi] = to_bits(w);
    }
    return rule;
}

Real tolerance_for(const PrecisionContext& ctx) {
    return tenth_power(ctx.working_digits);
}

// Panel engine shared by vertical lines and real intervals.
class PanelIntegrator {
public:
    PanelIntegrator(std::function<Complex(const Real&)> g, const PrecisionContext& ctx, int order, int max_depth)
        : g_(std::move(g)), ctx_(ctx), max_depth_(max_depth) {
        bits_ = digits_to_bits(ctx.working_digits);
        rule_ = gauss_legendre(order, bits_);
        auto guard = PrecisionGuard::from_bits(bits_);
        tol_ = tolerance_for(ctx) * 10L;
    }

    struct Panel {
        Complex value;
        Real error;
        long evaluations = 0;
        long leaves = 0;
    };

    Panel integrate(const Real& a, const Real& b) const {
        Panel p;
        Complex whole = apply(a, b, p);
        refine(a, b, whole, 0, p);
        return p;
    }

    // Panels [cuts[i], cuts[i+1]] in parallel or serially; reduced in order.
    std::vector<Panel> integrate_all(const std::vector<Real>& cuts, bool parallel) const {
        long n = static_cast<long>(cuts.size()) - 1;
        std::vector<Panel> out(static_cast<size_t>(std::max(0L, n)));
        std::vector<std::exception_ptr> errors(out.size());
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (long i = 0; i < n; ++i) run_one(cuts, i, out, errors);
        } else {
            for (long i = 0; i < n; ++i) run_one(cuts, i, out, errors);
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        return out;
    }

    long bits() const { return bits_; }

private:
    void run_one(const std::vector<Real>& cuts, long i, std::vector<Panel>& out,
                 std::vector<std::exception_ptr>& errors) const {
        try {
            auto guard = PrecisionGuard::from_bits(bits_);
            out[static_cast<size_t>(i)] = integrate(cuts[static_cast<size_t>(i)], cuts[static_cast<size_t>(i + 1)]);
        } catch (...) {
            errors[static_cast<size_t>(i)] = std::current_exception();
        }
    }

    Complex apply(const Real& a, const Real& b, Panel& p) const {
        Real half = ldexp(b - a, -1);
        Real mid = ldexp(a + b, -1);
        Complex sum(0);
        for (size_t k = 0; k < rule_->nodes.size(); ++k) {
            Real v = mid + half * rule_->nodes[k];
            Complex f = g_(v);
            if (!f.re.is_finite() || !f.im.is_finite())
                throw PoleOnContour("integrand not finite at v = " + to_string(v, 12));
            sum += f * rule_->weights[k];
        }
        p.evaluations += static_cast<long>(rule_->nodes.size());
        return sum * half;
    }

    void refine(const Real& a, const Real& b, const Complex& whole, int depth, Panel& p) const {
        Real mid = ldexp(a + b, -1);
        Complex left = apply(a, mid, p);
        Complex right = apply(mid, b, p);
        Complex both = left + right;
        Real diff = abs(both - whole);
        Real scale = max(Real(1), abs(both));
        if (diff <= tol_ * scale) {
            p.value += both;
            p.error += diff;
            ++p.leaves;
            return;
        }
        if (depth >= max_depth_) {
            if (diff > sqrt(tol_) * scale)
                throw PoleOnContour("panel [" + to_string(a, 10) + ", " + to_string(b, 10) +
                                    "] does not converge; singularity on the contour?");
            p.value += both;
            p.error += diff;
            ++p.leaves;
            return;
        }
        refine(a, mid, left, depth + 1, p);
        refine(mid, b, right, depth + 1, p);
    }

    std::function<Complex(const Real&)> g_;
    PrecisionContext ctx_;
    int max_depth_;
    long bits_;
    std::shared_ptr<const GaussLegendreRule> rule_;
    Real tol_;
};

// log of M ∫_V^∞ v^p e^{-r v} dv (for V large enough that the integrand decreases).
double log_tail(double logM, const DecayModel& d, double V) {
    double denom = d.rate - std::max(0.0, d.power) / V;
    if (denom <= 0.0) return INFINITY;
    return logM + d.power * std::log(V) - d.rate * V - std::log(denom);
}

double log_envelope(const DecayModel& d, double v) { return d.power * std::log(v) - d.rate * v; }

double ln_abs(const Complex& z) {
    Real a = abs(z);
    if (a.is_zero()) return -INFINITY;
    return a.log10_abs() * kLn10;
}

struct LineSetup {
    std::function<Complex(const Real&)> g;
    bool one_sided;
};

LineSetup make_line(const ContourSpec& spec) {
    Real c = spec.c;
    auto f = spec.integrand;
    bool re_only = spec.part == Part::real_only || spec.symmetric;
    LineSetup s;
    s.one_sided = spec.symmetric;
    s.g = [c, f, re_only](const Real& v) {
        Complex z = f(Complex(c, v));
        if (re_only) return Complex(z.re);
        return z;
    };
    return s;
}

QuadratureResult integrate_line(const ContourSpec& spec, const PrecisionContext& ctx, const QuadratureOptions& opt) {
    ctx.validate();
    if (!spec.integrand) throw DomainError("contour integrand is empty");
    if (!(spec.decay.rate > 0.0)) throw DecayViolation("decay rate must be positive");
    auto guard = PrecisionGuard(ctx.working_digits);
    LineSetup line = make_line(spec);
    const DecayModel& d = spec.decay;
    double log_tol = -ctx.working_digits * kLn10;

    double V = opt.height;
    double logM = -INFINITY;
    auto measure = [&](double v) {
        double best = -INFINITY;
        best = std::max(best, ln_abs(line.g(Real(v))) - log_envelope(d, v));
        if (!line.one_sided) best = std::max(best, ln_abs(line.g(Real(-v))) - log_envelope(d, v));
        return best;
    };
    if (V <= 0.0) {
        for (double v : {1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0}) logM = std::max(logM, measure(d.v0 * v));
        if (!std::isfinite(logM)) logM = log_tol;
        V = std::max(d.v0, 2.0);
        while (log_tail(logM, d, V) > log_tol) {
            V += 0.5;
            if (V > opt.max_height)
                throw SlowDecay("truncation height exceeds " + std::to_string(opt.max_height));
        }
        V = std::ceil(V);
        // the certificate must still hold where the line is cut
        for (double v : {V, 1.25 * V}) {
            double m = measure(v);
            if (m > logM + std::log(1e3))
                throw DecayViolation("integrand exceeds its decay envelope at v = " + std::to_string(v));
        }
    }

    int order = opt.order > 0 ? opt.order : default_order(ctx.working_digits);
    PanelIntegrator engine(line.g, ctx, order, opt.max_depth);

    auto cuts_for = [&](double lo, double hi) {
        std::vector<Real> cuts;
        long n = std::max(1L, static_cast<long>(std::ceil(hi - lo)));
        Real step = (Real(hi) - Real(lo)) / n;
        for (long k = 0; k <= n; ++k) cuts.push_back(Real(lo) + step * k);
        return cuts;
    };
    std::vector<Real> cuts;
    if (line.one_sided) {
        cuts = cuts_for(0.0, V);
    } else {
        cuts = cuts_for(-V, V);
    }
    auto panels = engine.integrate_all(cuts, opt.parallel);

    QuadratureResult r;
    Complex total(0);
    Real err(0);
    for (auto& p : panels) {
        total += p.value;
        err += p.error;
        r.evaluations += p.evaluations;
        r.panels += p.leaves;
    }

    Real tail_est = exp(Real(std::max(log_tail(logM, d, V), -1e6)));
    if (opt.check_truncation) {
        double extra = std::max(2.0, std::ceil(V / 4.0));
        std::vector<Real> ext = cuts_for(V, V + extra);
        auto more = engine.integrate_all(ext, opt.parallel);
        Complex piece(0);
        for (auto& p : more) {
            piece += p.value;
            err += p.error;
            r.evaluations += p.evaluations;
        }
        if (!line.one_sided) {
            auto neg = engine.integrate_all(cuts_for(-V - extra, -V), opt.parallel);
            for (auto& p : neg) {
                piece += p.value;
                err += p.error;
                r.evaluations += p.evaluations;
            }
        }
        Real measured = abs(piece);
        if (measured > tail_est * Real(1e3) + tolerance_for(ctx))
            throw DecayViolation("integral beyond the truncation height exceeds its envelope bound");
        err += measured;
    }
    err += tail_est;

    Real scale = line.one_sided ? Real(1) / const_pi() : Real(1) / (const_pi() * 2L);
    r.value = total * scale;
    r.error_estimate = err * scale;
    r.truncation_height = Real(V);
    return r;
}

}  // namespace

DecayModel DecayModel::gamma_like(double c, double extra) {
    DecayModel d;
    d.rate = M_PI / 2.0;
    d.power = c - 0.5 + extra;
    return d;
}

DecayModel DecayModel::gamma_squared_like(double c, double extra) {
    DecayModel d;
    d.rate = M_PI;
    d.power = 2.0 * c - 1.0 + extra;
    return d;
}

DecayModel DecayModel::custom(double rate, double power) {
    DecayModel d;
    d.rate = rate;
    d.power = power;
    return d;
}

int default_order(long digits) { return static_cast<int>(0.6 * static_cast<double>(digits)) + 12; }

std::shared_ptr<const GaussLegendreRule> gauss_legendre(int order, long bits) {
    if (order < 1) throw DomainError("Gauss-Legendre order must be positive");
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto key = std::make_pair(order, bits);
    auto it = g_rules.find(key);
    if (it != g_rules.end()) return it->second;
    auto rule = build_rule(order, bits);
    g_rules[key] = rule;
    return rule;
}

QuadratureResult integrate_vertical(const ContourSpec& spec, const PrecisionContext& ctx,
                                    const QuadratureOptions& opt) {
    return integrate_line(spec, ctx, opt);
}

QuadratureResult integrate_vertical_serial(const ContourSpec& spec, const PrecisionContext& ctx,
                                           QuadratureOptions opt) {
    opt.parallel = false;
    return integrate_line(spec, ctx, opt);
}

ShiftReport shift_contour(const ContourSpec& spec, const std::vector<std::pair<Complex, Complex>>& residues,
                          const Real& new_c, const PrecisionContext& ctx, const QuadratureOptions& opt) {
    auto guard = PrecisionGuard(ctx.working_digits);
    ShiftReport rep;
    rep.at_old = integrate_vertical(spec, ctx, opt);
    ContourSpec moved = spec;
    moved.c = new_c;
    double shift = new_c.to_double() - spec.c.to_double();
    moved.decay.power = spec.decay.power + std::max(0.0, -shift);
    rep.at_new = integrate_vertical(moved, ctx, opt);
    rep.residue_sum = Complex(0);
    Real lo = min(spec.c, new_c), hi = max(spec.c, new_c);
    for (const auto& [loc, res] : residues) {
        if (!(loc.re > lo && loc.re < hi))
            throw ResidueMismatch("residue at " + to_string(loc, 12) + " is not between the two lines");
        rep.residue_sum += res;
    }
    // moving left collects the residues; moving right gives them back
    Complex expected = new_c < spec.c ? rep.at_new.value + rep.residue_sum : rep.at_new.value - rep.residue_sum;
    rep.mismatch = rep.at_old.value - expected;
    Real scale = max(Real(1), max(abs(rep.at_old.value), abs(expected)));
    rep.tolerance = rep.at_old.error_estimate + rep.at_new.error_estimate + tenth_power(ctx.target_digits) * scale;
    if (abs(rep.mismatch) > rep.tolerance)
        throw ResidueMismatch("contour shift off by " + to_string(abs(rep.mismatch), 6) + " (tolerance " +
                              to_string(rep.tolerance, 6) + ")");
    return rep;
}

QuadratureResult half_residue_integrate(const ContourSpec& spec, const Real& pole_v, const Complex& half_residue,
                                        const PrecisionContext& ctx, const QuadratureOptions& opt) {
    if (spec.part != Part::real_only && !spec.symmetric)
        throw NonIntegrableSingularity("a pole on the contour needs a real-part-only integrand");
    {
        auto guard = PrecisionGuard(ctx.working_digits);
        auto re_at = [&](const Real& v) { return abs(spec.integrand(Complex(spec.c, v)).re); };
        Real near = max(re_at(pole_v + Real(1e-4)), re_at(pole_v - Real(1e-4)));
        Real nearer = max(re_at(pole_v + Real(1e-8)), re_at(pole_v - Real(1e-8)));
        if (!nearer.is_finite() || nearer > Real(100) * max(Real(1), near))
            throw NonIntegrableSingularity("real part diverges at the on-line pole v = " + to_string(pole_v, 12));
    }
    QuadratureResult r = integrate_vertical(spec, ctx, opt);
    r.half_residue = half_residue;
    return r;
}

QuadratureResult integrate_interval(const std::function<Complex(const Real&)>& g, const Real& a, const Real& b,
                                    const PrecisionContext& ctx, double width, bool parallel) {
    ctx.validate();
    auto guard = PrecisionGuard(ctx.working_digits);
    if (!(width > 0.0)) throw DomainError("panel width must be positive");
    PanelIntegrator engine(g, ctx, default_order(ctx.working_digits), 12);
    long n = std::max(1L, static_cast<long>(std::ceil((b - a).to_double() / width)));
    std::vector<Real> cuts;
    Real step = (b - a) / n;
    for (long k = 0; k <= n; ++k) cuts.push_back(a + step * k);
    auto panels = engine.integrate_all(cuts, parallel);
    QuadratureResult r;
    Complex total(0);
    Real err(0);
    for (auto& p : panels) {
        total += p.value;
        err += p.error;
        r.evaluations += p.evaluations;
        r.panels += p.leaves;
    }
    r.value = total;
    r.error_estimate = err;
    r.truncation_height = b;
    return r;
}

}  // namespace mellin
