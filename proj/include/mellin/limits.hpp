#pragma once

#include <string>
#include <vector>

#include "mellin/mpnum.hpp"
#include "mellin/registry.hpp"

namespace mellin {

enum class FigureId { fig1, fig2 };

// fig1: Σ_j 1/(e^{j^{1/n}} - 1) - ζ(n)Γ(n+1)  →  1/(2 - 2e)
// fig2: Σ_j e^{-b j^{1/n}} - b^{-n}Γ(n+1)     →  -1/(2e^b)
struct LimitSequenceSpec {
    FigureId id = FigureId::fig1;
    std::string b = "1";  // kept as text so it is exact at every precision

    static LimitSequenceSpec fig1();
    static LimitSequenceSpec fig2(std::string b);
    static LimitSequenceSpec parse(const std::string& name, const std::string& b = "1");

    std::string name() const;
    long first_n() const;
    // At the calling thread's precision.
    Real b_value() const;
    Real claimed_limit() const;
};

struct SequencePoint {
    long n = 0;
    Real value;
    int working_digits = 0;
};

struct LimitOptions {
    int max_digits = 10000;
    // Recompute each term 10 digits higher and require agreement to target.
    bool certify = true;
};

// target + ceil(log10 Γ(n+1)) + 15
int working_digits_for(long n, int target);

// Term at the calling thread's precision.
Real sequence_term(const LimitSequenceSpec& spec, long n);

// Throws DomainError for n below first_n() and PrecisionCeiling when the
// working precision for some n exceeds opt.max_digits.
std::vector<SequencePoint> sequence_values(const LimitSequenceSpec& spec, const std::vector<long>& ns,
                                           const PrecisionContext& ctx, const LimitOptions& opt = {});

struct LimitReport {
    LimitSequenceSpec spec;
    std::vector<SequencePoint> points;
    std::vector<Real> residuals;
    Real limit;
    bool pass = false;
    std::string message;

    TrendData trend() const;
};

// pass: residuals strictly decreasing over the top half of ns.
LimitReport limit_report(const LimitSequenceSpec& spec, const std::vector<long>& ns, const PrecisionContext& ctx,
                         const LimitOptions& opt = {});

// Header `n,value,limit,residual,digits`, one row per (spec, n).
std::string figure_csv(const std::vector<LimitSequenceSpec>& specs, const std::vector<long>& ns,
                       const PrecisionContext& ctx, const LimitOptions& opt = {});

// Σ_{j=0}^{n} ζ(-j/n)(-b)^j/j!, which tends to -1/(2e^b).
Real sbid_sum(const Real& b, long n);

// Σ_j e^{-b j^{1/n}} / (√(2πn)(n/(eb))^n), which tends to 1.
Real as2_ratio(const Real& b, long n);
// Σ_j 1/(e^{j^{1/n}} - 1) / (√(2π) n^{n+1/2} e^{-n}), which tends to 1.
Real fig1_envelope_ratio(long n);

// Aitken Δ² on the last three values. Heuristic: the convergence law in n
// is not known.
Real aitken_estimate(const std::vector<SequencePoint>& pts);

// "2..10", "2..10:2", "1,2,3" or a mix of comma-separated items.
std::vector<long> parse_index_range(const std::string& text);

}  // namespace mellin
