#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mellin/mpnum.hpp"
#include "mellin/result.hpp"

namespace mellin {

// A value with an absolute error bound; arithmetic propagates the bound to
// first order.
struct Estimate {
    Complex value;
    Real error;

    Estimate() : value(Real(0)), error(0) {}
    Estimate(Complex v) : value(std::move(v)), error(0) {}
    Estimate(Real v) : value(std::move(v)), error(0) {}
    Estimate(long v) : value(Real(v)), error(0) {}
    Estimate(int v) : value(Real(v)), error(0) {}
    Estimate(Complex v, Real e) : value(std::move(v)), error(std::move(e)) {}
    static Estimate of(const SeriesResult& r) { return Estimate(r.value, r.tail_bound); }
};

Estimate operator+(const Estimate& a, const Estimate& b);
Estimate operator-(const Estimate& a, const Estimate& b);
Estimate operator-(const Estimate& a);
Estimate operator*(const Estimate& a, const Estimate& b);
Estimate operator/(const Estimate& a, const Estimate& b);
Estimate re(const Estimate& a);
Estimate im(const Estimate& a);

struct ParamSpec {
    std::string name;
    std::string default_value;
    std::string meaning;
};

using ParamMap = std::map<std::string, std::string>;

// Parameter values parsed at the calling thread's precision.
class Params {
public:
    explicit Params(ParamMap raw) : raw_(std::move(raw)) {}
    Real real(const std::string& name) const;
    long integer(const std::string& name) const;
    double approx(const std::string& name) const { return real(name).to_double(); }
    const ParamMap& raw() const { return raw_; }

private:
    ParamMap raw_;
};

struct EvalContext {
    PrecisionContext ctx;
    const Params& params;
    bool parallel = true;
};

enum class RecordKind { equality, trend };

struct TrendPoint {
    long n = 0;
    Real value;
    Real residual;
};

struct TrendData {
    std::vector<TrendPoint> points;
    Real limit;
};

// Residuals strictly decreasing over the top half of the points.
bool trend_decreasing(const TrendData& t);

struct IdentityRecord {
    std::string id;
    std::string group;
    std::string anchor;
    std::string lhs_text;
    std::string rhs_text;
    std::vector<ParamSpec> params;
    // Throws InvalidParams outside the stated domain.
    std::function<void(const Params&)> check;
    std::function<Estimate(const EvalContext&)> lhs;
    std::function<Estimate(const EvalContext&)> rhs;
    RecordKind kind = RecordKind::equality;
    std::function<TrendData(const EvalContext&)> trend;
};

struct VerificationReport {
    std::string id;
    std::string group;
    ParamMap params;
    RecordKind kind = RecordKind::equality;
    Complex lhs;
    Complex rhs;
    Real lhs_error;
    Real rhs_error;
    Real abs_diff;
    Real rel_diff;
    int digits_agreed = 0;
    PrecisionContext ctx;
    double wall_ms = 0.0;
    bool pass = false;
    std::string status;  // pass | fail | error | invalid
    std::string message;
    TrendData trend;
};

const std::vector<IdentityRecord>& catalog();
const IdentityRecord* find_identity(const std::string& id);
const std::vector<std::string>& group_names();

// Empty filter: whole catalog. A group name selects that group; anything
// else is an id prefix.
std::vector<const IdentityRecord*> list_identities(const std::string& filter = "");

struct VerifyOptions {
    bool parallel = true;
    // Ceiling for the single escalation on unstable evaluations.
    int max_digits = 10000;
};

// Throws InvalidParams for unknown ids, unknown parameter names or
// out-of-domain values; EvaluationFailed when a side cannot be evaluated.
VerificationReport verify(const std::string& id, const ParamMap& overrides, const PrecisionContext& ctx,
                          const VerifyOptions& opt = {});

// One report per matching record, sorted by id; failures are recorded in
// the reports, not thrown.
std::vector<VerificationReport> verify_all(const std::string& filter, const PrecisionContext& ctx, int jobs = 0,
                                           const VerifyOptions& opt = {});

}  // namespace mellin
