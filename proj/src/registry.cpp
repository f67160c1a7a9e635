#include "mellin/registry.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "catalog_common.hpp"

namespace mellin {

Estimate operator+(const Estimate& a, const Estimate& b) { return Estimate(a.value + b.value, a.error + b.error); }
Estimate operator-(const Estimate& a, const Estimate& b) { return Estimate(a.value - b.value, a.error + b.error); }
Estimate operator-(const Estimate& a) { return Estimate(-a.value, a.error); }
Estimate operator*(const Estimate& a, const Estimate& b) {
    return Estimate(a.value * b.value, abs(a.value) * b.error + abs(b.value) * a.error + a.error * b.error);
}
Estimate operator/(const Estimate& a, const Estimate& b) {
    Real mb = abs(b.value);
    if (!(mb > b.error)) throw EvaluationFailed("division by a value not bounded away from zero");
    Complex q = a.value / b.value;
    return Estimate(q, (a.error + abs(q) * b.error) / (mb - b.error));
}
Estimate re(const Estimate& a) { return Estimate(Complex(a.value.re), a.error); }
Estimate im(const Estimate& a) { return Estimate(Complex(a.value.im), a.error); }

Real Params::real(const std::string& name) const {
    auto it = raw_.find(name);
    if (it == raw_.end()) throw InvalidParams("missing parameter '" + name + "'");
    try {
        return Real::parse(it->second);
    } catch (const Error&) {
        throw InvalidParams("parameter '" + name + "' is not a number: " + it->second);
    }
}

long Params::integer(const std::string& name) const {
    Real v = real(name);
    if (!v.is_integer()) throw InvalidParams("parameter '" + name + "' must be an integer");
    return v.to_long();
}

bool trend_decreasing(const TrendData& t) {
    if (t.points.size() < 2) return false;
    size_t start = t.points.size() / 2;
    if (start + 1 >= t.points.size()) start = t.points.size() - 2;
    for (size_t i = start; i + 1 < t.points.size(); ++i)
        if (!(t.points[i + 1].residual < t.points[i].residual)) return false;
    return true;
}

const std::vector<std::string>& group_names() {
    static const std::vector<std::string> names{"G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "GA", "GB"};
    return names;
}

const std::vector<IdentityRecord>& catalog() {
    static const std::vector<IdentityRecord> records = [] {
        std::vector<IdentityRecord> out;
        cat::add_g1_g3(out);
        cat::add_g4_g5(out);
        cat::add_g6(out);
        cat::add_g7(out);
        cat::add_g8_appendix(out);
        std::set<std::string> seen;
        for (const auto& r : out)
            if (!seen.insert(r.id).second) throw ConfigError("duplicate identity id " + r.id);
        return out;
    }();
    return records;
}

const IdentityRecord* find_identity(const std::string& id) {
    for (const auto& r : catalog())
        if (r.id == id) return &r;
    return nullptr;
}

std::vector<const IdentityRecord*> list_identities(const std::string& filter) {
    std::vector<const IdentityRecord*> out;
    bool is_group = std::find(group_names().begin(), group_names().end(), filter) != group_names().end();
    for (const auto& r : catalog()) {
        if (filter.empty() || (is_group && r.group == filter) || (!is_group && r.id.rfind(filter, 0) == 0))
            out.push_back(&r);
    }
    return out;
}

namespace {

Estimate eval_side(const std::function<Estimate(const EvalContext&)>& f, const EvalContext& e, const char* side) {
    try {
        return f(e);
    } catch (const InvalidParams&) {
        throw;
    } catch (const UnstableEvaluation&) {
        throw;
    } catch (const Error& ex) {
        throw EvaluationFailed(std::string(side) + ": " + ex.what());
    }
}

struct Attempt {
    Estimate lhs, rhs;
    TrendData trend;
};

Attempt run_once(const IdentityRecord& rec, const ParamMap& params, const PrecisionContext& ctx, bool parallel) {
    PrecisionGuard guard(ctx.working_digits);
    Params p(params);
    if (rec.check) rec.check(p);
    EvalContext e{ctx, p, parallel};
    Attempt a;
    if (rec.kind == RecordKind::trend) {
        try {
            a.trend = rec.trend(e);
        } catch (const InvalidParams&) {
            throw;
        } catch (const UnstableEvaluation&) {
            throw;
        } catch (const Error& ex) {
            throw EvaluationFailed(std::string("sequence: ") + ex.what());
        }
        if (a.trend.points.empty()) throw EvaluationFailed("sequence: no points");
        a.lhs = Estimate(Complex(a.trend.points.back().value));
        a.rhs = Estimate(Complex(a.trend.limit));
    } else {
        a.lhs = eval_side(rec.lhs, e, "lhs");
        a.rhs = eval_side(rec.rhs, e, "rhs");
    }
    return a;
}

}  // namespace

VerificationReport verify(const std::string& id, const ParamMap& overrides, const PrecisionContext& ctx,
                          const VerifyOptions& opt) {
    const IdentityRecord* rec = find_identity(id);
    if (!rec) throw InvalidParams("unknown identity '" + id + "'");
    ctx.validate();
    ParamMap params;
    for (const auto& ps : rec->params) params[ps.name] = ps.default_value;
    for (const auto& [k, v] : overrides) {
        if (!params.count(k)) throw InvalidParams("identity " + id + " has no parameter '" + k + "'");
        params[k] = v;
    }

    VerificationReport rep;
    rep.id = rec->id;
    rep.group = rec->group;
    rep.params = params;
    rep.kind = rec->kind;
    auto t0 = std::chrono::steady_clock::now();

    PrecisionContext use = ctx;
    Attempt a;
    for (int attempt = 0;; ++attempt) {
        bool can_escalate = attempt == 0 && use.working_digits < opt.max_digits;
        PrecisionContext next =
            use.with_working(std::min(opt.max_digits, use.working_digits + std::max(use.target_digits, 10)));
        try {
            a = run_once(*rec, params, use, opt.parallel);
        } catch (const UnstableEvaluation& ex) {
            if (!can_escalate) throw EvaluationFailed(std::string("unstable after escalation: ") + ex.what());
            use = next;
            continue;
        }
        if (rec->kind == RecordKind::equality && can_escalate) {
            PrecisionGuard g(use.working_digits);
            Real thr = tenth_power(use.target_digits) *
                       max(Real(1), max(abs(a.lhs.value), abs(a.rhs.value)));
            if (!(a.lhs.error < thr) || !(a.rhs.error < thr)) {
                use = next;
                continue;
            }
        }
        break;
    }

    PrecisionGuard g(use.working_digits);
    rep.ctx = use;
    rep.lhs = a.lhs.value;
    rep.rhs = a.rhs.value;
    rep.lhs_error = a.lhs.error;
    rep.rhs_error = a.rhs.error;
    rep.abs_diff = abs(a.lhs.value - a.rhs.value);
    Real scale = max(Real(1), max(abs(a.lhs.value), abs(a.rhs.value)));
    rep.rel_diff = rep.abs_diff / scale;
    rep.digits_agreed = digits_agreed(a.lhs.value, a.rhs.value, use.working_digits);
    if (rec->kind == RecordKind::trend) {
        rep.trend = a.trend;
        rep.abs_diff = a.trend.points.back().residual;
        rep.pass = trend_decreasing(a.trend);
        rep.status = rep.pass ? "pass" : "fail";
        if (!rep.pass) rep.message = "TrendViolation: residuals are not strictly decreasing";
    } else {
        Real thr = tenth_power(use.target_digits) * scale;
        rep.pass = rep.abs_diff <= thr && rep.lhs_error < thr && rep.rhs_error < thr;
        rep.status = rep.pass ? "pass" : "fail";
        if (!rep.pass) {
            if (rep.abs_diff > thr)
                rep.message = "sides differ by " + to_string(rep.abs_diff, 6);
            else
                rep.message = "error bounds exceed tolerance (lhs " + to_string(rep.lhs_error, 3) + ", rhs " +
                              to_string(rep.rhs_error, 3) + ")";
        }
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<VerificationReport> verify_all(const std::string& filter, const PrecisionContext& ctx, int jobs,
                                           const VerifyOptions& opt) {
    auto records = list_identities(filter);
    std::sort(records.begin(), records.end(),
              [](const IdentityRecord* a, const IdentityRecord* b) { return a->id < b->id; });
    std::vector<VerificationReport> out(records.size());
    long n = static_cast<long>(records.size());
    VerifyOptions inner = opt;
    // records fan out; each record's own panels then run serially
    if (jobs != 1) inner.parallel = false;
    auto one = [&](long i) {
        const IdentityRecord& rec = *records[static_cast<size_t>(i)];
        try {
            out[static_cast<size_t>(i)] = verify(rec.id, {}, ctx, inner);
        } catch (const Error& ex) {
            VerificationReport r;
            r.id = rec.id;
            r.group = rec.group;
            r.kind = rec.kind;
            for (const auto& ps : rec.params) r.params[ps.name] = ps.default_value;
            r.ctx = ctx;
            r.status = dynamic_cast<const InvalidParams*>(&ex) ? "invalid" : "error";
            r.message = ex.what();
            out[static_cast<size_t>(i)] = std::move(r);
        }
    };
    if (jobs == 1) {
        for (long i = 0; i < n; ++i) one(i);
    } else {
        int threads = jobs > 0 ? jobs : 0;
        if (threads > 0) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
            for (long i = 0; i < n; ++i) one(i);
        } else {
#pragma omp parallel for schedule(dynamic, 1)
            for (long i = 0; i < n; ++i) one(i);
        }
    }
    return out;
}

}  // namespace mellin
