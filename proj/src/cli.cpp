#include "mellin/cli.hpp"

#include <gmpxx.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "mellin/errors.hpp"
#include "mellin/limits.hpp"
#include "mellin/registry.hpp"

namespace mellin::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

// Exact decimal or p/q text to a rational.
mpq_class parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ConfigError("empty number in grid");
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            mpq_class q(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
            if (q.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
            q.canonicalize();
            return q;
        }
        bool neg = !s.empty() && s[0] == '-';
        std::string body = neg || s[0] == '+' ? s.substr(1) : s;
        auto dot = body.find('.');
        std::string ip = dot == std::string::npos ? body : body.substr(0, dot);
        std::string fp = dot == std::string::npos ? "" : body.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw ConfigError("bad number '" + text + "'");
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ConfigError("bad number '" + text + "'");
        mpz_class num(ip.empty() ? "0" : ip);
        mpz_class den = 1;
        for (char c : fp) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        mpq_class q(num, den);
        q.canonicalize();
        return neg ? mpq_class(-q) : q;
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad number '" + text + "'");
    }
}

std::string rational_text(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string fmt(const Complex& z, int digits) { return to_string(z, digits); }
std::string fmt(const Real& x, int digits) { return to_string(x, digits); }

std::string params_text(const ParamMap& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ';';
        s += k + "=" + v;
    }
    return s;
}

json report_json(const VerificationReport& r, int target) {
    PrecisionGuard g(std::max(r.ctx.working_digits, target + 10));
    json j;
    j["id"] = r.id;
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    bool evaluated = r.status == "pass" || r.status == "fail";
    j["lhs"] = evaluated ? fmt(r.lhs, target) : "";
    j["rhs"] = evaluated ? fmt(r.rhs, target) : "";
    j["abs_diff"] = evaluated ? fmt(r.abs_diff, 6) : "";
    j["digits_agreed"] = evaluated ? r.digits_agreed : 0;
    j["digits_requested"] = target;
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(1);
    ms << r.wall_ms;
    j["wall_ms"] = ms.str();
    j["status"] = r.status;
    if (!r.message.empty()) j["message"] = r.message;
    if (r.kind == RecordKind::trend && evaluated) {
        json pts = json::array();
        for (const auto& p : r.trend.points)
            pts.push_back({{"n", p.n}, {"value", fmt(p.value, target)}, {"residual", fmt(p.residual, 6)}});
        j["trend"] = pts;
        j["limit"] = fmt(r.trend.limit, target);
    }
    return j;
}

void write_reports(const std::vector<VerificationReport>& reps, const RunConfig& cfg, std::ostream& out) {
    int target = cfg.digits;
    if (cfg.format == Format::json) {
        json arr = json::array();
        for (const auto& r : reps) arr.push_back(report_json(r, target));
        out << arr.dump(2) << '\n';
        return;
    }
    if (cfg.format == Format::csv) {
        out << "id,params,status,lhs,rhs,abs_diff,digits_agreed,digits_requested,wall_ms\n";
        for (const auto& r : reps) {
            json j = report_json(r, target);
            out << r.id << ',' << params_text(r.params) << ',' << r.status << ',' << j["lhs"].get<std::string>()
                << ',' << j["rhs"].get<std::string>() << ',' << j["abs_diff"].get<std::string>() << ','
                << j["digits_agreed"].get<int>() << ',' << target << ',' << j["wall_ms"].get<std::string>() << '\n';
        }
        return;
    }
    int passed = 0;
    for (const auto& r : reps) {
        json j = report_json(r, target);
        std::string st = r.status;
        std::transform(st.begin(), st.end(), st.begin(), ::toupper);
        out << st << ' ' << r.id;
        if (!r.params.empty()) out << " [" << params_text(r.params) << ']';
        if (r.status == "pass" || r.status == "fail") {
            out << " lhs=" << j["lhs"].get<std::string>() << " rhs=" << j["rhs"].get<std::string>()
                << " diff=" << j["abs_diff"].get<std::string>() << " agreed=" << r.digits_agreed;
        }
        out << " ms=" << j["wall_ms"].get<std::string>();
        if (!r.message.empty()) out << " (" << r.message << ')';
        out << '\n';
        if (r.pass) ++passed;
    }
    out << passed << '/' << reps.size() << " passed\n";
}

int exit_for(const std::vector<VerificationReport>& reps) {
    for (const auto& r : reps)
        if (!r.pass) return kExitFail;
    return kExitPass;
}

VerificationReport failed_report(const IdentityRecord& rec, const ParamMap& params, const Error& ex,
                                 const PrecisionContext& ctx) {
    VerificationReport r;
    r.id = rec.id;
    r.group = rec.group;
    r.kind = rec.kind;
    for (const auto& ps : rec.params) r.params[ps.name] = ps.default_value;
    for (const auto& [k, v] : params) r.params[k] = v;
    r.ctx = ctx;
    r.status = dynamic_cast<const InvalidParams*>(&ex) ? "invalid" : "error";
    r.message = ex.what();
    return r;
}

const IdentityRecord& require_id(const std::string& id) {
    if (id.empty()) throw ConfigError("--id is required");
    const IdentityRecord* rec = find_identity(id);
    if (!rec) throw ConfigError("unknown identity '" + id + "'");
    return *rec;
}

ParamMap param_map(const RunConfig& cfg, const IdentityRecord& rec) {
    ParamMap m;
    for (const auto& [k, v] : cfg.params) {
        bool known = std::any_of(rec.params.begin(), rec.params.end(), [&](const ParamSpec& p) { return p.name == k; });
        if (!known) throw ConfigError("identity " + rec.id + " has no parameter '" + k + "'");
        if (m.count(k)) throw ConfigError("parameter '" + k + "' given twice");
        m[k] = v;
    }
    return m;
}

std::string filter_of(const RunConfig& cfg) {
    if (!cfg.group.empty()) {
        const auto& groups = group_names();
        if (std::find(groups.begin(), groups.end(), cfg.group) == groups.end())
            throw ConfigError("unknown group '" + cfg.group + "'");
        return cfg.group;
    }
    return cfg.id;
}

std::vector<const IdentityRecord*> selected(const RunConfig& cfg) {
    auto recs = list_identities(filter_of(cfg));
    if (!cfg.group.empty() && !cfg.id.empty()) {
        recs.erase(std::remove_if(recs.begin(), recs.end(),
                                  [&](const IdentityRecord* r) { return r->id.rfind(cfg.id, 0) != 0; }),
                   recs.end());
    }
    if (recs.empty() && !cfg.id.empty()) throw ConfigError("no identity matches '" + cfg.id + "'");
    return recs;
}

int cmd_list(const RunConfig& cfg, std::ostream& out) {
    auto recs = selected(cfg);
    std::sort(recs.begin(), recs.end(), [](const IdentityRecord* a, const IdentityRecord* b) {
        return a->group != b->group ? a->group < b->group : a->id < b->id;
    });
    if (cfg.format == Format::json) {
        json arr = json::array();
        for (const auto* r : recs) {
            json params = json::array();
            for (const auto& p : r->params)
                params.push_back({{"name", p.name}, {"default", p.default_value}, {"domain", p.meaning}});
            arr.push_back({{"id", r->id},
                           {"group", r->group},
                           {"kind", r->kind == RecordKind::trend ? "trend" : "equality"},
                           {"anchor", r->anchor},
                           {"lhs", r->lhs_text},
                           {"rhs", r->rhs_text},
                           {"params", params}});
        }
        out << arr.dump(2) << '\n';
        return kExitPass;
    }
    if (cfg.format == Format::csv) {
        out << "id,group,kind,params\n";
        for (const auto* r : recs) {
            ParamMap m;
            for (const auto& p : r->params) m[p.name] = p.default_value;
            out << r->id << ',' << r->group << ',' << (r->kind == RecordKind::trend ? "trend" : "equality") << ','
                << params_text(m) << '\n';
        }
        return kExitPass;
    }
    for (const auto* r : recs) {
        out << r->group << ' ' << r->id;
        if (r->kind == RecordKind::trend) out << " (trend)";
        out << "  " << r->anchor << '\n';
        out << "    " << r->lhs_text << "  =  " << r->rhs_text << '\n';
        for (const auto& p : r->params) out << "    " << p.name << " = " << p.default_value << "  (" << p.meaning << ")\n";
    }
    out << recs.size() << " identities\n";
    return kExitPass;
}

VerifyOptions verify_options(const RunConfig& cfg) {
    VerifyOptions o;
    o.max_digits = cfg.max_digits;
    o.parallel = cfg.jobs != 1;
    return o;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const IdentityRecord& rec = require_id(cfg.id);
    ParamMap m = param_map(cfg, rec);
    auto ctx = PrecisionContext::for_target(cfg.digits);
    std::vector<VerificationReport> reps;
    try {
        reps.push_back(verify(rec.id, m, ctx, verify_options(cfg)));
    } catch (const InvalidParams& ex) {
        throw ConfigError(ex.what());
    } catch (const Error& ex) {
        reps.push_back(failed_report(rec, m, ex, ctx));
    }
    write_reports(reps, cfg, out);
    return exit_for(reps);
}

int cmd_verify_all(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.params.empty()) throw ConfigError("verify-all uses default parameters; use sweep for --param");
    auto recs = selected(cfg);
    auto ctx = PrecisionContext::for_target(cfg.digits);
    std::vector<VerificationReport> reps;
    if (!cfg.group.empty() || cfg.id.empty()) {
        reps = verify_all(filter_of(cfg), ctx, cfg.jobs, verify_options(cfg));
        if (!cfg.group.empty() && !cfg.id.empty())
            reps.erase(std::remove_if(reps.begin(), reps.end(),
                                      [&](const VerificationReport& r) { return r.id.rfind(cfg.id, 0) != 0; }),
                       reps.end());
    } else {
        reps = verify_all(cfg.id, ctx, cfg.jobs, verify_options(cfg));
    }
    write_reports(reps, cfg, out);
    return exit_for(reps);
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const IdentityRecord& rec = require_id(cfg.id);
    param_map(cfg, rec);
    if (cfg.params.empty()) throw ConfigError("sweep needs at least one --param k=v1,v2,...");
    // Cartesian product in the order the parameters were given, last fastest
    std::vector<std::pair<std::string, std::vector<std::string>>> axes;
    for (const auto& [k, v] : cfg.params) axes.push_back({k, expand_grid(v)});
    std::vector<ParamMap> grid{ParamMap{}};
    for (const auto& [k, vals] : axes) {
        std::vector<ParamMap> next;
        for (const auto& g : grid)
            for (const auto& v : vals) {
                ParamMap m = g;
                m[k] = v;
                next.push_back(std::move(m));
            }
        grid = std::move(next);
    }
    auto ctx = PrecisionContext::for_target(cfg.digits);
    std::vector<VerificationReport> reps(grid.size());
    VerifyOptions opt = verify_options(cfg);
    if (cfg.jobs != 1) opt.parallel = false;
    auto one = [&](long i) {
        const ParamMap& m = grid[static_cast<size_t>(i)];
        try {
            reps[static_cast<size_t>(i)] = verify(rec.id, m, ctx, opt);
        } catch (const Error& ex) {
            reps[static_cast<size_t>(i)] = failed_report(rec, m, ex, ctx);
        }
    };
    long n = static_cast<long>(grid.size());
    if (cfg.jobs == 1) {
        for (long i = 0; i < n; ++i) one(i);
    } else if (cfg.jobs > 0) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.jobs)
        for (long i = 0; i < n; ++i) one(i);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < n; ++i) one(i);
    }
    write_reports(reps, cfg, out);
    return exit_for(reps);
}

int cmd_figure(const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == Format::json) throw ConfigError("figure emits CSV only");
    std::string name = cfg.id.empty() ? "fig1" : cfg.id;
    std::vector<LimitSequenceSpec> specs;
    if (name == "fig1") {
        specs.push_back(LimitSequenceSpec::fig1());
    } else if (name == "fig2") {
        std::stringstream ss(cfg.figure_b);
        std::string b;
        while (std::getline(ss, b, ','))
            if (!b.empty()) specs.push_back(LimitSequenceSpec::parse("fig2", b));
        if (specs.empty()) throw ConfigError("--b needs at least one value");
    } else {
        throw ConfigError("unknown figure '" + name + "' (expected fig1 or fig2)");
    }
    std::vector<long> ns = parse_index_range(cfg.figure_n);
    if (ns.empty()) throw ConfigError("--n selects no indices");
    for (long n : ns)
        if (n < specs.front().first_n())
            throw ConfigError(name + " is undefined at n = " + std::to_string(n));
    LimitOptions opt;
    opt.max_digits = cfg.max_digits;
    try {
        out << figure_csv(specs, ns, PrecisionContext::for_target(cfg.digits), opt);
    } catch (const PrecisionCeiling& ex) {
        throw ConfigError(ex.what());
    }
    return kExitPass;
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv, bool& help, std::string& help_text) {
    help = false;
    RunConfig cfg;
    CLI::App app{"Verify summation identities from inverse Mellin transforms at arbitrary precision"};
    app.require_subcommand(1);
    std::vector<std::string> params;
    std::string format = "text";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--id", cfg.id, "identity id, id prefix, or figure name (fig1, fig2)");
        sub->add_option("--group", cfg.group, "identity group G1..G8, GA, GB");
        sub->add_option("--digits", cfg.digits, "target decimal digits (>= 10)");
        sub->add_option("--max-digits", cfg.max_digits, "working precision ceiling");
        sub->add_option("--jobs", cfg.jobs, "worker threads (0: default, 1: serial)");
        sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", cfg.out_path, "write output to this file");
        sub->add_option("--param", params, "parameter override k=v (repeatable)")->take_all();
    };
    auto* list = app.add_subcommand("list", "list catalog identities");
    auto* verify = app.add_subcommand("verify", "verify one identity");
    auto* verify_all = app.add_subcommand("verify-all", "verify every identity in a group or id prefix");
    auto* sweep = app.add_subcommand("sweep", "verify one identity over a parameter grid");
    auto* figure = app.add_subcommand("figure", "emit the limit sequences as CSV");
    for (auto* s : {list, verify, verify_all, sweep, figure}) add_common(s);
    figure->add_option("--b", cfg.figure_b, "comma-separated b values for fig2");
    figure->add_option("--n", cfg.figure_n, "index range such as 2..10 or 2..20:2");

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        help = true;
        help_text = app.help();
        return cfg;
    } catch (const CLI::CallForAllHelp&) {
        help = true;
        help_text = app.help("", CLI::AppFormatMode::All);
        return cfg;
    } catch (const CLI::ParseError& ex) {
        throw ConfigError(ex.what());
    }
    for (auto* s : app.get_subcommands()) {
        if (s->parsed()) {
            const std::string& n = s->get_name();
            cfg.command = n == "list"         ? Command::list
                          : n == "verify"     ? Command::verify
                          : n == "verify-all" ? Command::verify_all
                          : n == "sweep"      ? Command::sweep
                                              : Command::figure;
        }
    }
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    if (cfg.command == Command::figure && format == "text") cfg.format = Format::csv;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("--param expects k=v, got '" + p + "'");
        cfg.params.emplace_back(p.substr(0, eq), p.substr(eq + 1));
    }
    return cfg;
}

void validate(RunConfig& cfg) {
    if (const char* env = std::getenv("MELLIN_SUM_MAX_DIGITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (!*env || *end || v <= 0) throw ConfigError(std::string("MELLIN_SUM_MAX_DIGITS is not a positive integer: ") + env);
        cfg.max_digits = static_cast<int>(std::min<long>(cfg.max_digits, v));
    }
    if (cfg.digits < 10) throw ConfigError("--digits must be at least 10");
    if (cfg.max_digits < cfg.digits + 10)
        throw ConfigError("max digits " + std::to_string(cfg.max_digits) + " must be at least digits + 10 = " +
                          std::to_string(cfg.digits + 10));
    if (cfg.jobs < 0) throw ConfigError("--jobs must be non-negative");
    if (cfg.command == Command::verify || cfg.command == Command::sweep) require_id(cfg.id);
    if (cfg.command != Command::figure && !cfg.group.empty()) filter_of(cfg);
    if ((cfg.command == Command::list || cfg.command == Command::verify_all) && !cfg.id.empty()) selected(cfg);
}

std::vector<std::string> expand_grid(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(item);
            continue;
        }
        std::string rest = item.substr(dots + 2);
        mpq_class step = 1;
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            step = parse_rational(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        if (sgn(step) <= 0) throw ConfigError("grid step must be positive in '" + item + "'");
        mpq_class a = parse_rational(item.substr(0, dots)), b = parse_rational(rest);
        if ((b - a) / step > 100000) throw ConfigError("grid '" + item + "' is too large");
        for (mpq_class v = a; v <= b; v += step) out.push_back(rational_text(v));
    }
    if (out.empty()) throw ConfigError("empty grid '" + text + "'");
    return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ostringstream buf;
    int code = kExitPass;
    try {
        switch (cfg.command) {
            case Command::list: code = cmd_list(cfg, buf); break;
            case Command::verify: code = cmd_verify(cfg, buf); break;
            case Command::verify_all: code = cmd_verify_all(cfg, buf); break;
            case Command::sweep: code = cmd_sweep(cfg, buf); break;
            case Command::figure: code = cmd_figure(cfg, buf); break;
        }
    } catch (const ConfigError& ex) {
        err << ex.what() << '\n';
        return kExitConfig;
    } catch (const Error& ex) {
        err << ex.what() << '\n';
        return kExitFail;
    }
    if (cfg.out_path.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            err << "ConfigError: cannot open " << cfg.out_path << '\n';
            return kExitConfig;
        }
        f << buf.str();
    }
    return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        bool help = false;
        std::string help_text;
        RunConfig cfg = parse_args(argc, argv, help, help_text);
        if (help) {
            out << help_text;
            return kExitPass;
        }
        validate(cfg);
        return run(cfg, out, err);
    } catch (const ConfigError& ex) {
        err << ex.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace mellin::cli
