#include "idealcore/jobspec.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <set>

#include "idealcore/core.hpp"
#include "idealcore/counters.hpp"

namespace idealcore {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(int line, int col, const std::string& msg) {
    throw InputError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

bool is_ident(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct Stmt {
    std::string text;
    int line = 1;
    int col = 1; // 1-based column of the first character
};

std::vector<Stmt> split_statements(const std::string& text) {
    std::vector<Stmt> out;
    Stmt cur;
    bool started = false;
    int line = 1, col = 1;
    auto flush = [&] {
        std::string t = trimmed(cur.text);
        if (!t.empty()) out.push_back({t, cur.line, cur.col});
        cur = {};
        started = false;
    };
    for (char c : text) {
        if (c == ';' || c == '\n') {
            flush();
            if (c == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            continue;
        }
        if (!started && !std::isspace(static_cast<unsigned char>(c))) {
            started = true;
            cur.line = line;
            cur.col = col;
        }
        if (started) cur.text += c;
        ++col;
    }
    flush();
    return out;
}

// Cursor over one statement; reports positions in the original text.
struct Cursor {
    const Stmt& st;
    std::size_t pos = 0;

    int col() const { return st.col + static_cast<int>(pos); }
    [[noreturn]] void err(const std::string& msg) const { fail(st.line, col(), msg); }

    void skip_ws() {
        while (pos < st.text.size() && std::isspace(static_cast<unsigned char>(st.text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= st.text.size();
    }
    char peek() {
        skip_ws();
        return pos < st.text.size() ? st.text[pos] : '\0';
    }
    // token up to whitespace or a structural character
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < st.text.size()) {
            char c = st.text[pos];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']' || c == ',' ||
                c == '=' || c == '(' || c == ')')
                break;
            ++pos;
        }
        return st.text.substr(start, pos - start);
    }
    void expect(char c, const std::string& what) {
        skip_ws();
        if (pos >= st.text.size() || st.text[pos] != c) err("expected '" + std::string(1, c) + "' " + what);
        ++pos;
    }
    // contents between the opening delimiter just consumed and `close`
    std::string until(char close) {
        std::size_t start = pos;
        while (pos < st.text.size() && st.text[pos] != close) ++pos;
        if (pos >= st.text.size()) err(std::string("missing closing '") + close + "'");
        std::string inner = st.text.substr(start, pos - start);
        ++pos;
        return inner;
    }
    std::string rest() {
        skip_ws();
        std::string r = st.text.substr(pos);
        pos = st.text.size();
        return trimmed(r);
    }
};

std::vector<std::string> split_commas(Cursor& cur, const std::string& inner, const std::string& what) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i == inner.size() || inner[i] == ',') {
            std::string piece = trimmed(inner.substr(start, i - start));
            if (piece.empty()) cur.err("empty entry in " + what + " list");
            parts.push_back(std::move(piece));
            start = i + 1;
        }
    }
    return parts;
}

const std::set<std::string>& known_commands() {
    static const std::set<std::string> k{"core", "spread", "reduction", "multiplicity",
                                         "verify", "ops"};
    return k;
}

const std::set<std::string>& known_ops() {
    static const std::set<std::string> k{"gb",        "intersect", "colon",
                                         "saturate",  "eliminate", "radical-member",
                                         "dim",       "vdim",      "fitting"};
    return k;
}

void parse_ring(Cursor& cur, JobSpec& job, Ctx& ctx) {
    std::string field = cur.word();
    if (field.empty()) cur.err("missing coefficient field (Q or Fp<prime>)");
    if (field == "Q") {
        job.field = FieldSpec::rationals();
    } else if (field.size() > 2 && field.rfind("Fp", 0) == 0 && all_digits(field.substr(2))) {
        try {
            job.field = FieldSpec::prime_field(std::stoull(field.substr(2)));
        } catch (const Error& e) {
            cur.err(e.what());
        } catch (const std::exception&) {
            cur.err("modulus out of range in '" + field + "'");
        }
    } else {
        cur.err("unknown field '" + field + "' (use Q or Fp<prime>)");
    }

    cur.expect('[', "to open the variable list");
    for (const std::string& v : split_commas(cur, cur.until(']'), "variable")) {
        if (!is_ident(v)) cur.err("'" + v + "' is not a valid variable name");
        job.vars.push_back(v);
    }

    std::vector<std::string> quotient_raw;
    while (!cur.done()) {
        std::string kw = cur.word();
        if (kw == "weights") {
            if (!job.weights.empty()) cur.err("duplicate weights block");
            cur.expect('[', "to open the weight list");
            for (const std::string& w : split_commas(cur, cur.until(']'), "weight")) {
                try {
                    job.weights.push_back(std::stoll(w));
                } catch (const std::exception&) {
                    cur.err("weight '" + w + "' is not an integer");
                }
            }
            if (job.weights.size() != job.vars.size())
                cur.err("got " + std::to_string(job.weights.size()) + " weights for " +
                        std::to_string(job.vars.size()) + " variables");
        } else if (kw == "quotient") {
            if (!quotient_raw.empty()) cur.err("duplicate quotient block");
            cur.expect('[', "to open the quotient list");
            quotient_raw = split_commas(cur, cur.until(']'), "quotient");
        } else {
            cur.err("unexpected '" + kw + "' in ring statement");
        }
    }

    try {
        ctx = RingContext::polynomial_ring(job.field, job.vars, job.weights);
        job.weights = ctx->weights(); // canonical: always explicit
        if (!quotient_raw.empty()) {
            std::vector<Polynomial> qs;
            for (const std::string& q : quotient_raw) qs.push_back(ctx->parse(q));
            ctx = ctx->with_quotient(qs);
            for (const Polynomial& q : qs) job.quotient.push_back(ctx->str(q));
        }
    } catch (const Error& e) {
        cur.err(e.what());
    }
}

void parse_ideal(Cursor& cur, JobSpec& job, const Ctx& ctx) {
    if (!ctx) cur.err("ring must be declared before ideals");
    std::string name = cur.word();
    if (!is_ident(name)) cur.err("'" + name + "' is not a valid ideal name");
    for (const auto& [existing, gens] : job.ideals)
        if (existing == name) cur.err("ideal '" + name + "' already declared");
    cur.expect('=', "after the ideal name");
    std::string body = cur.rest();
    if (body.empty()) cur.err("ideal requires at least one generator");
    std::vector<std::string> gens;
    for (const std::string& g : split_commas(cur, body, "generator")) {
        try {
            gens.push_back(ctx->str(ctx->parse(g)));
        } catch (const Error& e) {
            cur.err(e.what());
        }
    }
    job.ideals.emplace_back(name, std::move(gens));
}

void parse_flag(Cursor& cur, JobSpec& job, const std::string& flag) {
    auto value = [&](const std::string& what) {
        std::string v = cur.word();
        if (v.empty()) cur.err("flag " + flag + " needs " + what);
        return v;
    };
    auto int_value = [&](const std::string& what, int lo) {
        std::string v = value(what);
        int n = 0;
        try {
            n = std::stoi(v);
        } catch (const std::exception&) {
            cur.err("flag " + flag + " needs an integer, got '" + v + "'");
        }
        if (n < lo) cur.err("flag " + flag + " must be at least " + std::to_string(lo));
        return n;
    };
    if (flag == "--method") {
        std::string v = value("prob, det, or both");
        if (v != "prob" && v != "det" && v != "both")
            cur.err("unknown method '" + v + "' (prob, det, or both)");
        job.method = v;
    } else if (flag == "--seed") {
        std::string v = value("an unsigned integer");
        if (!all_digits(v)) cur.err("seed '" + v + "' is not an unsigned integer");
        try {
            job.seed = std::stoull(v);
        } catch (const std::exception&) {
            cur.err("seed '" + v + "' is out of range");
        }
    } else if (flag == "--t-max") {
        job.t_max = int_value("an integer", 0);
    } else if (flag == "--r-max") {
        job.r_max = int_value("an integer", 0);
    } else if (flag == "--exponent") {
        job.exponent = int_value("an integer", 1);
    } else if (flag == "--variant") {
        std::string v = value("fpower or hsat");
        if (v != "fpower" && v != "hsat") cur.err("unknown variant '" + v + "'");
        job.variant = v;
    } else if (flag == "--force") {
        job.force = true;
    } else if (flag == "--json") {
        job.json = true;
    } else {
        cur.err("unknown flag '" + flag + "'");
    }
}

void parse_command(Cursor& cur, JobSpec& job, const Ctx& ctx, const std::string& head) {
    if (!job.command.empty()) cur.err("one command per job ('" + job.command + "' already given)");
    job.command = head;
    while (!cur.done()) {
        char c = cur.peek();
        if (c == '(') {
            ++cur.pos;
            std::vector<std::string> polys;
            if (!ctx) cur.err("ring must be declared before inline ideals");
            for (const std::string& p : split_commas(cur, cur.until(')'), "generator")) {
                try {
                    polys.push_back(ctx->str(ctx->parse(p)));
                } catch (const Error& e) {
                    cur.err(e.what());
                }
            }
            std::string group = "(";
            for (std::size_t i = 0; i < polys.size(); ++i)
                group += (i ? ", " : "") + polys[i];
            job.op_args.push_back(group + ")");
            continue;
        }
        if (c == '[') {
            ++cur.pos;
            std::string group = "[";
            std::vector<std::string> names = split_commas(cur, cur.until(']'), "variable");
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (!ctx || ctx->var_index(names[i]) < 0)
                    cur.err("unknown variable '" + names[i] + "'");
                group += (i ? "," : "") + names[i];
            }
            job.op_args.push_back(group + "]");
            continue;
        }
        std::string w = cur.word();
        if (w.empty()) cur.err("unexpected character");
        if (w.rfind("--", 0) == 0) {
            parse_flag(cur, job, w);
        } else if (job.command == "ops") {
            job.op_args.push_back(w);
        } else {
            cur.err("unexpected '" + w + "' after " + job.command);
        }
    }

    if (job.command != "ops") {
        if (!job.op_args.empty())
            cur.err("'" + job.command + "' takes no positional arguments");
        return;
    }

    // arity checks up front so mistakes point at the command line
    if (job.op_args.empty()) cur.err("ops needs an operation (gb, intersect, colon, ...)");
    const std::string& op = job.op_args[0];
    if (!known_ops().count(op)) cur.err("unknown operation '" + op + "'");
    auto is_operand = [&](std::size_t i) {
        if (i >= job.op_args.size()) return false;
        const std::string& a = job.op_args[i];
        if (a[0] == '(') return true;
        for (const auto& [name, gens] : job.ideals)
            if (name == a) return true;
        return false;
    };
    std::size_t argc = job.op_args.size() - 1;
    auto need = [&](std::size_t n, const std::string& shape) {
        if (argc != n) cur.err("'" + op + "' expects " + shape);
    };
    if (op == "gb" || op == "dim" || op == "vdim") {
        need(1, "one ideal argument");
        if (!is_operand(1)) cur.err("'" + job.op_args[1] + "' is not a declared ideal or (…) list");
    } else if (op == "intersect" || op == "colon" || op == "saturate") {
        need(2, "two ideal arguments");
        for (std::size_t i = 1; i <= 2; ++i)
            if (!is_operand(i)) cur.err("'" + job.op_args[i] + "' is not a declared ideal or (…) list");
    } else if (op == "eliminate") {
        need(2, "an ideal and a [vars] list");
        if (!is_operand(1) || job.op_args[2][0] != '[')
            cur.err("'eliminate' expects an ideal then a [vars] list");
    } else if (op == "radical-member") {
        need(2, "a (polynomial) and an ideal");
        if (job.op_args[1][0] != '(' || !is_operand(2))
            cur.err("'radical-member' expects a (polynomial) then an ideal");
    } else if (op == "fitting") {
        need(2, "an ideal and an index");
        if (!is_operand(1) || !all_digits(job.op_args[2]))
            cur.err("'fitting' expects an ideal then a nonnegative index");
    }
}

} // namespace

JobSpec parse_jobspec(const std::string& text) {
    JobSpec job;
    Ctx ctx;
    bool have_ring = false;
    for (const Stmt& st : split_statements(text)) {
        Cursor cur{st};
        std::string head = cur.word();
        if (head == "ring") {
            if (have_ring) cur.err("duplicate ring statement");
            parse_ring(cur, job, ctx);
            have_ring = true;
        } else if (head == "ideal") {
            parse_ideal(cur, job, ctx);
        } else if (known_commands().count(head)) {
            parse_command(cur, job, ctx, head);
        } else {
            cur.err("unknown statement '" + head + "'");
        }
    }
    if (!have_ring) throw InputError("job needs a ring statement");
    if (job.command.empty()) throw InputError("job needs a command");
    if (job.command != "ops" && job.ideals.empty())
        throw InputError("command '" + job.command + "' needs an ideal statement");
    return job;
}

std::string print_jobspec(const JobSpec& job) {
    std::string out = "ring " + job.field.str() + "[";
    for (std::size_t i = 0; i < job.vars.size(); ++i) out += (i ? "," : "") + job.vars[i];
    out += "] weights [";
    for (std::size_t i = 0; i < job.weights.size(); ++i)
        out += (i ? "," : "") + std::to_string(job.weights[i]);
    out += "]";
    if (!job.quotient.empty()) {
        out += " quotient [";
        for (std::size_t i = 0; i < job.quotient.size(); ++i)
            out += (i ? ", " : "") + job.quotient[i];
        out += "]";
    }
    out += "\n";
    for (const auto& [name, gens] : job.ideals) {
        out += "ideal " + name + " = ";
        for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i];
        out += "\n";
    }
    out += job.command;
    for (const std::string& a : job.op_args) out += " " + a;
    out += " --method " + job.method;
    out += " --seed " + std::to_string(job.seed);
    out += " --t-max " + std::to_string(job.t_max);
    out += " --r-max " + std::to_string(job.r_max);
    if (job.exponent) out += " --exponent " + std::to_string(*job.exponent);
    out += " --variant " + job.variant;
    if (job.force) out += " --force";
    if (job.json) out += " --json";
    out += "\n";
    return out;
}

Ctx job_context(const JobSpec& job) {
    Ctx ctx = RingContext::polynomial_ring(job.field, job.vars, job.weights);
    if (!job.quotient.empty()) {
        std::vector<Polynomial> qs;
        for (const std::string& q : job.quotient) qs.push_back(ctx->parse(q));
        ctx = ctx->with_quotient(std::move(qs));
    }
    return ctx;
}

namespace {

ordered_json generators_json(const Ideal& I) {
    ordered_json a = ordered_json::array();
    for (const Polynomial& g : I.reduced_gens()) a.push_back(I.ctx()->str(g));
    return a;
}

ordered_json hypotheses_json(const HypothesisReport& h) {
    ordered_json j;
    j["classification"] = ideal_class_name(h.classification);
    j["analytic_spread"] = h.ell;
    j["height"] = h.height;
    j["gs_satisfied"] = h.gs.satisfied;
    ordered_json fh = ordered_json::array();
    for (const auto& [i, ht] : h.gs.fitting_heights)
        fh.push_back(ordered_json::array({i, ht}));
    j["fitting_heights"] = std::move(fh);
    j["warnings"] = h.warnings;
    return j;
}

ordered_json certificates_json(const Ctx& ctx, const std::vector<ReductionCertificate>& certs) {
    ordered_json a = ordered_json::array();
    for (const ReductionCertificate& c : certs) {
        ordered_json e;
        e["seed"] = c.seed;
        e["r"] = c.r;
        ordered_json rows = ordered_json::array();
        for (const auto& row : c.lambda) {
            ordered_json r = ordered_json::array();
            for (const Coeff& co : row) r.push_back(co.str());
            rows.push_back(std::move(r));
        }
        e["combinations"] = std::move(rows);
        (void)ctx;
        a.push_back(std::move(e));
    }
    return a;
}

CoreOptions core_options(const JobSpec& job) {
    CoreOptions co;
    co.seed = job.seed;
    co.t_max = job.t_max;
    co.sampling.r_max = job.r_max;
    co.variant = job.variant == "hsat" ? DetVariant::h_saturation : DetVariant::f_power;
    co.exponent = job.exponent;
    co.force = job.force;
    return co;
}

CoreResult run_core(const Ideal& I, const JobSpec& job) {
    CoreOptions co = core_options(job);
    if (job.method == "prob") return core_probabilistic(I, co);
    if (job.method == "det") return core_deterministic(I, co);
    return core_both(I, co);
}

Ideal resolve_operand(const Ctx& ctx, const JobSpec& job, const std::string& arg) {
    if (arg[0] == '(') {
        std::vector<Polynomial> gens;
        std::string inner = arg.substr(1, arg.size() - 2);
        std::size_t start = 0;
        for (std::size_t i = 0; i <= inner.size(); ++i)
            if (i == inner.size() || inner[i] == ',') {
                std::string piece = trimmed(inner.substr(start, i - start));
                if (!piece.empty()) gens.push_back(ctx->parse(piece));
                start = i + 1;
            }
        return Ideal(ctx, std::move(gens));
    }
    for (const auto& [name, gens] : job.ideals)
        if (name == arg) {
            std::vector<Polynomial> ps;
            for (const std::string& g : gens) ps.push_back(ctx->parse(g));
            return Ideal(ctx, std::move(ps));
        }
    throw InputError("unknown ideal '" + arg + "'");
}

void run_ops(const Ctx& ctx, const JobSpec& job, ordered_json& res) {
    const std::string& op = job.op_args[0];
    auto operand = [&](std::size_t i) { return resolve_operand(ctx, job, job.op_args[i]); };

    if (op == "gb") {
        res["generators"] = generators_json(operand(1));
    } else if (op == "intersect") {
        res["generators"] = generators_json(ideal_intersection(operand(1), operand(2)));
    } else if (op == "colon") {
        res["generators"] = generators_json(ideal_colon(operand(1), operand(2)));
    } else if (op == "saturate") {
        res["generators"] = generators_json(ideal_saturation(operand(1), operand(2)));
    } else if (op == "eliminate") {
        if (ctx->is_quotient())
            throw InputError("eliminate works in polynomial contexts only");
        std::string inner = job.op_args[2].substr(1, job.op_args[2].size() - 2);
        std::vector<std::size_t> drop;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= inner.size(); ++i)
            if (i == inner.size() || inner[i] == ',') {
                std::string name = trimmed(inner.substr(start, i - start));
                if (!name.empty()) drop.push_back(static_cast<std::size_t>(ctx->var_index(name)));
                start = i + 1;
            }
        std::vector<std::string> kept;
        std::vector<long long> kept_w;
        for (std::size_t i = 0; i < ctx->nvars(); ++i)
            if (std::find(drop.begin(), drop.end(), i) == drop.end()) {
                kept.push_back(ctx->vars()[i]);
                kept_w.push_back(ctx->weights()[i]);
            }
        Ctx target = RingContext::polynomial_ring(ctx->field(), kept, kept_w);
        res["generators"] = generators_json(eliminate(operand(1), drop, target));
    } else if (op == "radical-member") {
        std::string inner = job.op_args[1].substr(1, job.op_args[1].size() - 2);
        res["value"] = radical_membership(ctx->parse(inner), operand(2));
    } else if (op == "dim") {
        res["value"] = operand(1).dim();
    } else if (op == "vdim") {
        res["value"] = operand(1).vdim();
    } else if (op == "fitting") {
        res["generators"] =
            generators_json(fitting_ideal(operand(1), std::stoul(job.op_args[2])));
    } else {
        throw InternalError("unhandled operation '" + op + "'");
    }
}

std::string render_text(const ordered_json& rep) {
    std::string out;
    const ordered_json& input = rep["input"];
    out += "job: " + input["command"].get<std::string>() + " in " +
           input["ring"].get<std::string>() + "\n";
    if (rep.contains("error")) {
        out += "error (" + rep["error"]["kind"].get<std::string>() +
               "): " + rep["error"]["message"].get<std::string>() + "\n";
    }
    if (!rep["hypotheses"].is_null()) {
        const ordered_json& h = rep["hypotheses"];
        out += "classification: " + h["classification"].get<std::string>() +
               " (spread " + std::to_string(h["analytic_spread"].get<int>()) + ", height " +
               std::to_string(h["height"].get<int>()) + ", G_s " +
               (h["gs_satisfied"].get<bool>() ? "satisfied" : "violated") + ")\n";
        for (const auto& w : h["warnings"]) out += "warning: " + w.get<std::string>() + "\n";
    }
    if (!rep["result"].is_null()) {
        for (const auto& [key, value] : rep["result"].items()) {
            if (value.is_array() && (key == "generators" || key.find("candidate") != std::string::npos)) {
                out += key + ":\n";
                for (const auto& g : value) out += "  " + g.get<std::string>() + "\n";
            } else if (key == "certificates" || key == "combinations" || key == "transcript") {
                out += key + ": " + std::to_string(value.size()) + " entries\n";
            } else if (value.is_null()) {
                out += key + ": -\n";
            } else {
                out += key + ": " + value.dump() + "\n";
            }
        }
    }
    if (!rep["checks"].empty()) {
        out += "checks:\n";
        for (const auto& [key, value] : rep["checks"].items())
            out += "  " + key + ": " + (value.get<bool>() ? "pass" : "FAIL") + "\n";
    }
    out += "timing_ms: " + rep["timing_ms"].dump() + "\n";
    return out;
}

} // namespace

RunOutcome run_job(const JobSpec& job) {
    counters().reset();
    const auto t0 = std::chrono::steady_clock::now();

    RunOutcome out;
    ordered_json& rep = out.report;
    ordered_json input;
    input["ring"] = [&] {
        std::string line = print_jobspec(job);
        return line.substr(0, line.find('\n')).substr(5); // the ring statement body
    }();
    ordered_json ideals = ordered_json::array();
    for (const auto& [name, gens] : job.ideals) {
        ordered_json e;
        e["name"] = name;
        e["generators"] = gens;
        ideals.push_back(std::move(e));
    }
    input["ideals"] = std::move(ideals);
    input["command"] = job.command;
    input["args"] = job.op_args;
    ordered_json opts;
    opts["method"] = job.method;
    opts["seed"] = job.seed;
    opts["t_max"] = job.t_max;
    opts["r_max"] = job.r_max;
    if (job.exponent)
        opts["exponent"] = *job.exponent;
    else
        opts["exponent"] = nullptr;
    opts["variant"] = job.variant;
    opts["force"] = job.force;
    input["options"] = std::move(opts);
    rep["input"] = std::move(input);
    rep["hypotheses"] = nullptr;
    rep["result"] = nullptr;
    rep["error"] = nullptr;
    rep["checks"] = ordered_json::object();
    rep["timing_ms"] = 0;
    rep["counters"] = nullptr;

    auto set_error = [&](const char* kind, const std::string& msg, int code) {
        ordered_json e;
        e["kind"] = kind;
        e["message"] = msg;
        rep["error"] = std::move(e);
        out.exit_code = code;
    };

    try {
        Ctx ctx = job_context(job);
        Ideal primary;
        if (!job.ideals.empty()) {
            std::vector<Polynomial> gens;
            for (const std::string& g : job.ideals.front().second) gens.push_back(ctx->parse(g));
            primary = Ideal(ctx, std::move(gens));
        }
        ordered_json res;

        if (job.command == "core" || job.command == "verify") {
            // classified up front so a refusal still reports why
            rep["hypotheses"] = hypotheses_json(classify_hypotheses(primary));
            CoreResult R = run_core(primary, job);
            rep["hypotheses"] = hypotheses_json(R.hypotheses);
            res["generators"] = R.core ? generators_json(*R.core) : ordered_json(nullptr);
            res["method"] = core_method_name(R.method);
            res["seed"] = R.seed;
            res["t_used"] = R.t_used;
            res["exponent_used"] = R.exponent_used;
            res["variant"] = job.variant;
            res["certified"] = R.certified;
            res["certificates"] = certificates_json(ctx, R.certificates);
            for (const auto& [name, ok] : R.checks) rep["checks"][name] = ok;
            if (!R.core) {
                if (R.prob_candidate) res["prob_candidate"] = generators_json(*R.prob_candidate);
                if (R.det_candidate) res["det_candidate"] = generators_json(*R.det_candidate);
                set_error("disagreement", "pipelines disagree; both candidates attached", 2);
            } else if (job.command == "verify") {
                int ring_dim = Ideal(ctx, {}).dim();
                auto checks = verify_core(primary, *R.core, ring_dim, 5, job.seed);
                for (const auto& [name, ok] : checks) rep["checks"][name] = ok;
            }
        } else if (job.command == "spread") {
            res["analytic_spread"] = analytic_spread(primary);
        } else if (job.command == "reduction") {
            int ell = analytic_spread(primary);
            SampleOptions so;
            so.r_max = job.r_max;
            ReductionCertificate cert = sample_general_reduction(primary, ell, job.seed, so);
            res["generators"] = generators_json(cert.J);
            res["r"] = cert.r;
            res["seed"] = cert.seed;
            ordered_json rows = ordered_json::array();
            for (const auto& row : cert.lambda) {
                ordered_json r = ordered_json::array();
                for (const Coeff& c : row) r.push_back(c.str());
                rows.push_back(std::move(r));
            }
            res["combinations"] = std::move(rows);
            ordered_json tr = ordered_json::array();
            for (const MembershipCheck& mc : cert.transcript) {
                ordered_json e;
                e["element"] = ctx->str(mc.element);
                e["power"] = mc.power;
                e["member"] = mc.member;
                tr.push_back(std::move(e));
            }
            res["transcript"] = std::move(tr);
        } else if (job.command == "multiplicity") {
            res["multiplicity"] = multiplicity(primary, job.seed);
            res["seed"] = job.seed;
        } else if (job.command == "ops") {
            run_ops(ctx, job, res);
        } else {
            throw InternalError("unhandled command '" + job.command + "'");
        }
        rep["result"] = std::move(res);
    } catch (const InputError& e) {
        set_error("input", e.what(), 1);
    } catch (const HypothesisError& e) {
        set_error("hypothesis", e.what(), 3);
    } catch (const ShapeError& e) {
        set_error("shape", e.what(), 2);
    } catch (const ResourceError& e) {
        set_error("resource", e.what(), 2);
    } catch (const InternalError& e) {
        set_error("internal", e.what(), 4);
    } catch (const std::exception& e) {
        set_error("internal", e.what(), 4);
    }

    if (rep["error"].is_null()) rep.erase("error");

    const Counters& c = counters();
    ordered_json cj;
    cj["gb_computations"] = c.gb_computations;
    cj["pair_reductions"] = c.pair_reductions;
    cj["normal_forms"] = c.normal_forms;
    cj["eliminations"] = c.eliminations;
    cj["colons"] = c.colons;
    cj["saturation_steps"] = c.saturation_steps;
    cj["reductions_sampled"] = c.reductions_sampled;
    rep["counters"] = std::move(cj);
    rep["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();

    out.text = render_text(rep);
    return out;
}

} // namespace idealcore
