#include "dehnrw/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "dehnrw/json_io.hpp"
#include "dehnrw/pipeline.hpp"

namespace dehnrw {

namespace {

struct CliOptions {
    std::string knot, pd, file;
    std::optional<int> unbounded;
    int seed = 0;
    bool keep_x0 = false;
    std::string format = "text";
    std::string stage = "Rpp";
    std::string monitor = "on";
    long long fuse = 1'000'000;
    std::string strategy = "leftmost";
    std::uint64_t rng_seed = 0;
    bool trace = false;
    std::string word1, word2;
};

Stage to_stage(const std::string& s) {
    if (s == "R") return Stage::R;
    if (s == "Rp" || s == "R'") return Stage::Rprime;
    return Stage::Rsecond;
}

Diagram load_diagram(const CliOptions& o) {
    if (!o.knot.empty()) return parse_pd(builtin_pd(o.knot));
    if (!o.pd.empty()) return parse_pd(o.pd);
    std::ifstream in(o.file);
    if (!in) throw ParseError("cannot open " + o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_diagram_json(text);
    return parse_pd(text);
}

BuildOptions build_options(const CliOptions& o) {
    BuildOptions b;
    b.unbounded = o.unbounded;
    b.role_seed = o.seed;
    b.keep_killed = o.keep_x0;
    return b;
}

NormalizeOptions normalize_options(const CliOptions& o) {
    NormalizeOptions n;
    n.monitor = o.monitor == "on";
    n.fuse = o.fuse;
    if (o.strategy == "rightmost") n.strategy = Strategy::rightmost;
    else if (o.strategy == "random") n.strategy = Strategy::random;
    n.seed = o.rng_seed;
    return n;
}

int cmd_validate(const CliOptions& o, std::ostream& out) {
    ValidationReport rep = validate(load_diagram(o));
    out << (o.format == "json" ? validation_json(rep) : validation_text(rep));
    return rep.ok ? 0 : 2;
}

int cmd_present(const CliOptions& o, std::ostream& out) {
    KnotSystems ks = build_systems(load_diagram(o), build_options(o));
    out << (o.format == "json" ? presentation_json(ks) : presentation_text(ks));
    return 0;
}

int cmd_rules(const CliOptions& o, std::ostream& out) {
    KnotSystems ks = build_systems(load_diagram(o), build_options(o));
    const RewritingSystem& s = ks.system(to_stage(o.stage));
    out << (o.format == "json" ? rules_json(s) : rules_text(s));
    return 0;
}

int cmd_normalize(const CliOptions& o, std::ostream& out) {
    KnotSystems ks = build_systems(load_diagram(o), build_options(o));
    const RewritingSystem& s = ks.system(to_stage(o.stage));
    Word w = parse_word(o.word1, s.roles);
    if (o.trace) {
        Word cur = w;
        out << render(cur, s.roles) << "\n";
        while (auto step = rewrite_step(cur, s)) {
            const Rule& r = s.rules[step->rule];
            cur = step->result;
            out << "  -[" << kind_name(r.kind) << " at " << step->pos << "]-> "
                << render(cur, s.roles) << "\n";
        }
    }
    NormalizeResult res = normal_form(w, s, normalize_options(o));
    if (o.format == "json") out << normalize_json(w, res, s);
    else out << render(res.nf, s.roles) << "\n";
    return 0;
}

int cmd_equal(const CliOptions& o, std::ostream& out, std::ostream& err) {
    KnotSystems ks = build_systems(load_diagram(o), build_options(o));
    RewritingSystem s = ks.system(to_stage(o.stage));
    AuditReport rep = audit_confluence(s);
    if (!rep.all_resolved) {
        err << "system at stage " << stage_name(s.stage)
            << " is not locally confluent; cannot decide equality\n";
        return 3;
    }
    mark_complete(s, rep);
    Word u = parse_word(o.word1, s.roles);
    Word v = parse_word(o.word2, s.roles);
    bool eq = word_equal(u, v, s, normalize_options(o));
    out << (eq ? "equal" : "different") << "\n";
    return 0;
}

int cmd_audit(const CliOptions& o, std::ostream& out) {
    KnotSystems ks = build_systems(load_diagram(o), build_options(o));
    const RewritingSystem& s = ks.system(to_stage(o.stage));
    AuditReport rep = audit_confluence(s);
    out << (o.format == "json" ? audit_json(rep, s) : audit_text(rep, s));
    return rep.all_resolved ? 0 : 3;
}

int cmd_emit_dot(const CliOptions& o, std::ostream& out) {
    KnotSystems ks = build_systems(load_diagram(o), build_options(o));
    out << to_dot(ks.delta, ks.roles);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Complete rewriting systems for Dehn presentations of "
                 "alternating knot groups"};
    app.name("dehnrw");
    CliOptions o;

    auto* input = app.add_option_group("input", "diagram source (pick one)");
    input->add_option("--knot", o.knot, "built-in diagram: trefoil or figure8");
    input->add_option("--pd", o.pd, "inline PD code, e.g. 'X[1,4,2,5] ...'");
    input->add_option("--file", o.file, "path to a PD or JSON diagram file");
    input->require_option(1);

    app.add_option("--unbounded", o.unbounded,
                   "region discovery id to treat as unbounded");
    app.add_option("--seed", o.seed, "generator seeded as a source, default 0");
    app.add_flag("--keep-x0", o.keep_x0,
                 "keep the killed generator's free-reduction rules");
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--stage", o.stage, "rewriting stage")
        ->check(CLI::IsMember({"R", "Rp", "Rpp", "R'", "R''"}))
        ->capture_default_str();
    app.add_option("--monitor", o.monitor,
                   "check the termination order at every step")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    app.add_option("--fuse", o.fuse, "rewrite step limit")->capture_default_str();
    app.add_option("--strategy", o.strategy, "redex selection strategy")
        ->check(CLI::IsMember({"leftmost", "rightmost", "random"}))
        ->capture_default_str();
    app.add_option("--rng-seed", o.rng_seed, "seed for the random strategy");

    auto* validate_cmd = app.add_subcommand("validate", "check the hypotheses");
    auto* present_cmd =
        app.add_subcommand("present", "print the Dehn presentation");
    auto* rules_cmd = app.add_subcommand("rules", "print the rewriting system");
    auto* normalize_cmd =
        app.add_subcommand("normalize", "rewrite a word to normal form");
    normalize_cmd->add_option("word", o.word1, "word to normalize")->required();
    normalize_cmd->add_flag("--trace", o.trace, "print every rewrite step");
    auto* equal_cmd =
        app.add_subcommand("equal", "decide equality of two words");
    equal_cmd->add_option("word1", o.word1, "first word")->required();
    equal_cmd->add_option("word2", o.word2, "second word")->required();
    auto* audit_cmd =
        app.add_subcommand("audit", "resolve all critical pairs");
    auto* dot_cmd =
        app.add_subcommand("emit-dot", "print the derived graph as DOT");
    for (auto* sub : {validate_cmd, present_cmd, rules_cmd, normalize_cmd,
                      equal_cmd, audit_cmd, dot_cmd})
        sub->fallthrough();
    app.require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 64;
    }

    try {
        if (*validate_cmd) return cmd_validate(o, out);
        if (*present_cmd) return cmd_present(o, out);
        if (*rules_cmd) return cmd_rules(o, out);
        if (*normalize_cmd) return cmd_normalize(o, out);
        if (*equal_cmd) return cmd_equal(o, out, err);
        if (*audit_cmd) return cmd_audit(o, out);
        if (*dot_cmd) return cmd_emit_dot(o, out);
        err << "no command given\n";
        return 64;
    } catch (const ValidationFailed& e) {
        err << validation_text(e.report);
        return 2;
    } catch (const MonitorViolation& e) {
        err << "monitor violation: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        err << "hypothesis failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace dehnrw
