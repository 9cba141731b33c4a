#include "dehnrw/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace dehnrw {

namespace {

using ojson = nlohmann::ordered_json;

ojson roles_json(const RoleAssignment& roles) {
    ojson sources = ojson::array(), sinks = ojson::array();
    for (int g = 0; g < roles.size(); ++g)
        (roles.is_source(g) ? sources : sinks).push_back(g);
    return ojson{{"sources", sources}, {"sinks", sinks}};
}

ojson rule_json(const Rule& r, const RewritingSystem& s) {
    return ojson{{"lhs", render(r.lhs, s.roles)},
                 {"rhs", render(r.rhs, s.roles)},
                 {"kind", kind_name(r.kind)},
                 {"class", class_name(r.cls)}};
}

} // namespace

std::string validation_json(const ValidationReport& rep) {
    ojson checks = ojson::array();
    for (const auto& c : rep.checks)
        checks.push_back(
            ojson{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return ojson{{"ok", rep.ok}, {"checks", checks}}.dump(2) + "\n";
}

std::string presentation_json(const KnotSystems& ks) {
    ojson relators = ojson::array();
    for (const auto& r : ks.presentation.relators)
        relators.push_back(ojson{{"crossing", r.crossing},
                                 {"word", render(r.word)},
                                 {"with_roles", render(r.word, ks.roles)}});
    ojson t_plus = ojson::array();
    for (int g = 0; g < ks.presentation.num_generators; ++g)
        if (ks.t_plus[g]) t_plus.push_back(g);
    return ojson{{"regions", ks.presentation.num_generators},
                 {"killed", ks.presentation.killed},
                 {"roles", roles_json(ks.roles)},
                 {"t_plus", t_plus},
                 {"relators", relators}}
               .dump(2) +
           "\n";
}

std::string rules_json(const RewritingSystem& s) {
    ojson rules = ojson::array();
    for (const auto& r : s.rules) rules.push_back(rule_json(r, s));
    return ojson{{"stage", stage_name(s.stage)},
                 {"generators", s.num_generators},
                 {"killed", s.killed},
                 {"keep_killed", s.keep_killed},
                 {"roles", roles_json(s.roles)},
                 {"rule_count", s.rules.size()},
                 {"rules", rules}}
               .dump(2) +
           "\n";
}

std::string normalize_json(const Word& input, const NormalizeResult& res,
                           const RewritingSystem& s) {
    return ojson{{"input", render(input, s.roles)},
                 {"normal_form", render(res.nf, s.roles)},
                 {"steps", res.steps},
                 {"monitored", res.monitored}}
               .dump(2) +
           "\n";
}

std::string audit_json(const AuditReport& rep, const RewritingSystem& s) {
    ojson entries = ojson::array();
    for (const auto& e : rep.entries) {
        const Rule& r1 = s.rules[e.amb.rule1];
        const Rule& r2 = s.rules[e.amb.rule2];
        entries.push_back(ojson{{"type", e.amb.is_overlap ? "overlap" : "inclusion"},
                                {"rule1", rule_json(r1, s)},
                                {"rule2", rule_json(r2, s)},
                                {"word", render(e.amb.word, s.roles)},
                                {"nf1", render(e.nf1, s.roles)},
                                {"nf2", render(e.nf2, s.roles)},
                                {"resolved", e.resolved}});
    }
    return ojson{{"stage", stage_name(s.stage)},
                 {"total", rep.total},
                 {"resolved", rep.resolved},
                 {"unresolved", rep.unresolved},
                 {"complete", rep.all_resolved},
                 {"ambiguities", entries}}
               .dump(2) +
           "\n";
}

std::string validation_text(const ValidationReport& rep) {
    std::ostringstream out;
    for (const auto& c : rep.checks) {
        out << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
    out << (rep.ok ? "validation passed\n" : "validation failed\n");
    return out.str();
}

std::string presentation_text(const KnotSystems& ks) {
    std::ostringstream out;
    const auto& p = ks.presentation;
    out << p.num_generators << " regions, generator x" << p.killed
        << " killed (unbounded)\n";
    out << "sources:";
    for (int g = 0; g < p.num_generators; ++g)
        if (ks.roles.is_source(g)) out << " x" << g;
    out << "\nsinks:";
    for (int g = 0; g < p.num_generators; ++g)
        if (ks.roles.is_sink(g)) out << " x" << g;
    out << "\nrelators:\n";
    for (const auto& r : p.relators)
        out << "  crossing " << r.crossing << ": " << render(r.word) << "   ("
            << render(r.word, ks.roles) << ")\n";
    return out.str();
}

std::string rules_text(const RewritingSystem& s) {
    std::ostringstream out;
    out << "stage " << stage_name(s.stage) << ", " << s.rules.size() << " rules\n";
    for (const auto& r : s.rules)
        out << "  " << render(r.lhs, s.roles) << " -> " << render(r.rhs, s.roles)
            << "   [kind " << kind_name(r.kind) << ", class " << class_name(r.cls)
            << "]\n";
    return out.str();
}

std::string audit_text(const AuditReport& rep, const RewritingSystem& s) {
    std::ostringstream out;
    out << "stage " << stage_name(s.stage) << ": " << rep.total << " ambiguities, "
        << rep.resolved << " resolved, " << rep.unresolved << " unresolved\n";
    for (const auto& e : rep.entries)
        if (!e.resolved)
            out << "  UNRESOLVED " << render(e.amb.word, s.roles) << " -> "
                << render(e.nf1, s.roles) << " | " << render(e.nf2, s.roles) << "\n";
    out << (rep.all_resolved ? "locally confluent\n" : "not locally confluent\n");
    return out.str();
}

} // namespace dehnrw
