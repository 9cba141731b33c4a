#include "dehnrw/rewriting.hpp"

#include <algorithm>
#include <tuple>

#include "dehnrw/errors.hpp"

namespace dehnrw {

std::string kind_name(RuleKind k) {
    switch (k) {
        case RuleKind::free_cancel: return "0";
        case RuleKind::base: return "base";
        case RuleKind::k1: return "1";
        case RuleKind::k2: return "2";
        case RuleKind::k2p: return "2'";
        case RuleKind::k3: return "3";
        case RuleKind::k4: return "4";
        case RuleKind::k5: return "5";
        case RuleKind::alpha: return "alpha";
        case RuleKind::alphap: return "alpha'";
        case RuleKind::beta: return "beta";
        case RuleKind::betap: return "beta'";
        case RuleKind::gamma: return "gamma";
        case RuleKind::delta: return "delta";
    }
    return "?";
}

std::string class_name(RuleClass c) {
    switch (c) {
        case RuleClass::A: return "A";
        case RuleClass::B: return "B";
        case RuleClass::C: return "C";
        case RuleClass::D: return "D";
        case RuleClass::cancel: return "free-reduction";
        case RuleClass::other: return "other";
    }
    return "?";
}

std::string stage_name(Stage s) {
    switch (s) {
        case Stage::R: return "R";
        case Stage::Rprime: return "R'";
        case Stage::Rsecond: return "R''";
    }
    return "?";
}

std::vector<const Rule*> RewritingSystem::rules_of_kind(RuleKind k) const {
    std::vector<const Rule*> out;
    for (const auto& r : rules)
        if (r.kind == k) out.push_back(&r);
    return out;
}

const Rule* RewritingSystem::find_lhs(const Word& lhs) const {
    for (const auto& r : rules)
        if (r.lhs == lhs) return &r;
    return nullptr;
}

bool RewritingSystem::letter_allowed(Letter a) const {
    if (a.gen < 0 || a.gen >= num_generators) return false;
    if (a.gen == killed) return stage == Stage::R || keep_killed;
    return true;
}

void canonical_sort(std::vector<Rule>& rules) {
    auto key = [](const Rule& r) {
        int last = r.kind == RuleKind::free_cancel ? 1 : 0;
        return std::make_tuple(last, static_cast<int>(r.kind), r.lhs, r.rhs);
    };
    std::sort(rules.begin(), rules.end(),
              [&](const Rule& a, const Rule& b) { return key(a) < key(b); });
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
}

RuleClass rule_class(const Word& lhs, const Word& rhs, const RoleAssignment& roles,
                     const std::vector<bool>& t_plus) {
    auto S = [&](const Word& w, size_t i) { return roles.is_source(w[i]); };
    auto T = [&](const Word& w, size_t i) { return roles.is_sink(w[i]); };

    if (lhs.size() == 2 && rhs.empty() && lhs[0].gen == lhs[1].gen &&
        lhs[0].exp == -lhs[1].exp)
        return RuleClass::cancel;
    if (lhs.size() == 2 && S(lhs, 0) && T(lhs, 1)) {
        if (rhs.size() == 3 && T(rhs, 0) && S(rhs, 1) && S(rhs, 2)) return RuleClass::A;
        if (rhs.size() == 2 && T(rhs, 0) && S(rhs, 1)) return RuleClass::B;
    }
    if (lhs.size() == 1 && lhs[0].exp == 1 && T(lhs, 0) &&
        static_cast<size_t>(lhs[0].gen) < t_plus.size() && t_plus[lhs[0].gen] &&
        rhs.size() == 2 && T(rhs, 0) && S(rhs, 1))
        return RuleClass::C;
    if (lhs.size() == 2 && T(lhs, 0) && T(lhs, 1) && rhs.size() == 1 && S(rhs, 0))
        return RuleClass::D;
    return RuleClass::other;
}

void append_cancel_rules(RewritingSystem& s) {
    for (int g = 0; g < s.num_generators; ++g) {
        if (g == s.killed && s.stage != Stage::R && !s.keep_killed) continue;
        for (int e : {1, -1}) {
            Rule r;
            r.lhs = {{g, e}, {g, -e}};
            r.rhs = {};
            r.kind = RuleKind::free_cancel;
            r.cls = RuleClass::cancel;
            s.rules.push_back(std::move(r));
        }
    }
}

} // namespace dehnrw
