#include "dehnrw/rules.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "dehnrw/engine.hpp"
#include "dehnrw/errors.hpp"

namespace dehnrw {

namespace {

bool mentions(const Word& w, int gen) {
    return std::any_of(w.begin(), w.end(), [&](Letter a) { return a.gen == gen; });
}

bool is_factor(const Word& needle, const Word& hay) {
    if (needle.size() > hay.size()) return false;
    for (size_t q = 0; q + needle.size() <= hay.size(); ++q) {
        bool m = true;
        for (size_t t = 0; t < needle.size() && m; ++t) m = hay[q + t] == needle[t];
        if (m) return true;
    }
    return false;
}

// kind-(1) rules indexed by their lhs generator: l -> (j, k).
std::map<int, std::pair<int, int>> kind1_index(const RewritingSystem& s) {
    std::map<int, std::pair<int, int>> idx;
    for (const auto& r : s.rules)
        if (r.kind == RuleKind::k1)
            idx[r.lhs[0].gen] = {r.rhs[0].gen, r.rhs[1].gen};
    return idx;
}

void assert_order_oriented(const Rule& r, const RewritingSystem& s) {
    OrderVector vl = order_vector(r.lhs, s.roles, s.t_plus);
    OrderVector vr = order_vector(r.rhs, s.roles, s.t_plus);
    if (!(vr < vl))
        throw HypothesisError("rule " + render(r.lhs, s.roles) + " -> " +
                              render(r.rhs, s.roles) +
                              " is not strictly order-oriented: " + vl.str() +
                              " vs " + vr.str());
}

} // namespace

RewritingSystem build_R_prime(const RewritingSystem& R,
                              const std::vector<PhiTriple>& phis, bool keep_killed) {
    if (R.stage != Stage::R)
        throw HypothesisError("build_R_prime expects the full-presentation system");
    RewritingSystem s;
    s.stage = Stage::Rprime;
    s.num_generators = R.num_generators;
    s.killed = R.killed;
    s.keep_killed = keep_killed;
    s.roles = R.roles;
    s.t_plus = R.t_plus;
    if (!R.roles.is_source(R.killed))
        throw HypothesisError("the killed generator must be a source");

    // Relators through the killed region: the three collapsed rules each.
    for (const auto& phi : phis) {
        if (!s.roles.is_sink(phi.j) || !s.roles.is_source(phi.k) || !s.roles.is_sink(phi.l))
            throw HypothesisError("collapsed relator indices do not match roles");
        if (static_cast<size_t>(phi.l) >= s.t_plus.size() || !s.t_plus[phi.l])
            throw HypothesisError(
                "kind-(1) head t" + std::to_string(phi.l) +
                " is not adjacent to the unbounded region");
        Rule r1{{{phi.l, 1}}, {{phi.j, -1}, {phi.k, 1}}, RuleKind::k1, RuleClass::other};
        Rule r2{{{phi.k, 1}, {phi.l, -1}}, {{phi.j, 1}}, RuleKind::k2, RuleClass::other};
        Rule r3{{{phi.l, -1}, {phi.j, -1}}, {{phi.k, -1}}, RuleKind::k3, RuleClass::other};
        s.rules.push_back(r1);
        s.rules.push_back(r2);
        s.rules.push_back(r3);
    }

    // Rules of relators avoiding the killed region carry over unchanged.
    for (const auto& r : R.rules) {
        if (r.kind != RuleKind::base) continue;
        if (mentions(r.lhs, R.killed) || mentions(r.rhs, R.killed)) continue;
        Rule g = r;
        int sink = g.lhs[1].gen;
        bool heads_k1 = static_cast<size_t>(sink) < s.t_plus.size() && s.t_plus[sink];
        if (g.lhs[0].exp > 0)
            g.kind = heads_k1 ? RuleKind::beta : RuleKind::alpha;
        else
            g.kind = heads_k1 ? RuleKind::gamma : RuleKind::delta;
        s.rules.push_back(std::move(g));
    }

    append_cancel_rules(s);
    for (auto& r : s.rules) r.cls = rule_class(r.lhs, r.rhs, s.roles, s.t_plus);
    canonical_sort(s.rules);
    return s;
}

RewritingSystem add_kind4(const RewritingSystem& s) {
    if (s.stage != Stage::Rprime)
        throw HypothesisError("add_kind4 expects the augmented system");
    RewritingSystem out = s;
    // (3)-rules keyed by the first lhs generator.
    std::map<int, const Rule*> k3;
    for (const auto& r : out.rules)
        if (r.kind == RuleKind::k3) k3[r.lhs[0].gen] = &r;

    std::vector<Rule> added;
    for (const auto& [l, rule] : k3) {
        int j = rule->lhs[1].gen;
        int k = rule->rhs[0].gen;
        auto itc = k3.find(j);
        if (itc == k3.end())
            throw HypothesisError("kind-(3) rule for t" + std::to_string(j) +
                                  " missing; chained overlap cannot be resolved");
        int l2 = itc->second->lhs[1].gen;
        int k2 = itc->second->rhs[0].gen;
        Rule r4{{{k, -1}, {l2, -1}}, {{l, -1}, {k2, -1}}, RuleKind::k4, RuleClass::other};
        r4.cls = rule_class(r4.lhs, r4.rhs, out.roles, out.t_plus);
        assert_order_oriented(r4, out);
        added.push_back(std::move(r4));
    }
    for (auto& r : added) {
        if (const Rule* prev = out.find_lhs(r.lhs)) {
            if (prev->rhs != r.rhs)
                throw HypothesisError("conflicting rules for lhs " +
                                      render(r.lhs, out.roles));
            continue;
        }
        out.rules.push_back(std::move(r));
    }
    canonical_sort(out.rules);
    return out;
}

RewritingSystem add_kind5_and_rewire(const RewritingSystem& s, int* passes_out) {
    if (s.stage != Stage::Rprime)
        throw HypothesisError("add_kind5_and_rewire expects the augmented system");
    RewritingSystem out = s;
    auto k1 = kind1_index(out);

    int passes = 0;
    const int max_passes = static_cast<int>(out.rules.size()) + 2;
    bool changed = true;
    while (changed) {
        if (++passes > max_passes)
            throw HypothesisError("rewiring did not reach a fixpoint");
        changed = false;

        std::vector<Rule> additions;
        std::vector<Word> removals;

        for (const auto& r : out.rules) {
            // Positive two-letter rules whose lhs sink heads a kind-(1)
            // rule force the replacement of their partner rule.
            bool positive_pair = r.lhs.size() == 2 && r.rhs.size() == 2 &&
                                 r.lhs[0].exp > 0 && r.lhs[1].exp < 0 &&
                                 r.rhs[0].exp > 0 && r.rhs[1].exp < 0 &&
                                 out.roles.is_source(r.lhs[0]) &&
                                 out.roles.is_sink(r.lhs[1]) &&
                                 out.roles.is_sink(r.rhs[0]) &&
                                 out.roles.is_source(r.rhs[1]);
            if (positive_pair) {
                int a = r.lhs[0].gen, b = r.lhs[1].gen;
                int c = r.rhs[0].gen, d = r.rhs[1].gen;
                auto it = k1.find(b);
                if (it != k1.end()) {
                    auto [j, k] = it->second;
                    Rule r5{{{d, -1}, {j, -1}},
                            {{c, -1}, {a, 1}, {k, -1}},
                            RuleKind::k5,
                            RuleClass::other};
                    r5.rhs = free_reduce(r5.rhs);
                    r5.cls = rule_class(r5.lhs, r5.rhs, out.roles, out.t_plus);
                    if (const Rule* prev = out.find_lhs(r5.lhs)) {
                        if (prev->rhs != r5.rhs)
                            throw HypothesisError("conflicting rules for lhs " +
                                                  render(r5.lhs, out.roles));
                    } else {
                        assert_order_oriented(r5, out);
                        additions.push_back(std::move(r5));
                        Word partner{{d, -1}, {b, 1}};
                        const Rule* p = out.find_lhs(partner);
                        if (!p)
                            throw HypothesisError("partner rule " +
                                                  render(partner, out.roles) +
                                                  " -> ... not found");
                        removals.push_back(partner);
                    }
                }
            }
        }

        for (const Word& lhs : removals) {
            auto it = std::find_if(out.rules.begin(), out.rules.end(),
                                   [&](const Rule& r) { return r.lhs == lhs; });
            if (it != out.rules.end()) {
                out.rules.erase(it);
                changed = true;
            }
        }
        for (auto& r : additions) {
            out.rules.push_back(std::move(r));
            changed = true;
        }

        // Right-hand sides headed by a positive sink with a kind-(1) rule
        // are rewritten through it.
        for (auto& r : out.rules) {
            if (r.kind == RuleKind::free_cancel || r.kind == RuleKind::k1) continue;
            if (r.rhs.empty() || r.rhs[0].exp < 0 || !out.roles.is_sink(r.rhs[0])) continue;
            auto it = k1.find(r.rhs[0].gen);
            if (it == k1.end()) continue;
            auto [j, k] = it->second;
            Word head{{j, -1}, {k, 1}};
            Word rest(r.rhs.begin() + 1, r.rhs.end());
            r.rhs = free_reduce(concat(head, rest));
            switch (r.kind) {
                case RuleKind::k2: r.kind = RuleKind::k2p; break;
                case RuleKind::alpha: r.kind = RuleKind::alphap; break;
                case RuleKind::beta: r.kind = RuleKind::betap; break;
                default: break;
            }
            r.cls = rule_class(r.lhs, r.rhs, out.roles, out.t_plus);
            changed = true;
        }

        canonical_sort(out.rules);
    }
    if (passes_out) *passes_out = passes;
    return out;
}

RewritingSystem reduce_system(const RewritingSystem& s) {
    RewritingSystem out = s;
    NormalizeOptions opts;
    opts.monitor = false;
    opts.fuse = 100'000;

    bool changed = true;
    while (changed) {
        changed = false;

        for (auto& r : out.rules) {
            if (r.kind == RuleKind::free_cancel) continue;
            Word nf = normal_form(r.rhs, out, opts).nf;
            if (nf != r.rhs) {
                r.rhs = std::move(nf);
                switch (r.kind) {
                    case RuleKind::k2: r.kind = RuleKind::k2p; break;
                    case RuleKind::alpha: r.kind = RuleKind::alphap; break;
                    case RuleKind::beta: r.kind = RuleKind::betap; break;
                    default: break;
                }
                r.cls = rule_class(r.lhs, r.rhs, out.roles, out.t_plus);
                changed = true;
            }
        }

        // Drop group rules subsumed by another rule's lhs. Cancellation
        // rules stay: t -> ... inside t t' -> 1 is expected and handled by
        // the audit as an inclusion ambiguity.
        for (size_t i = 0; i < out.rules.size(); ++i) {
            if (out.rules[i].kind == RuleKind::free_cancel) continue;
            for (size_t j = 0; j < out.rules.size(); ++j) {
                if (i == j) continue;
                const Word& inner = out.rules[j].lhs;
                const Word& outer = out.rules[i].lhs;
                if (inner == outer)
                    throw HypothesisError("conflicting rules for lhs " +
                                          render(outer, out.roles));
                if (is_factor(inner, outer)) {
                    out.rules.erase(out.rules.begin() + static_cast<long>(i));
                    --i;
                    changed = true;
                    break;
                }
            }
        }

        canonical_sort(out.rules);
    }

    out.stage = Stage::Rsecond;
    return out;
}

ClassTally classify(const RewritingSystem& s) {
    ClassTally tally;
    for (const auto& r : s.rules) {
        RuleClass c = rule_class(r.lhs, r.rhs, s.roles, s.t_plus);
        switch (c) {
            case RuleClass::A: tally.A++; break;
            case RuleClass::B: tally.B++; break;
            case RuleClass::C: tally.C++; break;
            case RuleClass::D: tally.D++; break;
            case RuleClass::cancel: tally.cancel++; break;
            case RuleClass::other: tally.other++; break;
        }
        if (s.stage == Stage::Rsecond) {
            if (c != r.cls)
                throw HypothesisError("stored class disagrees with shape for " +
                                      render(r.lhs, s.roles));
            RuleClass expect;
            switch (r.kind) {
                case RuleKind::free_cancel: expect = RuleClass::cancel; break;
                case RuleKind::k5:
                case RuleKind::alphap:
                case RuleKind::betap: expect = RuleClass::A; break;
                case RuleKind::k2p:
                case RuleKind::k4:
                case RuleKind::alpha:
                case RuleKind::beta:
                case RuleKind::gamma:
                case RuleKind::delta: expect = RuleClass::B; break;
                case RuleKind::k1: expect = RuleClass::C; break;
                case RuleKind::k3: expect = RuleClass::D; break;
                default:
                    throw HypothesisError("kind " + kind_name(r.kind) +
                                          " has no place in a finished system");
            }
            if (c != expect)
                throw HypothesisError("rule " + render(r.lhs, s.roles) + " -> " +
                                      render(r.rhs, s.roles) + " of kind " +
                                      kind_name(r.kind) + " classifies as " +
                                      class_name(c) + ", expected " +
                                      class_name(expect));
        } else if (c == RuleClass::other && r.kind != RuleKind::free_cancel &&
                   s.stage == Stage::R) {
            throw HypothesisError("unclassifiable rule in the full system");
        }
    }
    return tally;
}

} // namespace dehnrw
