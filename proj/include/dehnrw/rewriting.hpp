#pragma once

#include <string>
#include <vector>

#include "dehnrw/word.hpp"

namespace dehnrw {

// Rule kinds. free_cancel covers g g' -> 1 and g' g -> 1. base marks the
// oriented two-letter rules of the full region-presentation system, before
// the killed generator is eliminated. The remaining kinds follow the
// construction for the augmented system: 1/2/3 come from relators through
// the killed region, alpha/beta/gamma/delta from relators avoiding it,
// 4 and 5 are the completion rules, and the primed kinds are the same
// rules with their right-hand side reduced.
enum class RuleKind {
    free_cancel,
    base,
    k1,
    k2,
    k2p,
    k3,
    k4,
    k5,
    alpha,
    alphap,
    beta,
    betap,
    gamma,
    delta,
};

// Shape classes used by the termination order:
//   A: s t -> t s s   B: s t -> t s   C: t+ -> t s   D: t t -> s
// (roles only; exponents free). cancel is the free cancellation shape and
// other marks shapes outside the table (legal in intermediate stages only).
enum class RuleClass { A, B, C, D, cancel, other };

std::string kind_name(RuleKind k);
std::string class_name(RuleClass c);

struct Rule {
    Word lhs, rhs;
    RuleKind kind = RuleKind::base;
    RuleClass cls = RuleClass::other;

    bool operator==(const Rule&) const = default;
};

enum class Stage { R, Rprime, Rsecond };

std::string stage_name(Stage s);

// A rewriting system over the region generators, together with the data the
// termination order needs: the role of every region and the set of sink
// regions adjacent to the unbounded one (the "positive sinks" t+).
struct RewritingSystem {
    Stage stage = Stage::R;
    int num_generators = 0;
    bool keep_killed = false; // keep cancellation rules for the killed region
    int killed = 0;
    RoleAssignment roles;
    std::vector<bool> t_plus;

    std::vector<Rule> rules;

    // set by a successful confluence audit; required by word_equal
    bool complete_verified = false;

    std::vector<const Rule*> rules_of_kind(RuleKind k) const;
    const Rule* find_lhs(const Word& lhs) const;
    bool letter_allowed(Letter a) const;
};

// Deterministic order: group rules by kind (free cancellations last),
// then by lexicographic lhs, then rhs.
void canonical_sort(std::vector<Rule>& rules);

// Shape classification from roles; used both when rules are created and by
// the classify audit.
RuleClass rule_class(const Word& lhs, const Word& rhs, const RoleAssignment& roles,
                     const std::vector<bool>& t_plus);

// Appends g g' -> 1 and g' g -> 1 for every generator of the system's
// alphabet (killed region included only for stage R or keep_killed).
void append_cancel_rules(RewritingSystem& s);

} // namespace dehnrw
