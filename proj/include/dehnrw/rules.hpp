#pragma once

#include <vector>

#include "dehnrw/presentation.hpp"
#include "dehnrw/rewriting.hpp"

namespace dehnrw {

// Builds the rewriting system for the group with the unbounded region's
// generator killed. Rules of the full system that avoid the killed
// generator are kept and classified:
//   positive lhs s t' -> beta if the lhs sink heads a kind-(1) rule, else alpha;
//   negative lhs s' t -> gamma if the lhs sink heads a kind-(1) rule, else delta.
// Every relator through the killed region contributes its three collapsed
// rules (1) t_l -> t_j' s_k, (2) s_k t_l' -> t_j, (3) t_l' t_j' -> s_k'.
// Cancellation rules cover the surviving alphabet (keep_killed adds the
// killed generator's pair back, for comparisons against listings that
// carry them).
RewritingSystem build_R_prime(const RewritingSystem& R,
                              const std::vector<PhiTriple>& phis, bool keep_killed);

// For every pair of kind-(3) rules chained as t_l' t_j' -> s_k' and
// t_j' t_l2' -> s_k2', adds the resolving rule (4): s_k' t_l2' -> t_l' s_k2'.
// The left-hand side is the order-larger side; a tie aborts.
RewritingSystem add_kind4(const RewritingSystem& s);

// Fixpoint pass that makes the system compatible with the termination
// order: for every positive rule s_a t_b' -> t_c s_d' whose lhs sink heads
// a kind-(1) rule t_b -> t_j' s_k, adds (5): s_d' t_j' -> t_c' s_a s_k' and
// removes the partner rule s_d' t_b -> t_c' s_a; and every right-hand side
// headed by a positive sink t_c with a kind-(1) rule is rewritten through
// it (kinds 2, alpha, beta become 2', alpha', beta'). passes_out reports
// how many sweeps reached the fixpoint.
RewritingSystem add_kind5_and_rewire(const RewritingSystem& s, int* passes_out = nullptr);

// Interreduction: normalizes every right-hand side with the whole system
// and drops any group rule whose left-hand side contains another rule's
// left-hand side as a factor. Cancellation rules are never dropped (the
// kind-(1) lhs sits inside t t' by design). The result is marked finished.
RewritingSystem reduce_system(const RewritingSystem& s);

struct ClassTally {
    int A = 0, B = 0, C = 0, D = 0, cancel = 0, other = 0;
};

// Recomputes every rule's shape class and checks kind/class consistency
// ({5, alpha', beta'} -> A, {2', 4, alpha, beta, gamma, delta} -> B,
// {1} -> C, {3} -> D). On a finished system a rule outside the table
// signals a construction bug and throws.
ClassTally classify(const RewritingSystem& s);

} // namespace dehnrw
