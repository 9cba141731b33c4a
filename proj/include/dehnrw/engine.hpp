#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehnrw/rewriting.hpp"
#include "dehnrw/word.hpp"

namespace dehnrw {

// w = S_1 t_1 S_2 t_2 ... S_k t_k S_{k+1}: maximal source-letter runs
// separated by single sink letters. source_blocks has one more entry than
// sinks; blocks may be empty.
struct Decomposition {
    std::vector<Word> source_blocks;
    std::vector<Letter> sinks;

    int k() const { return static_cast<int>(sinks.size()); }
};

Decomposition decompose(const Word& w, const RoleAssignment& roles);

// The termination order: compared lexicographically from v1.
//   v1 = number of sink letters
//   v2 = number of positive sinks adjacent to the unbounded region
//   v3 = sum over sink positions j of n_j * (2^(k-j+1) - 1), where n_j is
//        the length of the source block left of sink j
//   v4 = word length
struct OrderVector {
    long long v1 = 0, v2 = 0;
    unsigned __int128 v3 = 0;
    long long v4 = 0;

    bool operator==(const OrderVector&) const = default;
    bool operator<(const OrderVector& o) const;
    std::string str() const;
};

OrderVector order_vector(const Word& w, const RoleAssignment& roles,
                         const std::vector<bool>& t_plus);

struct RewriteStep {
    int rule = -1;  // index into system.rules
    size_t pos = 0; // redex start
    Word result;
};

enum class Strategy { leftmost, rightmost, random };

// Finds the leftmost redex; the longest left-hand side wins a position tie.
// Returns nothing when w is irreducible.
std::optional<RewriteStep> rewrite_step(const Word& w, const RewritingSystem& s);

struct NormalizeOptions {
    // The order monitor only has meaning for the completed system; it is
    // ignored (and the fuse relied on) for the other stages.
    bool monitor = true;
    long long fuse = 1'000'000;
    Strategy strategy = Strategy::leftmost;
    std::uint64_t seed = 0; // for Strategy::random
};

struct NormalizeResult {
    Word nf;
    long long steps = 0;
    bool monitored = false;
};

// Throws MonitorViolation if a monitored step does not shrink the order
// vector exactly as its rule class promises, FuseExceeded past the step
// fuse, and Error if the word uses letters outside the system's alphabet.
NormalizeResult normal_form(const Word& w, const RewritingSystem& s,
                            const NormalizeOptions& opts = {});

// Per-class order deltas checked by the monitor, exposed for tests:
// D and sink cancellations drop v1 by 2; C keeps v1 and drops v2 by 1;
// A keeps v1, v2 and drops v3 by exactly 1; B keeps v1, v2 and drops v3 by
// exactly 2^(k-p) (p = index of the redex's sink); source cancellations
// keep v1, v2 and drop v4 by 2, with v3 dropping by 2 * (2^(k-p+1) - 1)
// when sinks follow the redex and staying put otherwise.
void check_monitored_step(const Word& before, const Word& after, const Rule& rule,
                          size_t pos, const RewritingSystem& s);

// Decides u = v in the presented group. Requires a system whose confluence
// audit has passed (complete_verified), else throws Error.
bool word_equal(const Word& u, const Word& v, const RewritingSystem& s,
                const NormalizeOptions& opts = {});

struct Ambiguity {
    int rule1 = -1, rule2 = -1;
    bool is_overlap = true; // false: lhs of rule1 sits inside lhs of rule2
    Word u, v, w;           // overlap: lhs1 = uv, lhs2 = vw; inclusion: lhs2 = u lhs1 w
    Word word;              // the ambiguous word itself
};

// Every overlap (nonempty u, v, w) and inclusion (v = lhs1 a proper factor
// of lhs2) between ordered rule pairs, self-pairs included.
std::vector<Ambiguity> enumerate_ambiguities(const RewritingSystem& s);

struct AuditEntry {
    Ambiguity amb;
    Word branch1, branch2; // the two one-step descendants
    Word nf1, nf2;
    bool resolved = false;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    bool all_resolved = true;
    int total = 0, resolved = 0, unresolved = 0;
    std::map<std::pair<RuleKind, RuleKind>, int> by_kind;
};

// Normalizes both branches of every ambiguity and compares. Local
// confluence plus the termination order gives completeness for the
// finished system.
AuditReport audit_confluence(const RewritingSystem& s);

// Records a passed audit on the system (enables word_equal).
void mark_complete(RewritingSystem& s, const AuditReport& report);

} // namespace dehnrw
