#include "dehnrw/engine.hpp"

#include <algorithm>
#include <random>

#include "dehnrw/errors.hpp"

namespace dehnrw {

Decomposition decompose(const Word& w, const RoleAssignment& roles) {
    Decomposition d;
    d.source_blocks.emplace_back();
    for (Letter a : w) {
        if (a.gen < 0 || a.gen >= roles.size())
            throw Error("letter x" + std::to_string(a.gen) + " has no role");
        if (roles.is_sink(a)) {
            d.sinks.push_back(a);
            d.source_blocks.emplace_back();
        } else {
            d.source_blocks.back().push_back(a);
        }
    }
    return d;
}

bool OrderVector::operator<(const OrderVector& o) const {
    if (v1 != o.v1) return v1 < o.v1;
    if (v2 != o.v2) return v2 < o.v2;
    if (v3 != o.v3) return v3 < o.v3;
    return v4 < o.v4;
}

namespace {

std::string u128_str(unsigned __int128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
        s += static_cast<char>('0' + static_cast<int>(x % 10));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

// 2^e - 1 with overflow guard.
unsigned __int128 pow2_minus1(int e) {
    if (e < 0) throw Error("negative exponent in order computation");
    if (e >= 127) throw Error("order component v3 overflows 128 bits");
    return (static_cast<unsigned __int128>(1) << e) - 1;
}

unsigned __int128 checked_add(unsigned __int128 a, unsigned __int128 b) {
    unsigned __int128 c = a + b;
    if (c < a) throw Error("order component v3 overflows 128 bits");
    return c;
}

} // namespace

std::string OrderVector::str() const {
    return "(" + std::to_string(v1) + "," + std::to_string(v2) + "," + u128_str(v3) +
           "," + std::to_string(v4) + ")";
}

OrderVector order_vector(const Word& w, const RoleAssignment& roles,
                         const std::vector<bool>& t_plus) {
    Decomposition d = decompose(w, roles);
    OrderVector v;
    const int k = d.k();
    v.v1 = k;
    for (Letter t : d.sinks)
        if (t.exp > 0 && static_cast<size_t>(t.gen) < t_plus.size() && t_plus[t.gen])
            v.v2++;
    for (int j = 1; j <= k; ++j) {
        auto n_j = static_cast<unsigned __int128>(d.source_blocks[j - 1].size());
        if (n_j == 0) continue;
        unsigned __int128 weight = pow2_minus1(k - j + 1);
        if (weight != 0 && n_j > ~static_cast<unsigned __int128>(0) / weight)
            throw Error("order component v3 overflows 128 bits");
        v.v3 = checked_add(v.v3, n_j * weight);
    }
    v.v4 = static_cast<long long>(w.size());
    return v;
}

namespace {

bool match_at(const Word& w, size_t pos, const Word& lhs) {
    if (pos + lhs.size() > w.size()) return false;
    for (size_t i = 0; i < lhs.size(); ++i)
        if (!(w[pos + i] == lhs[i])) return false;
    return true;
}

Word apply_at(const Word& w, size_t pos, const Word& lhs, const Word& rhs) {
    Word out;
    out.reserve(w.size() - lhs.size() + rhs.size());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(pos));
    out.insert(out.end(), rhs.begin(), rhs.end());
    out.insert(out.end(), w.begin() + static_cast<long>(pos + lhs.size()), w.end());
    return out;
}

std::optional<RewriteStep> best_at(const Word& w, size_t pos, const RewritingSystem& s) {
    int best = -1;
    size_t best_len = 0;
    for (size_t r = 0; r < s.rules.size(); ++r) {
        const Word& lhs = s.rules[r].lhs;
        if (lhs.size() > best_len && match_at(w, pos, lhs)) {
            best = static_cast<int>(r);
            best_len = lhs.size();
        }
    }
    if (best < 0) return std::nullopt;
    return RewriteStep{best, pos, apply_at(w, pos, s.rules[best].lhs, s.rules[best].rhs)};
}

} // namespace

std::optional<RewriteStep> rewrite_step(const Word& w, const RewritingSystem& s) {
    for (size_t pos = 0; pos < w.size(); ++pos)
        if (auto step = best_at(w, pos, s)) return step;
    return std::nullopt;
}

namespace {

std::optional<RewriteStep> pick_step(const Word& w, const RewritingSystem& s,
                                     Strategy strat, std::mt19937_64& rng) {
    switch (strat) {
        case Strategy::leftmost:
            return rewrite_step(w, s);
        case Strategy::rightmost: {
            for (size_t i = w.size(); i-- > 0;)
                if (auto step = best_at(w, i, s)) return step;
            return std::nullopt;
        }
        case Strategy::random: {
            std::vector<RewriteStep> all;
            for (size_t pos = 0; pos < w.size(); ++pos)
                for (size_t r = 0; r < s.rules.size(); ++r)
                    if (match_at(w, pos, s.rules[r].lhs))
                        all.push_back({static_cast<int>(r), pos,
                                       apply_at(w, pos, s.rules[r].lhs, s.rules[r].rhs)});
            if (all.empty()) return std::nullopt;
            return all[rng() % all.size()];
        }
    }
    return std::nullopt;
}

int count_sinks_before(const Word& w, size_t end, const RoleAssignment& roles) {
    int c = 0;
    for (size_t i = 0; i < end && i < w.size(); ++i)
        if (roles.is_sink(w[i])) ++c;
    return c;
}

} // namespace

void check_monitored_step(const Word& before, const Word& after, const Rule& rule,
                          size_t pos, const RewritingSystem& s) {
    OrderVector va = order_vector(before, s.roles, s.t_plus);
    OrderVector vb = order_vector(after, s.roles, s.t_plus);
    auto fail = [&](const std::string& what) {
        throw MonitorViolation("rule " + render(rule.lhs, s.roles) + " -> " +
                               render(rule.rhs, s.roles) + " (" +
                               class_name(rule.cls) + ") at position " +
                               std::to_string(pos) + " of " + render(before, s.roles) +
                               ": " + what + "; " + va.str() + " -> " + vb.str());
    };
    if (!(vb < va)) fail("order vector did not decrease");

    const long long k = va.v1;
    switch (rule.cls) {
        case RuleClass::cancel: {
            if (s.roles.is_sink(rule.lhs[0])) {
                if (vb.v1 != va.v1 - 2) fail("sink cancellation must drop v1 by 2");
            } else {
                if (vb.v1 != va.v1 || vb.v2 != va.v2)
                    fail("source cancellation must keep v1 and v2");
                if (vb.v4 != va.v4 - 2) fail("source cancellation must drop v4 by 2");
                long long p = count_sinks_before(before, pos, s.roles) + 1;
                if (p > k) {
                    if (vb.v3 != va.v3) fail("cancellation right of the last sink must keep v3");
                } else {
                    unsigned __int128 drop = 2 * pow2_minus1(static_cast<int>(k - p + 1));
                    if (va.v3 < drop || vb.v3 != va.v3 - drop)
                        fail("source cancellation v3 delta is not 2*(2^(k-p+1)-1)");
                }
            }
            break;
        }
        case RuleClass::A:
            if (vb.v1 != va.v1 || vb.v2 != va.v2) fail("class A must keep v1 and v2");
            if (va.v3 < 1 || vb.v3 != va.v3 - 1) fail("class A v3 delta is not 1");
            break;
        case RuleClass::B: {
            if (vb.v1 != va.v1 || vb.v2 != va.v2) fail("class B must keep v1 and v2");
            long long p = count_sinks_before(before, pos, s.roles) + 1;
            unsigned __int128 drop = pow2_minus1(static_cast<int>(k - p + 1)) -
                                     pow2_minus1(static_cast<int>(k - p));
            if (va.v3 < drop || vb.v3 != va.v3 - drop) fail("class B v3 delta is not 2^(k-p)");
            break;
        }
        case RuleClass::C:
            if (vb.v1 != va.v1) fail("class C must keep v1");
            if (vb.v2 != va.v2 - 1) fail("class C must drop v2 by 1");
            break;
        case RuleClass::D:
            if (vb.v1 != va.v1 - 2) fail("class D must drop v1 by 2");
            break;
        case RuleClass::other:
            fail("rule outside the class table cannot be monitored");
    }
}

NormalizeResult normal_form(const Word& w, const RewritingSystem& s,
                            const NormalizeOptions& opts) {
    for (Letter a : w)
        if (!s.letter_allowed(a))
            throw Error("letter " + render(a) + " is outside the system's alphabet" +
                        (a.gen == s.killed
                             ? " (the killed unbounded-region generator)"
                             : ""));
    NormalizeResult res;
    res.monitored = opts.monitor && s.stage == Stage::Rsecond;
    std::mt19937_64 rng(opts.seed);
    Word cur = w;
    while (true) {
        auto step = pick_step(cur, s, opts.strategy, rng);
        if (!step) break;
        if (res.steps >= opts.fuse)
            throw FuseExceeded("no normal form after " + std::to_string(opts.fuse) +
                               " steps");
        if (res.monitored)
            check_monitored_step(cur, step->result, s.rules[step->rule], step->pos, s);
        cur = std::move(step->result);
        ++res.steps;
    }
    res.nf = std::move(cur);
    return res;
}

bool word_equal(const Word& u, const Word& v, const RewritingSystem& s,
                const NormalizeOptions& opts) {
    if (!s.complete_verified)
        throw Error("word_equal needs a system whose confluence audit has passed");
    return normal_form(u, s, opts).nf == normal_form(v, s, opts).nf;
}

std::vector<Ambiguity> enumerate_ambiguities(const RewritingSystem& s) {
    std::vector<Ambiguity> out;
    const auto& rules = s.rules;
    for (size_t i = 0; i < rules.size(); ++i)
        for (size_t j = 0; j < rules.size(); ++j) {
            const Word& l1 = rules[i].lhs;
            const Word& l2 = rules[j].lhs;
            // Overlaps: a proper nonempty suffix of l1 equals a proper
            // nonempty prefix of l2.
            for (size_t ov = 1; ov < l1.size() && ov < l2.size(); ++ov) {
                bool match = true;
                for (size_t t = 0; t < ov && match; ++t)
                    match = l1[l1.size() - ov + t] == l2[t];
                if (!match) continue;
                Ambiguity a;
                a.rule1 = static_cast<int>(i);
                a.rule2 = static_cast<int>(j);
                a.is_overlap = true;
                a.u = Word(l1.begin(), l1.end() - static_cast<long>(ov));
                a.v = Word(l1.end() - static_cast<long>(ov), l1.end());
                a.w = Word(l2.begin() + static_cast<long>(ov), l2.end());
                a.word = concat(a.u, concat(a.v, a.w));
                out.push_back(std::move(a));
            }
            // Inclusions: l1 a proper factor of l2.
            if (i != j && l1.size() < l2.size()) {
                for (size_t q = 0; q + l1.size() <= l2.size(); ++q) {
                    if (!match_at(l2, q, l1)) continue;
                    Ambiguity a;
                    a.rule1 = static_cast<int>(i);
                    a.rule2 = static_cast<int>(j);
                    a.is_overlap = false;
                    a.u = Word(l2.begin(), l2.begin() + static_cast<long>(q));
                    a.v = l1;
                    a.w = Word(l2.begin() + static_cast<long>(q + l1.size()), l2.end());
                    a.word = l2;
                    out.push_back(std::move(a));
                }
            }
        }
    return out;
}

AuditReport audit_confluence(const RewritingSystem& s) {
    AuditReport rep;
    NormalizeOptions opts; // monitored automatically on the finished system
    for (Ambiguity& amb : enumerate_ambiguities(s)) {
        AuditEntry e;
        const Rule& r1 = s.rules[amb.rule1];
        const Rule& r2 = s.rules[amb.rule2];
        if (amb.is_overlap) {
            e.branch1 = concat(r1.rhs, amb.w);
            e.branch2 = concat(amb.u, r2.rhs);
        } else {
            e.branch1 = concat(amb.u, concat(r1.rhs, amb.w));
            e.branch2 = r2.rhs;
        }
        e.nf1 = normal_form(e.branch1, s, opts).nf;
        e.nf2 = normal_form(e.branch2, s, opts).nf;
        e.resolved = e.nf1 == e.nf2;
        rep.by_kind[{r1.kind, r2.kind}]++;
        rep.total++;
        if (e.resolved)
            rep.resolved++;
        else
            rep.unresolved++;
        rep.all_resolved = rep.all_resolved && e.resolved;
        e.amb = std::move(amb);
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

void mark_complete(RewritingSystem& s, const AuditReport& report) {
    s.complete_verified = report.all_resolved;
}

} // namespace dehnrw
