// Acceptance suite: ten checks pinning the generated systems to the
// published worked examples and to the guarantees the engine advertises.
// Each check prints exactly one PASS/FAIL line; the exit code is the
// number of failures. All comparisons are exact; the only tolerances are
// the pinned sample counts and the 60 second budget of check 6.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dehnrw/pipeline.hpp"
#include "support/braid.hpp"
#include "support/oracles.hpp"
#include "support/published_data.hpp"
#include "support/relabel.hpp"

using namespace dehnrw;
using testsupport::apply_perm;
using testsupport::RulePairs;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

template <typename Fn>
void check(int n, const std::string& what, Fn fn) {
    try {
        std::string detail;
        bool ok = fn(detail);
        report(n, what, ok, detail);
    } catch (const std::exception& e) {
        report(n, what, false, e.what());
    }
}

std::vector<int> source_list(const RoleAssignment& roles) {
    std::vector<int> out;
    for (int g = 0; g < roles.size(); ++g)
        if (roles.is_source(g)) out.push_back(g);
    return out;
}

RulePairs group_pairs(const RewritingSystem& s) {
    RulePairs out;
    for (const auto& r : s.rules)
        if (r.kind != RuleKind::free_cancel) out.emplace_back(r.lhs, r.rhs);
    return out;
}

bool rules_match(const RulePairs& ours, RulePairs theirs,
                 const std::vector<int>& pi) {
    std::sort(theirs.begin(), theirs.end());
    return apply_perm(ours, pi) == theirs;
}

bool relators_match(const std::vector<Word>& ours,
                    const std::vector<Word>& theirs,
                    const std::vector<int>& pi) {
    std::vector<Word> a, b;
    for (const auto& w : ours)
        a.push_back(testsupport::relator_canon(apply_perm(w, pi)));
    for (const auto& w : theirs) b.push_back(testsupport::relator_canon(w));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// The full complement of free-reduction rules over the system's alphabet.
bool cancels_complete(const RewritingSystem& s, int num_gens, bool with_killed) {
    std::set<std::pair<Word, Word>> have, want;
    for (const auto& r : s.rules)
        if (r.kind == RuleKind::free_cancel) have.insert({r.lhs, r.rhs});
    for (int g = 0; g < num_gens; ++g) {
        if (g == s.killed && !with_killed) continue;
        want.insert({Word{{g, 1}, {g, -1}}, Word{}});
        want.insert({Word{{g, -1}, {g, 1}}, Word{}});
    }
    return have == want;
}

std::vector<int> invert_perm(const std::vector<int>& pi) {
    std::vector<int> inv(pi.size());
    for (size_t i = 0; i < pi.size(); ++i) inv[pi[i]] = static_cast<int>(i);
    return inv;
}

std::vector<Word> presentation_relators(const KnotSystems& ks) {
    std::vector<Word> out;
    for (const auto& r : ks.presentation.relators) out.push_back(r.word);
    return out;
}

int count_kind(const RewritingSystem& s, RuleKind k) {
    int n = 0;
    for (const auto& r : s.rules) n += r.kind == k;
    return n;
}

std::string tuple_str(const OrderVector& v) {
    std::ostringstream out;
    out << "(" << v.v1 << "," << v.v2 << "," << static_cast<long long>(v.v3)
        << "," << v.v4 << ")";
    return out.str();
}

} // namespace

int main() {
    KnotSystems fig8 = build_systems(parse_pd(builtin_pd("figure8")));
    BuildOptions keep;
    keep.keep_killed = true;
    KnotSystems fig8k = build_systems(parse_pd(builtin_pd("figure8")), keep);
    KnotSystems tref = build_systems(parse_pd(builtin_pd("trefoil")));
    KnotSystems trefk = build_systems(parse_pd(builtin_pd("trefoil")), keep);

    const std::vector<int> our_sources = source_list(fig8.roles);
    const std::vector<Word> our_relators = presentation_relators(fig8);
    const std::vector<Word> published_relators =
        testsupport::parse_words(testsupport::fig8_published_relators);

    auto search = [&](auto&& extra) {
        return testsupport::find_relabeling(
            fig8.presentation.num_generators, our_sources,
            testsupport::fig8_published_sources, [&](const std::vector<int>& pi) {
                return relators_match(our_relators, published_relators, pi) &&
                       extra(pi);
            });
    };

    // 1. The four crossing relators of the figure-eight region presentation
    // equal the published ones up to relabeling, rotation and inversion.
    check(1, "figure-eight presentation relators match the published four",
          [&](std::string& detail) {
              auto pi = search([](const std::vector<int>&) { return true; });
              if (!pi) detail = "no relabeling matches the relator set";
              return pi.has_value();
          });

    // 2. The complete system for the augmented presentation: all 16 oriented
    // rules plus the full set of free-reduction rules.
    check(2, "figure-eight full-alphabet system matches the published table",
          [&](std::string& detail) {
              RulePairs published =
                  testsupport::parse_rules(testsupport::fig8_published_R);
              auto pi = search([&](const std::vector<int>& pi) {
                  return rules_match(group_pairs(fig8.R), published, pi);
              });
              if (!pi) {
                  detail = "no relator-compatible relabeling matches the rules";
                  return false;
              }
              if (!cancels_complete(fig8.R, 6, true)) {
                  detail = "free-reduction rules incomplete";
                  return false;
              }
              return true;
          });

    // 3. The oriented but incomplete stage: 13 published rules, a failing
    // audit, and the published witness with its two distinct irreducibles.
    check(3, "figure-eight pre-repair system and confluence counterexample",
          [&](std::string& detail) {
              RulePairs published =
                  testsupport::parse_rules(testsupport::fig8_published_Rprime);
              auto pi = search([&](const std::vector<int>& pi) {
                  return rules_match(group_pairs(fig8k.Rprime), published, pi);
              });
              if (!pi) {
                  detail = "no relator-compatible relabeling matches the rules";
                  return false;
              }
              if (!cancels_complete(fig8k.Rprime, 6, true)) {
                  detail = "free-reduction rules incomplete";
                  return false;
              }
              AuditReport rep = audit_confluence(fig8k.Rprime);
              if (rep.all_resolved || rep.unresolved < 1) {
                  detail = "audit unexpectedly reports local confluence";
                  return false;
              }
              std::vector<int> sigma = invert_perm(*pi);
              Word witness = apply_perm(
                  parse_word(testsupport::fig8_published_witness), sigma);
              std::set<Word> expect_nfs;
              for (const auto& nf : testsupport::fig8_published_witness_nfs)
                  expect_nfs.insert(apply_perm(parse_word(nf), sigma));
              for (const auto& e : rep.entries) {
                  if (e.amb.word != witness) continue;
                  if (e.resolved || e.nf1 == e.nf2) continue;
                  if (std::set<Word>{e.nf1, e.nf2} == expect_nfs) return true;
              }
              detail = "published witness word not reproduced";
              return false;
          });

    // 4. The repaired complete system: 16 published group rules including
    // both replacement rules, a clean audit, and verified reducedness.
    check(4, "figure-eight repaired system matches and is complete",
          [&](std::string& detail) {
              RulePairs published =
                  testsupport::parse_rules(testsupport::fig8_published_Rsecond);
              auto pi = search([&](const std::vector<int>& pi) {
                  return rules_match(group_pairs(fig8k.Rsecond), published, pi);
              });
              if (!pi) {
                  detail = "no relator-compatible relabeling matches the rules";
                  return false;
              }
              RulePairs replacements;
              for (const auto& r : fig8k.Rsecond.rules)
                  if (r.kind == RuleKind::k5) replacements.emplace_back(r.lhs, r.rhs);
              if (replacements.size() != 2 ||
                  !rules_match(replacements,
                               testsupport::parse_rules(
                                   testsupport::fig8_published_kind5),
                               *pi)) {
                  detail = "replacement rules differ from the published pair";
                  return false;
              }
              AuditReport rep = audit_confluence(fig8k.Rsecond);
              if (!rep.all_resolved || rep.unresolved != 0) {
                  detail = "audit found unresolved critical pairs";
                  return false;
              }
              std::string why;
              if (!testsupport::is_reduced(fig8k.Rsecond, &why)) {
                  detail = "system not reduced: " + why;
                  return false;
              }
              return true;
          });

    // 5. The trefoil's repaired system: four three-rule families, nothing
    // from the relator kinds that only larger knots produce, clean audit.
    check(5, "trefoil repaired system matches the published families",
          [&](std::string& detail) {
              RulePairs published =
                  testsupport::parse_rules(testsupport::trefoil_published_Rsecond);
              auto pi = testsupport::match_rule_sets(
                  tref.presentation.num_generators, source_list(tref.roles),
                  group_pairs(trefk.Rsecond),
                  testsupport::trefoil_published_sources, published);
              if (!pi) {
                  detail = "no relabeling matches the rules";
                  return false;
              }
              for (RuleKind k :
                   {RuleKind::alpha, RuleKind::alphap, RuleKind::beta,
                    RuleKind::betap, RuleKind::gamma, RuleKind::delta,
                    RuleKind::k5, RuleKind::k2})
                  if (count_kind(trefk.Rsecond, k) != 0) {
                      detail = "unexpected rule kind " + kind_name(k);
                      return false;
                  }
              for (RuleKind k :
                   {RuleKind::k1, RuleKind::k2p, RuleKind::k3, RuleKind::k4})
                  if (count_kind(trefk.Rsecond, k) != 3) {
                      detail = "family of kind " + kind_name(k) +
                               " does not have three rules";
                      return false;
                  }
              if (!cancels_complete(trefk.Rsecond, 5, true)) {
                  detail = "free-reduction rules incomplete";
                  return false;
              }
              AuditReport rep = audit_confluence(trefk.Rsecond);
              if (!rep.all_resolved) {
                  detail = "audit found unresolved critical pairs";
                  return false;
              }
              return true;
          });

    // 6. Termination: every step of every reduction strictly shrinks the
    // order vector, and each rule class shrinks it in exactly the promised
    // component. 10^4 words per knot, length <= 20, under 60 seconds.
    check(6, "order vector strictly decreases with the promised class deltas",
          [&](std::string& detail) {
              auto start = std::chrono::steady_clock::now();
              long long steps = 0;
              for (const KnotSystems* ks : {&fig8, &tref}) {
                  const RewritingSystem& s = ks->Rsecond;
                  std::mt19937_64 rng(6);
                  for (int i = 0; i < 10000; ++i) {
                      Word cur = testsupport::random_word(rng, s, 20);
                      OrderVector before = order_vector(cur, s.roles, s.t_plus);
                      while (auto st = rewrite_step(cur, s)) {
                          OrderVector after =
                              order_vector(st->result, s.roles, s.t_plus);
                          if (!(after < before)) {
                              detail = "order vector did not drop at " +
                                       render(cur, s.roles);
                              return false;
                          }
                          check_monitored_step(cur, st->result,
                                               s.rules[st->rule], st->pos, s);
                          cur = st->result;
                          before = after;
                          ++steps;
                      }
                  }
              }
              double elapsed = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
              if (elapsed >= 60.0) {
                  detail = "took " + std::to_string(elapsed) + "s";
                  return false;
              }
              return steps > 0;
          });

    // 7. Confluence in practice: five reduction strategies agree on the
    // normal form of 10^3 random words per knot.
    check(7, "five rewriting strategies agree on every normal form",
          [&](std::string& detail) {
              for (const KnotSystems* ks : {&fig8, &tref}) {
                  const RewritingSystem& s = ks->Rsecond;
                  std::mt19937_64 rng(7);
                  std::vector<NormalizeOptions> opts(5);
                  opts[1].strategy = Strategy::rightmost;
                  for (int k = 2; k < 5; ++k) {
                      opts[k].strategy = Strategy::random;
                      opts[k].seed = static_cast<std::uint64_t>(k - 1);
                  }
                  for (int i = 0; i < 1000; ++i) {
                      Word w = testsupport::random_word(rng, s, 20);
                      Word ref = normal_form(w, s, opts[0]).nf;
                      for (int k = 1; k < 5; ++k)
                          if (normal_form(w, s, opts[k]).nf != ref) {
                              detail = "strategies disagree on " +
                                       render(w, s.roles);
                              return false;
                          }
                  }
              }
              return true;
          });

    // 8. Soundness: the images of the defining relators, all their cyclic
    // rotations and inverses, and random products of their conjugates all
    // normalize to the empty word.
    check(8, "relator images and conjugate products normalize to 1",
          [&](std::string& detail) {
              for (const KnotSystems* ks : {&fig8, &tref}) {
                  const RewritingSystem& s = ks->Rsecond;
                  std::vector<Word> images;
                  for (const auto& r : ks->presentation.relators)
                      images.push_back(phi(r.word, ks->presentation.killed));
                  for (const Word& img : images) {
                      for (size_t k = 0; k < img.size(); ++k) {
                          Word rot = img;
                          std::rotate(rot.begin(), rot.begin() + k, rot.end());
                          for (const Word& w : {rot, inverse(rot)})
                              if (!normal_form(w, s).nf.empty()) {
                                  detail = render(w, s.roles) +
                                           " did not normalize to 1";
                                  return false;
                              }
                      }
                  }
                  std::mt19937_64 rng(8);
                  for (int i = 0; i < 100; ++i) {
                      Word w = testsupport::random_conjugate_product(rng, images,
                                                                     s, 30);
                      if (!normal_form(w, s).nf.empty()) {
                          detail = render(w, s.roles) + " did not normalize to 1";
                          return false;
                      }
                  }
              }
              return true;
          });

    // 9. The order vector reproduces the published example tuples: both
    // sides of a resolution rule, the right side of a replacement rule, and
    // the comparison that orients the single-sink rules.
    check(9, "order vector reproduces the published tuples",
          [&](std::string& detail) {
              const RewritingSystem& s = fig8.Rsecond;
              auto v = [&](const std::string& text) {
                  return order_vector(parse_word(text, s.roles), s.roles,
                                      s.t_plus);
              };
              auto expect = [&](const std::string& text, long long v1,
                                long long v2, long long v3, long long v4) {
                  OrderVector got = v(text);
                  if (got.v1 == v1 && got.v2 == v2 &&
                      got.v3 == static_cast<unsigned __int128>(v3) &&
                      got.v4 == v4)
                      return true;
                  detail = "V(" + text + ") = " + tuple_str(got);
                  return false;
              };
              if (!expect("s2' t4'", 1, 0, 1, 2)) return false;
              if (!expect("t3' s5'", 1, 0, 0, 2)) return false;
              if (!expect("s2' t1'", 1, 0, 1, 2)) return false;
              if (!expect("t1' s5 s2'", 1, 0, 0, 3)) return false;
              if (!(v("t1' s2") < v("t3")) || !expect("t3", 1, 1, 0, 1)) {
                  if (detail.empty()) detail = "positive-sink comparison failed";
                  return false;
              }
              return true;
          });

    // 10. Three more alternating knots from closed braids: validation,
    // construction, a clean audit and 10^3 monitored normalizations each.
    check(10, "pipeline handles three further alternating knots cleanly",
          [&](std::string& detail) {
              struct Smoke {
                  int strands;
                  std::vector<int> braid;
                  std::string name;
              };
              const std::vector<Smoke> smokes{
                  {2, {1, 1, 1, 1, 1}, "closed 2-braid, 5 crossings"},
                  {3, {1, 1, 1, -2, 1, -2}, "closed 3-braid, 6 crossings"},
                  {3, {1, -2, 1, -2, 1, -2, 1, -2}, "closed 3-braid, 8 crossings"},
              };
              for (const auto& smoke : smokes) {
                  Diagram d =
                      testsupport::braid_closure_pd(smoke.strands, smoke.braid);
                  ValidationReport rep = validate(d);
                  if (!rep.ok) {
                      detail = smoke.name + " failed validation";
                      return false;
                  }
                  KnotSystems ks = build_systems(d);
                  AuditReport audit = audit_confluence(ks.Rsecond);
                  if (!audit.all_resolved) {
                      detail = smoke.name + " audit left " +
                               std::to_string(audit.unresolved) +
                               " pairs unresolved";
                      return false;
                  }
                  std::mt19937_64 rng(10);
                  for (int i = 0; i < 1000; ++i) {
                      Word w = testsupport::random_word(rng, ks.Rsecond, 20);
                      NormalizeResult res = normal_form(w, ks.Rsecond);
                      if (!res.monitored) {
                          detail = smoke.name + " ran unmonitored";
                          return false;
                      }
                  }
              }
              return true;
          });

    std::cout << (failures == 0 ? "acceptance: all 10 criteria passed"
                                : "acceptance: " + std::to_string(failures) +
                                      " criteria failed")
              << "\n";
    return failures;
}
