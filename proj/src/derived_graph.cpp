#include "dehnrw/derived_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "dehnrw/errors.hpp"

namespace dehnrw {

int DerivedGraph::edge_count() const {
    int n = 0;
    for (const auto& [e, m] : edges) n += m;
    return n;
}

namespace {

int letter_index(Letter a) { return 2 * a.gen + (a.exp > 0 ? 0 : 1); }

} // namespace

DerivedGraph build_delta(int num_generators, const std::vector<RelationPair>& pairs) {
    DerivedGraph g;
    g.num_generators = num_generators;
    for (const auto& p : pairs) {
        for (const Word* side : {&p.lhs, &p.rhs}) {
            if (side->size() != 2)
                throw HypothesisError("relation side is not of length 2");
            g.edges[{(*side)[0], (*side)[1]}]++;
        }
    }

    const int V = g.vertex_count();
    std::vector<int> indeg(V, 0), outdeg(V, 0), comp(V, -1);
    std::vector<std::vector<int>> nbrs(V);
    for (const auto& [e, m] : g.edges) {
        int a = letter_index(e.first), b = letter_index(e.second);
        outdeg[a] += m;
        indeg[b] += m;
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    for (int v = 0; v < V; ++v)
        if ((indeg[v] + outdeg[v]) % 2 != 0)
            throw HypothesisError("derived graph vertex with odd degree");

    int comps = 0;
    bool balanced = true;
    for (int v = 0; v < V; ++v) {
        if (indeg[v] != outdeg[v]) balanced = false;
        if (comp[v] != -1 || indeg[v] + outdeg[v] == 0) continue;
        std::queue<int> q;
        q.push(v);
        comp[v] = comps;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : nbrs[u])
                if (comp[w] == -1) {
                    comp[w] = comps;
                    q.push(w);
                }
        }
        ++comps;
    }
    g.weak_components = comps;
    g.eulerian = balanced && g.edge_count() % 2 == 0;
    return g;
}

RoleAssignment assign_roles(const DerivedGraph& g, int seed_generator) {
    if (seed_generator < 0 || seed_generator >= g.num_generators)
        throw HypothesisError("role seed out of range");
    // Letters and their inverses share a role, so propagate on generators.
    std::vector<int> color(g.num_generators, -1);
    color[seed_generator] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [e, m] : g.edges) {
            int a = e.first.gen, b = e.second.gen;
            if (color[a] == -1 && color[b] == -1) continue;
            if (color[a] == -1) {
                color[a] = 1 - color[b];
                changed = true;
            } else if (color[b] == -1) {
                color[b] = 1 - color[a];
                changed = true;
            } else if (color[a] == color[b]) {
                throw HypothesisError(
                    "role propagation conflict: generators " + std::to_string(a) +
                    " and " + std::to_string(b) + " share a relation side");
            }
        }
    }
    RoleAssignment roles;
    roles.of.resize(g.num_generators);
    for (int v = 0; v < g.num_generators; ++v) {
        if (color[v] == -1)
            throw HypothesisError("role propagation never reached generator x" +
                                  std::to_string(v));
        roles.of[v] = color[v] == 0 ? Role::source : Role::sink;
    }
    return roles;
}

std::vector<std::pair<Letter, Letter>> antipath(const DerivedGraph& g,
                                                const RoleAssignment& roles) {
    std::vector<std::pair<Letter, Letter>> out;
    for (const auto& [e, m] : g.edges)
        if (roles.is_source(e.first)) {
            for (int i = 0; i < m; ++i) out.push_back(e);
        }
    return out;
}

RewritingSystem build_R(const Presentation& p, const std::vector<RelationPair>& pairs,
                        const RoleAssignment& roles, const std::vector<bool>& t_plus) {
    RewritingSystem s;
    s.stage = Stage::R;
    s.num_generators = p.num_generators;
    s.killed = p.killed;
    s.roles = roles;
    s.t_plus = t_plus;
    for (const auto& pr : pairs) {
        bool lhs_first = roles.is_source(pr.lhs[0]);
        bool rhs_first = roles.is_source(pr.rhs[0]);
        if (lhs_first == rhs_first)
            throw HypothesisError(
                "relation sides do not fit the source/sink orientation pattern");
        Rule r;
        r.lhs = lhs_first ? pr.lhs : pr.rhs;
        r.rhs = lhs_first ? pr.rhs : pr.lhs;
        if (!roles.is_sink(r.lhs[1]) || !roles.is_sink(r.rhs[0]) ||
            !roles.is_source(r.rhs[1]))
            throw HypothesisError(
                "relation sides do not fit the source/sink orientation pattern");
        r.kind = RuleKind::base;
        r.cls = rule_class(r.lhs, r.rhs, roles, t_plus);
        s.rules.push_back(std::move(r));
    }
    append_cancel_rules(s);
    canonical_sort(s.rules);
    return s;
}

std::string to_dot(const DerivedGraph& g, const RoleAssignment& roles) {
    auto node_id = [&](Letter a) {
        std::string s = (roles.is_source(a) ? "s" : "t") + std::to_string(a.gen);
        if (a.exp < 0) s += "i";
        return s;
    };
    std::ostringstream out;
    out << "digraph derived {\n  rankdir=LR;\n";
    std::vector<Letter> letters;
    for (int gen = 0; gen < g.num_generators; ++gen)
        for (int e : {1, -1}) letters.push_back({gen, e});
    for (Letter a : letters) {
        out << "  " << node_id(a) << " [label=\"" << render(a, roles) << "\", shape="
            << (roles.is_source(a) ? "box" : "ellipse") << "];\n";
    }
    for (const auto& [e, m] : g.edges) {
        bool in_antipath = roles.is_source(e.first);
        for (int i = 0; i < m; ++i) {
            out << "  " << node_id(e.first) << " -> " << node_id(e.second);
            if (in_antipath) out << " [color=red, penwidth=2]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace dehnrw
