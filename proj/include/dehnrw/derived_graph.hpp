#pragma once

#include <map>
#include <string>
#include <vector>

#include "dehnrw/presentation.hpp"
#include "dehnrw/rewriting.hpp"
#include "dehnrw/word.hpp"

namespace dehnrw {

// Directed graph on the letters x_i, x_i': one edge a -> b for every
// two-letter relation side ab. For a common alternating diagram it splits
// into two closed Eulerian trails of even length.
struct DerivedGraph {
    int num_generators = 0;
    std::map<std::pair<Letter, Letter>, int> edges; // side -> multiplicity

    int edge_count() const; // with multiplicity
    int vertex_count() const { return 2 * num_generators; }

    // diagnostics filled by build_delta
    int weak_components = 0;
    bool eulerian = false; // in-degree == out-degree everywhere, even sizes
};

// Throws HypothesisError if some vertex ends up with odd total degree.
DerivedGraph build_delta(int num_generators, const std::vector<RelationPair>& pairs);

// Two-colors the letters: the seed and its inverse are sources, every
// letter sharing a relation-side edge with a source is a sink, and so on.
// Equivalently this is the checkerboard coloring of the regions with the
// seed's region colored source. Throws HypothesisError on a propagation
// conflict or if some generator stays unreached.
RoleAssignment assign_roles(const DerivedGraph& g, int seed_generator);

// The antipath: the relation sides whose first letter is a source. Exactly
// one side per relation, no two edges compose, and it contains every edge
// out of the seed class.
std::vector<std::pair<Letter, Letter>> antipath(const DerivedGraph& g,
                                                const RoleAssignment& roles);

// Orients every symmetrized relation into a rewrite rule: the side starting
// with a source letter becomes the left-hand side. Adds free cancellation
// rules for the whole alphabet. The result is the complete system for the
// group presented with the unbounded region's generator still alive.
RewritingSystem build_R(const Presentation& p, const std::vector<RelationPair>& pairs,
                        const RoleAssignment& roles, const std::vector<bool>& t_plus);

// Graphviz rendering of the derived graph with antipath edges highlighted.
std::string to_dot(const DerivedGraph& g, const RoleAssignment& roles);

} // namespace dehnrw
