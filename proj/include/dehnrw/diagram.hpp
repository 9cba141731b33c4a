#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dehnrw {

// One crossing of a knot diagram. Slots 0..3 list the incident edge labels
// counterclockwise. over_pair selects which opposite slot pair {0,2} or
// {1,3} carries the over-strand. PD input always yields over_pair = 1
// (slot 0 is the incoming under-strand).
struct Crossing {
    std::array<int, 4> edges{};
    int over_pair = 1;

    bool is_over_slot(int slot) const { return (slot & 1) == over_pair; }
};

struct Diagram {
    std::vector<Crossing> crossings;
    // Region choice for the unbounded face, by discovery id (see faces()).
    std::optional<int> unbounded;

    int num_crossings() const { return static_cast<int>(crossings.size()); }
    int num_edges() const { return 2 * num_crossings(); }
};

// A dart is one end of an edge: (crossing, slot).
struct Dart {
    int crossing = 0;
    int slot = 0;

    auto operator<=>(const Dart&) const = default;
};

// edge label -> its (exactly two) incidences, in crossing-scan order.
using EdgeIncidences = std::map<int, std::array<Dart, 2>>;

EdgeIncidences edge_incidences(const Diagram& d);

// Parses "X[1,4,2,5] X[3,6,4,1] ..." (commas or whitespace between
// quadruples, '#' starts a comment). Every edge label must appear exactly
// twice. Over/under follows the PD convention: slot 0 is the incoming
// under-strand.
Diagram parse_pd(const std::string& text);

// JSON form: {"crossings":[{"edges":[a,b,c,d],"over":0|1},...],
//             "unbounded": <region id, optional>}
Diagram parse_diagram_json(const std::string& text);

// Built-in diagrams ("trefoil", "figure8") as PD text.
std::string builtin_pd(const std::string& name);
std::vector<std::string> builtin_names();

// Corner k of a crossing is the sector between slots k and k+1 (mod 4).
// Faces are orbits of the corner walk: from corner (c,k), cross the edge at
// slot k+1 and continue at the corner whose first slot is that edge's other
// end. Region ids are assigned in discovery order (crossings scanned in
// order, slots 0..3), then relabeled so the unbounded region becomes 0 and
// the rest keep their relative order.
struct Faces {
    int num_regions = 0;
    // region id (after relabel) -> corners in walk order
    std::vector<std::vector<Dart>> corners;
    // crossing -> corner slot -> region id
    std::vector<std::array<int, 4>> region_at;
    // discovery id that was chosen as unbounded
    int unbounded_discovery_id = 0;

    int boundary_length(int region) const {
        return static_cast<int>(corners.at(region).size());
    }
};

// Throws HypothesisError if the face count is not |crossings| + 2 (the
// input is not a planar knot projection) and ParseError on bad labels.
// The unbounded choice defaults to a region of maximal boundary length
// (smallest discovery id on ties); diagram.unbounded overrides it.
Faces faces(const Diagram& d);

// Sides of each edge: the two regions an edge separates, and per-pair
// shared-edge counts. Used by validation and by the sink-adjacency set.
struct RegionAdjacency {
    // edge label -> {region on one side, region on the other}
    std::map<int, std::array<int, 2>> edge_sides;
    // unordered region pair -> number of shared edges
    std::map<std::pair<int, int>, int> shared_edges;

    bool adjacent(int r1, int r2) const {
        auto it = shared_edges.find(std::minmax(r1, r2));
        return it != shared_edges.end() && it->second > 0;
    }
};

RegionAdjacency region_adjacency(const Diagram& d, const Faces& f);

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok = true;

    const ValidationCheck* find(const std::string& name) const;
};

// Checks, in order: planar face count, no kinks (an edge returning to its
// own crossing), alternating over/under along every edge, single strand
// component, common position (any two regions share at most one edge and
// every crossing touches four distinct regions), and checkerboard
// two-colorability of the regions. Structural failures are reported, not
// thrown; dependent checks are marked failed with a note when a
// prerequisite fails.
ValidationReport validate(const Diagram& d);

// Region labels around each crossing, starting at the corner that follows
// the incoming under-strand slot counterclockwise: for over_pair = 1 this
// is corner 0, for over_pair = 0 corner 1. The four labels (a, b, c, d)
// read counterclockwise and yield the crossing relation x_a x_b' x_c x_d'.
std::vector<std::array<int, 4>> corner_incidence(const Diagram& d, const Faces& f);

// Strand components (closed curves) of the diagram.
int component_count(const Diagram& d);

} // namespace dehnrw
