#pragma once

#include <array>
#include <vector>

#include "dehnrw/diagram.hpp"
#include "dehnrw/word.hpp"

namespace dehnrw {

// One crossing relation x_a x_b' x_c x_d' of the region presentation.
struct Relator {
    Word word;    // length 4, exponent pattern +,-,+,-
    int crossing; // which crossing produced it
};

// Region presentation of the knot group: one generator per region, one
// relator per crossing, with the unbounded region's generator killed
// (x_killed = 1). The group itself is generated by the remaining regions.
struct Presentation {
    int num_generators = 0; // regions, including the killed one
    int killed = 0;
    std::vector<Relator> relators;
};

Presentation dehn_presentation(const Diagram& d, const Faces& f);

// One defining relation of the crossing, written as an equality of
// two-letter words.
struct RelationPair {
    Word lhs, rhs;
    int crossing = -1;
};

// The four two-letter relations equivalent to r = x_i x_j' x_k x_l':
//   x_i x_j' = x_l x_k',  x_j' x_k = x_i' x_l,
//   x_k x_l' = x_j x_i',  x_l' x_i = x_k' x_j.
// The set is invariant under rotating r by two and under inverting r.
std::array<RelationPair, 4> symmetrize(const Relator& r);

// Deletes every occurrence of the killed generator and freely reduces.
Word phi(const Word& w, int killed);

// For a relator containing the killed generator, cyclically normalized to
// x_killed x_j' x_k x_l', the images of its symmetrized relations under phi
// collapse to three: x_l = x_j' x_k, x_j = x_k x_l', x_l' x_j' = x_k'.
struct PhiTriple {
    int j = 0, k = 0, l = 0;
    int crossing = -1;

    std::array<RelationPair, 3> relations() const;
};

// Throws HypothesisError if the relator does not mention the killed
// generator (exactly once is guaranteed for common diagrams).
PhiTriple phi_set(const Relator& r, int killed);

// All symmetrized relation pairs of the presentation, in relator order.
std::vector<RelationPair> all_pairs(const Presentation& p);

} // namespace dehnrw
