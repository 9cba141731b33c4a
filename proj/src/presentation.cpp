#include "dehnrw/presentation.hpp"

#include <algorithm>

#include "dehnrw/errors.hpp"

namespace dehnrw {

Presentation dehn_presentation(const Diagram& d, const Faces& f) {
    auto corners = corner_incidence(d, f);
    Presentation p;
    p.num_generators = f.num_regions;
    p.killed = 0;
    for (int c = 0; c < d.num_crossings(); ++c) {
        const auto& q = corners[c];
        Relator r;
        r.crossing = c;
        r.word = {{q[0], 1}, {q[1], -1}, {q[2], 1}, {q[3], -1}};
        p.relators.push_back(std::move(r));
    }
    return p;
}

std::array<RelationPair, 4> symmetrize(const Relator& r) {
    if (r.word.size() != 4) throw HypothesisError("relator is not of length 4");
    for (int i = 0; i < 4; ++i)
        if (r.word[i].exp != (i % 2 == 0 ? 1 : -1))
            throw HypothesisError("relator exponent pattern is not +,-,+,-");
    int i = r.word[0].gen, j = r.word[1].gen, k = r.word[2].gen, l = r.word[3].gen;
    auto W = [](int g1, int e1, int g2, int e2) {
        return Word{{g1, e1}, {g2, e2}};
    };
    return {RelationPair{W(i, 1, j, -1), W(l, 1, k, -1), r.crossing},
            RelationPair{W(j, -1, k, 1), W(i, -1, l, 1), r.crossing},
            RelationPair{W(k, 1, l, -1), W(j, 1, i, -1), r.crossing},
            RelationPair{W(l, -1, i, 1), W(k, -1, j, 1), r.crossing}};
}

Word phi(const Word& w, int killed) {
    Word out;
    out.reserve(w.size());
    for (Letter a : w)
        if (a.gen != killed) out.push_back(a);
    return free_reduce(out);
}

std::array<RelationPair, 3> PhiTriple::relations() const {
    auto W1 = [](int g, int e) { return Word{{g, e}}; };
    auto W2 = [](int g1, int e1, int g2, int e2) {
        return Word{{g1, e1}, {g2, e2}};
    };
    return {RelationPair{W1(l, 1), W2(j, -1, k, 1), crossing},
            RelationPair{W1(j, 1), W2(k, 1, l, -1), crossing},
            RelationPair{W2(l, -1, j, -1), W1(k, -1), crossing}};
}

PhiTriple phi_set(const Relator& r, int killed) {
    symmetrize(r); // shape checks
    // Bring the killed generator to the front with positive exponent. The
    // candidates that preserve the +,-,+,- pattern are the rotations by two
    // of the relator and of its inverse.
    const Word& w = r.word;
    std::vector<Word> variants;
    auto rot2 = [](const Word& u) { return Word{u[2], u[3], u[0], u[1]}; };
    Word inv_w = inverse(w); // x_l x_k' x_j x_i'
    variants.push_back(w);
    variants.push_back(rot2(w));
    variants.push_back(inv_w);
    variants.push_back(rot2(inv_w));
    for (const Word& v : variants)
        if (v[0].gen == killed) {
            PhiTriple t;
            t.j = v[1].gen;
            t.k = v[2].gen;
            t.l = v[3].gen;
            t.crossing = r.crossing;
            return t;
        }
    throw HypothesisError("relator does not mention the killed generator");
}

std::vector<RelationPair> all_pairs(const Presentation& p) {
    std::vector<RelationPair> out;
    out.reserve(p.relators.size() * 4);
    for (const auto& r : p.relators)
        for (auto& pair : symmetrize(r)) out.push_back(std::move(pair));
    return out;
}

} // namespace dehnrw
