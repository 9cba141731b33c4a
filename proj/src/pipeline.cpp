#include "dehnrw/pipeline.hpp"

namespace dehnrw {

const RewritingSystem& KnotSystems::system(Stage st) const {
    switch (st) {
        case Stage::R: return R;
        case Stage::Rprime: return Rprime;
        case Stage::Rsecond: return Rsecond;
    }
    return Rsecond;
}

KnotSystems build_systems(const Diagram& d, const BuildOptions& opts) {
    KnotSystems ks;
    ks.diagram = d;
    if (opts.unbounded) ks.diagram.unbounded = opts.unbounded;

    ks.validation = validate(ks.diagram);
    if (!ks.validation.ok) throw ValidationFailed(ks.validation);

    ks.regions = faces(ks.diagram);
    ks.corners = corner_incidence(ks.diagram, ks.regions);
    ks.presentation = dehn_presentation(ks.diagram, ks.regions);
    ks.pairs = all_pairs(ks.presentation);
    ks.delta = build_delta(ks.presentation.num_generators, ks.pairs);
    ks.roles = assign_roles(ks.delta, opts.role_seed);

    RegionAdjacency adj = region_adjacency(ks.diagram, ks.regions);
    ks.t_plus.assign(ks.presentation.num_generators, false);
    for (int r = 1; r < ks.presentation.num_generators; ++r)
        if (adj.adjacent(0, r) && ks.roles.is_sink(r)) ks.t_plus[r] = true;

    ks.R = build_R(ks.presentation, ks.pairs, ks.roles, ks.t_plus);

    for (const auto& rel : ks.presentation.relators) {
        bool through_killed = false;
        for (Letter a : rel.word) through_killed |= a.gen == ks.presentation.killed;
        if (through_killed) ks.phis.push_back(phi_set(rel, ks.presentation.killed));
    }

    ks.Rprime = build_R_prime(ks.R, ks.phis, opts.keep_killed);
    RewritingSystem with4 = add_kind4(ks.Rprime);
    RewritingSystem rewired = add_kind5_and_rewire(with4, &ks.rewire_passes);
    ks.Rsecond = reduce_system(rewired);
    return ks;
}

} // namespace dehnrw
