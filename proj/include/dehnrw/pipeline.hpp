#pragma once

#include <optional>
#include <vector>

#include "dehnrw/derived_graph.hpp"
#include "dehnrw/diagram.hpp"
#include "dehnrw/errors.hpp"
#include "dehnrw/engine.hpp"
#include "dehnrw/presentation.hpp"
#include "dehnrw/rewriting.hpp"
#include "dehnrw/rules.hpp"

namespace dehnrw {

struct BuildOptions {
    std::optional<int> unbounded; // region discovery id override
    int role_seed = 0;            // generator seeded as source
    bool keep_killed = false;
};

// Thrown when a diagram fails validation; carries the report.
struct ValidationFailed : Error {
    ValidationReport report;
    explicit ValidationFailed(ValidationReport rep)
        : Error("diagram failed validation"), report(std::move(rep)) {}
};

// Everything derived from one diagram, the full construction chain.
struct KnotSystems {
    Diagram diagram;
    Faces regions;
    ValidationReport validation;
    std::vector<std::array<int, 4>> corners;
    Presentation presentation;
    std::vector<RelationPair> pairs;
    std::vector<PhiTriple> phis;
    DerivedGraph delta;
    RoleAssignment roles;
    std::vector<bool> t_plus;
    RewritingSystem R, Rprime, Rsecond;
    int rewire_passes = 0;

    const RewritingSystem& system(Stage st) const;
};

KnotSystems build_systems(const Diagram& d, const BuildOptions& opts = {});

} // namespace dehnrw
