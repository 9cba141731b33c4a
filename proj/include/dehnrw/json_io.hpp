#pragma once

#include <string>

#include "dehnrw/engine.hpp"
#include "dehnrw/pipeline.hpp"

namespace dehnrw {

// All emitters produce deterministic, insertion-ordered JSON.
std::string validation_json(const ValidationReport& rep);
std::string presentation_json(const KnotSystems& ks);
std::string rules_json(const RewritingSystem& s);
std::string normalize_json(const Word& input, const NormalizeResult& res,
                           const RewritingSystem& s);
std::string audit_json(const AuditReport& rep, const RewritingSystem& s);

std::string validation_text(const ValidationReport& rep);
std::string presentation_text(const KnotSystems& ks);
std::string rules_text(const RewritingSystem& s);
std::string audit_text(const AuditReport& rep, const RewritingSystem& s);

} // namespace dehnrw
