#pragma once

#include <string>

#include "shiftlab/automorphisms.hpp"
#include "shiftlab/growth.hpp"
#include "shiftlab/spec.hpp"

namespace shiftlab {

// JSON carriers for the on-disk exchange formats. Codes serialize as
// {"range": N, "rule": {window: symbol}}; certificates embed both codes and
// the verification depth. Loading rebinds against a caller-supplied spec and
// validates totality of the rule table.

std::string spec_to_json(const SubshiftSpec& spec);
SubshiftSpec spec_from_json(const std::string& text);

std::string code_to_json(const SlidingBlockCode& code);
SlidingBlockCode code_from_json(Language& lang, const std::string& text);

std::string certificate_to_json(const AutomorphismCertificate& cert);
AutomorphismCertificate certificate_from_json(Language& lang, const std::string& text);

std::string growth_report_to_json(const GrowthReport& report);

}  // namespace shiftlab
