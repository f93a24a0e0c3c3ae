#pragma once

#include "json.hpp"
#include "shiftlab/automorphisms.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/growth.hpp"

// Object-level converters shared by the string serializers and the report
// pipeline. Internal to the library build; public interfaces stay string
// based so no vendor header leaks.

namespace shiftlab::detail {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text);

Json spec_json(const SubshiftSpec& spec);
SubshiftSpec spec_from(const Json& j);

Json code_json(const SlidingBlockCode& code);
SlidingBlockCode code_from(Language& lang, const Json& j);

Json certificate_json(const AutomorphismCertificate& cert);
AutomorphismCertificate certificate_from(Language& lang, const Json& j);

Json growth_json(const GrowthReport& report);
GrowthReport growth_from(const Json& j);

}  // namespace shiftlab::detail
