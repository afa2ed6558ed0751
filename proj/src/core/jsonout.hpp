#pragma once

#include <json.hpp>

#include "core/scheme.hpp"
#include "core/textio.hpp"

namespace idem {

using Json = nlohmann::ordered_json;

Json to_json(const Report& r);
Json to_json(const Semiring& s);
Json to_json(const Top& t);
Json to_json(const Partition& p, const Semiring& base);
Json to_json(const Spectrum& sp, const Semiring& base);
Json scheme_to_json(const AScheme& x, bool with_sections, bool with_checks);

// Hasse diagram of the derived order of a Cim.
std::string to_dot(const Cim& c, const std::string& name);
// Specialization order of a finite space (edges point to specializations).
std::string to_dot(const Top& t, const std::string& name);

}  // namespace idem
