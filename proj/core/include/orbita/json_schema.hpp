#ifndef ORBITA_JSON_SCHEMA_HPP
#define ORBITA_JSON_SCHEMA_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace orbita {

// Minimal structural JSON-Schema checker covering the subset the shipped
// schemas use: type, properties, required, items, enum, minimum,
// additionalProperties (boolean form) and nullable unions via type arrays.
// Returns a list of violations; empty means the instance validates.
std::vector<std::string> schema_violations(const nlohmann::json& instance,
                                           const nlohmann::json& schema);

bool validates(const nlohmann::json& instance, const nlohmann::json& schema);

} // namespace orbita

#endif
