#include "orbita/json_schema.hpp"

namespace orbita {

using nlohmann::json;

namespace {

bool type_matches(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

void check(const json& v, const json& schema, const std::string& path,
           std::vector<std::string>& out) {
    if (!schema.is_object()) return;

    if (auto it = schema.find("type"); it != schema.end()) {
        bool ok = false;
        if (it->is_array()) {
            for (const auto& t : *it)
                if (type_matches(v, t.get<std::string>())) ok = true;
        } else {
            ok = type_matches(v, it->get<std::string>());
        }
        if (!ok) {
            out.push_back(path + ": type mismatch (got " + std::string(v.type_name()) + ")");
            return;
        }
    }
    if (auto it = schema.find("enum"); it != schema.end()) {
        bool ok = false;
        for (const auto& cand : *it)
            if (cand == v) ok = true;
        if (!ok) out.push_back(path + ": value not in enum");
    }
    if (v.is_number()) {
        if (auto it = schema.find("minimum"); it != schema.end()) {
            if (v.get<double>() < it->get<double>())
                out.push_back(path + ": below minimum");
        }
    }
    if (v.is_object()) {
        if (auto it = schema.find("required"); it != schema.end()) {
            for (const auto& key : *it)
                if (!v.contains(key.get<std::string>()))
                    out.push_back(path + ": missing required property '" +
                                  key.get<std::string>() + "'");
        }
        auto props = schema.find("properties");
        for (auto& [key, val] : v.items()) {
            if (props != schema.end() && props->contains(key)) {
                check(val, (*props)[key], path + "/" + key, out);
            } else if (auto ap = schema.find("additionalProperties");
                       ap != schema.end() && ap->is_boolean() && !ap->get<bool>()) {
                out.push_back(path + ": unexpected property '" + key + "'");
            }
        }
    }
    if (v.is_array()) {
        if (auto it = schema.find("items"); it != schema.end()) {
            size_t i = 0;
            for (const auto& el : v) check(el, *it, path + "/" + std::to_string(i++), out);
        }
    }
}

} // namespace

std::vector<std::string> schema_violations(const json& instance, const json& schema) {
    std::vector<std::string> out;
    check(instance, schema, "$", out);
    return out;
}

bool validates(const json& instance, const json& schema) {
    return schema_violations(instance, schema).empty();
}

} // namespace orbita
