#pragma once

#include <string>

#include "json.hpp"

namespace dpd_test {

// Checks an instance against the subset of JSON Schema used by
// docs/report.schema.json: type, enum, required, properties, items, oneOf,
// boolean additionalProperties, and $ref into #/definitions.
class SchemaChecker {
public:
    explicit SchemaChecker(nlohmann::json root) : root_(std::move(root)) {}

    bool check(const nlohmann::json& instance, std::string* why = nullptr) const {
        return check_against(root_, instance, why);
    }

private:
    nlohmann::json root_;

    static bool complain(std::string* why, const std::string& msg) {
        if (why && why->empty()) *why = msg;
        return false;
    }

    static bool type_matches(const nlohmann::json& type, const nlohmann::json& v) {
        if (type.is_array()) {
            for (const auto& t : type)
                if (type_matches(t, v)) return true;
            return false;
        }
        const std::string t = type.get<std::string>();
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "boolean") return v.is_boolean();
        if (t == "integer") return v.is_number_integer();
        if (t == "number") return v.is_number();
        if (t == "null") return v.is_null();
        return false;
    }

    bool check_against(const nlohmann::json& schema, const nlohmann::json& v,
                       std::string* why) const {
        if (schema.contains("$ref")) {
            const std::string ref = schema["$ref"].get<std::string>();
            const std::string prefix = "#/definitions/";
            if (ref.rfind(prefix, 0) != 0) return complain(why, "unsupported $ref " + ref);
            return check_against(root_.at("definitions").at(ref.substr(prefix.size())), v, why);
        }
        if (schema.contains("enum")) {
            bool hit = false;
            for (const auto& e : schema["enum"]) hit = hit || e == v;
            if (!hit)
                return complain(why, v.dump() + " not in enum " + schema["enum"].dump());
        }
        if (schema.contains("type") && !type_matches(schema["type"], v))
            return complain(why, v.dump() + " is not of type " + schema["type"].dump());
        if (schema.contains("required")) {
            if (!v.is_object()) return complain(why, "required on non-object " + v.dump());
            for (const auto& k : schema["required"])
                if (!v.contains(k.get<std::string>()))
                    return complain(why, "missing required key " + k.dump() + " in " + v.dump());
        }
        if (schema.contains("properties") && v.is_object()) {
            for (const auto& [key, sub] : schema["properties"].items())
                if (v.contains(key) && !check_against(sub, v.at(key), why))
                    return complain(why, "at key '" + key + "'");
            if (schema.value("additionalProperties", nlohmann::json(true)) ==
                nlohmann::json(false))
                for (const auto& [key, val] : v.items())
                    if (!schema["properties"].contains(key))
                        return complain(why, "unexpected key '" + key + "'");
        }
        if (schema.contains("items") && v.is_array())
            for (const auto& elem : v)
                if (!check_against(schema["items"], elem, why))
                    return complain(why, "in array item " + elem.dump());
        if (schema.contains("oneOf")) {
            int hits = 0;
            for (const auto& sub : schema["oneOf"]) {
                std::string scratch;
                if (check_against(sub, v, &scratch)) ++hits;
            }
            if (hits != 1)
                return complain(why, "oneOf matched " + std::to_string(hits) +
                                         " branches for " + v.dump());
        }
        return true;
    }
};

} // namespace dpd_test
