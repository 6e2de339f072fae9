#include "cloudrisk/profile.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cloudrisk {

std::string_view goal_name(Goal goal) {
    switch (goal) {
        case Goal::confidentiality: return "confidentiality";
        case Goal::integrity: return "integrity";
        case Goal::availability: return "availability";
    }
    return "?";
}

Goal parse_goal(std::string_view text) {
    if (text == "confidentiality") return Goal::confidentiality;
    if (text == "integrity") return Goal::integrity;
    if (text == "availability") return Goal::availability;
    throw Error(errc::unknown_goal, "\"" + std::string(text) +
                                        "\" is not one of confidentiality, integrity, availability");
}

std::string ProfileName::to_string() const {
    return asset_type + "_" + std::string(goal_name(protection_goal)) + "_" + attack_short_description;
}

ProfileName validate_name(std::string_view text) {
    const auto first = text.find('_');
    if (first == std::string_view::npos) {
        throw Error(errc::bad_name, "\"" + std::string(text) +
                                        "\" does not match <assetType>_<protectionGoal>_<attackShortDescription>");
    }
    const auto second = text.find('_', first + 1);
    if (second == std::string_view::npos) {
        throw Error(errc::bad_name, "\"" + std::string(text) + "\" is missing the attack description segment");
    }

    ProfileName name;
    name.asset_type = std::string(text.substr(0, first));
    name.protection_goal = parse_goal(text.substr(first + 1, second - first - 1));
    name.attack_short_description = std::string(text.substr(second + 1));
    if (name.asset_type.empty() || name.attack_short_description.empty()) {
        throw Error(errc::bad_name, "\"" + std::string(text) + "\" has an empty name segment");
    }
    return name;
}

std::string_view scope_name(Scope scope) {
    switch (scope) {
        case Scope::specific_resource: return "specific_resource";
        case Scope::resource_type: return "resource_type";
        case Scope::ontology: return "ontology";
    }
    return "?";
}

Scope parse_scope(std::string_view text) {
    if (text == "specific_resource") return Scope::specific_resource;
    if (text == "resource_type") return Scope::resource_type;
    if (text == "ontology") return Scope::ontology;
    throw Error(errc::malformed_profile, "unknown scope \"" + std::string(text) + "\"");
}

std::string_view clause_op_name(ClauseOp op) {
    switch (op) {
        case ClauseOp::eq: return "eq";
        case ClauseOp::neq: return "neq";
        case ClauseOp::contains: return "contains";
    }
    return "?";
}

namespace {

ClauseOp parse_clause_op(std::string_view text) {
    if (text == "eq") return ClauseOp::eq;
    if (text == "neq") return ClauseOp::neq;
    if (text == "contains") return ClauseOp::contains;
    throw Error(errc::malformed_profile, "unknown clause op \"" + std::string(text) + "\"");
}

void reject_unknown_fields(const DocumentValue& obj, std::initializer_list<std::string_view> allowed,
                           const char* what) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw Error(errc::malformed_profile,
                        std::string("unknown field \"") + key + "\" in " + what);
        }
    }
}

const DocumentValue& require_field(const DocumentValue& obj, const char* field, const char* what) {
    const auto it = obj.find(field);
    if (it == obj.end()) {
        throw Error(errc::malformed_profile, std::string("missing field \"") + field + "\" in " + what);
    }
    return *it;
}

std::string require_string(const DocumentValue& obj, const char* field, const char* what) {
    const DocumentValue& v = require_field(obj, field, what);
    if (!v.is_string()) {
        throw Error(errc::malformed_profile, std::string("field \"") + field + "\" must be a string");
    }
    return v.get<std::string>();
}

PathExpr parse_profile_path(const std::string& text) {
    try {
        return parse_path(text);
    } catch (const Error& e) {
        throw Error(e.code(), std::string(e.what()) + " (in profile clause)");
    }
}

Clause parse_clause(const DocumentValue& obj, const std::vector<std::string>& variables,
                    std::size_t index) {
    const std::string where = "clause " + std::to_string(index);
    if (!obj.is_object()) {
        throw Error(errc::malformed_profile, where + " is not an object");
    }
    reject_unknown_fields(obj, {"var", "path", "op", "value", "ref"}, where.c_str());

    Clause clause;
    clause.subject_var = require_string(obj, "var", where.c_str());
    clause.path = parse_profile_path(require_string(obj, "path", where.c_str()));
    clause.op = parse_clause_op(require_string(obj, "op", where.c_str()));

    const bool has_value = obj.contains("value");
    const bool has_ref = obj.contains("ref");
    if (has_value == has_ref) {
        throw Error(errc::malformed_profile, where + " needs exactly one of \"value\" or \"ref\"");
    }
    if (has_value) {
        clause.literal = obj.at("value");
    } else {
        const DocumentValue& ref = obj.at("ref");
        if (!ref.is_object()) {
            throw Error(errc::malformed_profile, where + ": \"ref\" must be an object");
        }
        reject_unknown_fields(ref, {"var", "path"}, "clause ref");
        ClauseRef r;
        r.var = require_string(ref, "var", "clause ref");
        r.path = parse_profile_path(require_string(ref, "path", "clause ref"));
        clause.ref = std::move(r);
    }

    auto bound = [&](const std::string& var) {
        return std::find(variables.begin(), variables.end(), var) != variables.end();
    };
    if (!bound(clause.subject_var)) {
        throw Error(errc::unbound_variable,
                    where + " references undeclared variable \"" + clause.subject_var + "\"");
    }
    if (clause.ref && !bound(clause.ref->var)) {
        throw Error(errc::unbound_variable,
                    where + " references undeclared variable \"" + clause.ref->var + "\"");
    }
    return clause;
}

} // namespace

std::size_t ThreatProfile::subject_pos() const {
    const auto it = std::find(variables.begin(), variables.end(), subject);
    return static_cast<std::size_t>(it - variables.begin());
}

ThreatProfile parse_profile(const DocumentValue& doc) {
    if (!doc.is_object()) {
        throw Error(errc::malformed_profile, "profile document is not an object");
    }
    reject_unknown_fields(
        doc, {"name", "scope", "variables", "subject", "clauses", "threat_value", "description", "reviewed"},
        "profile");

    ThreatProfile p;
    p.name = validate_name(require_string(doc, "name", "profile"));
    p.scope = parse_scope(require_string(doc, "scope", "profile"));

    const DocumentValue& vars = require_field(doc, "variables", "profile");
    if (!vars.is_array() || vars.empty()) {
        throw Error(errc::malformed_profile, "\"variables\" must be a non-empty array");
    }
    for (const auto& v : vars) {
        if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
            throw Error(errc::malformed_profile, "variable names must be non-empty strings");
        }
        const auto name = v.get<std::string>();
        if (std::find(p.variables.begin(), p.variables.end(), name) != p.variables.end()) {
            throw Error(errc::malformed_profile, "variable \"" + name + "\" declared twice");
        }
        p.variables.push_back(name);
    }

    p.subject = require_string(doc, "subject", "profile");
    if (std::find(p.variables.begin(), p.variables.end(), p.subject) == p.variables.end()) {
        throw Error(errc::unbound_variable, "subject \"" + p.subject + "\" is not a declared variable");
    }

    const DocumentValue& clauses = require_field(doc, "clauses", "profile");
    if (!clauses.is_array()) {
        throw Error(errc::malformed_profile, "\"clauses\" must be an array");
    }
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        p.clauses.push_back(parse_clause(clauses[i], p.variables, i));
    }

    if (auto it = doc.find("threat_value"); it != doc.end()) {
        if (!it->is_number_integer() || it->get<long long>() < 1 || it->get<long long>() > 3) {
            throw Error(errc::bad_threat_value, "threat_value must be an integer in [1,3]");
        }
        p.threat_value = it->get<int>();
    }

    p.description = require_string(doc, "description", "profile");

    if (auto it = doc.find("reviewed"); it != doc.end()) {
        if (!it->is_boolean()) {
            throw Error(errc::malformed_profile, "\"reviewed\" must be a boolean");
        }
        p.reviewed = it->get<bool>();
    }
    return p;
}

ThreatProfile parse_profile(std::string_view bytes) {
    try {
        return parse_profile(parse_document(bytes));
    } catch (const Error& e) {
        if (e.code() == errc::malformed_document) {
            throw Error(errc::malformed_profile, e.what());
        }
        throw;
    }
}

ThreatProfile parse_profile_file(const std::filesystem::path& path) {
    try {
        return parse_profile(read_file(path));
    } catch (const Error& e) {
        if (e.code() == errc::io_error) {
            throw;
        }
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

DocumentValue serialize_profile(const ThreatProfile& profile) {
    DocumentValue doc = DocumentValue::object();
    doc["name"] = profile.name.to_string();
    doc["scope"] = std::string(scope_name(profile.scope));
    doc["variables"] = profile.variables;
    doc["subject"] = profile.subject;

    DocumentValue clauses = DocumentValue::array();
    for (const Clause& c : profile.clauses) {
        DocumentValue obj = DocumentValue::object();
        obj["var"] = c.subject_var;
        obj["path"] = c.path.to_string();
        obj["op"] = std::string(clause_op_name(c.op));
        if (c.literal) {
            obj["value"] = *c.literal;
        } else {
            obj["ref"] = {{"var", c.ref->var}, {"path", c.ref->path.to_string()}};
        }
        clauses.push_back(std::move(obj));
    }
    doc["clauses"] = std::move(clauses);

    if (profile.threat_value) {
        doc["threat_value"] = *profile.threat_value;
    }
    doc["description"] = profile.description;
    if (!profile.reviewed) {
        doc["reviewed"] = false;
    }
    return doc;
}

std::vector<ThreatProfile> load_profile_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw Error(errc::io_error, dir.string() + " is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().string().ends_with(".tp.json")) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<ThreatProfile> profiles;
    profiles.reserve(files.size());
    for (const auto& file : files) {
        profiles.push_back(parse_profile_file(file));
    }
    return profiles;
}

std::string_view lint_kind_name(LintKind kind) {
    switch (kind) {
        case LintKind::duplicate_name: return "DuplicateName";
        case LintKind::overlap_hint: return "OverlapHint";
        case LintKind::missing_threat_value: return "MissingThreatValue";
        case LintKind::empty_profile: return "EmptyProfile";
    }
    return "?";
}

std::string_view lint_severity_name(LintSeverity severity) {
    switch (severity) {
        case LintSeverity::error: return "error";
        case LintSeverity::warning: return "warning";
        case LintSeverity::info: return "info";
    }
    return "?";
}

std::vector<LintFinding> lint_repository(const std::vector<ThreatProfile>& profiles) {
    std::vector<LintFinding> findings;

    std::map<std::string, int> by_name;
    for (const auto& p : profiles) {
        ++by_name[p.name.to_string()];
    }
    for (const auto& [name, count] : by_name) {
        if (count > 1) {
            findings.push_back({LintKind::duplicate_name,
                                LintSeverity::error,
                                {name},
                                std::to_string(count) + " profiles share the name \"" + name + "\""});
        }
    }

    // Profiles that describe the same attack on the same goal at different
    // scoping levels overlap; they do not conflict, but redundant findings
    // are worth knowing about.
    std::map<std::pair<std::string, std::string>, std::set<std::string>> by_attack;
    for (const auto& p : profiles) {
        by_attack[{std::string(goal_name(p.name.protection_goal)), p.name.attack_short_description}]
            .insert(p.name.to_string());
    }
    for (const auto& [key, names] : by_attack) {
        std::set<std::string> asset_types;
        for (const auto& n : names) {
            asset_types.insert(validate_name(n).asset_type);
        }
        if (asset_types.size() > 1) {
            findings.push_back({LintKind::overlap_hint,
                                LintSeverity::info,
                                {names.begin(), names.end()},
                                "profiles describe the same attack \"" + key.second + "\" on " +
                                    key.first + " at different scoping levels"});
        }
    }

    for (const auto& p : profiles) {
        if (!p.threat_value) {
            findings.push_back({LintKind::missing_threat_value,
                                LintSeverity::warning,
                                {p.name.to_string()},
                                "\"" + p.name.to_string() +
                                    "\" carries no threat value; unless the levels repository "
                                    "supplies one, its risk evaluates to 0"});
        }
        if (p.clauses.empty()) {
            findings.push_back({LintKind::empty_profile,
                                LintSeverity::warning,
                                {p.name.to_string()},
                                "\"" + p.name.to_string() +
                                    "\" has no clauses and matches every resource"});
        }
    }
    return findings;
}

} // namespace cloudrisk
