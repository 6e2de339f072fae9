#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cloudrisk/document.hpp"
#include "cloudrisk/path.hpp"

namespace cloudrisk {

enum class Goal { confidentiality, integrity, availability };

std::string_view goal_name(Goal goal);
Goal parse_goal(std::string_view text);  // throws Error(unknown_goal)

// Profile names follow "<assetType>_<protectionGoal>_<attackShortDescription>".
// The first segment is the asset type, the second the protection goal, and
// everything after the second underscore is the description (which may
// itself contain underscores).
struct ProfileName {
    std::string asset_type;
    Goal protection_goal = Goal::confidentiality;
    std::string attack_short_description;

    std::string to_string() const;

    bool operator==(const ProfileName&) const = default;
};

ProfileName validate_name(std::string_view text);  // throws Error(bad_name | unknown_goal)

enum class Scope { specific_resource, resource_type, ontology };

std::string_view scope_name(Scope scope);
Scope parse_scope(std::string_view text);

enum class ClauseOp { eq, neq, contains };

std::string_view clause_op_name(ClauseOp op);

// A reference to another variable's document, e.g. the storage account's
// name joined against an IoT Hub's connection strings.
struct ClauseRef {
    std::string var;
    PathExpr path;

    bool operator==(const ClauseRef&) const = default;
};

struct Clause {
    std::string subject_var;
    PathExpr path;
    ClauseOp op = ClauseOp::eq;
    // exactly one of the two is set
    std::optional<DocumentValue> literal;
    std::optional<ClauseRef> ref;

    bool operator==(const Clause&) const = default;
};

// A reusable, machine-readable configuration weakness: a named conjunctive
// query over one or more resource variables.
struct ThreatProfile {
    ProfileName name;
    Scope scope = Scope::resource_type;
    std::vector<std::string> variables;  // declaration order
    std::string subject;                 // variable reported as the affected asset
    std::vector<Clause> clauses;
    std::optional<int> threat_value;     // 1..3 when present
    std::string description;
    bool reviewed = true;                // false for freshly imported shared profiles

    std::size_t subject_pos() const;

    bool operator==(const ThreatProfile&) const = default;
};

// Parses and fully validates one profile document. Unknown fields are
// rejected so that typos ("vlaue") fail loudly instead of silently
// weakening a profile.
ThreatProfile parse_profile(std::string_view bytes);
ThreatProfile parse_profile(const DocumentValue& doc);
ThreatProfile parse_profile_file(const std::filesystem::path& path);

DocumentValue serialize_profile(const ThreatProfile& profile);

// Loads every "*.tp.json" under dir (recursively), in path order.
std::vector<ThreatProfile> load_profile_dir(const std::filesystem::path& dir);

enum class LintKind {
    duplicate_name,       // error: two profiles share the full name
    overlap_hint,         // info: same goal+description across asset types
    missing_threat_value, // warning: score falls back to 0 / re-assessment trigger
    empty_profile,        // warning: no clauses, matches every resource
};

enum class LintSeverity { error, warning, info };

struct LintFinding {
    LintKind kind;
    LintSeverity severity;
    std::vector<std::string> profiles;
    std::string message;
};

std::string_view lint_kind_name(LintKind kind);
std::string_view lint_severity_name(LintSeverity severity);

// Pure advisory pass over a loaded repository; never fails the run.
std::vector<LintFinding> lint_repository(const std::vector<ThreatProfile>& profiles);

} // namespace cloudrisk
