#include "cloudrisk/errors.hpp"

namespace cloudrisk {

std::string_view errc_name(errc code) {
    switch (code) {
        case errc::malformed_document: return "MalformedDocument";
        case errc::missing_resources: return "MissingResources";
        case errc::resource_missing_name: return "ResourceMissingName";
        case errc::resource_missing_type: return "ResourceMissingType";
        case errc::empty_path: return "EmptyPath";
        case errc::empty_segment: return "EmptySegment";
        case errc::malformed_wildcard: return "MalformedWildcard";
        case errc::malformed_profile: return "MalformedProfile";
        case errc::bad_name: return "BadName";
        case errc::unknown_goal: return "UnknownGoal";
        case errc::unbound_variable: return "UnboundVariable";
        case errc::bad_threat_value: return "BadThreatValue";
        case errc::duplicate_name: return "DuplicateName";
        case errc::rule_conflict: return "RuleConflict";
        case errc::bad_rules: return "BadRules";
        case errc::conflicting_entries: return "ConflictingEntries";
        case errc::bad_levels: return "BadLevels";
        case errc::too_large: return "TooLarge";
        case errc::bad_config: return "BadConfig";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace cloudrisk
