#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cloudrisk {

// Every failure the library reports carries one of these codes so callers
// (and tests) can dispatch without parsing messages.
enum class errc {
    // document / template ingestion
    malformed_document,
    missing_resources,
    resource_missing_name,
    resource_missing_type,
    // path expressions
    empty_path,
    empty_segment,
    malformed_wildcard,
    // threat profiles
    malformed_profile,
    bad_name,
    unknown_goal,
    unbound_variable,
    bad_threat_value,
    duplicate_name,
    // ontology mapping
    rule_conflict,
    bad_rules,
    // impact & threat levels
    conflicting_entries,
    bad_levels,
    // oracle guard
    too_large,
    // orchestration
    bad_config,
    io_error,
};

std::string_view errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace cloudrisk
