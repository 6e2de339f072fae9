#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cloudrisk/document.hpp"

namespace cloudrisk {

// One step of a path expression: either a map key or the array wildcard
// (written "[_]" in the surface syntax).
struct PathSegment {
    enum class Kind { key, wildcard };

    Kind kind = Kind::key;
    std::string key;

    static PathSegment make_key(std::string k) { return {Kind::key, std::move(k)}; }
    static PathSegment make_wildcard() { return {Kind::wildcard, {}}; }

    bool operator==(const PathSegment&) const = default;
};

struct PathExpr {
    std::vector<PathSegment> segments;

    bool has_wildcard() const;
    std::string to_string() const;

    bool operator==(const PathExpr&) const = default;
};

// Parses dotted paths like "properties.routing.endpoints.storageContainers[_].connectionString".
// "[_]" expands every element of the array reached so far; indexed access
// ("[0]") is rejected. Throws Error(empty_path | empty_segment | malformed_wildcard).
PathExpr parse_path(std::string_view text);

// All values reachable from doc along the path. Key steps walk maps,
// wildcard steps fan out over array elements. Branches that hit a missing
// key, a non-map at a key step, or a non-array at a wildcard step are
// silently pruned; a fully missing path is just an empty result, never an
// error (profiles authored against optional properties rely on this).
// Results are in document order; duplicates are kept.
std::vector<const DocumentValue*> resolve_path(const DocumentValue& doc, const PathExpr& path);

// Writes value at a wildcard-free path, creating intermediate maps.
// Throws Error(rule_conflict) if a prefix of the path is already occupied
// by a non-map value.
void set_path(DocumentValue& doc, const PathExpr& path, DocumentValue value);

} // namespace cloudrisk
