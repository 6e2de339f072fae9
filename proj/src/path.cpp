#include "cloudrisk/path.hpp"

#include <algorithm>

namespace cloudrisk {

bool PathExpr::has_wildcard() const {
    return std::any_of(segments.begin(), segments.end(), [](const PathSegment& s) {
        return s.kind == PathSegment::Kind::wildcard;
    });
}

std::string PathExpr::to_string() const {
    std::string out;
    for (const auto& seg : segments) {
        if (seg.kind == PathSegment::Kind::wildcard) {
            out += "[_]";
        } else {
            if (!out.empty()) {
                out += '.';
            }
            out += seg.key;
        }
    }
    return out;
}

namespace {

// Splits one dot-delimited token into a key (possibly absent) plus trailing
// "[_]" wildcards. Any other use of brackets is malformed; in particular
// indexed access ("[0]") is rejected rather than treated as a key.
void parse_token(std::string_view token, std::vector<PathSegment>& out) {
    const auto bracket = token.find('[');
    std::string_view key = token.substr(0, bracket);
    std::string_view rest = bracket == std::string_view::npos ? std::string_view{} : token.substr(bracket);

    if (key.find(']') != std::string_view::npos) {
        throw Error(errc::malformed_wildcard, "unmatched ']' in \"" + std::string(token) + "\"");
    }
    if (!key.empty()) {
        out.push_back(PathSegment::make_key(std::string(key)));
    }
    while (!rest.empty()) {
        if (rest.rfind("[_]", 0) != 0) {
            throw Error(errc::malformed_wildcard,
                        "only \"[_]\" array access is supported, got \"" + std::string(token) + "\"");
        }
        out.push_back(PathSegment::make_wildcard());
        rest.remove_prefix(3);
    }
}

} // namespace

PathExpr parse_path(std::string_view text) {
    if (text.empty()) {
        throw Error(errc::empty_path, "path is empty");
    }

    PathExpr path;
    std::size_t start = 0;
    while (true) {
        const auto dot = text.find('.', start);
        std::string_view token = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
        if (token.empty()) {
            throw Error(errc::empty_segment, "empty segment in path \"" + std::string(text) + "\"");
        }
        parse_token(token, path.segments);
        if (dot == std::string_view::npos) {
            break;
        }
        start = dot + 1;
        if (start == text.size()) {
            throw Error(errc::empty_segment, "trailing dot in path \"" + std::string(text) + "\"");
        }
    }
    return path;
}

namespace {

void collect(const DocumentValue& node, const std::vector<PathSegment>& segs, std::size_t i,
             std::vector<const DocumentValue*>& out) {
    if (i == segs.size()) {
        out.push_back(&node);
        return;
    }
    const PathSegment& seg = segs[i];
    if (seg.kind == PathSegment::Kind::key) {
        if (!node.is_object()) {
            return;
        }
        const auto it = node.find(seg.key);
        if (it == node.end()) {
            return;
        }
        collect(*it, segs, i + 1, out);
    } else {
        if (!node.is_array()) {
            return;
        }
        for (const auto& element : node) {
            collect(element, segs, i + 1, out);
        }
    }
}

} // namespace

std::vector<const DocumentValue*> resolve_path(const DocumentValue& doc, const PathExpr& path) {
    std::vector<const DocumentValue*> out;
    collect(doc, path.segments, 0, out);
    return out;
}

void set_path(DocumentValue& doc, const PathExpr& path, DocumentValue value) {
    DocumentValue* node = &doc;
    for (std::size_t i = 0; i + 1 < path.segments.size(); ++i) {
        const PathSegment& seg = path.segments[i];
        if (seg.kind != PathSegment::Kind::key) {
            throw Error(errc::rule_conflict, "wildcard in write path \"" + path.to_string() + "\"");
        }
        if (node->is_null()) {
            *node = DocumentValue::object();
        }
        if (!node->is_object()) {
            throw Error(errc::rule_conflict,
                        "path \"" + path.to_string() + "\" collides with a non-map value at \"" + seg.key + "\"");
        }
        node = &(*node)[seg.key];
    }
    const PathSegment& last = path.segments.back();
    if (last.kind != PathSegment::Kind::key) {
        throw Error(errc::rule_conflict, "wildcard in write path \"" + path.to_string() + "\"");
    }
    if (node->is_null()) {
        *node = DocumentValue::object();
    }
    if (!node->is_object()) {
        throw Error(errc::rule_conflict,
                    "path \"" + path.to_string() + "\" collides with a non-map value");
    }
    (*node)[last.key] = std::move(value);
}

} // namespace cloudrisk
