#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cloudrisk/document.hpp"
#include "cloudrisk/iac.hpp"
#include "cloudrisk/path.hpp"

namespace cloudrisk {

// Cloud-provider-independent resource class, e.g. ObjectStorage -> Storage
// -> Resource. The class graph is a forest rooted at "Resource".
struct OntologyClass {
    std::string name;
    std::optional<std::string> parent;  // absent only for "Resource"
};

enum class TransformKind { identity, negate, tls_version, constant };

struct Transform {
    TransformKind kind = TransformKind::identity;
    DocumentValue constant;  // used by TransformKind::constant only
};

// Copies one normalized security feature out of a provider resource body.
struct FeatureExtractor {
    PathExpr feature_path;                 // where to write in the ontology document
    std::optional<PathExpr> source_path;   // where to read in the provider body;
                                           // optional for constant extractors
    Transform transform;
};

struct MappingRule {
    std::string provider_type;             // exact match
    std::vector<std::string> classes;      // most specific first, ends in "Resource"
    std::vector<FeatureExtractor> extractors;
};

// The loaded and validated rules bundle: class forest plus per-type rules.
class OntologyRules {
public:
    // Starts from the built-in minimum class set; file classes are merged in.
    static OntologyRules load(const DocumentValue& doc);
    static OntologyRules load_file(const std::filesystem::path& path);
    static OntologyRules builtin();

    const std::map<std::string, OntologyClass>& classes() const { return classes_; }
    const std::vector<MappingRule>& rules() const { return rules_; }

    // Ancestor chain for a provider type; unknown types degrade to ["Resource"].
    std::vector<std::string> classify(const std::string& provider_type) const;

    const MappingRule* rule_for(const std::string& provider_type) const;

    bool is_child_parent_edge(const std::string& child, const std::string& parent) const;

private:
    std::map<std::string, OntologyClass> classes_;
    std::vector<MappingRule> rules_;
    std::map<std::string, std::size_t> rule_index_;

    void add_class(OntologyClass cls);
    void validate();
};

// Provider-agnostic view of one resource: class chain plus normalized
// security features such as atRestEncryption and httpEndpoint.transportEncryption.
struct OntologyResource {
    std::string id;                       // resource id when the body carries one, else the name
    std::string name;                     // source descriptor name, used to join the two views
    std::vector<std::string> type_chain;  // most specific first, ends in "Resource"
    DocumentValue features;               // nested map

    // The evaluation document: {"id":..., "type":[...], <features>}.
    DocumentValue document() const;
};

OntologyResource translate_resource(const ResourceDescriptor& r, const OntologyRules& rules);

// Maps translate_resource over the template; order and count are preserved.
// Per-resource failures are aggregated into one error naming the indices.
std::vector<OntologyResource> translate_all(const IacTemplate& tpl, const OntologyRules& rules);

} // namespace cloudrisk
