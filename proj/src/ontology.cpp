#include "cloudrisk/ontology.hpp"

#include <set>

namespace cloudrisk {

namespace {

const char* kRoot = "Resource";

Transform parse_transform(const DocumentValue& v) {
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        if (s == "identity") return {TransformKind::identity, {}};
        if (s == "negate") return {TransformKind::negate, {}};
        if (s == "tls_version") return {TransformKind::tls_version, {}};
        throw Error(errc::bad_rules, "unknown transform \"" + s + "\"");
    }
    if (v.is_object() && v.size() == 1 && v.contains("constant")) {
        return {TransformKind::constant, v.at("constant")};
    }
    throw Error(errc::bad_rules, "transform must be \"identity\", \"negate\", \"tls_version\" or "
                                 "{\"constant\": <value>}");
}

PathExpr parse_concrete_path(const std::string& text, const char* what) {
    PathExpr p = parse_path(text);
    if (std::string(what) == "feature_path" && p.has_wildcard()) {
        throw Error(errc::bad_rules, "feature_path \"" + text + "\" must not contain wildcards");
    }
    return p;
}

} // namespace

void OntologyRules::add_class(OntologyClass cls) {
    const auto it = classes_.find(cls.name);
    if (it != classes_.end()) {
        if (it->second.parent != cls.parent) {
            throw Error(errc::bad_rules, "class \"" + cls.name + "\" redefined with a different parent");
        }
        return;
    }
    classes_.emplace(cls.name, std::move(cls));
}

OntologyRules OntologyRules::builtin() {
    OntologyRules r;
    r.add_class({kRoot, std::nullopt});
    r.add_class({"ComputingResource", kRoot});
    r.add_class({"Storage", kRoot});
    r.add_class({"ObjectStorage", "Storage"});
    r.add_class({"Networking", kRoot});
    r.add_class({"MessagingHub", kRoot});
    r.validate();
    return r;
}

void OntologyRules::validate() {
    // forest check: every parent exists and every chain terminates at the root
    for (const auto& [name, cls] : classes_) {
        std::set<std::string> seen;
        const OntologyClass* cur = &cls;
        while (cur->parent) {
            if (!seen.insert(cur->name).second) {
                throw Error(errc::bad_rules, "class cycle involving \"" + cur->name + "\"");
            }
            const auto it = classes_.find(*cur->parent);
            if (it == classes_.end()) {
                throw Error(errc::bad_rules,
                            "class \"" + cur->name + "\" names unknown parent \"" + *cur->parent + "\"");
            }
            cur = &it->second;
        }
        if (cur->name != kRoot) {
            throw Error(errc::bad_rules, "class \"" + name + "\" does not descend from \"Resource\"");
        }
    }

    for (const MappingRule& rule : rules_) {
        if (rule.classes.empty() || rule.classes.back() != kRoot) {
            throw Error(errc::bad_rules,
                        "rule for \"" + rule.provider_type + "\": classes must end in \"Resource\"");
        }
        for (std::size_t i = 0; i + 1 < rule.classes.size(); ++i) {
            if (!is_child_parent_edge(rule.classes[i], rule.classes[i + 1])) {
                throw Error(errc::bad_rules, "rule for \"" + rule.provider_type + "\": \"" +
                                                 rule.classes[i] + "\" is not a child of \"" +
                                                 rule.classes[i + 1] + "\"");
            }
        }
        std::set<std::string> targets;
        for (const FeatureExtractor& ex : rule.extractors) {
            if (!targets.insert(ex.feature_path.to_string()).second) {
                throw Error(errc::rule_conflict, "rule for \"" + rule.provider_type +
                                                     "\": two extractors target \"" +
                                                     ex.feature_path.to_string() + "\"");
            }
            if (!ex.source_path && ex.transform.kind != TransformKind::constant) {
                throw Error(errc::bad_rules, "rule for \"" + rule.provider_type +
                                                 "\": extractor for \"" + ex.feature_path.to_string() +
                                                 "\" has no source_path");
            }
        }
    }
}

OntologyRules OntologyRules::load(const DocumentValue& doc) {
    if (!doc.is_object()) {
        throw Error(errc::bad_rules, "rules document is not an object");
    }
    OntologyRules r = builtin();

    if (auto it = doc.find("classes"); it != doc.end()) {
        if (!it->is_array()) {
            throw Error(errc::bad_rules, "\"classes\" must be an array");
        }
        for (const auto& c : *it) {
            OntologyClass cls;
            cls.name = c.at("name").get<std::string>();
            if (c.contains("parent") && !c.at("parent").is_null()) {
                cls.parent = c.at("parent").get<std::string>();
            }
            r.add_class(std::move(cls));
        }
    }

    if (auto it = doc.find("rules"); it != doc.end()) {
        if (!it->is_array()) {
            throw Error(errc::bad_rules, "\"rules\" must be an array");
        }
        for (const auto& rule_doc : *it) {
            MappingRule rule;
            rule.provider_type = rule_doc.at("provider_type").get<std::string>();
            for (const auto& c : rule_doc.at("classes")) {
                rule.classes.push_back(c.get<std::string>());
            }
            if (auto ex_it = rule_doc.find("extractors"); ex_it != rule_doc.end()) {
                for (const auto& ex_doc : *ex_it) {
                    FeatureExtractor ex;
                    ex.feature_path =
                        parse_concrete_path(ex_doc.at("feature_path").get<std::string>(), "feature_path");
                    if (ex_doc.contains("source_path")) {
                        ex.source_path =
                            parse_concrete_path(ex_doc.at("source_path").get<std::string>(), "source_path");
                    }
                    ex.transform = ex_doc.contains("transform") ? parse_transform(ex_doc.at("transform"))
                                                                : Transform{};
                    rule.extractors.push_back(std::move(ex));
                }
            }
            if (r.rule_index_.contains(rule.provider_type)) {
                throw Error(errc::bad_rules,
                            "two rules for provider type \"" + rule.provider_type + "\"");
            }
            r.rule_index_[rule.provider_type] = r.rules_.size();
            r.rules_.push_back(std::move(rule));
        }
    }

    r.validate();
    return r;
}

OntologyRules OntologyRules::load_file(const std::filesystem::path& path) {
    try {
        return load(parse_document(read_file(path)));
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::bad_rules, path.string() + ": " + e.what());
    } catch (const Error& e) {
        if (e.code() == errc::io_error) {
            throw;
        }
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

bool OntologyRules::is_child_parent_edge(const std::string& child, const std::string& parent) const {
    const auto it = classes_.find(child);
    return it != classes_.end() && it->second.parent && *it->second.parent == parent;
}

const MappingRule* OntologyRules::rule_for(const std::string& provider_type) const {
    const auto it = rule_index_.find(provider_type);
    return it == rule_index_.end() ? nullptr : &rules_[it->second];
}

std::vector<std::string> OntologyRules::classify(const std::string& provider_type) const {
    if (const MappingRule* rule = rule_for(provider_type)) {
        return rule->classes;
    }
    return {kRoot};
}

DocumentValue OntologyResource::document() const {
    DocumentValue doc = features.is_null() ? DocumentValue::object() : features;
    doc["id"] = id;
    doc["type"] = type_chain;
    return doc;
}

namespace {

// Applies one transform; returns nothing when the source value has the
// wrong shape for the transform, in which case no feature is written.
std::optional<DocumentValue> apply_transform(const Transform& t, const DocumentValue& value) {
    switch (t.kind) {
        case TransformKind::identity:
            return value;
        case TransformKind::negate:
            if (!value.is_boolean()) {
                return std::nullopt;
            }
            return DocumentValue(!value.get<bool>());
        case TransformKind::tls_version:
            // copied verbatim; profiles compare version strings, no ordering
            if (!value.is_string()) {
                return std::nullopt;
            }
            return value;
        case TransformKind::constant:
            return t.constant;
    }
    return std::nullopt;
}

} // namespace

OntologyResource translate_resource(const ResourceDescriptor& r, const OntologyRules& rules) {
    OntologyResource out;
    out.name = r.name;
    out.id = r.name;
    if (auto it = r.body.find("id"); it != r.body.end() && it->is_string()) {
        out.id = it->get<std::string>();
    }
    out.type_chain = rules.classify(r.provider_type);
    out.features = DocumentValue::object();

    const MappingRule* rule = rules.rule_for(r.provider_type);
    if (rule == nullptr) {
        return out;
    }
    for (const FeatureExtractor& ex : rule->extractors) {
        DocumentValue source;
        if (ex.source_path) {
            const auto values = resolve_path(r.body, *ex.source_path);
            if (values.empty()) {
                continue;  // missing source writes nothing
            }
            source = *values.front();  // extractors target scalar features
        } else if (ex.transform.kind != TransformKind::constant) {
            continue;
        }
        if (auto value = apply_transform(ex.transform, source)) {
            set_path(out.features, ex.feature_path, std::move(*value));
        }
    }
    return out;
}

std::vector<OntologyResource> translate_all(const IacTemplate& tpl, const OntologyRules& rules) {
    std::vector<OntologyResource> out;
    out.reserve(tpl.resources.size());
    std::string failures;
    for (const ResourceDescriptor& r : tpl.resources) {
        try {
            out.push_back(translate_resource(r, rules));
        } catch (const Error& e) {
            if (!failures.empty()) {
                failures += "; ";
            }
            failures += "resource " + std::to_string(r.source_index) + " (" + r.name + "): " + e.what();
        }
    }
    if (!failures.empty()) {
        throw Error(errc::rule_conflict, failures);
    }
    return out;
}

} // namespace cloudrisk
