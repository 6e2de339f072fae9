#include "cloudrisk/iac.hpp"

namespace cloudrisk {

namespace {

const DocumentValue* find_resources(const DocumentValue& doc, const DocumentValue** scope_out) {
    *scope_out = &doc;
    if (doc.is_object()) {
        if (auto it = doc.find("resources"); it != doc.end() && it->is_array()) {
            return &*it;
        }
        // Export APIs wrap the document as {"template": {..., "resources": [...]}}.
        if (auto tpl = doc.find("template"); tpl != doc.end() && tpl->is_object()) {
            if (auto it = tpl->find("resources"); it != tpl->end() && it->is_array()) {
                *scope_out = &*tpl;
                return &*it;
            }
        }
    }
    return nullptr;
}

std::string require_string_field(const DocumentValue& resource, const char* field, std::size_t index,
                                 errc code) {
    const auto it = resource.find(field);
    if (it == resource.end() || !it->is_string() || it->get_ref<const std::string&>().empty()) {
        throw Error(code, "resource at index " + std::to_string(index) + " has no usable \"" +
                              field + "\" field");
    }
    return it->get<std::string>();
}

} // namespace

IacTemplate parse_template(DocumentValue doc) {
    IacTemplate tpl;

    const DocumentValue* scope = nullptr;
    const DocumentValue* resources = find_resources(doc, &scope);
    if (resources == nullptr) {
        throw Error(errc::missing_resources, "no \"resources\" array found (looked at the top level "
                                             "and under \"template\")");
    }

    if (auto it = scope->find("$schema"); it != scope->end() && it->is_string()) {
        tpl.schema_uri = it->get<std::string>();
    }

    tpl.resources.reserve(resources->size());
    for (std::size_t i = 0; i < resources->size(); ++i) {
        const DocumentValue& obj = (*resources)[i];
        if (!obj.is_object()) {
            throw Error(errc::malformed_document,
                        "resource at index " + std::to_string(i) + " is not an object");
        }
        ResourceDescriptor r;
        r.name = require_string_field(obj, "name", i, errc::resource_missing_name);
        r.provider_type = require_string_field(obj, "type", i, errc::resource_missing_type);
        if (auto it = obj.find("resourceGroup"); it != obj.end() && it->is_string()) {
            r.resource_group = it->get<std::string>();
        }
        r.body = obj;
        r.source_index = i;
        tpl.resources.push_back(std::move(r));
    }

    tpl.raw = std::move(doc);
    return tpl;
}

IacTemplate parse_template(std::string_view bytes) {
    return parse_template(parse_document(bytes));
}

IacTemplate parse_template_file(const std::filesystem::path& path) {
    try {
        return parse_template(read_file(path));
    } catch (const Error& e) {
        if (e.code() == errc::io_error) {
            throw;
        }
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

} // namespace cloudrisk
