#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cloudrisk/document.hpp"

namespace cloudrisk {

// One cloud resource as declared in an IaC template.
struct ResourceDescriptor {
    std::string name;
    std::string provider_type;          // e.g. "Microsoft.Storage/storageAccounts"
    DocumentValue body;                 // the full resource object, "properties" included
    std::size_t source_index = 0;       // position within the template
    std::optional<std::string> resource_group;
};

struct IacTemplate {
    std::optional<std::string> schema_uri;
    std::vector<ResourceDescriptor> resources;  // template order
    DocumentValue raw;                          // the original document, round-trippable
};

// Parses an exported template. Accepts both a bare document with a
// top-level "resources" array and the export wrapper {"template": {...}}.
IacTemplate parse_template(std::string_view bytes);
IacTemplate parse_template(DocumentValue doc);
IacTemplate parse_template_file(const std::filesystem::path& path);

} // namespace cloudrisk
