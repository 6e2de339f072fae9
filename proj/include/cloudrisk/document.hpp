#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cloudrisk/errors.hpp"

namespace cloudrisk {

// Resource configurations are plain JSON-shaped documents: null, bool,
// number, string, array, or string-keyed map. The default nlohmann object
// type keeps keys in lexicographic order, which gives us deterministic
// serialization for free.
using DocumentValue = nlohmann::json;

// Parses UTF-8 text into a document. Throws Error(malformed_document) with
// the parser's position info on bad input.
DocumentValue parse_document(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// 64-bit FNV-1a. std::hash is implementation-defined, and report
// fingerprints must be stable across builds and platforms.
class Fingerprint {
public:
    Fingerprint& update(std::string_view bytes);
    std::uint64_t value() const noexcept { return state_; }
    std::string hex() const;

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

} // namespace cloudrisk
