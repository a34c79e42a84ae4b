#pragma once

#include <filesystem>
#include <string>

namespace eigenpoly {

// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace eigenpoly
