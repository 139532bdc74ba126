#pragma once

#include <filesystem>
#include <string_view>

namespace ajc {

// Writes to a sibling temporary file and renames it over the destination.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

}  // namespace ajc
