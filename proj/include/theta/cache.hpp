#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "theta/bigint.hpp"

namespace theta::cache {

// Cache files are plain text: a header line
//     theta-taylor-cache v1 kind=<kind>
// followed by one record per line, values as decimal strings. Writes go
// through a temp file in the same directory plus a rename, so a cache file
// is either the old version or the complete new one.

inline constexpr std::string_view kMagic = "theta-taylor-cache";
inline constexpr std::string_view kVersion = "v1";

std::string header_line(std::string_view kind);

// Atomically replace `path` with `content`.
void atomic_write_text(const std::filesystem::path& path, const std::string& content);

// Dense value list (kinds u, v, d): line i is "<i> <value>".
void save_values(const std::filesystem::path& path, std::string_view kind,
                 const std::vector<BigInt>& values);

// Parses and validates a dense value cache. Throws std::runtime_error on any
// format problem (bad header, wrong kind, gap in indices, junk trailing text).
std::vector<BigInt> load_values(const std::filesystem::path& path, std::string_view kind);

// Validates the header line and returns the remaining lines.
std::vector<std::string> load_lines(const std::filesystem::path& path, std::string_view kind);

}  // namespace theta::cache
