#pragma once

#include <string>

namespace meyerlab::io {

// Whole file as text. Throws UsageError if it cannot be read.
std::string read_text_file(const std::string& path);

// Writes to a temporary file in the same directory, then renames it over
// `path`, so readers never see a partial file. Throws ResourceError.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace meyerlab::io
