#pragma once

#include <filesystem>
#include <string>

namespace chekprop::fsio {

namespace fs = std::filesystem;

// Reads a whole file as bytes. Throws IoError naming the path.
std::string read_file(const fs::path& path);

// Writes bytes, creating parent directories. Throws IoError naming the path.
void write_file(const fs::path& path, const std::string& content);

// SHA-256 hex digest of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace chekprop::fsio
