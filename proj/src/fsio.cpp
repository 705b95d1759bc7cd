#include "chekprop/util/fsio.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "chekprop/util/errors.hpp"

namespace chekprop::fsio {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed: " + path.string());
    }
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write file: " + path.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int md_len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &md_len, EVP_sha256(), nullptr)) {
        throw Error("sha256 digest failed");
    }
    static const char* hexdig = "0123456789abcdef";
    std::string out;
    out.reserve(md_len * 2);
    for (unsigned int i = 0; i < md_len; ++i) {
        out.push_back(hexdig[md[i] >> 4]);
        out.push_back(hexdig[md[i] & 0xF]);
    }
    return out;
}

}  // namespace chekprop::fsio
