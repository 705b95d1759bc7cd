#include "chekprop/bundle.hpp"

#include <nlohmann/json.hpp>

#include "chekprop/util/errors.hpp"
#include "chekprop/util/fsio.hpp"

namespace chekprop {

namespace fs = std::filesystem;
using nlohmann::json;

InputBundle load_bundle(const fs::path& manifest_path) {
    json manifest;
    try {
        manifest = json::parse(fsio::read_file(manifest_path));
    } catch (const json::exception& e) {
        throw BundleError("malformed manifest " + manifest_path.string() + ": " + e.what());
    }

    const fs::path base = manifest_path.parent_path();
    const auto resolve = [&](const std::string& rel) { return base / rel; };

    InputBundle bundle;
    bundle.subject_id = manifest.value("subject_id", "");
    if (bundle.subject_id.empty()) {
        throw BundleError("manifest missing subject_id");
    }

    if (!manifest.contains("description_path")) {
        throw BundleError("description required");
    }
    bundle.description = fsio::read_file(resolve(manifest["description_path"]));
    if (bundle.description.empty()) {
        throw BundleError("description required");
    }

    for (const auto& rel : manifest.value("code_paths", std::vector<std::string>{})) {
        bundle.code_files.emplace_back(rel, fsio::read_file(resolve(rel)));
    }
    if (bundle.code_files.empty()) {
        throw BundleError("at least one code file required");
    }

    for (const auto& rel : manifest.value("unit_test_paths", std::vector<std::string>{})) {
        bundle.unit_test_files.emplace_back(rel, fsio::read_file(resolve(rel)));
    }
    if (bundle.unit_test_files.empty()) {
        throw BundleError("unit test required");
    }
    return bundle;
}

}  // namespace chekprop
