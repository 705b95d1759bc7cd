#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace chekprop {

/// The three-part input a generation run needs: what the system should do,
/// its source, and at least one unit test showing how a test body drives it.
struct InputBundle {
    std::string subject_id;
    std::string description;
    std::vector<std::pair<std::string, std::string>> code_files;       // (relative path, text)
    std::vector<std::pair<std::string, std::string>> unit_test_files;  // (relative path, text)

    bool operator==(const InputBundle&) const = default;
};

/// Loads and validates a bundle from a subject manifest. File contents are
/// read verbatim; list order follows the manifest. Throws BundleError for
/// validation failures and IoError (naming the path) for unreadable files.
InputBundle load_bundle(const std::filesystem::path& manifest_path);

}  // namespace chekprop
