#pragma once

#include <filesystem>

namespace chekprop::paths {

namespace fs = std::filesystem;

// Data directory holding templates, subject manifests, and fixtures.
// CHEKPROP_SHARE overrides the compiled-in default.
fs::path share_dir();

// Directory containing the `chekprop` python package (added to PYTHONPATH of
// analyzer children). CHEKPROP_PYDIR overrides.
fs::path python_dir();

// Python interpreter used for PBT execution. CHEKPROP_PYTHON overrides.
fs::path python_exe();

// The analyzer child runner script inside the python package.
fs::path runner_script();

}  // namespace chekprop::paths
