#include "chekprop/util/paths.hpp"

#include <cstdlib>

#ifndef CHEKPROP_SHARE_DIR
#define CHEKPROP_SHARE_DIR ""
#endif
#ifndef CHEKPROP_PYTHON_DIR
#define CHEKPROP_PYTHON_DIR ""
#endif

namespace chekprop::paths {

static fs::path from_env(const char* var, const char* fallback) {
    if (const char* v = std::getenv(var); v && *v) {
        return fs::path(v);
    }
    return fs::path(fallback);
}

fs::path share_dir() {
    return from_env("CHEKPROP_SHARE", CHEKPROP_SHARE_DIR);
}

fs::path python_dir() {
    return from_env("CHEKPROP_PYDIR", CHEKPROP_PYTHON_DIR);
}

fs::path python_exe() {
    return from_env("CHEKPROP_PYTHON", "python3");
}

fs::path runner_script() {
    return python_dir() / "chekprop" / "runner.py";
}

}  // namespace chekprop::paths
