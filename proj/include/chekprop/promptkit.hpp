#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chekprop/bundle.hpp"

namespace chekprop {

enum class Role { System, User, Assistant };

const char* to_string(Role role);
Role role_from_string(const std::string& name);

struct Message {
    Role role = Role::User;
    std::string text;

    bool operator==(const Message&) const = default;
};

/// Append-only transcript; improvement messages always follow the initial
/// prompt and the assistant replies already exchanged.
struct Conversation {
    std::vector<Message> messages;

    void append(Role role, std::string text);
    bool operator==(const Conversation&) const = default;
};

/// Fixed delimiter lines between the four prompt sections, exposed so tests
/// and the extraction of section boundaries stay exact.
namespace prompt_markers {
inline constexpr const char* kSection1 = "### SECTION 1: SYSTEM DESCRIPTION ###";
inline constexpr const char* kSection2 = "### SECTION 2: SOURCE CODE ###";
inline constexpr const char* kSection3 = "### SECTION 3: EXAMPLE UNIT TESTS ###";
inline constexpr const char* kSection4 = "### SECTION 4: TASK ###";
inline constexpr const char* kFileHeader = "--- file: ";  // + path + " ---"
}  // namespace prompt_markers

/// Versioned prompt wording loaded from the template directory.
struct PromptTemplates {
    std::string initial;      // with {{DESCRIPTION}}, {{CODE}}, {{UNIT_TESTS}} slots
    std::string improvement;  // with {{FAILURES}} slot

    static PromptTemplates load(const std::filesystem::path& template_dir);
    /// Loads from paths::share_dir()/templates.
    static PromptTemplates load_default();
};

/// One failed PBT presented back to the model.
struct FailureEntry {
    std::string test_name;
    std::string source;
    std::string outcome_class;
    std::string error_text;
};

/// Builds the four-section initial prompt as a single user message.
/// Byte-deterministic in (templates, bundle).
Conversation build_initial_prompt(const InputBundle& bundle, const PromptTemplates& templates);

/// Builds the improvement message enumerating the failures in input order.
/// Throws ContractError when `failures` is empty.
Message build_improvement_message(const std::vector<FailureEntry>& failures,
                                  const PromptTemplates& templates);

}  // namespace chekprop
