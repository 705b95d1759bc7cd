#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chekprop::corpus {

/// One forced override: pin `field` to `value`, either at a single tick or
/// for the whole scenario. Fields are state-schema names; validation against
/// the target subject happens when an executor is built.
struct FaultClause {
    std::string field;
    double value = 0.0;
    std::optional<std::int64_t> at_tick;  // nullopt = every tick
};

struct FaultSpec {
    std::vector<FaultClause> clauses;

    bool empty() const { return clauses.empty(); }

    /// Returns the override for `field` at `tick`, if any. Later clauses win.
    std::optional<double> override_for(const std::string& field, std::int64_t tick) const;

    /// Parses "field=value[@tick]" clauses separated by ';' or ','.
    /// Example: "cylinder_a_loc=2.5@5" or "cooler_value=0;outside_air_temp=1".
    static FaultSpec parse(const std::string& text);

    std::string to_string() const;
};

}  // namespace chekprop::corpus
