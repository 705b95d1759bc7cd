#include "chekprop/corpus/fault.hpp"

#include <cstdlib>
#include <sstream>

#include "chekprop/util/errors.hpp"

namespace chekprop::corpus {

std::optional<double> FaultSpec::override_for(const std::string& field,
                                              std::int64_t tick) const {
    std::optional<double> result;
    for (const auto& c : clauses) {
        if (c.field != field) continue;
        if (c.at_tick && *c.at_tick != tick) continue;
        result = c.value;
    }
    return result;
}

static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

FaultSpec FaultSpec::parse(const std::string& text) {
    FaultSpec spec;
    std::string part;
    std::istringstream stream(text);
    std::string normalized = text;
    for (auto& ch : normalized) {
        if (ch == ',') ch = ';';
    }
    std::istringstream parts(normalized);
    while (std::getline(parts, part, ';')) {
        part = trim(part);
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("fault clause missing '=': " + part);
        }
        FaultClause clause;
        clause.field = trim(part.substr(0, eq));
        std::string rhs = trim(part.substr(eq + 1));
        const auto at = rhs.find('@');
        if (at != std::string::npos) {
            clause.at_tick = std::strtoll(rhs.substr(at + 1).c_str(), nullptr, 10);
            rhs = trim(rhs.substr(0, at));
        }
        char* end = nullptr;
        clause.value = std::strtod(rhs.c_str(), &end);
        if (clause.field.empty() || end == rhs.c_str()) {
            throw ConfigError("malformed fault clause: " + part);
        }
        spec.clauses.push_back(std::move(clause));
    }
    return spec;
}

std::string FaultSpec::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        if (i) out << ";";
        out << clauses[i].field << "=" << clauses[i].value;
        if (clauses[i].at_tick) out << "@" << *clauses[i].at_tick;
    }
    return out.str();
}

}  // namespace chekprop::corpus
