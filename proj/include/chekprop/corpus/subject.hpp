#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chekprop/corpus/fault.hpp"

namespace chekprop::corpus {

struct StateField {
    enum class Kind { Number, Integer, Boolean };
    std::string name;
    Kind kind = Kind::Number;
};

/// A state snapshot in schema order. Booleans are stored as 0/1.
using StateRecord = std::vector<std::pair<std::string, double>>;

double record_value(const StateRecord& record, const std::string& field);
bool record_has(const StateRecord& record, const std::string& field);

/// Per-tick control-loop decomposition used by the runtime monitor: the
/// controller proposes, the monitor inspects the predicted next state, and
/// either the proposed or the safe command is committed. One tick per second.
class MonitorSession {
public:
    virtual ~MonitorSession() = default;

    /// Runs sensing and control for this tick and stages the proposed
    /// command (with any fault overrides applied).
    virtual void begin_tick(std::int64_t tick) = 0;

    /// State that results if the proposed command is applied.
    virtual StateRecord predict() const = 0;

    /// State that results if the subject's safe command is applied instead.
    virtual StateRecord predict_safe() const = 0;

    /// Applies the chosen command and returns the recorded state.
    virtual StateRecord commit(bool use_safe) = 0;
};

struct SubjectInfo {
    std::string id;
    std::string title;
    std::vector<StateField> schema;
    std::string safe_command;  // identifier, e.g. "deactivate_actuators"
    bool monitorable = false;
};

/// Registry of corpus subjects. Throws LookupError for unknown ids.
const SubjectInfo& subject_info(const std::string& id);
std::vector<std::string> subject_ids();

/// Validates that every fault clause targets a schema field of the subject.
/// Throws LookupError otherwise.
void validate_fault(const std::string& subject_id, const FaultSpec& fault);

/// Creates a monitor session for a monitorable subject (tcs, pcs).
/// Throws ConfigError for non-monitorable subjects.
std::unique_ptr<MonitorSession> make_session(const std::string& subject_id,
                                             std::uint64_t seed,
                                             const FaultSpec& fault = {});

/// Scenario executor bound to a subject and fault descriptor; runs the
/// default-cadence scenario and returns schema-ordered records.
/// An empty fault leaves the executor identical to the healthy one.
struct SubjectExecutor {
    std::string subject_id;
    FaultSpec fault;

    std::vector<StateRecord> run(std::int64_t ticks, std::uint64_t seed = 0) const;
};

SubjectExecutor make_executor(const std::string& subject_id, const FaultSpec& fault = {});

/// Serializes a trace as line-delimited JSON records, fields in schema order
/// with the subject's field types.
std::string trace_to_jsonl(const std::vector<StateRecord>& trace,
                           const std::vector<StateField>& schema);

}  // namespace chekprop::corpus
