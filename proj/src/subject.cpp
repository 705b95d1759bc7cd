#include "chekprop/corpus/subject.hpp"

#include <nlohmann/json.hpp>

#include "chekprop/corpus/pcs.hpp"
#include "chekprop/corpus/tcs.hpp"
#include "chekprop/util/errors.hpp"

namespace chekprop::corpus {

using Kind = StateField::Kind;

double record_value(const StateRecord& record, const std::string& field) {
    for (const auto& [name, value] : record) {
        if (name == field) return value;
    }
    throw LookupError("state field not present: " + field);
}

bool record_has(const StateRecord& record, const std::string& field) {
    for (const auto& [name, value] : record) {
        if (name == field) return true;
    }
    return false;
}

static const std::vector<SubjectInfo>& registry() {
    static const std::vector<SubjectInfo> subjects = {
        {"tcs",
         "Temperature Control System",
         {{"temp", Kind::Number},
          {"heater_value", Kind::Number},
          {"cooler_value", Kind::Number},
          {"outside_air_temp", Kind::Number},
          {"tick", Kind::Integer}},
         "deactivate_actuators",
         true},
        {"pcs",
         "Pneumatic Control System",
         {{"cylinder_a_loc", Kind::Number},
          {"cylinder_b_location", Kind::Number},
          {"a_moving", Kind::Boolean},
          {"b_moving", Kind::Boolean},
          {"tick", Kind::Integer}},
         "stop_cylinders",
         true},
        {"laser_tripwire",
         "Laser Tripwire",
         {{"light_present", Kind::Boolean}, {"intruder_printed", Kind::Boolean}},
         "none",
         false},
        {"line_following_robot",
         "Line Following Robot",
         {{"left_sensor", Kind::Boolean},
          {"right_sensor", Kind::Boolean},
          {"left_motor", Kind::Number},
          {"right_motor", Kind::Number}},
         "stop_motors",
         false},
        {"ultrasonic_theremin",
         "Ultrasonic Theremin",
         {{"distance", Kind::Number}, {"volume", Kind::Number}},
         "none",
         false},
        {"presence_indicator",
         "Presence Indicator",
         {{"present_count", Kind::Integer}, {"lit_leds", Kind::Integer}},
         "none",
         false},
        {"input_device",
         "GPIO InputDevice",
         {{"pull_up_state", Kind::Integer},
          {"active", Kind::Boolean},
          {"in_use", Kind::Boolean}},
         "none",
         false},
    };
    return subjects;
}

const SubjectInfo& subject_info(const std::string& id) {
    for (const auto& s : registry()) {
        if (s.id == id) return s;
    }
    throw LookupError("unknown subject: " + id);
}

std::vector<std::string> subject_ids() {
    std::vector<std::string> ids;
    for (const auto& s : registry()) ids.push_back(s.id);
    return ids;
}

void validate_fault(const std::string& subject_id, const FaultSpec& fault) {
    const auto& info = subject_info(subject_id);
    for (const auto& clause : fault.clauses) {
        bool known = false;
        for (const auto& field : info.schema) {
            if (field.name == clause.field) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw LookupError("fault targets unknown field '" + clause.field +
                              "' of subject " + subject_id);
        }
    }
}

namespace {

class TcsSession final : public MonitorSession {
public:
    TcsSession(std::uint64_t seed, FaultSpec fault)
        : rng_(seed), fault_(std::move(fault)) {
        temp_ = static_cast<double>(rng_.initial_temp());
    }

    void begin_tick(std::int64_t tick) override {
        tick_ = tick;
        if (auto forced = fault_.override_for("temp", tick)) temp_ = *forced;
        const double sampled = temp_;  // sensor
        double heater = 0.0, cooler = 0.0;
        switch (tcs_decide(sampled)) {
            case TcsDecision::Heat: heater = 1.0; break;
            case TcsDecision::Cool: cooler = 1.0; break;
            case TcsDecision::Off: break;
        }
        heater_ = fault_.override_for("heater_value", tick).value_or(heater);
        cooler_ = fault_.override_for("cooler_value", tick).value_or(cooler);
        double d = rng_.disturbance();
        disturbance_ = fault_.override_for("outside_air_temp", tick).value_or(d);
    }

    StateRecord predict() const override {
        return make_record(temp_ + disturbance_ + heater_ - cooler_, heater_, cooler_);
    }

    StateRecord predict_safe() const override {
        return make_record(temp_ + disturbance_, 0.0, 0.0);
    }

    StateRecord commit(bool use_safe) override {
        const StateRecord record = use_safe ? predict_safe() : predict();
        temp_ = record_value(record, "temp");
        return record;
    }

private:
    StateRecord make_record(double next_temp, double h, double c) const {
        return {{"temp", next_temp},
                {"heater_value", h},
                {"cooler_value", c},
                {"outside_air_temp", disturbance_},
                {"tick", static_cast<double>(tick_)}};
    }

    TcsRng rng_;
    FaultSpec fault_;
    double temp_ = 22.0;
    double heater_ = 0.0;
    double cooler_ = 0.0;
    double disturbance_ = 0.0;
    std::int64_t tick_ = 0;
};

class PcsSession final : public MonitorSession {
public:
    PcsSession(std::uint64_t, FaultSpec fault) : fault_(std::move(fault)) {}

    void begin_tick(std::int64_t tick) override {
        tick_ = tick;
        staged_a_ = a_loc_;
        staged_b_ = b_loc_;
        const double dt = first_tick_ ? 0.0 : 1.0;
        first_tick_ = false;
        if (controller_.command().a_commanded) {
            staged_a_ = detail::cylinder_step(a_loc_, controller_.command().a_target,
                                              kPcsCylinderSpeed, dt);
        }
        if (controller_.command().b_commanded) {
            staged_b_ = detail::cylinder_step(b_loc_, controller_.command().b_target,
                                              kPcsCylinderSpeed, dt);
        }
        if (auto f = fault_.override_for("cylinder_a_loc", tick)) staged_a_ = *f;
        if (auto f = fault_.override_for("cylinder_b_location", tick)) staged_b_ = *f;
        controller_.update(staged_a_, staged_b_);
        staged_a_moving_ = controller_.command().a_commanded;
        staged_b_moving_ = controller_.command().b_commanded;
        if (auto f = fault_.override_for("a_moving", tick)) staged_a_moving_ = *f != 0.0;
        if (auto f = fault_.override_for("b_moving", tick)) staged_b_moving_ = *f != 0.0;
    }

    StateRecord predict() const override {
        return make_record(staged_a_, staged_b_, staged_a_moving_, staged_b_moving_);
    }

    StateRecord predict_safe() const override {
        return make_record(a_loc_, b_loc_, false, false);
    }

    StateRecord commit(bool use_safe) override {
        const StateRecord record = use_safe ? predict_safe() : predict();
        a_loc_ = record_value(record, "cylinder_a_loc");
        b_loc_ = record_value(record, "cylinder_b_location");
        return record;
    }

private:
    StateRecord make_record(double a, double b, bool am, bool bm) const {
        return {{"cylinder_a_loc", a},
                {"cylinder_b_location", b},
                {"a_moving", am ? 1.0 : 0.0},
                {"b_moving", bm ? 1.0 : 0.0},
                {"tick", static_cast<double>(tick_)}};
    }

    FaultSpec fault_;
    detail::PickAndPlaceController controller_;
    double a_loc_ = 0.0;
    double b_loc_ = 0.0;
    double staged_a_ = 0.0;
    double staged_b_ = 0.0;
    bool staged_a_moving_ = false;
    bool staged_b_moving_ = false;
    bool first_tick_ = true;
    std::int64_t tick_ = 0;
};

}  // namespace

std::unique_ptr<MonitorSession> make_session(const std::string& subject_id,
                                             std::uint64_t seed, const FaultSpec& fault) {
    const auto& info = subject_info(subject_id);
    if (!info.monitorable) {
        throw ConfigError("subject has no control loop to monitor: " + subject_id);
    }
    validate_fault(subject_id, fault);
    if (subject_id == "tcs") return std::make_unique<TcsSession>(seed, fault);
    return std::make_unique<PcsSession>(seed, fault);
}

std::vector<StateRecord> SubjectExecutor::run(std::int64_t ticks, std::uint64_t seed) const {
    auto session = make_session(subject_id, seed, fault);
    std::vector<StateRecord> trace;
    trace.reserve(static_cast<std::size_t>(ticks));
    for (std::int64_t t = 0; t < ticks; ++t) {
        session->begin_tick(t);
        trace.push_back(session->commit(false));
    }
    return trace;
}

SubjectExecutor make_executor(const std::string& subject_id, const FaultSpec& fault) {
    subject_info(subject_id);
    validate_fault(subject_id, fault);
    return SubjectExecutor{subject_id, fault};
}

std::string trace_to_jsonl(const std::vector<StateRecord>& trace,
                           const std::vector<StateField>& schema) {
    const auto kind_of = [&](const std::string& name) {
        for (const auto& field : schema) {
            if (field.name == name) return field.kind;
        }
        return Kind::Number;
    };
    std::string out;
    for (const auto& record : trace) {
        nlohmann::ordered_json line;
        for (const auto& [name, value] : record) {
            switch (kind_of(name)) {
                case Kind::Integer: line[name] = static_cast<std::int64_t>(value); break;
                case Kind::Boolean: line[name] = value != 0.0; break;
                case Kind::Number: line[name] = value; break;
            }
        }
        out += line.dump();
        out += "\n";
    }
    return out;
}

}  // namespace chekprop::corpus
