#include "chekprop/corpus/tcs.hpp"

#include <cmath>

#include "chekprop/corpus/virtual_clock.hpp"
#include "chekprop/util/errors.hpp"

namespace chekprop::corpus {

TcsDecision tcs_decide(double temp) {
    if (!std::isfinite(temp)) {
        throw DomainError("tcs_decide: temperature must be finite");
    }
    if (temp < 21.0) return TcsDecision::Heat;
    if (temp > 23.0) return TcsDecision::Cool;
    return TcsDecision::Off;
}

const char* to_string(TcsDecision d) {
    switch (d) {
        case TcsDecision::Heat: return "heat";
        case TcsDecision::Cool: return "cool";
        case TcsDecision::Off: return "off";
    }
    return "?";
}

void TcsConfig::validate() const {
    if (!std::isfinite(total_time) || total_time < 0.0) {
        throw ConfigError("tcs: total_time must be finite and non-negative");
    }
    if (!(sensor_interval > 0.0) || !(control_interval > 0.0)) {
        throw ConfigError("tcs: intervals must be positive");
    }
    if (total_time > 0.0 &&
        total_time < std::max(sensor_interval, control_interval)) {
        throw ConfigError("tcs: total_time shorter than a component interval");
    }
}

std::vector<TcsState> tcs_execute_scenario(const TcsConfig& config, const FaultSpec& fault) {
    config.validate();

    TcsRng rng(config.seed);
    double temp = config.initial_temp ? static_cast<double>(*config.initial_temp)
                                      : static_cast<double>(rng.initial_temp());
    double sampled = temp;    // the sensor reads once at construction
    double heater = 0.0;      // actuation latched by the controller
    double cooler = 0.0;

    std::vector<TcsState> trace;
    const auto plant_ticks = static_cast<std::int64_t>(std::floor(config.total_time));
    trace.reserve(static_cast<std::size_t>(plant_ticks));

    VirtualClock clock;
    clock.schedule_periodic(0.0, config.sensor_interval,
                            periodic_count(config.total_time, config.sensor_interval),
                            [&](double) { sampled = temp; });
    clock.schedule_periodic(0.0, config.control_interval,
                            periodic_count(config.total_time, config.control_interval),
                            [&](double) {
                                switch (tcs_decide(sampled)) {
                                    case TcsDecision::Heat: heater = 1.0; cooler = 0.0; break;
                                    case TcsDecision::Cool: heater = 0.0; cooler = 1.0; break;
                                    case TcsDecision::Off: heater = 0.0; cooler = 0.0; break;
                                }
                            });
    std::int64_t tick = 0;
    clock.schedule_periodic(0.0, 1.0, plant_ticks, [&](double) {
        if (auto forced = fault.override_for("temp", tick)) temp = *forced;
        const double h = fault.override_for("heater_value", tick).value_or(heater);
        const double c = fault.override_for("cooler_value", tick).value_or(cooler);
        double d = rng.disturbance();
        d = fault.override_for("outside_air_temp", tick).value_or(d);
        trace.push_back(TcsState{temp, h, c, d, tick});
        temp = temp + d + h - c;
        ++tick;
    });
    clock.run_until(config.total_time);
    return trace;
}

}  // namespace chekprop::corpus
