#include "chekprop/corpus/apps.hpp"

#include <algorithm>
#include <cmath>

#include "chekprop/util/errors.hpp"

namespace chekprop::corpus {

LaserTripwireState laser_tripwire_step(bool light_present) {
    return LaserTripwireState{light_present, !light_present};
}

LfrMotors line_following_robot_step(bool left_sensor, bool right_sensor, double speed) {
    if (!std::isfinite(speed) || speed < 0.0 || speed > 1.0) {
        throw DomainError("line_following_robot: speed must be in [0, 1]");
    }
    if (left_sensor && !right_sensor) return LfrMotors{-speed, speed};
    if (right_sensor && !left_sensor) return LfrMotors{speed, -speed};
    return LfrMotors{speed, speed};
}

double theremin_volume(double distance, double max_range) {
    if (!std::isfinite(distance) || distance < 0.0) {
        throw DomainError("theremin: distance must be non-negative");
    }
    if (!(max_range > 0.0)) {
        throw DomainError("theremin: max_range must be positive");
    }
    return std::clamp(1.0 - distance / max_range, 0.0, 1.0);
}

int presence_lit_leds(int present_count, int led_count) {
    if (present_count < 0) {
        throw DomainError("presence_indicator: present_count must be non-negative");
    }
    if (led_count < 0) {
        throw DomainError("presence_indicator: led_count must be non-negative");
    }
    return std::min(present_count / 10, led_count);
}

static double input_of(const std::map<std::string, double>& inputs,
                       const std::string& name, std::optional<double> fallback = {}) {
    auto it = inputs.find(name);
    if (it != inputs.end()) return it->second;
    if (fallback) return *fallback;
    throw LookupError("app_step: missing input '" + name + "'");
}

StateRecord app_step(const std::string& app_id,
                     const std::map<std::string, double>& inputs) {
    if (app_id == "laser_tripwire") {
        const auto s = laser_tripwire_step(input_of(inputs, "light_present") != 0.0);
        return {{"light_present", s.light_present ? 1.0 : 0.0},
                {"intruder_printed", s.intruder_printed ? 1.0 : 0.0}};
    }
    if (app_id == "line_following_robot") {
        const bool left = input_of(inputs, "left_sensor") != 0.0;
        const bool right = input_of(inputs, "right_sensor") != 0.0;
        const double speed = input_of(inputs, "speed", 1.0);
        const auto m = line_following_robot_step(left, right, speed);
        return {{"left_sensor", left ? 1.0 : 0.0},
                {"right_sensor", right ? 1.0 : 0.0},
                {"left_motor", m.left_motor},
                {"right_motor", m.right_motor}};
    }
    if (app_id == "ultrasonic_theremin") {
        const double distance = input_of(inputs, "distance");
        const double range = input_of(inputs, "max_range", kThereminMaxRange);
        return {{"distance", distance}, {"volume", theremin_volume(distance, range)}};
    }
    if (app_id == "presence_indicator") {
        const double count = input_of(inputs, "present_count");
        if (count < 0.0 || count != std::floor(count)) {
            throw DomainError("presence_indicator: present_count must be a non-negative integer");
        }
        const double leds = input_of(inputs, "led_count", kPresenceLedCount);
        const int lit = presence_lit_leds(static_cast<int>(count), static_cast<int>(leds));
        return {{"present_count", count}, {"lit_leds", static_cast<double>(lit)}};
    }
    throw LookupError("app_step: unknown app '" + app_id + "'");
}

}  // namespace chekprop::corpus
