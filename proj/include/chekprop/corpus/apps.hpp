#pragma once

#include <map>
#include <string>

#include "chekprop/corpus/subject.hpp"

namespace chekprop::corpus {

struct LaserTripwireState {
    bool light_present = false;
    bool intruder_printed = false;
};

/// "INTRUDER" is printed exactly when the beam is broken.
LaserTripwireState laser_tripwire_step(bool light_present);

struct LfrMotors {
    double left_motor = 0.0;
    double right_motor = 0.0;
};

/// Differential steering at speed s in (0, 1]: the active-side motor reverses
/// to pivot back onto the line; with no line under either sensor both motors
/// drive forward.
LfrMotors line_following_robot_step(bool left_sensor, bool right_sensor, double speed);

inline constexpr double kThereminMaxRange = 2.0;  // meters

/// Volume falls off linearly with distance, clamped to [0, 1].
/// Throws DomainError for a negative distance.
double theremin_volume(double distance, double max_range = kThereminMaxRange);

inline constexpr int kPresenceLedCount = 4;

/// LEDs show the head count divided by ten, saturated at the bar length.
/// Throws DomainError for negative counts.
int presence_lit_leds(int present_count, int led_count = kPresenceLedCount);

/// Generic dispatcher over the pin-based apps: runs one step of `app_id`
/// with named inputs and returns the app's observable state record.
/// Throws LookupError for unknown apps and DomainError for bad inputs.
StateRecord app_step(const std::string& app_id,
                     const std::map<std::string, double>& inputs);

}  // namespace chekprop::corpus
