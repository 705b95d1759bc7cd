#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "chekprop/corpus/fault.hpp"

namespace chekprop::corpus {

enum class TcsDecision { Heat, Cool, Off };

/// Control law: off inside the closed band [21, 23], heat below, cool above.
/// Throws DomainError for non-finite input.
TcsDecision tcs_decide(double temp);

const char* to_string(TcsDecision d);

/// One recorded plant tick. `temp` is the room temperature before this tick's
/// update; the actuation and disturbance recorded here produce the next one.
struct TcsState {
    double temp = 0.0;
    double heater_value = 0.0;
    double cooler_value = 0.0;
    double outside_air_temp = 0.0;
    std::int64_t tick = 0;

    bool operator==(const TcsState&) const = default;
};

struct TcsConfig {
    double total_time = 10.0;
    double sensor_interval = 1.0;
    double control_interval = 1.0;
    std::optional<int> initial_temp;  // default: uniform integer in 20..24
    std::uint64_t seed = 0;

    void validate() const;  // throws ConfigError
};

/// Runs the temperature-control scenario on a virtual clock: the sensor
/// samples every sensor_interval, the controller decides every
/// control_interval, the plant records and updates once per second with
/// temp' = temp + outside_air_temp + heater_value - cooler_value.
/// Identical (config, seed) gives an identical trace.
std::vector<TcsState> tcs_execute_scenario(const TcsConfig& config,
                                           const FaultSpec& fault = {});

/// Seeded draws for TCS randomness. Raw engine output is mapped by modulus so
/// traces are bit-identical across standard libraries.
class TcsRng {
public:
    explicit TcsRng(std::uint64_t seed) : engine_(seed) {}
    int initial_temp() { return 20 + static_cast<int>(engine_() % 5); }
    // Window disturbance per tick, one degree at most in either direction.
    double disturbance() { return static_cast<double>(static_cast<int>(engine_() % 3) - 1); }

private:
    std::mt19937_64 engine_;
};

}  // namespace chekprop::corpus
