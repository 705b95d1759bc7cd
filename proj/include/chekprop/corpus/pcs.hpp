#pragma once

#include <cstdint>
#include <vector>

#include "chekprop/corpus/fault.hpp"

namespace chekprop::corpus {

/// Cylinder positions are in [0, 2]. For the vertical cylinder 0 is raised
/// and 2 is lowered; for the horizontal cylinder 0 is the home end.
struct PcsState {
    double cylinder_a_loc = 0.0;       // horizontal
    double cylinder_b_location = 0.0;  // vertical
    bool a_moving = false;
    bool b_moving = false;
    std::int64_t tick = 0;

    bool operator==(const PcsState&) const = default;
};

struct PcsConfig {
    double total_time = 40.0;
    double cylinder_interval = 1.0;
    double controller_interval = 1.0;
    double mock_interval = 1.0;
    std::uint64_t seed = 0;

    void validate() const;  // throws ConfigError
};

inline constexpr double kPcsCylinderSpeed = 1.0;  // position units per second

/// Runs the pick-and-place cycle: vertical down and up, horizontal traverse,
/// vertical down and up, horizontal return, repeating. The controller
/// commands at most one cylinder at a time and only moves the horizontal
/// cylinder while the vertical one is raised. Cylinder displacement is
/// bounded by speed x elapsed time, so consecutive recorded states never
/// differ by more than speed x mock_interval.
std::vector<PcsState> pcs_execute_scenario(const PcsConfig& config,
                                           const FaultSpec& fault = {});

namespace detail {

/// One clamped movement step toward a target.
double cylinder_step(double loc, double target, double speed, double dt);

/// Phase controller shared by the scenario executor and the monitor session.
/// Targets cycle through the pick-and-place order.
class PickAndPlaceController {
public:
    struct Command {
        bool a_commanded = false;
        bool b_commanded = false;
        double a_target = 0.0;
        double b_target = 0.0;
    };

    /// Acknowledges arrivals, advances the phase, and issues the next
    /// movement command. Called once per controller tick.
    void update(double a_loc, double b_loc);

    const Command& command() const { return command_; }

private:
    int phase_ = -1;  // -1: nothing commanded yet
    Command command_;
};

}  // namespace detail

}  // namespace chekprop::corpus
