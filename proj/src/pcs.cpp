#include "chekprop/corpus/pcs.hpp"

#include <array>
#include <cmath>

#include "chekprop/corpus/virtual_clock.hpp"
#include "chekprop/util/errors.hpp"

namespace chekprop::corpus {

void PcsConfig::validate() const {
    if (!std::isfinite(total_time) || total_time < 0.0) {
        throw ConfigError("pcs: total_time must be finite and non-negative");
    }
    if (!(cylinder_interval > 0.0) || !(controller_interval > 0.0) ||
        !(mock_interval > 0.0)) {
        throw ConfigError("pcs: intervals must be positive");
    }
}

namespace detail {

double cylinder_step(double loc, double target, double speed, double dt) {
    const double limit = speed * dt;
    const double delta = target - loc;
    if (delta > limit) return loc + limit;
    if (delta < -limit) return loc - limit;
    return target;
}

namespace {
// which cylinder ('a' horizontal, 'b' vertical) and its target per phase
struct Phase {
    char cylinder;
    double target;
};
constexpr std::array<Phase, 6> kCycle = {{
    {'b', 2.0},  // lower to pick
    {'b', 0.0},  // raise
    {'a', 2.0},  // traverse
    {'b', 2.0},  // lower to place
    {'b', 0.0},  // raise
    {'a', 0.0},  // return home
}};
}  // namespace

void PickAndPlaceController::update(double a_loc, double b_loc) {
    if (phase_ >= 0) {
        const Phase& current = kCycle[static_cast<std::size_t>(phase_)];
        const double loc = current.cylinder == 'a' ? a_loc : b_loc;
        if (loc != current.target) return;  // still traveling
    }
    phase_ = (phase_ + 1) % static_cast<int>(kCycle.size());
    const Phase& next = kCycle[static_cast<std::size_t>(phase_)];
    command_ = Command{};
    if (next.cylinder == 'a') {
        command_.a_commanded = true;
        command_.a_target = next.target;
    } else {
        command_.b_commanded = true;
        command_.b_target = next.target;
    }
}

}  // namespace detail

std::vector<PcsState> pcs_execute_scenario(const PcsConfig& config, const FaultSpec& fault) {
    config.validate();

    double a_loc = 0.0;
    double b_loc = 0.0;
    double a_last = 0.0;  // time of each cylinder's previous step
    double b_last = 0.0;
    detail::PickAndPlaceController controller;

    std::vector<PcsState> trace;
    VirtualClock clock;
    const auto cyl_count = periodic_count(config.total_time, config.cylinder_interval);
    clock.schedule_periodic(0.0, config.cylinder_interval, cyl_count, [&](double now) {
        const double dt = now - a_last;
        a_last = now;
        if (controller.command().a_commanded) {
            a_loc = detail::cylinder_step(a_loc, controller.command().a_target,
                                          kPcsCylinderSpeed, dt);
        }
    });
    clock.schedule_periodic(0.0, config.cylinder_interval, cyl_count, [&](double now) {
        const double dt = now - b_last;
        b_last = now;
        if (controller.command().b_commanded) {
            b_loc = detail::cylinder_step(b_loc, controller.command().b_target,
                                          kPcsCylinderSpeed, dt);
        }
    });
    clock.schedule_periodic(0.0, config.controller_interval,
                            periodic_count(config.total_time, config.controller_interval),
                            [&](double) { controller.update(a_loc, b_loc); });
    std::int64_t tick = 0;
    clock.schedule_periodic(0.0, config.mock_interval,
                            periodic_count(config.total_time, config.mock_interval),
                            [&](double) {
                                if (auto f = fault.override_for("cylinder_a_loc", tick)) a_loc = *f;
                                if (auto f = fault.override_for("cylinder_b_location", tick)) b_loc = *f;
                                bool a_moving = controller.command().a_commanded;
                                bool b_moving = controller.command().b_commanded;
                                if (auto f = fault.override_for("a_moving", tick)) a_moving = *f != 0.0;
                                if (auto f = fault.override_for("b_moving", tick)) b_moving = *f != 0.0;
                                trace.push_back(PcsState{a_loc, b_loc, a_moving, b_moving, tick});
                                ++tick;
                            });
    clock.run_until(config.total_time);
    return trace;
}

}  // namespace chekprop::corpus
