#include "chekprop/corpus/pins.hpp"

#include <string>

#include "chekprop/util/errors.hpp"

namespace chekprop::corpus {

void MockPin::set_pull(PinPull pull) {
    pull_ = pull;
    // the internal resistor settles the line
    if (pull == PinPull::Up) level_ = PinLevel::High;
    if (pull == PinPull::Down) level_ = PinLevel::Low;
}

std::shared_ptr<MockPin> MockPinFactory::claim(int number) {
    auto& slot = pins_[number];
    if (!slot) slot = std::make_shared<MockPin>(number);
    if (slot->in_use()) {
        throw PinInUseError("pin " + std::to_string(number) + " is already in use");
    }
    slot->in_use_ = true;
    return slot;
}

std::shared_ptr<MockPin> MockPinFactory::peek(int number) {
    auto& slot = pins_[number];
    if (!slot) slot = std::make_shared<MockPin>(number);
    return slot;
}

void MockPinFactory::release(int number) {
    auto it = pins_.find(number);
    if (it != pins_.end()) it->second->in_use_ = false;
}

void MockPinFactory::reset() {
    for (auto& [number, pin] : pins_) {
        // keep the shared objects alive for holders, but back to power-on state
        pin->in_use_ = false;
        pin->function_ = PinFunction::Input;
        pin->pull_ = PinPull::Floating;
        pin->level_ = PinLevel::Low;
    }
}

InputDeviceModel::InputDeviceModel(MockPinFactory& factory, int pin_number,
                                   std::optional<bool> pull_up,
                                   std::optional<bool> active_state)
    : factory_(&factory), pull_up_(pull_up) {
    pin_ = factory.claim(pin_number);
    try {
        pin_->set_function(PinFunction::Input);
        if (!pull_up) {
            pin_->set_pull(PinPull::Floating);
            if (!active_state) {
                throw PinInvalidStateError(
                    "pin " + std::to_string(pin_number) +
                    " is floating, but active_state is not set");
            }
            active_high_ = *active_state;
        } else {
            if (active_state) {
                throw PinInvalidStateError(
                    "pin " + std::to_string(pin_number) +
                    " is not floating, but active_state is set");
            }
            pin_->set_pull(*pull_up ? PinPull::Up : PinPull::Down);
            // pulled-up inputs read active when the line is driven low
            active_high_ = !*pull_up;
        }
    } catch (...) {
        close();
        throw;
    }
}

bool InputDeviceModel::is_active() const {
    if (!pin_) {
        throw PinInvalidStateError("device is closed");
    }
    const bool high = pin_->level() == PinLevel::High;
    return high == active_high_;
}

void InputDeviceModel::close() {
    if (pin_) {
        factory_->release(pin_->number());
        pin_.reset();
    }
}

}  // namespace chekprop::corpus
