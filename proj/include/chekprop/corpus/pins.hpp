#pragma once

#include <map>
#include <memory>
#include <optional>

namespace chekprop::corpus {

enum class PinFunction { Input, Output };
enum class PinPull { Up, Down, Floating };
enum class PinLevel { High, Low };

/// A simulated GPIO pin. External hardware is modeled by drive_high/drive_low;
/// setting the pull also settles the level the resistor holds the pin at.
class MockPin {
public:
    explicit MockPin(int number) : number_(number) {}

    int number() const { return number_; }
    PinFunction function() const { return function_; }
    void set_function(PinFunction f) { function_ = f; }
    PinPull pull() const { return pull_; }
    void set_pull(PinPull pull);
    PinLevel level() const { return level_; }
    bool in_use() const { return in_use_; }

    void drive_high() { level_ = PinLevel::High; }
    void drive_low() { level_ = PinLevel::Low; }

private:
    friend class MockPinFactory;
    int number_;
    PinFunction function_ = PinFunction::Input;
    PinPull pull_ = PinPull::Floating;
    PinLevel level_ = PinLevel::Low;
    bool in_use_ = false;
};

/// Hands out pins and tracks reservations. A pin claimed twice without a
/// release raises PinInUseError, mirroring real GPIO stacks.
class MockPinFactory {
public:
    /// Reserves and returns the pin. Throws PinInUseError if already claimed.
    std::shared_ptr<MockPin> claim(int number);

    /// Returns the pin without reserving it (peek for tests and mocks).
    std::shared_ptr<MockPin> peek(int number);

    void release(int number);

    /// Releases every pin and clears all pin state: a fresh board.
    void reset();

private:
    std::map<int, std::shared_ptr<MockPin>> pins_;
};

/// Generic input device over a mock pin. pull_up=none leaves the pin floating
/// and requires an explicit active_state; otherwise the active level is
/// derived from the pull (pulled-up devices are active-low).
class InputDeviceModel {
public:
    InputDeviceModel(MockPinFactory& factory, int pin_number,
                     std::optional<bool> pull_up,
                     std::optional<bool> active_state);

    /// True when the pin level matches the device's active level.
    /// Throws PinInvalidStateError after close().
    bool is_active() const;

    std::optional<bool> pull_up() const { return pull_up_; }

    std::shared_ptr<MockPin> pin() const { return pin_; }
    bool closed() const { return pin_ == nullptr; }

    /// Releases the pin; the device becomes unusable.
    void close();

private:
    MockPinFactory* factory_;
    std::shared_ptr<MockPin> pin_;
    std::optional<bool> pull_up_;
    bool active_high_ = true;
};

}  // namespace chekprop::corpus
