#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <queue>
#include <vector>

namespace chekprop::corpus {

/// Deterministic simulated time source. Components register periodic
/// callbacks; advancing the clock fires everything due, ordered by due time
/// with ties broken by registration order. Replaces the wall-clock sleeps of
/// thread-per-component designs so scenario execution is replayable.
class VirtualClock {
public:
    using Callback = std::function<void(double now)>;

    /// Registers a callback firing at `start`, then every `interval`, for
    /// `count` occurrences total. Due times are computed as start + k*interval
    /// (not accumulated) so float intervals stay stable.
    void schedule_periodic(double start, double interval, std::int64_t count, Callback cb);

    /// Fires every pending callback with due time <= end_time, in order.
    void run_until(double end_time);

    double now() const { return now_; }

private:
    struct Entry {
        double due;
        std::int64_t registration;
        std::int64_t occurrence;
    };
    struct Later {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.due != b.due) return a.due > b.due;
            return a.registration > b.registration;
        }
    };
    struct Task {
        double start;
        double interval;
        std::int64_t count;
        Callback cb;
    };

    // deque: callbacks may register new tasks while running
    std::deque<Task> tasks_;
    std::priority_queue<Entry, std::vector<Entry>, Later> pending_;
    double now_ = 0.0;
};

/// floor(total / interval) with a tolerance for float division artifacts;
/// mirrors the occurrence count of a loop-and-sleep component.
std::int64_t periodic_count(double total_time, double interval);

}  // namespace chekprop::corpus
