#include "chekprop/corpus/virtual_clock.hpp"

#include <cmath>

namespace chekprop::corpus {

void VirtualClock::schedule_periodic(double start, double interval, std::int64_t count,
                                     Callback cb) {
    if (count <= 0) return;
    const auto registration = static_cast<std::int64_t>(tasks_.size());
    tasks_.push_back(Task{start, interval, count, std::move(cb)});
    pending_.push(Entry{start, registration, 0});
}

void VirtualClock::run_until(double end_time) {
    while (!pending_.empty() && pending_.top().due <= end_time) {
        Entry e = pending_.top();
        pending_.pop();
        now_ = e.due;
        Task& task = tasks_[static_cast<std::size_t>(e.registration)];
        if (e.occurrence + 1 < task.count) {
            const double next = task.start + static_cast<double>(e.occurrence + 1) * task.interval;
            pending_.push(Entry{next, e.registration, e.occurrence + 1});
        }
        task.cb(e.due);
    }
    if (end_time > now_) now_ = end_time;
}

std::int64_t periodic_count(double total_time, double interval) {
    if (total_time <= 0.0 || interval <= 0.0) return 0;
    return static_cast<std::int64_t>(std::floor(total_time / interval + 1e-9));
}

}  // namespace chekprop::corpus
