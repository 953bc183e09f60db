#include "schedsim/engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace schedsim {

namespace {

Time lookup(const std::vector<std::pair<Pid, Time>>& table, Pid pid, const char* what) {
    for (const auto& [p, t] : table) {
        if (p == pid) {
            return t;
        }
    }
    throw std::out_of_range(std::string(what) + ": unknown pid " + std::to_string(pid));
}

}  // namespace

Schedule::Schedule(Workload workload, std::vector<Slice> slices)
    : workload_(std::move(workload)), slices_(std::move(slices)) {
    Time prev_end = std::numeric_limits<Time>::min();
    for (const Slice& s : slices_) {
        if (s.end <= s.start) {
            throw std::invalid_argument("slice with non-positive duration");
        }
        if (s.start < prev_end) {
            throw std::invalid_argument("slices overlap or are out of order");
        }
        prev_end = s.end;
        if (first_start_.end() == std::find_if(first_start_.begin(), first_start_.end(),
                                               [&](const auto& e) { return e.first == s.pid; })) {
            first_start_.emplace_back(s.pid, s.start);
        }
    }
    for (const ProcessSpec& p : workload_.processes()) {
        Time executed = 0;
        Time last_end = 0;
        for (const Slice& s : slices_) {
            if (s.pid == p.pid) {
                if (s.start < p.arrival) {
                    throw std::invalid_argument("pid " + std::to_string(p.pid) +
                                                " runs before its arrival");
                }
                executed += s.duration();
                last_end = s.end;
            }
        }
        if (executed != p.burst) {
            throw std::invalid_argument("pid " + std::to_string(p.pid) +
                                        ": executed time != burst");
        }
        finish_.emplace_back(p.pid, last_end);
    }
}

Time Schedule::finish_time(Pid pid) const { return lookup(finish_, pid, "finish_time"); }

Time Schedule::first_start(Pid pid) const { return lookup(first_start_, pid, "first_start"); }

Time Schedule::makespan() const {
    return slices_.empty() ? 0 : slices_.back().end;
}

Schedule run(const Workload& workload, DispatchPolicy& policy) {
    struct Proc {
        ProcessSpec spec;
        Time remaining;
    };
    std::vector<Proc> procs;
    procs.reserve(workload.size());
    for (const ProcessSpec& p : workload.processes()) {
        procs.push_back({p, p.burst});
    }

    std::vector<Slice> slices;
    std::vector<ProcessView> ready;
    Time now = 0;
    std::size_t unfinished = procs.size();

    while (unfinished > 0) {
        ready.clear();
        Time next_arrival = std::numeric_limits<Time>::max();
        for (const Proc& p : procs) {
            if (p.remaining == 0) {
                continue;
            }
            if (p.spec.arrival <= now) {
                ready.push_back({p.spec.pid, p.spec.arrival, p.spec.burst, p.remaining});
            } else {
                next_arrival = std::min(next_arrival, p.spec.arrival);
            }
        }

        if (ready.empty()) {
            // Idle gap: no slice, jump to the next arrival.
            now = next_arrival;
            continue;
        }

        DispatchContext ctx;
        ctx.now = now;
        ctx.ready = ready;
        if (next_arrival != std::numeric_limits<Time>::max()) {
            ctx.next_arrival = next_arrival;
        }

        const DispatchDecision decision = policy.next(ctx);
        if (decision.quantum < 1) {
            throw std::logic_error("policy '" + policy.name() + "' returned quantum " +
                                   std::to_string(decision.quantum));
        }
        auto chosen = std::find_if(procs.begin(), procs.end(), [&](const Proc& p) {
            return p.spec.pid == decision.pid;
        });
        if (chosen == procs.end() || chosen->remaining == 0 || chosen->spec.arrival > now) {
            throw std::logic_error("policy '" + policy.name() +
                                   "' selected ineligible pid " +
                                   std::to_string(decision.pid));
        }

        const Time slice_len = std::min(decision.quantum, chosen->remaining);
        slices.push_back({chosen->spec.pid, now, now + slice_len});
        now += slice_len;
        chosen->remaining -= slice_len;
        if (chosen->remaining == 0) {
            --unfinished;
        }
    }

    return Schedule(workload, std::move(slices));
}

std::vector<Slice> merged_slices(const Schedule& schedule) {
    std::vector<Slice> merged;
    for (const Slice& s : schedule.slices()) {
        if (!merged.empty() && merged.back().pid == s.pid && merged.back().end == s.start) {
            merged.back().end = s.end;
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

int context_switches(const Schedule& schedule) {
    const std::vector<Slice> merged = merged_slices(schedule);
    return merged.empty() ? 0 : static_cast<int>(merged.size()) - 1;
}

}  // namespace schedsim
