#ifndef SCHEDSIM_ENGINE_HPP
#define SCHEDSIM_ENGINE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schedsim/types.hpp"
#include "schedsim/workload.hpp"

namespace schedsim {

/// One contiguous CPU allocation, [start, end).
struct Slice {
    Pid pid = 0;
    Time start = 0;
    Time end = 0;

    Time duration() const { return end - start; }

    friend bool operator==(const Slice&, const Slice&) = default;
};

/// What a policy sees about one arrived, unfinished process.
struct ProcessView {
    Pid pid = 0;
    Time arrival = 0;
    Time burst = 0;
    Time remaining = 0;
};

/// Everything a policy may consult at a dispatch decision point.
struct DispatchContext {
    Time now = 0;
    /// Arrived, unfinished processes in submission order. Never empty.
    std::span<const ProcessView> ready;
    /// Earliest arrival strictly after `now`, if any process is still to come.
    std::optional<Time> next_arrival;
};

struct DispatchDecision {
    Pid pid = 0;
    /// Maximum contiguous time to grant; the engine clips it to the
    /// process's remaining burst. Must be >= 1.
    Time quantum = 0;
};

/// A dispatch policy. Instances are stateful across decision points of one
/// simulation run and must not be reused for a second run.
class DispatchPolicy {
public:
    virtual ~DispatchPolicy() = default;

    /// Called whenever the CPU is free and at least one process is ready.
    virtual DispatchDecision next(const DispatchContext& ctx) = 0;

    virtual std::string name() const = 0;
};

/// Completed simulation output: the time-ordered slice sequence plus
/// per-process completion data derived from it.
class Schedule {
public:
    Schedule(Workload workload, std::vector<Slice> slices);

    const Workload& workload() const { return workload_; }
    const std::vector<Slice>& slices() const { return slices_; }

    Time finish_time(Pid pid) const;
    Time first_start(Pid pid) const;

    /// Completion time of the last process.
    Time makespan() const;

    friend bool operator==(const Schedule&, const Schedule&) = default;

private:
    Workload workload_;
    std::vector<Slice> slices_;
    std::vector<std::pair<Pid, Time>> finish_;
    std::vector<std::pair<Pid, Time>> first_start_;
};

/// Runs the workload to completion under the given policy.
///
/// Decision points are t = 0, every slice end, and any arrival into an idle
/// system. At each one the policy picks (process, quantum); the process runs
/// min(quantum, remaining) time units. Arrivals mid-slice never interrupt
/// the granted quantum, so preemptive behaviour is expressed by granting
/// quanta that end at the next arrival. When nothing is ready the clock
/// jumps to the next arrival without emitting a slice.
///
/// Throws std::logic_error if the policy selects an unarrived or finished
/// process or returns a quantum < 1.
Schedule run(const Workload& workload, DispatchPolicy& policy);

/// Adjacent same-process slices coalesced into one. This is the sequence the
/// Gantt chart shows and context switches are counted on.
std::vector<Slice> merged_slices(const Schedule& schedule);

/// Number of boundaries between two different processes in the merged slice
/// sequence. Back-to-back quanta of one process do not switch, and the final
/// completion is not counted.
int context_switches(const Schedule& schedule);

}  // namespace schedsim

#endif
