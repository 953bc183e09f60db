#ifndef SCHEDSIM_WORKLOAD_HPP
#define SCHEDSIM_WORKLOAD_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schedsim/types.hpp"

namespace schedsim {

/// One submitted process. Immutable once the workload is built.
struct ProcessSpec {
    Pid pid = 0;       // positive, unique within a workload
    Time arrival = 0;  // >= 0
    Time burst = 0;    // >= 1

    friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;
};

/// An ordered set of processes in submission order. Validates its invariants
/// on construction and stays immutable afterwards, so workloads can be shared
/// freely across concurrent simulation runs.
class Workload {
public:
    Workload(std::string name, std::vector<ProcessSpec> processes);

    const std::string& name() const { return name_; }
    const std::vector<ProcessSpec>& processes() const { return processes_; }
    std::size_t size() const { return processes_.size(); }

    const ProcessSpec& by_pid(Pid pid) const;
    Time total_burst() const;

    friend bool operator==(const Workload&, const Workload&) = default;

private:
    std::string name_;
    std::vector<ProcessSpec> processes_;
};

/// Workload CSV parse failure; line() is the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Parses workload CSV: header `pid,arrival,burst`, one process per row,
/// submission order = row order. Throws ParseError with the offending line
/// on duplicate pids, non-integer fields, burst < 1, arrival < 0, or an
/// empty body.
Workload parse_workload(std::string_view text, std::string name = "workload");

/// Inverse of parse_workload: header plus one `pid,arrival,burst` row per
/// process, '\n' terminated.
std::string serialize_workload(const Workload& workload);

struct BuiltinCase {
    Workload workload;
    Time alpha;
};

/// The six built-in reference workloads, numbered 1..6; alpha is 20 for all
/// of them. Throws std::out_of_range outside 1..6.
BuiltinCase builtin_case(int n);

}  // namespace schedsim

#endif
