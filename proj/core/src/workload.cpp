#include "schedsim/workload.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>
#include <utility>

namespace schedsim {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::int64_t parse_int(std::string_view field, int line, const char* column) {
    field = trim(field);
    std::int64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || field.empty()) {
        throw ParseError(line, std::string(column) + " is not an integer: '" +
                                   std::string(field) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

Workload::Workload(std::string name, std::vector<ProcessSpec> processes)
    : name_(std::move(name)), processes_(std::move(processes)) {
    if (processes_.empty()) {
        throw std::invalid_argument("workload '" + name_ + "' has no processes");
    }
    std::unordered_set<Pid> seen;
    for (const ProcessSpec& p : processes_) {
        if (p.pid <= 0) {
            throw std::invalid_argument("pid must be positive, got " + std::to_string(p.pid));
        }
        if (!seen.insert(p.pid).second) {
            throw std::invalid_argument("duplicate pid " + std::to_string(p.pid));
        }
        if (p.arrival < 0) {
            throw std::invalid_argument("pid " + std::to_string(p.pid) +
                                        ": arrival must be >= 0");
        }
        if (p.burst < 1) {
            throw std::invalid_argument("pid " + std::to_string(p.pid) +
                                        ": burst must be >= 1");
        }
    }
}

const ProcessSpec& Workload::by_pid(Pid pid) const {
    for (const ProcessSpec& p : processes_) {
        if (p.pid == pid) {
            return p;
        }
    }
    throw std::out_of_range("no process with pid " + std::to_string(pid));
}

Time Workload::total_burst() const {
    Time sum = 0;
    for (const ProcessSpec& p : processes_) {
        sum += p.burst;
    }
    return sum;
}

Workload parse_workload(std::string_view text, std::string name) {
    const std::vector<std::string_view> lines = split(text, '\n');
    if (lines.empty() || trim(lines[0]) != "pid,arrival,burst") {
        throw ParseError(1, "expected header 'pid,arrival,burst'");
    }

    std::vector<ProcessSpec> processes;
    std::unordered_set<Pid> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        if (trim(lines[i]).empty()) {
            continue;  // blank line, e.g. the trailing newline
        }
        const std::vector<std::string_view> fields = split(lines[i], ',');
        if (fields.size() != 3) {
            throw ParseError(line_no, "expected 3 fields, got " +
                                          std::to_string(fields.size()));
        }
        ProcessSpec p;
        const std::int64_t pid = parse_int(fields[0], line_no, "pid");
        if (pid < 1 || pid > INT32_MAX) {
            throw ParseError(line_no, "pid must be a positive 32-bit integer");
        }
        p.pid = static_cast<Pid>(pid);
        p.arrival = parse_int(fields[1], line_no, "arrival");
        p.burst = parse_int(fields[2], line_no, "burst");
        if (p.arrival < 0) {
            throw ParseError(line_no, "arrival must be >= 0");
        }
        if (p.burst < 1) {
            throw ParseError(line_no, "burst must be >= 1");
        }
        if (!seen.insert(p.pid).second) {
            throw ParseError(line_no, "duplicate pid " + std::to_string(p.pid));
        }
        processes.push_back(p);
    }
    if (processes.empty()) {
        throw ParseError(1, "workload body is empty");
    }
    return Workload(std::move(name), std::move(processes));
}

std::string serialize_workload(const Workload& workload) {
    std::string out = "pid,arrival,burst\n";
    for (const ProcessSpec& p : workload.processes()) {
        out += std::to_string(p.pid);
        out += ',';
        out += std::to_string(p.arrival);
        out += ',';
        out += std::to_string(p.burst);
        out += '\n';
    }
    return out;
}

BuiltinCase builtin_case(int n) {
    static const Time kAlpha = 20;
    std::vector<ProcessSpec> ps;
    switch (n) {
        case 1:
            ps = {{1, 0, 7},   {2, 0, 15},  {3, 0, 24},  {4, 0, 84},  {5, 0, 123},
                  {6, 0, 145}, {7, 0, 150}, {8, 0, 175}, {9, 0, 180}, {10, 0, 200}};
            break;
        case 2:
            ps = {{1, 0, 11}, {2, 0, 46}, {3, 0, 82}, {4, 0, 95}};
            break;
        case 3:
            ps = {{1, 0, 81}, {2, 0, 82}, {3, 0, 83}, {4, 0, 84}};
            break;
        case 4:
            ps = {{1, 0, 61}, {2, 0, 62}, {3, 0, 63}, {4, 0, 64},
                  {5, 0, 65}, {6, 0, 66}, {7, 0, 67}, {8, 0, 68}};
            break;
        case 5:
            ps = {{1, 0, 7}, {2, 5, 14}, {3, 15, 55}, {4, 50, 75}, {5, 75, 23}};
            break;
        case 6:
            ps = {{1, 0, 24},  {2, 17, 48},  {3, 35, 65}, {4, 50, 74},
                  {5, 70, 89}, {6, 80, 100}, {7, 130, 150}};
            break;
        default:
            throw std::out_of_range("case number must be 1..6, got " + std::to_string(n));
    }
    return BuiltinCase{Workload("case" + std::to_string(n), std::move(ps)), kAlpha};
}

}  // namespace schedsim
