#ifndef SCHEDSIM_TYPES_HPP
#define SCHEDSIM_TYPES_HPP

#include <cstdint>

namespace schedsim {

/// Discrete simulation time, in whole time units (seconds).
using Time = std::int64_t;

/// Process identity; positive and unique within a workload.
using Pid = std::int32_t;

}  // namespace schedsim

#endif
