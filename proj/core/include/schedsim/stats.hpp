#ifndef SCHEDSIM_STATS_HPP
#define SCHEDSIM_STATS_HPP

#include <span>

#include "schedsim/rational.hpp"
#include "schedsim/types.hpp"

namespace schedsim {

/// Quartile cut points of a burst multiset. Exact rationals so boundary
/// tests like `burst <= q1` never depend on rounding.
struct Quartiles {
    Rational q1;
    Rational q2;
    Rational q3;

    friend bool operator==(const Quartiles&, const Quartiles&) = default;
};

/// Median-of-halves quartiles with exclusive halves: q2 is the median of the
/// sorted values (mean of the two middle values for even counts); q1/q3 are
/// the medians of the strictly lower/upper halves, where an odd count's
/// middle element belongs to neither half. A single value is its own q1, q2
/// and q3. Throws std::invalid_argument on empty input.
///
/// Note: several quartile conventions exist; this is the one whose group
/// boundaries reproduce the reference time-quantum tables, and it is the
/// convention the grouping policy relies on.
Quartiles quartiles(std::span<const Time> values);

/// max(values) - min(values). Throws std::invalid_argument on empty input.
Time spread(std::span<const Time> values);

/// Standard median; mean of the two middle values for even counts.
Rational median(std::span<const Time> values);

/// n / sum(1/v). All values must be positive.
Rational harmonic_mean(std::span<const Time> values);

}  // namespace schedsim

#endif
