#include "schedsim/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace schedsim {

namespace {

// Median of sorted[first, last).
Rational median_of_sorted(const std::vector<Time>& sorted, std::size_t first,
                          std::size_t last) {
    const std::size_t n = last - first;
    const std::size_t mid = first + n / 2;
    if (n % 2 == 1) {
        return Rational(sorted[mid]);
    }
    return Rational(sorted[mid - 1] + sorted[mid], 2);
}

std::vector<Time> sorted_copy(std::span<const Time> values, const char* op) {
    if (values.empty()) {
        throw std::invalid_argument(std::string(op) + ": empty input");
    }
    std::vector<Time> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

}  // namespace

Quartiles quartiles(std::span<const Time> values) {
    const std::vector<Time> sorted = sorted_copy(values, "quartiles");
    const std::size_t n = sorted.size();
    if (n == 1) {
        const Rational v(sorted[0]);
        return Quartiles{v, v, v};
    }
    // Exclusive halves: [0, n/2) and [n - n/2, n); for odd n the middle
    // element is skipped.
    const std::size_t half = n / 2;
    return Quartiles{
        median_of_sorted(sorted, 0, half),
        median_of_sorted(sorted, 0, n),
        median_of_sorted(sorted, n - half, n),
    };
}

Time spread(std::span<const Time> values) {
    if (values.empty()) {
        throw std::invalid_argument("spread: empty input");
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
}

Rational median(std::span<const Time> values) {
    const std::vector<Time> sorted = sorted_copy(values, "median");
    return median_of_sorted(sorted, 0, sorted.size());
}

Rational harmonic_mean(std::span<const Time> values) {
    if (values.empty()) {
        throw std::invalid_argument("harmonic_mean: empty input");
    }
    Rational reciprocal_sum(0);
    for (const Time v : values) {
        if (v <= 0) {
            throw std::invalid_argument("harmonic_mean: values must be positive");
        }
        reciprocal_sum += Rational(1, v);
    }
    return Rational(static_cast<std::int64_t>(values.size())) / reciprocal_sum;
}

}  // namespace schedsim
