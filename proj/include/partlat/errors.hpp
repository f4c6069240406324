#pragma once

#include <stdexcept>
#include <string>

namespace partlat {

/// Two partitions (or fuzzy partitions) over ground sets of different size.
class SizeMismatch : public std::invalid_argument {
public:
    SizeMismatch(std::size_t a, std::size_t b)
        : std::invalid_argument("ground-set size mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b)) {}
};

/// An exhaustive routine was asked for an n above its configured cap.
class CapExceeded : public std::out_of_range {
public:
    CapExceeded(const char *what_op, std::size_t n, std::size_t cap)
        : std::out_of_range(std::string(what_op) + ": n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap)) {}
};

/// A closed form was requested outside the hypothesis under which it holds.
class ConditionNotMet : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A distance has no closed-form treatment in the requested operation.
class UnsupportedMetric : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace partlat
