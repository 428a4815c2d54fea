#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hookratio/partition.hpp"

namespace hookratio {

/// Doubly infinite 01-word tracing a diagram's outline from the bottom-left:
/// 0 is an up-step, 1 a right-step. Stored as a finite window starting at
/// `offset()`; every index left of the window reads 0 and every index right
/// of it reads 1. The window is kept trimmed (it starts with a 1 and ends
/// with a 0), so equal sequences have equal representations. For a sequence
/// with no deviations the window is empty and `offset()` is the index of the
/// first 1.
class BoundarySequence {
public:
    BoundarySequence() = default;

    /// Throws std::invalid_argument if an entry is not 0 or 1.
    BoundarySequence(std::int64_t offset, std::vector<std::uint8_t> window);

    std::int64_t offset() const { return offset_; }
    std::span<const std::uint8_t> window() const { return window_; }

    int at(std::int64_t index) const;

    /// #{i >= 0 : x_i = 0} - #{i < 0 : x_i = 1}. Zero exactly when centered.
    std::int64_t charge() const;
    bool is_centered() const { return charge() == 0; }

    /// The sequence y with y_i = x_{i - by}; charge grows by `by`.
    BoundarySequence shifted(std::int64_t by) const;
    BoundarySequence centered() const { return shifted(-charge()); }

    /// Indices of the zeros inside the window, ascending.
    std::vector<std::int64_t> interior_zeros() const;

    /// "...0111|1110101...": one padding symbol on each side, "|" before index 0.
    std::string to_string() const;

    friend bool operator==(const BoundarySequence&, const BoundarySequence&) = default;

private:
    std::int64_t offset_ = 0;
    std::vector<std::uint8_t> window_;
};

/// Centered boundary sequence of lambda.
BoundarySequence to_boundary(const Partition& lambda);

/// Shape read off a boundary sequence; independent of shifts.
Partition from_boundary(const BoundarySequence& b);

/// Parses the rendering produced by BoundarySequence::to_string (ASCII "..." or
/// U+22EF ellipses optional, "|" marks index 0). Throws std::invalid_argument.
BoundarySequence parse_boundary(const std::string& text);

}  // namespace hookratio
