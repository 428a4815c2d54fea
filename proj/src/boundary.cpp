#include "hookratio/boundary.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookratio {

BoundarySequence::BoundarySequence(std::int64_t offset, std::vector<std::uint8_t> window)
    : offset_(offset), window_(std::move(window)) {
    if (std::any_of(window_.begin(), window_.end(), [](std::uint8_t v) { return v > 1; })) {
        throw std::invalid_argument("boundary entries must be 0 or 1");
    }
    const auto first_one = std::find(window_.begin(), window_.end(), std::uint8_t{1});
    const auto last_zero = std::find(window_.rbegin(), window_.rend(), std::uint8_t{0});
    const auto lo = static_cast<std::int64_t>(first_one - window_.begin());
    const auto hi = static_cast<std::int64_t>(window_.rend() - last_zero);  // one past the last zero
    if (lo >= hi) {
        // No deviations: 0s up to the first 1 (or up to the window end if all zeros).
        offset_ += lo;
        window_.clear();
        return;
    }
    offset_ += lo;
    window_ = std::vector<std::uint8_t>(window_.begin() + lo, window_.begin() + hi);
}

int BoundarySequence::at(std::int64_t index) const {
    if (index < offset_) return 0;
    const std::int64_t rel = index - offset_;
    if (rel >= static_cast<std::int64_t>(window_.size())) return 1;
    return window_[static_cast<std::size_t>(rel)];
}

std::int64_t BoundarySequence::charge() const {
    std::int64_t zeros_right = 0;
    std::int64_t ones_left = 0;
    // Outside the window: zeros left of offset_ that are >= 0.
    if (offset_ > 0) zeros_right += offset_;
    for (std::size_t k = 0; k < window_.size(); ++k) {
        const std::int64_t i = offset_ + static_cast<std::int64_t>(k);
        if (window_[k] == 0 && i >= 0) ++zeros_right;
        if (window_[k] == 1 && i < 0) ++ones_left;
    }
    const std::int64_t end = offset_ + static_cast<std::int64_t>(window_.size());
    if (end < 0) ones_left += -end;
    return zeros_right - ones_left;
}

BoundarySequence BoundarySequence::shifted(std::int64_t by) const {
    BoundarySequence out = *this;
    out.offset_ += by;
    return out;
}

std::vector<std::int64_t> BoundarySequence::interior_zeros() const {
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < window_.size(); ++k) {
        if (window_[k] == 0) out.push_back(offset_ + static_cast<std::int64_t>(k));
    }
    return out;
}

std::string BoundarySequence::to_string() const {
    const std::int64_t lo = std::min<std::int64_t>(offset_, 0) - 1;
    const std::int64_t hi = std::max<std::int64_t>(offset_ + static_cast<std::int64_t>(window_.size()), 0);
    std::string out = "...";
    for (std::int64_t i = lo; i <= hi; ++i) {
        if (i == 0) out += '|';
        out += static_cast<char>('0' + at(i));
    }
    out += "...";
    return out;
}

BoundarySequence to_boundary(const Partition& lambda) {
    if (lambda.empty()) return {};
    // Row r (1-based) puts its 0 at lambda_r - r; window spans [-d, lambda_1 - 1].
    const auto d = static_cast<std::int64_t>(lambda.length());
    const std::int64_t lo = -d;
    const std::int64_t hi = lambda[0] - 1;
    std::vector<std::uint8_t> window(static_cast<std::size_t>(hi - lo + 1), 1);
    for (std::int64_t r = 1; r <= d; ++r) {
        window[static_cast<std::size_t>(lambda[static_cast<std::size_t>(r - 1)] - r - lo)] = 0;
    }
    return BoundarySequence(lo, std::move(window));
}

Partition from_boundary(const BoundarySequence& b) {
    std::vector<int> parts;
    int ones = 0;
    for (std::uint8_t v : b.window()) {
        if (v == 1) {
            ++ones;
        } else if (ones > 0) {
            parts.push_back(ones);
        }
    }
    return Partition(std::move(parts));
}

BoundarySequence parse_boundary(const std::string& text) {
    std::string body = text;
    for (const std::string ellipsis : {"\xE2\x8B\xAF", "..."}) {
        std::size_t pos = 0;
        while ((pos = body.find(ellipsis, pos)) != std::string::npos) body.erase(pos, ellipsis.size());
    }
    const auto mark = body.find('|');
    if (mark == std::string::npos || body.find('|', mark + 1) != std::string::npos) {
        throw std::invalid_argument("boundary text needs exactly one '|' mark: " + text);
    }
    std::vector<std::uint8_t> window;
    for (std::size_t k = 0; k < body.size(); ++k) {
        if (k == mark) continue;
        if (body[k] != '0' && body[k] != '1') throw std::invalid_argument("boundary text must be 0/1: " + text);
        window.push_back(static_cast<std::uint8_t>(body[k] - '0'));
    }
    return BoundarySequence(-static_cast<std::int64_t>(mark), std::move(window));
}

}  // namespace hookratio
