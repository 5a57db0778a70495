#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace revid {

/// Wire letters a..z bound the circuit width.
inline constexpr std::size_t kMaxWires = 26;

/// Position of a line in a circuit's declared wire order.
enum class Wire : std::uint8_t {};

constexpr Wire wire(std::size_t index) noexcept { return static_cast<Wire>(index); }
constexpr std::size_t index(Wire w) noexcept { return static_cast<std::size_t>(w); }
constexpr std::uint32_t bit(Wire w) noexcept { return std::uint32_t{1} << index(w); }

/// Multi-control Toffoli gate: flips `target` iff every control is 1.
///
/// Controls form a set. Equality and semantics only look at the set, but
/// the order the controls were listed in is kept so that text written by
/// hand prints back unchanged.
class Gate {
public:
    /// Throws InvalidCircuit if a wire repeats or the target is a control.
    Gate(std::span<const Wire> controls, Wire target);
    Gate(std::initializer_list<Wire> controls, Wire target)
        : Gate(std::span<const Wire>(controls.begin(), controls.size()), target) {}

    static Gate notGate(Wire target) { return Gate({}, target); }

    std::span<const Wire> controls() const noexcept { return {controls_.data(), count_}; }
    std::size_t controlCount() const noexcept { return count_; }
    std::uint32_t controlMask() const noexcept { return mask_; }
    Wire target() const noexcept { return target_; }

    /// One past the highest wire index this gate touches.
    std::size_t span() const noexcept;

    /// Image of one input pattern (bit w of `x` is wire w).
    constexpr std::uint32_t apply(std::uint32_t x) const noexcept {
        return (x & mask_) == mask_ ? x ^ bit(target_) : x;
    }

    friend bool operator==(const Gate& a, const Gate& b) noexcept {
        return a.mask_ == b.mask_ && a.target_ == b.target_;
    }

private:
    std::array<Wire, kMaxWires - 1> controls_{};
    std::uint8_t count_ = 0;
    Wire target_{};
    std::uint32_t mask_ = 0;
};

}  // namespace revid
