#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "revid/circuit.hpp"

namespace revid {

/// Widest circuit simulated unless a caller raises the cap (2^16 points).
inline constexpr std::size_t kDefaultMaxSimulationWidth = 16;

struct SimulationLimits {
    std::size_t max_width = kDefaultMaxSimulationWidth;
};

/// Permutation of {0..2^n-1} computed by a reversible circuit, written as
/// the list of images [σ(0), σ(1), ..., σ(N-1)].
///
/// Input pattern `x` carries wire `w` in bit `w`, so wire `a` is the least
/// significant bit. This is the orientation under which the printed
/// reference permutations of the benchmark corpus are reproduced.
class Specification {
public:
    /// Identity on 2^width points.
    static Specification identity(std::size_t width);

    /// Throws InvalidCircuit unless `image` is a permutation of a power-of-two set.
    explicit Specification(std::vector<std::uint32_t> image);

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return image_.size(); }
    std::uint32_t operator[](std::size_t x) const { return image_[x]; }
    std::span<const std::uint32_t> image() const noexcept { return image_; }

    bool isIdentity() const noexcept;

    /// Post-composes one gate: image[x] <- g(image[x]).
    void applyGate(const Gate& g) noexcept;

    /// `second ∘ first`: x -> second(first(x)).
    static Specification compose(const Specification& first, const Specification& second);
    Specification inverse() const;

    /// "[σ(0),σ(1),...]"
    std::string toString() const;
    static Specification fromString(std::string_view text);

    std::size_t hash() const noexcept;

    friend bool operator==(const Specification&, const Specification&) = default;

private:
    Specification(std::size_t width, std::vector<std::uint32_t> image)
        : width_(width), image_(std::move(image)) {}

    std::size_t width_ = 0;
    std::vector<std::uint32_t> image_;
};

/// Prefix specifications of a circuit: `specs[0]` is the identity and
/// `specs[i]` is the specification of the first `i` gates.
struct PrefixTrace {
    std::vector<Specification> specs;
};

Specification gatePermutation(const Gate& g, std::size_t width, SimulationLimits limits = {});
Specification simulate(const Circuit& c, SimulationLimits limits = {});
PrefixTrace prefixTrace(const Circuit& c, SimulationLimits limits = {});
bool isIdentity(const Circuit& c, SimulationLimits limits = {});

/// Same specification. Throws WidthMismatch if the wire sets differ.
bool equivalent(const Circuit& a, const Circuit& b, SimulationLimits limits = {});

/// Throws WidthLimitExceeded above `limits.max_width`.
void checkSimulationWidth(std::size_t width, SimulationLimits limits);

}  // namespace revid

template <>
struct std::hash<revid::Specification> {
    std::size_t operator()(const revid::Specification& s) const noexcept { return s.hash(); }
};
