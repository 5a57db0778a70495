#pragma once

// Test-only oracles. Nothing here calls the library's simulator or reducer.

#include <cstdint>
#include <random>
#include <vector>

#include "revid/circuit.hpp"

namespace revid::oracle {

/// Evaluates each input pattern on its own, one bit vector per input,
/// applying "target ^= AND(controls)" gate by gate. Wire w is bit w.
inline std::vector<std::uint32_t> bruteForceImage(const Circuit& c) {
    const std::size_t n = c.width();
    std::vector<std::uint32_t> image(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < image.size(); ++x) {
        std::vector<bool> bits(n);
        for (std::size_t w = 0; w < n; ++w) bits[w] = (x >> w) & 1u;
        for (const Gate& g : c.gates()) {
            bool all = true;
            for (Wire ctl : g.controls()) all = all && bits[index(ctl)];
            if (all) bits[index(g.target())] = !bits[index(g.target())];
        }
        std::uint32_t y = 0;
        for (std::size_t w = 0; w < n; ++w) y |= static_cast<std::uint32_t>(bits[w]) << w;
        image[x] = y;
    }
    return image;
}

/// Prefix images by brute force, entry i after the first i gates.
inline std::vector<std::vector<std::uint32_t>> bruteForcePrefixes(const Circuit& c) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t i = 0; i <= c.size(); ++i) {
        out.push_back(bruteForceImage(c.withGates({c.gates().begin(), c.gates().begin() + static_cast<std::ptrdiff_t>(i)})));
    }
    return out;
}

/// All O(m^2) prefix pairs differ.
inline bool bruteForceIrreducible(const Circuit& c) {
    const auto prefixes = bruteForcePrefixes(c);
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (prefixes[i] == prefixes[j]) return false;
        }
    }
    return true;
}

inline bool isIdentityImage(const std::vector<std::uint32_t>& image) {
    for (std::uint32_t x = 0; x < image.size(); ++x) {
        if (image[x] != x) return false;
    }
    return true;
}

/// Independent sampler for property tests: adjacent duplicates allowed,
/// any control count up to width-1.
inline Circuit sampleCircuit(std::mt19937_64& rng, std::size_t width, std::size_t gates) {
    std::vector<Gate> out;
    for (std::size_t k = 0; k < gates; ++k) {
        std::vector<std::size_t> wires(width);
        for (std::size_t w = 0; w < width; ++w) wires[w] = w;
        std::shuffle(wires.begin(), wires.end(), rng);
        const std::size_t controls = std::uniform_int_distribution<std::size_t>(0, width - 1)(rng);
        std::vector<Wire> ctl;
        for (std::size_t i = 1; i <= controls; ++i) ctl.push_back(wire(wires[i]));
        out.emplace_back(ctl, wire(wires[0]));
    }
    return Circuit(width, std::move(out));
}

}  // namespace revid::oracle
