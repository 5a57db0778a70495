#include "revid/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "revid/error.hpp"

namespace revid {

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Gate sampleGate(Rng& rng, const GeneratorConfig& cfg) {
    const std::size_t k = uniform(rng, 0, cfg.max_controls);
    std::vector<std::size_t> wires(cfg.width);
    std::iota(wires.begin(), wires.end(), std::size_t{0});
    // Partial Fisher-Yates: the first k+1 slots become a uniform sample.
    for (std::size_t i = 0; i <= k; ++i) std::swap(wires[i], wires[uniform(rng, i, cfg.width - 1)]);
    std::vector<Wire> controls;
    for (std::size_t i = 1; i <= k; ++i) controls.push_back(wire(wires[i]));
    std::sort(controls.begin(), controls.end());
    return Gate(controls, wire(wires[0]));
}

std::vector<Gate> sampleGates(Rng& rng, const GeneratorConfig& cfg, std::size_t count) {
    std::vector<Gate> gates;
    gates.reserve(count);
    while (gates.size() < count) {
        Gate g = sampleGate(rng, cfg);
        if (cfg.forbid_adjacent_duplicates && !gates.empty() && gates.back() == g) continue;
        gates.push_back(g);
    }
    return gates;
}

std::vector<Wire> wiresOf(std::uint32_t mask) {
    std::vector<Wire> out;
    for (std::size_t w = 0; mask; ++w, mask >>= 1) {
        if (mask & 1u) out.push_back(wire(w));
    }
    return out;
}

}  // namespace

void GeneratorConfig::validate() const {
    if (width < 2 || width > kMaxWires) throw InvalidCircuit("generator width must be in 2..26");
    if (max_controls >= width) throw InvalidCircuit("max controls must be below the width");
}

Circuit genRandomCircuit(const GeneratorConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    return Circuit(cfg.width, sampleGates(rng, cfg, cfg.gates));
}

Circuit synthesizeInverse(const Specification& sigma) {
    const std::size_t width = std::max<std::size_t>(sigma.width(), 1);
    std::vector<std::uint32_t> f(sigma.image().begin(), sigma.image().end());
    std::vector<Gate> gates;

    // Each gate is applied on the output side, f <- g ∘ f, so after the loop
    // g_k ∘ ... ∘ g_1 ∘ sigma = id and the gates in order compute sigma^-1.
    const auto emit = [&](std::uint32_t controls, std::size_t target) {
        const Gate g(wiresOf(controls), wire(target));
        for (std::uint32_t& y : f) y = g.apply(y);
        gates.push_back(g);
    };

    for (std::uint32_t x = 0; x < f.size(); ++x) {
        const std::uint32_t y = f[x];
        if (y == x) continue;
        // Raise the bits x has and y lacks, controlled on y's ones; every
        // point below x is already fixed and none of them covers y.
        const std::uint32_t raise = x & ~y;
        for (std::size_t b = 0; b < width; ++b) {
            if (raise >> b & 1u) emit(f[x], b);
        }
        // Clear the bits y has and x lacks, controlled on x's ones.
        const std::uint32_t lower = f[x] & ~x;
        for (std::size_t b = 0; b < width; ++b) {
            if (lower >> b & 1u) emit(x, b);
        }
    }
    return Circuit(width, std::move(gates));
}

bool isInteriorIrreducible(const Circuit& c, SimulationLimits limits) {
    checkSimulationWidth(c.width(), limits);
    Specification current = Specification::identity(c.width());
    std::unordered_set<Specification> seen{current};
    for (std::size_t i = 0; i < c.size(); ++i) {
        current.applyGate(c[i]);
        if (i + 1 == c.size()) return current.isIdentity();
        if (!seen.insert(current).second) return false;
    }
    return true;
}

Circuit genRandomNtri(const GeneratorConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const std::size_t min_total = std::max<std::size_t>(cfg.min_length, 3);
    const std::size_t hi = min_total;
    const std::size_t lo = (min_total + 1) / 2;

    for (std::size_t attempt = 0; attempt < cfg.attempt_budget; ++attempt) {
        const Circuit front(cfg.width, sampleGates(rng, cfg, uniform(rng, lo, hi)));
        const Circuit candidate = concat(front, synthesizeInverse(simulate(front)));
        if (candidate.size() >= min_total && isInteriorIrreducible(candidate)) return candidate;
    }
    throw GeneratorExhausted("no interior-irreducible identity of length >= " +
                             std::to_string(min_total) + " in " +
                             std::to_string(cfg.attempt_budget) + " attempts");
}

}  // namespace revid
