#pragma once

#include <cstddef>
#include <cstdint>

#include "revid/circuit.hpp"
#include "revid/semantics.hpp"

namespace revid {

struct GeneratorConfig {
    std::size_t width = 4;
    /// Gate count of gen-random circuits.
    std::size_t gates = 0;
    /// Lower bound on the length of generated identities.
    std::size_t min_length = 0;
    std::size_t max_controls = 3;
    std::uint64_t seed = 0;
    bool forbid_adjacent_duplicates = true;
    /// Rejection-sampling budget for generated identities.
    std::size_t attempt_budget = 1000;

    /// Throws InvalidCircuit unless 2 <= width <= 26 and max_controls < width.
    void validate() const;
};

/// `cfg.gates` gates; each picks a control count uniformly in
/// 0..max_controls, then that many controls plus a target uniformly among
/// distinct wires. Deterministic in `cfg.seed`.
Circuit genRandomCircuit(const GeneratorConfig& cfg);

/// Circuit computing `sigma`'s inverse, by transformation-based synthesis:
/// inputs are visited in ascending order and MCT gates are appended that
/// carry the current image of x back to x without moving smaller points.
Circuit synthesizeInverse(const Specification& sigma);

/// Prefix specifications are pairwise distinct except the first and last,
/// which are both the identity.
bool isInteriorIrreducible(const Circuit& c, SimulationLimits limits = {});

/// Random non-trivial identity: a random front followed by the synthesized
/// inverse of its specification, resampled until it is interior-irreducible
/// and at least max(min_length, 3) long. Throws GeneratorExhausted.
Circuit genRandomNtri(const GeneratorConfig& cfg);

}  // namespace revid
