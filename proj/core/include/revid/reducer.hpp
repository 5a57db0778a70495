#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revid/circuit.hpp"
#include "revid/cost.hpp"
#include "revid/semantics.hpp"

namespace revid {

/// One deleted identity segment.
///
/// `start_gap` and `end_index` are prefix positions `j < i` in the circuit
/// as it stood when the segment was found: the specification after `j`
/// gates equalled the one after `i` gates, and gates `j+1..i` (1-based)
/// were deleted. `original_indices` locate those gates in the input.
struct Removal {
    std::size_t start_gap = 0;
    std::size_t end_index = 0;
    std::size_t gate_count = 0;
    std::optional<Cost> cost;
    std::vector<std::size_t> original_indices;

    friend bool operator==(const Removal&, const Removal&) = default;
};

struct ReductionReport {
    /// Outer-loop iterations, counting the final one that found nothing.
    std::size_t passes = 0;
    std::vector<Removal> removals;
    std::size_t input_gates = 0;
    std::size_t output_gates = 0;
    /// Unset when the cost table lacks an entry for some gate.
    std::optional<Cost> input_cost;
    std::optional<Cost> output_cost;
    Specification input_spec = Specification::identity(0);
    Specification output_spec = Specification::identity(0);
    /// Specification equality tests (faithful) or hash probes (fast).
    std::uint64_t spec_comparisons = 0;

    std::size_t removedGates() const noexcept;
};

struct ReductionResult {
    Circuit circuit;
    ReductionReport report;
};

struct ReductionOptions {
    CostTable costs;
    SimulationLimits limits;
};

/// Cancels adjacent identical gates until none remain, including pairs
/// that only become adjacent after an inner pair is cancelled.
ReductionResult removeTrivialIdentities(const Circuit& c, const ReductionOptions& options = {});

/// Deletes every identity segment by scanning prefix specifications.
///
/// Gates are traced one at a time; the first prefix position `i` whose
/// specification equals an earlier one at `j` (smallest `j`, with `j = 0`
/// the empty prefix) has gates `j+1..i` removed, and the scan restarts from
/// the beginning. The result has pairwise distinct prefix specifications.
/// O(m^2) comparisons when nothing is found, O(m^3) in the worst case.
ReductionResult eliminateNtris(const Circuit& c, const ReductionOptions& options = {});

/// Same output circuit and removal list as eliminateNtris, using a hash
/// index from prefix specification to its position and resuming the scan
/// at the cut instead of restarting.
ReductionResult eliminateNtrisFast(const Circuit& c, const ReductionOptions& options = {});

/// No two prefix specifications are equal.
bool isIrreducible(const Circuit& c, SimulationLimits limits = {});

/// Report as JSON: removals, pass count and before/after (g,c).
std::string reportToJson(const ReductionReport& report, bool include_specifications = true);

}  // namespace revid
