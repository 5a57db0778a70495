#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revid/cost.hpp"

namespace revid {

/// An optimal 4-wire benchmark with a random identity spliced in.
struct Table1Row {
    std::string_view benchmark;
    std::string_view optimal_id;
    std::string_view ntri_id;
    /// Printed 1-based insertion point (the `#` gap plus one).
    std::size_t printed_insertion_point;
    GateCost printed_optimal;
    GateCost printed_bugged;
    /// Output of an external optimizer; shown for reference only.
    GateCost printed_optimized;
};

/// A random 4-wire circuit with a bracketed identity inside.
struct Table2Row {
    std::string_view specification;
    std::string_view circuit_id;
    GateCost printed_original;
    /// External optimizer alone, and external optimizer after identity
    /// removal; shown for reference only.
    GateCost printed_optimized;
    GateCost printed_hybrid;
};

std::span<const Table1Row> table1Rows() noexcept;
std::span<const Table2Row> table2Rows() noexcept;

/// Printed vs computed value that disagree without failing the row.
struct Discrepancy {
    std::string field;
    std::string computed;
    std::string printed;
};

struct RowOutcome {
    std::string row;
    GateCost computed;
    GateCost printed;
    /// Cost of `computed` under the plain per-gate table.
    Cost computed_plain_cost = 0;
    bool passed = true;
    /// Failed assertions, one line each.
    std::vector<std::string> failures;
    std::vector<Discrepancy> discrepancies;
    /// Free-form key/value evidence (reduced (g,c), removals, ...).
    std::vector<std::pair<std::string, std::string>> details;
};

struct ExperimentReport {
    std::string name;
    std::vector<RowOutcome> rows;

    bool passed() const noexcept;
    std::size_t passedCount() const noexcept;
};

struct ExperimentOptions {
    CostTable costs;
    Cost peres_cost = 4;
    /// Use eliminateNtrisFast instead of the faithful scan.
    bool fast = false;
};

/// For every row: splice the identity at the `#` gap, eliminate identities
/// and require the optimal circuit back gate for gate with the printed
/// optimal (g,c). Bugged counts that disagree are discrepancies.
ExperimentReport runTable1(const ExperimentOptions& options = {});

/// For every row: require the printed permutation, an identity bracket,
/// removal of every bracketed gate and an unchanged permutation.
/// Original (g,c) is compared against the printed value.
ExperimentReport runTable2(const ExperimentOptions& options = {});

std::string renderText(const ExperimentReport& report);
/// {"name": ..., "rows": [{row, computed_g, computed_c, printed_g,
/// printed_c, status, ...}]}
std::string renderJson(std::span<const ExperimentReport> reports);

}  // namespace revid
