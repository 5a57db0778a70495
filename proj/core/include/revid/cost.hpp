#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string_view>

#include "revid/circuit.hpp"

namespace revid {

using Cost = std::uint64_t;

/// Quantum cost per control count. Defaults: NOT and CNOT cost 1, TOF 5,
/// TOF4 13. Larger gates have no default entry; costing one throws
/// MissingCost until the table is extended.
class CostTable {
public:
    /// The default table.
    CostTable();

    static CostTable empty() { return CostTable(std::map<std::size_t, Cost>{}); }
    explicit CostTable(std::map<std::size_t, Cost> entries) : entries_(std::move(entries)) {}

    /// Throws MissingCost.
    Cost at(std::size_t controls) const;
    bool contains(std::size_t controls) const { return entries_.contains(controls); }
    void set(std::size_t controls, Cost cost);
    const std::map<std::size_t, Cost>& entries() const noexcept { return entries_; }

    /// Parses "controls cost" lines ('#' and '//' start comments) and
    /// overrides the matching entries of `*this`.
    void merge(std::string_view text);
    static CostTable fromFile(const std::filesystem::path& path);

private:
    std::map<std::size_t, Cost> entries_;
};

Cost gateCost(const Gate& g, const CostTable& table = {});
Cost circuitCost(const Circuit& c, const CostTable& table = {});
std::size_t gateCount(const Circuit& c) noexcept;

/// True if `a` then `b` realise a Peres gate: a TOF on controls {x, y}
/// next to a CNOT between x and y, in either order.
bool formsPeresPair(const Gate& a, const Gate& b) noexcept;

/// Cost with adjacent Peres pairs (matched greedily left to right) charged
/// `peres_cost` instead of the sum of their parts. This is the tally used
/// by the printed benchmark figures.
Cost peresFusedCost(const Circuit& c, const CostTable& table = {}, Cost peres_cost = 4);

/// Gate count and cost side by side, the "(g,c)" pair of the tables.
struct GateCost {
    std::size_t gates = 0;
    Cost cost = 0;
    friend bool operator==(const GateCost&, const GateCost&) = default;
};

}  // namespace revid
