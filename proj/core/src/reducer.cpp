#include "revid/reducer.hpp"

#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "revid/error.hpp"

namespace revid {

namespace {

std::optional<Cost> tryCost(std::span<const Gate> gates, const CostTable& table) {
    Cost total = 0;
    for (const Gate& g : gates) {
        if (!table.contains(g.controlCount())) return std::nullopt;
        total += table.at(g.controlCount());
    }
    return total;
}

// Gates being reduced, each tagged with its position in the input.
struct WorkingCircuit {
    std::vector<Gate> gates;
    std::vector<std::size_t> origin;

    explicit WorkingCircuit(const Circuit& c) : gates(c.gates()), origin(c.size()) {
        std::iota(origin.begin(), origin.end(), std::size_t{0});
    }

    // Deletes gates j+1..i (1-based), i.e. [j, i) 0-based.
    Removal cut(std::size_t j, std::size_t i, const CostTable& table) {
        const auto first = static_cast<std::ptrdiff_t>(j);
        const auto last = static_cast<std::ptrdiff_t>(i);
        Removal r;
        r.start_gap = j;
        r.end_index = i;
        r.gate_count = i - j;
        r.cost = tryCost(std::span<const Gate>(gates).subspan(j, i - j), table);
        r.original_indices.assign(origin.begin() + first, origin.begin() + last);
        gates.erase(gates.begin() + first, gates.begin() + last);
        origin.erase(origin.begin() + first, origin.begin() + last);
        return r;
    }
};

ReductionReport startReport(const Circuit& c, const ReductionOptions& options) {
    ReductionReport report;
    report.input_gates = c.size();
    report.input_cost = tryCost(c.gates(), options.costs);
    report.input_spec = simulate(c, options.limits);
    return report;
}

ReductionResult finish(const Circuit& input, WorkingCircuit&& work, ReductionReport&& report,
                       const ReductionOptions& options) {
    Circuit out = input.withGates(std::move(work.gates));
    report.output_gates = out.size();
    report.output_cost = tryCost(out.gates(), options.costs);
    report.output_spec = simulate(out, options.limits);
    return {std::move(out), std::move(report)};
}

}  // namespace

std::size_t ReductionReport::removedGates() const noexcept {
    std::size_t n = 0;
    for (const Removal& r : removals) n += r.gate_count;
    return n;
}

ReductionResult removeTrivialIdentities(const Circuit& c, const ReductionOptions& options) {
    ReductionReport report = startReport(c, options);
    report.passes = 1;

    // Stack reduction: a gate equal to the current top cancels it. This
    // reaches the same fixed point as rescanning after every deletion.
    WorkingCircuit work(c);
    std::vector<Gate> kept;
    std::vector<std::size_t> kept_origin;
    for (std::size_t k = 0; k < work.gates.size(); ++k) {
        const Gate& g = work.gates[k];
        if (!kept.empty() && kept.back() == g) {
            Removal r;
            r.start_gap = kept.size() - 1;
            r.end_index = kept.size() + 1;
            r.gate_count = 2;
            const std::array<Gate, 2> pair{g, g};
            r.cost = tryCost(pair, options.costs);
            r.original_indices = {kept_origin.back(), work.origin[k]};
            report.removals.push_back(std::move(r));
            kept.pop_back();
            kept_origin.pop_back();
        } else {
            kept.push_back(g);
            kept_origin.push_back(work.origin[k]);
        }
    }
    work.gates = std::move(kept);
    work.origin = std::move(kept_origin);
    return finish(c, std::move(work), std::move(report), options);
}

ReductionResult eliminateNtris(const Circuit& c, const ReductionOptions& options) {
    ReductionReport report = startReport(c, options);
    WorkingCircuit work(c);

    bool finished = false;
    while (!finished) {
        finished = true;
        ++report.passes;
        std::vector<Specification> specs;
        specs.reserve(work.gates.size() + 1);
        specs.push_back(Specification::identity(c.width()));

        for (std::size_t i = 1; i <= work.gates.size() && finished; ++i) {
            Specification current = specs.back();
            current.applyGate(work.gates[i - 1]);
            for (std::size_t j = 0; j < i; ++j) {
                ++report.spec_comparisons;
                if (specs[j] == current) {
                    report.removals.push_back(work.cut(j, i, options.costs));
                    finished = false;
                    break;
                }
            }
            specs.push_back(std::move(current));
        }
    }
    return finish(c, std::move(work), std::move(report), options);
}

ReductionResult eliminateNtrisFast(const Circuit& c, const ReductionOptions& options) {
    ReductionReport report = startReport(c, options);
    WorkingCircuit work(c);

    // Up to the first repeat all prefix specifications are distinct, so the
    // earliest equal position is the only one in the index. After a cut the
    // prefixes 0..j are unchanged, which is where a full restart would
    // first find something new.
    std::vector<Specification> specs{Specification::identity(c.width())};
    std::unordered_map<Specification, std::size_t> position{{specs.front(), 0}};
    report.passes = 1;

    std::size_t p = 0;
    while (p < work.gates.size()) {
        Specification next = specs[p];
        next.applyGate(work.gates[p]);
        ++report.spec_comparisons;
        if (const auto hit = position.find(next); hit != position.end()) {
            const std::size_t j = hit->second;
            report.removals.push_back(work.cut(j, p + 1, options.costs));
            ++report.passes;
            for (std::size_t k = j + 1; k <= p; ++k) position.erase(specs[k]);
            specs.erase(specs.begin() + static_cast<std::ptrdiff_t>(j + 1), specs.end());
            p = j;
        } else {
            position.emplace(next, p + 1);
            specs.push_back(std::move(next));
            ++p;
        }
    }
    return finish(c, std::move(work), std::move(report), options);
}

bool isIrreducible(const Circuit& c, SimulationLimits limits) {
    checkSimulationWidth(c.width(), limits);
    std::unordered_set<Specification> seen;
    Specification current = Specification::identity(c.width());
    seen.insert(current);
    for (const Gate& g : c.gates()) {
        current.applyGate(g);
        if (!seen.insert(current).second) return false;
    }
    return true;
}

std::string reportToJson(const ReductionReport& report, bool include_specifications) {
    using nlohmann::json;
    const auto cost = [](const std::optional<Cost>& c) { return c ? json(*c) : json(nullptr); };
    json removals = json::array();
    for (const Removal& r : report.removals) {
        removals.push_back({{"start_gap", r.start_gap},
                            {"end_index", r.end_index},
                            {"removed_gates", r.gate_count},
                            {"removed_cost", cost(r.cost)},
                            {"original_indices", r.original_indices}});
    }
    json out = {{"passes", report.passes},
                {"removals", std::move(removals)},
                {"before", {{"g", report.input_gates}, {"c", cost(report.input_cost)}}},
                {"after", {{"g", report.output_gates}, {"c", cost(report.output_cost)}}},
                {"spec_comparisons", report.spec_comparisons}};
    if (include_specifications) {
        const auto image = [](const Specification& s) {
            return std::vector<std::uint32_t>(s.image().begin(), s.image().end());
        };
        out["input_specification"] = image(report.input_spec);
        out["output_specification"] = image(report.output_spec);
    }
    return out.dump(2);
}

}  // namespace revid
