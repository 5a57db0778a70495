#include "revid/experiments.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "revid/corpus.hpp"
#include "revid/error.hpp"
#include "revid/reducer.hpp"
#include "revid/semantics.hpp"
#include "revid/text.hpp"

namespace revid {

namespace {

constexpr std::array<Table1Row, 13> kTable1{{
    {"4_49", "APP1.1.a", "APP1.1.b", 6, {12, 32}, {19, 61}, {19, 61}},
    {"4bit-7-8", "APP1.2.a", "APP1.2.b", 5, {7, 19}, {14, 40}, {12, 34}},
    {"decode42", "APP1.3.a", "APP1.3.b", 4, {10, 30}, {16, 52}, {15, 51}},
    {"hwb4", "APP1.4.a", "APP1.4.b", 7, {11, 39}, {16, 64}, {16, 62}},
    {"imark", "APP1.5.a", "APP1.5.b", 5, {7, 19}, {17, 43}, {11, 37}},
    {"mperk", "APP1.6.a", "APP1.6.b", 4, {9, 15}, {22, 52}, {22, 52}},
    {"oc5", "APP1.7.a", "APP1.7.b", 2, {11, 39}, {23, 65}, {16, 52}},
    {"oc6", "APP1.8.a", "APP1.8.b", 11, {12, 60}, {20, 74}, {20, 74}},
    {"oc7", "APP1.9.a", "APP1.9.b", 13, {13, 41}, {29, 219}, {28, 207}},
    {"oc8", "APP1.10.a", "APP1.10.b", 9, {11, 47}, {25, 197}, {15, 79}},
    {"primes4", "APP1.11.a", "APP1.11.b", 4, {10, 42}, {18, 98}, {13, 77}},
    {"rd32", "APP1.12.a", "APP1.12.b", 3, {4, 8}, {10, 54}, {8, 46}},
    {"shift4", "APP1.13.a", "APP1.13.b", 4, {4, 18}, {20, 146}, {13, 101}},
}};

constexpr std::array<Table2Row, 13> kTable2{{
    {"[12,7,2,5,0,15,14,11,6,3,10,1,8,9,4,13]", "APP2.1", {21, 113}, {17, 103}, {10, 30}},
    {"[7,14,9,6,11,0,13,2,5,15,10,12,1,4,3,8]", "APP2.2", {30, 210}, {30, 204}, {18, 102}},
    {"[10,15,0,7,14,9,6,1,13,12,5,3,11,8,4,2]", "APP2.3", {23, 103}, {23, 101}, {13, 43}},
    {"[12,9,11,14,6,7,8,10,2,3,4,5,15,13,0,1]", "APP2.4", {22, 90}, {22, 90}, {9, 36}},
    {"[0,1,15,8,4,5,9,14,11,12,7,6,3,13,10,2]", "APP2.5", {23, 137}, {19, 105}, {10, 50}},
    {"[3,0,1,6,7,2,5,4,11,8,9,14,15,10,13,12]", "APP2.6", {25, 133}, {19, 99}, {6, 14}},
    {"[6,11,5,4,2,0,1,15,14,3,12,8,7,9,13,10]", "APP2.7", {21, 137}, {20, 132}, {15, 59}},
    {"[12,15,5,8,3,2,1,10,7,14,13,6,11,0,9,4]", "APP2.8", {23, 125}, {23, 125}, {15, 53}},
    {"[0,1,6,5,7,8,15,2,14,13,12,3,11,4,9,10]", "APP2.9", {17, 65}, {16, 64}, {11, 47}},
    {"[0,10,2,15,8,9,4,1,6,5,14,3,12,13,11,7]", "APP2.10", {20, 80}, {19, 75}, {13, 57}},
    {"[8,9,10,2,4,7,6,5,0,15,13,3,12,14,1,11]", "APP2.11", {21, 93}, {21, 93}, {12, 80}},
    {"[6,15,0,1,9,2,7,4,11,10,5,12,3,14,13,8]", "APP2.12", {29, 73}, {29, 73}, {17, 53}},
    {"[9,3,10,11,12,13,1,7,0,8,14,2,15,4,5,6]", "APP2.13", {25, 81}, {17, 69}, {12, 52}},
}};

std::string pair(const GateCost& gc) {
    return "(" + std::to_string(gc.gates) + "," + std::to_string(gc.cost) + ")";
}

class Checker {
public:
    explicit Checker(RowOutcome& out) : out_(out) {}

    void require(bool ok, std::string what) {
        if (!ok) {
            out_.passed = false;
            out_.failures.push_back(std::move(what));
        }
    }

    template <class T>
    void compare(std::string field, const T& computed, const T& printed) {
        if (!(computed == printed)) out_.discrepancies.push_back({std::move(field), str(computed), str(printed)});
    }

    void detail(std::string key, std::string value) {
        out_.details.emplace_back(std::move(key), std::move(value));
    }

private:
    static std::string str(const GateCost& gc) { return pair(gc); }
    static std::string str(std::size_t v) { return std::to_string(v); }

    RowOutcome& out_;
};

ReductionResult reduce(const Circuit& c, const ExperimentOptions& options) {
    ReductionOptions ro{options.costs, {}};
    return options.fast ? eliminateNtrisFast(c, ro) : eliminateNtris(c, ro);
}

std::string removalSummary(const ReductionReport& report) {
    std::string s;
    for (const Removal& r : report.removals) {
        if (!s.empty()) s += ' ';
        s += "(" + std::to_string(r.start_gap) + "," + std::to_string(r.end_index) + ")";
    }
    return s.empty() ? "none" : s;
}

// Row evaluation must not throw past the row: a missing corpus entry or a
// parse error is a failed row.
template <class Fn>
RowOutcome guarded(std::string name, Fn&& fn) {
    RowOutcome out;
    out.row = std::move(name);
    try {
        fn(out);
    } catch (const std::exception& e) {
        out.passed = false;
        out.failures.push_back(std::string("error: ") + e.what());
    }
    return out;
}

RowOutcome evalTable1(const Table1Row& row, const ExperimentOptions& options) {
    return guarded(std::string(row.benchmark), [&](RowOutcome& out) {
        Checker check(out);
        const Circuit optimal = corpusCircuit(row.optimal_id);
        const Circuit ntri = corpusCircuit(row.ntri_id);
        const auto fused = [&](const Circuit& c) {
            return GateCost{c.size(), peresFusedCost(c, options.costs, options.peres_cost)};
        };

        check.require(optimal.markers().insertion_point.has_value(),
                      std::string(row.optimal_id) + " has no '#' insertion point");
        check.require(isIdentity(ntri), std::string(row.ntri_id) + " is not an identity");
        if (!out.passed) return;

        const std::size_t gap = *optimal.markers().insertion_point;
        check.compare("insertion point (1-based)", gap + 1, row.printed_insertion_point);

        const Circuit bugged = insertSegment(optimal, ntri, gap);
        check.require(equivalent(bugged, optimal), "bugged circuit changed the specification");
        check.compare("bugged (g,c)", fused(bugged), row.printed_bugged);
        check.detail("bugged", pair(fused(bugged)));

        const ReductionResult reduced = reduce(bugged, options);
        out.computed = fused(reduced.circuit);
        out.printed = row.printed_optimal;
        out.computed_plain_cost = circuitCost(reduced.circuit, options.costs);

        check.require(reduced.circuit.gates() == optimal.gates(),
                      "reduced circuit is not the optimal circuit gate for gate: " +
                          formatCircuit(reduced.circuit));
        check.require(out.computed == out.printed,
                      "optimal (g,c) " + pair(out.computed) + " != printed " + pair(out.printed));
        check.require(reduced.report.output_spec == reduced.report.input_spec,
                      "reduction changed the specification");
        check.compare("optimal cost, plain table", out.computed_plain_cost, row.printed_optimal.cost);
        check.detail("removals", removalSummary(reduced.report));
        check.detail("optimized (reference)", pair(row.printed_optimized));
    });
}

RowOutcome evalTable2(const Table2Row& row, const ExperimentOptions& options) {
    return guarded(std::string(row.circuit_id), [&](RowOutcome& out) {
        Checker check(out);
        const Circuit c = corpusCircuit(row.circuit_id);
        const Specification printed = Specification::fromString(row.specification);
        const Specification computed = simulate(c);

        out.computed = GateCost{c.size(), peresFusedCost(c, options.costs, options.peres_cost)};
        out.printed = row.printed_original;
        out.computed_plain_cost = circuitCost(c, options.costs);

        check.require(computed == printed,
                      "specification " + computed.toString() + " != printed " + printed.toString());
        check.compare("original (g,c)", out.computed, out.printed);
        check.compare("original cost, plain table", out.computed_plain_cost, row.printed_original.cost);

        const auto& bracket = c.markers().bracket;
        check.require(bracket.has_value(), "no [...] bracket in " + std::string(row.circuit_id));
        if (!bracket) return;
        check.require(isIdentity(slice(c, *bracket)), "bracketed segment is not an identity");
        check.detail("bracket", "[" + std::to_string(bracket->begin) + "," +
                                    std::to_string(bracket->end) + ")");

        const ReductionResult reduced = reduce(c, options);
        std::set<std::size_t> removed;
        for (const Removal& r : reduced.report.removals) {
            removed.insert(r.original_indices.begin(), r.original_indices.end());
        }
        bool all_removed = true;
        for (std::size_t k = bracket->begin; k < bracket->end; ++k) all_removed &= removed.contains(k);
        check.require(all_removed, "bracketed segment was not removed");
        check.require(reduced.report.output_spec == computed, "reduction changed the specification");

        const std::size_t outside = static_cast<std::size_t>(std::count_if(
            removed.begin(), removed.end(),
            [&](std::size_t k) { return k < bracket->begin || k >= bracket->end; }));
        const GateCost after{reduced.circuit.size(),
                             peresFusedCost(reduced.circuit, options.costs, options.peres_cost)};
        check.detail("reduced", pair(after));
        check.detail("reduced plain cost", std::to_string(circuitCost(reduced.circuit, options.costs)));
        check.detail("removed outside bracket", std::to_string(outside));
        check.detail("removals", removalSummary(reduced.report));
        check.detail("optimized (reference)", pair(row.printed_optimized));
        check.detail("hybrid (reference)", pair(row.printed_hybrid));
    });
}

}  // namespace

std::span<const Table1Row> table1Rows() noexcept { return kTable1; }
std::span<const Table2Row> table2Rows() noexcept { return kTable2; }

bool ExperimentReport::passed() const noexcept { return passedCount() == rows.size(); }

std::size_t ExperimentReport::passedCount() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const RowOutcome& r) { return r.passed; }));
}

ExperimentReport runTable1(const ExperimentOptions& options) {
    ExperimentReport report{"table1", {}};
    for (const Table1Row& row : kTable1) report.rows.push_back(evalTable1(row, options));
    return report;
}

ExperimentReport runTable2(const ExperimentOptions& options) {
    ExperimentReport report{"table2", {}};
    for (const Table2Row& row : kTable2) report.rows.push_back(evalTable2(row, options));
    return report;
}

std::string renderText(const ExperimentReport& report) {
    std::ostringstream out;
    out << report.name << ": " << report.passedCount() << "/" << report.rows.size() << " rows pass\n";
    out << std::left << std::setw(10) << "row" << std::setw(12) << "computed" << std::setw(12)
        << "printed" << std::setw(8) << "plain_c" << "status\n";
    for (const RowOutcome& r : report.rows) {
        out << std::setw(10) << r.row << std::setw(12) << pair(r.computed) << std::setw(12)
            << pair(r.printed) << std::setw(8) << r.computed_plain_cost
            << (r.passed ? "pass" : "FAIL") << '\n';
        for (const auto& [key, value] : r.details) out << "    " << key << ": " << value << '\n';
        for (const Discrepancy& d : r.discrepancies) {
            out << "    known-discrepancy " << d.field << ": computed " << d.computed << ", printed "
                << d.printed << '\n';
        }
        for (const std::string& f : r.failures) out << "    FAILED " << f << '\n';
    }
    return out.str();
}

std::string renderJson(std::span<const ExperimentReport> reports) {
    using nlohmann::json;
    json all = json::array();
    for (const ExperimentReport& report : reports) {
        json rows = json::array();
        for (const RowOutcome& r : report.rows) {
            json discrepancies = json::array();
            for (const Discrepancy& d : r.discrepancies) {
                discrepancies.push_back({{"field", d.field}, {"computed", d.computed}, {"printed", d.printed}});
            }
            json details = json::object();
            for (const auto& [key, value] : r.details) details[key] = value;
            rows.push_back({{"row", r.row},
                            {"computed_g", r.computed.gates},
                            {"computed_c", r.computed.cost},
                            {"printed_g", r.printed.gates},
                            {"printed_c", r.printed.cost},
                            {"computed_plain_c", r.computed_plain_cost},
                            {"status", r.passed ? "pass" : "fail"},
                            {"failures", r.failures},
                            {"known_discrepancies", std::move(discrepancies)},
                            {"details", std::move(details)}});
        }
        all.push_back({{"name", report.name},
                       {"passed", report.passedCount()},
                       {"total", report.rows.size()},
                       {"rows", std::move(rows)}});
    }
    return all.dump(2);
}

}  // namespace revid
