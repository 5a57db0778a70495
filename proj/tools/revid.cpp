// revid: command-line front end for reversible-circuit identity removal.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revid/circuit.hpp"
#include "revid/corpus.hpp"
#include "revid/cost.hpp"
#include "revid/error.hpp"
#include "revid/experiments.hpp"
#include "revid/generators.hpp"
#include "revid/reducer.hpp"
#include "revid/semantics.hpp"
#include "revid/text.hpp"

namespace {

using namespace revid;

// A path on disk, or failing that the id or file name of a corpus entry.
Circuit loadCircuit(const std::string& source) {
    if (std::filesystem::exists(source)) return readCircuitFile(source);
    const std::string name = std::filesystem::path(source).filename().string();
    if (findCorpusEntry(source)) return corpusCircuit(source);
    if (findCorpusEntry(name)) return corpusCircuit(name);
    throw Error("no such circuit file or corpus entry: '" + source + "'");
}

void writeText(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reversible MCT circuits: simulation, quantum cost and identity elimination"};
    app.require_subcommand(1);

    std::size_t max_width = kDefaultMaxSimulationWidth;
    app.add_option("--max-width", max_width, "Largest circuit width to simulate")
        ->capture_default_str();

    std::string file, file_b, cost_table, report_path, which = "all";
    std::size_t width = 4, gates = 0, min_len = 8, max_controls = 3, attempts = 1000;
    std::uint64_t seed = 0;
    std::optional<std::size_t> at;
    bool trivial_only = false, fast = false, json = false, peres = false, allow_dups = false;

    auto* simulate_cmd = app.add_subcommand("simulate", "Print the permutation a circuit computes");
    simulate_cmd->add_option("file", file, "Circuit file or corpus id")->required();

    auto* cost_cmd = app.add_subcommand("cost", "Print gate count and quantum cost");
    cost_cmd->add_option("file", file, "Circuit file or corpus id")->required();
    cost_cmd->add_option("--cost-table", cost_table, "Lines of 'controls cost' merged over the defaults");
    cost_cmd->add_flag("--peres", peres, "Charge adjacent TOF+CNOT Peres pairs as one gate of cost 4");

    auto* reduce_cmd = app.add_subcommand("reduce", "Remove reversible identities");
    reduce_cmd->add_option("file", file, "Circuit file or corpus id")->required();
    reduce_cmd->add_flag("--trivial-only", trivial_only, "Only cancel adjacent identical gates");
    reduce_cmd->add_flag("--fast", fast, "Use the hash-indexed scan (same output)");
    reduce_cmd->add_option("--report", report_path, "Write the reduction report as JSON");
    reduce_cmd->add_option("--cost-table", cost_table, "Cost table used in the report");

    auto* gen_random_cmd = app.add_subcommand("gen-random", "Generate a random MCT circuit");
    gen_random_cmd->add_option("--width", width)->capture_default_str();
    gen_random_cmd->add_option("--gates", gates)->required();
    gen_random_cmd->add_option("--seed", seed)->capture_default_str();
    gen_random_cmd->add_option("--max-controls", max_controls)->capture_default_str();
    gen_random_cmd->add_flag("--allow-duplicates", allow_dups, "Allow equal adjacent gates");

    auto* gen_ntri_cmd = app.add_subcommand("gen-ntri", "Generate a random non-trivial identity");
    gen_ntri_cmd->add_option("--width", width)->capture_default_str();
    gen_ntri_cmd->add_option("--min-len", min_len)->capture_default_str();
    gen_ntri_cmd->add_option("--seed", seed)->capture_default_str();
    gen_ntri_cmd->add_option("--max-controls", max_controls)->capture_default_str();
    gen_ntri_cmd->add_option("--attempts", attempts)->capture_default_str();

    auto* insert_cmd = app.add_subcommand("insert", "Splice a segment into a host circuit");
    insert_cmd->add_option("host", file)->required();
    insert_cmd->add_option("segment", file_b)->required();
    insert_cmd->add_option("--at", at, "Gate gap (default: the host's '#' marker)");

    auto* concat_cmd = app.add_subcommand("concat", "Append one circuit to another");
    concat_cmd->add_option("front", file)->required();
    concat_cmd->add_option("rear", file_b)->required();

    auto* bench_cmd = app.add_subcommand("bench", "Replay the benchmark tables");
    bench_cmd->add_option("table", which, "table1, table2 or all")
        ->check(CLI::IsMember({"table1", "table2", "all"}))
        ->capture_default_str();
    bench_cmd->add_flag("--json", json, "Machine-readable report");
    bench_cmd->add_flag("--fast", fast, "Use the hash-indexed scan");

    auto* equiv_cmd = app.add_subcommand("equiv", "Exit 0 iff two circuits compute the same permutation");
    equiv_cmd->add_option("a", file)->required();
    equiv_cmd->add_option("b", file_b)->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "List or print the embedded benchmark circuits");
    corpus_cmd->add_option("id", file, "Corpus id or file name to print");

    CLI11_PARSE(app, argc, argv);

    try {
        const SimulationLimits limits{max_width};

        if (*simulate_cmd) {
            std::cout << simulate(loadCircuit(file), limits).toString() << '\n';
        } else if (*cost_cmd) {
            const CostTable table = cost_table.empty() ? CostTable{} : CostTable::fromFile(cost_table);
            const Circuit c = loadCircuit(file);
            std::cout << "gates " << gateCount(c) << '\n';
            std::cout << "cost " << circuitCost(c, table) << '\n';
            if (peres) std::cout << "peres-fused cost " << peresFusedCost(c, table) << '\n';
        } else if (*reduce_cmd) {
            ReductionOptions options{cost_table.empty() ? CostTable{} : CostTable::fromFile(cost_table), limits};
            const Circuit c = loadCircuit(file);
            const ReductionResult result = trivial_only ? removeTrivialIdentities(c, options)
                                           : fast       ? eliminateNtrisFast(c, options)
                                                        : eliminateNtris(c, options);
            std::cout << formatCircuit(result.circuit) << '\n';
            std::cerr << "gates " << result.report.input_gates << " -> " << result.report.output_gates
                      << ", " << result.report.removals.size() << " removal(s)\n";
            if (!report_path.empty()) writeText(report_path, reportToJson(result.report));
        } else if (*gen_random_cmd) {
            GeneratorConfig cfg;
            cfg.width = width;
            cfg.gates = gates;
            cfg.max_controls = max_controls;
            cfg.seed = seed;
            cfg.forbid_adjacent_duplicates = !allow_dups;
            std::cout << formatCircuit(genRandomCircuit(cfg)) << '\n';
        } else if (*gen_ntri_cmd) {
            GeneratorConfig cfg;
            cfg.width = width;
            cfg.min_length = min_len;
            cfg.max_controls = max_controls;
            cfg.seed = seed;
            cfg.attempt_budget = attempts;
            std::cout << formatCircuit(genRandomNtri(cfg)) << '\n';
        } else if (*insert_cmd) {
            const Circuit host = loadCircuit(file);
            const std::optional<std::size_t> point = at ? at : host.markers().insertion_point;
            if (!point) throw Error("host has no '#' marker; pass --at");
            std::cout << formatCircuit(insertSegment(host, loadCircuit(file_b), *point)) << '\n';
        } else if (*concat_cmd) {
            std::cout << formatCircuit(concat(loadCircuit(file), loadCircuit(file_b))) << '\n';
        } else if (*bench_cmd) {
            ExperimentOptions options;
            options.fast = fast;
            std::vector<ExperimentReport> reports;
            if (which != "table2") reports.push_back(runTable1(options));
            if (which != "table1") reports.push_back(runTable2(options));
            if (json) {
                std::cout << renderJson(reports) << '\n';
            } else {
                for (const ExperimentReport& r : reports) std::cout << renderText(r);
            }
            for (const ExperimentReport& r : reports) {
                if (!r.passed()) return 1;
            }
        } else if (*equiv_cmd) {
            const bool same = equivalent(loadCircuit(file), loadCircuit(file_b), limits);
            std::cout << (same ? "equivalent" : "not equivalent") << '\n';
            return same ? 0 : 1;
        } else if (*corpus_cmd) {
            if (file.empty()) {
                for (const CorpusEntry& e : corpusEntries()) std::cout << e.id << '\t' << e.file_name << '\n';
            } else {
                const CorpusEntry* e = findCorpusEntry(file);
                if (!e) throw Error("no corpus circuit named '" + file + "'");
                std::cout << e->text;
            }
        }
    } catch (const revid::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
