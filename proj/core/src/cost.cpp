#include "revid/cost.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "revid/error.hpp"

namespace revid {

CostTable::CostTable() : entries_{{0, 1}, {1, 1}, {2, 5}, {3, 13}} {}

Cost CostTable::at(std::size_t controls) const {
    const auto it = entries_.find(controls);
    if (it == entries_.end()) throw MissingCost(controls);
    return it->second;
}

void CostTable::set(std::size_t controls, Cost cost) {
    if (cost == 0) throw Error("gate costs must be positive");
    entries_[controls] = cost;
}

void CostTable::merge(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (const auto slash = line.find("//"); slash != std::string_view::npos) line = line.substr(0, slash);

        std::istringstream fields{std::string(line)};
        std::string controls_text, cost_text, extra;
        if (!(fields >> controls_text)) continue;
        if (!(fields >> cost_text) || (fields >> extra)) {
            throw ParseError("cost table lines are 'controls cost'", line_no, 1);
        }
        std::size_t controls = 0;
        Cost cost = 0;
        const auto parse = [&](const std::string& s, auto& out) {
            const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            if (ec != std::errc{} || p != s.data() + s.size()) {
                throw ParseError("expected a decimal number, got '" + s + "'", line_no, 1);
            }
        };
        parse(controls_text, controls);
        parse(cost_text, cost);
        if (cost == 0) throw ParseError("gate costs must be positive", line_no, 1);
        entries_[controls] = cost;
        if (end == text.size()) break;
    }
}

CostTable CostTable::fromFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open cost table '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    CostTable table;
    table.merge(buffer.str());
    return table;
}

Cost gateCost(const Gate& g, const CostTable& table) { return table.at(g.controlCount()); }

Cost circuitCost(const Circuit& c, const CostTable& table) {
    Cost total = 0;
    for (const Gate& g : c.gates()) total += gateCost(g, table);
    return total;
}

std::size_t gateCount(const Circuit& c) noexcept { return c.size(); }

bool formsPeresPair(const Gate& a, const Gate& b) noexcept {
    const auto matches = [](const Gate& tof, const Gate& cnot) {
        if (tof.controlCount() != 2 || cnot.controlCount() != 1) return false;
        const std::uint32_t pair = cnot.controlMask() | bit(cnot.target());
        return pair == tof.controlMask();
    };
    return matches(a, b) || matches(b, a);
}

Cost peresFusedCost(const Circuit& c, const CostTable& table, Cost peres_cost) {
    Cost total = 0;
    const auto& gates = c.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (i + 1 < gates.size() && formsPeresPair(gates[i], gates[i + 1])) {
            total += peres_cost;
            ++i;
        } else {
            total += gateCost(gates[i], table);
        }
    }
    return total;
}

}  // namespace revid
