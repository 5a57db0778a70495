#include "revid/circuit.hpp"

#include <algorithm>
#include <utility>

#include "revid/error.hpp"

namespace revid {

Gate::Gate(std::span<const Wire> controls, Wire target) : target_(target) {
    if (index(target) >= kMaxWires) throw InvalidCircuit("gate target out of range");
    if (controls.size() >= kMaxWires) throw InvalidCircuit("too many controls");
    for (Wire c : controls) {
        if (index(c) >= kMaxWires) throw InvalidCircuit("gate control out of range");
        if (c == target) throw InvalidCircuit("gate target is also a control");
        if (mask_ & bit(c)) throw InvalidCircuit("gate repeats a control wire");
        mask_ |= bit(c);
        controls_[count_++] = c;
    }
}

std::size_t Gate::span() const noexcept {
    std::size_t hi = index(target_);
    for (Wire c : controls()) hi = std::max(hi, index(c));
    return hi + 1;
}

std::string defaultLabels(std::size_t width) {
    if (width > kMaxWires) throw InvalidCircuit("circuit width above 26 wires");
    std::string labels(width, 'a');
    for (std::size_t i = 0; i < width; ++i) labels[i] = static_cast<char>('a' + i);
    return labels;
}

Circuit::Circuit(std::size_t width, std::vector<Gate> gates, Markers markers)
    : Circuit(defaultLabels(width), std::move(gates), std::move(markers)) {}

Circuit::Circuit(std::string labels, std::vector<Gate> gates, Markers markers)
    : labels_(std::move(labels)), gates_(std::move(gates)), markers_(std::move(markers)) {
    validate();
}

void Circuit::validate() const {
    if (labels_.empty()) throw InvalidCircuit("circuit needs at least one wire");
    if (labels_.size() > kMaxWires) throw InvalidCircuit("circuit width above 26 wires");
    std::uint32_t seen = 0;
    for (char l : labels_) {
        if (l < 'a' || l > 'z') throw InvalidCircuit(std::string("bad wire label '") + l + "'");
        const std::uint32_t b = std::uint32_t{1} << (l - 'a');
        if (seen & b) throw InvalidCircuit(std::string("duplicate wire label '") + l + "'");
        seen |= b;
    }
    for (const Gate& g : gates_) {
        if (g.span() > width()) throw InvalidCircuit("gate uses a wire outside the circuit");
    }
    if (markers_.insertion_point && *markers_.insertion_point > gates_.size()) {
        throw InvalidCircuit("insertion point past the end of the circuit");
    }
    if (markers_.bracket) {
        const GateSpan& s = *markers_.bracket;
        if (s.begin > s.end || s.end > gates_.size()) throw InvalidCircuit("bracket out of range");
    }
}

Circuit Circuit::withMarkers(Markers markers) const {
    return Circuit(labels_, gates_, std::move(markers));
}

Circuit Circuit::withGates(std::vector<Gate> gates) const {
    return Circuit(labels_, std::move(gates));
}

namespace {

void requireSameWires(const Circuit& a, const Circuit& b) {
    if (a.labels() != b.labels()) {
        throw WidthMismatch("circuits disagree on wires: '" + a.labels() + "' vs '" +
                            b.labels() + "'");
    }
}

}  // namespace

Circuit concat(const Circuit& front, const Circuit& rear) {
    requireSameWires(front, rear);
    std::vector<Gate> gates;
    gates.reserve(front.size() + rear.size());
    gates.insert(gates.end(), front.gates().begin(), front.gates().end());
    gates.insert(gates.end(), rear.gates().begin(), rear.gates().end());
    return front.withGates(std::move(gates));
}

Circuit insertSegment(const Circuit& host, const Circuit& segment, std::size_t point) {
    requireSameWires(host, segment);
    if (point > host.size()) {
        throw InvalidCircuit("insertion point " + std::to_string(point) + " outside 0.." +
                             std::to_string(host.size()));
    }
    std::vector<Gate> gates;
    gates.reserve(host.size() + segment.size());
    const auto at = host.gates().begin() + static_cast<std::ptrdiff_t>(point);
    gates.insert(gates.end(), host.gates().begin(), at);
    gates.insert(gates.end(), segment.gates().begin(), segment.gates().end());
    gates.insert(gates.end(), at, host.gates().end());
    return host.withGates(std::move(gates));
}

Circuit inverse(const Circuit& c) {
    return c.withGates(std::vector<Gate>(c.gates().rbegin(), c.gates().rend()));
}

Circuit slice(const Circuit& c, GateSpan span) {
    if (span.begin > span.end || span.end > c.size()) throw InvalidCircuit("slice out of range");
    const auto first = c.gates().begin();
    return c.withGates(std::vector<Gate>(first + static_cast<std::ptrdiff_t>(span.begin),
                                         first + static_cast<std::ptrdiff_t>(span.end)));
}

}  // namespace revid
