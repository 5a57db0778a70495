#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "revid/gate.hpp"

namespace revid {

/// Half-open gate-index range `[begin, end)`.
struct GateSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const GateSpan&, const GateSpan&) = default;
};

/// Annotations carried over from circuit listings: an insertion point `#`
/// (a gap index in 0..m) and a bracketed span `[ ... ]`.
struct Markers {
    std::optional<std::size_t> insertion_point;
    std::optional<GateSpan> bracket;

    friend bool operator==(const Markers&, const Markers&) = default;
};

/// Ordered list of MCT gates over a fixed, named wire set.
///
/// Values are immutable once built; every editing operation returns a new
/// circuit. Wire `i` is printed as `labels()[i]`.
class Circuit {
public:
    /// Circuit of `width` wires labelled a, b, c, ...
    explicit Circuit(std::size_t width, std::vector<Gate> gates = {}, Markers markers = {});

    /// Circuit whose wire order is given by `labels` (distinct letters a..z).
    Circuit(std::string labels, std::vector<Gate> gates, Markers markers = {});

    std::size_t width() const noexcept { return labels_.size(); }
    const std::string& labels() const noexcept { return labels_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    const Markers& markers() const noexcept { return markers_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }
    const Gate& operator[](std::size_t i) const { return gates_[i]; }

    /// Same wires and gates, different annotations.
    Circuit withMarkers(Markers markers) const;
    Circuit withoutMarkers() const { return withMarkers({}); }
    /// Same wires, different gates; markers are dropped.
    Circuit withGates(std::vector<Gate> gates) const;

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    void validate() const;

    std::string labels_;
    std::vector<Gate> gates_;
    Markers markers_;
};

/// Default wire labels "abc..." for `width` wires.
std::string defaultLabels(std::size_t width);

/// `front` followed by `rear`. Both must share the wire order.
Circuit concat(const Circuit& front, const Circuit& rear);

/// `segment` spliced into `host` at gate gap `point` (0 prepends, m appends).
Circuit insertSegment(const Circuit& host, const Circuit& segment, std::size_t point);

/// Every MCT gate is self-inverse, so the inverse is the reversed gate list.
Circuit inverse(const Circuit& c);

/// Gates `[span.begin, span.end)` as a circuit on the same wires.
Circuit slice(const Circuit& c, GateSpan span);

}  // namespace revid
