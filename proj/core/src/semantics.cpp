#include "revid/semantics.hpp"

#include <bit>
#include <charconv>
#include <numeric>

#include "revid/error.hpp"

namespace revid {

void checkSimulationWidth(std::size_t width, SimulationLimits limits) {
    if (width > limits.max_width || width > 31) {
        throw WidthLimitExceeded("circuit width " + std::to_string(width) +
                                 " exceeds the simulation cap of " +
                                 std::to_string(limits.max_width) + " wires");
    }
}

Specification Specification::identity(std::size_t width) {
    std::vector<std::uint32_t> image(std::size_t{1} << width);
    std::iota(image.begin(), image.end(), std::uint32_t{0});
    return Specification(width, std::move(image));
}

Specification::Specification(std::vector<std::uint32_t> image) : image_(std::move(image)) {
    if (image_.empty() || !std::has_single_bit(image_.size())) {
        throw InvalidCircuit("specification length must be a power of two");
    }
    width_ = static_cast<std::size_t>(std::countr_zero(image_.size()));
    std::vector<bool> seen(image_.size());
    for (std::uint32_t y : image_) {
        if (y >= image_.size() || seen[y]) throw InvalidCircuit("specification is not a permutation");
        seen[y] = true;
    }
}

bool Specification::isIdentity() const noexcept {
    for (std::size_t x = 0; x < image_.size(); ++x) {
        if (image_[x] != x) return false;
    }
    return true;
}

void Specification::applyGate(const Gate& g) noexcept {
    for (std::uint32_t& y : image_) y = g.apply(y);
}

Specification Specification::compose(const Specification& first, const Specification& second) {
    if (first.size() != second.size()) throw WidthMismatch("composing specifications of different width");
    std::vector<std::uint32_t> image(first.size());
    for (std::size_t x = 0; x < image.size(); ++x) image[x] = second.image_[first.image_[x]];
    return Specification(first.width_, std::move(image));
}

Specification Specification::inverse() const {
    std::vector<std::uint32_t> image(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x) image[image_[x]] = static_cast<std::uint32_t>(x);
    return Specification(width_, std::move(image));
}

std::string Specification::toString() const {
    std::string out = "[";
    for (std::size_t x = 0; x < image_.size(); ++x) {
        if (x) out += ',';
        out += std::to_string(image_[x]);
    }
    out += ']';
    return out;
}

Specification Specification::fromString(std::string_view text) {
    std::vector<std::uint32_t> image;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
    };
    skip();
    if (pos >= text.size() || text[pos] != '[') throw ParseError("specification must start with '['", 0, 0);
    ++pos;
    skip();
    if (pos < text.size() && text[pos] == ']') throw ParseError("empty specification", 0, 0);
    while (true) {
        skip();
        std::uint32_t v = 0;
        const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc{}) throw ParseError("expected a number in specification", 0, 0);
        pos = static_cast<std::size_t>(end - text.data());
        image.push_back(v);
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
        } else if (pos < text.size() && text[pos] == ']') {
            ++pos;
            break;
        } else {
            throw ParseError("expected ',' or ']' in specification", 0, 0);
        }
    }
    skip();
    if (pos != text.size()) throw ParseError("trailing text after specification", 0, 0);
    return Specification(std::move(image));
}

std::size_t Specification::hash() const noexcept {
    // FNV-1a over the image words.
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t y : image_) {
        h ^= y;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

Specification gatePermutation(const Gate& g, std::size_t width, SimulationLimits limits) {
    checkSimulationWidth(width, limits);
    if (g.span() > width) throw InvalidCircuit("gate does not fit the requested width");
    Specification s = Specification::identity(width);
    s.applyGate(g);
    return s;
}

Specification simulate(const Circuit& c, SimulationLimits limits) {
    checkSimulationWidth(c.width(), limits);
    Specification s = Specification::identity(c.width());
    for (const Gate& g : c.gates()) s.applyGate(g);
    return s;
}

PrefixTrace prefixTrace(const Circuit& c, SimulationLimits limits) {
    checkSimulationWidth(c.width(), limits);
    PrefixTrace trace;
    trace.specs.reserve(c.size() + 1);
    trace.specs.push_back(Specification::identity(c.width()));
    for (const Gate& g : c.gates()) {
        Specification next = trace.specs.back();
        next.applyGate(g);
        trace.specs.push_back(std::move(next));
    }
    return trace;
}

bool isIdentity(const Circuit& c, SimulationLimits limits) { return simulate(c, limits).isIdentity(); }

bool equivalent(const Circuit& a, const Circuit& b, SimulationLimits limits) {
    if (a.labels() != b.labels()) {
        throw WidthMismatch("cannot compare circuits on wires '" + a.labels() + "' and '" +
                            b.labels() + "'");
    }
    return simulate(a, limits) == simulate(b, limits);
}

}  // namespace revid
