#include "revid/text.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "revid/error.hpp"

namespace revid {

namespace {

struct RawGate {
    std::vector<char> wires;  // target last
    std::size_t line;
    std::size_t column;
};

std::optional<std::size_t> namedArity(std::string_view name) {
    if (name == "NOT") return 1;
    if (name == "CNOT") return 2;
    if (name == "TOF") return 3;
    if (name == "TOF4") return 4;
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Circuit run() {
        while (skipBlank()) {
            const char ch = peek();
            if (ch == '#') {
                if (insertion_) fail("more than one '#' insertion point");
                insertion_ = gates_.size();
                advance();
            } else if (ch == '[') {
                if (open_ || close_) fail("more than one '[' bracket");
                open_ = gates_.size();
                advance();
            } else if (ch == ']') {
                if (!open_ || close_) fail("']' without matching '['");
                close_ = gates_.size();
                advance();
            } else if (std::isupper(static_cast<unsigned char>(ch))) {
                readGate();
            } else if (std::islower(static_cast<unsigned char>(ch))) {
                readHeader();
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
        }
        if (open_ && !close_) fail("unbalanced '[': missing ']'");
        return build();
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool atEnd() const { return pos_ >= text_.size(); }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            line_start_ = pos_ + 1;
        }
        ++pos_;
    }

    std::size_t column() const { return pos_ - line_start_ + 1; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, column());
    }

    // Skips whitespace, comments and stray ';'. Returns false at end of input.
    bool skipBlank() {
        while (!atEnd()) {
            const char ch = peek();
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == ';') {
                advance();
            } else if (ch == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (!atEnd() && peek() != '\n') advance();
            } else {
                return true;
            }
        }
        return false;
    }

    void skipSpace() {
        while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    void skipInlineSpace() {
        while (!atEnd() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }

    std::string readWord() {
        std::string word;
        while (!atEnd() && std::isalnum(static_cast<unsigned char>(peek()))) {
            word += peek();
            advance();
        }
        return word;
    }

    void readHeader() {
        const std::size_t col = column();
        const std::string word = readWord();
        if (word != "wires" || peek() != ':') {
            throw ParseError("expected a gate name or 'wires:' header, got '" + word + "'", line_,
                             col);
        }
        if (header_) fail("duplicate 'wires:' header");
        if (!gates_.empty() || insertion_ || open_) fail("'wires:' header must precede all gates");
        advance();
        header_.emplace();
        while (true) {
            skipInlineSpace();
            if (atEnd() || peek() == '\n') break;
            if (peek() == ',') {
                advance();
                continue;
            }
            if (peek() == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') break;
            const char ch = peek();
            if (ch < 'a' || ch > 'z') fail(std::string("bad wire name '") + ch + "' in header");
            if (header_->find(ch) != std::string::npos) {
                fail(std::string("wire '") + ch + "' declared twice");
            }
            header_->push_back(ch);
            advance();
            if (!atEnd() && std::isalnum(static_cast<unsigned char>(peek()))) {
                fail("wire names are single letters a..z");
            }
        }
        if (header_->empty()) fail("'wires:' header declares no wires");
    }

    void readGate() {
        RawGate raw{{}, line_, column()};
        const std::string name = readWord();
        const std::optional<std::size_t> arity = namedArity(name);
        if (!arity && name != "MCT") {
            throw ParseError("unknown gate '" + name + "'", raw.line, raw.column);
        }
        skipInlineSpace();
        if (peek() != '(') fail("expected '(' after " + name);
        advance();
        std::optional<std::size_t> target_split;
        while (true) {
            skipSpace();
            if (peek() == ')') {
                if (raw.wires.empty()) fail(name + " needs a target wire");
                advance();
                break;
            }
            const char ch = peek();
            if (ch < 'a' || ch > 'z') fail(std::string("expected a wire letter, got '") + ch + "'");
            for (char w : raw.wires) {
                if (w == ch) {
                    throw ParseError(std::string("wire '") + ch + "' repeated in " + name,
                                     raw.line, raw.column);
                }
            }
            raw.wires.push_back(ch);
            advance();
            if (!atEnd() && std::isalnum(static_cast<unsigned char>(peek()))) {
                fail("wire names are single letters a..z");
            }
            skipSpace();
            if (peek() == ',') {
                advance();
            } else if (peek() == ';') {
                if (target_split) fail("more than one ';' in gate arguments");
                target_split = raw.wires.size();
                advance();
            } else if (peek() != ')') {
                fail(std::string("expected ',' or ')' in ") + name);
            }
        }
        if (target_split && *target_split + 1 != raw.wires.size()) {
            throw ParseError("';' must separate the controls from a single target", raw.line,
                             raw.column);
        }
        if (arity && raw.wires.size() != *arity) {
            throw ParseError(name + " takes " + std::to_string(*arity) + " wires, got " +
                                 std::to_string(raw.wires.size()),
                             raw.line, raw.column);
        }
        gates_.push_back(std::move(raw));
    }

    Circuit build() const {
        std::string labels;
        if (header_) {
            labels = *header_;
        } else {
            for (const RawGate& g : gates_) {
                for (char w : g.wires) {
                    if (labels.find(w) == std::string::npos) labels.push_back(w);
                }
            }
            if (labels.empty()) labels = "a";
        }
        std::vector<Gate> gates;
        gates.reserve(gates_.size());
        for (const RawGate& raw : gates_) {
            std::vector<Wire> wires;
            for (char w : raw.wires) {
                const std::size_t at = labels.find(w);
                if (at == std::string::npos) {
                    throw ParseError(std::string("wire '") + w + "' not declared in header",
                                     raw.line, raw.column);
                }
                wires.push_back(wire(at));
            }
            const Wire target = wires.back();
            wires.pop_back();
            gates.emplace_back(wires, target);
        }
        Markers markers;
        markers.insertion_point = insertion_;
        if (open_) markers.bracket = GateSpan{*open_, *close_};
        return Circuit(labels, std::move(gates), markers);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t line_start_ = 0;
    std::vector<RawGate> gates_;
    std::optional<std::string> header_;
    std::optional<std::size_t> insertion_;
    std::optional<std::size_t> open_;
    std::optional<std::size_t> close_;
};

// Wire order parseCircuit would infer without a header.
std::string inferredLabels(const Circuit& c) {
    std::string labels;
    for (const Gate& g : c.gates()) {
        for (Wire w : g.controls()) {
            if (labels.find(c.labels()[index(w)]) == std::string::npos) {
                labels.push_back(c.labels()[index(w)]);
            }
        }
        const char t = c.labels()[index(g.target())];
        if (labels.find(t) == std::string::npos) labels.push_back(t);
    }
    if (labels.empty()) labels = "a";
    return labels;
}

}  // namespace

Circuit parseCircuit(std::string_view text) { return Parser(text).run(); }

std::string formatGate(const Gate& g, std::string_view labels) {
    static constexpr std::array<const char*, 4> kNames = {"NOT", "CNOT", "TOF", "TOF4"};
    std::string out;
    const bool named = g.controlCount() < kNames.size();
    out += named ? kNames[g.controlCount()] : "MCT";
    out += '(';
    for (Wire c : g.controls()) {
        out += labels[index(c)];
        out += ", ";
    }
    if (!named) {
        out.resize(out.size() - 2);
        out += "; ";
    }
    out += labels[index(g.target())];
    out += ')';
    return out;
}

std::string formatCircuit(const Circuit& c) {
    std::vector<std::string> tokens;
    const Markers& mk = c.markers();
    for (std::size_t gap = 0; gap <= c.size(); ++gap) {
        if (mk.bracket && mk.bracket->end == gap && mk.bracket->begin < gap) tokens.back() += ']';
        if (mk.insertion_point == gap) tokens.emplace_back("#");
        if (mk.bracket && mk.bracket->begin == gap && mk.bracket->end == gap) {
            tokens.emplace_back("[]");
        }
        if (gap == c.size()) break;
        std::string token = formatGate(c[gap], c.labels());
        if (mk.bracket && mk.bracket->begin == gap && mk.bracket->end > gap) token.insert(0, "[");
        tokens.push_back(std::move(token));
    }

    std::string out;
    if (c.labels() != inferredLabels(c)) {
        out += "wires:";
        for (char l : c.labels()) {
            out += ' ';
            out += l;
        }
        out += '\n';
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

Circuit readCircuitFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open circuit file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parseCircuit(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), 0, 0);
    }
}

void writeCircuitFile(const std::filesystem::path& path, const Circuit& c) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write circuit file '" + path.string() + "'");
    out << formatCircuit(c) << '\n';
}

}  // namespace revid
