#pragma once

#include <span>
#include <string_view>

#include "revid/circuit.hpp"

namespace revid {

/// One benchmark circuit shipped with the library, e.g. id "APP1.1.a"
/// from file "app1_1a.rev". The `app1_*a` circuits carry the `#`
/// insertion point; `app2_*` circuits carry the `[...]` identity span.
struct CorpusEntry {
    std::string_view id;
    std::string_view file_name;
    std::string_view text;
};

/// Every embedded corpus file, in natural file-name order.
std::span<const CorpusEntry> corpusEntries() noexcept;

/// Lookup by id ("APP2.8") or file name ("app2_8.rev"); nullptr if absent.
const CorpusEntry* findCorpusEntry(std::string_view key) noexcept;

/// Parsed corpus circuit. Throws Error if `key` is unknown.
Circuit corpusCircuit(std::string_view key);

}  // namespace revid
