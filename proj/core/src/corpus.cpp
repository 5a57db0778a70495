#include "revid/corpus.hpp"

#include <string>

#include "revid/error.hpp"
#include "revid/text.hpp"

namespace revid {

const CorpusEntry* findCorpusEntry(std::string_view key) noexcept {
    for (const CorpusEntry& e : corpusEntries()) {
        if (e.id == key || e.file_name == key) return &e;
    }
    return nullptr;
}

Circuit corpusCircuit(std::string_view key) {
    const CorpusEntry* e = findCorpusEntry(key);
    if (!e) throw Error("no corpus circuit named '" + std::string(key) + "'");
    return parseCircuit(e->text);
}

}  // namespace revid
