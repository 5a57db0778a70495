#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "revid/circuit.hpp"

namespace revid {

/// Reads the listing notation used for MCT circuits:
///
///     // comment
///     wires: a b c d
///     NOT(a) CNOT(c, a) TOF(a, b, d) # TOF4(a, b, d, c) [MCT(a, b, c, d; e)]
///
/// The last argument of every gate is its target. `NOT`, `CNOT`, `TOF` and
/// `TOF4` take 0, 1, 2 and 3 controls; `MCT` takes any number, with the
/// target optionally separated by `;`. At most one `#` (insertion point)
/// and one `[`...`]` pair may appear. Newlines and stray `;` between gates
/// are insignificant.
///
/// Without a `wires:` header the wire order is the order of first
/// appearance and the width is the number of distinct letters.
///
/// Throws ParseError.
Circuit parseCircuit(std::string_view text);

/// Inverse of parseCircuit: `parseCircuit(formatCircuit(c)) == c`.
/// A `wires:` line is emitted only when the wire order could not be
/// recovered from the gates alone.
std::string formatCircuit(const Circuit& c);

/// Single gate in listing notation, e.g. "TOF(a, d, b)".
std::string formatGate(const Gate& g, std::string_view labels);

Circuit readCircuitFile(const std::filesystem::path& path);
void writeCircuitFile(const std::filesystem::path& path, const Circuit& c);

}  // namespace revid
