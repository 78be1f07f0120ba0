#pragma once

/* Deterministic textual forms: JSON and CSV emitters for the value types
 * and the JSON reader for point data sequences.  Integers that fit in 64
 * bits are emitted as JSON numbers, larger ones as decimal strings.
 */

#include <string>

#include "branchq/branching.hpp"
#include "branchq/characters.hpp"
#include "branchq/dimension.hpp"
#include "branchq/ktheory.hpp"
#include "branchq/points.hpp"
#include "branchq/quiver.hpp"

namespace branchq {

std::string to_json(const BranchingMatrix& m);
std::string to_csv(const BranchingMatrix& m);
std::string to_text(const BranchingMatrix& m);

std::string to_json(const CharacterTable& t);
std::string to_csv(const CharacterTable& t);

std::string to_json(const Quiver& q);

std::string to_json(const BratteliDiagram& d);

std::string to_json(const SpectralCertificate& c);

std::string to_json(const DimCheckReport& r);
std::string to_text(const DimCheckReport& r);

std::string to_json(const PointDataSequence& s);

// Reads {quiver: {family, n, params}, preperiod: [{vertex, coords}], period:
// [...]}; coordinates are decimal integers or "a/b" rational strings.
// Throws std::invalid_argument on malformed input.
PointDataSequence point_sequence_from_json(const std::string& text);

} // namespace branchq
