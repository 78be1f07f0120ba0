#pragma once

/* Quivers built from branching matrices: labeled vertices, arrow-count
 * matrix, the three structural predicates, and the sufficient simplicity
 * criterion (strongly connected + primitive + symmetric).
 */

#include <optional>
#include <string>
#include <vector>

#include "branchq/branching.hpp"
#include "branchq/linalg.hpp"

namespace branchq {

struct QuiverDescriptor {
    Family family;
    int n;
    std::vector<int> params;
};

struct Quiver {
    std::vector<Label> vertices;
    IntMatrix arrow_counts;  // entry (i,j) = number of arrows vertex i -> vertex j
    std::optional<QuiverDescriptor> descriptor;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

Quiver quiver_of(const BranchingMatrix& m);

// Every ordered vertex pair is joined by a directed path.
bool is_strongly_connected(const Quiver& q);

// The gcd of the lengths of all directed cycles is 1 (false when the
// quiver has no cycle at all).
bool is_primitive(const Quiver& q);

// Arrow-count matrix equals its transpose.
bool is_symmetric(const Quiver& q);

enum class SimplicityVerdict { Simple, Inconclusive };

// Simple when all three predicates hold; the criterion is sufficient, not
// necessary, so the negative answer is Inconclusive.
SimplicityVerdict simplicity_certificate(const Quiver& q);

// GraphViz DOT text; deterministic vertex order, every edge labeled with
// its multiplicity.
std::string to_dot(const Quiver& q);

} // namespace branchq
