#pragma once

/* Stationary Bratteli diagrams obtained by unrolling a quiver, and the
 * ordered-K0 tests: membership of a class in the positive cone and the
 * order-unit witness N with N*y - z in the cone.
 */

#include <vector>

#include "branchq/linalg.hpp"
#include "branchq/quiver.hpp"

namespace branchq {

struct BratteliDiagram {
    std::vector<IntVector> stages;             // block size vectors, stage 0 first
    std::vector<IntMatrix> edge_multiplicities;  // between consecutive stages
};

// Stationary diagram: sizes at stage i+1 = arrow matrix times sizes at
// stage i.  The result has max(1, stages) stage rows; 0 stages means the
// initial sizes only.
BratteliDiagram unroll(const Quiver& q, const IntVector& initial_sizes, int stages);

struct K0Class {
    int stage = 0;  // bookkeeping only; cone membership is stage independent
    IntVector vector;
};

enum class ConeVerdict { Inside, Outside, Indeterminate };

// Is the image of u in the limit ordered group inside the positive cone?
// Requires the quiver strongly connected, primitive, and symmetric (throws
// std::invalid_argument otherwise).  Single-partition-family quivers are
// decided exactly through the Perron eigenvector; other symmetric quivers
// fall back to iterating the squared arrow matrix up to iteration_cap and
// may return Indeterminate.
ConeVerdict k0_verdict(const Quiver& q, const K0Class& u, int iteration_cap = 64);

// Boolean form of k0_verdict; throws std::runtime_error on Indeterminate.
bool k0_positive(const Quiver& q, const K0Class& u);

// Smallest N >= 1 with N*y - z in the positive cone; requires
// k0_positive(q, y).
long long order_unit_witness(const Quiver& q, const K0Class& y, const K0Class& z);

} // namespace branchq
