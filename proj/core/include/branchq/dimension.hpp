#pragma once

/* Weyl dimension formulas for gl(k), sp(2k), so(k), and the dimension
 * cross-check of branching matrices: for each column, the dimension of the
 * big-algebra module must equal the multiplicity-weighted sum of the
 * small-algebra dimensions.  This is an end-to-end oracle for the whole
 * coefficient pipeline.
 */

#include <vector>

#include "branchq/branching.hpp"
#include "branchq/linalg.hpp"
#include "branchq/partition.hpp"

namespace branchq {

enum class AlgebraKind { GL, SP, SO };

struct DimensionQuery {
    AlgebraKind algebra;
    int rank;      // gl(rank), sp(2*rank), so(rank)
    Label weight;  // PartitionPair for GL, Partition for SP and SO
};

// Exact dimension of the irreducible module; throws std::invalid_argument
// when the weight does not fit the rank.
Int dim(const DimensionQuery& q);

struct DimCheckColumn {
    Label label;
    Int big_dim;   // dimension at the n*k scale
    Int combined;  // sum over rows of entry * small dimension
    bool ok = false;
};

struct DimCheckReport {
    Family family = Family::A;
    int n = 0, k = 0;
    std::vector<DimCheckColumn> columns;
    bool all_ok = false;
};

// Check every column of m at small scale k (big scale n*k).  Families A/B
// and C use gl, D uses sp, E uses so.  Mismatches are reported, not thrown.
DimCheckReport dim_check(const BranchingMatrix& m, int k);

} // namespace branchq
