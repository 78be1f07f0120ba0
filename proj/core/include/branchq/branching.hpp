#pragma once

/* The four families of stable branching matrices for diagonal embeddings:
 *   A (= B)  single-partition labels, one block, symmetric
 *   C        pair labels, block lower triangular
 *   D, E     single-partition labels with |lambda| = p mod 2, block lower triangular
 * Rows are indexed by the small-algebra labels, columns by the big-algebra
 * labels; a column lists how one big irreducible decomposes.
 */

#include <string>
#include <variant>
#include <vector>

#include "branchq/linalg.hpp"
#include "branchq/partition.hpp"

namespace branchq {

enum class Family { A, B, C, D, E };

char family_letter(Family f);
Family family_from_letter(char c);  // throws std::invalid_argument

using Label = std::variant<Partition, PartitionPair>;

std::string label_text(const Label& l);

struct BranchingMatrix {
    Family family;
    int n;
    std::vector<int> params;        // {d}, {p,q}, or {p}
    std::vector<Label> row_labels;  // canonical axis; identical to col_labels
    std::vector<Label> col_labels;
    IntMatrix entries;

    int size() const { return static_cast<int>(entries.size()); }
};

// Multiplicity matrix for the n-fold diagonal embedding, single-partition
// labels of size d.  The B family has the same matrices; pass the tag to
// record which family was requested.
BranchingMatrix type1(int n, int d, Family tag = Family::A);

// Pair-labeled matrix on pair_axis(p,q); n >= 2.
BranchingMatrix type2(int n, int p, int q);

// Symplectic family on parity_axis(p); n must be even.
BranchingMatrix sp_matrix(int n, int p);

// Orthogonal family on parity_axis(p); n >= 2.
BranchingMatrix so_matrix(int n, int p);

// Sizes of the canonical diagonal blocks of the axis (one block for A/B).
std::vector<int> axis_block_sizes(const BranchingMatrix& m);

// The square diagonal sub-matrix on axis block i (0 = largest labels);
// families C, D, E only.
IntMatrix diagonal_block(const BranchingMatrix& m, int block_index);

} // namespace branchq
