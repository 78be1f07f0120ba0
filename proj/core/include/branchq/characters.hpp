#pragma once

/* Exact character tables of symmetric groups and the spectral verification
 * of the single-partition branching matrices: the character table columns
 * are the eigenvectors, with eigenvalue n^(number of cycles of the class).
 */

#include <vector>

#include "branchq/branching.hpp"
#include "branchq/linalg.hpp"
#include "branchq/partition.hpp"

namespace branchq {

// Number of cycles of a permutation with the given cycle type (fixed
// points count as 1-cycles).
int cycle_count(const Partition& cls);

// Size of the conjugacy class with the given cycle type inside S_|cls|.
Int class_size(const Partition& cls);

// Number of standard Young tableaux of the shape (hook length formula);
// equals the dimension of the irreducible of S_|lam| labeled by lam.
Int syt_count(const Partition& lam);

struct CharacterTable {
    int d = 0;
    std::vector<Partition> rows;   // irreducibles, reverse-lex
    std::vector<Partition> cols;   // classes, identity class first
    IntMatrix values;              // values[i][j] = chi_{rows[i]}(cols[j])
    std::vector<Int> class_sizes;  // aligned with cols
};

// Full table for S_d; the bound guards against accidental huge requests
// and throws std::length_error when exceeded.
CharacterTable character_table(int d, int bound = 10);

struct SpectralCertificate {
    int n = 0, d = 0;
    std::vector<Partition> classes;  // identity first, same order as table cols
    std::vector<Int> eigenvalues;    // n^cycle_count per class, aligned
    bool identity_holds = false;     // A X = X D checked entry-exact
    bool invertible = false;         // det X != 0
    int failed_column = -1;          // first bad column when identity fails

    bool valid() const { return identity_holds && invertible; }
};

// Verify exactly that type1(n,d) * X = X * D with X the character table of
// S_d and D diagonal with entries n^cycle_count(class).
SpectralCertificate spectral_verify(int n, int d);

// Direct check that the compositions of d into n parts, weighted by
// multinomial coefficients, sum to n^d.
bool multinomial_identity(int n, int d);

// Expected eigenvalue multiset of a branching matrix, assembled from its
// diagonal blocks: single-partition blocks contribute n^cycle_count over
// the classes, pair blocks contribute products of two such powers.
std::vector<Int> block_eigenvalues(const BranchingMatrix& m);

} // namespace branchq
