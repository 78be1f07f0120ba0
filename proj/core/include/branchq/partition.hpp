#pragma once

/* Integer partitions and pairs of partitions: the index sets for every
 * matrix, quiver and coefficient in this library.  The canonical order
 * everywhere is reverse lexicographic, (d) first and (1,...,1) last,
 * because that is the order the branching matrices are printed in.
 */

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace branchq {

struct Partition {
    // weakly decreasing, strictly positive; empty vector = zero partition
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);            // throws std::invalid_argument
    Partition(std::initializer_list<int> p);           // convenience, validates too

    int size() const;                                  // sum of parts
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const;                             // 0-based, 0 beyond the end

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;                     // "(3,1)", "()"
};

struct PartitionPair {
    Partition plus;    // lambda
    Partition minus;   // mu

    auto operator<=>(const PartitionPair&) const = default;

    std::string to_string() const;                     // "((3,1),(2))"
};

// All partitions of d in reverse-lexicographic order: (d) first, (1,..,1) last.
std::vector<Partition> partitions_of(int d);

// Transpose of the Young diagram.
Partition conjugate(const Partition& lam);

// Componentwise containment mu_i <= lambda_i (skew shape lambda/mu exists).
bool contains(const Partition& lam, const Partition& mu);

// Each part doubled: the shape 2*delta used by the sp/so coefficients.
Partition doubled(const Partition& lam);

// Axis for the pair-labeled (Type II) matrices: all (lambda, mu) with
// |lambda| <= p, |mu| <= q, |lambda|-|mu| = p-q, in blocks of decreasing
// |lambda|; within a block lambda-major, both components reverse-lex.
std::vector<PartitionPair> pair_axis(int p, int q);

// Axis for the sp/so matrices: all lambda with |lambda| <= p and
// |lambda| = p mod 2, in blocks |lambda| = p, p-2, ..., reverse-lex inside.
std::vector<Partition> parity_axis(int p);

// Parse the textual forms produced by to_string; throws std::invalid_argument.
Partition parse_partition(std::string_view text);
PartitionPair parse_partition_pair(std::string_view text);

} // namespace branchq
