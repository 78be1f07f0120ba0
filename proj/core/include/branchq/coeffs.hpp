#pragma once

/* Structure constants for the stable branching matrices.
 *
 * lr          Littlewood-Richardson coefficient c^lambda_{mu nu}
 * lr_multi    iterated LR: multiplicity of lambda in a product of n shapes
 * c_pair      mixed-tensor product multiplicity for a pair of pair-labels
 * d_pair      mixed-tensor restriction multiplicity (pair to pair)
 * cap_C/cap_D n-fold iterated versions of c_pair / d_pair
 * e_small     sp: multiplicity of lambda in a product restricted from gl
 * g_small     so: same with the symmetric (not exterior) plethysm
 * f_small     sp/so: restriction multiplicity through the stable branching
 * cap_E/F/G   n-fold iterated versions
 *
 * All results are nonnegative and small at the scales this library targets,
 * so plain long long is used; internal sums are finite by homogeneity.
 */

#include <vector>

#include "branchq/partition.hpp"

namespace branchq {

long long lr(const Partition& lam, const Partition& mu, const Partition& nu);

long long lr_multi(const Partition& lam, const std::vector<Partition>& betas);

long long c_pair(const PartitionPair& target, const PartitionPair& a,
                 const PartitionPair& b);

long long d_pair(const PartitionPair& target, const PartitionPair& a,
                 const PartitionPair& b);

long long cap_C(const PartitionPair& target, const std::vector<PartitionPair>& bps);

long long cap_D(const PartitionPair& target, const std::vector<PartitionPair>& bps);

long long e_small(const Partition& lam, const Partition& mu, const Partition& nu);

long long f_small(const Partition& lam, const Partition& mu, const Partition& nu);

long long g_small(const Partition& lam, const Partition& mu, const Partition& nu);

long long cap_E(const Partition& lam, const std::vector<Partition>& betas);

long long cap_F(const Partition& lam, const std::vector<Partition>& betas);

long long cap_G(const Partition& lam, const std::vector<Partition>& betas);

// Uniform query form used by the CLI: the target label first, then the
// remaining arguments in the order the functions above take them.
enum class CoefficientKind {
    LR, LR_MULTI, C_PAIR, D_PAIR, CAP_C, CAP_D,
    E_SMALL, F_SMALL, G_SMALL, CAP_E, CAP_F, CAP_G,
};

struct CoefficientQuery {
    CoefficientKind kind;
    std::vector<Partition> partitions;   // single-partition arguments
    std::vector<PartitionPair> pairs;    // pair arguments
};

// Dispatch on kind; throws std::invalid_argument when the argument counts
// do not match the kind.
long long evaluate(const CoefficientQuery& q);

} // namespace branchq
