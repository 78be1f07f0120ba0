/* Assembly of the branching matrices from the coefficient chains.
 *
 * Every entry is a sum over n-tuples (beta_1..beta_n) of labels of the
 * embedded factors.  A tuple contributes (row factor) * (column factor),
 * so each tuple is expanded once into a rank-one update of the matrix.
 */

#include "branchq/branching.hpp"

#include <algorithm>
#include <stdexcept>

#include "branchq/coeffs.hpp"

namespace branchq {

char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
        case Family::E: return 'E';
    }
    throw std::logic_error("family_letter: bad enum");
}

Family family_from_letter(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
    }
    throw std::invalid_argument(std::string("unknown family '") + c + "'");
}

std::string label_text(const Label& l) {
    return std::visit([](const auto& v) { return v.to_string(); }, l);
}

namespace {

// call fn(betas) for every n-tuple of partitions with sizes summing to total
template <class Fn>
void for_each_partition_tuple(int total, int n, Fn&& fn) {
    std::vector<Partition> tuple(n);
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == n - 1) {
            for (const Partition& p : partitions_of(remaining)) {
                tuple[slot] = p;
                fn(tuple);
            }
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            for (const Partition& p : partitions_of(c)) {
                tuple[slot] = p;
                self(self, slot + 1, remaining - c);
            }
        }
    };
    rec(rec, 0, total);
}

std::vector<std::vector<Partition>> partition_tuples(int total, int n) {
    std::vector<std::vector<Partition>> out;
    for_each_partition_tuple(total, n, [&](const std::vector<Partition>& t) { out.push_back(t); });
    return out;
}

} // namespace

BranchingMatrix type1(int n, int d, Family tag) {
    if (n < 1) throw std::invalid_argument("type1: n must be >= 1");
    if (d < 0) throw std::invalid_argument("type1: d must be >= 0");
    if (tag != Family::A && tag != Family::B)
        throw std::invalid_argument("type1: tag must be family A or B");

    const std::vector<Partition> axis = partitions_of(d);
    const int sz = static_cast<int>(axis.size());

    BranchingMatrix m;
    m.family = tag;
    m.n = n;
    m.params = {d};
    for (const Partition& p : axis) {
        m.row_labels.emplace_back(p);
        m.col_labels.emplace_back(p);
    }
    m.entries = zero_matrix(sz, sz);

    std::vector<long long> v(sz);
    for_each_partition_tuple(d, n, [&](const std::vector<Partition>& betas) {
        for (int i = 0; i < sz; ++i) v[i] = lr_multi(axis[i], betas);
        for (int i = 0; i < sz; ++i) {
            if (!v[i]) continue;
            for (int j = 0; j < sz; ++j)
                if (v[j]) m.entries[i][j] += Int(v[i]) * v[j];
        }
    });
    return m;
}

BranchingMatrix type2(int n, int p, int q) {
    if (n < 2) throw std::invalid_argument("type2: n must be >= 2");
    if (p < 0 || q < 0) throw std::invalid_argument("type2: p, q must be >= 0");

    const std::vector<PartitionPair> axis = pair_axis(p, q);
    const int sz = static_cast<int>(axis.size());

    BranchingMatrix m;
    m.family = Family::C;
    m.n = n;
    m.params = {p, q};
    for (const PartitionPair& pp : axis) {
        m.row_labels.emplace_back(pp);
        m.col_labels.emplace_back(pp);
    }
    m.entries = zero_matrix(sz, sz);

    // every nonzero term has plus-size minus minus-size equal to p - q on
    // both the column (contraction) and row (expansion) side
    std::vector<long long> col_factor(sz), row_factor(sz);
    for (int sp = std::max(0, p - q); sp <= p; ++sp) {
        const int sm = sp - (p - q);
        const auto plus_tuples = partition_tuples(sp, n);
        const auto minus_tuples = partition_tuples(sm, n);
        std::vector<PartitionPair> bps(n);
        for (const auto& pt : plus_tuples) {
            for (const auto& mt : minus_tuples) {
                for (int i = 0; i < n; ++i) bps[i] = PartitionPair{pt[i], mt[i]};
                bool any_col = false, any_row = false;
                for (int c = 0; c < sz; ++c) {
                    col_factor[c] = cap_C(axis[c], bps);
                    any_col = any_col || col_factor[c];
                }
                if (!any_col) continue;
                for (int r = 0; r < sz; ++r) {
                    row_factor[r] = cap_D(axis[r], bps);
                    any_row = any_row || row_factor[r];
                }
                if (!any_row) continue;
                for (int r = 0; r < sz; ++r) {
                    if (!row_factor[r]) continue;
                    for (int c = 0; c < sz; ++c)
                        if (col_factor[c])
                            m.entries[r][c] += Int(row_factor[r]) * col_factor[c];
                }
            }
        }
    }
    return m;
}

namespace {

// shared assembly for the sp and so families; col_coeff is cap_E or cap_G
BranchingMatrix parity_family(Family fam, int n, int p,
                              long long (*col_coeff)(const Partition&,
                                                     const std::vector<Partition>&)) {
    const std::vector<Partition> axis = parity_axis(p);
    const int sz = static_cast<int>(axis.size());

    BranchingMatrix m;
    m.family = fam;
    m.n = n;
    m.params = {p};
    for (const Partition& lam : axis) {
        m.row_labels.emplace_back(lam);
        m.col_labels.emplace_back(lam);
    }
    m.entries = zero_matrix(sz, sz);

    std::vector<long long> col_factor(sz), row_factor(sz);
    for (int s = p; s >= 0; s -= 2) {
        for_each_partition_tuple(s, n, [&](const std::vector<Partition>& betas) {
            bool any_col = false, any_row = false;
            for (int c = 0; c < sz; ++c) {
                col_factor[c] = col_coeff(axis[c], betas);
                any_col = any_col || col_factor[c];
            }
            if (!any_col) return;
            for (int r = 0; r < sz; ++r) {
                row_factor[r] = cap_F(axis[r], betas);
                any_row = any_row || row_factor[r];
            }
            if (!any_row) return;
            for (int r = 0; r < sz; ++r) {
                if (!row_factor[r]) continue;
                for (int c = 0; c < sz; ++c)
                    if (col_factor[c])
                        m.entries[r][c] += Int(row_factor[r]) * col_factor[c];
            }
        });
    }
    return m;
}

} // namespace

BranchingMatrix sp_matrix(int n, int p) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("sp_matrix: n must be even and >= 2");
    if (p < 0) throw std::invalid_argument("sp_matrix: p must be >= 0");
    return parity_family(Family::D, n, p, &cap_E);
}

BranchingMatrix so_matrix(int n, int p) {
    if (n < 2) throw std::invalid_argument("so_matrix: n must be >= 2");
    if (p < 0) throw std::invalid_argument("so_matrix: p must be >= 0");
    return parity_family(Family::E, n, p, &cap_G);
}

std::vector<int> axis_block_sizes(const BranchingMatrix& m) {
    std::vector<int> sizes;
    switch (m.family) {
        case Family::A:
        case Family::B:
            sizes.push_back(m.size());
            break;
        case Family::C: {
            const int p = m.params.at(0), q = m.params.at(1);
            for (int i = 0; i <= std::min(p, q); ++i)
                sizes.push_back(static_cast<int>(partitions_of(p - i).size() *
                                                 partitions_of(q - i).size()));
            break;
        }
        case Family::D:
        case Family::E: {
            const int p = m.params.at(0);
            for (int s = p; s >= 0; s -= 2)
                sizes.push_back(static_cast<int>(partitions_of(s).size()));
            break;
        }
    }
    return sizes;
}

IntMatrix diagonal_block(const BranchingMatrix& m, int block_index) {
    if (m.family == Family::A || m.family == Family::B)
        throw std::invalid_argument("diagonal_block: families C, D, E only");
    const std::vector<int> sizes = axis_block_sizes(m);
    if (block_index < 0 || block_index >= static_cast<int>(sizes.size()))
        throw std::invalid_argument("diagonal_block: block index out of range");
    int offset = 0;
    for (int i = 0; i < block_index; ++i) offset += sizes[i];
    const int sz = sizes[block_index];
    IntMatrix out(sz, IntVector(sz));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            out[i][j] = m.entries[offset + i][offset + j];
    return out;
}

} // namespace branchq
