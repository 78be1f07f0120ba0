/* Weyl dimension products, exact over the integers. */

#include "branchq/dimension.hpp"

#include <stdexcept>

namespace branchq {

namespace {

Int gl_dim(int k, const Partition& lam, const Partition& mu) {
    if (lam.length() + mu.length() > k)
        throw std::invalid_argument("dim: gl weight does not fit the rank");
    // weight (lam_1,..,lam_p, 0,.., -mu_q,..,-mu_1)
    std::vector<int> w(k, 0);
    for (int i = 0; i < lam.length(); ++i) w[i] = lam.parts[i];
    for (int i = 0; i < mu.length(); ++i) w[k - 1 - i] = -mu.parts[i];
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            num *= w[i] - w[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

Int sp_dim(int k, const Partition& lam) {
    if (lam.length() > k)
        throw std::invalid_argument("dim: sp weight does not fit the rank");
    // shifted rows l_i = lam_i + k - i + 1 against the staircase m_i
    std::vector<Int> l(k), m(k);
    for (int i = 0; i < k; ++i) {
        l[i] = lam.part(i) + k - i;
        m[i] = k - i;
    }
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= l[i];
        den *= m[i];
        for (int j = i + 1; j < k; ++j) {
            num *= l[i] * l[i] - l[j] * l[j];
            den *= m[i] * m[i] - m[j] * m[j];
        }
    }
    return num / den;
}

Int so_dim(int k, const Partition& lam) {
    const Partition conj = conjugate(lam);
    if (conj.part(0) + conj.part(1) > k)
        throw std::invalid_argument("dim: so weight does not fit the rank");
    // labels with first column longer than k/2 name the same module as the
    // associated partition with first column k - (first column)
    if (2 * conj.part(0) > k) {
        std::vector<int> cp = conj.parts;
        cp[0] = k - cp[0];
        // column lengths stay weakly decreasing because col2 <= k - col1
        return so_dim(k, conjugate(Partition(std::move(cp))));
    }
    if (k == 0) return 1;  // only the empty weight reaches here

    if (k % 2 == 1) {
        const int r = k / 2;
        // doubled half-integer contents keep everything integral
        std::vector<Int> l(r), m(r);
        for (int i = 0; i < r; ++i) {
            l[i] = 2 * lam.part(i) + 2 * (r - 1 - i) + 1;
            m[i] = 2 * (r - 1 - i) + 1;
        }
        Int num = 1, den = 1;
        for (int i = 0; i < r; ++i) {
            num *= l[i];
            den *= m[i];
            for (int j = i + 1; j < r; ++j) {
                num *= l[i] * l[i] - l[j] * l[j];
                den *= m[i] * m[i] - m[j] * m[j];
            }
        }
        return num / den;
    }

    const int r = k / 2;
    std::vector<Int> l(r), m(r);
    for (int i = 0; i < r; ++i) {
        l[i] = lam.part(i) + r - 1 - i;
        m[i] = r - 1 - i;
    }
    Int num = 1, den = 1;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            num *= l[i] * l[i] - l[j] * l[j];
            den *= m[i] * m[i] - m[j] * m[j];
        }
    Int d = num / den;
    // a full-height column pairs two mirror-image constituents
    if (lam.length() == r && lam.part(r - 1) > 0) d *= 2;
    return d;
}

} // namespace

Int dim(const DimensionQuery& q) {
    switch (q.algebra) {
        case AlgebraKind::GL: {
            if (const auto* pp = std::get_if<PartitionPair>(&q.weight))
                return gl_dim(q.rank, pp->plus, pp->minus);
            return gl_dim(q.rank, std::get<Partition>(q.weight), Partition{});
        }
        case AlgebraKind::SP: {
            if (!std::holds_alternative<Partition>(q.weight))
                throw std::invalid_argument("dim: sp weight must be a single partition");
            return sp_dim(q.rank, std::get<Partition>(q.weight));
        }
        case AlgebraKind::SO: {
            if (!std::holds_alternative<Partition>(q.weight))
                throw std::invalid_argument("dim: so weight must be a single partition");
            return so_dim(q.rank, std::get<Partition>(q.weight));
        }
    }
    throw std::logic_error("dim: bad algebra kind");
}

DimCheckReport dim_check(const BranchingMatrix& m, int k) {
    if (k < 0) throw std::invalid_argument("dim_check: k must be >= 0");

    AlgebraKind kind = AlgebraKind::GL;
    if (m.family == Family::D) kind = AlgebraKind::SP;
    if (m.family == Family::E) kind = AlgebraKind::SO;

    DimCheckReport report;
    report.family = m.family;
    report.n = m.n;
    report.k = k;
    report.all_ok = true;

    const int sz = m.size();
    std::vector<Int> small_dims(sz);
    for (int r = 0; r < sz; ++r)
        small_dims[r] = dim(DimensionQuery{kind, k, m.row_labels[r]});

    for (int c = 0; c < sz; ++c) {
        DimCheckColumn col;
        col.label = m.col_labels[c];
        col.big_dim = dim(DimensionQuery{kind, m.n * k, m.col_labels[c]});
        col.combined = 0;
        for (int r = 0; r < sz; ++r) col.combined += m.entries[r][c] * small_dims[r];
        col.ok = col.big_dim == col.combined;
        report.all_ok = report.all_ok && col.ok;
        report.columns.push_back(std::move(col));
    }
    return report;
}

} // namespace branchq
