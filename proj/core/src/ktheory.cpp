/* K0 positivity through exact Perron data or bounded iteration. */

#include "branchq/ktheory.hpp"

#include <stdexcept>

#include "branchq/characters.hpp"

namespace branchq {

BratteliDiagram unroll(const Quiver& q, const IntVector& initial_sizes, int stages) {
    if (static_cast<int>(initial_sizes.size()) != q.vertex_count())
        throw std::invalid_argument("unroll: initial sizes must match vertex count");
    for (const Int& s : initial_sizes)
        if (s < 1) throw std::invalid_argument("unroll: initial sizes must be >= 1");
    if (stages < 0) throw std::invalid_argument("unroll: stages must be >= 0");

    BratteliDiagram d;
    d.stages.push_back(initial_sizes);
    for (int i = 1; i < std::max(1, stages); ++i) {
        d.stages.push_back(mat_vec(q.arrow_counts, d.stages.back()));
        d.edge_multiplicities.push_back(q.arrow_counts);
    }
    return d;
}

namespace {

bool all_nonneg(const IntVector& v) {
    for (const Int& x : v)
        if (x < 0) return false;
    return true;
}

bool is_zero(const IntVector& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

bool type1_quiver(const Quiver& q) {
    return q.descriptor &&
           (q.descriptor->family == Family::A || q.descriptor->family == Family::B);
}

} // namespace

ConeVerdict k0_verdict(const Quiver& q, const K0Class& u, int iteration_cap) {
    if (!is_strongly_connected(q) || !is_primitive(q) || !is_symmetric(q))
        throw std::invalid_argument(
            "k0_verdict: quiver must be strongly connected, primitive, and symmetric");
    if (static_cast<int>(u.vector.size()) != q.vertex_count())
        throw std::invalid_argument("k0_verdict: class length must match vertex count");

    if (is_zero(u.vector)) return ConeVerdict::Inside;

    if (type1_quiver(q)) {
        // the Perron eigenvector is the standard-tableau count vector, so
        // the Perron coefficient sign is an exact integer inner product
        Int inner = 0;
        for (int i = 0; i < q.vertex_count(); ++i)
            inner += u.vector[i] * syt_count(std::get<Partition>(q.vertices[i]));
        return inner > 0 ? ConeVerdict::Inside : ConeVerdict::Outside;
    }

    // squaring the matrix removes negative-eigenvalue oscillation
    const IntMatrix b = mat_mul(q.arrow_counts, q.arrow_counts);
    IntVector v = u.vector;
    for (int it = 0; it <= iteration_cap; ++it) {
        if (all_nonneg(v)) return ConeVerdict::Inside;
        IntVector neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        if (all_nonneg(neg)) return ConeVerdict::Outside;  // stays nonpositive forever
        v = mat_vec(b, v);
    }
    return ConeVerdict::Indeterminate;
}

bool k0_positive(const Quiver& q, const K0Class& u) {
    switch (k0_verdict(q, u)) {
        case ConeVerdict::Inside: return true;
        case ConeVerdict::Outside: return false;
        case ConeVerdict::Indeterminate: break;
    }
    throw std::runtime_error("k0_positive: iteration cap reached without a verdict");
}

long long order_unit_witness(const Quiver& q, const K0Class& y, const K0Class& z) {
    if (y.vector.size() != z.vector.size())
        throw std::invalid_argument("order_unit_witness: class lengths differ");
    if (!k0_positive(q, y))
        throw std::invalid_argument("order_unit_witness: y must be in the positive cone");
    if (is_zero(y.vector)) {
        // N*y - z never changes with N, so either -z is already in the cone
        // or no witness exists
        K0Class neg;
        neg.stage = z.stage;
        for (const Int& x : z.vector) neg.vector.push_back(-x);
        if (k0_positive(q, neg)) return 1;
        throw std::invalid_argument("order_unit_witness: y = 0 admits no witness");
    }

    for (long long n = 1;; ++n) {
        K0Class cand;
        cand.stage = y.stage;
        cand.vector.resize(y.vector.size());
        for (std::size_t i = 0; i < y.vector.size(); ++i)
            cand.vector[i] = Int(n) * y.vector[i] - z.vector[i];
        if (k0_positive(q, cand)) return n;
    }
}

} // namespace branchq
