/* Dense exact integer matrix helpers. */

#include "branchq/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace branchq {

namespace {

void check_rect(const IntMatrix& m, const char* who) {
    for (const auto& row : m)
        if (row.size() != m[0].size())
            throw std::invalid_argument(std::string(who) + ": ragged matrix");
}

} // namespace

IntMatrix identity_matrix(int n) {
    IntMatrix m(n, IntVector(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix zero_matrix(int rows, int cols) {
    return IntMatrix(rows, IntVector(cols, 0));
}

IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) return {};
    check_rect(m, "transpose");
    IntMatrix out(m[0].size(), IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j)
            out[j][i] = m[i][j];
    return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty()) return {};
    check_rect(a, "mat_mul");
    check_rect(b, "mat_mul");
    if (a[0].size() != b.size())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMatrix out(a.size(), IntVector(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

IntVector mat_vec(const IntMatrix& a, const IntVector& x) {
    if (a.empty()) return {};
    check_rect(a, "mat_vec");
    if (a[0].size() != x.size())
        throw std::invalid_argument("mat_vec: dimension mismatch");
    IntVector out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            out[i] += a[i][j] * x[j];
    return out;
}

IntMatrix mat_scale(const Int& c, const IntMatrix& m) {
    IntMatrix out = m;
    for (auto& row : out)
        for (Int& v : row) v *= c;
    return out;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
        throw std::invalid_argument("mat_add: dimension mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j)
            out[i][j] += b[i][j];
    return out;
}

bool mat_equal(const IntMatrix& a, const IntMatrix& b) {
    return a == b;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty()) return {};
    check_rect(a, "kronecker");
    check_rect(b, "kronecker");
    const std::size_t ar = a.size(), ac = a[0].size();
    const std::size_t br = b.size(), bc = b[0].size();
    IntMatrix out(ar * br, IntVector(ac * bc, 0));
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l)
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
        }
    return out;
}

Int determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    check_rect(m, "determinant");
    if (m[0].size() != n) throw std::invalid_argument("determinant: not square");

    // Bareiss: exact division at every step keeps entries integral
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace branchq
