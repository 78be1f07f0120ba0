/* Murnaghan-Nakayama characters and the spectral certificate. */

#include "branchq/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace branchq {

int cycle_count(const Partition& cls) {
    return cls.length();
}

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// chi_lam(rho) by border-strip removal on the beta-set (first-column hook
// lengths); removing an r-strip is subtracting r from one beta entry
long long mn_character(const Partition& lam, const std::vector<int>& rho) {
    if (rho.empty()) return 1;  // lam is empty too when sizes agree

    static std::unordered_map<std::string, long long> memo;
    static std::mutex mu;
    std::string key;
    for (int v : lam.parts) key += std::to_string(v) + ',';
    key += ';';
    for (int v : rho) key += std::to_string(v) + ',';
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    const int L = lam.length();
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lam.parts[i] + (L - 1 - i);

    const int r = rho[0];
    const std::vector<int> rest(rho.begin() + 1, rho.end());

    long long total = 0;
    for (int i = 0; i < L; ++i) {
        const int t = beta[i] - r;
        if (t < 0) continue;
        if (std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
        int height = 0;  // entries strictly between t and beta[i]
        for (int j = 0; j < L; ++j)
            if (beta[j] > t && beta[j] < beta[i]) ++height;
        std::vector<int> nb = beta;
        nb[i] = t;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts;
        for (int j = 0; j < L; ++j) {
            const int part = nb[j] - (L - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        const long long sub = mn_character(Partition(std::move(parts)), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }

    std::lock_guard<std::mutex> g(mu);
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

Int class_size(const Partition& cls) {
    const int d = cls.size();
    // centralizer order: product over part values v of v^m * m!
    Int z = 1;
    int i = 0;
    while (i < cls.length()) {
        int j = i;
        while (j < cls.length() && cls.parts[j] == cls.parts[i]) ++j;
        const int m = j - i;
        for (int t = 0; t < m; ++t) z *= cls.parts[i];
        z *= factorial(m);
        i = j;
    }
    return factorial(d) / z;
}

Int syt_count(const Partition& lam) {
    const Partition conj = conjugate(lam);
    Int hooks = 1;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts[i]; ++j)
            hooks *= lam.parts[i] - j + conj.parts[j] - i - 1;
    return factorial(lam.size()) / hooks;
}

CharacterTable character_table(int d, int bound) {
    if (d < 0) throw std::invalid_argument("character_table: d must be >= 0");
    if (d > bound)
        throw std::length_error("character_table: d exceeds the configured bound");

    CharacterTable t;
    t.d = d;
    t.rows = partitions_of(d);
    t.cols = partitions_of(d);
    std::reverse(t.cols.begin(), t.cols.end());  // identity class first

    const int sz = static_cast<int>(t.rows.size());
    t.values = zero_matrix(sz, sz);
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            t.values[i][j] = mn_character(t.rows[i], t.cols[j].parts);
    for (const Partition& cls : t.cols) t.class_sizes.push_back(class_size(cls));
    return t;
}

SpectralCertificate spectral_verify(int n, int d) {
    const BranchingMatrix a = type1(n, d);
    const CharacterTable t = character_table(d, std::max(d, 10));

    SpectralCertificate cert;
    cert.n = n;
    cert.d = d;
    cert.classes = t.cols;
    for (const Partition& cls : t.cols) {
        Int ev = 1;
        for (int i = 0; i < cycle_count(cls); ++i) ev *= n;
        cert.eigenvalues.push_back(ev);
    }

    // column by column: A x = n^p(cls) x
    cert.identity_holds = true;
    const int sz = static_cast<int>(t.rows.size());
    for (int c = 0; c < sz && cert.identity_holds; ++c) {
        IntVector x(sz);
        for (int i = 0; i < sz; ++i) x[i] = t.values[i][c];
        const IntVector ax = mat_vec(a.entries, x);
        for (int i = 0; i < sz; ++i) {
            if (ax[i] != cert.eigenvalues[c] * x[i]) {
                cert.identity_holds = false;
                cert.failed_column = c;
                break;
            }
        }
    }
    cert.invertible = determinant(t.values) != 0;
    return cert;
}

bool multinomial_identity(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("multinomial_identity: bad arguments");
    Int total = 0;
    std::vector<int> comp(n, 0);
    const Int dfact = factorial(d);
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == n - 1) {
            comp[slot] = remaining;
            Int denom = 1;
            for (int c : comp) denom *= factorial(c);
            total += dfact / denom;
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            comp[slot] = c;
            self(self, slot + 1, remaining - c);
        }
    };
    rec(rec, 0, d);
    Int expect = 1;
    for (int i = 0; i < d; ++i) expect *= n;
    return total == expect;
}

std::vector<Int> block_eigenvalues(const BranchingMatrix& m) {
    auto powers = [&](int d) {
        // multiset of n^cycle_count over the classes of S_d
        std::vector<Int> out;
        for (const Partition& cls : partitions_of(d)) {
            Int ev = 1;
            for (int i = 0; i < cycle_count(cls); ++i) ev *= m.n;
            out.push_back(ev);
        }
        return out;
    };

    std::vector<Int> evs;
    switch (m.family) {
        case Family::A:
        case Family::B:
            evs = powers(m.params.at(0));
            break;
        case Family::C: {
            const int p = m.params.at(0), q = m.params.at(1);
            for (int i = 0; i <= std::min(p, q); ++i)
                for (const Int& a : powers(p - i))
                    for (const Int& b : powers(q - i)) evs.push_back(a * b);
            break;
        }
        case Family::D:
        case Family::E: {
            const int p = m.params.at(0);
            for (int s = p; s >= 0; s -= 2)
                for (const Int& a : powers(s)) evs.push_back(a);
            break;
        }
    }
    std::sort(evs.begin(), evs.end());
    return evs;
}

} // namespace branchq
