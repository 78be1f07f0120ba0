/* Structure constants built from Littlewood-Richardson numbers.
 *
 * lr counts lattice-word skew tableaux directly; everything else is a
 * finite sum of lr products with sizes pinned down by homogeneity.
 * All entry points memoize on the exact argument lists.
 */

#include "branchq/coeffs.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace branchq {

namespace {

using Key = std::vector<int>;

void append_key(Key& k, const Partition& p) {
    k.insert(k.end(), p.parts.begin(), p.parts.end());
    k.push_back(-1);
}

void append_key(Key& k, const PartitionPair& pp) {
    append_key(k, pp.plus);
    append_key(k, pp.minus);
}

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : k)
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

// lock held only around lookup/insert so recursive calls can reenter
class Memo {
  public:
    bool find(const Key& k, long long& out) {
        std::lock_guard<std::mutex> g(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const Key& k, long long v) {
        std::lock_guard<std::mutex> g(mu_);
        map_.emplace(k, v);
    }

  private:
    std::unordered_map<Key, long long, KeyHash> map_;
    std::mutex mu_;
};

// count skew tableaux of shape lam/mu, content nu, whose reverse reading
// word (rows top to bottom, right to left within a row) is a lattice word
long long lr_uncached(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() != mu.size() + nu.size()) return 0;
    if (!contains(lam, mu)) return 0;
    if (nu.length() == 0) return 1;  // sizes match and mu fits, so lam == mu

    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int r = 0; r < lam.length(); ++r)
        for (int c = lam.part(r) - 1; c >= mu.part(r); --c)
            cells.push_back({r, c});

    const int nv = nu.length();
    std::vector<int> cnt(nv + 1, 0);
    std::vector<std::vector<int>> grid(lam.length());
    for (int r = 0; r < lam.length(); ++r) grid[r].assign(lam.part(r), 0);

    long long total = 0;
    auto dfs = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) { ++total; return; }
        const auto [r, c] = cells[idx];
        for (int v = 1; v <= nv; ++v) {
            if (cnt[v] >= nu.part(v - 1)) continue;
            if (v > 1 && cnt[v - 1] < cnt[v] + 1) continue;                      // lattice
            if (c + 1 < lam.part(r) && v > grid[r][c + 1]) continue;             // row weak
            if (r > 0 && c >= mu.part(r - 1) && v <= grid[r - 1][c]) continue;   // col strict
            grid[r][c] = v;
            ++cnt[v];
            self(self, idx + 1);
            --cnt[v];
        }
    };
    dfs(dfs, 0);
    return total;
}

} // namespace

long long lr(const Partition& lam, const Partition& mu, const Partition& nu) {
    static Memo memo;
    Key k;
    append_key(k, lam);
    append_key(k, mu);
    append_key(k, nu);
    long long v;
    if (memo.find(k, v)) return v;
    v = lr_uncached(lam, mu, nu);
    memo.store(k, v);
    return v;
}

long long lr_multi(const Partition& lam, const std::vector<Partition>& betas) {
    if (betas.empty()) return lam.length() == 0 ? 1 : 0;
    if (betas.size() == 1) return lam == betas[0] ? 1 : 0;
    if (betas.size() == 2) return lr(lam, betas[0], betas[1]);

    // key keeps the betas in given order; the value is permutation invariant
    // but that is a theorem, not an assumption baked into the cache
    static Memo memo;
    Key k;
    append_key(k, lam);
    k.push_back(-2);
    for (const Partition& b : betas) append_key(k, b);
    long long v;
    if (memo.find(k, v)) return v;

    int rest = 0;
    for (std::size_t i = 1; i < betas.size(); ++i) rest += betas[i].size();
    const int s = lam.size() - betas[0].size();

    long long total = 0;
    if (s == rest && s >= 0) {
        const std::vector<Partition> tail(betas.begin() + 1, betas.end());
        for (const Partition& alpha : partitions_of(s)) {
            long long c = lr(lam, alpha, betas[0]);
            if (c) total += c * lr_multi(alpha, tail);
        }
    }
    memo.store(k, total);
    return total;
}

long long c_pair(const PartitionPair& target, const PartitionPair& a,
                 const PartitionPair& b) {
    // delta carries the boxes added symmetrically on both sides
    const int d1 = target.plus.size() - a.plus.size() - b.plus.size();
    const int d2 = target.minus.size() - a.minus.size() - b.minus.size();
    if (d1 != d2 || d1 < 0) return 0;

    static Memo memo;
    Key k;
    append_key(k, target);
    append_key(k, a);
    append_key(k, b);
    long long v;
    if (memo.find(k, v)) return v;

    const int gp = a.plus.size() + b.plus.size();
    const int gm = a.minus.size() + b.minus.size();
    long long total = 0;
    for (const Partition& delta : partitions_of(d1)) {
        long long sp = 0;
        for (const Partition& gamma : partitions_of(gp))
            sp += lr(target.plus, gamma, delta) * lr(gamma, a.plus, b.plus);
        if (!sp) continue;
        long long sm = 0;
        for (const Partition& gamma : partitions_of(gm))
            sm += lr(target.minus, gamma, delta) * lr(gamma, a.minus, b.minus);
        total += sp * sm;
    }
    memo.store(k, total);
    return total;
}

long long d_pair(const PartitionPair& target, const PartitionPair& a,
                 const PartitionPair& b) {
    // gamma1 contracts a.plus against b.minus, gamma2 contracts b.plus
    // against a.minus; both factors shrink by the same total
    const int s1 = a.plus.size() + b.plus.size() - target.plus.size();
    const int s2 = a.minus.size() + b.minus.size() - target.minus.size();
    if (s1 != s2 || s1 < 0) return 0;

    static Memo memo;
    Key k;
    append_key(k, target);
    append_key(k, a);
    append_key(k, b);
    long long v;
    if (memo.find(k, v)) return v;

    long long total = 0;
    const int g1_max = std::min(a.plus.size(), b.minus.size());
    const int g2_max = std::min(b.plus.size(), a.minus.size());
    for (int g1 = std::max(0, s1 - g2_max); g1 <= std::min(s1, g1_max); ++g1) {
        const int g2 = s1 - g1;
        for (const Partition& gamma1 : partitions_of(g1)) {
            for (const Partition& gamma2 : partitions_of(g2)) {
                long long t1 = 0;
                for (const Partition& a1 : partitions_of(a.plus.size() - g1)) {
                    long long f = lr(a.plus, a1, gamma1);
                    if (!f) continue;
                    for (const Partition& a2 : partitions_of(b.plus.size() - g2))
                        t1 += f * lr(b.plus, gamma2, a2) * lr(target.plus, a1, a2);
                }
                if (!t1) continue;
                long long t2 = 0;
                for (const Partition& b1 : partitions_of(a.minus.size() - g2)) {
                    long long f = lr(a.minus, b1, gamma2);
                    if (!f) continue;
                    for (const Partition& b2 : partitions_of(b.minus.size() - g1))
                        t2 += f * lr(b.minus, gamma1, b2) * lr(target.minus, b1, b2);
                }
                total += t1 * t2;
            }
        }
    }
    memo.store(k, total);
    return total;
}

long long cap_C(const PartitionPair& target, const std::vector<PartitionPair>& bps) {
    if (bps.empty())
        return (target.plus.length() == 0 && target.minus.length() == 0) ? 1 : 0;
    if (bps.size() == 1) return target == bps[0] ? 1 : 0;
    if (bps.size() == 2) return c_pair(target, bps[0], bps[1]);

    static Memo memo;
    Key k;
    append_key(k, target);
    k.push_back(-2);
    for (const PartitionPair& bp : bps) append_key(k, bp);
    long long v;
    if (memo.find(k, v)) return v;

    int rest_p = 0, rest_m = 0;
    for (std::size_t i = 1; i < bps.size(); ++i) {
        rest_p += bps[i].plus.size();
        rest_m += bps[i].minus.size();
    }
    // plus/minus sizes of the intermediate pair are locked together because
    // c_pair adds the same delta on both sides
    const int diff = (target.plus.size() - target.minus.size()) -
                     (bps[0].plus.size() - bps[0].minus.size());
    const std::vector<PartitionPair> tail(bps.begin() + 1, bps.end());

    long long total = 0;
    for (int sp = rest_p; sp <= target.plus.size() - bps[0].plus.size(); ++sp) {
        const int sm = sp - diff;
        if (sm < rest_m || sm > target.minus.size() - bps[0].minus.size()) continue;
        for (const Partition& ap : partitions_of(sp)) {
            for (const Partition& am : partitions_of(sm)) {
                const PartitionPair apair{ap, am};
                long long c = c_pair(target, apair, bps[0]);
                if (c) total += c * cap_C(apair, tail);
            }
        }
    }
    memo.store(k, total);
    return total;
}

long long cap_D(const PartitionPair& target, const std::vector<PartitionPair>& bps) {
    if (bps.empty())
        return (target.plus.length() == 0 && target.minus.length() == 0) ? 1 : 0;
    if (bps.size() == 1) return target == bps[0] ? 1 : 0;
    if (bps.size() == 2) return d_pair(target, bps[0], bps[1]);

    static Memo memo;
    Key k;
    append_key(k, target);
    k.push_back(-2);
    for (const PartitionPair& bp : bps) append_key(k, bp);
    long long v;
    if (memo.find(k, v)) return v;

    int pre_p = 0, pre_m = 0;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        pre_p += bps[i].plus.size();
        pre_m += bps[i].minus.size();
    }
    const PartitionPair& last = bps.back();
    const std::vector<PartitionPair> prefix(bps.begin(), bps.end() - 1);
    const int diff = pre_p - pre_m;

    long long total = 0;
    for (int sp = std::max(0, target.plus.size() - last.plus.size()); sp <= pre_p; ++sp) {
        const int sm = sp - diff;
        if (sm < 0 || sm > pre_m) continue;
        for (const Partition& ap : partitions_of(sp)) {
            for (const Partition& am : partitions_of(sm)) {
                const PartitionPair apair{ap, am};
                long long d = d_pair(target, apair, last);
                if (d) total += d * cap_D(apair, prefix);
            }
        }
    }
    memo.store(k, total);
    return total;
}

long long e_small(const Partition& lam, const Partition& mu, const Partition& nu) {
    // leftover boxes come in vertical dominoes: shapes (2 delta)'
    const int gsize = mu.size() + nu.size();
    const int rem = lam.size() - gsize;
    if (rem < 0 || rem % 2 != 0) return 0;

    static Memo memo;
    Key k;
    k.push_back(-3);
    append_key(k, lam);
    append_key(k, mu);
    append_key(k, nu);
    long long v;
    if (memo.find(k, v)) return v;

    long long total = 0;
    for (const Partition& delta : partitions_of(rem / 2)) {
        const Partition even_cols = conjugate(doubled(delta));
        for (const Partition& gamma : partitions_of(gsize)) {
            long long c = lr(gamma, mu, nu);
            if (c) total += c * lr(lam, gamma, even_cols);
        }
    }
    memo.store(k, total);
    return total;
}

long long g_small(const Partition& lam, const Partition& mu, const Partition& nu) {
    // same shape of sum as e_small but with even-row shapes 2 delta
    const int gsize = mu.size() + nu.size();
    const int rem = lam.size() - gsize;
    if (rem < 0 || rem % 2 != 0) return 0;

    static Memo memo;
    Key k;
    k.push_back(-4);
    append_key(k, lam);
    append_key(k, mu);
    append_key(k, nu);
    long long v;
    if (memo.find(k, v)) return v;

    long long total = 0;
    for (const Partition& delta : partitions_of(rem / 2)) {
        const Partition even_rows = doubled(delta);
        for (const Partition& gamma : partitions_of(gsize)) {
            long long c = lr(gamma, mu, nu);
            if (c) total += c * lr(lam, gamma, even_rows);
        }
    }
    memo.store(k, total);
    return total;
}

long long f_small(const Partition& lam, const Partition& mu, const Partition& nu) {
    // gamma' is the part of mu and nu contracted against each other
    const int t = mu.size() + nu.size() - lam.size();
    if (t < 0 || t % 2 != 0) return 0;
    const int g = t / 2;
    if (g > mu.size() || g > nu.size()) return 0;

    static Memo memo;
    Key k;
    k.push_back(-5);
    append_key(k, lam);
    append_key(k, mu);
    append_key(k, nu);
    long long v;
    if (memo.find(k, v)) return v;

    long long total = 0;
    for (const Partition& gammap : partitions_of(g)) {
        for (const Partition& alpha : partitions_of(mu.size() - g)) {
            long long f = lr(mu, alpha, gammap);
            if (!f) continue;
            for (const Partition& beta : partitions_of(nu.size() - g)) {
                long long h = lr(nu, beta, gammap);
                if (h) total += f * h * lr(lam, alpha, beta);
            }
        }
    }
    memo.store(k, total);
    return total;
}

namespace {

// shared recursion for the n-fold sp/so product coefficients: peel the first
// factor off, sum over the intermediate shape
long long cap_right(const Partition& lam, const std::vector<Partition>& betas,
                    long long (*small)(const Partition&, const Partition&, const Partition&),
                    int tag) {
    if (betas.empty()) return lam.length() == 0 ? 1 : 0;
    if (betas.size() == 1) return lam == betas[0] ? 1 : 0;
    if (betas.size() == 2) return small(lam, betas[0], betas[1]);

    static Memo memo;
    Key k;
    k.push_back(tag);
    append_key(k, lam);
    k.push_back(-2);
    for (const Partition& b : betas) append_key(k, b);
    long long v;
    if (memo.find(k, v)) return v;

    const std::vector<Partition> tail(betas.begin() + 1, betas.end());
    const int cap = lam.size() - betas[0].size();
    long long total = 0;
    for (int s = cap; s >= 0; s -= 2) {  // contraction removes dominoes
        for (const Partition& alpha : partitions_of(s)) {
            long long c = small(lam, alpha, betas[0]);
            if (c) total += c * cap_right(alpha, tail, small, tag);
        }
    }
    memo.store(k, total);
    return total;
}

} // namespace

long long cap_E(const Partition& lam, const std::vector<Partition>& betas) {
    return cap_right(lam, betas, &e_small, -6);
}

long long cap_G(const Partition& lam, const std::vector<Partition>& betas) {
    return cap_right(lam, betas, &g_small, -7);
}

long long evaluate(const CoefficientQuery& q) {
    const auto& ps = q.partitions;
    const auto& prs = q.pairs;
    auto need = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("coefficient query: expected ") + what);
    };
    switch (q.kind) {
        case CoefficientKind::LR:
            need(ps.size() == 3 && prs.empty(), "3 partitions");
            return lr(ps[0], ps[1], ps[2]);
        case CoefficientKind::LR_MULTI:
            need(ps.size() >= 2 && prs.empty(), "a target and at least 1 partition");
            return lr_multi(ps[0], {ps.begin() + 1, ps.end()});
        case CoefficientKind::C_PAIR:
            need(prs.size() == 3 && ps.empty(), "3 partition pairs");
            return c_pair(prs[0], prs[1], prs[2]);
        case CoefficientKind::D_PAIR:
            need(prs.size() == 3 && ps.empty(), "3 partition pairs");
            return d_pair(prs[0], prs[1], prs[2]);
        case CoefficientKind::CAP_C:
            need(prs.size() >= 3 && ps.empty(), "a target and at least 2 pairs");
            return cap_C(prs[0], {prs.begin() + 1, prs.end()});
        case CoefficientKind::CAP_D:
            need(prs.size() >= 3 && ps.empty(), "a target and at least 2 pairs");
            return cap_D(prs[0], {prs.begin() + 1, prs.end()});
        case CoefficientKind::E_SMALL:
            need(ps.size() == 3 && prs.empty(), "3 partitions");
            return e_small(ps[0], ps[1], ps[2]);
        case CoefficientKind::F_SMALL:
            need(ps.size() == 3 && prs.empty(), "3 partitions");
            return f_small(ps[0], ps[1], ps[2]);
        case CoefficientKind::G_SMALL:
            need(ps.size() == 3 && prs.empty(), "3 partitions");
            return g_small(ps[0], ps[1], ps[2]);
        case CoefficientKind::CAP_E:
            need(ps.size() >= 3 && prs.empty(), "a target and at least 2 partitions");
            return cap_E(ps[0], {ps.begin() + 1, ps.end()});
        case CoefficientKind::CAP_F:
            need(ps.size() >= 3 && prs.empty(), "a target and at least 2 partitions");
            return cap_F(ps[0], {ps.begin() + 1, ps.end()});
        case CoefficientKind::CAP_G:
            need(ps.size() >= 3 && prs.empty(), "a target and at least 2 partitions");
            return cap_G(ps[0], {ps.begin() + 1, ps.end()});
    }
    throw std::invalid_argument("coefficient query: unknown kind");
}

long long cap_F(const Partition& lam, const std::vector<Partition>& betas) {
    if (betas.empty()) return lam.length() == 0 ? 1 : 0;
    if (betas.size() == 1) return lam == betas[0] ? 1 : 0;
    if (betas.size() == 2) return f_small(lam, betas[0], betas[1]);

    static Memo memo;
    Key k;
    k.push_back(-8);
    append_key(k, lam);
    k.push_back(-2);
    for (const Partition& b : betas) append_key(k, b);
    long long v;
    if (memo.find(k, v)) return v;

    int pre = 0;
    for (std::size_t i = 0; i + 1 < betas.size(); ++i) pre += betas[i].size();
    const Partition& last = betas.back();
    const std::vector<Partition> prefix(betas.begin(), betas.end() - 1);

    // f_small(lam, alpha, last) needs |alpha| + |last| - |lam| even
    int hi = pre;
    if ((hi + last.size() - lam.size()) % 2 != 0) --hi;
    const int lo = std::max(0, lam.size() - last.size());

    long long total = 0;
    for (int s = hi; s >= lo; s -= 2) {
        for (const Partition& alpha : partitions_of(s)) {
            long long f = f_small(lam, alpha, last);
            if (f) total += f * cap_F(alpha, prefix);
        }
    }
    memo.store(k, total);
    return total;
}

} // namespace branchq
