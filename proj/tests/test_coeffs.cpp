#include <doctest.h>

#include <algorithm>

#include "branchq/coeffs.hpp"
#include "oracles.hpp"

using namespace branchq;

TEST_CASE("lr matches the character oracle up to size 6") {
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            for (int m = 0; m <= n; ++m) {
                for (const Partition& mu : partitions_of(m)) {
                    for (const Partition& nu : partitions_of(n - m)) {
                        CAPTURE(lam.to_string());
                        CAPTURE(mu.to_string());
                        CAPTURE(nu.to_string());
                        CHECK(lr(lam, mu, nu) == oracles::lr_char(lam, mu, nu));
                    }
                }
            }
        }
    }
}

TEST_CASE("lr hand values") {
    CHECK(lr(Partition{4, 2}, Partition{2, 1}, Partition{2, 1}) == 1);
    CHECK(lr(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
    CHECK(lr(Partition{2}, Partition{1}, Partition{1}) == 1);
    CHECK(lr(Partition{1, 1}, Partition{1}, Partition{1}) == 1);
    CHECK(lr(Partition{2, 2}, Partition{2}, Partition{2}) == 1);
    CHECK(lr(Partition{2, 2}, Partition{2}, Partition{1, 1}) == 0);
}

TEST_CASE("lr is symmetric in the lower arguments") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int m = 0; m <= n; ++m)
                for (const Partition& mu : partitions_of(m))
                    for (const Partition& nu : partitions_of(n - m))
                        CHECK(lr(lam, mu, nu) == lr(lam, nu, mu));
}

TEST_CASE("lr respects conjugation") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int m = 0; m <= n; ++m)
                for (const Partition& mu : partitions_of(m))
                    for (const Partition& nu : partitions_of(n - m))
                        CHECK(lr(lam, mu, nu) ==
                              lr(conjugate(lam), conjugate(mu), conjugate(nu)));
}

TEST_CASE("lr with empty nu is the delta") {
    for (int n = 0; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int m = 0; m <= n; ++m)
                for (const Partition& mu : partitions_of(m))
                    CHECK(lr(lam, mu, Partition{}) == (lam == mu ? 1 : 0));
}

TEST_CASE("lr_multi base cases and iterated expansion") {
    CHECK(lr_multi(Partition{}, {}) == 1);
    CHECK(lr_multi(Partition{1}, {}) == 0);
    CHECK(lr_multi(Partition{2, 1}, {Partition{2, 1}}) == 1);
    CHECK(lr_multi(Partition{2, 1}, {Partition{1}, Partition{1}, Partition{1}}) == 2);

    // n = 3 chains agree with the two-step expansion through lr
    for (int n = 2; n <= 4; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            for (int s1 = 0; s1 <= n; ++s1) {
                for (int s2 = 0; s1 + s2 <= n; ++s2) {
                    for (const Partition& b1 : partitions_of(s1)) {
                        for (const Partition& b2 : partitions_of(s2)) {
                            for (const Partition& b3 : partitions_of(n - s1 - s2)) {
                                long long direct = 0;
                                for (const Partition& alpha : partitions_of(n - s1))
                                    direct += lr(lam, alpha, b1) * lr(alpha, b2, b3);
                                CHECK(lr_multi(lam, {b1, b2, b3}) == direct);
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("lr_multi is invariant under permutations of the betas") {
    for (int n = 0; n <= 4; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            for (int s1 = 0; s1 <= n; ++s1) {
                for (int s2 = 0; s1 + s2 <= n; ++s2) {
                    for (const Partition& b1 : partitions_of(s1)) {
                        for (const Partition& b2 : partitions_of(s2)) {
                            for (const Partition& b3 : partitions_of(n - s1 - s2)) {
                                std::vector<Partition> betas{b1, b2, b3};
                                const long long base = lr_multi(lam, betas);
                                std::sort(betas.begin(), betas.end());
                                do {
                                    CHECK(lr_multi(lam, betas) == base);
                                } while (std::next_permutation(betas.begin(), betas.end()));
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("c_pair matches the naive transcription") {
    const auto pairs2 = oracles::pairs_up_to(2, 2);
    for (const PartitionPair& t : pairs2)
        for (const PartitionPair& a : oracles::pairs_up_to(t.plus.size(), t.minus.size()))
            for (const PartitionPair& b : oracles::pairs_up_to(t.plus.size(), t.minus.size()))
                CHECK(c_pair(t, a, b) == oracles::c_pair_naive(t, a, b));
}

TEST_CASE("c_pair hand values") {
    const PartitionPair e{};
    const PartitionPair one_one{Partition{1}, Partition{1}};
    const PartitionPair two_two{Partition{2}, Partition{2}};
    CHECK(c_pair(one_one, one_one, e) == 1);
    CHECK(c_pair(two_two, one_one, one_one) == 1);
    CHECK(c_pair(one_one, e, e) == 1);  // delta can supply the boxes
    CHECK(c_pair(e, one_one, e) == 0);  // target smaller than the betas
}

TEST_CASE("d_pair matches the naive transcription") {
    for (const PartitionPair& t : oracles::pairs_up_to(2, 2))
        for (const PartitionPair& a : oracles::pairs_up_to(2, 2))
            for (const PartitionPair& b : oracles::pairs_up_to(2, 2))
                CHECK(d_pair(t, a, b) == oracles::d_pair_naive(t, a, b));
}

TEST_CASE("d_pair hand values") {
    const PartitionPair e{};
    CHECK(d_pair(e, {Partition{1}, Partition{}}, {Partition{}, Partition{1}}) == 1);
    CHECK(d_pair({Partition{1}, Partition{1}}, {Partition{1}, Partition{1}}, e) == 1);
    CHECK(d_pair({Partition{1}, Partition{}}, {Partition{1}, Partition{}}, e) == 1);
    CHECK(d_pair({Partition{2}, Partition{}}, {Partition{1}, Partition{}},
                 {Partition{1}, Partition{}}) == 1);
}

TEST_CASE("parity small coefficients match the naive transcriptions") {
    for (int ls = 0; ls <= 4; ++ls) {
        for (const Partition& lam : partitions_of(ls)) {
            for (int ms = 0; ms <= 3; ++ms) {
                for (const Partition& mu : partitions_of(ms)) {
                    for (int ns = 0; ns <= 3; ++ns) {
                        for (const Partition& nu : partitions_of(ns)) {
                            CHECK(e_small(lam, mu, nu) == oracles::e_naive(lam, mu, nu));
                            CHECK(g_small(lam, mu, nu) == oracles::g_naive(lam, mu, nu));
                            CHECK(f_small(lam, mu, nu) == oracles::f_naive(lam, mu, nu));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("parity small coefficients degenerate to lr at matching sizes") {
    for (int ms = 0; ms <= 3; ++ms) {
        for (const Partition& mu : partitions_of(ms)) {
            for (int ns = 0; ns <= 3; ++ns) {
                for (const Partition& nu : partitions_of(ns)) {
                    for (const Partition& lam : partitions_of(ms + ns)) {
                        CHECK(e_small(lam, mu, nu) == lr(lam, mu, nu));
                        CHECK(g_small(lam, mu, nu) == lr(lam, mu, nu));
                        CHECK(f_small(lam, mu, nu) == lr(lam, mu, nu));
                    }
                }
            }
        }
    }
}

TEST_CASE("e and g are conjugation duals, f is self dual") {
    for (int ls = 0; ls <= 5; ++ls)
        for (const Partition& lam : partitions_of(ls))
            for (int ms = 0; ms <= 2; ++ms)
                for (const Partition& mu : partitions_of(ms))
                    for (int ns = 0; ns <= 2; ++ns)
                        for (const Partition& nu : partitions_of(ns)) {
                            CHECK(g_small(lam, mu, nu) ==
                                  e_small(conjugate(lam), conjugate(mu), conjugate(nu)));
                            CHECK(f_small(lam, mu, nu) ==
                                  f_small(conjugate(lam), conjugate(mu), conjugate(nu)));
                        }
}

TEST_CASE("capital chains match three-factor naive sums") {
    std::vector<Partition> small;
    for (int s = 0; s <= 2; ++s)
        for (const Partition& p : partitions_of(s)) small.push_back(p);

    for (int ls = 0; ls <= 3; ++ls) {
        for (const Partition& lam : partitions_of(ls)) {
            for (const Partition& b1 : small)
                for (const Partition& b2 : small)
                    for (const Partition& b3 : small) {
                        const std::vector<Partition> bs{b1, b2, b3};
                        CHECK(cap_E(lam, bs) == oracles::cap_e_naive3(lam, bs));
                        CHECK(cap_G(lam, bs) == oracles::cap_g_naive3(lam, bs));
                        CHECK(cap_F(lam, bs) == oracles::cap_f_naive3(lam, bs));
                    }
        }
    }
}

TEST_CASE("capital pair chains match three-factor naive sums") {
    std::vector<PartitionPair> small = oracles::pairs_up_to(1, 1);
    for (const PartitionPair& t : oracles::pairs_up_to(2, 2)) {
        for (const PartitionPair& b1 : small)
            for (const PartitionPair& b2 : small)
                for (const PartitionPair& b3 : small) {
                    const std::vector<PartitionPair> bs{b1, b2, b3};
                    CHECK(cap_C(t, bs) == oracles::cap_c_naive3(t, bs));
                    CHECK(cap_D(t, bs) == oracles::cap_d_naive3(t, bs));
                }
    }
}

TEST_CASE("capital chains with two factors reduce to the pair coefficients") {
    const std::vector<Partition> bs{Partition{1}, Partition{}};
    CHECK(cap_E(Partition{1}, bs) == 1);
    CHECK(cap_F(Partition{1}, bs) == 1);
    CHECK(cap_G(Partition{1}, bs) == 1);
    CHECK(cap_E(Partition{1}, bs) == e_small(Partition{1}, Partition{1}, Partition{}));
}

TEST_CASE("evaluate dispatches and validates arity") {
    CoefficientQuery q;
    q.kind = CoefficientKind::LR;
    q.partitions = {Partition{4, 2}, Partition{2, 1}, Partition{2, 1}};
    CHECK(evaluate(q) == 1);

    q.partitions.pop_back();
    CHECK_THROWS_AS(evaluate(q), std::invalid_argument);

    CoefficientQuery c;
    c.kind = CoefficientKind::CAP_C;
    c.pairs = {PartitionPair{Partition{2}, Partition{2}},
               PartitionPair{Partition{1}, Partition{1}},
               PartitionPair{Partition{1}, Partition{1}}};
    CHECK(evaluate(c) == 1);

    CoefficientQuery bad;
    bad.kind = CoefficientKind::E_SMALL;
    bad.partitions = {Partition{2}};
    CHECK_THROWS_AS(evaluate(bad), std::invalid_argument);
}
