#include <doctest.h>

#include "branchq/branching.hpp"
#include "branchq/characters.hpp"
#include "branchq/linalg.hpp"

using namespace branchq;

TEST_CASE("type1 validates arguments") {
    CHECK_THROWS_AS(type1(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(type1(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(type1(2, 2, Family::C), std::invalid_argument);
    CHECK_NOTHROW(type1(2, 2, Family::B));
}

TEST_CASE("type1 base cases are identity matrices") {
    for (int n = 1; n <= 4; ++n) {
        const auto m = type1(n, 0);
        CHECK(m.entries == identity_matrix(1));
    }
    for (int d = 0; d <= 5; ++d) {
        const auto m = type1(1, d);
        CHECK(m.entries == identity_matrix(m.size()));
    }
}

TEST_CASE("type1 small values") {
    CHECK(type1(2, 1).entries == IntMatrix{{2}});
    CHECK(type1(2, 2).entries == IntMatrix{{3, 1}, {1, 3}});
    CHECK(type1(3, 2).entries == IntMatrix{{6, 3}, {3, 6}});
    CHECK(type1(2, 3).entries == IntMatrix{{4, 2, 0}, {2, 6, 2}, {0, 2, 4}});
}

TEST_CASE("type1 matrices are symmetric with nonnegative entries") {
    for (int n = 2; n <= 3; ++n) {
        for (int d = 0; d <= 4; ++d) {
            const auto m = type1(n, d);
            CHECK(m.entries == transpose(m.entries));
            for (const auto& row : m.entries)
                for (const Int& v : row) CHECK(v >= 0);
        }
    }
}

TEST_CASE("type1 row axis matches the partition order") {
    const auto m = type1(2, 3);
    REQUIRE(m.row_labels.size() == 3);
    CHECK(std::get<Partition>(m.row_labels[0]) == Partition{3});
    CHECK(std::get<Partition>(m.row_labels[1]) == Partition{2, 1});
    CHECK(std::get<Partition>(m.row_labels[2]) == Partition{1, 1, 1});
    CHECK(m.row_labels == m.col_labels);
}

TEST_CASE("standard tableau counts give the top eigenvector of type1") {
    for (int n = 2; n <= 4; ++n) {
        for (int d = 0; d <= 5; ++d) {
            const auto m = type1(n, d);
            IntVector v;
            for (const Label& l : m.row_labels) v.push_back(syt_count(std::get<Partition>(l)));
            Int scale = 1;
            for (int i = 0; i < d; ++i) scale *= n;
            const IntVector lhs = mat_vec(m.entries, v);
            for (std::size_t i = 0; i < v.size(); ++i) CHECK(lhs[i] == scale * v[i]);
        }
    }
}

TEST_CASE("type2 validates arguments") {
    CHECK_THROWS_AS(type2(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(type2(2, -1, 0), std::invalid_argument);
    CHECK_NOTHROW(type2(2, 0, 0));
}

TEST_CASE("type2 with q = 0 matches type1 entrywise") {
    for (int n = 2; n <= 3; ++n) {
        for (int p = 0; p <= 3; ++p) {
            const auto c = type2(n, p, 0);
            const auto a = type1(n, p);
            CHECK(c.entries == a.entries);
        }
    }
}

TEST_CASE("type2 small values") {
    CHECK(type2(2, 1, 1).entries == IntMatrix{{4, 0}, {3, 1}});
    CHECK(type2(2, 2, 1).entries == IntMatrix{{6, 2, 0}, {2, 6, 0}, {6, 6, 2}});
}

TEST_CASE("type2 diagonal blocks are Kronecker products of type1") {
    for (int n = 2; n <= 3; ++n) {
        for (int p = 0; p <= 3; ++p) {
            for (int q = 0; q <= 3 - (n == 3 ? 1 : 0); ++q) {
                const auto m = type2(n, p, q);
                const auto sizes = axis_block_sizes(m);
                for (std::size_t i = 0; i < sizes.size(); ++i) {
                    const int ii = static_cast<int>(i);
                    const auto block = diagonal_block(m, ii);
                    const auto expected = kronecker(type1(n, p - ii).entries,
                                                    type1(n, q - ii).entries);
                    CHECK(block == expected);
                }
            }
        }
    }
}

TEST_CASE("type2 is block lower triangular") {
    const auto m = type2(2, 2, 2);
    const auto sizes = axis_block_sizes(m);
    REQUIRE(sizes == std::vector<int>{4, 1, 1});
    // zeros strictly above the diagonal blocks
    int row_off = 0;
    for (std::size_t bi = 0; bi < sizes.size(); ++bi) {
        int col_off = 0;
        for (std::size_t bj = 0; bj <= bi; ++bj) col_off += sizes[bj];
        for (int r = row_off; r < row_off + sizes[bi]; ++r)
            for (int c = col_off; c < m.size(); ++c) CHECK(m.entries[r][c] == 0);
        row_off += sizes[bi];
    }
}

TEST_CASE("type2 contains the next smaller type2 in its lower corner") {
    for (int n = 2; n <= 3; ++n) {
        for (int p = 1; p <= 3; ++p) {
            for (int q = 1; q <= 2; ++q) {
                const auto big = type2(n, p, q);
                const auto small = type2(n, p - 1, q - 1);
                const int off = big.size() - small.size();
                REQUIRE(off >= 0);
                for (int r = 0; r < small.size(); ++r)
                    for (int c = 0; c < small.size(); ++c)
                        CHECK(big.entries[off + r][off + c] == small.entries[r][c]);
            }
        }
    }
}

TEST_CASE("sp and so matrices validate arguments") {
    CHECK_THROWS_AS(sp_matrix(3, 2), std::invalid_argument);  // odd n
    CHECK_THROWS_AS(sp_matrix(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(sp_matrix(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(so_matrix(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(so_matrix(2, -1), std::invalid_argument);
    CHECK_NOTHROW(so_matrix(3, 2));
}

TEST_CASE("sp and so small values") {
    CHECK(sp_matrix(2, 2).entries == IntMatrix{{3, 1, 0}, {1, 3, 0}, {1, 2, 1}});
    CHECK(so_matrix(2, 2).entries == IntMatrix{{3, 1, 0}, {1, 3, 0}, {2, 1, 1}});
    CHECK(sp_matrix(2, 3).entries ==
          IntMatrix{{4, 2, 0, 0}, {2, 6, 2, 0}, {0, 2, 4, 0}, {2, 6, 4, 2}});
    CHECK(so_matrix(2, 3).entries ==
          IntMatrix{{4, 2, 0, 0}, {2, 6, 2, 0}, {0, 2, 4, 0}, {4, 6, 2, 2}});
}

TEST_CASE("sp and so diagonal blocks are type1 matrices") {
    for (int p = 0; p <= 4; ++p) {
        for (Family fam : {Family::D, Family::E}) {
            const auto m = fam == Family::D ? sp_matrix(2, p) : so_matrix(2, p);
            const auto sizes = axis_block_sizes(m);
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                const int ii = static_cast<int>(i);
                CHECK(diagonal_block(m, ii) == type1(2, p - 2 * ii).entries);
            }
        }
    }
}

TEST_CASE("sp and so matrices are conjugation duals") {
    // duality: so entry at (row lam', col lam) = sp entry at the conjugated
    // labels; reversing the order inside each parity block realizes it
    for (int p = 0; p <= 4; ++p) {
        const auto d = sp_matrix(2, p);
        const auto e = so_matrix(2, p);
        auto index_of = [](const BranchingMatrix& m, const Partition& p_) {
            for (int i = 0; i < m.size(); ++i)
                if (std::get<Partition>(m.row_labels[i]) == p_) return i;
            return -1;
        };
        for (int r = 0; r < e.size(); ++r) {
            for (int c = 0; c < e.size(); ++c) {
                const int rd = index_of(d, conjugate(std::get<Partition>(e.row_labels[r])));
                const int cd = index_of(d, conjugate(std::get<Partition>(e.col_labels[c])));
                REQUIRE(rd >= 0);
                REQUIRE(cd >= 0);
                CHECK(e.entries[r][c] == d.entries[rd][cd]);
            }
        }
    }
}

TEST_CASE("axis block sizes and diagonal_block errors") {
    const auto a = type1(2, 3);
    CHECK(axis_block_sizes(a) == std::vector<int>{3});
    CHECK_THROWS_AS(diagonal_block(a, 0), std::invalid_argument);

    const auto c = type2(2, 3, 1);
    CHECK(axis_block_sizes(c) == std::vector<int>{3, 2});
    CHECK_THROWS_AS(diagonal_block(c, 2), std::invalid_argument);
    CHECK_THROWS_AS(diagonal_block(c, -1), std::invalid_argument);

    const auto e = so_matrix(2, 4);
    CHECK(axis_block_sizes(e) == std::vector<int>{5, 2, 1});
}
