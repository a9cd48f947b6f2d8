#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "apd/consecutive_ones.hpp"
#include "apd/generators.hpp"

using namespace apd;

namespace {

// desk-scale oracle: try every column permutation
bool c1p_exhaustive(const BinaryMatrix& m) {
    std::vector<int> perm(m.cols());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (verify_c1p(m, perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

BinaryMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                           unsigned density_pct) {
    BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.below(100) < density_pct) m.set(r, c);
    return m;
}

// a matrix that is C1P by construction: intervals on a hidden permutation
BinaryMatrix random_c1p_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    std::vector<int> hidden(cols);
    std::iota(hidden.begin(), hidden.end(), 0);
    for (std::size_t i = cols; i > 1; --i)
        std::swap(hidden[i - 1], hidden[rng.below(i)]);
    BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t len = rng.below(cols + 1);
        if (len == 0) continue;
        std::size_t start = rng.below(cols - len + 1);
        for (std::size_t q = start; q < start + len; ++q)
            m.set(r, static_cast<std::size_t>(hidden[q]));
    }
    return m;
}

}  // namespace

TEST_CASE("golden instances") {
    // the star {a,b},{a,c},{a,d} written as rows
    auto star = BinaryMatrix::from_rows(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(!c1p_column_order(star).has_value());

    BinaryMatrix identity(5, 5);
    for (std::size_t i = 0; i < 5; ++i) identity.set(i, i);
    auto id_order = c1p_column_order(identity);
    REQUIRE(id_order.has_value());
    CHECK(verify_c1p(identity, *id_order));

    auto overlap = BinaryMatrix::from_rows(4, {{0, 1, 2}, {1, 2, 3}});
    auto order = c1p_column_order(overlap);
    REQUIRE(order.has_value());
    CHECK(verify_c1p(overlap, *order));
}

TEST_CASE("verify_c1p basics") {
    auto two = BinaryMatrix::from_rows(3, {{0, 1}, {1, 2}});
    CHECK(verify_c1p(two, {0, 1, 2}));
    auto gap = BinaryMatrix::from_rows(3, {{0, 2}});
    CHECK(!verify_c1p(gap, {0, 1, 2}));
    CHECK(verify_c1p(gap, {0, 2, 1}));
    CHECK_THROWS_AS(verify_c1p(gap, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_c1p(gap, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("degenerate shapes") {
    BinaryMatrix empty(0, 4);
    auto order = c1p_column_order(empty);
    REQUIRE(order.has_value());
    CHECK(order->size() == 4);

    BinaryMatrix no_cols(3, 0);
    auto order2 = c1p_column_order(no_cols);
    REQUIRE(order2.has_value());
    CHECK(order2->empty());

    BinaryMatrix zeros(3, 3);
    auto order3 = c1p_column_order(zeros);
    REQUIRE(order3.has_value());
    CHECK(verify_c1p(zeros, *order3));
}

TEST_CASE("soundness: returned orders always verify") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t rows = 1 + rng.below(7);
        std::size_t cols = 1 + rng.below(8);
        auto m = random_matrix(rng, rows, cols, 20 + static_cast<unsigned>(rng.below(50)));
        auto order = c1p_column_order(m);
        if (order) CHECK(verify_c1p(m, *order));
    }
}

TEST_CASE("completeness at desk scale against exhaustive search") {
    SplitMix64 rng(202);
    int positives = 0, negatives = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t rows = 1 + rng.below(7);
        std::size_t cols = 1 + rng.below(7);  // at most 7! permutations
        auto m = random_matrix(rng, rows, cols, 20 + static_cast<unsigned>(rng.below(60)));
        bool fast = c1p_column_order(m).has_value();
        bool slow = c1p_exhaustive(m);
        CHECK(fast == slow);
        (fast ? positives : negatives)++;
    }
    CHECK(positives > 20);
    CHECK(negatives > 20);
}

TEST_CASE("constructed C1P instances are always recognized") {
    SplitMix64 rng(303);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t rows = 1 + rng.below(10);
        std::size_t cols = 1 + rng.below(10);
        auto m = random_c1p_matrix(rng, rows, cols);
        auto order = c1p_column_order(m);
        REQUIRE(order.has_value());
        CHECK(verify_c1p(m, *order));
    }
}

TEST_CASE("decision is invariant under row permutation") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t rows = 2 + rng.below(6);
        std::size_t cols = 2 + rng.below(7);
        auto m = random_matrix(rng, rows, cols, 40);
        std::vector<int> rp(rows);
        std::iota(rp.begin(), rp.end(), 0);
        for (std::size_t i = rows; i > 1; --i) std::swap(rp[i - 1], rp[rng.below(i)]);
        BinaryMatrix shuffled(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (m.get(r, c)) shuffled.set(static_cast<std::size_t>(rp[r]), c);
        CHECK(c1p_column_order(m).has_value() == c1p_column_order(shuffled).has_value());
    }
}

TEST_CASE("deterministic output") {
    SplitMix64 rng(505);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_matrix(rng, 1 + rng.below(6), 1 + rng.below(8), 40);
        auto a = c1p_column_order(m);
        auto b = c1p_column_order(m);
        CHECK(a == b);
    }
}
