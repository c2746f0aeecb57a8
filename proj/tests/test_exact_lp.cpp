#include "doctest.h"

#include <random>

#include "perron/exact_lp.hpp"

using namespace perron;

namespace {

// Solves A_S x = b over the columns in S when they are independent and the
// system is consistent.
std::optional<RatVec> solve_subset(const RatMatrix& a, const RatVec& b, const std::vector<std::size_t>& cols) {
    const std::size_t m = a.rows();
    const std::size_t k = cols.size();
    RatMatrix aug(m, k + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = a(i, cols[j]);
        aug(i, k) = b[i];
    }
    std::size_t row = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = row;
        while (piv < m && aug(piv, c) == 0) ++piv;
        if (piv == m) return std::nullopt;
        for (std::size_t j = 0; j <= k; ++j) std::swap(aug(row, j), aug(piv, j));
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug(i, c) == 0) continue;
            mpq_class f = aug(i, c) / aug(row, c);
            for (std::size_t j = 0; j <= k; ++j) aug(i, j) -= f * aug(row, j);
        }
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (aug(i, k) != 0) return std::nullopt;
    RatVec x(k);
    for (std::size_t c = 0; c < k; ++c) x[c] = aug(c, k) / aug(c, c);
    return x;
}

// Feasibility of A x = b, x >= 0 by scanning all column subsets (basic solutions).
bool feasible_by_subsets(const RatMatrix& a, const RatVec& b) {
    const std::size_t n = a.cols();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j)) cols.push_back(j);
        if (cols.size() > a.rows()) continue;
        auto x = solve_subset(a, b, cols);
        if (!x) continue;
        bool ok = true;
        for (const auto& v : *x) ok = ok && v >= 0;
        if (ok) return true;
    }
    return false;
}

void check_solution(const RatMatrix& a, const RatVec& b, const RatVec& x) {
    for (const auto& v : x) CHECK(v >= 0);
    auto ax = a * x;
    CHECK(ax == b);
}

}  // namespace

TEST_CASE("trivial systems") {
    RatMatrix id = RatMatrix::identity(2);
    auto x = nonnegative_solution(id, {3, 4});
    REQUIRE(x);
    CHECK(*x == RatVec{3, 4});
    CHECK_FALSE(nonnegative_solution(id, {-1, 4}));
    RatMatrix one(1, 1, 1);
    auto y = nonnegative_solution(one, {2});
    REQUIRE(y);
    CHECK((*y)[0] == 2);
    auto empty_rhs = nonnegative_solution(id, {0, 0});
    REQUIRE(empty_rhs);
    CHECK(*empty_rhs == RatVec{0, 0});
}

TEST_CASE("unit box bounds") {
    RatMatrix a(1, 2, 1);
    CHECK(unit_box_solution(a, {2}));
    CHECK_FALSE(unit_box_solution(a, {mpq_class(5, 2)}));
    auto x = unit_box_solution(a, {mpq_class(3, 2)});
    REQUIRE(x);
    CHECK((*x)[0] + (*x)[1] == mpq_class(3, 2));
    CHECK((*x)[0] <= 1);
    CHECK((*x)[1] <= 1);
}

TEST_CASE("random systems agree with basic-solution enumeration") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-3, 3);
    int feasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 2 + trial % 2;
        const std::size_t n = 2 + trial % 4;
        RatMatrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
        RatVec b(m);
        for (auto& v : b) v = entry(rng);
        auto x = nonnegative_solution(a, b);
        bool expect = feasible_by_subsets(a, b);
        CHECK(x.has_value() == expect);
        if (x) {
            ++feasible;
            check_solution(a, b, *x);
        }
        CHECK(nonnegative_solution(a, b) == x);
    }
    CHECK(feasible > 30);
}

TEST_CASE("degenerate cycling-prone instance terminates") {
    // Beale-type degeneracy with a zero right-hand side.
    RatMatrix a(3, 4);
    const int rows[3][4] = {{1, -2, -3, 4}, {2, -1, -1, 3}, {1, 1, 0, -1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) a(i, j) = rows[i][j];
    auto x = nonnegative_solution(a, {0, 0, 0});
    REQUIRE(x);
    check_solution(a, {0, 0, 0}, *x);
}
