#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "perron/errors.hpp"
#include "perron/semigrp.hpp"

using namespace perron;

namespace {

long double sum_height(const IntVec& v) {
    long double s = 0;
    for (const auto& x : v) s += x.get_d();
    return s;
}

IntVec combine(const std::vector<IntVec>& gens, const std::vector<mpz_class>& mult) {
    IntVec out(gens.front().size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += mult[i] * gens[i][k];
    return out;
}

// Irreducible elements of the lattice points in the cone, found by brute
// force over a box that contains the zonotope.
std::set<IntVec> brute_hilbert_basis(const PolyhedralCone& cone, long box) {
    std::vector<IntVec> pts;
    for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y) {
            IntVec v{x, y};
            if (!is_zero(v) && cone.contains(v)) pts.push_back(v);
        }
    std::set<IntVec> in_cone(pts.begin(), pts.end());
    std::set<IntVec> out;
    for (const auto& v : pts) {
        bool reducible = false;
        for (const auto& u : pts) {
            IntVec rest = v - u;
            if (!is_zero(rest) && in_cone.count(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.insert(v);
    }
    return out;
}

}  // namespace

TEST_CASE("facets of simple cones") {
    PolyhedralCone quadrant({{1, 0}, {0, 1}});
    CHECK(quadrant.contains({3, 4}));
    CHECK(quadrant.contains({0, 0}));
    CHECK_FALSE(quadrant.contains({-1, 4}));
    PolyhedralCone octant({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    CHECK(octant.facet_normals().size() == 3);
    CHECK(octant.contains({0, 2, 5}));
    CHECK_FALSE(octant.contains({0, -2, 5}));
}

TEST_CASE("unit square zonotope") {
    GeneratorSet all = enumerate_generators({{1, 0}, {0, 1}}, 1000);
    std::set<IntVec> got(all.gens.begin(), all.gens.end());
    CHECK(got == std::set<IntVec>{{1, 0}, {0, 1}, {1, 1}});
    GeneratorSet pruned = prune_generators(all, sum_height);
    CHECK(pruned.pruned);
    CHECK(pruned.gens.size() == 2);
    CHECK(pruned.membership.size() == 2);
}

TEST_CASE("single ray") {
    GeneratorSet all = enumerate_generators({{3}}, 1000);
    std::set<IntVec> got(all.gens.begin(), all.gens.end());
    CHECK(got == std::set<IntVec>{{1}, {2}, {3}});
    GeneratorSet pruned = prune_generators(all, sum_height);
    CHECK(pruned.gens == std::vector<IntVec>{{1}});
    CHECK_THROWS_AS(enumerate_generators({{2, 2}}, 1000), Error);
}

TEST_CASE("pruning is idempotent and sorted by height") {
    GeneratorSet all = enumerate_generators({{1, 0}, {1, 3}}, 100000);
    GeneratorSet once = prune_generators(all, sum_height);
    GeneratorSet twice = prune_generators(once, sum_height);
    CHECK(once.gens == twice.gens);
    for (std::size_t i = 1; i < once.gens.size(); ++i) CHECK(sum_height(once.gens[i - 1]) >= sum_height(once.gens[i]));
}

TEST_CASE("pruned set equals the brute-force Hilbert basis") {
    const std::vector<std::vector<IntVec>> cones{
        {{1, 0}, {1, 3}}, {{2, 1}, {1, 3}}, {{3, -1}, {1, 4}}, {{5, 2}, {-1, 3}}, {{1, 0}, {0, 1}, {1, 1}}};
    for (const auto& rays : cones) {
        GeneratorSet pruned = prune_generators(enumerate_generators(rays, 1000000), sum_height);
        std::set<IntVec> got(pruned.gens.begin(), pruned.gens.end());
        CHECK(got == brute_hilbert_basis(pruned.cone, 12));
        // Membership witnesses re-substitute with 0 <= alpha <= 1.
        for (std::size_t i = 0; i < pruned.gens.size(); ++i) {
            mpq_class x = 0, y = 0;
            for (std::size_t r = 0; r < rays.size(); ++r) {
                const mpq_class& a = pruned.membership[i][r];
                CHECK(a >= 0);
                CHECK(a <= 1);
                x += a * rays[r][0];
                y += a * rays[r][1];
            }
            CHECK(x == pruned.gens[i][0]);
            CHECK(y == pruned.gens[i][1]);
        }
    }
}

TEST_CASE("decomposition") {
    GeneratorSet gs = prune_generators(enumerate_generators({{1, 0}, {0, 1}}, 1000), sum_height);
    auto m = decompose(gs, {3, 2});
    CHECK(combine(gs.gens, m) == IntVec{3, 2});
    for (std::size_t i = 0; i < gs.gens.size(); ++i) {
        if (gs.gens[i] == IntVec{1, 0}) CHECK(m[i] == 3);
        if (gs.gens[i] == IntVec{0, 1}) CHECK(m[i] == 2);
    }
    try {
        decompose(gs, {-1, 2});
        FAIL("expected NotInSemigroup");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInSemigroup);
    }
}

TEST_CASE("random semigroup elements decompose") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> coeff(0, 6);
    GeneratorSet gs = prune_generators(enumerate_generators({{3, -1}, {1, 4}}, 100000), sum_height);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<mpz_class> mult(gs.gens.size());
        for (auto& c : mult) c = coeff(rng);
        IntVec target = combine(gs.gens, mult);
        auto got = decompose(gs, target);
        CHECK(combine(gs.gens, got) == target);
        for (const auto& c : got) CHECK(c >= 0);
    }
}

TEST_CASE("matrix assembly") {
    GeneratorSet single = prune_generators(enumerate_generators({{1}}, 100), sum_height);
    IntMatrix doubling(1, 1, 2);
    IntMatrix a = assemble_matrix(doubling, single);
    CHECK(a.rows() == 1);
    CHECK(a(0, 0) == 2);

    GeneratorSet quad = prune_generators(enumerate_generators({{1, 0}, {0, 1}}, 100), sum_height);
    IntMatrix action(2, 2, 0);
    action(0, 0) = 1;
    action(0, 1) = 1;
    action(1, 0) = 1;
    IntMatrix b = assemble_matrix(action, quad);
    for (std::size_t j = 0; j < quad.gens.size(); ++j) {
        std::vector<mpz_class> col = b.column(j);
        CHECK(combine(quad.gens, col) == action * quad.gens[j]);
    }
}

TEST_CASE("scan budget") {
    try {
        enumerate_generators({{40, 1}, {1, 40}}, 10);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    CHECK_THROWS_AS(enumerate_generators({{1, 0}, {0, 1}}, 0), BudgetExceeded);
}
