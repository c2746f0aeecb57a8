#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "perron/errors.hpp"
#include "perron/lattice.hpp"

using namespace perron;

namespace {

const IntPolynomial plastic{-1, -1, 0, 1};
const IntPolynomial golden{-1, -1, 1};

RealMatrix integer_lattice(std::size_t d) { return RealMatrix::identity(d); }

// Exhaustive closest point search over a coordinate box.
long double brute_force_distance(const RealLattice& lat, const std::vector<long double>& t, int box) {
    const std::size_t d = lat.dim();
    IntVec c(d, -box);
    long double best = INFINITY;
    for (;;) {
        auto p = lat.point(c);
        long double s = 0;
        for (std::size_t r = 0; r < d; ++r) s += (p[r] - t[r]) * (p[r] - t[r]);
        best = std::min(best, std::sqrt(s));
        std::size_t i = 0;
        while (i < d && c[i] == box) c[i] = -box, ++i;
        if (i == d) break;
        ++c[i];
    }
    return best;
}

IntPolynomial random_perron(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> coeff(-7, 7);
    for (;;) {
        std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
        for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = coeff(rng);
        c.back() = 1;
        IntPolynomial p(c);
        if (!squarefree_and_no_rational_root(p).ok) continue;
        try {
            build_field_context(p);
            return p;
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST_CASE("integer lattice covering bound and CVP") {
    for (std::size_t d = 1; d <= 4; ++d) {
        RealLattice z(integer_lattice(d));
        CHECK(z.ell_hat() == doctest::Approx(std::sqrt(static_cast<double>(d)) / 2));
        CHECK(z.det() == doctest::Approx(1.0));
        auto mid = z.closest(std::vector<long double>(d, 0.5L));
        CHECK(mid.distance == doctest::Approx(std::sqrt(static_cast<double>(d)) / 2));
    }
    RealLattice z2(integer_lattice(2));
    auto cv = z2.closest({0.4L, 0.6L});
    CHECK(cv.coords == IntVec{0, 1});
    CHECK(cv.distance == doctest::Approx(0.5657).epsilon(1e-4));
}

TEST_CASE("CVP agrees with exhaustive search on skewed bases") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 2 + trial % 2;
        RealMatrix b(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) b(i, j) = (i == j ? 3.0 : 0.0) + u(rng) * 0.3;
        RealLattice lat(b);
        std::vector<long double> t(d);
        for (auto& x : t) x = u(rng);
        auto cv = lat.closest(t);
        CHECK(cv.distance <= lat.ell_hat() + 1e-12L);
        CHECK(cv.distance == doctest::Approx(static_cast<double>(brute_force_distance(lat, t, 12))).epsilon(1e-9));
    }
}

TEST_CASE("determinant equals the discriminant at alpha = 1") {
    CHECK(build_lattice(build_field_context(golden), AlphaWeights::ones(2)).det_qalpha() == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(build_lattice(build_field_context(plastic), AlphaWeights::ones(2)).det_qalpha() == doctest::Approx(23.0).epsilon(1e-9));
    auto trivial = build_lattice(build_field_context(IntPolynomial{-2, 1}), AlphaWeights::ones(1));
    CHECK(trivial.det_qalpha() == doctest::Approx(1.0));
    CHECK(trivial.ell_hat() >= 0.5L - 1e-15L);
    std::mt19937 rng(17);
    for (int deg : {3, 4}) {
        for (int i = 0; i < 5; ++i) {
            auto ctx = build_field_context(random_perron(rng, deg));
            auto lat = build_lattice(ctx, AlphaWeights::ones(static_cast<std::size_t>(ctx.place_count())));
            double disc = mpz_class(abs(ctx.discriminant())).get_d();
            CHECK(static_cast<double>(lat.det_qalpha()) == doctest::Approx(disc).epsilon(1e-6));
        }
    }
}

TEST_CASE("Gram matrix matches the weighted trace form") {
    auto ctx = build_field_context(IntPolynomial{-1, 0, 0, -1, 1});
    AlphaWeights alpha({1.5L, 0.75L, 2.0L});
    REQUIRE(ctx.place_count() == 3);
    auto lat = build_lattice(ctx, alpha);
    const auto& e = lat.basis_embedded();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            long double via_embedding = 0;
            for (std::size_t r = 0; r < 4; ++r) via_embedding += e(r, i) * e(r, j);
            long double via_trace = 0;
            for (std::size_t l = 0; l < ctx.places().size(); ++l) {
                const auto& c = ctx.place(l).root.center;
                std::complex<long double> s(to_long_double(c.re), to_long_double(c.im));
                auto si = std::pow(s, static_cast<int>(i));
                auto sj = std::pow(s, static_cast<int>(j));
                long double term = (si * std::conj(sj)).real();
                via_trace += alpha[l] * (ctx.place(l).real ? 1 : 2) * term;
            }
            CHECK(static_cast<double>(via_embedding) == doctest::Approx(static_cast<double>(via_trace)).epsilon(1e-12));
        }
}

TEST_CASE("reduction preserves the determinant") {
    auto ctx = build_field_context(IntPolynomial{-3, 1, -4, 1});
    auto lat = build_lattice(ctx, AlphaWeights::ones(static_cast<std::size_t>(ctx.place_count())));
    // Unreduced determinant by elimination.
    RealMatrix m = lat.basis_embedded();
    long double det = 1;
    const std::size_t d = m.rows();
    for (std::size_t k = 0; k < d; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < d; ++i)
            if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
        for (std::size_t j = 0; j < d; ++j) std::swap(m(k, j), m(piv, j));
        det *= m(k, k);
        for (std::size_t i = k + 1; i < d; ++i) {
            long double f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < d; ++j) m(i, j) -= f * m(k, j);
        }
    }
    CHECK(std::abs(det * det - lat.det_qalpha()) / lat.det_qalpha() < 1e-9L);
    CHECK(abs(determinant(lat.transform())) == 1);
}

TEST_CASE("covering bound dominates sampled CVP distances") {
    auto ctx = build_field_context(plastic);
    auto lat = build_lattice(ctx, AlphaWeights::ones(2));
    CHECK(covering_radius_upper(lat) > 0);
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-50, 50);
    long double sampled = 0;
    for (int i = 0; i < 1000; ++i) {
        PlaceVector t{{u(rng), u(rng), u(rng)}};
        auto cv = closest_vector(lat, t);
        sampled = std::max(sampled, cv.distance);
    }
    CHECK(sampled <= lat.ell_hat());
    auto exact = closest_vector(lat, embed(ctx, IntVec{3, -2, 5}));
    CHECK(exact.coords == IntVec{3, -2, 5});
    CHECK(exact.distance < 1e-12L);
}

TEST_CASE("thickness and the Banaszczyk expression") {
    auto p = thickness(build_lattice(build_field_context(plastic), AlphaWeights::ones(2)));
    CHECK(static_cast<double>(p.banaszczyk_bound) == doctest::Approx(0.75 * std::cbrt(23.0)));
    CHECK(static_cast<double>(p.banaszczyk_bound) == doctest::Approx(2.132).epsilon(1e-3));
    auto g = thickness(build_lattice(build_field_context(golden), AlphaWeights::ones(2)));
    CHECK(static_cast<double>(g.banaszczyk_bound) == doctest::Approx(0.5 * std::sqrt(5.0)));
    CHECK(static_cast<double>(g.banaszczyk_bound) == doctest::Approx(1.118).epsilon(1e-3));
    auto z = thickness(build_lattice(build_field_context(IntPolynomial{-2, 1}), AlphaWeights::ones(1)));
    CHECK(static_cast<double>(z.tau) == doctest::Approx(0.25));
    RealLattice z3(integer_lattice(3));
    CHECK(static_cast<double>(z3.ell_hat() * z3.ell_hat() / std::cbrt(z3.det())) == doctest::Approx(0.75));
}

TEST_CASE("alpha descent") {
    auto ctx = build_field_context(IntPolynomial{-1, -3, 0, 1});
    auto order = power_basis(ctx);
    auto start = AlphaWeights::ones(3);
    CHECK(optimize_alpha(ctx, order, start, 0).values() == start.values());
    long double previous = thickness(build_lattice(ctx, start)).tau;
    AlphaWeights alpha = start;
    for (int it = 0; it < 50; ++it) {
        alpha = optimize_alpha(ctx, order, alpha, 1);
        long double tau = thickness(build_lattice(ctx, alpha)).tau;
        CHECK(tau <= previous + 1e-9L);
        previous = tau;
    }
    auto once = optimize_alpha(ctx, order, start, 50);
    CHECK(optimize_alpha(ctx, order, start, 50).values() == once.values());
}

TEST_CASE("integral basis file") {
    // lambda = 2 + sqrt 5; the maximal order has basis 1, (lambda - 1)/2.
    auto ctx = build_field_context(IntPolynomial{-1, -4, 1});
    auto lb = parse_integral_basis(ctx, "1 0\n-1/2 1/2\n");
    CHECK(lb.disc_abs == 5);
    CHECK(lb.action(0, 0) == 1);
    CHECK(lb.action(1, 0) == 2);
    CHECK(lb.action(0, 1) == 2);
    CHECK(lb.action(1, 1) == 3);
    CHECK(to_power_coords(lb, IntVec{0, 1}) == RatVec{mpq_class(-1, 2), mpq_class(1, 2)});
    auto lat = build_lattice(ctx, AlphaWeights::ones(2), lb);
    CHECK(static_cast<double>(lat.det_qalpha()) == doctest::Approx(5.0).epsilon(1e-9));
    CHECK_THROWS_AS(parse_integral_basis(ctx, "1/2 0\n0 1\n"), Error);
    CHECK_THROWS_AS(parse_integral_basis(ctx, "1 0\n0 2\n"), Error);
    CHECK_THROWS_AS(parse_integral_basis(ctx, "1 0\n2 0\n"), Error);
    CHECK_THROWS_AS(parse_integral_basis(ctx, "1 0\n"), Error);
}

TEST_CASE("lattice point counts") {
    auto simplex = count_lattice_points({{0, 0}, {1, 0}, {0, 1}});
    CHECK(simplex.count == 3);
    CHECK(simplex.bound == 3);
    CHECK(simplex.bound_holds);
    auto square = count_lattice_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(square.count == 4);
    CHECK(square.bound == 6);
    auto segment = count_lattice_points({{0}, {3}});
    CHECK(segment.count == 4);
    CHECK(segment.bound == 6);
    auto tetra = count_lattice_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(tetra.count == 4);
    CHECK(tetra.bound == 4);
    auto cube = count_lattice_points({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {2, 2, 2}});
    CHECK(cube.count == 27);
    CHECK(cube.volume == 8);
    CHECK_THROWS_AS(count_lattice_points({{0, 0}, {1, 1}, {2, 2}}), Error);
    CHECK_THROWS_AS(count_lattice_points({{0, 0}, {100000, 0}, {0, 100000}}, 1000), Error);
}
