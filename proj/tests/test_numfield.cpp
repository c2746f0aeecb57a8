#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "perron/errors.hpp"
#include "perron/numfield.hpp"

using namespace perron;

namespace {

const IntPolynomial plastic{-1, -1, 0, 1};
const IntPolynomial golden{-1, -1, 1};

ErrorKind kind_of(const IntPolynomial& p) {
    try {
        build_field_context(p);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Io;
}

}  // namespace

TEST_CASE("plastic field places") {
    auto ctx = build_field_context(plastic);
    CHECK(ctx.real_places() == 1);
    CHECK(ctx.complex_places() == 1);
    const double lambda = 1.324717957244746;
    CHECK(lambda_interval(ctx).lo_double() == doctest::Approx(lambda).epsilon(1e-14));
    // Product of roots is 1, so |conjugate|^2 = 1/lambda and rho = lambda^(-3/2).
    const double rho = std::pow(lambda, -1.5);
    CHECK(ctx.rho().lo_double() == doctest::Approx(rho).epsilon(1e-12));
    CHECK(ctx.rho().hi_double() == doctest::Approx(rho).epsilon(1e-12));
    CHECK(ctx.rho().lo <= ctx.rho().hi);
    CHECK(ctx.rho().hi < 1);
    CHECK(ctx.place(1).root.center.im > 0);
    CHECK(ctx.is_pisot());
    CHECK(ctx.discriminant() == -23);
}

TEST_CASE("golden and x^2-3x+1 spectral ratios") {
    auto g = build_field_context(golden);
    CHECK(g.real_places() == 2);
    CHECK(g.complex_places() == 0);
    const double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(g.rho().hi_double() == doctest::Approx((phi - 1) / phi).epsilon(1e-12));
    CHECK(g.rho().hi_double() == doctest::Approx(0.3819660).epsilon(1e-7));
    auto h = build_field_context(IntPolynomial{1, -3, 1});
    const double big = (3 + std::sqrt(5.0)) / 2;
    const double small = (3 - std::sqrt(5.0)) / 2;
    CHECK(h.rho().hi_double() == doctest::Approx(small / big).epsilon(1e-12));
    CHECK(h.rho().hi_double() == doctest::Approx(0.1458980).epsilon(1e-6));
}

TEST_CASE("non-Perron inputs") {
    CHECK(kind_of(IntPolynomial{-2, 0, 1}) == ErrorKind::NotPerron);   // +-sqrt 2 tie
    CHECK(kind_of(IntPolynomial{1, 0, 1}) == ErrorKind::NotPerron);    // no real root
    CHECK(kind_of(IntPolynomial{-1, 3, 1}) == ErrorKind::NotPerron);   // negative root dominates
    CHECK(kind_of(IntPolynomial{2, 1}) == ErrorKind::NotPerron);       // lambda = -2
    CHECK(kind_of(IntPolynomial{-2, 0, 0, 0, 1}) == ErrorKind::NotPerron);
}

TEST_CASE("degree one field") {
    auto ctx = build_field_context(IntPolynomial{-2, 1});
    CHECK(ctx.real_places() == 1);
    CHECK(ctx.lambda().lo == 2);
    CHECK(ctx.rho().hi == 0);
}

TEST_CASE("embedding of simple elements") {
    auto ctx = build_field_context(plastic);
    auto one = embed(ctx, IntVec{1, 0, 0});
    CHECK(one.coords[0] == doctest::Approx(1.0));
    CHECK(one.coords[1] == doctest::Approx(1.0));
    CHECK(one.coords[2] == doctest::Approx(0.0));
    auto lam = embed(ctx, IntVec{0, 1, 0});
    CHECK(static_cast<double>(lam.coords[0]) == doctest::Approx(1.3247179572));
    CHECK(static_cast<double>(lam.coords[1]) == doctest::Approx(-0.6623589786));
    CHECK(static_cast<double>(lam.coords[2]) == doctest::Approx(0.5622795121));
    auto zero = embed(ctx, IntVec{0, 0, 0});
    for (auto c : zero.coords) CHECK(c == 0);
}

TEST_CASE("companion action") {
    auto ctx = build_field_context(plastic);
    CHECK(apply_mult(ctx, IntVec{1, 0, 0}) == IntVec{0, 1, 0});
    CHECK(apply_mult(ctx, IntVec{0, 0, 1}) == IntVec{1, 1, 0});
    CHECK(apply_mult(ctx, IntVec{0, 0, 0}) == IntVec{0, 0, 0});
}

TEST_CASE("embedding intertwines the companion action") {
    for (const auto& p : {plastic, golden, IntPolynomial{-1, -3, 0, 1}, IntPolynomial{-1, 0, 0, -1, 1}}) {
        auto ctx = build_field_context(p);
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> coeff(-20, 20);
        const auto d = static_cast<std::size_t>(ctx.degree());
        for (int trial = 0; trial < 100; ++trial) {
            IntVec v(d);
            for (auto& x : v) x = coeff(rng);
            auto before = embed(ctx, v);
            auto after = embed(ctx, apply_mult(ctx, v));
            for (std::size_t j = 0; j < ctx.places().size(); ++j) {
                const auto& c = ctx.place(j).root.center;
                std::complex<long double> sigma(to_long_double(c.re), to_long_double(c.im));
                std::size_t off = ctx.offset(j);
                std::complex<long double> x(before.coords[off], ctx.place(j).real ? 0 : before.coords[off + 1]);
                std::complex<long double> y = sigma * x;
                long double scale = 1 + std::abs(y);
                CHECK(std::abs(y.real() - after.coords[off]) <= 1e-15L * scale);
                if (!ctx.place(j).real) CHECK(std::abs(y.imag() - after.coords[off + 1]) <= 1e-15L * scale);
            }
        }
    }
}

TEST_CASE("projection norms") {
    auto ctx = build_field_context(plastic);
    auto n = projection_norms(ctx, {1, 1}, embed(ctx, IntVec{1, 0, 0}));
    CHECK(n.squared[0] == doctest::Approx(1.0));
    CHECK(n.squared[1] == doctest::Approx(2.0));
    CHECK(n.total_squared == doctest::Approx(3.0));
    auto zero = projection_norms(ctx, {1, 1}, embed(ctx, IntVec{0, 0, 0}));
    CHECK(zero.total_squared == 0);
    auto g = build_field_context(golden);
    auto w = projection_norms(g, {4, 1}, embed(g, IntVec{1, 0}));
    CHECK(std::sqrt(w.squared[0]) == doctest::Approx(2.0));
    CHECK(std::sqrt(w.squared[1]) == doctest::Approx(1.0));
    CHECK(w.total_squared == doctest::Approx(5.0));
}

TEST_CASE("exact sign at lambda") {
    auto ctx = build_field_context(plastic);
    CHECK(sign_at_lambda(ctx, IntVec{0, 1, 0}) == 1);
    CHECK(sign_at_lambda(ctx, IntVec{-1, -1, 0, 1}) == 0);
    // lambda = 1.3247... lies just below 4/3.
    CHECK(sign_at_lambda(ctx, IntVec{4, -3, 0}) == 1);
    CHECK(sign_at_lambda(ctx, RatVec{mpq_class(-13, 10), 1, 0}) == 1);
    CHECK(sign_at_lambda(ctx, RatVec{mpq_class(-4, 3), 1, 0}) == -1);
}

TEST_CASE("rho is stable under precision refinement") {
    auto a = build_field_context(plastic, {128, 4096});
    auto b = build_field_context(plastic, {1024, 4096});
    CHECK(a.rho().overlaps(b.rho()));
    CHECK(b.rho().width() <= a.rho().width() + mpq_class(1, 1000000));
}

TEST_CASE("Pisot flag") {
    CHECK(build_field_context(golden).is_pisot());
    CHECK_FALSE(build_field_context(IntPolynomial{-1, -3, 0, 1}).is_pisot());
}
