#include "doctest.h"

#include <cmath>

#include "perron/bounds.hpp"

using namespace perron;

namespace {

const IntPolynomial plastic{-1, -1, 0, 1};

double plastic_root() {
    double x = 1.3;
    for (int i = 0; i < 60; ++i) x -= (x * x * x - x - 1) / (3 * x * x - 1);
    return x;
}

}  // namespace

TEST_CASE("plastic bound magnitudes") {
    FieldContext ctx = build_field_context(plastic);
    LatticeContext lat = build_lattice(ctx, AlphaWeights::ones(2));
    BoundReport r = theorem_bounds(lat);
    CHECK(r.d == 3);
    CHECK(r.theorem_applies);
    CHECK_FALSE(r.exact_dpf.has_value());
    CHECK(r.disc_abs == 23);
    CHECK(r.lattice_label == "Z[lambda]");
    const double rho = std::pow(plastic_root(), -1.5);
    const double expected = 9 * std::log10(24 / (1 - rho)) + 0.5 * std::log10(23.0);
    CHECK(r.bound_disc.log10() == doctest::Approx(expected).epsilon(1e-6));
    CHECK(r.bound_disc.log10() > 17.2);
    CHECK(r.bound_disc.log10() < 17.4);
    const double tau_expected = 9 * std::log10(24 / (1 - rho)) + 1.5 * std::log10(static_cast<double>(r.tau_used));
    CHECK(r.bound_tau.log10() == doctest::Approx(tau_expected).epsilon(1e-6));
    CHECK(r.primitive_bound.log2() == doctest::Approx(r.bound_disc.log2() + 9));
    CHECK(r.kappa_status == "not computed");
    CHECK(r.tau_within_banaszczyk);
    CHECK(r.bound_tau <= r.bound_disc);
    CHECK(r.pisot.pisot);
    CHECK(r.pisot.holds);
    CHECK(r.pisot.limit == doctest::Approx(plastic_root() / (plastic_root() - 1)));
    std::string text = render(r);
    CHECK(text.find("not computed") != std::string::npos);
    CHECK(text.find("pisot note") != std::string::npos);
}

TEST_CASE("quadratic fields short-circuit") {
    FieldContext ctx = build_field_context(IntPolynomial{-1, -1, 1});
    BoundReport r = theorem_bounds(build_lattice(ctx, AlphaWeights::ones(2)));
    REQUIRE(r.exact_dpf.has_value());
    CHECK(*r.exact_dpf == 2);
    CHECK_FALSE(r.theorem_applies);
    CHECK(render(r).find("d_PF                   2") != std::string::npos);
}

TEST_CASE("tau bound sits below the discriminant bound in low degree") {
    for (const auto& p : {plastic, IntPolynomial{-1, -3, 0, 1}, IntPolynomial{-1, -1, -1, 0, 1}, IntPolynomial{-1, -4, 0, 1}}) {
        FieldContext ctx = build_field_context(p);
        LatticeContext lat = build_lattice(ctx, AlphaWeights::ones(static_cast<std::size_t>(ctx.place_count())));
        BoundReport r = theorem_bounds(lat);
        if (r.tau_within_banaszczyk && r.d <= 4) CHECK(r.bound_tau <= r.bound_disc);
    }
}

TEST_CASE("bounds increase with rho") {
    for (int d : {3, 4, 6}) {
        HugeReal prev = bound_from_disc(d, mpq_class(1, 100), 49);
        for (int k = 2; k < 100; ++k) {
            HugeReal next = bound_from_disc(d, mpq_class(k, 100), 49);
            CHECK(prev < next);
            prev = next;
        }
        CHECK(bound_from_tau(d, mpq_class(1, 2), 0.5L) < bound_from_tau(d, mpq_class(51, 100), 0.5L));
    }
}

TEST_CASE("huge values do not overflow") {
    HugeReal h = bound_from_disc(12, mpq_class(999999, 1000000), mpz_class("1000000000000000000000"));
    // 144 * log10(96e6) + 10.5
    CHECK(h.log10() == doctest::Approx(144 * std::log10(96e6) + 10.5).epsilon(1e-9));
    CHECK(std::isfinite(h.log10()));
    CHECK(h.mantissa >= 0.5);
    CHECK(h.mantissa < 1);
    CHECK(h.at_least(mpz_class("100000000000000000000000000000")));
    HugeReal small = bound_from_disc(1, mpq_class(0), 1);
    CHECK(small.log2() == doctest::Approx(3.0));
    CHECK(small.decimal(3) == "8.000e+0");
    CHECK(small.at_least(8));
    CHECK_FALSE(small.at_least(9));
}
