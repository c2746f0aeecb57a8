#include "doctest.h"

#include "perron/bounds.hpp"
#include "perron/errors.hpp"
#include "perron/pipeline.hpp"

using namespace perron;

namespace {

void check_construction(const Construction& c) {
    const NonNegIntMatrix& a = c.matrix;
    CHECK(is_irreducible(a));
    for (const auto& x : a.data()) CHECK(x >= 0);
    CHECK(c.certificate.matches_lambda);
    CHECK(exact_quotient(charpoly_exact(a), c.field().poly()).has_value());
    CHECK(c.certificate.radius_interval.width() < mpq_class(1, 100000000));
    CHECK(witnesses_hold(c.lattice.order().action, c.cone.generators, c.cone.witnesses));
    REQUIRE(c.component_generators.size() == a.rows());
    for (std::size_t j = 0; j < a.rows(); ++j) {
        IntVec image = c.lattice.order().action * c.component_generators[j];
        IntVec combo(image.size(), 0);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < combo.size(); ++k) combo[k] += a(i, j) * c.component_generators[i][k];
        CHECK(image == combo);
    }
    BoundReport b = theorem_bounds(c.lattice);
    CHECK(b.bound_disc.at_least(mpz_class(a.rows())));
}

}  // namespace

TEST_CASE("irreducibility gate") {
    CHECK_NOTHROW(require_irreducible(IntPolynomial{-1, -1, 0, 1}, false));
    CHECK_NOTHROW(require_irreducible(IntPolynomial{-2, 1}, false));
    try {
        require_irreducible(IntPolynomial{2, -3, 1}, false);
        FAIL("expected NotIrreducible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotIrreducible);
    }
    CHECK_THROWS_AS(require_irreducible(IntPolynomial{-1, -1, -1, -1, 1}, false), Error);
    CHECK_NOTHROW(require_irreducible(IntPolynomial{-1, -1, -1, -1, 1}, true));
    CHECK_THROWS_AS(require_irreducible(IntPolynomial{-1, -1, 2}, false), Error);
}

TEST_CASE("adaptive constructions") {
    for (const auto& p : {IntPolynomial{-1, -1, 1}, IntPolynomial{-1, -1, 0, 1}, IntPolynomial{-1, -3, 1},
                          IntPolynomial{-1, -3, 0, 1}, IntPolynomial{-2, -2, -1, 1}}) {
        Construction c = construct(p, ConstructOptions{});
        CAPTURE(p.to_string());
        check_construction(c);
        CHECK_FALSE(c.trials.empty());
    }
}

TEST_CASE("quartic with the gate overridden") {
    ConstructOptions o;
    o.assume_irreducible = true;
    Construction c = construct(IntPolynomial{-1, -1, -1, -1, 1}, o);
    check_construction(c);
}

TEST_CASE("optimized weights and a user basis") {
    ConstructOptions o;
    o.alpha_iters = 4;
    check_construction(construct(IntPolynomial{-1, -1, 0, 1}, o));

    ConstructOptions b;
    b.basis_text = "1 0\n-1/2 1/2\n";
    Construction c = construct(IntPolynomial{-1, -4, 1}, b);
    CHECK(c.lattice.order().label == "user_basis");
    CHECK(c.lattice.order().disc_abs == 5);
    check_construction(c);
}

TEST_CASE("primitive request") {
    ConstructOptions o;
    o.primitive = true;
    Construction c = construct(IntPolynomial{-1, -1, 0, 1}, o);
    CHECK(c.periodicity.primitive);
    CHECK(primitive_by_powering(c.matrix));
    CHECK(c.certificate.matches_lambda);
}

TEST_CASE("budget and degree errors") {
    ConstructOptions o;
    o.mode = ConeMode::PaperExact;
    o.budget = 1000;
    try {
        construct(IntPolynomial{-1, -1, 0, 1}, o);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    CHECK_THROWS_AS(construct(IntPolynomial{-2, 1}, ConstructOptions{}), Error);
    try {
        construct(IntPolynomial{-2, 0, 1}, ConstructOptions{});
        FAIL("expected NotPerron");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPerron);
    }
}
