#include "doctest.h"

#include "perron/errors.hpp"
#include "perron/searchdpf.hpp"

using namespace perron;

namespace {

SearchResult search(const IntPolynomial& p, SearchMode mode, int n_max, bool prune = true,
                    std::optional<long> cap = std::nullopt) {
    SearchOptions opt;
    opt.mode = mode;
    opt.n_max = n_max;
    opt.prune = prune;
    opt.entry_cap = cap;
    return brute_force_dpf(build_field_context(p), opt);
}

void check_witness(const IntPolynomial& p, const SearchResult& r) {
    REQUIRE(r.witness.has_value());
    const NonNegIntMatrix& w = *r.witness;
    CHECK(static_cast<int>(w.rows()) == *r.n_found);
    CHECK(is_irreducible(w));
    if (r.mode == SearchMode::Primitive) CHECK(primitive_by_powering(w));
    FieldContext ctx = build_field_context(p);
    CHECK(certify_spectral_radius(ctx, w).matches_lambda);
}

}  // namespace

TEST_CASE("golden ratio has degree two") {
    SearchResult r = search(IntPolynomial{-1, -1, 1}, SearchMode::Primitive, 4);
    REQUIRE(r.n_found.has_value());
    CHECK(*r.n_found == 2);
    check_witness(IntPolynomial{-1, -1, 1}, r);
    CHECK(charpoly_exact(*r.witness) == IntPolynomial{-1, -1, 1});
}

TEST_CASE("plastic constant has degree three") {
    const IntPolynomial p{-1, -1, 0, 1};
    SearchResult r = search(p, SearchMode::Primitive, 4);
    REQUIRE(r.n_found.has_value());
    CHECK(*r.n_found == 3);
    check_witness(p, r);
    CHECK(charpoly_exact(*r.witness) == p);
}

TEST_CASE("rational integer") {
    SearchResult r = search(IntPolynomial{-2, 1}, SearchMode::Primitive, 2);
    REQUIRE(r.n_found.has_value());
    CHECK(*r.n_found == 1);
    CHECK((*r.witness)(0, 0) == 2);
}

TEST_CASE("quadratic inputs always give two") {
    for (const auto& p : {IntPolynomial{-1, -1, 1}, IntPolynomial{-1, -2, 1}, IntPolynomial{1, -3, 1},
                          IntPolynomial{-2, -2, 1}, IntPolynomial{-1, -3, 1}}) {
        for (SearchMode mode : {SearchMode::Primitive, SearchMode::Irreducible}) {
            SearchResult r = search(p, mode, 3);
            REQUIRE(r.n_found.has_value());
            CHECK(*r.n_found == 2);
            check_witness(p, r);
        }
    }
}

TEST_CASE("pruning agrees with plain enumeration on a micro box") {
    for (const auto& p : {IntPolynomial{-1, -1, 1}, IntPolynomial{-1, -1, 0, 1}, IntPolynomial{-2, 1},
                          IntPolynomial{-1, 1}, IntPolynomial{-1, -2, 1}, IntPolynomial{-1, 0, -1, 1}}) {
        for (SearchMode mode : {SearchMode::Primitive, SearchMode::Irreducible}) {
            SearchResult fast = search(p, mode, 3, true, 1);
            SearchResult slow = search(p, mode, 3, false, 1);
            CHECK(fast.n_found == slow.n_found);
            CHECK(fast.witness == slow.witness);
            CHECK(fast.exhausted_through == slow.exhausted_through);
            CHECK(fast.stats.leaves <= slow.stats.leaves);
        }
    }
}

TEST_CASE("budget") {
    SearchOptions opt;
    opt.budget = 0;
    FieldContext ctx = build_field_context(IntPolynomial{-1, -1, 1});
    try {
        brute_force_dpf(ctx, opt);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.partial() == 1);
    }
    opt.budget = 100;
    opt.n_max = 7;
    CHECK_THROWS_AS(brute_force_dpf(ctx, opt), Error);
}

TEST_CASE("negative trace cubic has no witness of its own degree") {
    IntPolynomial p = find_negative_trace_cubic(5);
    CHECK(p.degree() == 3);
    CHECK(p.coeff(2) > 0);
    FieldContext ctx = build_field_context(p);
    CHECK(ctx.lambda().hi > 1);
    SearchResult r = search(p, SearchMode::Irreducible, 3);
    CHECK_FALSE(r.n_found.has_value());
    CHECK(r.exhausted_through == 3);
    try {
        find_negative_trace_cubic(0);
        FAIL("expected NotFound");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFound);
    }
}
