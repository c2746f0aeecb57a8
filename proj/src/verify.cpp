#include "perron/verify.hpp"

#include <algorithm>

#include "perron/errors.hpp"

namespace perron {

bool VerifyReport::ok() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

std::vector<IntVec> vectors_from_json(const Json& j) {
    std::vector<IntVec> out;
    for (const auto& v : j) out.push_back(int_vector_from_json(v));
    return out;
}

// Basis elements in power coordinates; the action is recomputed from the
// companion matrix.
LatticeBasis lattice_from_json(const FieldContext& ctx, const Json& j) {
    const std::size_t d = static_cast<std::size_t>(ctx.degree());
    const Json& cols = j.at("basis");
    if (cols.size() != d) throw Error(ErrorKind::Parse, "basis has the wrong number of elements");
    LatticeBasis lb;
    lb.basis = RatMatrix(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        RatVec v = rat_vector_from_json(cols[c]);
        if (v.size() != d) throw Error(ErrorKind::Parse, "basis element has the wrong length");
        lb.basis.set_column(c, v);
    }
    RatMatrix action = inverse(lb.basis) * to_rational(ctx.companion()) * lb.basis;
    lb.action = IntMatrix(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            if (action(r, c).get_den() != 1) throw Error(ErrorKind::VerificationFailed, "lattice is not lambda-stable");
            lb.action(r, c) = action(r, c).get_num();
        }
    mpq_class det = determinant(lb.basis);
    mpq_class disc = abs(mpq_class(ctx.discriminant())) * det * det;
    lb.disc_abs = disc.get_num();
    lb.label = j.at("label").get<std::string>();
    return lb;
}

}  // namespace

VerifyReport verify_certificate(const Json& cert, const Json& matrix) {
    VerifyReport rep;
    auto check = [&](std::string name, bool ok, std::string detail = {}) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    const IntPolynomial p = IntPolynomial::parse(cert.at("field").at("polynomial").at("coefficients").get<std::string>());
    const bool assume = cert.at("config").value("assume_irreducible", false);
    require_irreducible(p, assume);
    const FieldContext ctx = build_field_context(p);
    check("perron", true, "lambda in " + to_string(lambda_interval(ctx), 12));

    const IntMatrix a = matrix_from_json(matrix);
    bool nonneg = a.rows() > 0 && std::all_of(a.data().begin(), a.data().end(), [](const auto& x) { return x >= 0; });
    check("nonnegative", nonneg);
    if (!nonneg) return rep;
    check("dimension", cert.at("matrix").at("dimension").get<std::size_t>() == a.rows());

    const bool irreducible = is_irreducible(a);
    check("irreducible", irreducible);
    if (irreducible) {
        const Periodicity per = period_and_primitivity(a);
        check("period", per.period == cert.at("structure").at("period").get<std::size_t>(),
              "period " + std::to_string(per.period));
        check("primitive_flag", per.primitive == cert.at("structure").at("primitive").get<bool>());
        if (per.primitive) check("primitive_by_powering", primitive_by_powering(a));
    }

    const Json& spectral = cert.at("spectral");
    const IntPolynomial cp = charpoly_exact(a);
    check("charpoly", IntPolynomial(int_vector_from_json(spectral.at("charpoly"))) == cp);
    const IntPolynomial quotient(int_vector_from_json(spectral.at("quotient")));
    const bool divisible = quotient * p == cp;
    check("divisibility", divisible);

    // The stored interval isolates lambda: one root of p inside, none above.
    const Interval radius = interval_from_json(spectral.at("radius_interval"));
    const SturmSequence sturm(p);
    const bool isolates = radius.lo < radius.hi && sign_at(p, radius.lo) != 0 && sturm.count(radius.lo, radius.hi) == 1 &&
                          sturm.count_above(radius.hi) == 0;
    check("radius_interval", isolates && radius.width() < mpq_class(1, 100000000), to_string(radius, 12));

    const std::string method = spectral.at("method").get<std::string>();
    const Json& lattice_json = cert.at("lattice");
    const LatticeBasis order = lattice_from_json(ctx, lattice_json);
    check("lattice_action", matrix_from_json(lattice_json.at("action")) == order.action);
    const std::vector<IntVec> rows = vectors_from_json(cert.at("matrix").at("row_generators"));
    if (!divisible) {
        check("spectral_radius", false, "charpoly is not a multiple of the minimal polynomial");
    } else if (method == "sturm") {
        check("spectral_radius", certify_spectral_radius(ctx, a).matches_lambda, method);
    } else if (method == "positive_left_eigenvector") {
        check("spectral_radius", certify_by_eigenvector(ctx, order, a, rows).matches_lambda, method);
    } else {
        check("spectral_radius", false, "unknown method " + method);
    }

    if (!rows.empty()) {
        bool identity = rows.size() == a.rows();
        for (std::size_t j = 0; identity && j < rows.size(); ++j) {
            IntVec image = order.action * rows[j];
            IntVec combo(image.size(), 0);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t k = 0; k < combo.size(); ++k) combo[k] += a(i, j) * rows[i][k];
            identity = image == combo;
        }
        check("generator_identity", identity);
    }

    const Json& cone = cert.at("cone");
    const std::vector<IntVec> cone_gens = vectors_from_json(cone.at("generators"));
    std::vector<RatVec> witnesses;
    for (const auto& w : cone.at("witnesses")) witnesses.push_back(rat_vector_from_json(w));
    check("cone_invariance", witnesses_hold(order.action, cone_gens, witnesses));
    bool positive = true;
    for (const auto& g : cone_gens) positive = positive && sign_at_lambda(ctx, to_power_coords(order, g)) > 0;
    check("cone_positivity", positive);

    if (ctx.degree() >= 2) {
        HugeReal bound = bound_from_disc(ctx.degree(), ctx.rho().hi, order.disc_abs);
        check("dimension_within_bound_disc", bound.at_least(mpz_class(a.rows())), bound.decimal());
    }
    return rep;
}

Json verify_json(const VerifyReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"ok", report.ok()}, {"checks", std::move(checks)}};
}

}  // namespace perron
