#include "perron/report.hpp"

#include <fstream>
#include <sstream>

#include "perron/errors.hpp"

namespace perron {

Json to_json(const mpq_class& q) { return q.get_str(); }

Json to_json(const Interval& iv) {
    return Json{{"lo", iv.lo.get_str()}, {"hi", iv.hi.get_str()}, {"decimal", to_string(iv, 17)}};
}

Json to_json(const IntVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

Json to_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

Json to_json(const IntPolynomial& p) {
    return Json{{"coefficients", p.to_csv()}, {"text", p.to_string()}};
}

Json to_json(const HugeReal& h) {
    return Json{{"mantissa", h.mantissa}, {"exponent2", h.exponent}, {"log10", h.log10()}, {"scientific", h.decimal()}};
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.rows()}, {"entries", std::move(rows)}};
}

mpz_class integer_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
        return mpz_class(j.get<std::string>());
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
    }
}

mpq_class rational_from_json(const Json& j) {
    try {
        mpq_class q(j.get<std::string>());
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "expected a rational, got " + j.dump());
    }
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("entries")) throw Error(ErrorKind::Parse, "matrix JSON needs n and entries");
    const auto n = j.at("n").get<std::size_t>();
    const Json& rows = j.at("entries");
    if (rows.size() != n) throw Error(ErrorKind::Parse, "matrix row count does not match n");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw Error(ErrorKind::Parse, "matrix row length does not match n");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = integer_from_json(rows[i][k]);
    }
    return m;
}

IntVec int_vector_from_json(const Json& j) {
    IntVec out;
    for (const auto& x : j) out.push_back(integer_from_json(x));
    return out;
}

RatVec rat_vector_from_json(const Json& j) {
    RatVec out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

Interval interval_from_json(const Json& j) { return {rational_from_json(j.at("lo")), rational_from_json(j.at("hi"))}; }

Json field_json(const FieldContext& ctx) {
    Json places = Json::array();
    for (const auto& pl : ctx.places()) {
        PrecisionScope scope(ctx.precision_bits());
        places.push_back(Json{{"real", pl.real},
                              {"re", to_decimal(pl.root.center.re, 20)},
                              {"im", to_decimal(pl.root.center.im, 20)},
                              {"radius", to_decimal(pl.root.radius, 3)},
                              {"modulus", to_json(pl.abs)}});
    }
    return Json{{"polynomial", to_json(ctx.poly())},
                {"degree", ctx.degree()},
                {"real_places", ctx.real_places()},
                {"complex_pairs", ctx.complex_places()},
                {"lambda", to_json(Interval(ctx.lambda().lo, ctx.lambda().hi))},
                {"rho", to_json(ctx.rho())},
                {"discriminant", ctx.discriminant().get_str()},
                {"pisot", ctx.is_pisot()},
                {"precision_bits", ctx.precision_bits()},
                {"places", std::move(places)}};
}

Json bound_json(const BoundReport& r) {
    Json out{{"d", r.d},
             {"rho", to_json(r.rho)},
             {"lattice_label", r.lattice_label},
             {"disc_abs", r.disc_abs.get_str()},
             {"theorem_applies", r.theorem_applies}};
    out["exact_dpf"] = r.exact_dpf ? Json(*r.exact_dpf) : Json(nullptr);
    if (r.d >= 2) {
        Json alpha = Json::array();
        for (long double a : r.alpha_used.values()) alpha.push_back(static_cast<double>(a));
        out["alpha_used"] = std::move(alpha);
        out["tau_used"] = static_cast<double>(r.tau_used);
        out["banaszczyk"] = Json{{"bound", static_cast<double>(r.banaszczyk)}, {"holds", r.tau_within_banaszczyk}};
        out["bound_tau"] = to_json(r.bound_tau);
        out["bound_disc"] = to_json(r.bound_disc);
        out["primitive_bound"] = to_json(r.primitive_bound);
        out["pisot_note"] = r.pisot.pisot ? Json{{"inverse_gap", r.pisot.inverse_gap},
                                                  {"plastic_limit", r.pisot.limit},
                                                  {"holds", r.pisot.holds}}
                                            : Json(nullptr);
    }
    out["kappa"] = r.kappa_status;
    return out;
}

Json search_json(const SearchResult& r) {
    Json out{{"mode", to_string(r.mode)}};
    out["n_found"] = r.n_found ? Json(*r.n_found) : Json(nullptr);
    out["exhausted_through"] = r.exhausted_through;
    out["witness"] = r.witness ? matrix_json(*r.witness) : Json(nullptr);
    out["stats"] = Json{{"nodes", r.stats.nodes}, {"leaves", r.stats.leaves}, {"pruned", r.stats.pruned}};
    return out;
}

Json certificate_json(const Construction& c, const BoundReport& bounds, const Json& config) {
    const LatticeContext& lat = c.lattice;
    const LatticeBasis& order = lat.order();
    Json basis = Json::array();
    for (std::size_t j = 0; j < order.basis.cols(); ++j) basis.push_back(to_json(order.basis.column(j)));
    Json alpha = Json::array();
    for (long double a : lat.alpha().values()) alpha.push_back(static_cast<double>(a));

    const ConeSpec& spec = c.cone.spec;
    Json radii = Json::array();
    for (long double r : spec.radii) radii.push_back(static_cast<double>(r));
    Json cone_gens = Json::array();
    for (const auto& g : c.cone.generators) cone_gens.push_back(to_json(g));
    Json witnesses = Json::array();
    for (const auto& w : c.cone.witnesses) witnesses.push_back(to_json(w));
    Json trials = Json::array();
    for (const auto& t : c.trials)
        trials.push_back(Json{{"shrink", static_cast<double>(t.shrink)}, {"accepted", t.accepted}, {"outcome", t.outcome}});
    Json distances = Json::array();
    for (long double d : c.cone.distances) distances.push_back(static_cast<double>(d));

    Json pruned = Json::array();
    for (const auto& g : c.generators.gens) pruned.push_back(to_json(g));
    Json rows = Json::array();
    for (const auto& g : c.component_generators) rows.push_back(to_json(g));

    Json out;
    out["format"] = "perron-forge-certificate/1";
    out["config"] = config;
    out["field"] = field_json(lat.field());
    out["lattice"] = Json{{"label", order.label},
                          {"basis", std::move(basis)},
                          {"action", matrix_json(order.action)},
                          {"disc_abs", order.disc_abs.get_str()},
                          {"alpha", std::move(alpha)},
                          {"ell_hat", static_cast<double>(lat.ell_hat())},
                          {"det_qalpha", static_cast<double>(lat.det_qalpha())}};
    out["cone"] = Json{{"mode", to_string(spec.mode)},
                       {"shrink", static_cast<double>(spec.shrink)},
                       {"ell", static_cast<double>(spec.ell)},
                       {"height", static_cast<double>(spec.height)},
                       {"radii", std::move(radii)},
                       {"orders", spec.orders},
                       {"vertex_count", spec.vertex_count},
                       {"rounding_distances", std::move(distances)},
                       {"generators", std::move(cone_gens)},
                       {"witnesses", std::move(witnesses)},
                       {"trials", std::move(trials)}};
    out["semigroup"] = Json{{"scanned", c.scanned},
                            {"enumerated", c.enumerated},
                            {"pruned_count", c.generators.gens.size()},
                            {"generators", std::move(pruned)}};
    out["matrix"] = Json{{"full_dimension", c.full_matrix.rows()},
                         {"component", c.component},
                         {"dimension", c.matrix.rows()},
                         {"row_generators", std::move(rows)},
                         {"upgraded", c.upgraded}};
    out["spectral"] = Json{{"method", c.certificate.method},
                           {"charpoly", to_json(IntVec(c.certificate.charpoly.coeffs()))},
                           {"quotient", to_json(IntVec(c.certificate.quotient.coeffs()))},
                           {"radius_interval", to_json(c.certificate.radius_interval)},
                           {"matches_lambda", c.certificate.matches_lambda}};
    out["structure"] = Json{{"irreducible", true}, {"period", c.periodicity.period}, {"primitive", c.periodicity.primitive}};
    out["bounds"] = Json{{"bound_disc", to_json(bounds.bound_disc)},
                         {"bound_tau", to_json(bounds.bound_tau)},
                         {"dimension_within_bound_disc", bounds.bound_disc.at_least(mpz_class(c.matrix.rows()))},
                         {"kappa", bounds.kappa_status}};
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
        out << contents;
        if (!out.flush()) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot rename " + tmp.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace perron
