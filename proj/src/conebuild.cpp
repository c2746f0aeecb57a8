#include "perron/conebuild.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "perron/errors.hpp"
#include "perron/exact_lp.hpp"

namespace perron {

const char* to_string(ConeMode mode) { return mode == ConeMode::PaperExact ? "paper_exact" : "adaptive"; }

ConeSpec build_cone_spec(const LatticeContext& lat, ConeMode mode, long double shrink) {
    const FieldContext& ctx = lat.field();
    const int d = ctx.degree();
    if (d < 2) throw Error(ErrorKind::InvalidArgument, "cone construction needs degree >= 2");
    if (!(shrink > 0 && shrink <= 1)) throw Error(ErrorKind::InvalidArgument, "shrink factor must lie in (0, 1]");
    const long double rho = ctx.rho().hi.get_d();
    if (!(rho < 1)) throw Error(ErrorKind::InvalidArgument, "spectral ratio is not below 1");

    ConeSpec spec;
    spec.mode = mode;
    spec.shrink = mode == ConeMode::PaperExact ? 1.0L : shrink;
    spec.ell = spec.shrink * lat.ell_hat();
    const long double root_d = std::sqrt(static_cast<long double>(d));
    const long double gap = 1 - rho;
    const auto places = ctx.places().size();
    spec.radii.assign(places, 0.0L);
    spec.orders.assign(places, 0);
    spec.vertex_count = 1;
    for (std::size_t j = 1; j < places; ++j) {
        if (ctx.place(j).real) {
            spec.radii[j] = (2 * root_d + 4) * spec.ell / gap;
            spec.vertex_count *= 2;
        } else {
            const long double need = (2 * root_d + 9) / gap;
            int n = 3;
            while (static_cast<long double>(n) * n < need) ++n;
            spec.orders[j] = n;
            spec.radii[j] = static_cast<long double>(n) * n * spec.ell;
            spec.vertex_count *= static_cast<std::uint64_t>(n);
        }
        spec.height = std::max(spec.height, spec.radii[j]);
    }
    return spec;
}

std::vector<PlaceVector> polytope_vertices(const LatticeContext& lat, const ConeSpec& spec) {
    const FieldContext& ctx = lat.field();
    const auto d = static_cast<std::size_t>(ctx.degree());
    const auto places = ctx.places().size();
    const AlphaWeights& alpha = lat.alpha();
    // Mixed-radix counter over the choices at each place.
    std::vector<int> radix(places, 1);
    for (std::size_t j = 1; j < places; ++j) radix[j] = ctx.place(j).real ? 2 : spec.orders[j];
    std::vector<int> digit(places, 0);
    std::vector<PlaceVector> out;
    out.reserve(spec.vertex_count);
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (;;) {
        PlaceVector v;
        v.coords.assign(d, 0.0L);
        v.coords[0] = spec.height / std::sqrt(alpha[0]);
        for (std::size_t j = 1; j < places; ++j) {
            std::size_t off = ctx.offset(j);
            if (ctx.place(j).real) {
                long double x = spec.radii[j] / std::sqrt(alpha[j]);
                v.coords[off] = digit[j] == 0 ? x : -x;
            } else {
                long double r = spec.radii[j] / std::sqrt(2 * alpha[j]);
                long double angle = two_pi * digit[j] / spec.orders[j];
                v.coords[off] = r * std::cos(angle);
                v.coords[off + 1] = r * std::sin(angle);
            }
        }
        out.push_back(std::move(v));
        std::size_t j = 1;
        while (j < places && digit[j] + 1 == radix[j]) digit[j] = 0, ++j;
        if (j >= places) break;
        ++digit[j];
    }
    return out;
}

RoundedVertices round_to_lattice(const LatticeContext& lat, const std::vector<PlaceVector>& vertices) {
    RoundedVertices out;
    std::map<IntVec, std::size_t> index;
    for (const auto& v : vertices) {
        ClosestVector cv = closest_vector(lat, v);
        out.distances.push_back(cv.distance);
        auto [it, fresh] = index.emplace(cv.coords, out.generators.size());
        if (fresh) {
            if (sign_at_lambda(lat.field(), to_power_coords(lat.order(), cv.coords)) <= 0)
                throw Error(ErrorKind::PositivityFailed, "a rounded vertex has non-positive first coordinate");
            out.generators.push_back(cv.coords);
        }
        out.source.push_back(it->second);
    }
    return out;
}

InvarianceCheck verify_invariance(const IntMatrix& action, const std::vector<IntVec>& generators) {
    InvarianceCheck out;
    RatMatrix cols = columns_to_rational(generators);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        IntVec image = action * generators[i];
        auto beta = nonnegative_solution(cols, RatVec(image.begin(), image.end()));
        if (!beta) {
            out.failing = i;
            out.witnesses.clear();
            return out;
        }
        out.witnesses.push_back(std::move(*beta));
    }
    out.invariant = witnesses_hold(action, generators, out.witnesses);
    return out;
}

bool witnesses_hold(const IntMatrix& action, const std::vector<IntVec>& generators, const std::vector<RatVec>& witnesses) {
    if (witnesses.size() != generators.size()) return false;
    const std::size_t d = action.rows();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (witnesses[i].size() != generators.size()) return false;
        IntVec image = action * generators[i];
        for (std::size_t r = 0; r < d; ++r) {
            mpq_class s = 0;
            for (std::size_t m = 0; m < generators.size(); ++m) {
                if (witnesses[i][m] < 0) return false;
                s += witnesses[i][m] * generators[m][r];
            }
            if (s != image[r]) return false;
        }
    }
    return true;
}

ConeData build_cone(const LatticeContext& lat, const ConeSpec& spec) {
    ConeData cone;
    cone.spec = spec;
    cone.vertices = polytope_vertices(lat, spec);
    RoundedVertices rounded = round_to_lattice(lat, cone.vertices);
    cone.generators = std::move(rounded.generators);
    cone.source = std::move(rounded.source);
    cone.distances = std::move(rounded.distances);
    InvarianceCheck check = verify_invariance(lat.order().action, cone.generators);
    if (!check.invariant) {
        std::ostringstream os;
        os << "cone is not invariant";
        if (check.failing) os << " at generator " << *check.failing;
        throw Error(ErrorKind::CertificationFailed, os.str());
    }
    cone.witnesses = std::move(check.witnesses);
    return cone;
}

AdaptiveCone adaptive_search(const LatticeContext& lat, long double t_min, int steps) {
    if (!(t_min > 0 && t_min <= 1)) throw Error(ErrorKind::InvalidArgument, "shrink floor must lie in (0, 1]");
    AdaptiveCone out;
    auto attempt = [&](long double t) -> std::optional<ConeData> {
        ShrinkTrial trial{t, false, "ok"};
        std::optional<ConeData> cone;
        try {
            cone = build_cone(lat, build_cone_spec(lat, ConeMode::Adaptive, t));
            trial.accepted = true;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PositivityFailed && e.kind() != ErrorKind::CertificationFailed) throw;
            trial.outcome = e.kind() == ErrorKind::PositivityFailed ? "positivity_failed" : "not_invariant";
        }
        out.trials.push_back(trial);
        return cone;
    };

    if (auto cone = attempt(t_min)) {
        out.cone = std::move(*cone);
        return out;
    }
    std::optional<ConeData> best = t_min < 1 ? attempt(1) : std::nullopt;
    if (!best) throw Error(ErrorKind::CertificationFailed, "no certified cone even at shrink 1");
    long double lo = std::log(t_min);
    long double hi = 0;
    for (int i = 0; i < steps; ++i) {
        long double mid = (lo + hi) / 2;
        if (auto cone = attempt(std::exp(mid))) {
            best = std::move(cone);
            hi = mid;
        } else {
            lo = mid;
        }
    }
    out.cone = std::move(*best);
    return out;
}

}  // namespace perron
