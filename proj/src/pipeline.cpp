#include "perron/pipeline.hpp"

#include "perron/errors.hpp"

namespace perron {

void require_irreducible(const IntPolynomial& p, bool assume) {
    if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "polynomial must have positive degree");
    if (!p.is_monic()) throw Error(ErrorKind::InvalidArgument, "polynomial must be monic");
    SanityReport sanity = squarefree_and_no_rational_root(p);
    if (p.degree() == 1) return;
    if (!sanity.ok) throw Error(ErrorKind::NotIrreducible, sanity.diagnostic);
    if (p.degree() >= 4 && !assume)
        throw Error(ErrorKind::NotIrreducible,
                    "irreducibility is only decided up to degree 3; pass --assume-irreducible for higher degree");
}

LatticeContext prepare_lattice(const IntPolynomial& p, const ConstructOptions& options) {
    require_irreducible(p, options.assume_irreducible);
    FieldContext ctx = build_field_context(p, options.roots);
    LatticeBasis order = options.basis_text ? parse_integral_basis(ctx, *options.basis_text) : power_basis(ctx);
    AlphaWeights alpha = AlphaWeights::ones(static_cast<std::size_t>(ctx.place_count()));
    if (options.alpha_iters > 0) alpha = optimize_alpha(ctx, order, alpha, options.alpha_iters);
    return build_lattice(ctx, alpha, order);
}

namespace {

Construction construct_irreducible(const IntPolynomial& p, const ConstructOptions& options) {
    Construction out;
    out.lattice = prepare_lattice(p, options);
    const LatticeContext& lat = out.lattice;
    if (lat.dim() < 2) throw Error(ErrorKind::InvalidArgument, "construction needs degree >= 2");

    if (options.mode == ConeMode::PaperExact) {
        out.cone = build_cone(lat, build_cone_spec(lat, ConeMode::PaperExact));
    } else {
        AdaptiveCone ac = adaptive_search(lat, options.shrink_floor, options.bisection_steps);
        out.cone = std::move(ac.cone);
        out.trials = std::move(ac.trials);
    }

    GeneratorSet all = enumerate_generators(out.cone.generators, options.budget);
    out.enumerated = all.gens.size();
    out.scanned = all.candidates_scanned;
    out.generators = prune_generators(all, [&lat](const IntVec& v) { return lat.embed_scaled(v)[0]; });
    out.full_matrix = assemble_matrix(lat.order().action, out.generators);

    out.component = choose_lambda_component(out.full_matrix);
    out.matrix = principal_submatrix(out.full_matrix, out.component);
    for (std::size_t i : out.component) out.component_generators.push_back(out.generators.gens[i]);

    const FieldContext& ctx = lat.field();
    out.certificate = out.matrix.rows() <= sturm_certificate_limit
                          ? certify_spectral_radius(ctx, out.matrix)
                          : certify_by_eigenvector(ctx, lat.order(), out.matrix, out.component_generators);
    if (!out.certificate.matches_lambda)
        throw Error(ErrorKind::CertificationFailed, "constructed matrix does not have spectral radius lambda");
    out.periodicity = period_and_primitivity(out.matrix);
    return out;
}

}  // namespace

Construction construct(const IntPolynomial& p, const ConstructOptions& options) {
    Construction out = construct_irreducible(p, options);
    if (!options.primitive || out.periodicity.primitive) return out;

    ConstructOptions shifted = options;
    shifted.primitive = false;
    shifted.basis_text.reset();
    shifted.assume_irreducible = true;
    out.matrix = primitive_upgrade(out.field(), [&](const IntPolynomial& q) {
        return construct_irreducible(q, shifted).matrix;
    });
    out.upgraded = true;
    out.component.clear();
    out.component_generators.clear();
    out.certificate = certify_spectral_radius(out.field(), out.matrix);
    out.periodicity = period_and_primitivity(out.matrix);
    return out;
}

}  // namespace perron
