#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "perron/matrix.hpp"
#include "perron/numfield.hpp"

namespace perron {

// Positive weights, one per place, defining the inner product q_alpha.
class AlphaWeights {
public:
    AlphaWeights() = default;
    explicit AlphaWeights(std::vector<long double> weights);
    static AlphaWeights ones(std::size_t places) { return AlphaWeights(std::vector<long double>(places, 1.0L)); }

    std::size_t size() const { return w_.size(); }
    long double operator[](std::size_t j) const { return w_[j]; }
    const std::vector<long double>& values() const { return w_; }

private:
    std::vector<long double> w_;
};

// A lambda-stable full-rank lattice in Q(lambda). Coordinates of lattice
// vectors are taken with respect to the columns of `basis`.
struct LatticeBasis {
    // Columns are basis elements in power-basis coordinates.
    RatMatrix basis;
    // Multiplication by lambda in lattice coordinates.
    IntMatrix action;
    mpz_class disc_abs;
    std::string label;
};

LatticeBasis power_basis(const FieldContext& ctx);

// Parses d lines of d rationals ("a" or "a/b"), one basis element per line,
// and checks integrality, full rank and lambda-stability.
LatticeBasis parse_integral_basis(const FieldContext& ctx, std::string_view text);

// Power-basis coordinates of a lattice vector.
RatVec to_power_coords(const LatticeBasis& lb, const IntVec& v);

struct ClosestVector {
    IntVec coords;
    // Euclidean distance from the target.
    long double distance = 0;
};

// Full-rank lattice in R^d spanned by the columns of a real matrix, kept
// together with an LLL-reduced basis and its Gram-Schmidt data.
class RealLattice {
public:
    RealLattice() = default;
    explicit RealLattice(RealMatrix basis);

    std::size_t dim() const { return basis_.cols(); }
    const RealMatrix& basis() const { return basis_; }
    // reduced = basis * transform, transform unimodular.
    const RealMatrix& reduced() const { return reduced_; }
    const IntMatrix& transform() const { return transform_; }
    const std::vector<long double>& gso_norms() const { return norms_; }
    // Squared covolume.
    long double det() const { return det_; }
    long double ell_hat() const { return ell_hat_; }

    std::vector<long double> point(const IntVec& coords) const;
    // Coordinates (in the original basis) of a closest lattice point.
    ClosestVector closest(const std::vector<long double>& target) const;

private:
    RealMatrix basis_;
    RealMatrix reduced_;
    RealMatrix bstar_;
    RealMatrix mu_;
    IntMatrix transform_;
    std::vector<long double> norms_;
    long double det_ = 0;
    long double ell_hat_ = 0;
};

class LatticeContext {
public:
    const FieldContext& field() const { return field_; }
    const AlphaWeights& alpha() const { return alpha_; }
    const LatticeBasis& order() const { return order_; }
    int dim() const { return field_.degree(); }
    const RealLattice& real() const { return real_; }

    // Columns: alpha-scaled embeddings of the lattice basis.
    const RealMatrix& basis_embedded() const { return real_.basis(); }
    const RealMatrix& reduced_basis() const { return real_.reduced(); }
    const IntMatrix& transform() const { return real_.transform(); }

    long double det_qalpha() const { return real_.det(); }
    long double ell_hat() const { return real_.ell_hat(); }

    // Scaled coordinates: the standard dot product of these realizes q_alpha.
    std::vector<long double> scale(const PlaceVector& v) const;
    std::vector<long double> embed_scaled(const IntVec& lattice_coords) const { return real_.point(lattice_coords); }

    friend LatticeContext build_lattice(const FieldContext& ctx, const AlphaWeights& alpha, const LatticeBasis& order);

private:
    FieldContext field_;
    AlphaWeights alpha_;
    LatticeBasis order_;
    RealLattice real_;
};

LatticeContext build_lattice(const FieldContext& ctx, const AlphaWeights& alpha, const LatticeBasis& order);
LatticeContext build_lattice(const FieldContext& ctx, const AlphaWeights& alpha);

// One half of the Gram-Schmidt diagonal length of the reduced basis.
long double covering_radius_upper(const LatticeContext& lat);

// Nearest-plane rounding refined by bounded enumeration.
ClosestVector closest_vector(const LatticeContext& lat, const PlaceVector& target);

struct ThicknessReport {
    long double tau = 0;
    AlphaWeights alpha_used;
    long double banaszczyk_bound = 0;
    bool within_bound = false;
};

ThicknessReport thickness(const LatticeContext& lat);

// Coordinate descent on log-weights; never returns a worse tau than start.
AlphaWeights optimize_alpha(const FieldContext& ctx, const LatticeBasis& order, const AlphaWeights& start, int iters);

struct LatticePointCount {
    std::uint64_t count = 0;
    // Vol(P) / Covol in lattice coordinates.
    mpq_class volume;
    mpq_class bound;
    bool bound_holds = false;
};

// Lattice points in conv(vertices), vertices given in lattice coordinates.
// Throws DimensionTooLarge when the bounding box exceeds box_budget or the
// dimension exceeds 3.
LatticePointCount count_lattice_points(const std::vector<IntVec>& vertices, std::uint64_t box_budget = 100000000);

// Facets {x : normal . x <= offset} of the hull of integer points.
struct Halfspace {
    IntVec normal;
    mpz_class offset;
};
std::vector<Halfspace> hull_facets(const std::vector<IntVec>& points);

}  // namespace perron
