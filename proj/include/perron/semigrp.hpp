#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "perron/conebuild.hpp"
#include "perron/matrix.hpp"

namespace perron {

// Closed polyhedral cone spanned by integer rays, with an exact facet
// description {x : n . x >= 0 for every facet normal n}.
class PolyhedralCone {
public:
    PolyhedralCone() = default;
    explicit PolyhedralCone(std::vector<IntVec> rays);

    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<IntVec>& facet_normals() const { return normals_; }
    std::size_t dim() const { return dim_; }
    bool contains(const IntVec& x) const;

private:
    std::vector<IntVec> rays_;
    std::vector<IntVec> normals_;
    std::size_t dim_ = 0;
};

// Zonotope sum_i [0, z_i] with exact facet slabs lo <= n . x <= hi.
class Zonotope {
public:
    struct Slab {
        IntVec normal;
        mpz_class lo;
        mpz_class hi;
    };

    explicit Zonotope(std::vector<IntVec> generators);

    const std::vector<Slab>& slabs() const { return slabs_; }
    // Bounding box per coordinate.
    const IntVec& box_lo() const { return box_lo_; }
    const IntVec& box_hi() const { return box_hi_; }
    bool contains(const IntVec& x) const;

private:
    std::vector<IntVec> generators_;
    std::vector<Slab> slabs_;
    IntVec box_lo_;
    IntVec box_hi_;
};

struct GeneratorSet {
    std::vector<IntVec> gens;
    // The cone the semigroup lives in.
    PolyhedralCone cone;
    bool pruned = false;
    // alpha witnesses with 0 <= alpha <= 1, gen = sum alpha_i ray_i; filled for
    // pruned sets.
    std::vector<RatVec> membership;
    std::uint64_t candidates_scanned = 0;
};

// Every nonzero lattice point of the zonotope spanned by the rays.
// Throws BudgetExceeded once more than `budget` box points would be scanned.
GeneratorSet enumerate_generators(const std::vector<IntVec>& cone_rays, std::uint64_t budget);

// Ordering key: the first place coordinate of a lattice vector.
using Height = std::function<long double(const IntVec&)>;

// Keeps exactly the irreducible elements (the Hilbert basis of cone and
// lattice), sorted by decreasing height.
GeneratorSet prune_generators(const GeneratorSet& gset, const Height& height);

// Non-negative integer multiplicities over gset.gens summing to target.
// Throws NotInSemigroup when target is outside the cone.
std::vector<mpz_class> decompose(const GeneratorSet& gset, const IntVec& target);

using NonNegIntMatrix = IntMatrix;

// Column j holds decompose(action * gens[j]); the identity
// action * c_j = sum_i a_ij c_i is re-verified exactly.
NonNegIntMatrix assemble_matrix(const IntMatrix& action, const GeneratorSet& gset);

}  // namespace perron
