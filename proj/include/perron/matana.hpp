#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "perron/interval.hpp"
#include "perron/intpoly.hpp"
#include "perron/lattice.hpp"
#include "perron/matrix.hpp"
#include "perron/numfield.hpp"

namespace perron {

using NonNegIntMatrix = IntMatrix;

struct SccResult {
    // Components with ascending vertex lists, in topological order of the
    // condensation (sources first, ties by smallest vertex).
    std::vector<std::vector<std::size_t>> components;
    // Component index per vertex.
    std::vector<std::size_t> component_of;
};

// Edge i -> j whenever a_ij > 0.
SccResult strongly_connected_components(const NonNegIntMatrix& a);

bool is_irreducible(const NonNegIntMatrix& a);

NonNegIntMatrix principal_submatrix(const NonNegIntMatrix& a, const std::vector<std::size_t>& indices);

// Components with no incoming edge from outside. Only these satisfy
// B P_J = P_J A_J for the generator columns P_J.
std::vector<std::vector<std::size_t>> closed_components(const NonNegIntMatrix& a);

// det(xI - A). Division-free for small n, multi-modular otherwise.
IntPolynomial charpoly_exact(const NonNegIntMatrix& a);
IntPolynomial charpoly_berkowitz(const IntMatrix& a);
IntPolynomial charpoly_multimodular(const IntMatrix& a);

struct SpectralCertificate {
    IntPolynomial charpoly;
    IntPolynomial quotient;
    // Exact isolating interval of the spectral radius.
    Interval radius_interval;
    bool matches_lambda = false;
    std::string method;
};

// Exact divisibility by the minimal polynomial, then a Sturm argument that
// lambda is the largest real root of the characteristic polynomial (which is
// the spectral radius of a non-negative matrix). Throws DivisionInexact.
SpectralCertificate certify_spectral_radius(const FieldContext& ctx, const NonNegIntMatrix& a);

// Certificate from a positive left eigenvector: gens[j] are lattice vectors
// with action * gens[j] = sum_i a_ij gens[i] and positive first coordinate,
// so (pi_1(gens[j]))_j is a positive left eigenvector for lambda.
SpectralCertificate certify_by_eigenvector(const FieldContext& ctx, const LatticeBasis& order, const NonNegIntMatrix& a,
                                           const std::vector<IntVec>& gens);

// Principal submatrix on a closed component, smallest first, then
// lexicographically smallest vertex list.
std::vector<std::size_t> choose_lambda_component(const NonNegIntMatrix& a);

struct Periodicity {
    std::size_t period = 0;
    bool primitive = false;
};

// Requires an irreducible matrix.
Periodicity period_and_primitivity(const NonNegIntMatrix& a);

// Primitive iff some power up to the Wielandt bound is positive.
bool primitive_by_powering(const NonNegIntMatrix& a);

// Block-cyclic n-th root: dimension n * dim(A), charpoly(A)(x^n).
NonNegIntMatrix nth_root_matrix(const NonNegIntMatrix& a, int n);

// Lambda >= 1 + 4/(1 - rho), decided with certified enclosures.
bool meets_primitive_threshold(const FieldContext& ctx);

// I + A where A is an irreducible matrix for lambda - 1 produced by
// `construct` from the minimal polynomial p(x + 1). Throws ThresholdNotMet.
NonNegIntMatrix primitive_upgrade(const FieldContext& ctx,
                                  const std::function<NonNegIntMatrix(const IntPolynomial&)>& construct);

struct EdgeShiftGraph {
    struct Edge {
        std::size_t from;
        std::size_t to;
        mpz_class multiplicity;
    };
    std::size_t vertices = 0;
    std::vector<Edge> edges;

    mpz_class edge_count() const;
    NonNegIntMatrix to_matrix() const;
};

// Throws DegenerateMatrix on a zero row or column.
EdgeShiftGraph to_edge_shift(const NonNegIntMatrix& a);

enum class DotStyle { Labels, Parallel };

std::string to_dot(const EdgeShiftGraph& g, DotStyle style = DotStyle::Labels);

}  // namespace perron
