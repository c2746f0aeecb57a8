#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perron/lattice.hpp"

namespace perron {

enum class ConeMode { PaperExact, Adaptive };

const char* to_string(ConeMode mode);

struct ConeSpec {
    ConeMode mode = ConeMode::PaperExact;
    // Radius scale factor; 1 in paper_exact mode.
    long double shrink = 1;
    long double ell = 0;
    // Per place; entry 0 (lambda's place) is unused.
    std::vector<long double> radii;
    // Polygon order per complex place, 0 for real places.
    std::vector<int> orders;
    long double height = 0;
    std::uint64_t vertex_count = 0;
};

ConeSpec build_cone_spec(const LatticeContext& lat, ConeMode mode, long double shrink = 1);

// Vertices of height * v + P, in place coordinates, where v is the
// alpha-unit vector of the first place.
std::vector<PlaceVector> polytope_vertices(const LatticeContext& lat, const ConeSpec& spec);

struct RoundedVertices {
    // Distinct lattice points, in order of first appearance.
    std::vector<IntVec> generators;
    // Index into generators for each vertex.
    std::vector<std::size_t> source;
    // |embed(z_i) - v_i|_alpha per vertex.
    std::vector<long double> distances;
};

// Closest lattice points, deduplicated; throws PositivityFailed unless every
// point has positive first coordinate.
RoundedVertices round_to_lattice(const LatticeContext& lat, const std::vector<PlaceVector>& vertices);

struct InvarianceCheck {
    bool invariant = false;
    std::optional<std::size_t> failing;
    // witnesses[i]: beta >= 0 with sum_m beta_m z_m = action z_i.
    std::vector<RatVec> witnesses;
};

InvarianceCheck verify_invariance(const IntMatrix& action, const std::vector<IntVec>& generators);

// Exact re-substitution of invariance witnesses.
bool witnesses_hold(const IntMatrix& action, const std::vector<IntVec>& generators, const std::vector<RatVec>& witnesses);

struct ConeData {
    ConeSpec spec;
    std::vector<PlaceVector> vertices;
    std::vector<IntVec> generators;
    std::vector<std::size_t> source;
    std::vector<long double> distances;
    std::vector<RatVec> witnesses;
};

// Builds and certifies the cone for one spec. Throws PositivityFailed or
// CertificationFailed (not invariant).
ConeData build_cone(const LatticeContext& lat, const ConeSpec& spec);

struct ShrinkTrial {
    long double shrink = 0;
    bool accepted = false;
    std::string outcome;
};

struct AdaptiveCone {
    ConeData cone;
    std::vector<ShrinkTrial> trials;
};

// Bisection in log(t) over [t_min, 1] for the smallest certified shrink.
AdaptiveCone adaptive_search(const LatticeContext& lat, long double t_min, int steps);

}  // namespace perron
