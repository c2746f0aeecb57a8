#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perron/conebuild.hpp"
#include "perron/matana.hpp"
#include "perron/semigrp.hpp"

namespace perron {

// Degree <= 3: squarefree with no rational root, which is irreducibility.
// Higher degree needs `assume` since no factorization is attempted.
// Throws NotIrreducible.
void require_irreducible(const IntPolynomial& p, bool assume);

struct ConstructOptions {
    ConeMode mode = ConeMode::Adaptive;
    long double shrink_floor = 1e-3L;
    int bisection_steps = 12;
    // Zonotope box points scanned before BudgetExceeded.
    std::uint64_t budget = 100000000;
    // 0 keeps alpha = 1; otherwise coordinate-descent iterations.
    int alpha_iters = 0;
    std::optional<std::string> basis_text;
    RootOptions roots;
    bool primitive = false;
    bool assume_irreducible = false;
};

// Largest matrix certified through the Sturm chain of its characteristic
// polynomial; bigger ones use the positive left eigenvector.
constexpr std::size_t sturm_certificate_limit = 64;

struct Construction {
    LatticeContext lattice;
    ConeData cone;
    std::vector<ShrinkTrial> trials;
    std::uint64_t enumerated = 0;
    std::uint64_t scanned = 0;
    GeneratorSet generators;
    NonNegIntMatrix full_matrix;
    std::vector<std::size_t> component;
    // Generators indexing the rows of `matrix`.
    std::vector<IntVec> component_generators;
    NonNegIntMatrix matrix;
    SpectralCertificate certificate;
    Periodicity periodicity;
    // Set when the primitive upgrade replaced `matrix` by I + A for lambda - 1.
    bool upgraded = false;

    const FieldContext& field() const { return lattice.field(); }
};

LatticeContext prepare_lattice(const IntPolynomial& p, const ConstructOptions& options);

// Field, lattice, cone, semigroup, matrix, closed component, certificate.
// Throws CertificationFailed when the final certificate does not match.
Construction construct(const IntPolynomial& p, const ConstructOptions& options);

}  // namespace perron
