#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "perron/lattice.hpp"

namespace perron {

// Positive real stored as mantissa * 2^exponent with mantissa in [0.5, 1).
struct HugeReal {
    double mantissa = 0;
    long exponent = 0;

    static HugeReal from(const BigFloat& x);
    double log2() const;
    double log10() const;
    // Scientific notation with the given number of significant digits.
    std::string decimal(int digits = 6) const;

    bool at_least(const mpz_class& n) const;
    friend bool operator<(const HugeReal& a, const HugeReal& b) { return a.log2() < b.log2(); }
    friend bool operator<=(const HugeReal& a, const HugeReal& b) { return a.log2() <= b.log2(); }
};

// (8d / (1 - rho))^(d^2) * tau^(d/2)
HugeReal bound_from_tau(int d, const mpq_class& rho_upper, long double tau);
// (8d / (1 - rho))^(d^2) * sqrt(disc)
HugeReal bound_from_disc(int d, const mpq_class& rho_upper, const mpz_class& disc_abs);
// 2^(d^2) * bound
HugeReal primitive_bound_from(int d, const HugeReal& bound);

// p / (p - 1) for the plastic constant p.
double plastic_gap_limit();

struct PisotNote {
    bool pisot = false;
    // 1 / (1 - rho) with rho's upper endpoint.
    double inverse_gap = 0;
    double limit = 0;
    bool holds = false;
};

struct BoundReport {
    int d = 0;
    Interval rho;
    long double tau_used = 0;
    AlphaWeights alpha_used;
    mpz_class disc_abs;
    std::string lattice_label;
    // The theorem needs d >= 3; for d <= 2 the exact value is d.
    bool theorem_applies = false;
    std::optional<int> exact_dpf;
    HugeReal bound_tau;
    HugeReal bound_disc;
    HugeReal primitive_bound;
    long double banaszczyk = 0;
    bool tau_within_banaszczyk = false;
    PisotNote pisot;
    std::string kappa_status = "not computed";
};

BoundReport theorem_bounds(const LatticeContext& lat);

std::string render(const BoundReport& report);

}  // namespace perron
