#pragma once

#include <cstddef>
#include <vector>

#include "perron/interval.hpp"
#include "perron/intpoly.hpp"
#include "perron/matrix.hpp"

namespace perron {

struct RootOptions {
    unsigned start_bits = 128;
    unsigned max_bits = 4096;
};

// One archimedean place, given by the image of lambda.
struct Place {
    CertifiedRoot root;
    bool real = true;
    // Certified enclosure of |sigma_j(lambda)|.
    Interval abs;
};

// The field Q(lambda) with its places ordered: lambda itself, remaining real
// places, then one representative (positive imaginary part) per complex pair.
// Within each block places are sorted by descending modulus, ties by angle.
class FieldContext {
public:
    const IntPolynomial& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    int real_places() const { return r_; }
    int complex_places() const { return s_; }
    int place_count() const { return r_ + s_; }
    const std::vector<Place>& places() const { return places_; }
    const Place& place(std::size_t j) const { return places_[j]; }

    // Isolating interval of lambda, valid for Sturm-based refinement.
    const IsolatingInterval& lambda() const { return lambda_; }
    // Spectral ratio enclosure; [0, 0] in degree 1.
    const Interval& rho() const { return rho_; }
    const IntMatrix& companion() const { return companion_; }
    const mpz_class& discriminant() const { return disc_; }
    unsigned precision_bits() const { return bits_; }

    // Start index of place j in place-space coordinates.
    std::size_t offset(std::size_t j) const { return offsets_[j]; }

    // True when every other conjugate is certified inside the unit circle.
    bool is_pisot() const;

    // Tightens lambda's isolating interval below the given width.
    IsolatingInterval lambda_within(const mpq_class& width) const;

    friend FieldContext build_field_context(const IntPolynomial& p, const RootOptions& options);

private:
    IntPolynomial poly_;
    int r_ = 0;
    int s_ = 0;
    std::vector<Place> places_;
    std::vector<std::size_t> offsets_;
    IsolatingInterval lambda_;
    Interval rho_;
    IntMatrix companion_;
    mpz_class disc_;
    unsigned bits_ = 0;
};

// Places, Perron certificate and spectral ratio of the largest real root.
// Throws NotPerron on a certified violation and Indeterminate when the
// moduli cannot be separated at max_bits.
FieldContext build_field_context(const IntPolynomial& p, const RootOptions& options = {});

// Matrix of multiplication by lambda on the power basis.
IntMatrix companion_matrix(const IntPolynomial& p);

// Coordinates in R^r x C^s laid out as (sigma_1 | real places | re, im pairs).
struct PlaceVector {
    std::vector<long double> coords;
};

// Image of sum_m v_m lambda^m under all places.
PlaceVector embed(const FieldContext& ctx, const RatVec& power_coords);
PlaceVector embed(const FieldContext& ctx, const IntVec& power_coords);

// Exact companion action B v.
IntVec apply_mult(const FieldContext& ctx, const IntVec& v);

struct ProjectionNorms {
    // |pi_j(v)|_alpha^2 per place.
    std::vector<long double> squared;
    long double total_squared = 0;
};

ProjectionNorms projection_norms(const FieldContext& ctx, const std::vector<long double>& alpha,
                                 const PlaceVector& v);

// Sign of sum_m coeffs_m lambda^m, decided exactly.
int sign_at_lambda(const FieldContext& ctx, const IntVec& coeffs);
int sign_at_lambda(const FieldContext& ctx, const RatVec& coeffs);

// Certified enclosure of lambda.
Interval lambda_interval(const FieldContext& ctx);

}  // namespace perron
