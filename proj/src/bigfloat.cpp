#include "perron/bigfloat.hpp"

#include <cmath>

#include <mpfr.h>

namespace perron {

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits_(BigFloat::default_precision()) {
    BigFloat::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { BigFloat::default_precision(saved_digits_); }

BigFloat to_big(const mpz_class& z) {
    BigFloat out;
    // Wide enough to hold z exactly.
    mpfr_prec_t need = static_cast<mpfr_prec_t>(mpz_sizeinbase(z.get_mpz_t(), 2)) + 2;
    if (need > mpfr_get_prec(out.backend().data())) {
        mpfr_set_prec(out.backend().data(), need);
    }
    mpfr_set_z(out.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return out;
}

BigFloat to_big(const mpq_class& q) {
    BigFloat out;
    mpfr_set_q(out.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return out;
}

mpq_class to_rational(const BigFloat& x) {
    mpq_class out;
    mpfr_get_q(out.get_mpq_t(), x.backend().data());
    return out;
}

long double to_long_double(const BigFloat& x) { return mpfr_get_ld(x.backend().data(), MPFR_RNDN); }

std::string to_decimal(const BigFloat& x, int digits) { return x.str(digits, std::ios_base::scientific); }

BigFloat BigComplex::abs() const { return boost::multiprecision::sqrt(norm_sq()); }

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }

BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat den = b.norm_sq();
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }

}  // namespace perron
