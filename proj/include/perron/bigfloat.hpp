#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace perron {

// Variable-precision MPFR float. New values take the precision of the
// innermost live PrecisionScope.
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

unsigned bits_to_digits10(unsigned bits);

class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_digits_;
};

BigFloat to_big(const mpz_class& z);
BigFloat to_big(const mpq_class& q);
// Exact rational value of a finite float.
mpq_class to_rational(const BigFloat& x);
long double to_long_double(const BigFloat& x);
std::string to_decimal(const BigFloat& x, int digits);

struct BigComplex {
    BigFloat re;
    BigFloat im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(BigFloat r) : re(std::move(r)), im(0) {}

    BigComplex conj() const { return {re, -im}; }
    BigFloat norm_sq() const { return re * re + im * im; }
    BigFloat abs() const;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigFloat& s);

}  // namespace perron
