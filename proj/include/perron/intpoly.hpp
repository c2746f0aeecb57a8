#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "perron/bigfloat.hpp"

namespace perron {

// Integer polynomial, coefficients lowest degree first, no stored leading zeros.
// The zero polynomial has an empty coefficient list and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    // Parses "c0,c1,...,cd" (constant term first). Whitespace is ignored.
    static IntPolynomial parse(std::string_view text);
    // x^n
    static IntPolynomial monomial(int n);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    // Coefficient of x^i; zero outside the stored range.
    mpz_class coeff(int i) const;
    const mpz_class& leading() const { return coeffs_.back(); }

    IntPolynomial derivative() const;
    // p(x + a)
    IntPolynomial taylor_shift(const mpz_class& a) const;
    // p(-x)
    IntPolynomial reflect() const;
    // p(x^n)
    IntPolynomial substitute_power(int n) const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;

    std::string to_string() const;
    // Same format that parse() accepts.
    std::string to_csv() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const mpz_class& s, const IntPolynomial& a);

// Division by a monic polynomial; the quotient and remainder are integral.
struct MonicDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};
MonicDivision divide_monic(const IntPolynomial& a, const IntPolynomial& monic_divisor);

// Quotient a / b when b divides a exactly over Z, nullopt otherwise.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

mpz_class content(const IntPolynomial& p);
// p / content(p) with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);
// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
// Primitive gcd over Q[x] with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial squarefree_part(const IntPolynomial& p);

int sign_at(const IntPolynomial& p, const mpq_class& x);

BigComplex eval(const IntPolynomial& p, const BigComplex& x);

struct SanityReport {
    bool ok = false;
    bool squarefree = false;
    std::optional<mpz_class> rational_root;
    std::string diagnostic;
};

// True iff gcd(p, p') is constant and p has no rational root.
SanityReport squarefree_and_no_rational_root(const IntPolynomial& p);

struct CertifiedRoot {
    BigComplex center;
    BigFloat radius;
    bool is_real = false;

    // Enclosure of |root|.
    BigFloat abs_lower() const;
    BigFloat abs_upper() const;
};

// Isolating discs for every root of a squarefree polynomial at the given
// working precision. Real roots come first (descending), then complex roots
// ordered by real part, then imaginary part.
// Throws PrecisionExhausted when the discs cannot be separated.
std::vector<CertifiedRoot> certified_roots(const IntPolynomial& p, unsigned precision_bits);

// Retries certified_roots with doubled precision up to max_bits.
std::vector<CertifiedRoot> certified_roots_adaptive(const IntPolynomial& p, unsigned start_bits,
                                                    unsigned max_bits, unsigned* used_bits = nullptr);

mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b);
// (-1)^(d(d-1)/2) Res(p, p') / lc(p)
mpz_class discriminant(const IntPolynomial& p);

// Sturm chain of a squarefree polynomial, normalized to primitive integer
// polynomials (positive rescaling keeps the sign pattern).
class SturmSequence {
public:
    explicit SturmSequence(const IntPolynomial& squarefree);

    // Distinct real roots in (a, b].
    int count(const mpq_class& a, const mpq_class& b) const;
    // Distinct real roots in (a, +inf).
    int count_above(const mpq_class& a) const;
    int count_real() const;

private:
    int variations_at(const mpq_class& x) const;
    int variations_at_infinity(bool positive) const;
    std::vector<IntPolynomial> chain_;
};

// Closed rational interval [lo, hi] containing exactly one root of a
// squarefree polynomial, with sign changes at the endpoints.
struct IsolatingInterval {
    mpq_class lo;
    mpq_class hi;
};

// Halves the interval, keeping the root inside.
void bisect(const IntPolynomial& p, IsolatingInterval& iv);

// Sign of g at the root isolated by iv (g must not vanish there).
int sign_at_root(const IntPolynomial& p, IsolatingInterval iv, const IntPolynomial& g);

}  // namespace perron
