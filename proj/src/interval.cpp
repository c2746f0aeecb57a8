#include "perron/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "perron/errors.hpp"

namespace perron {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    mpq_class p1 = a.lo * b.lo;
    mpq_class p2 = a.lo * b.hi;
    mpq_class p3 = a.hi * b.lo;
    mpq_class p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(0)) throw Error(ErrorKind::InvalidArgument, "interval division by an interval containing 0");
    Interval inv{1 / b.hi, 1 / b.lo};
    return a * inv;
}

mpq_class round_down(const mpq_class& q, unsigned bits) {
    // floor(q * 2^k) / 2^k with k chosen for the requested relative accuracy.
    if (q == 0) return 0;
    long mag = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    long k = static_cast<long>(bits) - mag;
    mpq_class scaled = q;
    if (k >= 0) {
        mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
    } else {
        mpq_div_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
    }
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    mpq_class out(f);
    if (k >= 0) {
        mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
    } else {
        mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
    }
    return out;
}

mpq_class round_up(const mpq_class& q, unsigned bits) { return -round_down(-q, bits); }

Interval simplify(const Interval& iv, unsigned bits) { return {round_down(iv.lo, bits), round_up(iv.hi, bits)}; }

Interval sqrt_enclosure(const mpq_class& q, unsigned bits) {
    if (q < 0) throw Error(ErrorKind::InvalidArgument, "sqrt of a negative number");
    if (q == 0) return Interval::point(0);
    PrecisionScope scope(bits + 16);
    BigFloat s = boost::multiprecision::sqrt(to_big(q));
    mpq_class approx = to_rational(s);
    mpq_class slack = approx;
    mpq_div_2exp(slack.get_mpq_t(), slack.get_mpq_t(), bits);
    Interval out{approx - slack, approx + slack};
    if (out.lo < 0) out.lo = 0;
    // Widen until the enclosure is certified exactly.
    while (out.lo * out.lo > q) out.lo -= slack, slack *= 2;
    while (out.hi * out.hi < q) out.hi += slack, slack *= 2;
    return out;
}

Interval enclose(const BigFloat& center, const BigFloat& err) {
    mpq_class c = to_rational(center);
    mpq_class e = abs(to_rational(err));
    return {c - e, c + e};
}

std::string to_string(const Interval& iv, int digits) {
    PrecisionScope scope(static_cast<unsigned>(digits * 4 + 16));
    std::ostringstream os;
    os << "[" << to_decimal(to_big(iv.lo), digits) << ", " << to_decimal(to_big(iv.hi), digits) << "]";
    return os.str();
}

}  // namespace perron
