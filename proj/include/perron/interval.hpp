#pragma once

#include <string>

#include <gmpxx.h>

#include "perron/bigfloat.hpp"

namespace perron {

// Closed interval with exact rational endpoints.
struct Interval {
    mpq_class lo;
    mpq_class hi;

    Interval() = default;
    Interval(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {}
    static Interval point(const mpq_class& x) { return {x, x}; }

    mpq_class width() const { return hi - lo; }
    mpq_class mid() const { return (lo + hi) / 2; }
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
    bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

    double lo_double() const { return lo.get_d(); }
    double hi_double() const { return hi.get_d(); }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Requires 0 outside b.
Interval operator/(const Interval& a, const Interval& b);

// Rational enclosure [lo, hi] of sqrt(q) for q >= 0, with relative width
// about 2^-bits.
Interval sqrt_enclosure(const mpq_class& q, unsigned bits = 128);

// Nearby rational with a short denominator, rounded down or up.
mpq_class round_down(const mpq_class& q, unsigned bits);
mpq_class round_up(const mpq_class& q, unsigned bits);

// Outward-rounded rational interval with short endpoints.
Interval simplify(const Interval& iv, unsigned bits = 96);

// Enclosure of a float value known to within err.
Interval enclose(const BigFloat& center, const BigFloat& err);

std::string to_string(const Interval& iv, int digits = 17);

}  // namespace perron
