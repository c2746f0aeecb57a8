#include "perron/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <mpfr.h>

#include "perron/errors.hpp"

namespace perron {

namespace {

constexpr unsigned working_bits = 128;

BigFloat base_factor(int d, const mpq_class& rho_upper) {
    if (rho_upper >= 1) throw Error(ErrorKind::InvalidArgument, "spectral ratio bound is not below 1");
    BigFloat gap = to_big(mpq_class(1 - rho_upper));
    BigFloat base = BigFloat(8 * d) / gap;
    return boost::multiprecision::pow(base, BigFloat(d * d));
}

}  // namespace

HugeReal HugeReal::from(const BigFloat& x) {
    if (!(x > 0)) throw Error(ErrorKind::InvalidArgument, "huge real must be positive");
    HugeReal out;
    long e = 0;
    out.mantissa = mpfr_get_d_2exp(&e, x.backend().data(), MPFR_RNDN);
    out.exponent = e;
    return out;
}

double HugeReal::log2() const { return std::log2(mantissa) + static_cast<double>(exponent); }

double HugeReal::log10() const { return log2() * std::log10(2.0); }

std::string HugeReal::decimal(int digits) const {
    const double l = log10();
    const double whole = std::floor(l);
    double lead = std::pow(10.0, l - whole);
    long exp10 = static_cast<long>(whole);
    if (lead >= 10) {
        lead /= 10;
        ++exp10;
    }
    std::ostringstream os;
    os << std::setprecision(digits) << std::fixed << lead << "e" << (exp10 >= 0 ? "+" : "") << exp10;
    return os.str();
}

bool HugeReal::at_least(const mpz_class& n) const {
    if (n <= 0) return true;
    PrecisionScope scope(working_bits);
    BigFloat self = BigFloat(mantissa);
    mpfr_mul_2si(self.backend().data(), self.backend().data(), exponent, MPFR_RNDN);
    return self >= to_big(n);
}

HugeReal bound_from_tau(int d, const mpq_class& rho_upper, long double tau) {
    PrecisionScope scope(working_bits);
    BigFloat t = BigFloat(static_cast<double>(tau));
    return HugeReal::from(base_factor(d, rho_upper) * boost::multiprecision::pow(t, BigFloat(d) / 2));
}

HugeReal bound_from_disc(int d, const mpq_class& rho_upper, const mpz_class& disc_abs) {
    PrecisionScope scope(working_bits);
    return HugeReal::from(base_factor(d, rho_upper) * boost::multiprecision::sqrt(to_big(disc_abs)));
}

HugeReal primitive_bound_from(int d, const HugeReal& bound) {
    HugeReal out = bound;
    out.exponent += static_cast<long>(d) * d;
    return out;
}

double plastic_gap_limit() {
    double p = 1.3;
    for (int i = 0; i < 60; ++i) p -= (p * p * p - p - 1) / (3 * p * p - 1);
    return p / (p - 1);
}

BoundReport theorem_bounds(const LatticeContext& lat) {
    const FieldContext& ctx = lat.field();
    BoundReport rep;
    rep.d = ctx.degree();
    rep.rho = ctx.rho();
    rep.disc_abs = lat.order().disc_abs;
    rep.lattice_label = lat.order().label;
    rep.theorem_applies = rep.d >= 3;
    if (rep.d <= 2) rep.exact_dpf = rep.d;
    if (rep.d < 2) return rep;

    ThicknessReport thick = thickness(lat);
    rep.tau_used = thick.tau;
    rep.alpha_used = thick.alpha_used;
    rep.banaszczyk = thick.banaszczyk_bound;
    rep.tau_within_banaszczyk = thick.within_bound;
    rep.bound_tau = bound_from_tau(rep.d, rep.rho.hi, rep.tau_used);
    rep.bound_disc = bound_from_disc(rep.d, rep.rho.hi, rep.disc_abs);
    rep.primitive_bound = primitive_bound_from(rep.d, rep.bound_disc);

    rep.pisot.pisot = ctx.is_pisot();
    rep.pisot.inverse_gap = 1.0 / (1.0 - rep.rho.hi.get_d());
    rep.pisot.limit = plastic_gap_limit();
    rep.pisot.holds = rep.pisot.inverse_gap < rep.pisot.limit;
    return rep;
}

std::string render(const BoundReport& r) {
    std::ostringstream os;
    os << "degree                 " << r.d << "\n";
    os << "spectral ratio         " << to_string(r.rho, 12) << "\n";
    os << "lattice                " << r.lattice_label << " (|disc| = " << r.disc_abs.get_str() << ")\n";
    if (r.exact_dpf) os << "d_PF                   " << *r.exact_dpf << " (exact for degree <= 2)\n";
    if (r.d < 2) return os.str();
    if (!r.theorem_applies) os << "theorem bounds         evaluated for reference only (degree < 3)\n";
    os << "tau at alpha used      " << std::setprecision(10) << static_cast<double>(r.tau_used) << "\n";
    os << "banaszczyk line        tau <= (d/4) disc^(1/d) = " << static_cast<double>(r.banaszczyk)
       << (r.tau_within_banaszczyk ? "  holds" : "  VIOLATED") << "\n";
    os << "irreducible bound/tau  " << r.bound_tau.decimal() << "  (log10 " << r.bound_tau.log10() << ")\n";
    os << "irreducible bound/disc " << r.bound_disc.decimal() << "  (log10 " << r.bound_disc.log10() << ")\n";
    os << "primitive bound        " << r.primitive_bound.decimal() << "  (log10 " << r.primitive_bound.log10()
       << "), kappa " << r.kappa_status << "\n";
    if (r.pisot.pisot)
        os << "pisot note             1/(1-rho) = " << r.pisot.inverse_gap << " < " << r.pisot.limit
           << (r.pisot.holds ? "  holds" : "  VIOLATED") << "\n";
    return os.str();
}

}  // namespace perron
