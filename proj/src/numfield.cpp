#include "perron/numfield.hpp"

#include <algorithm>
#include <numeric>

#include "perron/errors.hpp"

namespace perron {

IntMatrix companion_matrix(const IntPolynomial& p) {
    const auto d = static_cast<std::size_t>(p.degree());
    IntMatrix b(d, d, 0);
    for (std::size_t i = 1; i < d; ++i) b(i, i - 1) = 1;
    for (std::size_t i = 0; i < d; ++i) b(i, d - 1) = -p.coeffs()[i];
    return b;
}

namespace {

Interval modulus(const CertifiedRoot& root) {
    mpq_class re = to_rational(root.center.re);
    mpq_class im = to_rational(root.center.im);
    mpq_class radius = to_rational(root.radius);
    Interval centre_abs = sqrt_enclosure(re * re + im * im, 160);
    Interval out{centre_abs.lo - radius, centre_abs.hi + radius};
    if (out.lo < 0) out.lo = 0;
    return out;
}

// -lambda is also a root, detected through gcd(p(x), p(-x)).
bool has_negated_twin(const IntPolynomial& p, const IsolatingInterval& lambda) {
    IntPolynomial g = gcd(p, p.reflect());
    if (g.degree() < 1) return false;
    SturmSequence sturm(squarefree_part(g));
    return sturm.count(lambda.lo, lambda.hi) > 0;
}

struct Attempt {
    std::vector<CertifiedRoot> roots;
    unsigned bits;
};

}  // namespace

FieldContext build_field_context(const IntPolynomial& p, const RootOptions& options) {
    if (!p.is_monic() || p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "expected a monic polynomial of degree >= 1");
    FieldContext ctx;
    ctx.poly_ = p;
    ctx.companion_ = companion_matrix(p);
    ctx.disc_ = discriminant(p);
    const int d = p.degree();

    if (d == 1) {
        mpq_class lambda(-p.coeffs()[0]);
        if (lambda < 1) throw Error(ErrorKind::NotPerron, "root " + lambda.get_str() + " is below 1");
        ctx.r_ = 1;
        ctx.bits_ = options.start_bits;
        Place place;
        place.root = certified_roots(p, options.start_bits).front();
        place.abs = Interval::point(lambda);
        ctx.places_.push_back(place);
        ctx.offsets_ = {0};
        ctx.lambda_ = {lambda, lambda};
        ctx.rho_ = Interval::point(0);
        return ctx;
    }

    SturmSequence sturm(p);
    if (sturm.count_above(0) == 0) throw Error(ErrorKind::NotPerron, "no positive real root");

    unsigned bits = std::max(options.start_bits, 64u);
    for (;;) {
        std::vector<CertifiedRoot> roots;
        bool exhausted = false;
        try {
            roots = certified_roots(p, bits);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PrecisionExhausted) throw;
            exhausted = true;
        }
        if (!exhausted) {
            if (!roots.front().is_real) throw Error(ErrorKind::NotPerron, "no real root isolated");
            const CertifiedRoot& top = roots.front();
            mpq_class centre = to_rational(top.center.re);
            mpq_class radius = to_rational(top.radius);
            IsolatingInterval lambda{centre - radius, centre + radius};
            Interval top_abs{lambda.lo, lambda.hi};
            if (lambda.lo <= 0) {
                exhausted = true;
            } else {
                bool dominated = true;
                for (std::size_t i = 1; i < roots.size(); ++i) {
                    Interval m = modulus(roots[i]);
                    if (m.lo > top_abs.hi) throw Error(ErrorKind::NotPerron, "a conjugate exceeds the largest real root in modulus");
                    if (m.hi >= top_abs.lo) dominated = false;
                }
                if (!dominated) {
                    if (has_negated_twin(p, lambda)) throw Error(ErrorKind::NotPerron, "-lambda is a conjugate of lambda");
                    exhausted = true;
                } else {
                    if (sturm.count(lambda.lo, lambda.hi) != 1 || sign_at(p, lambda.lo) == 0 ||
                        sign_at(p, lambda.hi) == 0)
                        throw Error(ErrorKind::CertificationFailed, "lambda disc is not an isolating interval");
                    ctx.bits_ = bits;
                    ctx.lambda_ = lambda;
                    std::vector<Place> reals;
                    std::vector<Place> pairs;
                    for (std::size_t i = 1; i < roots.size(); ++i) {
                        Place place{roots[i], roots[i].is_real, modulus(roots[i])};
                        if (place.real) {
                            reals.push_back(std::move(place));
                        } else if (roots[i].center.im > 0) {
                            pairs.push_back(std::move(place));
                        }
                    }
                    auto by_modulus = [](const Place& a, const Place& b) {
                        BigFloat ma = a.root.center.abs();
                        BigFloat mb = b.root.center.abs();
                        if (ma != mb) return ma > mb;
                        return atan2(a.root.center.im, a.root.center.re) < atan2(b.root.center.im, b.root.center.re);
                    };
                    std::stable_sort(reals.begin(), reals.end(), by_modulus);
                    std::stable_sort(pairs.begin(), pairs.end(), by_modulus);
                    ctx.places_.push_back(Place{top, true, top_abs});
                    for (auto& pl : reals) ctx.places_.push_back(std::move(pl));
                    for (auto& pl : pairs) ctx.places_.push_back(std::move(pl));
                    ctx.r_ = 1 + static_cast<int>(reals.size());
                    ctx.s_ = static_cast<int>(pairs.size());
                    if (ctx.r_ + 2 * ctx.s_ != d) throw Error(ErrorKind::CertificationFailed, "place count mismatch");
                    std::size_t off = 0;
                    for (const auto& pl : ctx.places_) {
                        ctx.offsets_.push_back(off);
                        off += pl.real ? 1 : 2;
                    }
                    mpq_class hi = 0;
                    mpq_class lo = 0;
                    for (std::size_t j = 1; j < ctx.places_.size(); ++j) {
                        hi = std::max(hi, mpq_class(ctx.places_[j].abs.hi / lambda.lo));
                        lo = std::max(lo, mpq_class(ctx.places_[j].abs.lo / lambda.hi));
                    }
                    ctx.rho_ = simplify(Interval{lo, hi});
                    return ctx;
                }
            }
        }
        if (bits * 2 > options.max_bits) {
            throw Error(ErrorKind::Indeterminate,
                        "cannot separate lambda from its conjugates at " + std::to_string(bits) + " bits");
        }
        bits *= 2;
    }
}

bool FieldContext::is_pisot() const {
    for (std::size_t j = 1; j < places_.size(); ++j)
        if (places_[j].abs.hi >= 1) return false;
    return true;
}

IsolatingInterval FieldContext::lambda_within(const mpq_class& width) const {
    IsolatingInterval iv = lambda_;
    while (iv.hi - iv.lo > width) bisect(poly_, iv);
    return iv;
}

Interval lambda_interval(const FieldContext& ctx) { return {ctx.lambda().lo, ctx.lambda().hi}; }

namespace {

PlaceVector embed_big(const FieldContext& ctx, const std::vector<BigFloat>& coeffs) {
    PrecisionScope scope(ctx.precision_bits());
    PlaceVector out;
    out.coords.assign(static_cast<std::size_t>(ctx.degree()), 0.0L);
    for (std::size_t j = 0; j < ctx.places().size(); ++j) {
        const Place& pl = ctx.place(j);
        BigComplex acc;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = acc * pl.root.center;
            acc.re += *it;
        }
        std::size_t off = ctx.offset(j);
        out.coords[off] = to_long_double(acc.re);
        if (!pl.real) out.coords[off + 1] = to_long_double(acc.im);
    }
    return out;
}

}  // namespace

PlaceVector embed(const FieldContext& ctx, const RatVec& power_coords) {
    assert(power_coords.size() == static_cast<std::size_t>(ctx.degree()));
    PrecisionScope scope(ctx.precision_bits());
    std::vector<BigFloat> c;
    c.reserve(power_coords.size());
    for (const auto& x : power_coords) c.push_back(to_big(x));
    return embed_big(ctx, c);
}

PlaceVector embed(const FieldContext& ctx, const IntVec& power_coords) {
    assert(power_coords.size() == static_cast<std::size_t>(ctx.degree()));
    PrecisionScope scope(ctx.precision_bits());
    std::vector<BigFloat> c;
    c.reserve(power_coords.size());
    for (const auto& x : power_coords) c.push_back(to_big(x));
    return embed_big(ctx, c);
}

IntVec apply_mult(const FieldContext& ctx, const IntVec& v) { return ctx.companion() * v; }

ProjectionNorms projection_norms(const FieldContext& ctx, const std::vector<long double>& alpha,
                                 const PlaceVector& v) {
    if (alpha.size() != ctx.places().size()) throw Error(ErrorKind::InvalidArgument, "alpha has the wrong length");
    ProjectionNorms out;
    for (std::size_t j = 0; j < ctx.places().size(); ++j) {
        std::size_t off = ctx.offset(j);
        long double sq = ctx.place(j).real ? alpha[j] * v.coords[off] * v.coords[off]
                                           : 2 * alpha[j] * (v.coords[off] * v.coords[off] + v.coords[off + 1] * v.coords[off + 1]);
        out.squared.push_back(sq);
        out.total_squared += sq;
    }
    return out;
}

int sign_at_lambda(const FieldContext& ctx, const IntVec& coeffs) {
    IntPolynomial g{std::vector<mpz_class>(coeffs)};
    if (g.is_zero()) return 0;
    g = divide_monic(g, ctx.poly()).remainder;
    if (g.is_zero()) return 0;
    return sign_at_root(ctx.poly(), ctx.lambda(), g);
}

int sign_at_lambda(const FieldContext& ctx, const RatVec& coeffs) {
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    IntVec scaled;
    scaled.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        mpq_class v = c * den;
        scaled.push_back(v.get_num());
    }
    return sign_at_lambda(ctx, scaled);
}

}  // namespace perron
