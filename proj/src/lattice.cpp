#include "perron/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "perron/errors.hpp"

namespace perron {

AlphaWeights::AlphaWeights(std::vector<long double> weights) : w_(std::move(weights)) {
    for (long double w : w_)
        if (!(w > 0) || !std::isfinite(w)) throw Error(ErrorKind::InvalidArgument, "alpha weights must be positive and finite");
}

LatticeBasis power_basis(const FieldContext& ctx) {
    const auto d = static_cast<std::size_t>(ctx.degree());
    return {RatMatrix::identity(d), ctx.companion(), abs(ctx.discriminant()), "Z[lambda]"};
}

namespace {

// Faddeev-LeVerrier characteristic polynomial over Q, lowest degree first.
std::vector<mpq_class> rational_charpoly(const RatMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<mpq_class> c(n + 1);
    c[n] = 1;
    RatMatrix mk = RatMatrix::identity(n);
    RatMatrix am;
    for (std::size_t k = 1; k <= n; ++k) {
        am = m * mk;
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / static_cast<long>(k);
        mk = am;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k];
    }
    return c;
}

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

}  // namespace

LatticeBasis parse_integral_basis(const FieldContext& ctx, std::string_view text) {
    const auto d = static_cast<std::size_t>(ctx.degree());
    std::vector<RatVec> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        RatVec row;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            mpq_class q;
            if (q.set_str(tok, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + tok + "' in basis file");
            q.canonicalize();
            row.push_back(q);
        }
        if (row.empty()) continue;
        if (row.size() != d) throw Error(ErrorKind::Parse, "basis row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(d));
        rows.push_back(std::move(row));
    }
    if (rows.size() != d) throw Error(ErrorKind::Parse, "basis file has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(d));

    LatticeBasis lb;
    lb.label = "user_basis";
    lb.basis = RatMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) lb.basis(j, i) = rows[i][j];
    mpq_class det = determinant(lb.basis);
    if (det == 0) throw Error(ErrorKind::InvalidArgument, "basis is not full rank");

    RatMatrix b = to_rational(ctx.companion());
    for (std::size_t i = 0; i < d; ++i) {
        RatMatrix mult(d, d, 0);
        RatMatrix power = RatMatrix::identity(d);
        for (std::size_t m = 0; m < d; ++m) {
            if (rows[i][m] != 0)
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t c = 0; c < d; ++c) mult(a, c) += rows[i][m] * power(a, c);
            power = b * power;
        }
        for (const auto& c : rational_charpoly(mult))
            if (!is_integer(c)) throw Error(ErrorKind::InvalidArgument, "basis element " + std::to_string(i + 1) + " is not an algebraic integer");
    }

    RatMatrix action = inverse(lb.basis) * b * lb.basis;
    lb.action = IntMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (!is_integer(action(i, j))) throw Error(ErrorKind::InvalidArgument, "basis is not stable under multiplication by lambda");
            lb.action(i, j) = action(i, j).get_num();
        }
    mpq_class disc = mpq_class(abs(ctx.discriminant())) * det * det;
    if (!is_integer(disc)) throw Error(ErrorKind::InvalidArgument, "basis discriminant is not an integer");
    lb.disc_abs = disc.get_num();
    return lb;
}

RatVec to_power_coords(const LatticeBasis& lb, const IntVec& v) {
    RatVec q(v.begin(), v.end());
    return lb.basis * q;
}

std::vector<long double> LatticeContext::scale(const PlaceVector& v) const {
    std::vector<long double> out(v.coords.size());
    for (std::size_t j = 0; j < field_.places().size(); ++j) {
        std::size_t off = field_.offset(j);
        if (field_.place(j).real) {
            out[off] = std::sqrt(alpha_[j]) * v.coords[off];
        } else {
            long double f = std::sqrt(2 * alpha_[j]);
            out[off] = f * v.coords[off];
            out[off + 1] = f * v.coords[off + 1];
        }
    }
    return out;
}

namespace {

long double dot_col(const RealMatrix& a, std::size_t i, const RealMatrix& b, std::size_t j) {
    long double s = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, i) * b(r, j);
    return s;
}

struct Gso {
    RealMatrix bstar;
    RealMatrix mu;
    std::vector<long double> norms;
};

Gso gram_schmidt(const RealMatrix& b) {
    const std::size_t n = b.cols();
    Gso g{b, RealMatrix(n, n, 0.0L), std::vector<long double>(n, 0.0L)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            g.mu(i, j) = dot_col(b, i, g.bstar, j) / g.norms[j];
            for (std::size_t r = 0; r < b.rows(); ++r) g.bstar(r, i) -= g.mu(i, j) * g.bstar(r, j);
        }
        g.norms[i] = dot_col(g.bstar, i, g.bstar, i);
    }
    return g;
}

// LLL with delta = 0.99 on the columns of b; transform tracks b = b0 * t.
void lll(RealMatrix& b, IntMatrix& t) {
    const std::size_t n = b.cols();
    const long double delta = 0.99L;
    std::size_t k = 1;
    Gso g = gram_schmidt(b);
    int guard = 0;
    while (k < n && guard++ < 100000) {
        for (std::size_t j = k; j-- > 0;) {
            long double q = std::round(g.mu(k, j));
            if (q == 0) continue;
            mpz_class qz(static_cast<double>(q));
            for (std::size_t r = 0; r < b.rows(); ++r) b(r, k) -= q * b(r, j);
            for (std::size_t r = 0; r < n; ++r) t(r, k) -= qz * t(r, j);
            g = gram_schmidt(b);
        }
        if (g.norms[k] >= (delta - g.mu(k, k - 1) * g.mu(k, k - 1)) * g.norms[k - 1]) {
            ++k;
        } else {
            for (std::size_t r = 0; r < b.rows(); ++r) std::swap(b(r, k), b(r, k - 1));
            for (std::size_t r = 0; r < n; ++r) std::swap(t(r, k), t(r, k - 1));
            g = gram_schmidt(b);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
}

}  // namespace

RealLattice::RealLattice(RealMatrix basis) : basis_(std::move(basis)) {
    const std::size_t d = basis_.cols();
    RealMatrix b = basis_;
    IntMatrix t = IntMatrix::identity(d);
    lll(b, t);
    transform_ = t;
    // Recompute from the exact transform to shed rounding drift.
    reduced_ = RealMatrix(basis_.rows(), d, 0.0L);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            long double s = 0;
            for (std::size_t m = 0; m < d; ++m) s += basis_(r, m) * static_cast<long double>(t(m, i).get_d());
            reduced_(r, i) = s;
        }
    Gso g = gram_schmidt(reduced_);
    bstar_ = g.bstar;
    mu_ = g.mu;
    norms_ = g.norms;
    det_ = 1;
    long double sum = 0;
    for (long double n : norms_) {
        det_ *= n;
        sum += n;
    }
    ell_hat_ = std::sqrt(sum) / 2;
}

std::vector<long double> RealLattice::point(const IntVec& coords) const {
    std::vector<long double> out(basis_.rows(), 0.0L);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        long double c = coords[i].get_d();
        for (std::size_t r = 0; r < basis_.rows(); ++r) out[r] += basis_(r, i) * c;
    }
    return out;
}

ClosestVector RealLattice::closest(const std::vector<long double>& t) const {
    const std::size_t d = dim();
    std::vector<long double> tg(d);
    for (std::size_t i = 0; i < d; ++i) {
        long double s = 0;
        for (std::size_t r = 0; r < t.size(); ++r) s += t[r] * bstar_(r, i);
        tg[i] = s / norms_[i];
    }

    std::vector<long double> x(d, 0.0L);
    long double babai = 0;
    for (std::size_t i = d; i-- > 0;) {
        long double c = tg[i];
        for (std::size_t j = i + 1; j < d; ++j) c -= x[j] * mu_(j, i);
        x[i] = std::round(c);
        babai += (x[i] - c) * (x[i] - c) * norms_[i];
    }
    std::vector<long double> best = x;
    long double radius = babai * (1 + 1e-12L) + 1e-18L;

    // Schnorr-Euchner enumeration inside the nearest-plane distance.
    std::uint64_t nodes = 0;
    const std::uint64_t node_cap = 2000000;
    std::vector<long double> cur(d, 0.0L);
    std::function<void(std::size_t, long double)> search = [&](std::size_t level, long double partial) {
        if (++nodes > node_cap) return;
        long double c = tg[level];
        for (std::size_t j = level + 1; j < d; ++j) c -= cur[j] * mu_(j, level);
        long double start = std::round(c);
        for (long step = 0;; ++step) {
            bool any = false;
            for (int sign : {1, -1}) {
                if (step == 0 && sign < 0) continue;
                long double xi = start + sign * step;
                long double part = partial + (xi - c) * (xi - c) * norms_[level];
                if (part > radius) continue;
                any = true;
                cur[level] = xi;
                if (level == 0) {
                    if (part < radius) {
                        radius = part;
                        best = cur;
                    }
                } else {
                    search(level - 1, part);
                }
            }
            // |xi - c| grows with step on both sides.
            if (!any && step > 0) break;
        }
    };
    if (d > 0) search(d - 1, 0);

    IntVec reduced_coords(d);
    for (std::size_t i = 0; i < d; ++i) reduced_coords[i] = mpz_class(static_cast<double>(best[i]));
    ClosestVector out;
    out.coords = transform_ * reduced_coords;
    auto p = point(out.coords);
    long double dist = 0;
    for (std::size_t r = 0; r < p.size(); ++r) dist += (p[r] - t[r]) * (p[r] - t[r]);
    out.distance = std::sqrt(dist);
    return out;
}

LatticeContext build_lattice(const FieldContext& ctx, const AlphaWeights& alpha, const LatticeBasis& order) {
    if (alpha.size() != ctx.places().size()) throw Error(ErrorKind::InvalidArgument, "alpha has the wrong number of places");
    const auto d = static_cast<std::size_t>(ctx.degree());
    LatticeContext lat;
    lat.field_ = ctx;
    lat.alpha_ = alpha;
    lat.order_ = order;
    RealMatrix embedded(d, d, 0.0L);
    for (std::size_t i = 0; i < d; ++i) {
        RatVec col = order.basis.column(i);
        auto scaled = lat.scale(embed(ctx, col));
        for (std::size_t r = 0; r < d; ++r) embedded(r, i) = scaled[r];
    }
    lat.real_ = RealLattice(std::move(embedded));
    return lat;
}

LatticeContext build_lattice(const FieldContext& ctx, const AlphaWeights& alpha) {
    return build_lattice(ctx, alpha, power_basis(ctx));
}

long double covering_radius_upper(const LatticeContext& lat) { return lat.ell_hat(); }

ClosestVector closest_vector(const LatticeContext& lat, const PlaceVector& target) {
    return lat.real().closest(lat.scale(target));
}

ThicknessReport thickness(const LatticeContext& lat) {
    ThicknessReport rep;
    const long double d = lat.dim();
    rep.tau = lat.ell_hat() * lat.ell_hat() / std::pow(lat.det_qalpha(), 1.0L / d);
    rep.alpha_used = lat.alpha();
    rep.banaszczyk_bound = d / 4 * std::pow(static_cast<long double>(lat.order().disc_abs.get_d()), 1.0L / d);
    rep.within_bound = rep.tau <= rep.banaszczyk_bound;
    return rep;
}

AlphaWeights optimize_alpha(const FieldContext& ctx, const LatticeBasis& order, const AlphaWeights& start, int iters) {
    if (iters <= 0 || start.size() < 2) return start;
    auto tau_of = [&](const std::vector<long double>& logw) {
        std::vector<long double> w(logw.size());
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::exp(logw[j]);
        return thickness(build_lattice(ctx, AlphaWeights(w), order)).tau;
    };
    std::vector<long double> logw(start.size());
    for (std::size_t j = 0; j < logw.size(); ++j) logw[j] = std::log(start[j]);
    long double best = tau_of(logw);
    long double step = 0.5L;
    for (int it = 0; it < iters && step > 1e-6L; ++it) {
        bool improved = false;
        // tau is invariant under a common rescaling, so the first weight stays fixed.
        for (std::size_t j = 1; j < logw.size(); ++j) {
            for (long double dir : {step, -step}) {
                std::vector<long double> trial = logw;
                trial[j] += dir;
                long double tau = tau_of(trial);
                if (tau < best) {
                    best = tau;
                    logw = std::move(trial);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) step /= 2;
    }
    std::vector<long double> w(logw.size());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::exp(logw[j]);
    return AlphaWeights(w);
}

namespace {

// Vector orthogonal to the rows of m (d-1 rows of length d).
IntVec generalized_cross(const std::vector<IntVec>& rows, std::size_t d) {
    IntVec n(d);
    for (std::size_t k = 0; k < d; ++k) {
        IntMatrix minor(d - 1, d - 1);
        for (std::size_t i = 0; i + 1 < d; ++i) {
            std::size_t c = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == k) continue;
                minor(i, c++) = rows[i][j];
            }
        }
        mpz_class det = determinant(std::move(minor));
        n[k] = (k % 2 == 0) ? det : mpz_class(-det);
    }
    return n;
}

mpz_class dot(const IntVec& a, const IntVec& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

mpq_class cross2(const std::vector<mpq_class>& o, const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Convex hull in the plane, counter-clockwise, collinear points dropped.
std::vector<std::size_t> hull2(const std::vector<std::vector<mpq_class>>& pts) {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }), idx.end());
    if (idx.size() < 3) return idx;
    std::vector<std::size_t> h(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i : idx) {
        while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
        h[k++] = i;
    }
    for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]) <= 0) --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);
    return h;
}

mpq_class hull_volume(const std::vector<IntVec>& points, const std::vector<Halfspace>& facets, std::size_t d) {
    if (d == 1) {
        mpz_class lo = points[0][0];
        mpz_class hi = points[0][0];
        for (const auto& p : points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return mpq_class(hi - lo);
    }
    if (d == 2) {
        std::vector<std::vector<mpq_class>> pts;
        for (const auto& p : points) pts.push_back({mpq_class(p[0]), mpq_class(p[1])});
        auto h = hull2(pts);
        mpq_class area2 = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            const auto& a = pts[h[i]];
            const auto& b = pts[h[(i + 1) % h.size()]];
            area2 += a[0] * b[1] - a[1] * b[0];
        }
        return abs(area2) / 2;
    }
    // d == 3: cone from the centroid over fan-triangulated facets.
    std::vector<mpq_class> c(3, 0);
    for (const auto& p : points)
        for (std::size_t i = 0; i < 3; ++i) c[i] += p[i];
    for (auto& x : c) x /= static_cast<long>(points.size());
    mpq_class vol6 = 0;
    for (const auto& f : facets) {
        std::vector<const IntVec*> on;
        for (const auto& p : points)
            if (dot(f.normal, p) == f.offset) on.push_back(&p);
        std::size_t drop = 0;
        for (std::size_t i = 1; i < 3; ++i)
            if (abs(f.normal[i]) > abs(f.normal[drop])) drop = i;
        std::vector<std::vector<mpq_class>> proj;
        for (const auto* p : on) {
            std::vector<mpq_class> q;
            for (std::size_t i = 0; i < 3; ++i)
                if (i != drop) q.push_back((*p)[i]);
            proj.push_back(q);
        }
        auto h = hull2(proj);
        for (std::size_t i = 1; i + 1 < h.size(); ++i) {
            const IntVec* tri[3] = {on[h[0]], on[h[i]], on[h[i + 1]]};
            RatMatrix m(3, 3);
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t k = 0; k < 3; ++k) m(r, k) = mpq_class((*tri[r])[k]) - c[k];
            vol6 += abs(determinant(m));
        }
    }
    return vol6 / 6;
}

}  // namespace

std::vector<Halfspace> hull_facets(const std::vector<IntVec>& points) {
    if (points.empty()) return {};
    const std::size_t d = points[0].size();
    std::set<std::pair<IntVec, mpz_class>> seen;
    std::vector<Halfspace> out;
    for_each_subset(points.size(), d, [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVec> rows;
        for (std::size_t i = 1; i < idx.size(); ++i) rows.push_back(points[idx[i]] - points[idx[0]]);
        IntVec n = generalized_cross(rows, d);
        if (is_zero(n)) return;
        mpz_class h = dot(n, points[idx[0]]);
        bool below = true;
        bool above = true;
        for (const auto& p : points) {
            mpz_class v = dot(n, p);
            if (v > h) below = false;
            if (v < h) above = false;
        }
        if (!below && !above) return;
        if (!below) {
            for (auto& x : n) x = -x;
            h = -h;
        }
        mpz_class g = 0;
        for (const auto& x : n) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), g.get_mpz_t());
        if (seen.insert({n, h}).second) out.push_back({n, h});
    });
    return out;
}

LatticePointCount count_lattice_points(const std::vector<IntVec>& vertices, std::uint64_t box_budget) {
    if (vertices.empty()) throw Error(ErrorKind::InvalidArgument, "empty polytope");
    const std::size_t d = vertices[0].size();
    if (d == 0 || d > 3) throw Error(ErrorKind::DimensionTooLarge, "lattice point counting supports dimension 1 to 3");
    auto facets = hull_facets(vertices);
    if (facets.size() < d + 1) throw Error(ErrorKind::InvalidArgument, "polytope is not full-dimensional");
    IntVec lo = vertices[0];
    IntVec hi = vertices[0];
    for (const auto& v : vertices)
        for (std::size_t i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    mpz_class boxes = 1;
    for (std::size_t i = 0; i < d; ++i) boxes *= hi[i] - lo[i] + 1;
    if (boxes > box_budget) throw Error(ErrorKind::DimensionTooLarge, "bounding box has " + boxes.get_str() + " points");

    LatticePointCount out;
    IntVec p = lo;
    for (;;) {
        bool inside = true;
        for (const auto& f : facets)
            if (dot(f.normal, p) > f.offset) {
                inside = false;
                break;
            }
        if (inside) ++out.count;
        std::size_t i = 0;
        while (i < d && p[i] == hi[i]) p[i] = lo[i], ++i;
        if (i == d) break;
        ++p[i];
    }
    out.volume = hull_volume(vertices, facets, d);
    mpz_class fact = 1;
    for (std::size_t k = 2; k <= d + 1; ++k) fact *= static_cast<unsigned long>(k);
    out.bound = out.volume * fact;
    out.bound_holds = mpq_class(static_cast<unsigned long>(out.count)) <= out.bound;
    return out;
}

}  // namespace perron
