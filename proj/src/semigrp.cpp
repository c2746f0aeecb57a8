#include "perron/semigrp.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>

#include "perron/errors.hpp"
#include "perron/exact_lp.hpp"
#include "perron/parallel.hpp"

namespace perron {

namespace {

mpz_class dot(const IntVec& a, const IntVec& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec primitive(IntVec v) {
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

// Normal to d-1 vectors in R^d via signed maximal minors.
IntVec normal_of(const std::vector<const IntVec*>& rows, std::size_t d) {
    IntVec n(d);
    for (std::size_t k = 0; k < d; ++k) {
        IntMatrix minor(d - 1, d - 1);
        for (std::size_t i = 0; i + 1 < d; ++i) {
            std::size_t c = 0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) minor(i, c++) = (*rows[i])[j];
        }
        mpz_class det = determinant(std::move(minor));
        n[k] = k % 2 == 0 ? det : mpz_class(-det);
    }
    return n;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Candidate facet normals: primitive normals of (d-1)-subsets, up to sign.
std::vector<IntVec> subset_normals(const std::vector<IntVec>& vectors, std::size_t d) {
    std::set<IntVec> seen;
    std::vector<IntVec> out;
    if (d == 1) return {IntVec{1}};
    for_each_subset(vectors.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<const IntVec*> rows;
        for (std::size_t i : idx) rows.push_back(&vectors[i]);
        IntVec n = normal_of(rows, d);
        if (is_zero(n)) return;
        n = primitive(std::move(n));
        // Canonical sign: first nonzero entry positive.
        auto first = std::find_if(n.begin(), n.end(), [](const mpz_class& x) { return x != 0; });
        if (*first < 0)
            for (auto& x : n) x = -x;
        if (seen.insert(n).second) out.push_back(std::move(n));
    });
    return out;
}

}  // namespace

PolyhedralCone::PolyhedralCone(std::vector<IntVec> rays) : rays_(std::move(rays)) {
    if (rays_.empty()) throw Error(ErrorKind::InvalidArgument, "cone needs at least one ray");
    dim_ = rays_[0].size();
    for (IntVec n : subset_normals(rays_, dim_)) {
        bool nonneg = true;
        bool nonpos = true;
        for (const auto& r : rays_) {
            int s = sgn(dot(n, r));
            if (s < 0) nonneg = false;
            if (s > 0) nonpos = false;
        }
        if (nonneg == nonpos) continue;  // mixed signs, or every ray on the hyperplane
        if (nonpos)
            for (auto& x : n) x = -x;
        normals_.push_back(std::move(n));
    }
    if (normals_.empty()) throw Error(ErrorKind::InvalidArgument, "cone is not full-dimensional and pointed");
    std::sort(normals_.begin(), normals_.end());
}

bool PolyhedralCone::contains(const IntVec& x) const {
    for (const auto& n : normals_)
        if (dot(n, x) < 0) return false;
    return true;
}

Zonotope::Zonotope(std::vector<IntVec> generators) : generators_(std::move(generators)) {
    const std::size_t d = generators_.at(0).size();
    for (IntVec n : subset_normals(generators_, d)) {
        Slab slab{std::move(n), 0, 0};
        for (const auto& g : generators_) {
            mpz_class v = dot(slab.normal, g);
            if (v < 0) slab.lo += v;
            else slab.hi += v;
        }
        slabs_.push_back(std::move(slab));
    }
    box_lo_.assign(d, 0);
    box_hi_.assign(d, 0);
    for (const auto& g : generators_)
        for (std::size_t i = 0; i < d; ++i) {
            if (g[i] < 0) box_lo_[i] += g[i];
            else box_hi_[i] += g[i];
        }
}

bool Zonotope::contains(const IntVec& x) const {
    for (const auto& s : slabs_) {
        mpz_class v = dot(s.normal, x);
        if (v < s.lo || v > s.hi) return false;
    }
    return true;
}

namespace {

constexpr long kSmall = 1L << 40;

bool fits_small(const mpz_class& x) { return abs(x) < kSmall; }

// Scan of one slice (fixed first coordinate) with 128-bit accumulators.
struct FastScan {
    std::size_t d;
    std::vector<long> lo;
    std::vector<long> hi;
    std::vector<std::vector<long>> normals;
    std::vector<__int128> slab_lo;
    std::vector<__int128> slab_hi;

    std::vector<IntVec> slice(long first, std::atomic<std::uint64_t>& scanned, std::uint64_t budget) const {
        std::vector<IntVec> found;
        std::vector<long> p(lo);
        p[0] = first;
        // Incremental dot products: start at the box corner of this slice.
        std::vector<__int128> val(normals.size());
        for (std::size_t f = 0; f < normals.size(); ++f) {
            __int128 s = 0;
            for (std::size_t i = 0; i < d; ++i) s += static_cast<__int128>(normals[f][i]) * p[i];
            val[f] = s;
        }
        std::uint64_t local = 0;
        for (;;) {
            if (++local == 4096) {
                if (scanned.fetch_add(local) + local > budget) throw BudgetExceeded("enumeration budget exhausted", scanned.load());
                local = 0;
            }
            bool inside = true;
            for (std::size_t f = 0; f < normals.size(); ++f)
                if (val[f] < slab_lo[f] || val[f] > slab_hi[f]) {
                    inside = false;
                    break;
                }
            if (inside) {
                bool zero = std::all_of(p.begin(), p.end(), [](long x) { return x == 0; });
                if (!zero) {
                    IntVec v(d);
                    for (std::size_t i = 0; i < d; ++i) v[i] = p[i];
                    found.push_back(std::move(v));
                }
            }
            std::size_t i = d - 1;
            while (i >= 1 && p[i] == hi[i]) {
                for (std::size_t f = 0; f < normals.size(); ++f)
                    val[f] -= static_cast<__int128>(normals[f][i]) * (hi[i] - lo[i]);
                p[i] = lo[i];
                --i;
            }
            if (i == 0) break;
            ++p[i];
            for (std::size_t f = 0; f < normals.size(); ++f) val[f] += normals[f][i];
        }
        if (scanned.fetch_add(local) + local > budget) throw BudgetExceeded("enumeration budget exhausted", scanned.load());
        return found;
    }
};

}  // namespace

GeneratorSet enumerate_generators(const std::vector<IntVec>& cone_rays, std::uint64_t budget) {
    GeneratorSet out;
    out.cone = PolyhedralCone(cone_rays);
    Zonotope zono(cone_rays);
    const std::size_t d = cone_rays[0].size();

    bool fast = true;
    for (std::size_t i = 0; i < d; ++i) fast = fast && fits_small(zono.box_lo()[i]) && fits_small(zono.box_hi()[i]);
    for (const auto& s : zono.slabs())
        for (const auto& x : s.normal) fast = fast && fits_small(x);
    if (!fast) throw Error(ErrorKind::DimensionTooLarge, "zonotope coordinates exceed the enumeration range");

    FastScan scan;
    scan.d = d;
    for (std::size_t i = 0; i < d; ++i) {
        scan.lo.push_back(zono.box_lo()[i].get_si());
        scan.hi.push_back(zono.box_hi()[i].get_si());
    }
    for (const auto& s : zono.slabs()) {
        std::vector<long> n;
        for (const auto& x : s.normal) n.push_back(x.get_si());
        scan.normals.push_back(std::move(n));
        if (!s.lo.fits_slong_p() || !s.hi.fits_slong_p())
            throw Error(ErrorKind::DimensionTooLarge, "zonotope slab bounds exceed the enumeration range");
        scan.slab_lo.push_back(s.lo.get_si());
        scan.slab_hi.push_back(s.hi.get_si());
    }

    mpz_class box = 1;
    for (std::size_t i = 0; i < d; ++i) box *= zono.box_hi()[i] - zono.box_lo()[i] + 1;

    const auto width = static_cast<std::size_t>(scan.hi[0] - scan.lo[0] + 1);
    std::vector<std::vector<IntVec>> slices(width);
    std::atomic<std::uint64_t> scanned{0};
    try {
        parallel_for(width, [&](std::size_t k) { slices[k] = scan.slice(scan.lo[0] + static_cast<long>(k), scanned, budget); });
    } catch (const BudgetExceeded&) {
        std::uint64_t found = 0;
        for (const auto& s : slices) found += s.size();
        throw BudgetExceeded("enumeration budget of " + std::to_string(budget) + " candidates exhausted (box holds " +
                                 box.get_str() + " points)",
                             found);
    }
    for (auto& s : slices)
        for (auto& v : s) out.gens.push_back(std::move(v));
    out.candidates_scanned = scanned.load();
    return out;
}

namespace {

RatVec membership_witness(const PolyhedralCone& cone, const IntVec& point) {
    auto alpha = unit_box_solution(columns_to_rational(cone.rays()), RatVec(point.begin(), point.end()));
    if (!alpha) throw Error(ErrorKind::CertificationFailed, "generator outside the zonotope");
    return *alpha;
}

}  // namespace

GeneratorSet prune_generators(const GeneratorSet& gset, const Height& height) {
    std::vector<std::pair<long double, std::size_t>> order;
    order.reserve(gset.gens.size());
    for (std::size_t i = 0; i < gset.gens.size(); ++i) order.emplace_back(height(gset.gens[i]), i);
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return gset.gens[a.second] < gset.gens[b.second];
    });

    const PolyhedralCone& cone = gset.cone;
    auto reducible_by = [&](const IntVec& c, const IntVec& h) { return c != h && cone.contains(c - h); };

    // Ascending height: any proper summand of c is lower, so it was seen already.
    std::vector<std::size_t> kept;
    for (const auto& [h, idx] : order) {
        const IntVec& c = gset.gens[idx];
        bool reducible = false;
        for (std::size_t k : kept)
            if (reducible_by(c, gset.gens[k])) {
                reducible = true;
                break;
            }
        if (!reducible) kept.push_back(idx);
    }
    // Second pass guards against rounding in the height order.
    std::vector<std::size_t> final_set;
    for (std::size_t a : kept) {
        bool reducible = false;
        for (std::size_t b : kept)
            if (reducible_by(gset.gens[a], gset.gens[b])) {
                reducible = true;
                break;
            }
        if (!reducible) final_set.push_back(a);
    }

    GeneratorSet out;
    out.cone = gset.cone;
    out.pruned = true;
    out.candidates_scanned = gset.candidates_scanned;
    for (auto it = final_set.rbegin(); it != final_set.rend(); ++it) out.gens.push_back(gset.gens[*it]);
    for (const auto& g : out.gens) out.membership.push_back(membership_witness(out.cone, g));
    return out;
}

namespace {

// Greedy descent: subtract the first generator that keeps the rest in the cone.
void greedy(const GeneratorSet& gset, IntVec y, std::vector<mpz_class>& mult) {
    while (!is_zero(y)) {
        bool stepped = false;
        for (std::size_t i = 0; i < gset.gens.size(); ++i) {
            IntVec rest = y - gset.gens[i];
            if (gset.cone.contains(rest)) {
                mult[i] += 1;
                y = std::move(rest);
                stepped = true;
                break;
            }
        }
        if (!stepped) throw Error(ErrorKind::NotInSemigroup, "no generator can be split off");
    }
}

}  // namespace

std::vector<mpz_class> decompose(const GeneratorSet& gset, const IntVec& target) {
    std::vector<mpz_class> mult(gset.gens.size(), 0);
    if (is_zero(target)) return mult;
    if (!gset.cone.contains(target)) throw Error(ErrorKind::NotInSemigroup, "target lies outside the cone");
    const auto& rays = gset.cone.rays();
    auto beta = nonnegative_solution(columns_to_rational(rays), RatVec(target.begin(), target.end()));
    if (!beta) throw Error(ErrorKind::NotInSemigroup, "no non-negative cone coordinates");
    IntVec remainder = target;
    for (std::size_t m = 0; m < rays.size(); ++m) {
        mpz_class whole;
        mpz_fdiv_q(whole.get_mpz_t(), (*beta)[m].get_num_mpz_t(), (*beta)[m].get_den_mpz_t());
        if (whole == 0) continue;
        std::vector<mpz_class> ray_mult(gset.gens.size(), 0);
        greedy(gset, rays[m], ray_mult);
        for (std::size_t i = 0; i < mult.size(); ++i) mult[i] += whole * ray_mult[i];
        for (std::size_t r = 0; r < remainder.size(); ++r) remainder[r] -= whole * rays[m][r];
    }
    greedy(gset, remainder, mult);
    return mult;
}

NonNegIntMatrix assemble_matrix(const IntMatrix& action, const GeneratorSet& gset) {
    const std::size_t n = gset.gens.size();
    NonNegIntMatrix a(n, n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        IntVec image = action * gset.gens[j];
        std::vector<mpz_class> col = decompose(gset, image);
        IntVec check(image.size(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            a(i, j) = col[i];
            for (std::size_t r = 0; r < check.size(); ++r) check[r] += col[i] * gset.gens[i][r];
        }
        if (check != image) throw Error(ErrorKind::CertificationFailed, "matrix column does not re-sum to the image");
    }
    return a;
}

}  // namespace perron
