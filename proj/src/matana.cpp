#include "perron/matana.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <sstream>

#include "perron/errors.hpp"

namespace perron {

namespace {

void require_square(const IntMatrix& a) {
    if (!a.square() || a.rows() == 0) throw Error(ErrorKind::InvalidArgument, "matrix must be square and non-empty");
}

void require_nonnegative(const IntMatrix& a) {
    for (const auto& x : a.data())
        if (x < 0) throw Error(ErrorKind::InvalidArgument, "matrix has a negative entry");
}

std::vector<std::vector<std::size_t>> successors(const IntMatrix& a) {
    std::vector<std::vector<std::size_t>> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) > 0) out[i].push_back(j);
    return out;
}

// ---- arithmetic modulo a word-sized prime ----

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) { return powmod(a, m - 2, m); }

static_assert(sizeof(unsigned long) == sizeof(u64));

u64 reduce(const mpz_class& x, u64 m) { return mpz_fdiv_ui(x.get_mpz_t(), m); }

mpz_class previous_prime(mpz_class p) {
    do {
        p -= 1;
    } while (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0);
    return p;
}

// Upper Hessenberg reduction followed by the standard recurrence.
std::vector<u64> charpoly_mod(const IntMatrix& a, u64 m) {
    const std::size_t n = a.rows();
    std::vector<u64> h(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i * n + j] = reduce(a(i, j), m);
    auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && at(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(at(piv, k), at(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(at(k, piv), at(k, j + 1));
        }
        const u64 inv = invmod(at(j + 1, j), m);
        for (std::size_t i = j + 2; i < n; ++i) {
            if (at(i, j) == 0) continue;
            const u64 u = mulmod(at(i, j), inv, m);
            for (std::size_t k = 0; k < n; ++k) {
                u64 t = mulmod(u, at(j + 1, k), m);
                at(i, k) = at(i, k) >= t ? at(i, k) - t : at(i, k) + m - t;
            }
            for (std::size_t k = 0; k < n; ++k) {
                u64 t = mulmod(u, at(k, i), m);
                at(k, j + 1) = (at(k, j + 1) + t) % m;
            }
        }
    }

    // polys[k] = charpoly of the leading k x k block, lowest degree first.
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<u64> next(k + 2, 0);
        const auto& prev = polys[k];
        const u64 diag = at(k, k);
        for (std::size_t i = 0; i <= k; ++i) {
            next[i + 1] = (next[i + 1] + prev[i]) % m;
            u64 t = mulmod(diag, prev[i], m);
            next[i] = next[i] >= t ? next[i] - t : next[i] + m - t;
        }
        u64 prod = 1;
        for (std::size_t i = k; i-- > 0;) {
            prod = mulmod(prod, at(i + 1, i), m);
            if (prod == 0) break;
            const u64 coef = mulmod(prod, at(i, k), m);
            if (coef == 0) continue;
            for (std::size_t c = 0; c < polys[i].size(); ++c) {
                u64 t = mulmod(coef, polys[i][c], m);
                next[c] = next[c] >= t ? next[c] - t : next[c] + m - t;
            }
        }
        polys[k + 1] = std::move(next);
    }
    return polys[n];
}

}  // namespace

SccResult strongly_connected_components(const NonNegIntMatrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    const auto succ = successors(a);

    // Iterative Tarjan.
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> raw;
    std::size_t counter = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        std::vector<std::pair<std::size_t, std::size_t>> work{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!work.empty()) {
            auto& [v, pos] = work.back();
            if (pos < succ[v].size()) {
                std::size_t w = succ[v][pos++];
                if (index[w] == unset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    work.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<std::size_t> c;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = raw.size();
                    c.push_back(w);
                } while (w != v);
                std::sort(c.begin(), c.end());
                raw.push_back(std::move(c));
            }
            std::size_t done = v;
            work.pop_back();
            if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[done]);
        }
    }

    // Topological order of the condensation, smallest leading vertex first.
    const std::size_t k = raw.size();
    std::vector<std::vector<std::size_t>> dag(k);
    std::vector<std::size_t> indeg(k, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : succ[v])
            if (comp[v] != comp[w]) {
                dag[comp[v]].push_back(comp[w]);
                ++indeg[comp[w]];
            }
    using Key = std::pair<std::size_t, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (std::size_t c = 0; c < k; ++c)
        if (indeg[c] == 0) ready.emplace(raw[c].front(), c);
    SccResult out;
    out.component_of.assign(n, 0);
    while (!ready.empty()) {
        std::size_t c = ready.top().second;
        ready.pop();
        for (std::size_t v : raw[c]) out.component_of[v] = out.components.size();
        out.components.push_back(raw[c]);
        for (std::size_t d : dag[c])
            if (--indeg[d] == 0) ready.emplace(raw[d].front(), d);
    }
    return out;
}

bool is_irreducible(const NonNegIntMatrix& a) { return strongly_connected_components(a).components.size() == 1; }

NonNegIntMatrix principal_submatrix(const NonNegIntMatrix& a, const std::vector<std::size_t>& indices) {
    NonNegIntMatrix out(indices.size(), indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j < indices.size(); ++j) out(i, j) = a(indices[i], indices[j]);
    return out;
}

std::vector<std::vector<std::size_t>> closed_components(const NonNegIntMatrix& a) {
    const SccResult scc = strongly_connected_components(a);
    std::vector<bool> has_incoming(scc.components.size(), false);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) > 0 && scc.component_of[i] != scc.component_of[j]) has_incoming[scc.component_of[j]] = true;
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t c = 0; c < scc.components.size(); ++c)
        if (!has_incoming[c]) out.push_back(scc.components[c]);
    return out;
}

std::vector<std::size_t> choose_lambda_component(const NonNegIntMatrix& a) {
    auto closed = closed_components(a);
    return *std::min_element(closed.begin(), closed.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
}

IntPolynomial charpoly_berkowitz(const IntMatrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    // Coefficients highest degree first.
    std::vector<mpz_class> c{1, -a(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S.
        std::vector<mpz_class> t(r + 2);
        t[0] = 1;
        t[1] = -a(r, r);
        std::vector<mpz_class> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
        for (std::size_t k = 2; k <= r + 1; ++k) {
            mpz_class dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * v[i];
            t[k] = -dot;
            if (k == r + 1) break;
            std::vector<mpz_class> w(r, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (a(i, j) != 0) w[i] += a(i, j) * v[j];
            v = std::move(w);
        }
        std::vector<mpz_class> next(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * c[j];
        c = std::move(next);
    }
    std::reverse(c.begin(), c.end());
    return IntPolynomial(std::move(c));
}

IntPolynomial charpoly_multimodular(const IntMatrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    // Every eigenvalue is bounded by the largest absolute row sum R, so the
    // coefficients are bounded by (1 + R)^n.
    mpz_class row_max = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < n; ++j) s += abs(a(i, j));
        row_max = std::max(row_max, s);
    }
    mpz_class bound;
    mpz_class base = row_max + 1;
    mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), n);
    const mpz_class needed = 2 * bound + 1;

    std::vector<mpz_class> residues(n + 1, 0);
    mpz_class modulus = 1;
    mpz_class prime = mpz_class(1) << 62;
    while (modulus <= needed) {
        prime = previous_prime(prime);
        const u64 q = prime.get_ui();
        const std::vector<u64> cp = charpoly_mod(a, q);
        const u64 m_mod_q = reduce(modulus, q);
        const u64 m_inv = invmod(m_mod_q, q);
        for (std::size_t i = 0; i <= n; ++i) {
            const u64 cur = reduce(residues[i], q);
            const u64 diff = cp[i] >= cur ? cp[i] - cur : cp[i] + q - cur;
            const u64 t = mulmod(diff, m_inv, q);
            residues[i] += modulus * mpz_class(static_cast<unsigned long>(t));
        }
        modulus *= prime;
    }
    const mpz_class half = modulus / 2;
    for (auto& r : residues)
        if (r > half) r -= modulus;
    return IntPolynomial(std::move(residues));
}

IntPolynomial charpoly_exact(const NonNegIntMatrix& a) {
    require_square(a);
    return a.rows() <= 40 ? charpoly_berkowitz(a) : charpoly_multimodular(a);
}

namespace {

SpectralCertificate divisibility(const FieldContext& ctx, const NonNegIntMatrix& a) {
    SpectralCertificate cert;
    cert.charpoly = charpoly_exact(a);
    auto q = exact_quotient(cert.charpoly, ctx.poly());
    if (!q) throw Error(ErrorKind::DivisionInexact, "characteristic polynomial is not divisible by the minimal polynomial");
    cert.quotient = *q;
    IsolatingInterval tight = ctx.lambda_within(mpq_class(1, 1000000000));
    cert.radius_interval = Interval(tight.lo, tight.hi);
    return cert;
}

}  // namespace

SpectralCertificate certify_spectral_radius(const FieldContext& ctx, const NonNegIntMatrix& a) {
    require_square(a);
    require_nonnegative(a);
    SpectralCertificate cert = divisibility(ctx, a);
    cert.method = "sturm";

    // Strip every copy of the minimal polynomial; what is left has no root at
    // lambda, and must have none above it either.
    IntPolynomial rest = cert.quotient;
    while (rest.degree() >= ctx.degree()) {
        auto next = exact_quotient(rest, ctx.poly());
        if (!next) break;
        rest = std::move(*next);
    }
    if (rest.degree() < 1) {
        cert.matches_lambda = true;
        return cert;
    }
    const SturmSequence sturm(squarefree_part(rest));
    IsolatingInterval iv = ctx.lambda();
    for (int iter = 0; iter < 400; ++iter) {
        if (sturm.count_above(iv.hi) > 0) return cert;
        if (sturm.count_above(iv.lo) == 0) {
            cert.matches_lambda = true;
            return cert;
        }
        bisect(ctx.poly(), iv);
    }
    throw Error(ErrorKind::Indeterminate, "could not separate the spectral radius from lambda");
}

SpectralCertificate certify_by_eigenvector(const FieldContext& ctx, const LatticeBasis& order, const NonNegIntMatrix& a,
                                           const std::vector<IntVec>& gens) {
    require_square(a);
    require_nonnegative(a);
    if (gens.size() != a.rows()) throw Error(ErrorKind::InvalidArgument, "generator count does not match the matrix");
    SpectralCertificate cert = divisibility(ctx, a);
    cert.method = "positive_left_eigenvector";
    const std::size_t d = static_cast<std::size_t>(ctx.degree());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        IntVec image = order.action * gens[j];
        IntVec combo(d, 0);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (a(i, j) != 0)
                for (std::size_t k = 0; k < d; ++k) combo[k] += a(i, j) * gens[i][k];
        if (image != combo) return cert;
        if (sign_at_lambda(ctx, to_power_coords(order, gens[j])) <= 0) return cert;
    }
    cert.matches_lambda = true;
    return cert;
}

Periodicity period_and_primitivity(const NonNegIntMatrix& a) {
    if (!is_irreducible(a)) throw Error(ErrorKind::InvalidArgument, "period requires an irreducible matrix");
    const auto succ = successors(a);
    const std::size_t n = a.rows();
    std::vector<long> level(n, -1);
    std::queue<std::size_t> frontier;
    level[0] = 0;
    frontier.push(0);
    while (!frontier.empty()) {
        std::size_t v = frontier.front();
        frontier.pop();
        for (std::size_t w : succ[v])
            if (level[w] < 0) {
                level[w] = level[v] + 1;
                frontier.push(w);
            }
    }
    long g = 0;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : succ[v]) g = std::gcd(g, std::labs(level[v] + 1 - level[w]));
    Periodicity out;
    out.period = static_cast<std::size_t>(g);
    out.primitive = g == 1;
    return out;
}

namespace {

using BitMatrix = std::vector<std::vector<u64>>;

BitMatrix bit_multiply(const BitMatrix& x, const BitMatrix& y, std::size_t n) {
    const std::size_t words = (n + 63) / 64;
    BitMatrix out(n, std::vector<u64>(words, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if ((x[i][k / 64] >> (k % 64)) & 1)
                for (std::size_t w = 0; w < words; ++w) out[i][w] |= y[k][w];
    return out;
}

}  // namespace

bool primitive_by_powering(const NonNegIntMatrix& a) {
    require_square(a);
    const std::size_t n = a.rows();
    const std::size_t words = (n + 63) / 64;
    BitMatrix base(n, std::vector<u64>(words, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) > 0) base[i][j / 64] |= u64{1} << (j % 64);
    std::uint64_t e = static_cast<std::uint64_t>(n - 1) * (n - 1) + 1;
    BitMatrix result;
    bool have = false;
    while (e) {
        if (e & 1) {
            result = have ? bit_multiply(result, base, n) : base;
            have = true;
        }
        e >>= 1;
        if (e) base = bit_multiply(base, base, n);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!((result[i][j / 64] >> (j % 64)) & 1)) return false;
    return true;
}

NonNegIntMatrix nth_root_matrix(const NonNegIntMatrix& a, int n) {
    require_square(a);
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "root order must be positive");
    if (n == 1) return a;
    const std::size_t m = a.rows();
    const std::size_t blocks = static_cast<std::size_t>(n);
    NonNegIntMatrix out(blocks * m, blocks * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, m + j) = a(i, j);
    for (std::size_t b = 1; b < blocks; ++b) {
        const std::size_t next = (b + 1) % blocks;
        for (std::size_t i = 0; i < m; ++i) out(b * m + i, next * m + i) = 1;
    }
    return out;
}

bool meets_primitive_threshold(const FieldContext& ctx) {
    const Interval& rho = ctx.rho();
    if (rho.hi >= 1) return false;
    const mpq_class needed = 1 + mpq_class(4) / (1 - rho.hi);
    return ctx.lambda_within(mpq_class(1, 1000000000)).lo >= needed;
}

NonNegIntMatrix primitive_upgrade(const FieldContext& ctx,
                                  const std::function<NonNegIntMatrix(const IntPolynomial&)>& construct) {
    if (!meets_primitive_threshold(ctx))
        throw Error(ErrorKind::ThresholdNotMet, "lambda is below 1 + 4/(1 - rho)");
    NonNegIntMatrix shifted = construct(ctx.poly().taylor_shift(1));
    NonNegIntMatrix out = shifted;
    for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) += 1;
    if (!is_irreducible(out) || !certify_spectral_radius(ctx, out).matches_lambda)
        throw Error(ErrorKind::CertificationFailed, "shifted construction does not realize lambda");
    return out;
}

mpz_class EdgeShiftGraph::edge_count() const {
    mpz_class total = 0;
    for (const auto& e : edges) total += e.multiplicity;
    return total;
}

NonNegIntMatrix EdgeShiftGraph::to_matrix() const {
    NonNegIntMatrix out(vertices, vertices, 0);
    for (const auto& e : edges) out(e.from, e.to) += e.multiplicity;
    return out;
}

EdgeShiftGraph to_edge_shift(const NonNegIntMatrix& a) {
    require_square(a);
    require_nonnegative(a);
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        bool row = false, col = false;
        for (std::size_t j = 0; j < n; ++j) {
            row = row || a(i, j) > 0;
            col = col || a(j, i) > 0;
        }
        if (!row || !col)
            throw Error(ErrorKind::DegenerateMatrix, "vertex " + std::to_string(i) + " has no outgoing or incoming edge");
    }
    EdgeShiftGraph g;
    g.vertices = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) > 0) g.edges.push_back({i, j, a(i, j)});
    return g;
}

std::string to_dot(const EdgeShiftGraph& g, DotStyle style) {
    if (style == DotStyle::Parallel && g.edge_count() > 1000000)
        throw Error(ErrorKind::DimensionTooLarge, "too many parallel edges to draw");
    std::ostringstream out;
    out << "digraph edge_shift {\n  rankdir=LR;\n";
    for (std::size_t v = 0; v < g.vertices; ++v) out << "  v" << v << ";\n";
    for (const auto& e : g.edges) {
        if (style == DotStyle::Labels) {
            out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.multiplicity.get_str() << "\"];\n";
        } else {
            for (mpz_class k = 0; k < e.multiplicity; ++k) out << "  v" << e.from << " -> v" << e.to << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace perron
