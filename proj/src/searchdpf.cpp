#include "perron/searchdpf.hpp"

#include <algorithm>
#include <cmath>

#include "perron/errors.hpp"

namespace perron {

const char* to_string(SearchMode mode) { return mode == SearchMode::Primitive ? "primitive" : "irreducible"; }

namespace {

mpz_class ceil_of(const mpq_class& q) {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

mpz_class floor_of(const mpq_class& q) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

class Searcher {
public:
    Searcher(const FieldContext& ctx, const SearchOptions& opt, SearchStats& stats, int n)
        : ctx_(ctx), opt_(opt), stats_(stats), n_(static_cast<std::size_t>(n)), entries_(n_ * n_, 0) {
        const IsolatingInterval iv = ctx.lambda_within(mpq_class(1, 1000000));
        lambda_lo_ = iv.lo;
        lambda_hi_ = iv.hi;
        mpq_class pow = 1;
        for (int k = 0; k < n; ++k) pow *= lambda_hi_;
        long bound = ceil_of(n * pow).get_si();
        if (opt.entry_cap) bound = std::min(bound, *opt.entry_cap);
        entry_bound_ = bound;

        const int d = ctx.degree();
        const mpq_class lambda_trace = -mpq_class(ctx.poly().coeff(d - 1));
        const mpq_class spread = (n - d) * lambda_hi_;
        trace_hi_ = floor_of(lambda_trace + spread).get_si();
        trace_lo_ = std::max(0L, ceil_of(lambda_trace - spread).get_si());
    }

    std::optional<NonNegIntMatrix> run() {
        if (entry_bound_ < 0) return std::nullopt;
        return descend(0, 0) ? std::optional(to_matrix()) : std::nullopt;
    }

private:
    long& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    NonNegIntMatrix to_matrix() const {
        NonNegIntMatrix m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = entries_[i * n_ + j];
        return m;
    }

    bool descend(std::size_t pos, long trace) {
        if (pos == n_ * n_) return leaf();
        const std::size_t i = pos / n_, j = pos % n_;
        for (long v = 0; v <= entry_bound_; ++v) {
            if (++stats_.nodes > opt_.budget)
                throw BudgetExceeded("search budget exhausted at dimension " + std::to_string(n_), stats_.nodes);
            at(i, j) = v;
            const long next_trace = trace + (i == j ? v : 0);
            if (opt_.prune) {
                // Entries only grow, so every violated monotone test ends the loop.
                if (i == j && (next_trace > trace_hi_ || v > lambda_hi_)) {
                    ++stats_.pruned;
                    break;
                }
                if (i > j && v * at(j, i) > 0 && mpq_class(v * at(j, i)) > lambda_hi_ * lambda_hi_) {
                    ++stats_.pruned;
                    break;
                }
                if (!partial_ok(i, j, next_trace)) {
                    ++stats_.pruned;
                    continue;
                }
            }
            if (descend(pos + 1, next_trace)) return true;
        }
        at(i, j) = 0;
        return false;
    }

    // Tests that become decidable once entry (i, j) completes a row.
    bool partial_ok(std::size_t i, std::size_t j, long trace) {
        if (j + 1 != n_) return true;
        long row = 0;
        for (std::size_t c = 0; c < n_; ++c) row += at(i, c);
        if (row == 0) return false;
        // The leading (i+1) x (i+1) block is now known; its spectral radius is
        // at most lambda, and at least its smallest row sum.
        const std::size_t k = i + 1;
        long min_row = -1;
        long trace_sq = 0;
        for (std::size_t r = 0; r < k; ++r) {
            long s = 0;
            for (std::size_t c = 0; c < k; ++c) {
                s += at(r, c);
                trace_sq += at(r, c) * at(c, r);
            }
            min_row = min_row < 0 ? s : std::min(min_row, s);
        }
        if (mpq_class(min_row) > lambda_hi_) return false;
        if (mpq_class(trace_sq) > k * lambda_hi_ * lambda_hi_) return false;
        if (i + 1 != n_) return true;

        if (trace < trace_lo_) return false;
        long max_row = 0;
        for (std::size_t r = 0; r < n_; ++r) {
            long s = 0;
            for (std::size_t c = 0; c < n_; ++c) s += at(r, c);
            max_row = std::max(max_row, s);
        }
        if (mpq_class(max_row) < lambda_lo_) return false;
        long min_col = -1, max_col = 0;
        for (std::size_t c = 0; c < n_; ++c) {
            long s = 0;
            for (std::size_t r = 0; r < n_; ++r) s += at(r, c);
            if (s == 0) return false;
            min_col = min_col < 0 ? s : std::min(min_col, s);
            max_col = std::max(max_col, s);
        }
        return mpq_class(min_col) <= lambda_hi_ && mpq_class(max_col) >= lambda_lo_;
    }

    bool leaf() {
        ++stats_.leaves;
        NonNegIntMatrix m = to_matrix();
        if (!is_irreducible(m)) return false;
        if (opt_.mode == SearchMode::Primitive && !period_and_primitivity(m).primitive) return false;
        IntPolynomial cp = charpoly_berkowitz(m);
        if (!exact_quotient(cp, ctx_.poly())) return false;
        return certify_spectral_radius(ctx_, m).matches_lambda;
    }

    const FieldContext& ctx_;
    const SearchOptions& opt_;
    SearchStats& stats_;
    std::size_t n_;
    std::vector<long> entries_;
    mpq_class lambda_lo_, lambda_hi_;
    long entry_bound_ = 0;
    long trace_lo_ = 0, trace_hi_ = 0;
};

}  // namespace

SearchResult brute_force_dpf(const FieldContext& ctx, const SearchOptions& options) {
    const int d = ctx.degree();
    if (options.n_max > search_dimension_ceiling)
        throw Error(ErrorKind::InvalidArgument, "n_max exceeds the search ceiling of " + std::to_string(search_dimension_ceiling));
    if (options.n_max < d) throw Error(ErrorKind::InvalidArgument, "n_max is below the degree");
    SearchResult result;
    result.mode = options.mode;
    for (int n = std::max(d, 1); n <= options.n_max; ++n) {
        Searcher searcher(ctx, options, result.stats, n);
        if (auto w = searcher.run()) {
            result.n_found = n;
            result.witness = std::move(w);
            return result;
        }
        result.exhausted_through = n;
    }
    return result;
}

IntPolynomial find_negative_trace_cubic(int box) {
    for (long a = 1; a <= box; ++a)
        for (long b = -box; b <= box; ++b)
            for (long c = -box; c <= box; ++c) {
                IntPolynomial p{c, b, a, 1};
                if (c == 0 || !squarefree_and_no_rational_root(p).ok) continue;
                try {
                    build_field_context(p);
                    return p;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::NotPerron && e.kind() != ErrorKind::Indeterminate) throw;
                }
            }
    throw Error(ErrorKind::NotFound, "no negative-trace Perron cubic in the coefficient box");
}

}  // namespace perron
