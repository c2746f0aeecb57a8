#include "perron/exact_lp.hpp"

#include <cassert>

namespace perron {

namespace {

// Tableau for min sum(artificials) s.t. [A | I] (x, y) = b, b >= 0.
class PhaseOne {
public:
    PhaseOne(const RatMatrix& a, const RatVec& b)
        : m_(a.rows()), n_(a.cols()), t_(a.rows() + 1, a.cols() + a.rows() + 1, 0), basis_(a.rows()) {
        const std::size_t rhs = n_ + m_;
        for (std::size_t i = 0; i < m_; ++i) {
            const bool flip = b[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) t_(i, j) = flip ? mpq_class(-a(i, j)) : a(i, j);
            t_(i, n_ + i) = 1;
            t_(i, rhs) = flip ? mpq_class(-b[i]) : b[i];
            basis_[i] = n_ + i;
        }
        // Reduced costs of the artificial objective.
        for (std::size_t j = 0; j <= rhs; ++j) {
            if (j >= n_ && j < rhs) continue;
            mpq_class s = 0;
            for (std::size_t i = 0; i < m_; ++i) s += t_(i, j);
            t_(m_, j) = -s;
        }
    }

    bool solve() {
        const std::size_t rhs = n_ + m_;
        for (;;) {
            // Bland: lowest-index column with negative reduced cost.
            std::size_t enter = rhs;
            for (std::size_t j = 0; j < rhs; ++j)
                if (t_(m_, j) < 0) {
                    enter = j;
                    break;
                }
            if (enter == rhs) break;
            std::size_t leave = m_;
            mpq_class best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_(i, enter) <= 0) continue;
                mpq_class ratio = t_(i, rhs) / t_(i, enter);
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) break;  // unbounded cannot occur in Phase I
            pivot(leave, enter);
        }
        return t_(m_, rhs) == 0;
    }

    RatVec solution() const {
        RatVec x(n_, 0);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = t_(i, n_ + m_);
        return x;
    }

private:
    void pivot(std::size_t r, std::size_t c) {
        const std::size_t width = t_.cols();
        mpq_class p = t_(r, c);
        for (std::size_t j = 0; j < width; ++j) t_(r, j) /= p;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || t_(i, c) == 0) continue;
            mpq_class f = t_(i, c);
            for (std::size_t j = 0; j < width; ++j)
                if (t_(r, j) != 0) t_(i, j) -= f * t_(r, j);
        }
        basis_[r] = c;
    }

    std::size_t m_;
    std::size_t n_;
    RatMatrix t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<RatVec> nonnegative_solution(const RatMatrix& a, const RatVec& b) {
    assert(a.rows() == b.size());
    PhaseOne lp(a, b);
    if (!lp.solve()) return std::nullopt;
    return lp.solution();
}

std::optional<RatVec> unit_box_solution(const RatMatrix& a, const RatVec& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    // [A 0; I I] (x, s) = (b, 1)
    RatMatrix big(m + n, 2 * n, 0);
    RatVec rhs(m + n, 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) big(i, j) = a(i, j);
        rhs[i] = b[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
        big(m + j, j) = 1;
        big(m + j, n + j) = 1;
    }
    auto sol = nonnegative_solution(big, rhs);
    if (!sol) return std::nullopt;
    sol->resize(n);
    return sol;
}

RatMatrix columns_to_rational(const std::vector<IntVec>& columns) {
    const std::size_t d = columns.empty() ? 0 : columns[0].size();
    RatMatrix out(d, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) out(i, j) = columns[j][i];
    return out;
}

}  // namespace perron
