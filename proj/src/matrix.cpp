#include "perron/matrix.hpp"

#include <utility>

#include "perron/errors.hpp"

namespace perron {

mpz_class determinant(IntMatrix m) {
    assert(m.square());
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        }
        prev = m(k, k);
    }
    mpz_class det = m(n - 1, n - 1);
    return sign > 0 ? det : mpz_class(-det);
}

mpq_class determinant(RatMatrix m) {
    assert(m.square());
    const std::size_t n = m.rows();
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            mpq_class f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& input) {
    assert(input.square());
    const std::size_t n = input.rows();
    RatMatrix m = input;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0) ++pivot;
        if (pivot == n) throw Error(ErrorKind::InvalidArgument, "matrix is singular");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        mpq_class p = m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            mpq_class f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

}  // namespace perron
