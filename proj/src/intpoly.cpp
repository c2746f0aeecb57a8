#include "perron/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "perron/errors.hpp"
#include "perron/matrix.hpp"

namespace perron {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
    std::vector<mpz_class> coeffs;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) throw Error(ErrorKind::Parse, "empty coefficient in polynomial '" + std::string(text) + "'");
        mpz_class c;
        std::string digits = token[0] == '+' ? token.substr(1) : token;
        if (digits.empty() || c.set_str(digits, 10) != 0)
            throw Error(ErrorKind::Parse, "bad coefficient '" + token + "'");
        coeffs.push_back(c);
        token.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == ',') {
            flush();
        } else {
            token.push_back(ch);
        }
    }
    flush();
    IntPolynomial p(std::move(coeffs));
    if (p.is_zero()) throw Error(ErrorKind::Parse, "zero polynomial");
    return p;
}

IntPolynomial IntPolynomial::monomial(int n) {
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1, 0);
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() < 1) return {};
    std::vector<mpz_class> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::taylor_shift(const mpz_class& a) const {
    // Horner in the ring Z[x]: ((c_d)(x+a) + c_{d-1})(x+a) + ...
    IntPolynomial shift(std::vector<mpz_class>{a, 1});
    IntPolynomial out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        out = out * shift + IntPolynomial(std::vector<mpz_class>{*it});
    }
    return out;
}

IntPolynomial IntPolynomial::reflect() const {
    std::vector<mpz_class> c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::substitute_power(int n) const {
    if (is_zero()) return {};
    std::vector<mpz_class> c(static_cast<std::size_t>(degree()) * n + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * n] = coeffs_[i];
    return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::string IntPolynomial::to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i].get_str();
    }
    return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const mpz_class& s, const IntPolynomial& a) {
    std::vector<mpz_class> c = a.coeffs();
    for (auto& x : c) x *= s;
    return IntPolynomial(std::move(c));
}

MonicDivision divide_monic(const IntPolynomial& a, const IntPolynomial& b) {
    if (!b.is_monic()) throw Error(ErrorKind::InvalidArgument, "divisor must be monic");
    std::vector<mpz_class> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {IntPolynomial(), a};
    std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        mpz_class q = rem[static_cast<std::size_t>(i)];
        if (q == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<mpz_class> rem = a.coeffs();
    const int db = b.degree();
    std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        const mpz_class& r = rem[static_cast<std::size_t>(i)];
        if (r == 0) continue;
        if (!mpz_divisible_p(r.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
        mpz_class q = r / b.leading();
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

mpz_class content(const IntPolynomial& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    mpz_class g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<mpz_class> c = p.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(c));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "pseudo-division by zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<mpz_class> rem = a.coeffs();
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        mpz_class r = rem[static_cast<std::size_t>(i)];
        for (auto& x : rem) x *= lb;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= r * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return IntPolynomial(std::move(rem));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial x = primitive_part(a);
    IntPolynomial y = primitive_part(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_remainder(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return primitive_part(x);
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.degree() < 1) return primitive_part(p);
    IntPolynomial g = gcd(p, p.derivative());
    if (g.degree() == 0) return primitive_part(p);
    auto q = exact_quotient(primitive_part(p), g);
    if (!q) throw Error(ErrorKind::InvalidArgument, "gcd does not divide its argument");
    return primitive_part(*q);
}

int sign_at(const IntPolynomial& p, const mpq_class& x) { return sgn(p.eval(x)); }

BigComplex eval(const IntPolynomial& p, const BigComplex& x) {
    BigComplex acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x;
        acc.re += to_big(*it);
    }
    return acc;
}

SanityReport squarefree_and_no_rational_root(const IntPolynomial& p) {
    SanityReport report;
    if (!p.is_monic()) {
        report.diagnostic = "polynomial is not monic";
        return report;
    }
    if (p.degree() < 1) {
        report.diagnostic = "polynomial has degree < 1";
        return report;
    }
    IntPolynomial g = gcd(p, p.derivative());
    report.squarefree = g.degree() == 0;
    if (!report.squarefree) {
        report.diagnostic = "not squarefree: gcd(p, p') = " + g.to_string();
        return report;
    }
    if (p.degree() == 1) {
        // The linear case is its own minimal polynomial.
        report.ok = true;
        report.diagnostic = "linear";
        return report;
    }
    // A rational root of a monic integer polynomial is an integer; locate it
    // through the isolated real roots.
    auto roots = certified_roots_adaptive(p, 128, 4096);
    for (const auto& root : roots) {
        if (!root.is_real) continue;
        mpq_class lo = to_rational(root.center.re - root.radius);
        mpq_class hi = to_rational(root.center.re + root.radius);
        mpz_class from;
        mpz_class to;
        mpz_cdiv_q(from.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        mpz_fdiv_q(to.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
        for (mpz_class n = from; n <= to; ++n) {
            if (p.eval(n) == 0) {
                report.rational_root = n;
                report.diagnostic = "rational root " + n.get_str();
                return report;
            }
        }
    }
    report.ok = true;
    report.diagnostic = "squarefree, no rational root";
    return report;
}

BigFloat CertifiedRoot::abs_lower() const {
    BigFloat a = center.abs() - radius;
    return a < 0 ? BigFloat(0) : a;
}

BigFloat CertifiedRoot::abs_upper() const { return center.abs() + radius; }

namespace {

BigFloat two_pow(long e) {
    BigFloat x = 1;
    mpfr_mul_2si(x.backend().data(), x.backend().data(), e, MPFR_RNDN);
    return x;
}

struct Approximation {
    std::vector<BigComplex> z;
};

// Aberth-Ehrlich simultaneous iteration.
std::vector<BigComplex> aberth(const IntPolynomial& p, unsigned bits, int max_iter) {
    const int d = p.degree();
    std::vector<BigFloat> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(to_big(x));
    IntPolynomial dp = p.derivative();
    std::vector<BigFloat> dc;
    for (const auto& x : dp.coeffs()) dc.push_back(to_big(x));

    // Starting circle: geometric mean of root moduli, clamped by the Cauchy bound.
    BigFloat lead = abs(c.back());
    BigFloat cauchy = 0;
    for (int i = 0; i < d; ++i) cauchy = std::max(cauchy, BigFloat(abs(c[i]) / lead));
    cauchy += 1;
    BigFloat r0 = abs(c[0]) / lead;
    r0 = r0 == 0 ? BigFloat(1) : BigFloat(pow(r0, BigFloat(1) / d));
    if (r0 > cauchy) r0 = cauchy;
    if (r0 < BigFloat("1e-6")) r0 = BigFloat("1e-6");

    const BigFloat pi = boost::multiprecision::atan(BigFloat(1)) * 4;
    std::vector<BigComplex> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        BigFloat angle = pi * 2 * k / d + BigFloat("0.4");
        z[static_cast<std::size_t>(k)] = BigComplex(r0 * cos(angle), r0 * sin(angle));
    }

    const BigFloat tol = two_pow(-static_cast<long>(bits) + 6);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool converged = true;
        for (int k = 0; k < d; ++k) {
            auto& zk = z[static_cast<std::size_t>(k)];
            BigComplex pv;
            BigComplex dv;
            for (int i = d; i >= 0; --i) {
                pv = pv * zk;
                pv.re += c[static_cast<std::size_t>(i)];
            }
            for (int i = d - 1; i >= 0; --i) {
                dv = dv * zk;
                dv.re += dc[static_cast<std::size_t>(i)];
            }
            if (pv.re == 0 && pv.im == 0) continue;
            BigComplex ratio;
            if (dv.re == 0 && dv.im == 0) {
                ratio = BigComplex(tol * (abs(zk.re) + 1), tol);
            } else {
                ratio = pv / dv;
            }
            BigComplex sum;
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                BigComplex diff = zk - z[static_cast<std::size_t>(j)];
                if (diff.re == 0 && diff.im == 0) diff.re = tol;
                sum = sum + BigComplex(BigFloat(1), BigFloat(0)) / diff;
            }
            BigComplex denom = BigComplex(BigFloat(1), BigFloat(0)) - ratio * sum;
            BigComplex step = (denom.re == 0 && denom.im == 0) ? ratio : ratio / denom;
            zk = zk - step;
            BigFloat scale = zk.abs();
            if (scale < 1) scale = 1;
            if (step.abs() > tol * scale) converged = false;
        }
        if (converged) break;
    }
    return z;
}

}  // namespace

std::vector<CertifiedRoot> certified_roots(const IntPolynomial& p, unsigned bits) {
    const int d = p.degree();
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "certified_roots needs degree >= 1");
    PrecisionScope scope(bits);

    if (d == 1) {
        mpq_class root(-p.coeffs()[0], p.coeffs()[1]);
        root.canonicalize();
        CertifiedRoot out;
        out.center = BigComplex(to_big(root));
        out.is_real = true;
        out.radius = to_rational(out.center.re) == root ? BigFloat(0) : BigFloat(abs(out.center.re) * two_pow(2 - static_cast<long>(bits)));
        return {out};
    }

    std::vector<BigComplex> z = aberth(p, bits, 60 + 12 * d + static_cast<int>(bits) / 4);

    const BigFloat unit = two_pow(1 - static_cast<long>(bits));
    const BigFloat lead = abs(to_big(p.leading()));
    const BigFloat safety = BigFloat(1) + unit * (64 * (d + 1));
    std::vector<CertifiedRoot> roots(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        const BigComplex& zk = z[static_cast<std::size_t>(k)];
        BigComplex pv = eval(p, zk);
        // Horner rounding bound: 8(d+1) u sum |c_i| |z|^i.
        BigFloat az = zk.abs();
        BigFloat mag = 0;
        for (int i = d; i >= 0; --i) mag = mag * az + abs(to_big(p.coeffs()[static_cast<std::size_t>(i)]));
        BigFloat err = unit * (8 * (d + 1)) * mag;
        BigFloat prod = lead;
        for (int j = 0; j < d; ++j) {
            if (j == k) continue;
            prod *= (zk - z[static_cast<std::size_t>(j)]).abs();
        }
        CertifiedRoot& root = roots[static_cast<std::size_t>(k)];
        root.center = zk;
        if (prod == 0) throw Error(ErrorKind::PrecisionExhausted, "coincident root approximations");
        root.radius = BigFloat(d) * (pv.abs() + err) / prod * safety;
    }

    auto disjoint = [&](const std::vector<CertifiedRoot>& rs) {
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = i + 1; j < rs.size(); ++j) {
                BigFloat gap = (rs[i].center - rs[j].center).abs();
                if (gap <= (rs[i].radius + rs[j].radius) * safety) return false;
            }
        return true;
    };
    if (!disjoint(roots)) {
        throw Error(ErrorKind::PrecisionExhausted,
                    "root discs overlap at " + std::to_string(bits) + " bits");
    }

    // A disc meeting the real axis is symmetrized; it then holds exactly one
    // root, which must equal its own conjugate.
    for (auto& root : roots) {
        if (abs(root.center.im) <= root.radius) {
            root.radius += abs(root.center.im);
            root.center.im = 0;
            root.is_real = true;
        }
    }
    if (!disjoint(roots)) {
        throw Error(ErrorKind::PrecisionExhausted,
                    "real-axis discs overlap at " + std::to_string(bits) + " bits");
    }

    std::sort(roots.begin(), roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
        if (a.is_real != b.is_real) return a.is_real;
        if (a.is_real) return a.center.re > b.center.re;
        if (a.center.re != b.center.re) return a.center.re < b.center.re;
        return a.center.im < b.center.im;
    });
    std::size_t nonreal = 0;
    for (const auto& r : roots) nonreal += r.is_real ? 0 : 1;
    if (nonreal % 2 != 0) throw Error(ErrorKind::PrecisionExhausted, "unpaired complex root");
    return roots;
}

std::vector<CertifiedRoot> certified_roots_adaptive(const IntPolynomial& p, unsigned start_bits,
                                                    unsigned max_bits, unsigned* used_bits) {
    unsigned bits = std::max(start_bits, 64u);
    for (;;) {
        try {
            auto roots = certified_roots(p, bits);
            if (used_bits) *used_bits = bits;
            return roots;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PrecisionExhausted || bits * 2 > max_bits) throw;
            bits *= 2;
        }
    }
}

mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b) {
    const int m = a.degree();
    const int n = b.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    if (m == 0) {
        mpz_class out;
        mpz_pow_ui(out.get_mpz_t(), a.leading().get_mpz_t(), static_cast<unsigned long>(n));
        return out;
    }
    if (n == 0) {
        mpz_class out;
        mpz_pow_ui(out.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(m));
        return out;
    }
    const std::size_t size = static_cast<std::size_t>(m + n);
    IntMatrix s(size, size, 0);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + i)) = a.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + i)) = b.coeff(n - i);
    return determinant(std::move(s));
}

mpz_class discriminant(const IntPolynomial& p) {
    const int d = p.degree();
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "discriminant needs degree >= 1");
    if (d == 1) return 1;
    mpz_class res = resultant(p, p.derivative());
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), p.leading().get_mpz_t());
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) out = -out;
    return out;
}

SturmSequence::SturmSequence(const IntPolynomial& squarefree) {
    if (squarefree.is_zero()) throw Error(ErrorKind::InvalidArgument, "Sturm chain of zero");
    chain_.push_back(primitive_part(squarefree));
    if (squarefree.degree() == 0) return;
    chain_.push_back(primitive_part(squarefree.derivative()));
    while (chain_.back().degree() > 0) {
        const IntPolynomial& a = chain_[chain_.size() - 2];
        const IntPolynomial& b = chain_.back();
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        // prem = lc(b)^e * rem; the chain needs -rem up to a positive factor.
        const int e = a.degree() - b.degree() + 1;
        int lead_sign = -sgn(r.leading());
        if (b.leading() < 0 && e % 2 != 0) lead_sign = -lead_sign;
        IntPolynomial next = primitive_part(r);
        if (lead_sign < 0) next = mpz_class(-1) * next;
        chain_.push_back(std::move(next));
    }
}

int SturmSequence::variations_at(const mpq_class& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int SturmSequence::variations_at_infinity(bool positive) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
        int s = sgn(p.leading());
        if (!positive && p.degree() % 2 != 0) s = -s;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int SturmSequence::count(const mpq_class& a, const mpq_class& b) const {
    if (b <= a) return 0;
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_above(const mpq_class& a) const {
    return variations_at(a) - variations_at_infinity(true);
}

int SturmSequence::count_real() const {
    return variations_at_infinity(false) - variations_at_infinity(true);
}

void bisect(const IntPolynomial& p, IsolatingInterval& iv) {
    mpq_class mid = (iv.lo + iv.hi) / 2;
    int sm = sign_at(p, mid);
    if (sm == 0) {
        // Root found exactly; shrink to a degenerate interval around it.
        iv.lo = mid;
        iv.hi = mid;
        return;
    }
    if (sm == sign_at(p, iv.lo)) {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
}

namespace {

struct RatRange {
    mpq_class lo;
    mpq_class hi;
};

RatRange eval_range(const IntPolynomial& g, const IsolatingInterval& x) {
    RatRange acc{0, 0};
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) {
        mpq_class a = acc.lo * x.lo;
        mpq_class b = acc.lo * x.hi;
        mpq_class c = acc.hi * x.lo;
        mpq_class d = acc.hi * x.hi;
        acc.lo = std::min({a, b, c, d}) + mpq_class(*it);
        acc.hi = std::max({a, b, c, d}) + mpq_class(*it);
    }
    return acc;
}

}  // namespace

int sign_at_root(const IntPolynomial& p, IsolatingInterval iv, const IntPolynomial& g) {
    for (int iter = 0; iter < 4000; ++iter) {
        RatRange r = eval_range(g, iv);
        if (r.lo > 0) return 1;
        if (r.hi < 0) return -1;
        if (iv.lo == iv.hi) return sgn(g.eval(iv.lo));
        bisect(p, iv);
    }
    throw Error(ErrorKind::Indeterminate, "sign at root not decided; polynomial may vanish there");
}

}  // namespace perron
