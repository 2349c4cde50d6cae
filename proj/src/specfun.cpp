#include "nreq/specfun.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "nreq/errors.hpp"

namespace nreq::specfun {

namespace {

constexpr double pi = std::numbers::pi;

// |s - nearest non-positive integer| below this counts as sitting on a pole.
constexpr double pole_tol = 1e-12;

// Shift radius for the digamma/trigamma asymptotic series.
constexpr double asym_radius = 12.0;

BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

RationalB reduced(BigInt num, BigInt den) {
    if (den < 0) { num = -num; den = -den; }
    BigInt g = big_gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
    return RationalB{std::move(num), std::move(den)};
}

// Asymptotic coefficients B_2 .. B_20 as doubles (exact table is the source).
const std::vector<double>& asym_bernoulli() {
    static const std::vector<double> coeffs = [] {
        std::vector<double> c;
        for (int n = 1; n <= 10; ++n) c.push_back(bernoulli_d(2 * n));
        return c;
    }();
    return coeffs;
}

long nearest_nonpositive_integer(Complex s) {
    return std::lround(std::min(s.real(), 0.0));
}

void check_pole(Complex s, const char* fn) {
    if (s.real() > 0.5) return;
    long k = std::lround(s.real());
    if (k > 0) return;
    if (std::abs(s - Complex(static_cast<double>(k), 0.0)) < pole_tol)
        throw PoleError(std::string(fn) + ": argument at pole", k);
}

// Asymptotic expansion, valid once |s| >= asym_radius with Re s > 0-ish:
// psi(s) ~ log s - 1/(2s) - sum B_{2n} / (2n s^{2n}).
Complex digamma_asymptotic(Complex s) {
    Complex r = std::log(s) - 0.5 / s;
    Complex s2 = s * s;
    Complex p = s2;
    const auto& b = asym_bernoulli();
    for (std::size_t n = 0; n < b.size(); ++n) {
        r -= b[n] / (2.0 * static_cast<double>(n + 1) * p);
        p *= s2;
    }
    return r;
}

// psi'(s) ~ 1/s + 1/(2 s^2) + sum B_{2n} / s^{2n+1}
Complex trigamma_asymptotic(Complex s) {
    Complex inv = 1.0 / s;
    Complex inv2 = inv * inv;
    Complex r = inv + 0.5 * inv2;
    Complex p = inv * inv2;
    const auto& b = asym_bernoulli();
    for (std::size_t n = 0; n < b.size(); ++n) {
        r += b[n] * p;
        p *= inv2;
    }
    return r;
}

// 1/sin(pi z), overflow-safe: phase-reduce the real part, switch to the
// one-sided exponential form when |Im| is large.
Complex inv_sin_pi(Complex z) {
    double x = z.real(), y = z.imag();
    double r = x - std::round(x);
    double sign = (std::lround(x) % 2 == 0) ? 1.0 : -1.0; // sin(pi(z-n)) = (-1)^n sin(pi z)
    Complex zr(r, y);
    if (std::abs(y) <= 1.0)
        return sign / std::sin(pi * zr);
    const Complex i(0.0, 1.0);
    if (y > 0.0) {
        Complex w = std::exp(2.0 * i * pi * zr);       // |w| = e^{-2 pi y} <= 1
        return sign * 2.0 * i * std::exp(i * pi * zr) / (w - 1.0);
    }
    Complex w = std::exp(-2.0 * i * pi * zr);
    return sign * (-2.0 * i) * std::exp(-i * pi * zr) / (w - 1.0);
}

} // namespace

double RationalB::to_double() const {
    // Scale down in tandem so huge numerators stay inside double range.
    BigInt n = num, d = den;
    while (boost::multiprecision::msb(abs(n) + 1) > 900 ||
           boost::multiprecision::msb(d) > 900) {
        n >>= 64;
        d >>= 64;
        if (d == 0) return 0.0;
    }
    return n.convert_to<double>() / d.convert_to<double>();
}

std::string RationalB::str() const {
    return num.str() + "/" + den.str();
}

BernoulliTable::BernoulliTable(int k_max) : k_max_(k_max) {
    if (k_max < 0) throw DomainError("BernoulliTable: negative k_max");
    table_.reserve(static_cast<std::size_t>(k_max) + 1);
    // Pascal row of C(k+1, j), rebuilt incrementally.
    for (int k = 0; k <= k_max; ++k) {
        if (k == 0) {
            table_.push_back(RationalB{1, 1});
            continue;
        }
        // B_k = -1/(k+1) * sum_{j=0}^{k-1} C(k+1, j) B_j, exact rationals.
        BigInt binom = 1; // C(k+1, 0)
        BigInt acc_num = 0, acc_den = 1;
        for (int j = 0; j < k; ++j) {
            // acc += binom * B_j
            acc_num = acc_num * table_[j].den + binom * table_[j].num * acc_den;
            acc_den *= table_[j].den;
            BigInt g = big_gcd(acc_num, acc_den);
            if (g > 1) { acc_num /= g; acc_den /= g; }
            binom = binom * (k + 1 - j) / (j + 1); // -> C(k+1, j+1)
        }
        table_.push_back(reduced(-acc_num, acc_den * (k + 1)));
    }
}

const RationalB& BernoulliTable::at(int k) const {
    if (k < 0) throw DomainError("bernoulli: negative index");
    if (k > k_max_)
        throw CapacityError("bernoulli: index " + std::to_string(k) +
                            " exceeds table limit " + std::to_string(k_max_));
    return table_[static_cast<std::size_t>(k)];
}

const RationalB& bernoulli(int k) {
    static const BernoulliTable table;
    return table.at(k);
}

double bernoulli_d(int k) { return bernoulli(k).to_double(); }

double zeta_by_series(int n) {
    if (n < 2) throw DomainError("zeta_int: argument must be >= 2");
    // Direct sum to N-1, then Euler-Maclaurin tail from j = N:
    // sum_{j=N}^inf j^-n = N^{1-n}/(n-1) + N^-n/2 + sum_k B_{2k}/(2k)! (n)_{2k-1} N^{-(n+2k-1)}
    const int cut = 16;
    double s = 0.0;
    for (int j = cut - 1; j >= 1; --j) s += std::pow(j, -n);
    const double nn = static_cast<double>(n);
    const double invN = 1.0 / cut;
    double tail = std::pow(cut, 1.0 - nn) / (nn - 1.0) + 0.5 * std::pow(cut, -nn);
    double rising = nn;                       // (n)_1
    double fact = 1.0;                        // (2k)!
    double npow = std::pow(cut, -nn - 1.0);   // N^{-(n+2k-1)}, k = 1
    for (int k = 1; k <= 12; ++k) {
        fact *= (2.0 * k - 1.0) * (2.0 * k);
        double term = bernoulli_d(2 * k) / fact * rising * npow;
        tail += term;
        if (std::abs(term) < 1e-18 * (s + tail)) break;
        rising *= (nn + 2.0 * k - 1.0) * (nn + 2.0 * k);
        npow *= invN * invN;
    }
    return s + tail;
}

double zeta_int(int n) {
    if (n < 2) throw DomainError("zeta_int: argument must be >= 2");
    if (n % 2 == 0 && n <= bernoulli_default_max) {
        // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
        int m = n / 2;
        double fact = 1.0;
        for (int j = 2; j <= n; ++j) fact *= j;
        double sgn = (m % 2 == 0) ? -1.0 : 1.0;
        return sgn * bernoulli_d(n) * std::pow(2.0 * pi, n) / (2.0 * fact);
    }
    return zeta_by_series(n);
}

Complex pi_cot_pi(Complex z) {
    double x = z.real(), y = z.imag();
    double r = x - std::round(x); // cot(pi z) is 1-periodic
    Complex zr(r, y);
    if (std::abs(y) <= 1.0)
        return pi * std::cos(pi * zr) / std::sin(pi * zr);
    const Complex i(0.0, 1.0);
    if (y > 0.0) {
        Complex w = std::exp(2.0 * i * pi * zr);
        return pi * i * (w + 1.0) / (w - 1.0);
    }
    Complex w = std::exp(-2.0 * i * pi * zr);
    return pi * i * (1.0 + w) / (w - 1.0);
}

Complex digamma(Complex s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("digamma: non-finite argument");
    check_pole(s, "digamma");
    if (s.real() < 0.5) {
        // psi(s) = psi(1-s) - pi cot(pi s)
        return digamma(1.0 - s) - pi_cot_pi(s);
    }
    Complex shift = 0.0;
    while (std::abs(s) < asym_radius) {
        shift -= 1.0 / s;
        s += 1.0;
    }
    return digamma_asymptotic(s) + shift;
}

Complex trigamma(Complex s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("trigamma: non-finite argument");
    check_pole(s, "trigamma");
    if (s.real() < 0.5) {
        // psi'(s) = pi^2 / sin^2(pi s) - psi'(1-s)
        Complex inv_sin = inv_sin_pi(s);
        return pi * pi * inv_sin * inv_sin - trigamma(1.0 - s);
    }
    Complex shift = 0.0;
    while (std::abs(s) < asym_radius) {
        shift += 1.0 / (s * s);
        s += 1.0;
    }
    return trigamma_asymptotic(s) + shift;
}

double chebyshev_u(int n, double x) {
    if (n < 0) throw DomainError("chebyshev_u: negative order");
    if (!std::isfinite(x)) throw DomainError("chebyshev_u: non-finite argument");
    double u0 = 1.0;
    if (n == 0) return u0;
    double u1 = 2.0 * x;
    for (int k = 2; k <= n; ++k) {
        double u2 = 2.0 * x * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    return u1;
}

} // namespace nreq::specfun

// keep nearest_nonpositive_integer referenced even though check_pole computes
// its own rounding; silence unused warning portably
namespace {
[[maybe_unused]] const auto* nreq_specfun_anchor = &nreq::specfun::euler_gamma;
}
