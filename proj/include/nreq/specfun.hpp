#ifndef NREQ_SPECFUN_HPP
#define NREQ_SPECFUN_HPP

#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nreq::specfun {

using Complex = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Largest Bernoulli index kept in the default exact table.
inline constexpr int bernoulli_default_max = 64;

// Exact Bernoulli number, reduced, denominator > 0. Convention B_1 = -1/2
// (the x/(e^x - 1) generating function).
struct RationalB {
    BigInt num;
    BigInt den;

    double to_double() const;
    std::string str() const;
    bool operator==(const RationalB& o) const { return num == o.num && den == o.den; }
};

// Exact Bernoulli table built once from the binomial recurrence
// sum_{j=0}^{k} C(k+1, j) B_j = 0. Immutable after construction.
class BernoulliTable {
public:
    explicit BernoulliTable(int k_max = bernoulli_default_max);
    const RationalB& at(int k) const;           // throws CapacityError past k_max
    int k_max() const { return k_max_; }
private:
    int k_max_;
    std::vector<RationalB> table_;
};

// Shared default table (thread-safe lazy init, immutable afterwards).
const RationalB& bernoulli(int k);
double bernoulli_d(int k);

// Riemann zeta at integer argument n >= 2. Even n up to the Bernoulli
// table limit are exact via zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!);
// everything else is summed directly with an Euler-Maclaurin tail.
double zeta_int(int n);

// The direct-summation route on its own, for cross-checking the exact path.
double zeta_by_series(int n);

// Digamma for complex argument: upward recurrence to |s| >= 12, Bernoulli
// asymptotic series through B_20, reflection for Re s < 0.5.
// Throws PoleError within 1e-12 of a non-positive integer.
Complex digamma(Complex s);

// Trigamma, same strategy (reflection via pi^2/sin^2).
Complex trigamma(Complex s);

// Chebyshev polynomial of the second kind, stable three-term recurrence.
double chebyshev_u(int n, double x);

// pi * cot(pi z), overflow-safe for any imaginary part. Used by the
// digamma reflection formula; exposed for reuse and testing.
Complex pi_cot_pi(Complex z);

} // namespace nreq::specfun

#endif
