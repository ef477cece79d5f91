#ifndef FOCKLAB_SPECIAL_HPP
#define FOCKLAB_SPECIAL_HPP

#include <complex>

namespace focklab {

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

/// log(k!) with k >= 0.
double log_factorial(int k);

/// Binomial coefficient as double (n up to a few hundred).
double binomial(int n, int k);

/// z^n for integer n >= 0 with the convention 0^0 = 1.
std::complex<double> ipow(std::complex<double> z, int n);

} // namespace focklab

#endif
