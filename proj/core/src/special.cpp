#include "focklab/special.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace focklab {

double gamma_p(double a, double x) {
    if (x <= 0.0) return 0.0;
    return boost::math::gamma_p(a, x);
}

double gamma_q(double a, double x) {
    if (x <= 0.0) return 1.0;
    return boost::math::gamma_q(a, x);
}

double log_factorial(int k) {
    if (k < 0) throw std::invalid_argument("log_factorial: negative argument");
    return std::lgamma(static_cast<double>(k) + 1.0);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
}

std::complex<double> ipow(std::complex<double> z, int n) {
    std::complex<double> r(1.0, 0.0);
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

} // namespace focklab
