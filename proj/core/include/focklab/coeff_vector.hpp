#ifndef FOCKLAB_COEFF_VECTOR_HPP
#define FOCKLAB_COEFF_VECTOR_HPP

#include "focklab/truncation.hpp"

#include <Eigen/Dense>

#include <complex>

namespace focklab {

/// Element of the truncated Fock space as coefficients against the
/// orthonormal monomial basis e_k(z) = sqrt(alpha^k / k!) z^k.
/// ||f||_{alpha,2}^2 = sum |c_k|^2 exactly.
struct CoeffVector {
    TruncationParams params;
    Eigen::VectorXcd coeffs;

    CoeffVector() = default;
    CoeffVector(const TruncationParams& p, Eigen::VectorXcd c)
        : params(p), coeffs(std::move(c)) {
        if (coeffs.size() != p.size())
            throw std::invalid_argument("CoeffVector: coefficient count != degree + 1");
    }

    static CoeffVector zero(const TruncationParams& p) {
        return CoeffVector(p, Eigen::VectorXcd::Zero(p.size()));
    }
    static CoeffVector basis(const TruncationParams& p, int k) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(p.size());
        if (k < 0 || k > p.degree)
            throw std::invalid_argument("CoeffVector::basis: index out of range");
        c[k] = 1.0;
        return CoeffVector(p, std::move(c));
    }

    double norm2() const { return coeffs.norm(); }
};

/// Weighted basis value e_k(z) * exp(-alpha |z|^2 / 2), evaluated in the log
/// domain; finite for any finite z.
std::complex<double> weighted_basis_value(const TruncationParams& p, int k,
                                          std::complex<double> z);

/// All weighted basis values at z as a (degree+1)-vector.
Eigen::VectorXcd weighted_basis_row(const TruncationParams& p, std::complex<double> z);

/// f(z) * exp(-alpha |z|^2 / 2) = sum c_k ehat_k(z); total, overflow-safe.
std::complex<double> evaluate_weighted(const CoeffVector& f, std::complex<double> z);

} // namespace focklab

#endif
