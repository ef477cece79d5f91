#ifndef FOCKLAB_TRUNCATION_HPP
#define FOCKLAB_TRUNCATION_HPP

#include <cmath>
#include <stdexcept>

namespace focklab {

/// Ambient description of the truncated Fock space F_alpha^p in one
/// complex variable: Gaussian weight alpha and basis degree cutoff D
/// (orthonormal monomial basis indices k = 0..D).
struct TruncationParams {
    double alpha = 1.0;
    int degree = 40;

    TruncationParams() = default;
    TruncationParams(double alpha_, int degree_) : alpha(alpha_), degree(degree_) {
        validate();
    }

    void validate() const {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw std::invalid_argument("TruncationParams: alpha must be positive and finite");
        if (degree < 1)
            throw std::invalid_argument("TruncationParams: degree must be >= 1");
    }

    /// Radius inside which degree-D truncation claims are made.
    double trust_radius() const { return std::sqrt(static_cast<double>(degree) / alpha); }

    int size() const { return degree + 1; }

    bool operator==(const TruncationParams& o) const {
        return alpha == o.alpha && degree == o.degree;
    }
    bool operator!=(const TruncationParams& o) const { return !(*this == o); }
};

} // namespace focklab

#endif
