#ifndef FOCKLAB_FOCK_SPACE_HPP
#define FOCKLAB_FOCK_SPACE_HPP

#include "focklab/coeff_vector.hpp"
#include "focklab/quadrature.hpp"

#include <complex>
#include <limits>
#include <memory>

namespace focklab {

struct KernelCoeffs {
    CoeffVector coeffs;
    /// L2 truncation error of the normalized kernel: sqrt(Q(D+1, alpha|w|^2)).
    double tail = 0.0;
};

struct MomentCheck {
    double computed = 0.0;
    double exact = 0.0;
};

/// Truncated F_alpha^p in one complex variable: norms for p in (1, inf] via
/// the polar quadrature grid, reproducing kernels, projection P_alpha.
/// Immutable after construction; the grid cache is shared read-only.
class FockSpace {
public:
    explicit FockSpace(const TruncationParams& params, GridOptions opts = {});

    const TruncationParams& params() const { return params_; }
    const QuadratureGrid& grid() const { return *grid_; }
    std::shared_ptr<const QuadratureGrid> grid_ptr() const { return grid_; }
    double trust_radius() const { return params_.trust_radius(); }
    int size() const { return params_.size(); }

    /// ||f||_{alpha,p} for p in (1, inf].  p < inf integrates
    /// (p alpha / 2 pi) |f e^{-alpha|.|^2/2}|^p dv on the grid; p = inf runs a
    /// radial/angular search out to 3*trust_radius with local refinement.
    double norm(const CoeffVector& f, double p) const;

    /// p-norm of a weighted field sampled on this grid (p < inf).
    double norm_of_field(const Eigen::VectorXcd& values, double p) const;

    /// Exact coefficient-space inner product <f, g>_alpha = sum c_k conj(d_k).
    std::complex<double> inner(const CoeffVector& f, const CoeffVector& g) const;

    /// Coefficients of K(., w) (or of the normalized kernel k_w) truncated at
    /// degree D, plus the reported truncation tail.
    KernelCoeffs kernel_coeffs(std::complex<double> w, bool normalized) const;

    /// P_alpha applied to a weighted grid field.
    CoeffVector project(const GridField& f) const;

    /// Weighted samples of f on the grid.
    GridField sample(const CoeffVector& f) const;

    /// |f(z)e^{-a|z|^2/2}|^p / Int_{B(z,r)} |f e^{-a|.|^2/2}|^p dv;
    /// Lemma-2.4-style pointwise over local-mass ratio.  Throws on an
    /// identically vanishing denominator.
    double submeanvalue_ratio(const CoeffVector& f, std::complex<double> z, double r,
                              double p) const;

    /// Quadrature self-test of Int |e^{s z conj(w)}| dmu_alpha(w)
    /// against the closed form e^{s^2 |z|^2 / 4 alpha}.
    MomentCheck gaussian_moment_check(double s, std::complex<double> z) const;

private:
    TruncationParams params_;
    std::shared_ptr<const QuadratureGrid> grid_;
};

} // namespace focklab

#endif
