#ifndef FOCKLAB_QUADRATURE_HPP
#define FOCKLAB_QUADRATURE_HPP

#include "focklab/truncation.hpp"

#include <Eigen/Dense>

#include <complex>
#include <memory>
#include <vector>

namespace focklab {

struct GridOptions {
    int radial_nodes = 0;   ///< 0 selects the default degree + 32
    int angular_count = 0;  ///< 0 selects the default 4*degree + 16
};

/// Polar product rule for integrals over C against Lebesgue measure dv:
/// radial Gauss-Laguerre in t = alpha*rho^2, uniform angular trapezoid.
///
/// The rule is meant for integrands already carrying their Gaussian decay
/// ("weighted form"); weights are stored scaled by e^{+t_i} so no factor ever
/// overflows. With the default node counts it is exact for products
/// e_j * conj(e_k) * e^{-alpha|z|^2} up to degree D and converges
/// geometrically for Gaussian symbols.
class QuadratureGrid {
public:
    explicit QuadratureGrid(const TruncationParams& params, GridOptions opts = {});

    const TruncationParams& params() const { return params_; }
    int radial_count() const { return static_cast<int>(t_.size()); }
    int angular_count() const { return n_theta_; }
    int node_count() const { return radial_count() * n_theta_; }

    // Flattened node index n = i * angular_count + m.
    std::complex<double> node(int n) const {
        int i = n / n_theta_, m = n % n_theta_;
        return std::polar(rho_[i], theta_[m]);
    }
    double node_radius_at(int i) const { return rho_[i]; }
    double node_t(int i) const { return t_[i]; }
    double angle(int m) const { return theta_[m]; }

    /// Full dv weight of flattened node n; sum_n weight(n) * H(z_n) ~ Int H dv
    /// for weighted integrands H.
    double weight(int n) const { return w_[n / n_theta_]; }
    const std::vector<double>& radial_weights() const { return w_; }

    /// Cached weighted orthonormal basis values: (node_count) x (degree+1),
    /// entry (n, k) = e_k(z_n) * exp(-alpha |z_n|^2 / 2).  All finite.
    const Eigen::MatrixXcd& weighted_basis() const { return basis_; }

    /// Node weights as a vector aligned with flattened node indexing.
    const Eigen::VectorXd& weights_flat() const { return w_flat_; }

    /// Integrate a weighted-form sampled integrand against dv.
    std::complex<double> integrate(const Eigen::VectorXcd& values) const;
    double integrate(const Eigen::VectorXd& values) const;

    bool same_grid(const QuadratureGrid& o) const {
        return params_ == o.params_ && radial_count() == o.radial_count() &&
               n_theta_ == o.n_theta_;
    }

private:
    TruncationParams params_;
    int n_theta_ = 0;
    std::vector<double> t_;      // Gauss-Laguerre nodes in t = alpha rho^2
    std::vector<double> rho_;    // sqrt(t/alpha)
    std::vector<double> w_;      // combined dv weight per radial node
    std::vector<double> theta_;
    Eigen::VectorXd w_flat_;
    Eigen::MatrixXcd basis_;
};

/// Non-analytic function sampled on a grid, stored in weighted form
/// g(z) * exp(-alpha |z|^2 / 2).
struct GridField {
    std::shared_ptr<const QuadratureGrid> grid;
    Eigen::VectorXcd values;
};

/// Gauss-Laguerre nodes t_i and weights scaled by e^{+t_i} for
/// Int_0^inf e^{-t} g(t) dt = sum w_i g(t_i), w_i = scaled_w_i * e^{-t_i}.
void gauss_laguerre(int n, std::vector<double>& t, std::vector<double>& scaled_w);

/// Gauss-Legendre nodes and weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                    std::vector<double>& w);

/// Product rule over the disk B(center, radius): Gauss-Legendre radial times
/// uniform angular rule, for smooth integrands against dv.
struct DiskRule {
    std::vector<std::complex<double>> nodes;
    std::vector<double> weights;
    DiskRule(std::complex<double> center, double radius, int n_radial, int n_angular);
};

} // namespace focklab

#endif
