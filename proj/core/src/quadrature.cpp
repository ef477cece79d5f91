#include "focklab/quadrature.hpp"
#include "focklab/special.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace focklab {

void gauss_laguerre(int n, std::vector<double>& t, std::vector<double>& scaled_w) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: need at least one node");
    if (n > 150)
        throw std::invalid_argument("gauss_laguerre: node weights underflow beyond n = 150");
    gsl_integration_fixed_workspace* ws = gsl_integration_fixed_alloc(
        gsl_integration_fixed_laguerre, static_cast<size_t>(n), 0.0, 1.0, 0.0, 0.0);
    if (!ws) throw std::runtime_error("gauss_laguerre: allocation failed");
    t.resize(n);
    scaled_w.resize(n);
    const double* x = gsl_integration_fixed_nodes(ws);
    const double* w = gsl_integration_fixed_weights(ws);
    for (int i = 0; i < n; ++i) {
        t[i] = x[i];
        // w_i carries the e^{-t_i} decay of the weight function; re-scale in
        // the log domain so both factors stay representable.
        scaled_w[i] = std::exp(std::log(w[i]) + x[i]);
    }
    gsl_integration_fixed_free(ws);
}

void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                    std::vector<double>& w) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    gsl_integration_glfixed_table* tbl =
        gsl_integration_glfixed_table_alloc(static_cast<size_t>(n));
    if (!tbl) throw std::runtime_error("gauss_legendre: allocation failed");
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double xi, wi;
        gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &xi, &wi, tbl);
        x[i] = xi;
        w[i] = wi;
    }
    gsl_integration_glfixed_table_free(tbl);
}

QuadratureGrid::QuadratureGrid(const TruncationParams& params, GridOptions opts)
    : params_(params) {
    params_.validate();
    const int d = params_.degree;
    int n_radial = opts.radial_nodes > 0 ? opts.radial_nodes : d + 32;
    n_theta_ = opts.angular_count > 0 ? opts.angular_count : 4 * d + 16;
    if (n_theta_ < 1) throw std::invalid_argument("QuadratureGrid: angular_count < 1");

    std::vector<double> scaled;
    gauss_laguerre(n_radial, t_, scaled);
    rho_.resize(n_radial);
    w_.resize(n_radial);
    const double pref = std::numbers::pi / (params_.alpha * n_theta_);
    for (int i = 0; i < n_radial; ++i) {
        rho_[i] = std::sqrt(t_[i] / params_.alpha);
        w_[i] = pref * scaled[i];
    }
    theta_.resize(n_theta_);
    for (int m = 0; m < n_theta_; ++m)
        theta_[m] = 2.0 * std::numbers::pi * m / n_theta_;

    const int nn = node_count();
    w_flat_.resize(nn);
    basis_.resize(nn, d + 1);
    for (int i = 0; i < n_radial; ++i) {
        const double rho = rho_[i];
        const double base = -0.5 * params_.alpha * rho * rho;
        for (int m = 0; m < n_theta_; ++m) {
            const int n = i * n_theta_ + m;
            w_flat_[n] = w_[i];
            for (int k = 0; k <= d; ++k) {
                double logmag = base + 0.5 * (k * std::log(params_.alpha) - log_factorial(k));
                if (k > 0) {
                    if (rho == 0.0) {
                        basis_(n, k) = 0.0;
                        continue;
                    }
                    logmag += k * std::log(rho);
                }
                basis_(n, k) = std::polar(std::exp(logmag), k * theta_[m]);
            }
        }
    }
}

std::complex<double> QuadratureGrid::integrate(const Eigen::VectorXcd& values) const {
    if (values.size() != w_flat_.size())
        throw std::invalid_argument("QuadratureGrid::integrate: value count mismatch");
    return (w_flat_.cast<std::complex<double>>().cwiseProduct(values)).sum();
}

double QuadratureGrid::integrate(const Eigen::VectorXd& values) const {
    if (values.size() != w_flat_.size())
        throw std::invalid_argument("QuadratureGrid::integrate: value count mismatch");
    return w_flat_.dot(values);
}

DiskRule::DiskRule(std::complex<double> center, double radius, int n_radial,
                   int n_angular) {
    if (!(radius > 0.0)) throw std::invalid_argument("DiskRule: radius must be positive");
    std::vector<double> s, ws;
    gauss_legendre(n_radial, 0.0, radius, s, ws);
    nodes.reserve(static_cast<size_t>(n_radial) * n_angular);
    weights.reserve(static_cast<size_t>(n_radial) * n_angular);
    const double dphi = 2.0 * std::numbers::pi / n_angular;
    for (int q = 0; q < n_radial; ++q) {
        for (int l = 0; l < n_angular; ++l) {
            const double phi = dphi * l;
            nodes.push_back(center + std::polar(s[q], phi));
            weights.push_back(ws[q] * s[q] * dphi);
        }
    }
}

} // namespace focklab
