#include "focklab/fock_space.hpp"
#include "focklab/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace focklab {

namespace {

double pow_p(double x, double p) {
    if (p == 2.0) return x * x;
    if (p == 4.0) {
        double s = x * x;
        return s * s;
    }
    return std::pow(x, p);
}

} // namespace

std::complex<double> weighted_basis_value(const TruncationParams& p, int k,
                                          std::complex<double> z) {
    const double rho = std::abs(z);
    const double base = -0.5 * p.alpha * rho * rho;
    if (k == 0) return std::exp(base);
    if (rho == 0.0) return 0.0;
    const double logmag = base + 0.5 * (k * std::log(p.alpha) - log_factorial(k)) +
                          k * std::log(rho);
    return std::polar(std::exp(logmag), k * std::arg(z));
}

Eigen::VectorXcd weighted_basis_row(const TruncationParams& p, std::complex<double> z) {
    Eigen::VectorXcd row(p.size());
    const double rho = std::abs(z);
    const double theta = std::arg(z);
    const double base = -0.5 * p.alpha * rho * rho;
    row[0] = std::exp(base);
    if (rho == 0.0) {
        for (int k = 1; k <= p.degree; ++k) row[k] = 0.0;
        return row;
    }
    const double lr = std::log(rho);
    for (int k = 1; k <= p.degree; ++k) {
        const double logmag =
            base + 0.5 * (k * std::log(p.alpha) - log_factorial(k)) + k * lr;
        row[k] = std::polar(std::exp(logmag), k * theta);
    }
    return row;
}

std::complex<double> evaluate_weighted(const CoeffVector& f, std::complex<double> z) {
    return weighted_basis_row(f.params, z).conjugate().dot(f.coeffs);
}

FockSpace::FockSpace(const TruncationParams& params, GridOptions opts)
    : params_(params), grid_(std::make_shared<QuadratureGrid>(params, opts)) {}

double FockSpace::norm_of_field(const Eigen::VectorXcd& values, double p) const {
    if (!(p > 1.0) || p == std::numeric_limits<double>::infinity())
        throw std::invalid_argument("norm_of_field: p must be in (1, inf)");
    const Eigen::VectorXd mags = values.cwiseAbs();
    Eigen::VectorXd integrand(mags.size());
    for (Eigen::Index i = 0; i < mags.size(); ++i) integrand[i] = pow_p(mags[i], p);
    const double pref = p * params_.alpha / (2.0 * std::numbers::pi);
    const double val = pref * grid_->integrate(integrand);
    return std::pow(std::max(val, 0.0), 1.0 / p);
}

double FockSpace::norm(const CoeffVector& f, double p) const {
    if (f.params != params_)
        throw std::invalid_argument("FockSpace::norm: parameter mismatch");
    if (!(p > 1.0))
        throw std::invalid_argument("FockSpace::norm: p must be > 1");
    if (p == std::numeric_limits<double>::infinity()) {
        // Documented search grid: 300 radial steps out to 3*trust_radius,
        // max(64, 2D) angles, then local coordinate refinement.
        const double r_max = 3.0 * trust_radius();
        const int nr = 300;
        const int nt = std::max(64, 2 * params_.degree);
        double best = 0.0;
        double best_r = 0.0, best_th = 0.0;
        for (int i = 0; i <= nr; ++i) {
            const double r = r_max * i / nr;
            for (int m = 0; m < nt; ++m) {
                const double th = 2.0 * std::numbers::pi * m / nt;
                const double v = std::abs(evaluate_weighted(f, std::polar(r, th)));
                if (v > best) {
                    best = v;
                    best_r = r;
                    best_th = th;
                }
            }
        }
        // Alternating golden-section refinement in rho and theta.
        double hr = r_max / nr, ht = 2.0 * std::numbers::pi / nt;
        auto val_at = [&](double r, double th) {
            return std::abs(evaluate_weighted(f, std::polar(std::max(r, 0.0), th)));
        };
        for (int pass = 0; pass < 60; ++pass) {
            for (double sgn : {-1.0, 1.0}) {
                if (val_at(best_r + sgn * hr, best_th) > best) {
                    best_r += sgn * hr;
                    best = val_at(best_r, best_th);
                }
                if (val_at(best_r, best_th + sgn * ht) > best) {
                    best_th += sgn * ht;
                    best = val_at(best_r, best_th);
                }
            }
            hr *= 0.6;
            ht *= 0.6;
        }
        return best;
    }
    return norm_of_field(grid_->weighted_basis() * f.coeffs, p);
}

std::complex<double> FockSpace::inner(const CoeffVector& f, const CoeffVector& g) const {
    if (f.params != params_ || g.params != params_)
        throw std::invalid_argument("FockSpace::inner: parameter mismatch");
    return g.coeffs.dot(f.coeffs); // Eigen dot conjugates its callee
}

KernelCoeffs FockSpace::kernel_coeffs(std::complex<double> w, bool normalized) const {
    KernelCoeffs out;
    const double aw2 = params_.alpha * std::norm(w);
    Eigen::VectorXcd c(params_.size());
    const double shift = normalized ? -0.5 * aw2 : 0.0;
    const double rho = std::abs(w);
    for (int k = 0; k <= params_.degree; ++k) {
        if (k > 0 && rho == 0.0) {
            c[k] = 0.0;
            continue;
        }
        // c_k = sqrt(alpha^k/k!) conj(w)^k, optionally times e^{-alpha|w|^2/2}
        const double logmag = 0.5 * (k * std::log(params_.alpha) - log_factorial(k)) +
                              (k > 0 ? k * std::log(rho) : 0.0) + shift;
        c[k] = std::polar(std::exp(logmag), -k * std::arg(w));
    }
    out.coeffs = CoeffVector(params_, std::move(c));
    // retained mass of the normalized kernel is Q(D+1, alpha|w|^2), so the
    // truncated tail is the lower regularized gamma
    out.tail = std::sqrt(std::max(gamma_p(params_.degree + 1.0, aw2), 0.0));
    return out;
}

CoeffVector FockSpace::project(const GridField& f) const {
    if (!f.grid || !f.grid->same_grid(*grid_))
        throw std::invalid_argument("FockSpace::project: grid mismatch");
    if (f.values.size() != grid_->node_count())
        throw std::invalid_argument("FockSpace::project: field size mismatch");
    const double pref = params_.alpha / std::numbers::pi;
    Eigen::VectorXcd weighted = grid_->weights_flat().cast<std::complex<double>>()
                                    .cwiseProduct(f.values);
    return CoeffVector(params_, pref * (grid_->weighted_basis().adjoint() * weighted));
}

GridField FockSpace::sample(const CoeffVector& f) const {
    if (f.params != params_)
        throw std::invalid_argument("FockSpace::sample: parameter mismatch");
    GridField out;
    out.grid = grid_;
    out.values = grid_->weighted_basis() * f.coeffs;
    return out;
}

double FockSpace::submeanvalue_ratio(const CoeffVector& f, std::complex<double> z,
                                     double r, double p) const {
    if (f.params != params_)
        throw std::invalid_argument("submeanvalue_ratio: parameter mismatch");
    if (!(r > 0.0)) throw std::invalid_argument("submeanvalue_ratio: r must be positive");
    const double num = pow_p(std::abs(evaluate_weighted(f, z)), p);
    const int n_rad = std::max(24, params_.degree / 2 + 8);
    const int n_ang = std::max(64, 2 * params_.degree + 16);
    DiskRule rule(z, r, n_rad, n_ang);
    double den = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        den += rule.weights[i] * pow_p(std::abs(evaluate_weighted(f, rule.nodes[i])), p);
    if (!(den > 0.0))
        throw std::domain_error("submeanvalue_ratio: f vanishes on the ball");
    return num / den;
}

MomentCheck FockSpace::gaussian_moment_check(double s, std::complex<double> z) const {
    const double zl = std::abs(z);
    // s^2 < 2 alpha * safety; beyond that the radial rule loses the
    // integrand's effective decay.
    if (s * s >= 2.0 * params_.alpha * 1.4)
        throw std::invalid_argument("gaussian_moment_check: s too large for the grid");
    MomentCheck out;
    out.exact = std::exp(s * s * zl * zl / (4.0 * params_.alpha));
    const auto& g = *grid_;
    const double pref = params_.alpha / std::numbers::pi;
    double acc = 0.0;
    for (int i = 0; i < g.radial_count(); ++i) {
        const double rho = g.node_radius_at(i);
        const double t = g.node_t(i);
        double ang = 0.0;
        for (int m = 0; m < g.angular_count(); ++m)
            ang += std::exp(s * zl * rho * std::cos(g.angle(m)) - t);
        acc += g.radial_weights()[i] * ang;
    }
    out.computed = pref * acc;
    return out;
}

} // namespace focklab
