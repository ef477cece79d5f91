#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "focklab/fock_space.hpp"
#include "focklab/special.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

using namespace focklab;
using Complex = std::complex<double>;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("quadrature integrates Gaussian moments exactly") {
    TruncationParams p(1.0, 24);
    QuadratureGrid g(p);
    // Int e^{-|z|^2} dv = pi; Int |z|^2 e^{-|z|^2} dv = pi
    Eigen::VectorXd vals(g.node_count());
    for (int n = 0; n < g.node_count(); ++n) vals[n] = std::exp(-std::norm(g.node(n)));
    CHECK(g.integrate(vals) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
    for (int n = 0; n < g.node_count(); ++n)
        vals[n] = std::norm(g.node(n)) * std::exp(-std::norm(g.node(n)));
    CHECK(g.integrate(vals) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("orthonormality of the weighted basis under quadrature") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        TruncationParams p(alpha, 60);
        QuadratureGrid g(p);
        const Eigen::MatrixXcd& b = g.weighted_basis();
        Eigen::MatrixXcd gram = b.adjoint() * g.weights_flat().cast<Complex>().asDiagonal() * b;
        gram *= alpha / std::numbers::pi;
        const double dev =
            (gram - Eigen::MatrixXcd::Identity(p.size(), p.size())).cwiseAbs().maxCoeff();
        CHECK(dev <= 1e-10);
    }
}

TEST_CASE("evaluate_weighted matches direct formulas") {
    TruncationParams p(1.0, 40);
    CHECK(evaluate_weighted(CoeffVector::basis(p, 0), Complex(0, 0)).real() ==
          doctest::Approx(1.0));
    // e_1(z) = z for alpha = 1: value z e^{-|z|^2/2}
    const Complex v = evaluate_weighted(CoeffVector::basis(p, 1), Complex(1, 0));
    CHECK(v.real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(0.0));
    for (int k : {1, 7, 40})
        CHECK(std::abs(evaluate_weighted(CoeffVector::basis(p, k), Complex(0, 0))) == 0.0);
}

TEST_CASE("evaluate_weighted is overflow-safe out to 10 trust radii") {
    TruncationParams p(1.0, 60);
    Eigen::VectorXcd c = Eigen::VectorXcd::Constant(p.size(), Complex(1.0, -0.5));
    CoeffVector f(p, c);
    const double far = 10.0 * p.trust_radius();
    for (double ang : {0.0, 1.1, 2.2}) {
        const Complex v = evaluate_weighted(f, std::polar(far, ang));
        CHECK(std::isfinite(v.real()));
        CHECK(std::isfinite(v.imag()));
    }
}

TEST_CASE("fock norms: orthonormal basis, kernels, and the sup norm") {
    FockSpace fs(TruncationParams(1.0, 40));
    CHECK(fs.norm(CoeffVector::basis(fs.params(), 0), 2.0) == doctest::Approx(1.0));
    CHECK_THROWS(fs.norm(CoeffVector::basis(fs.params(), 0), 1.0));
    CHECK_THROWS(fs.norm(CoeffVector::basis(fs.params(), 0), 0.5));

    // normalized kernels are unit vectors for every p
    const Complex w = std::polar(0.5 * fs.trust_radius(), 0.3);
    const CoeffVector kw = fs.kernel_coeffs(w, true).coeffs;
    for (double p : {2.0, 4.0})
        CHECK(fs.norm(kw, p) == doctest::Approx(1.0).epsilon(1e-8));

    // sup norm of e_1 at alpha = 1: max_rho rho e^{-rho^2/2} = e^{-1/2}
    CHECK(fs.norm(CoeffVector::basis(fs.params(), 1), kInf) ==
          doctest::Approx(std::exp(-0.5)).epsilon(1e-8));
}

TEST_CASE("norm homogeneity and triangle inequality on random pairs") {
    FockSpace fs(TruncationParams(1.0, 20));
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::VectorXcd a(fs.size()), b(fs.size());
        for (int k = 0; k < fs.size(); ++k) {
            a[k] = Complex(gauss(rng), gauss(rng));
            b[k] = Complex(gauss(rng), gauss(rng));
        }
        const CoeffVector f(fs.params(), a), g(fs.params(), b);
        const CoeffVector fg(fs.params(), a + b);
        const CoeffVector f3(fs.params(), 3.0 * a);
        for (double p : {2.0, 4.0}) {
            CHECK(fs.norm(f3, p) == doctest::Approx(3.0 * fs.norm(f, p)).epsilon(1e-10));
            CHECK(fs.norm(fg, p) <= fs.norm(f, p) + fs.norm(g, p) + 1e-12);
        }
    }
}

TEST_CASE("inner product: orthonormality, reproducing property, kernel overlaps") {
    FockSpace fs(TruncationParams(1.0, 40));
    const TruncationParams& p = fs.params();
    for (int j : {0, 3, 17})
        for (int k : {0, 3, 17}) {
            const Complex ip =
                fs.inner(CoeffVector::basis(p, j), CoeffVector::basis(p, k));
            CHECK(std::abs(ip - (j == k ? 1.0 : 0.0)) <= 1e-15);
        }

    // <f, K(., w)> = f(w)
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd c(p.size());
    for (int k = 0; k < p.size(); ++k) c[k] = Complex(gauss(rng), gauss(rng));
    const CoeffVector f(p, c);
    for (double frac : {0.1, 0.3, 0.5}) {
        const Complex w = std::polar(frac * fs.trust_radius(), 1.9 * frac);
        const Complex lhs = fs.inner(f, fs.kernel_coeffs(w, false).coeffs);
        const Complex rhs =
            evaluate_weighted(f, w) * std::exp(0.5 * p.alpha * std::norm(w));
        CHECK(std::abs(lhs - rhs) <= 1e-9);
    }

    // <k_a, k_b> = e^{alpha conj(b) a - alpha|a|^2/2 - alpha|b|^2/2}; the
    // closed form is the independent oracle for the coefficient summation
    FockSpace fs60(TruncationParams(1.0, 60));
    const Complex a(0.7, -0.4), b(-0.5, 0.9);
    const Complex lhs =
        fs60.inner(fs60.kernel_coeffs(a, true).coeffs, fs60.kernel_coeffs(b, true).coeffs);
    const Complex rhs = std::exp(std::conj(a) * b - Complex(0.5 * std::norm(a), 0) -
                                 Complex(0.5 * std::norm(b), 0));
    CHECK(std::abs(lhs - rhs) <= 1e-12);
    CHECK(std::abs(std::abs(lhs) - std::exp(-0.5 * std::norm(a - b))) <= 1e-12);
}

TEST_CASE("kernel coefficients: special values and truncation tail") {
    FockSpace fs(TruncationParams(1.0, 40));
    const KernelCoeffs k0 = fs.kernel_coeffs(Complex(0, 0), false);
    CHECK(k0.coeffs.coeffs[0] == Complex(1, 0));
    CHECK(k0.coeffs.coeffs.tail(40).norm() == 0.0);
    CHECK(k0.tail == 0.0);

    const KernelCoeffs k1 = fs.kernel_coeffs(Complex(1, 0), true);
    CHECK(k1.coeffs.norm2() == doctest::Approx(1.0).epsilon(1e-12));
    // tail accounting: ||k_w||^2 + Q(D+1, alpha |w|^2) = 1
    const Complex w(2.0, 1.0);
    const KernelCoeffs kw = fs.kernel_coeffs(w, true);
    CHECK(kw.coeffs.norm2() * kw.coeffs.norm2() + kw.tail * kw.tail ==
          doctest::Approx(1.0).epsilon(1e-12));

    // <k_w, 1> = e^{-alpha|w|^2/2}
    const Complex ip = fs.inner(kw.coeffs, CoeffVector::basis(fs.params(), 0));
    CHECK(std::abs(ip - std::exp(-0.5 * std::norm(w))) <= 1e-12);
}

TEST_CASE("projection fixes analytic vectors and kills anti-analytic fields") {
    FockSpace fs(TruncationParams(1.0, 30));
    const CoeffVector e2 = CoeffVector::basis(fs.params(), 2);
    const CoeffVector back = fs.project(fs.sample(e2));
    CHECK((back.coeffs - e2.coeffs).cwiseAbs().maxCoeff() <= 1e-10);

    // field of conj(z), stored in weighted form
    GridField anti;
    anti.grid = fs.grid_ptr();
    anti.values.resize(fs.grid().node_count());
    for (int n = 0; n < fs.grid().node_count(); ++n) {
        const Complex z = fs.grid().node(n);
        anti.values[n] = std::conj(z) * std::exp(-0.5 * std::norm(z));
    }
    CHECK(fs.project(anti).coeffs.cwiseAbs().maxCoeff() <= 1e-10);

    // field of |z|^2: P(|z|^2) = 1/alpha (constant)
    GridField sq;
    sq.grid = fs.grid_ptr();
    sq.values.resize(fs.grid().node_count());
    for (int n = 0; n < fs.grid().node_count(); ++n) {
        const Complex z = fs.grid().node(n);
        sq.values[n] = std::norm(z) * std::exp(-0.5 * std::norm(z));
    }
    const CoeffVector proj = fs.project(sq);
    CHECK(proj.coeffs[0].real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(proj.coeffs.tail(30).cwiseAbs().maxCoeff() <= 1e-10);

    // grid mismatch is an error
    FockSpace other(TruncationParams(2.0, 30));
    CHECK_THROWS(other.project(anti));
}

TEST_CASE("sub-mean-value ratio against the radial closed form") {
    FockSpace fs(TruncationParams(1.0, 30));
    // f = e_0, z = 0, r = 1, p = 2: denominator Int_{B(0,1)} e^{-|w|^2} dv
    // = pi (1 - e^{-1})
    const double expected = 1.0 / (std::numbers::pi * (1.0 - std::exp(-1.0)));
    const double got =
        fs.submeanvalue_ratio(CoeffVector::basis(fs.params(), 0), Complex(0, 0), 1.0, 2.0);
    CHECK(got == doctest::Approx(expected).epsilon(1e-10));

    // vanishing numerator
    CHECK(fs.submeanvalue_ratio(CoeffVector::basis(fs.params(), 3), Complex(0, 0), 1.0,
                                2.0) == 0.0);

    // zero function signals a degenerate input
    CHECK_THROWS(fs.submeanvalue_ratio(CoeffVector::zero(fs.params()), Complex(0, 0),
                                       1.0, 2.0));

    // random sweep stays finite (the empirical Lemma 2.4 constant)
    std::mt19937_64 rng(23);
    std::normal_distribution<double> gauss;
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        Eigen::VectorXcd c(fs.size());
        for (int k = 0; k < fs.size(); ++k) c[k] = Complex(gauss(rng), gauss(rng));
        const CoeffVector f(fs.params(), c);
        const Complex z =
            std::polar(0.5 * fs.trust_radius() * std::abs(gauss(rng)) / 2.0, gauss(rng));
        worst = std::max(worst, fs.submeanvalue_ratio(f, z, 1.0, 2.0));
    }
    CHECK(std::isfinite(worst));
    CHECK(worst > 0.0);
}

TEST_CASE("Gaussian moment identity across the declared grid") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        FockSpace fs(TruncationParams(alpha, 40));
        for (double s : {0.0, 0.5, 1.0}) {
            for (double zl : {0.0, 1.0, 2.0}) {
                const MomentCheck mc = fs.gaussian_moment_check(s, Complex(zl, 0));
                CHECK(std::abs(mc.computed - mc.exact) <= 1e-8);
            }
        }
    }
    // alpha = 1, s = 1, |z| = 2: exact value e
    FockSpace fs(TruncationParams(1.0, 40));
    const MomentCheck mc = fs.gaussian_moment_check(1.0, Complex(0, 2));
    CHECK(mc.exact == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(std::abs(mc.computed - mc.exact) <= 1e-8);
    CHECK_THROWS(fs.gaussian_moment_check(2.0, Complex(0, 1)));
}

TEST_CASE("regularized incomplete gamma wrappers") {
    CHECK(gamma_p(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(gamma_q(1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(gamma_p(3.0, 0.0) == 0.0);
    // Q(k+1, t) = e^{-t} sum_{i<=k} t^i / i!
    const double t = 2.5;
    double acc = 0.0, term = 1.0;
    for (int i = 0; i <= 4; ++i) {
        acc += term;
        term *= t / (i + 1);
    }
    CHECK(gamma_q(5.0, t) == doctest::Approx(std::exp(-t) * acc).epsilon(1e-13));
}
