#ifndef FOCKLAB_SYMBOLS_HPP
#define FOCKLAB_SYMBOLS_HPP

#include "focklab/quadrature.hpp"
#include "focklab/truncation.hpp"

#include <complex>
#include <memory>
#include <variant>
#include <vector>

namespace focklab {

using Complex = std::complex<double>;

/// One generalized Gaussian: exp(log_amp + c1 z + c2 conj(z) + c3 |z|^2).
/// The amplitude is held in the log domain so that narrow heat kernels at
/// distant centers stay representable.
struct GaussianTerm {
    Complex log_amp{0.0, 0.0};
    Complex c1{0.0, 0.0};
    Complex c2{0.0, 0.0};
    double c3 = 0.0;

    static GaussianTerm from_amp(Complex amp, Complex c1, Complex c2, double c3);
    Complex eval(Complex z) const;
    /// Integrable against dmu_alpha requires c3 <= 0; bounded additionally
    /// requires c3 < 0 or c1 = -conj(c2).
    bool is_bounded() const;
    /// Real non-negative as a function on C (admissible measure density).
    bool is_real_nonneg() const;
};

struct GeneralizedGaussian {
    GaussianTerm term;
};

/// Exact finite sum of generalized Gaussians (heat transforms of atomic
/// measures live here).
struct GaussianSum {
    std::vector<GaussianTerm> terms;
};

struct BallIndicator {
    Complex center{0.0, 0.0};
    double radius = 1.0;
    bool complement = false;
};

/// Radial symbol given by samples g(rho_i) at the radial quadrature nodes.
struct RadialProfile {
    std::shared_ptr<const QuadratureGrid> grid;
    std::vector<Complex> samples;
};

/// Symbol sampled at every grid node (raw values s(z_n), not weighted).
struct GridSampled {
    std::shared_ptr<const QuadratureGrid> grid;
    Eigen::VectorXcd values;
};

using SymbolSpec =
    std::variant<GeneralizedGaussian, GaussianSum, BallIndicator, RadialProfile, GridSampled>;

struct Atom {
    Complex location{0.0, 0.0};
    double weight = 1.0;
};

struct LebesgueMeasure {
    SymbolSpec density;
};
struct PointMasses {
    std::vector<Atom> atoms;
};
/// Point masses on eps*Z^2 intersected with B(0, cutoff_radius).
struct LatticeMeasure {
    double epsilon = 0.5;
    double cutoff_radius = 14.0;
};

using MeasureSpec = std::variant<LebesgueMeasure, PointMasses, LatticeMeasure>;

// Standard symbols from the underlying operator identities.

/// q_beta(z) = (beta/pi) exp(-beta |z|^2).
SymbolSpec make_q_beta(double beta);
/// s_w(z) = exp((alpha/2)|w|^2 + 2 i alpha Im(z conj(w))); |s_w| constant.
SymbolSpec make_s_w(double alpha, Complex w);
/// Constant symbol c.
SymbolSpec make_constant(Complex c);

Complex eval_symbol(const SymbolSpec& s, Complex z);

/// Descriptor of z -> s(z - w); closed for generalized Gaussians and ball
/// indicators, unsupported for sampled variants.
SymbolSpec translate_symbol(const SymbolSpec& s, Complex w);

/// Heat transform at time t > 0: (4 pi t)^{-1} Int exp(-|w-z|^2/4t) dnu(w).
/// Atomic measures produce an exact Gaussian-sum object; Gaussian densities
/// a closed-form generalized Gaussian.
SymbolSpec heat_transform(const MeasureSpec& m, double t);

/// Expand a measure to its atom list (lattice expansion is memoized).
/// Checks the lattice cutoff >= 2 * trust_radius use-site invariant.
std::vector<Atom> atoms_of(const MeasureSpec& m, const TruncationParams& params);

struct CarlesonQuantities {
    double star = 0.0;     ///< sup_z Int e^{-alpha|z-w|^2/2} dnu(w)
    double ball_sup = 0.0; ///< sup_z nu(B(z, r))
};

/// Lemma-2.1 quantities (a) and (c) over the documented search grid.
CarlesonQuantities carleson_quantities(const MeasureSpec& m, double r,
                                       const TruncationParams& params);

/// sup_z of the mass sum_{|sigma - z| > delta} w_sigma e^{-alpha|z-sigma|^2/2};
/// the weighted off-ball quantity whose delta -> infinity decay drives the
/// band estimates.  Monotone nonincreasing in delta.
double band_decay(const MeasureSpec& m, double delta, const TruncationParams& params);

} // namespace focklab

#endif
