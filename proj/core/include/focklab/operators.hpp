#ifndef FOCKLAB_OPERATORS_HPP
#define FOCKLAB_OPERATORS_HPP

#include "focklab/fock_space.hpp"
#include "focklab/symbols.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace focklab {

/// Dense matrix of an operator in the orthonormal basis,
/// entries(k, j) = <T e_j, e_k>_alpha.
struct OperatorMatrix {
    TruncationParams params;
    Eigen::MatrixXcd entries;

    OperatorMatrix() = default;
    OperatorMatrix(const TruncationParams& p, Eigen::MatrixXcd m)
        : params(p), entries(std::move(m)) {
        if (entries.rows() != p.size() || entries.cols() != p.size())
            throw std::invalid_argument("OperatorMatrix: shape mismatch");
    }
    static OperatorMatrix identity(const TruncationParams& p) {
        return OperatorMatrix(p, Eigen::MatrixXcd::Identity(p.size(), p.size()));
    }
    OperatorMatrix adjoint() const { return OperatorMatrix(params, entries.adjoint()); }
};

/// T_g = P_alpha M_g.  Generalized Gaussian symbols are assembled from the
/// exact Gaussian-moment closed form (stable for arbitrarily narrow
/// Gaussians); indicators use region product rules; sampled symbols use the
/// polar grid quadrature.  Radial symbols come out diagonal.
OperatorMatrix toeplitz_from_symbol(const SymbolSpec& s, const FockSpace& fs);

/// Quadrature-only assembly on the polar grid (cross-validation route for
/// symbols the grid can resolve).
OperatorMatrix toeplitz_from_symbol_quadrature(const SymbolSpec& s, const FockSpace& fs);

/// T_nu for an atomic measure: entries sum_atoms w ehat_j(sigma) conj(ehat_k(sigma)),
/// exact via the reproducing property.  Lebesgue measures route through
/// toeplitz_from_symbol on their density.
OperatorMatrix toeplitz_from_measure(const MeasureSpec& m, const FockSpace& fs);

/// Weighted shift C_alpha(w): f -> f(. - w) e^{alpha(.)conj(w) - alpha|w|^2/2},
/// computed by applying the definition on the grid and projecting.
OperatorMatrix weighted_shift(Complex w, const FockSpace& fs);

/// f tensor g = <., g> f.
OperatorMatrix rank_one(const CoeffVector& f, const CoeffVector& g);

struct BerezinSampleSpec {
    double r_max = 0.0; ///< 0 selects trust_radius / 2
    int n_radial = 25;
    int n_angular = 16;
};

struct BerezinField {
    TruncationParams params;
    std::vector<Complex> points;
    std::vector<Complex> values;
    std::vector<double> kernel_tail;
};

/// B(z) = <A k_z, k_z> over a polar sample grid; the reported per-point
/// kernel_tail is the L2 mass of k_z beyond degree D.
BerezinField berezin(const OperatorMatrix& a, const BerezinSampleSpec& spec,
                     const FockSpace& fs);
Complex berezin_at(const OperatorMatrix& a, Complex z, const FockSpace& fs);

struct BerezinIdentityResult {
    double max_abs_error = 0.0;
    double sample_radius = 0.0;
};

/// Max over a sample disk of |B(T_nu)(z) - (pi/alpha) heat(nu, 1/(4 alpha))(z)|.
/// The disk radius is chosen so the kernel truncation tail stays an order of
/// magnitude below `tol`, capped at trust_radius / 2.
BerezinIdentityResult berezin_symbol_identity(const MeasureSpec& m, const FockSpace& fs,
                                              double tol = 1e-6);

/// Closed form of s_v sharp_alpha q_beta(. - u): the symbol f_beta with
/// C_alpha(v) T_{q_beta(.-u)} = T_{f_beta}.
SymbolSpec sharp_product(Complex v, Complex u, double beta, const TruncationParams& params);

/// Spectral norm (largest singular value).
double op_norm_2(const OperatorMatrix& a);

/// Certified lower bound for ||A||_{p->p}, p in (1, inf]: max over seeded
/// random starts plus all basis vectors, each refined by coordinate ascent.
/// When max_degree >= 0 the search is confined to inputs of degree
/// <= max_degree (the trusted block, where the truncated matrix agrees with
/// the underlying operator).
double op_norm_p_lower(const OperatorMatrix& a, double p, int trials, std::uint64_t seed,
                       const FockSpace& fs, int max_degree = -1);

/// ||M_{chi_E} A||_{F^2 -> L^2} via the Gram identity with E a ball or its
/// complement: op_norm_2(Q_E^{1/2} A).
double restricted_norm(const OperatorMatrix& a, const BallIndicator& region,
                       const FockSpace& fs);

/// sigma_{k+1}(A): singular-value tail proxy, compared between matched
/// truncations only.
double compactness_index(const OperatorMatrix& a, int k);

/// Largest degree b such that the truncated C_alpha(w) is trusted as an
/// isometry on inputs of degree <= b.
int shift_safe_degree(const TruncationParams& params, double w_abs);

/// Spectral norm of M restricted to input degrees <= block.
double block_restricted_norm(const Eigen::MatrixXcd& m, int block);

// Gram matrices Q_E of multiplication restrictions (alpha/pi) Int_E ehat_j conj(ehat_k) dv.
OperatorMatrix indicator_gram_ball(const BallIndicator& region, const FockSpace& fs);
OperatorMatrix indicator_gram_annulus(double r0, double r1, const FockSpace& fs);
OperatorMatrix indicator_gram_box(double x0, double x1, double y0, double y1,
                                  const FockSpace& fs);

/// Hermitian PSD square root; eigenvalues below clip_tol signal failure,
/// small negatives are clipped to zero.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m, double clip_tol = -1e-12);

/// Complex conjugate of a symbol (supported for Gaussian variants and
/// indicators).
SymbolSpec conj_symbol(const SymbolSpec& s);

} // namespace focklab

#endif
