#include "focklab/operators.hpp"
#include "focklab/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace focklab {

namespace {

constexpr double kPi = std::numbers::pi;

/// Exact entries of T for one generalized Gaussian term via
///   Int z^j conj(z)^k e^{-a|z|^2 + c1 z + c2 conj(z)} dv
///     = (pi/a) e^{c1 c2 / a} d_u^j d_s^k e^{(c1+u)(c2+s)/a} |_0,
/// assembled per entry in the log domain.
void add_gaussian_term(const GaussianTerm& t, const TruncationParams& p,
                       Eigen::MatrixXcd& out) {
    const double alpha = p.alpha;
    const double a = alpha - t.c3;
    if (!(a > 0.0))
        throw std::invalid_argument("toeplitz_from_symbol: non-integrable Gaussian symbol");
    const int n = p.size();
    const Complex r1 = t.c1 / a;
    const Complex r2 = t.c2 / a;

    // S(j, k) = sum_m C(j,m) C(k,m) m! a^-m r2^(j-m) r1^(k-m) as U * V^T
    Eigen::MatrixXcd u(n, n), v(n, n);
    u.setZero();
    v.setZero();
    for (int j = 0; j < n; ++j) {
        for (int m = 0; m <= j; ++m) {
            const double coef = std::exp(0.5 * (log_factorial(m) - m * std::log(a)));
            u(j, m) = binomial(j, m) * ipow(r2, j - m) * coef;
            v(j, m) = binomial(j, m) * ipow(r1, j - m) * coef;
        }
    }
    Eigen::MatrixXcd s = u * v.transpose(); // s(j, k)

    // log-scaled per-entry accumulation for magnitudes past double range
    auto log_scaled_sum = [&](int j, int k) -> Complex {
        const int mm = std::min(j, k);
        std::vector<double> lm(mm + 1);
        std::vector<Complex> ph(mm + 1);
        double lmax = -std::numeric_limits<double>::infinity();
        for (int m = 0; m <= mm; ++m) {
            lm[m] = std::log(binomial(j, m)) + std::log(binomial(k, m)) +
                    log_factorial(m) - m * std::log(a) +
                    (j - m) * std::log(std::abs(r2)) + (k - m) * std::log(std::abs(r1));
            ph[m] = std::polar(1.0, (j - m) * std::arg(r2) + (k - m) * std::arg(r1));
            lmax = std::max(lmax, lm[m]);
        }
        Complex acc(0.0, 0.0);
        for (int m = 0; m <= mm; ++m) acc += std::exp(lm[m] - lmax) * ph[m];
        return Complex(lmax, 0.0) + std::log(acc);
    };

    const Complex pref = t.log_amp + std::log(alpha / a) + t.c1 * t.c2 / a;
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            const Complex sjk = s(j, k);
            if (sjk == Complex(0.0, 0.0)) continue;
            const double basis_log =
                0.5 * ((j + k) * std::log(alpha) - log_factorial(j) - log_factorial(k));
            Complex log_s;
            if (std::isfinite(std::abs(sjk))) {
                log_s = std::log(sjk);
            } else {
                if (std::abs(r1) == 0.0 || std::abs(r2) == 0.0) continue;
                log_s = log_scaled_sum(j, k);
            }
            out(k, j) += std::exp(pref + basis_log + log_s);
        }
    }
}

std::vector<GaussianTerm> gaussian_terms_of(const SymbolSpec& s) {
    if (const auto* g = std::get_if<GeneralizedGaussian>(&s)) return {g->term};
    if (const auto* gs = std::get_if<GaussianSum>(&s)) return gs->terms;
    return {};
}

Eigen::VectorXcd symbol_on_grid(const SymbolSpec& s, const QuadratureGrid& g) {
    if (const auto* smp = std::get_if<GridSampled>(&s)) {
        if (!smp->grid || !smp->grid->same_grid(g))
            throw std::invalid_argument("toeplitz_from_symbol: sampled-symbol grid mismatch");
        return smp->values;
    }
    Eigen::VectorXcd vals(g.node_count());
    for (int n = 0; n < g.node_count(); ++n) vals[n] = eval_symbol(s, g.node(n));
    return vals;
}

} // namespace

OperatorMatrix toeplitz_from_symbol_quadrature(const SymbolSpec& s, const FockSpace& fs) {
    const auto& g = fs.grid();
    const Eigen::VectorXcd vals = symbol_on_grid(s, g);
    const Eigen::VectorXcd wv =
        g.weights_flat().cast<Complex>().cwiseProduct(vals) * (fs.params().alpha / kPi);
    const Eigen::MatrixXcd& basis = g.weighted_basis();
    return OperatorMatrix(fs.params(), basis.adjoint() * wv.asDiagonal() * basis);
}

OperatorMatrix toeplitz_from_symbol(const SymbolSpec& s, const FockSpace& fs) {
    const TruncationParams& p = fs.params();
    if (std::holds_alternative<GeneralizedGaussian>(s) ||
        std::holds_alternative<GaussianSum>(s)) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p.size(), p.size());
        for (const auto& t : gaussian_terms_of(s)) add_gaussian_term(t, p, m);
        return OperatorMatrix(p, std::move(m));
    }
    if (const auto* ball = std::get_if<BallIndicator>(&s)) {
        OperatorMatrix q = indicator_gram_ball({ball->center, ball->radius, false}, fs);
        if (ball->complement)
            q.entries = Eigen::MatrixXcd::Identity(p.size(), p.size()) - q.entries;
        return q;
    }
    if (const auto* rad = std::get_if<RadialProfile>(&s)) {
        const auto& g = fs.grid();
        if (!rad->grid || !rad->grid->same_grid(g))
            throw std::invalid_argument("toeplitz_from_symbol: radial-profile grid mismatch");
        if (static_cast<int>(rad->samples.size()) != g.radial_count())
            throw std::invalid_argument("toeplitz_from_symbol: radial sample count mismatch");
        // radial symbols are diagonal in the monomial basis
        Eigen::VectorXcd diag = Eigen::VectorXcd::Zero(p.size());
        for (int k = 0; k <= p.degree; ++k) {
            Complex acc(0.0, 0.0);
            for (int i = 0; i < g.radial_count(); ++i) {
                const Complex e = g.weighted_basis()(i * g.angular_count(), k);
                acc += g.radial_weights()[i] * g.angular_count() * rad->samples[i] *
                       std::norm(e);
            }
            diag[k] = acc * (p.alpha / kPi);
        }
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p.size(), p.size());
        m.diagonal() = diag;
        return OperatorMatrix(p, std::move(m));
    }
    return toeplitz_from_symbol_quadrature(s, fs);
}

OperatorMatrix toeplitz_from_measure(const MeasureSpec& m, const FockSpace& fs) {
    if (const auto* leb = std::get_if<LebesgueMeasure>(&m)) {
        // T_{g dv} = (pi/alpha) T_g: the measure convention has no dmu_alpha
        // normalization in front of the integral
        OperatorMatrix t = toeplitz_from_symbol(leb->density, fs);
        t.entries *= kPi / fs.params().alpha;
        return t;
    }
    const std::vector<Atom> atoms = atoms_of(m, fs.params());
    const int n = fs.size();
    Eigen::MatrixXcd rows(atoms.size(), n);
    Eigen::VectorXd w(atoms.size());
    for (size_t i = 0; i < atoms.size(); ++i) {
        rows.row(static_cast<Eigen::Index>(i)) =
            weighted_basis_row(fs.params(), atoms[i].location).transpose();
        w[static_cast<Eigen::Index>(i)] = atoms[i].weight;
    }
    return OperatorMatrix(fs.params(),
                          rows.adjoint() * w.cast<Complex>().asDiagonal() * rows);
}

OperatorMatrix weighted_shift(Complex w, const FockSpace& fs) {
    const auto& g = fs.grid();
    const TruncationParams& p = fs.params();
    const int nn = g.node_count();
    // weighted form of C(w) e_j at z is ehat_j(z - w) e^{i alpha Im(z conj(w))}
    Eigen::MatrixXcd v(nn, p.size());
    for (int n = 0; n < nn; ++n) {
        const Complex z = g.node(n);
        const double phase = p.alpha * std::imag(z * std::conj(w));
        v.row(n) = (weighted_basis_row(p, z - w) * std::polar(1.0, phase)).transpose();
    }
    const Eigen::VectorXcd wts = g.weights_flat().cast<Complex>() * (p.alpha / kPi);
    return OperatorMatrix(p, g.weighted_basis().adjoint() * wts.asDiagonal() * v);
}

OperatorMatrix rank_one(const CoeffVector& f, const CoeffVector& g) {
    if (f.params != g.params)
        throw std::invalid_argument("rank_one: parameter mismatch");
    return OperatorMatrix(f.params, f.coeffs * g.coeffs.adjoint());
}

Complex berezin_at(const OperatorMatrix& a, Complex z, const FockSpace& fs) {
    const Eigen::VectorXcd c = fs.kernel_coeffs(z, true).coeffs.coeffs;
    return c.dot(a.entries * c); // Eigen dot conjugates the left argument
}

BerezinField berezin(const OperatorMatrix& a, const BerezinSampleSpec& spec,
                     const FockSpace& fs) {
    if (a.params != fs.params())
        throw std::invalid_argument("berezin: parameter mismatch");
    BerezinField out;
    out.params = fs.params();
    const double r_max = spec.r_max > 0.0 ? spec.r_max : 0.5 * fs.trust_radius();
    for (int i = 0; i < spec.n_radial; ++i) {
        const double r = spec.n_radial == 1 ? 0.0 : r_max * i / (spec.n_radial - 1);
        for (int m = 0; m < spec.n_angular; ++m) {
            const Complex z = std::polar(r, 2.0 * kPi * m / spec.n_angular);
            const KernelCoeffs kc = fs.kernel_coeffs(z, true);
            const Eigen::VectorXcd& c = kc.coeffs.coeffs;
            out.points.push_back(z);
            out.values.push_back(c.dot(a.entries * c));
            out.kernel_tail.push_back(kc.tail);
            if (r == 0.0) break; // single point at the origin
        }
    }
    return out;
}

BerezinIdentityResult berezin_symbol_identity(const MeasureSpec& m, const FockSpace& fs,
                                              double tol) {
    const OperatorMatrix a = toeplitz_from_measure(m, fs);
    const SymbolSpec h = heat_transform(m, 1.0 / (4.0 * fs.params().alpha));
    const double norm_a = op_norm_2(a);
    // choose the sample radius so the kernel truncation tail cannot pollute
    // the comparison at the requested tolerance
    const double cap = 0.5 * fs.trust_radius();
    double r_max = cap;
    while (r_max > 0.5) {
        const double tail =
            std::sqrt(gamma_p(fs.params().degree + 1.0, fs.params().alpha * r_max * r_max));
        if (tail * (2.0 * norm_a + 1.0) <= 0.1 * tol) break;
        r_max *= 0.95;
    }
    BerezinIdentityResult res;
    res.sample_radius = r_max;
    const double scale = kPi / fs.params().alpha;
    for (int i = 0; i < 25; ++i) {
        const double r = r_max * i / 24.0;
        for (int q = 0; q < 16; ++q) {
            const Complex z = std::polar(r, 2.0 * kPi * q / 16.0);
            const Complex lhs = berezin_at(a, z, fs);
            const Complex rhs = scale * eval_symbol(h, z);
            res.max_abs_error = std::max(res.max_abs_error, std::abs(lhs - rhs));
            if (r == 0.0) break;
        }
    }
    return res;
}

SymbolSpec sharp_product(Complex v, Complex u, double beta, const TruncationParams& params) {
    if (!(beta > 0.0)) throw std::invalid_argument("sharp_product: beta must be positive");
    const double alpha = params.alpha;
    // Evaluating the sharp series termwise: d^g s_v = (alpha conj(v))^g s_v and
    // dbar^g q_beta(.-u) = (-beta)^g (z-u)^g q_beta(.-u), so
    //   f_beta = s_v q_beta(.-u) e^{beta (z-u) conj(v)}
    //          = (beta/pi) exp{ (alpha/2)|v|^2 + beta (z-u) conj(v)
    //                           + 2 i alpha Im(z conj(v)) - beta |z-u|^2 }.
    GaussianTerm t;
    t.c3 = -beta;
    t.c1 = beta * std::conj(v) + alpha * std::conj(v) + beta * std::conj(u);
    t.c2 = -alpha * v + beta * u;
    t.log_amp = Complex(std::log(beta / kPi), 0.0) +
                Complex(0.5 * alpha * std::norm(v), 0.0) - beta * u * std::conj(v) -
                Complex(beta * std::norm(u), 0.0);
    return GeneralizedGaussian{t};
}

double op_norm_2(const OperatorMatrix& a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.entries);
    return svd.singularValues()(0);
}

double compactness_index(const OperatorMatrix& a, int k) {
    if (k < 0 || k > a.params.degree)
        throw std::invalid_argument("compactness_index: k out of range");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.entries);
    return svd.singularValues()(k);
}

int shift_safe_degree(const TruncationParams& params, double w_abs) {
    const double spread = 0.5 * params.alpha * (w_abs + params.trust_radius()) *
                          (w_abs + params.trust_radius());
    const int b = params.degree - static_cast<int>(std::ceil(spread));
    return std::max(b, 0);
}

double block_restricted_norm(const Eigen::MatrixXcd& m, int block) {
    const int cols = std::min<int>(block + 1, static_cast<int>(m.cols()));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.leftCols(cols));
    return svd.singularValues()(0);
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m, double clip_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("psd_sqrt: eigendecomposition failed");
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] < clip_tol)
            throw std::runtime_error("psd_sqrt: matrix indefinite beyond clip threshold");
        ev[i] = std::sqrt(std::max(ev[i], 0.0));
    }
    return es.eigenvectors() * ev.cast<Complex>().asDiagonal() *
           es.eigenvectors().adjoint();
}

OperatorMatrix indicator_gram_annulus(double r0, double r1, const FockSpace& fs) {
    if (!(r0 >= 0.0) || !(r1 > r0))
        throw std::invalid_argument("indicator_gram_annulus: need 0 <= r0 < r1");
    const TruncationParams& p = fs.params();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p.size(), p.size());
    for (int k = 0; k <= p.degree; ++k) {
        const double hi = std::isinf(r1) ? 1.0 : gamma_p(k + 1.0, p.alpha * r1 * r1);
        const double lo = gamma_p(k + 1.0, p.alpha * r0 * r0);
        m(k, k) = hi - lo;
    }
    return OperatorMatrix(p, std::move(m));
}

namespace {

OperatorMatrix gram_from_rule(const std::vector<Complex>& nodes,
                              const std::vector<double>& weights, const FockSpace& fs) {
    const TruncationParams& p = fs.params();
    Eigen::MatrixXcd rows(nodes.size(), p.size());
    Eigen::VectorXd w(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        rows.row(static_cast<Eigen::Index>(i)) =
            weighted_basis_row(p, nodes[i]).transpose();
        w[static_cast<Eigen::Index>(i)] = weights[i];
    }
    Eigen::MatrixXcd m =
        rows.adjoint() * w.cast<Complex>().asDiagonal() * rows * (p.alpha / kPi);
    // enforce exact hermiticity against quadrature roundoff
    m = 0.5 * (m + m.adjoint()).eval();
    return OperatorMatrix(p, std::move(m));
}

} // namespace

OperatorMatrix indicator_gram_ball(const BallIndicator& region, const FockSpace& fs) {
    const TruncationParams& p = fs.params();
    if (!(region.radius > 0.0))
        throw std::invalid_argument("indicator_gram_ball: radius must be positive");
    OperatorMatrix q = [&] {
        if (region.center == Complex(0.0, 0.0))
            return indicator_gram_annulus(0.0, region.radius, fs);
        const int n_s = p.degree + 16;
        const int n_ang = 4 * p.degree + 64;
        DiskRule rule(region.center, region.radius, n_s, n_ang);
        return gram_from_rule(rule.nodes, rule.weights, fs);
    }();
    if (region.complement)
        q.entries = Eigen::MatrixXcd::Identity(p.size(), p.size()) - q.entries;
    return q;
}

OperatorMatrix indicator_gram_box(double x0, double x1, double y0, double y1,
                                  const FockSpace& fs) {
    if (!(x1 > x0) || !(y1 > y0))
        throw std::invalid_argument("indicator_gram_box: empty box");
    // wide boxes need nodes proportional to sqrt(alpha) * side to resolve the
    // Gaussian factor
    const double side = std::max(x1 - x0, y1 - y0);
    const int n = fs.params().degree + 24 +
                  static_cast<int>(std::ceil(3.0 * std::sqrt(fs.params().alpha) * side));
    std::vector<double> xs, wx, ys, wy;
    gauss_legendre(n, x0, x1, xs, wx);
    gauss_legendre(n, y0, y1, ys, wy);
    std::vector<Complex> nodes;
    std::vector<double> weights;
    nodes.reserve(static_cast<size_t>(n) * n);
    weights.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            nodes.emplace_back(xs[i], ys[j]);
            weights.push_back(wx[i] * wy[j]);
        }
    return gram_from_rule(nodes, weights, fs);
}

double restricted_norm(const OperatorMatrix& a, const BallIndicator& region,
                       const FockSpace& fs) {
    if (a.params != fs.params())
        throw std::invalid_argument("restricted_norm: parameter mismatch");
    const OperatorMatrix q = indicator_gram_ball(region, fs);
    const Eigen::MatrixXcd root = psd_sqrt(q.entries);
    return op_norm_2(OperatorMatrix(a.params, root * a.entries));
}

namespace {

double field_p_norm(const Eigen::VectorXcd& v, double p) {
    if (p == 4.0) return std::sqrt(std::sqrt(v.cwiseAbs2().squaredNorm()));
    if (p == 2.0) return std::sqrt(v.cwiseAbs2().sum());
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v[i]), p);
    return std::pow(acc, 1.0 / p);
}

} // namespace

double op_norm_p_lower(const OperatorMatrix& a, double p, int trials, std::uint64_t seed,
                       const FockSpace& fs, int max_degree) {
    if (a.params != fs.params())
        throw std::invalid_argument("op_norm_p_lower: parameter mismatch");
    if (!(p > 1.0)) throw std::invalid_argument("op_norm_p_lower: p must be > 1");
    const int n =
        max_degree < 0 ? fs.size() : std::min(max_degree + 1, fs.size());
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto pad = [&](const Eigen::VectorXcd& c) {
        Eigen::VectorXcd full = Eigen::VectorXcd::Zero(fs.size());
        full.head(n) = c;
        return full;
    };

    if (p == std::numeric_limits<double>::infinity()) {
        double best = 0.0;
        auto ratio = [&](const Eigen::VectorXcd& c) {
            CoeffVector f(fs.params(), pad(c));
            CoeffVector af(fs.params(), a.entries * pad(c));
            const double nf = fs.norm(f, p);
            return nf > 0.0 ? fs.norm(af, p) / nf : 0.0;
        };
        for (int k = 0; k < n; ++k)
            best = std::max(best, ratio(Eigen::VectorXcd::Unit(n, k)));
        for (int t = 0; t < trials; ++t) {
            Eigen::VectorXcd c(n);
            for (int k = 0; k < n; ++k) c[k] = Complex(gauss(rng), gauss(rng));
            best = std::max(best, ratio(c));
        }
        return best;
    }

    // Pre-scale rows by W^{1/p}; the ratio of norms cancels the (p alpha/2pi)
    // prefactor so field p-norms need no weight vector.
    const auto& g = fs.grid();
    Eigen::VectorXd wp = g.weights_flat().array().pow(1.0 / p).matrix();
    Eigen::MatrixXcd e_full = wp.cast<Complex>().asDiagonal() * g.weighted_basis();
    Eigen::MatrixXcd e_sc = e_full.leftCols(n);
    Eigen::MatrixXcd ea_sc = (e_full * a.entries).leftCols(n);

    double best = 0.0;
    auto eval = [&](const Eigen::VectorXcd& c) {
        const double nf = field_p_norm(e_sc * c, p);
        if (!(nf > 0.0)) return 0.0;
        return field_p_norm(ea_sc * c, p) / nf;
    };

    // deterministic starts: basis vectors
    Eigen::VectorXcd best_c = Eigen::VectorXcd::Unit(n, 0);
    for (int k = 0; k < n; ++k) {
        const double r = eval(Eigen::VectorXcd::Unit(n, k));
        if (r > best) {
            best = r;
            best_c = Eigen::VectorXcd::Unit(n, k);
        }
    }

    const Complex dirs[4] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
    auto ascend = [&](Eigen::VectorXcd c) {
        Eigen::VectorXcd f = e_sc * c;
        Eigen::VectorXcd af = ea_sc * c;
        double cur_nf = field_p_norm(f, p);
        double cur_na = field_p_norm(af, p);
        double cur = cur_nf > 0.0 ? cur_na / cur_nf : 0.0;
        double step = 0.5 * c.norm();
        if (!(step > 0.0)) step = 0.5;
        for (int sweep = 0; sweep < 2; ++sweep) {
            bool improved = false;
            for (int k = 0; k < n; ++k) {
                for (const Complex& d : dirs) {
                    const Complex dz = step * d;
                    const double nf = field_p_norm(f + dz * e_sc.col(k), p);
                    if (!(nf > 0.0)) continue;
                    const double na = field_p_norm(af + dz * ea_sc.col(k), p);
                    if (na / nf > cur) {
                        cur = na / nf;
                        c[k] += dz;
                        f += dz * e_sc.col(k);
                        af += dz * ea_sc.col(k);
                        improved = true;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
        return cur;
    };

    best = std::max(best, ascend(best_c));
    for (int t = 0; t < trials; ++t) {
        Eigen::VectorXcd c(n);
        for (int k = 0; k < n; ++k) c[k] = Complex(gauss(rng), gauss(rng));
        c.normalize();
        best = std::max(best, ascend(c));
    }
    return best;
}

SymbolSpec conj_symbol(const SymbolSpec& s) {
    auto conj_term = [](const GaussianTerm& t) {
        GaussianTerm r;
        r.log_amp = std::conj(t.log_amp);
        r.c1 = std::conj(t.c2);
        r.c2 = std::conj(t.c1);
        r.c3 = t.c3;
        return r;
    };
    if (const auto* g = std::get_if<GeneralizedGaussian>(&s))
        return GeneralizedGaussian{conj_term(g->term)};
    if (const auto* gs = std::get_if<GaussianSum>(&s)) {
        GaussianSum out;
        for (const auto& t : gs->terms) out.terms.push_back(conj_term(t));
        return out;
    }
    if (std::holds_alternative<BallIndicator>(s)) return s;
    throw std::invalid_argument("conj_symbol: unsupported variant");
}

} // namespace focklab
