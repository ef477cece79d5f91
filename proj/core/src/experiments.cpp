#include "focklab/experiments.hpp"
#include "focklab/special.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace focklab {

namespace {

constexpr double kPi = std::numbers::pi;

/// Worker pool over sweep points: every experiment is a pure function of its
/// inputs, so parameter points evaluate concurrently and results merge
/// deterministically in parameter order.
template <typename T, typename F>
auto ordered_parallel_map(const std::vector<T>& inputs, F fn)
    -> std::vector<decltype(fn(inputs.front()))> {
    using R = decltype(fn(inputs.front()));
    std::vector<std::future<R>> futures;
    futures.reserve(inputs.size());
    for (const auto& x : inputs)
        futures.push_back(std::async(std::launch::async, fn, x));
    std::vector<R> out;
    out.reserve(inputs.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

std::string num_key(double v) {
    char b[32];
    std::snprintf(b, sizeof(b), "%g", v);
    return b;
}

ExperimentReport make_report(const std::string& name, const FockSpace& fs,
                             const Fixtures* fx = nullptr) {
    ExperimentReport rep;
    rep.name = name;
    rep.alpha = fs.params().alpha;
    rep.degree = fs.params().degree;
    rep.trust_radius = fs.trust_radius();
    rep.fixture_version = fx ? fx->version() : Fixtures::builtin().version();
    return rep;
}

/// Record the measured value under the fixture key and assert against the
/// committed constant when it exists; a missing fixture is a failed assertion
/// (record the value and commit it).
void fixture_check(ExperimentReport& rep, const Fixtures& fx, const std::string& key,
                   double measured) {
    rep.context[key] = measured;
    if (auto v = fx.maybe(key))
        rep.assert_fixture(key, measured, *v);
    else
        rep.add_assertion(key, false, measured, 0.0, "missing fixture; record and commit");
}

void assert_strictly_decreasing(ExperimentReport& rep, const std::string& name,
                                const std::vector<double>& v) {
    bool ok = true;
    for (size_t i = 1; i < v.size(); ++i) ok = ok && v[i] < v[i - 1];
    rep.add_assertion(name, ok, v.empty() ? 0.0 : v.back(), 0.0, "strictly decreasing");
}

void assert_nonincreasing(ExperimentReport& rep, const std::string& name,
                          const std::vector<double>& v, double slack = 0.0) {
    bool ok = true;
    for (size_t i = 1; i < v.size(); ++i) ok = ok && v[i] <= v[i - 1] + slack;
    rep.add_assertion(name, ok, v.empty() ? 0.0 : v.back(), 0.0, "nonincreasing");
}

OperatorMatrix vacuum_projection(const FockSpace& fs) {
    const CoeffVector e0 = CoeffVector::basis(fs.params(), 0);
    return rank_one(e0, e0);
}

double lambda_max_psd(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    return std::max(es.eigenvalues().maxCoeff(), 0.0);
}

} // namespace

double default_lattice_cutoff(const FockSpace& fs) {
    return std::ceil(2.0 * fs.trust_radius()) + 1.0;
}

OperatorDesc OperatorDesc::identity() { return OperatorDesc{}; }

OperatorDesc OperatorDesc::vacuum() {
    OperatorDesc d;
    d.kind = Kind::Vacuum;
    d.name = "vacuum";
    return d;
}

OperatorDesc OperatorDesc::toeplitz(const std::string& name, SymbolSpec s) {
    OperatorDesc d;
    d.kind = Kind::ToeplitzSymbol;
    d.name = name;
    d.symbol = std::move(s);
    return d;
}

OperatorDesc OperatorDesc::toeplitz_measure(const std::string& name, MeasureSpec m) {
    OperatorDesc d;
    d.kind = Kind::ToeplitzMeasure;
    d.name = name;
    d.measure = std::move(m);
    return d;
}

OperatorDesc OperatorDesc::shift(Complex w) {
    OperatorDesc d;
    d.kind = Kind::Shift;
    d.name = "shift";
    d.shift_w = w;
    return d;
}

OperatorMatrix materialize(const OperatorDesc& d, const FockSpace& fs) {
    switch (d.kind) {
        case OperatorDesc::Kind::Identity:
            return OperatorMatrix::identity(fs.params());
        case OperatorDesc::Kind::Vacuum:
            return vacuum_projection(fs);
        case OperatorDesc::Kind::ToeplitzSymbol:
            return toeplitz_from_symbol(d.symbol, fs);
        case OperatorDesc::Kind::ToeplitzMeasure:
            return toeplitz_from_measure(d.measure, fs);
        case OperatorDesc::Kind::Shift:
            return weighted_shift(d.shift_w, fs);
    }
    throw std::logic_error("materialize: unknown kind");
}

namespace {

/// sup_z (alpha/pi) Int |g(w)| e^{-(alpha/2)|z-w|^2} dv(w) for one Gaussian
/// term, in closed form (|g| is again a Gaussian).
double gaussian_carleson_sup(const GaussianTerm& t, double alpha) {
    GaussianTerm mod; // |t|
    mod.log_amp = Complex(std::real(t.log_amp), 0.0);
    mod.c1 = 0.5 * (t.c1 + std::conj(t.c2));
    mod.c2 = std::conj(mod.c1);
    mod.c3 = t.c3;
    const double s = 0.5 * alpha;
    const double a = s - mod.c3;
    GaussianTerm conv;
    conv.log_amp = mod.log_amp + std::log(kPi / a) + mod.c1 * mod.c2 / a;
    conv.c1 = s * mod.c1 / a;
    conv.c2 = s * mod.c2 / a;
    conv.c3 = s * mod.c3 / a;
    Complex zstar(0.0, 0.0);
    if (conv.c3 < 0.0)
        zstar = -conv.c2 / conv.c3;
    else if (std::abs(conv.c1) > 1e-14)
        throw std::invalid_argument("inf_norm_upper: unbounded Gaussian symbol");
    return (alpha / kPi) * std::real(conv.eval(zstar));
}

} // namespace

double inf_norm_upper(const OperatorDesc& d, const FockSpace& fs) {
    const double alpha = fs.params().alpha;
    switch (d.kind) {
        case OperatorDesc::Kind::Identity:
            return 1.0;
        case OperatorDesc::Kind::Vacuum:
            return 1.0; // ||delta_0||_* attained at the atom
        case OperatorDesc::Kind::Shift:
            return 1.0; // C_alpha(w) is an isometry of F_inf
        case OperatorDesc::Kind::ToeplitzMeasure: {
            const auto atoms = atoms_of(d.measure, fs.params());
            const CarlesonQuantities cq = carleson_quantities(d.measure, 1.0, fs.params());
            // single atoms attain the sup at the atom itself; otherwise pad the
            // grid-search value to keep the bound on the safe side
            return atoms.size() <= 1 ? cq.star : 1.02 * cq.star;
        }
        case OperatorDesc::Kind::ToeplitzSymbol: {
            if (const auto* g = std::get_if<GeneralizedGaussian>(&d.symbol)) {
                const auto& t = g->term;
                if (t.c1 == Complex(0, 0) && t.c2 == Complex(0, 0) && t.c3 == 0.0)
                    return std::abs(std::exp(t.log_amp)); // constant symbol: T_c = c I
                return gaussian_carleson_sup(t, alpha);
            }
            if (const auto* gs = std::get_if<GaussianSum>(&d.symbol)) {
                double acc = 0.0;
                for (const auto& t : gs->terms) acc += gaussian_carleson_sup(t, alpha);
                return acc;
            }
            if (const auto* ball = std::get_if<BallIndicator>(&d.symbol)) {
                if (ball->complement) return 2.0;
                return 2.0 * (1.0 - std::exp(-0.5 * alpha * ball->radius * ball->radius));
            }
            throw std::invalid_argument("inf_norm_upper: unsupported symbol variant");
        }
    }
    throw std::logic_error("inf_norm_upper: unknown kind");
}

// --- Theorem 3.7 -------------------------------------------------------------

ExperimentReport run_thm37(const MeasureSpec& m, const std::vector<double>& betas,
                           const FockSpace& fs) {
    ExperimentReport rep = make_report("thm37", fs);
    rep.columns = {"beta", "error"};
    for (double beta : betas)
        if (!(beta > 0.0)) throw std::invalid_argument("run_thm37: beta must be positive");
    const OperatorMatrix tnu = toeplitz_from_measure(m, fs);
    const double scale = kPi / fs.params().alpha;
    const std::vector<double> errs = ordered_parallel_map(betas, [&](double beta) {
        const SymbolSpec h = heat_transform(m, 1.0 / beta);
        const OperatorMatrix th = toeplitz_from_symbol(h, fs);
        return op_norm_2(OperatorMatrix(fs.params(), scale * th.entries - tnu.entries));
    });
    for (size_t i = 0; i < betas.size(); ++i) rep.rows.push_back({betas[i], errs[i]});
    assert_strictly_decreasing(rep, "error_strictly_decreasing", errs);
    rep.assert_le("final_error", errs.back(), 1e-2);
    return rep;
}

// --- Lemma 3.8 ---------------------------------------------------------------

ExperimentReport run_lem38(const std::vector<double>& betas, const FockSpace& fs) {
    ExperimentReport rep = make_report("lem38", fs);
    rep.columns = {"beta", "error_normalized", "error_unnormalized", "entry00"};
    const double alpha = fs.params().alpha;
    const OperatorMatrix e00 = vacuum_projection(fs);
    const double scale = kPi / alpha;
    struct Row {
        double err_n, err_u, entry00;
    };
    const std::vector<Row> out = ordered_parallel_map(betas, [&](double beta) {
        const OperatorMatrix tq = toeplitz_from_symbol(make_q_beta(beta), fs);
        Row r;
        r.err_n = op_norm_2(OperatorMatrix(fs.params(), scale * tq.entries - e00.entries));
        r.err_u = op_norm_2(OperatorMatrix(fs.params(), tq.entries - e00.entries));
        r.entry00 = std::real(scale * tq.entries(0, 0));
        return r;
    });
    std::vector<double> errs;
    double entry_dev = 0.0;
    for (size_t i = 0; i < betas.size(); ++i) {
        const double beta = betas[i];
        entry_dev = std::max(entry_dev, std::abs(out[i].entry00 - beta / (alpha + beta)));
        rep.rows.push_back({beta, out[i].err_n, out[i].err_u, out[i].entry00});
        errs.push_back(out[i].err_n);
    }
    assert_strictly_decreasing(rep, "normalized_error_strictly_decreasing", errs);
    rep.assert_le("normalized_final_error", errs.back(), 1e-2);
    rep.assert_le("entry00_vs_beta_over_alpha_plus_beta", entry_dev, 1e-8);
    // unnormalized limit: T_{q_beta} -> (alpha/pi) 1(x)1, so the gap tends to
    // |1 - alpha/pi|; certified by the triangle inequality from the
    // normalized error.
    const double gap = std::abs(1.0 - alpha / kPi);
    const double err_u_last = rep.rows.back()[2];
    rep.assert_close("unnormalized_gap_limit", err_u_last, gap,
                     (alpha / kPi) * errs.back() + 1e-9);
    return rep;
}

// --- Theorem 3.9 -------------------------------------------------------------

ExperimentReport run_thm39(Complex v, Complex w, const std::vector<double>& betas,
                           const FockSpace& fs) {
    ExperimentReport rep = make_report("thm39", fs);
    rep.columns = {"beta", "rank_one_error", "conjugated_error", "lem38_error",
                   "invariance_gap"};
    const double alpha = fs.params().alpha;
    const double half = 0.5 * fs.trust_radius();
    if (std::abs(v) > half || std::abs(w) > half)
        throw std::invalid_argument("run_thm39: |v|, |w| must be <= trust_radius/2");
    const OperatorMatrix cv = weighted_shift(v, fs);
    const OperatorMatrix cmw = weighted_shift(-w, fs);
    const CoeffVector kv = fs.kernel_coeffs(v, false).coeffs;
    const CoeffVector kw = fs.kernel_coeffs(w, false).coeffs;
    const OperatorMatrix target = rank_one(kv, kw);
    const double scale_vw = std::exp(0.5 * alpha * (std::norm(v) + std::norm(w)));
    const OperatorMatrix e00 = vacuum_projection(fs);
    const double op_scale = kPi / alpha;
    struct Row {
        double err, err_conj, err38;
    };
    const std::vector<Row> out = ordered_parallel_map(betas, [&](double beta) {
        const OperatorMatrix tq = toeplitz_from_symbol(make_q_beta(beta), fs);
        const Eigen::MatrixXcd n = op_scale * tq.entries;
        Row r;
        r.err38 = op_norm_2(OperatorMatrix(fs.params(), n - e00.entries));
        const Eigen::MatrixXcd approx = scale_vw * (cv.entries * n * cmw.entries);
        r.err = op_norm_2(OperatorMatrix(fs.params(), approx - target.entries));
        r.err_conj = r.err / scale_vw;
        return r;
    });
    std::vector<double> errs;
    double max_gap = 0.0;
    for (size_t i = 0; i < betas.size(); ++i) {
        const double gap = std::abs(out[i].err_conj - out[i].err38);
        max_gap = std::max(max_gap, gap);
        rep.rows.push_back({betas[i], out[i].err, out[i].err_conj, out[i].err38, gap});
        errs.push_back(out[i].err);
    }
    assert_strictly_decreasing(rep, "rank_one_error_strictly_decreasing", errs);
    // unitary invariance: conjugation by the isometries C(v), C(-w) preserves
    // the operator norm, so the scale-free errors agree up to truncation
    rep.assert_le("unitary_invariance_gap", max_gap, 1e-3);
    rep.assert_le("final_conjugated_error", rep.rows.back()[2], 5e-3);
    return rep;
}

// --- Lemma 4.3 ---------------------------------------------------------------

ExperimentReport run_lem43(const std::vector<double>& epsilons, const FockSpace& fs,
                           const Fixtures& fx) {
    ExperimentReport rep = make_report("lem43", fs, &fx);
    rep.columns = {"epsilon", "sigma_min", "condition"};
    const double cutoff = default_lattice_cutoff(fs);
    const int block = fs.params().degree / 2;
    struct Row {
        double lo, hi;
    };
    const std::vector<Row> out = ordered_parallel_map(epsilons, [&](double eps) {
        const OperatorMatrix t = toeplitz_from_measure(LatticeMeasure{eps, cutoff}, fs);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
            t.entries.topLeftCorner(block + 1, block + 1));
        return Row{es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
    });
    std::vector<double> sig;
    for (size_t i = 0; i < epsilons.size(); ++i) {
        const double lo = out[i].lo, hi = out[i].hi;
        rep.rows.push_back({epsilons[i], lo, lo > 0.0 ? hi / lo : std::nan("")});
        sig.push_back(lo);
        fixture_check(rep, fx,
                      "lem43/sigma_min/alpha=" + num_key(fs.params().alpha) +
                          "/eps=" + num_key(epsilons[i]),
                      lo);
    }
    bool increasing = true;
    for (size_t i = 1; i < sig.size(); ++i) {
        if (epsilons[i] < epsilons[i - 1]) increasing = increasing && sig[i] > sig[i - 1];
    }
    rep.add_assertion("sigma_min_grows_as_eps_shrinks", increasing,
                      sig.empty() ? 0.0 : sig.back(), 0.0,
                      "denser lattices give better frame bounds");
    for (size_t i = 0; i < sig.size(); ++i)
        if (epsilons[i] <= 0.5)
            rep.assert_ge("sigma_min_positive/eps=" + num_key(epsilons[i]), sig[i], 1e-6);
    return rep;
}

// --- Lemma 4.1 surrogate -----------------------------------------------------

namespace {

struct InterpolationResult {
    double norm = 0.0;
    double residual = 0.0;
};

/// Minimal-F^2-norm interpolant hitting delta data at k0 through the
/// normalized-kernel Gram system.
InterpolationResult solve_interpolation(const std::vector<Complex>& pts, int k0,
                                        const FockSpace& fs) {
    const int m = static_cast<int>(pts.size());
    const double alpha = fs.params().alpha;
    Eigen::MatrixXcd gram(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Complex e = alpha * pts[i] * std::conj(pts[j]);
            gram(i, j) = std::exp(e - Complex(0.5 * alpha * (std::norm(pts[i]) +
                                                             std::norm(pts[j])),
                                              0.0));
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > 1e12)
        throw std::runtime_error(
            "run_lem41: kernel Gram condition number exceeds 1e12 (separation too small)");
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(m);
    b[k0] = std::exp(-0.5 * alpha * std::norm(pts[k0]));
    auto apply_inverse = [&](const Eigen::VectorXcd& rhs) {
        return (es.eigenvectors() *
                es.eigenvalues().cwiseInverse().cast<Complex>().asDiagonal() *
                es.eigenvectors().adjoint() * rhs)
            .eval();
    };
    Eigen::VectorXcd c = apply_inverse(b);
    // iterative refinement with an extended-precision residual; dense
    // separated configurations push the Gram condition number high enough
    // that a single solve leaves ~1e-8 interpolation residuals
    using LComplex = std::complex<long double>;
    auto residual_vector = [&](const Eigen::VectorXcd& coef) {
        Eigen::VectorXcd resid(m);
        for (int i = 0; i < m; ++i) {
            LComplex acc(b[i].real(), b[i].imag());
            for (int j = 0; j < m; ++j)
                acc -= LComplex(gram(i, j).real(), gram(i, j).imag()) *
                       LComplex(coef[j].real(), coef[j].imag());
            resid[i] = Complex(static_cast<double>(acc.real()),
                               static_cast<double>(acc.imag()));
        }
        return resid;
    };
    for (int pass = 0; pass < 3; ++pass) c += apply_inverse(residual_vector(c));
    InterpolationResult out;
    out.norm = std::sqrt(std::max(std::real(c.dot(b)), 0.0));
    // interpolation residual of the kernel combination itself, in weighted
    // form: the interpolant is g = sum c_i k_{w_i}, whose values at the nodes
    // are exactly the Gram products
    out.residual = residual_vector(c).cwiseAbs().maxCoeff();
    return out;
}

std::vector<Complex> random_separated_points(std::mt19937_64& rng, int count, double sep,
                                             double r) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<Complex> pts;
    int attempts = 0;
    while (static_cast<int>(pts.size()) < count) {
        if (++attempts > 100000)
            throw std::runtime_error("random_separated_points: packing failed");
        const Complex z = std::polar(r * std::sqrt(unif(rng)), 2.0 * kPi * unif(rng));
        bool ok = true;
        for (const Complex& p : pts)
            if (std::abs(p - z) < sep) {
                ok = false;
                break;
            }
        if (ok) pts.push_back(z);
    }
    return pts;
}

} // namespace

ExperimentReport run_lem41_interpolation(const std::vector<Complex>& points,
                                         std::uint64_t seed, const FockSpace& fs,
                                         const Fixtures& fx) {
    ExperimentReport rep = make_report("lem41", fs, &fx);
    rep.seed = seed;
    rep.columns = {"k0", "interpolant_norm", "residual"};
    if (points.empty()) throw std::invalid_argument("run_lem41: no points");
    double max_resid = 0.0;
    for (int k0 = 0; k0 < static_cast<int>(points.size()); ++k0) {
        const InterpolationResult r = solve_interpolation(points, k0, fs);
        rep.rows.push_back({static_cast<double>(k0), r.norm, r.residual});
        max_resid = std::max(max_resid, r.residual);
    }
    rep.assert_le("residual", max_resid, 1e-8);
    // transparency: how well the degree-D re-expansion of the k0 = 0
    // interpolant reproduces the delta data (limited by the kernel
    // truncation tail at the outermost points)
    {
        const double alpha = fs.params().alpha;
        Eigen::MatrixXcd gram(points.size(), points.size());
        Eigen::VectorXcd b = Eigen::VectorXcd::Zero(points.size());
        for (size_t i = 0; i < points.size(); ++i)
            for (size_t j = 0; j < points.size(); ++j)
                gram(i, j) = std::exp(
                    alpha * points[i] * std::conj(points[j]) -
                    Complex(0.5 * alpha * (std::norm(points[i]) + std::norm(points[j])),
                            0.0));
        b[0] = std::exp(-0.5 * alpha * std::norm(points[0]));
        const Eigen::VectorXcd c = gram.ldlt().solve(b);
        Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(fs.size());
        for (size_t i = 0; i < points.size(); ++i)
            coeffs += c[static_cast<Eigen::Index>(i)] *
                      fs.kernel_coeffs(points[i], true).coeffs.coeffs;
        const CoeffVector g(fs.params(), coeffs);
        double dev = 0.0;
        for (size_t i = 0; i < points.size(); ++i)
            dev = std::max(dev, std::abs(evaluate_weighted(g, points[i]) -
                                         (i == 0 ? b[0] : Complex(0, 0))));
        rep.context["truncated_expansion_deviation"] = dev;
    }

    // norm sweep over random admissible configurations (sep 0.5, ball r = 3).
    // The sweep configurations are part of the experiment definition (pinned
    // generator seed) so the recorded norm constant stays comparable across
    // invocations; the caller seed is recorded in the manifest.
    const double sep = 0.5, radius = 3.0;
    const int configs = 20, per = 12;
    std::mt19937_64 rng(0x134D2026);
    std::vector<std::vector<Complex>> sweeps;
    for (int c = 0; c < configs; ++c)
        sweeps.push_back(random_separated_points(rng, per, sep, radius));
    struct Extremes {
        double norm = 0.0, resid = 0.0;
    };
    const std::vector<Extremes> ext =
        ordered_parallel_map(sweeps, [&](const std::vector<Complex>& pts) {
            Extremes e;
            for (int k0 = 0; k0 < per; ++k0) {
                const InterpolationResult r = solve_interpolation(pts, k0, fs);
                e.norm = std::max(e.norm, r.norm);
                e.resid = std::max(e.resid, r.residual);
            }
            return e;
        });
    double max_norm = 0.0, sweep_resid = 0.0;
    for (const auto& e : ext) {
        max_norm = std::max(max_norm, e.norm);
        sweep_resid = std::max(sweep_resid, e.resid);
    }
    rep.context["sweep_max_norm"] = max_norm;
    rep.assert_le("sweep_residual", sweep_resid, 1e-8);
    fixture_check(rep, fx, "lem41/max_norm/alpha=" + num_key(fs.params().alpha),
                  max_norm);
    return rep;
}

// --- Lemma 2.6 band operators ------------------------------------------------

ExperimentReport run_lem26_band(const MeasureSpec& m, const std::vector<double>& deltas,
                                const FockSpace& fs, const Fixtures& fx) {
    ExperimentReport rep = make_report("lem26", fs, &fx);
    rep.columns = {"delta", "band_operator_norm", "band_decay"};
    const std::vector<Atom> atoms = atoms_of(m, fs.params());
    const int n_ann = static_cast<int>(std::ceil(2.0 * fs.trust_radius()));
    struct Row {
        double norm, band;
    };
    const std::vector<Row> out = ordered_parallel_map(deltas, [&](double delta) {
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(fs.size(), fs.size());
        for (int j = 0; j < n_ann; ++j) {
            // annulus F_j = {j <= |z| < j+1}; K_j = {dist(., F_j) > delta}
            std::vector<Atom> kj;
            for (const auto& a : atoms) {
                const double rho = std::abs(a.location);
                const double dist =
                    rho < j ? j - rho : (rho > j + 1 ? rho - (j + 1) : 0.0);
                if (dist > delta) kj.push_back(a);
            }
            if (kj.empty()) continue;
            const OperatorMatrix sj = toeplitz_from_measure(PointMasses{kj}, fs);
            const OperatorMatrix qj =
                indicator_gram_annulus(static_cast<double>(j), j + 1.0, fs);
            acc += sj.entries.adjoint() * qj.entries.diagonal().asDiagonal() * sj.entries;
        }
        return Row{std::sqrt(lambda_max_psd(acc)), band_decay(m, delta, fs.params())};
    });
    std::vector<double> norms, bands;
    double ratio_bound = 0.0;
    for (size_t i = 0; i < deltas.size(); ++i) {
        rep.rows.push_back({deltas[i], out[i].norm, out[i].band});
        norms.push_back(out[i].norm);
        bands.push_back(out[i].band);
        if (out[i].band > 1e-15)
            ratio_bound = std::max(ratio_bound, out[i].norm / out[i].band);
    }
    assert_nonincreasing(rep, "norm_nonincreasing", norms);
    assert_nonincreasing(rep, "band_decay_nonincreasing", bands);
    if (norms.front() > 0.0)
        rep.assert_le("norm_decay_ratio", norms.back() / norms.front(), 1e-3);
    if (bands.front() > 0.0)
        rep.assert_le("band_decay_ratio", bands.back() / bands.front(), 1e-3);
    fixture_check(rep, fx, "lem26/norm_over_band/alpha=" + num_key(fs.params().alpha),
                  ratio_bound);
    return rep;
}

// --- Lemma 3.3 box partitions ------------------------------------------------

namespace {

/// Radius beyond which every weighted basis function is below the tail
/// threshold; boxes wholly outside contribute nothing.
double effective_support_radius(const FockSpace& fs) {
    const double alpha = fs.params().alpha;
    double r = fs.trust_radius();
    while (gamma_q(fs.params().degree + 1.0, alpha * r * r) > 1e-26) r += 0.25;
    return r;
}

} // namespace

ExperimentReport run_lem33_partition(const SymbolSpec& symbol_for_a,
                                     const std::vector<double>& deltas,
                                     const FockSpace& fs, const Fixtures& fx) {
    ExperimentReport rep = make_report("lem33", fs, &fx);
    rep.columns = {"delta", "error", "error_over_ATnu"};
    const OperatorMatrix a = toeplitz_from_symbol(symbol_for_a, fs);
    const MeasureSpec nu = LatticeMeasure{0.5, default_lattice_cutoff(fs)};
    const std::vector<Atom> atoms = atoms_of(nu, fs.params());
    const OperatorMatrix tnu = toeplitz_from_measure(nu, fs);
    const double at_norm =
        op_norm_2(OperatorMatrix(fs.params(), a.entries * tnu.entries));
    rep.context["ATnu_norm"] = at_norm;
    const double r_eff = effective_support_radius(fs);
    for (double delta : deltas)
        if (!(delta > 0.0))
            throw std::invalid_argument("run_lem33_partition: delta must be positive");
    struct Row {
        double err, qdev;
    };
    const std::vector<Row> out = ordered_parallel_map(deltas, [&](double delta) {
        const int reach = static_cast<int>(std::ceil((r_eff + delta) / (2.0 * delta)));
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(fs.size(), fs.size());
        Eigen::MatrixXcd qsum = Eigen::MatrixXcd::Zero(fs.size(), fs.size());
        for (int bi = -reach; bi <= reach; ++bi) {
            for (int bj = -reach; bj <= reach; ++bj) {
                const Complex c(2.0 * delta * bi, 2.0 * delta * bj);
                // skip boxes wholly outside the effective support
                const double dx = std::max(std::abs(c.real()) - delta, 0.0);
                const double dy = std::max(std::abs(c.imag()) - delta, 0.0);
                if (dx * dx + dy * dy > r_eff * r_eff) continue;
                const OperatorMatrix q = indicator_gram_box(
                    c.real() - delta, c.real() + delta, c.imag() - delta,
                    c.imag() + delta, fs);
                qsum += q.entries;
                // G_j is the delta-neighborhood box of side 4 delta
                std::vector<Atom> outside;
                for (const auto& at : atoms) {
                    const double din = std::max(std::abs(at.location.real() - c.real()),
                                                std::abs(at.location.imag() - c.imag()));
                    if (din > 2.0 * delta) outside.push_back(at);
                }
                if (outside.empty()) continue;
                const OperatorMatrix sj = toeplitz_from_measure(PointMasses{outside}, fs);
                const Eigen::MatrixXcd asj = a.entries * sj.entries;
                acc += asj.adjoint() * q.entries * asj;
            }
        }
        Row r;
        r.err = std::sqrt(lambda_max_psd(acc));
        r.qdev = (qsum - Eigen::MatrixXcd::Identity(fs.size(), fs.size()))
                     .cwiseAbs()
                     .maxCoeff();
        return r;
    });
    std::vector<double> errs;
    double qsum_dev_max = 0.0;
    for (size_t i = 0; i < deltas.size(); ++i) {
        qsum_dev_max = std::max(qsum_dev_max, out[i].qdev);
        rep.rows.push_back({deltas[i], out[i].err,
                            at_norm > 0.0 ? out[i].err / at_norm : 0.0});
        errs.push_back(out[i].err);
    }
    rep.context["partition_identity_deviation"] = qsum_dev_max;
    rep.add_assertion("partition_covers_support", qsum_dev_max <= 1e-8, qsum_dev_max,
                      1e-8, "sum of box Grams reproduces the identity");
    assert_nonincreasing(rep, "error_nonincreasing", errs);
    for (size_t i = 0; i < deltas.size(); ++i) {
        if (deltas[i] == 4.0) {
            rep.assert_le("error_ratio_at_delta4", rep.rows[i][2], 0.05);
            fixture_check(rep, fx,
                          "lem33/error_ratio/delta=4/alpha=" +
                              num_key(fs.params().alpha),
                          rep.rows[i][2]);
        }
    }
    return rep;
}

// --- Theorem 6.2 profiles ----------------------------------------------------

namespace {

double gamma_profile(const OperatorMatrix& a, double r, const FockSpace& fs) {
    if (r <= 0.0) return op_norm_2(a);
    return restricted_norm(a, BallIndicator{Complex(0, 0), r, true}, fs);
}

/// alpha_A(r) surrogate at a fixed far ring point z: extremal ratio
/// ||A f|| / ||f|| over span{ K(., sigma) : sigma in lattice cap B(z, r) },
/// solved as a generalized eigenproblem against the exact kernel Gram
/// restricted to its numerically well-defined eigenspace.
double alpha_profile_at(const OperatorMatrix& a, Complex z, double r,
                        const std::vector<Atom>& lattice, const FockSpace& fs) {
    std::vector<Complex> pts;
    for (const auto& at : lattice)
        if (std::abs(at.location - z) <= r) pts.push_back(at.location);
    if (pts.empty()) return 0.0;
    const int m = static_cast<int>(pts.size());
    const double alpha = fs.params().alpha;
    Eigen::MatrixXcd phi(fs.size(), m);
    Eigen::MatrixXcd gram(m, m);
    for (int i = 0; i < m; ++i) {
        phi.col(i) = fs.kernel_coeffs(pts[i], true).coeffs.coeffs;
        for (int j = 0; j < m; ++j)
            gram(i, j) = std::exp(alpha * pts[i] * std::conj(pts[j]) -
                                  Complex(0.5 * alpha *
                                              (std::norm(pts[i]) + std::norm(pts[j])),
                                          0.0));
    }
    const Eigen::MatrixXcd aphi = a.entries * phi;
    const Eigen::MatrixXcd num = aphi.adjoint() * aphi;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
    const double lmax = es.eigenvalues().maxCoeff();
    std::vector<int> keep;
    for (int i = 0; i < m; ++i)
        if (es.eigenvalues()[i] > 1e-12 * lmax) keep.push_back(i);
    if (keep.empty())
        throw std::runtime_error("alpha_profile: kernel Gram fully degenerate");
    Eigen::MatrixXcd w(m, keep.size());
    for (size_t i = 0; i < keep.size(); ++i)
        w.col(static_cast<Eigen::Index>(i)) =
            es.eigenvectors().col(keep[i]) / std::sqrt(es.eigenvalues()[keep[i]]);
    return std::sqrt(lambda_max_psd(w.adjoint() * num * w));
}

} // namespace

ExperimentReport run_thm62_profiles(const OperatorDesc& desc,
                                    const std::vector<double>& r_sweep, double d,
                                    const FockSpace& fs) {
    ExperimentReport rep = make_report("thm62", fs);
    rep.columns = {"r", "gamma", "alpha_r", "beta_ring"};
    rep.context["d"] = d;
    const OperatorMatrix a = materialize(desc, fs);
    const double half = 0.5 * fs.trust_radius();
    for (double r : r_sweep)
        if (r > half + 1e-12)
            throw std::invalid_argument("run_thm62: r values must be <= trust_radius/2");
    const std::vector<Atom> lattice =
        atoms_of(LatticeMeasure{0.5, default_lattice_cutoff(fs)}, fs.params());
    struct Row {
        double g, al, be;
    };
    const std::vector<Row> out = ordered_parallel_map(r_sweep, [&](double r) {
        Row row;
        row.g = gamma_profile(a, r, fs);
        row.al = 0.0;
        for (int q = 0; q < 8; ++q) {
            const Complex z = std::polar(half, 2.0 * kPi * q / 8.0);
            row.al = std::max(row.al,
                              alpha_profile_at(a, z, std::max(r, 1e-9), lattice, fs));
        }
        row.be = 0.0;
        for (int q = 0; q < 4; ++q) {
            const Complex z = std::polar(r, 2.0 * kPi * q / 4.0 + kPi / 8.0);
            row.be = std::max(row.be, restricted_norm(a, BallIndicator{z, d, false}, fs));
        }
        return row;
    });
    std::vector<double> alphas;
    for (size_t i = 0; i < r_sweep.size(); ++i) {
        rep.rows.push_back({r_sweep[i], out[i].g, out[i].al, out[i].be});
        alphas.push_back(out[i].al);
    }
    bool mono = true;
    for (size_t i = 1; i < alphas.size(); ++i)
        mono = mono && alphas[i] >= alphas[i - 1] - 1e-8;
    rep.add_assertion("alpha_nondecreasing_in_r", mono,
                      alphas.empty() ? 0.0 : alphas.back(), 0.0,
                      "alpha_A(r) is increasing in r");
    return rep;
}

// --- Corollary 6.3 -----------------------------------------------------------

ExperimentReport run_cor63(const OperatorDesc& desc, const CoeffVector& f,
                           const std::vector<double>& ring_radii, const FockSpace& fs) {
    ExperimentReport rep = make_report("cor63", fs);
    rep.columns = {"ring_radius", "translate_profile"};
    if (std::abs(f.norm2() - 1.0) > 1e-9)
        throw std::invalid_argument("run_cor63: f must be unit-normalized");
    const double half = 0.5 * fs.trust_radius();
    const OperatorMatrix a = materialize(desc, fs);
    for (double r : ring_radii)
        if (r > half + 1e-12)
            throw std::invalid_argument("run_cor63: ring radii must be <= trust_radius/2");
    const std::vector<double> profile = ordered_parallel_map(ring_radii, [&](double r) {
        double best = 0.0;
        for (int q = 0; q < 16; ++q) {
            const Complex z = std::polar(r, 2.0 * kPi * q / 16.0);
            const OperatorMatrix cz = weighted_shift(z, fs);
            const OperatorMatrix cmz = weighted_shift(-z, fs);
            const Eigen::VectorXcd v = cz.entries * (a.entries * (cmz.entries * f.coeffs));
            best = std::max(best, v.norm());
            if (r == 0.0) break;
        }
        return best;
    });
    for (size_t i = 0; i < ring_radii.size(); ++i)
        rep.rows.push_back({ring_radii[i], profile[i]});
    rep.add_assertion("profile_finite",
                      std::all_of(rep.rows.begin(), rep.rows.end(),
                                  [](const auto& row) { return std::isfinite(row[1]); }),
                      0.0, 0.0, "all profile values finite");
    return rep;
}

// --- Theorem 1.1 dichotomy gallery -------------------------------------------

std::vector<OperatorDesc> dichotomy_gallery(const FockSpace& fs) {
    std::vector<OperatorDesc> g;
    g.push_back(OperatorDesc::vacuum());
    g.push_back(OperatorDesc::toeplitz("indicator_ball_1",
                                       BallIndicator{Complex(0, 0), 1.0, false}));
    g.push_back(OperatorDesc::toeplitz("gaussian_q1", make_q_beta(1.0)));
    g.push_back(OperatorDesc::identity());
    g.push_back(OperatorDesc::shift(Complex(1.0, 0.0)));
    g.push_back(OperatorDesc::toeplitz("shift_symbol_sw",
                                       make_s_w(fs.params().alpha, Complex(0.5, 0.5))));
    return g;
}

ExperimentReport run_thm11_dichotomy(const FockSpace& fs, const Fixtures& fx) {
    ExperimentReport rep = make_report("thm11", fs, &fx);
    rep.columns = {"exhibit", "r", "berezin_sup", "gamma"};
    const std::vector<OperatorDesc> gallery = dichotomy_gallery(fs);
    const bool compact[6] = {true, true, true, false, false, false};
    const double half = 0.5 * fs.trust_radius();
    const int n_r = 11;
    const int tail_k = fs.params().degree / 2;
    struct ExhibitProfile {
        std::vector<double> bs, gs;
        double tail = 0.0;
    };
    std::vector<size_t> indices(gallery.size());
    for (size_t gi = 0; gi < gallery.size(); ++gi) indices[gi] = gi;
    const std::vector<ExhibitProfile> profiles =
        ordered_parallel_map(indices, [&](size_t gi) {
            const OperatorMatrix a = materialize(gallery[gi], fs);
            ExhibitProfile pr;
            for (int i = 0; i < n_r; ++i) {
                const double r = half * i / (n_r - 1);
                double bsup = 0.0;
                for (int q = 0; q < 16; ++q) {
                    const Complex z = std::polar(r, 2.0 * kPi * q / 16.0);
                    bsup = std::max(bsup, std::abs(berezin_at(a, z, fs)));
                    if (r == 0.0) break;
                }
                pr.bs.push_back(bsup);
                pr.gs.push_back(gamma_profile(a, r, fs));
            }
            pr.tail = compactness_index(a, tail_k) / compactness_index(a, 0);
            return pr;
        });
    double indicator_scale = 0.0;
    for (size_t gi = 0; gi < gallery.size(); ++gi) {
        const ExhibitProfile& pr = profiles[gi];
        for (int i = 0; i < n_r; ++i) {
            const double r = half * i / (n_r - 1);
            rep.rows.push_back({static_cast<double>(gi), r, pr.bs[i], pr.gs[i]});
            if (gi == 1 && r > 2.0) {
                const double envelope =
                    std::exp(-fs.params().alpha * (r - 1.0) * (r - 1.0));
                indicator_scale = std::max(indicator_scale, pr.bs[i] / envelope);
            }
        }
        const double b0 = pr.bs.front(), g0 = pr.gs.front();
        const double bmin = *std::min_element(pr.bs.begin(), pr.bs.end());
        const double gmin = *std::min_element(pr.gs.begin(), pr.gs.end());
        const std::string nm = gallery[gi].name;
        rep.context["tail_ratio/" + nm] = pr.tail;
        if (compact[gi]) {
            rep.assert_le("berezin_decays/" + nm, bmin, 0.1 * b0);
            rep.assert_le("gamma_decays/" + nm, gmin, 0.1 * g0);
            rep.assert_le("singular_tail_small/" + nm, pr.tail, 0.1);
        } else {
            rep.assert_ge("berezin_persists/" + nm, bmin, 0.5 * b0);
            rep.assert_ge("gamma_persists/" + nm, gmin, 0.5 * g0);
            rep.assert_ge("singular_tail_large/" + nm, pr.tail, 0.5);
        }
    }
    fixture_check(rep, fx,
                  "thm11/indicator_berezin_scale/alpha=" + num_key(fs.params().alpha),
                  indicator_scale);
    return rep;
}

// --- Lemma 1.2 interpolation bound -------------------------------------------

ExperimentReport run_lem12_interpolation_bound(const std::vector<OperatorDesc>& ops,
                                               double p, int trials, std::uint64_t seed,
                                               const FockSpace& fs) {
    if (!(p > 2.0) || std::isinf(p))
        throw std::invalid_argument("run_lem12: p must be in (2, inf)");
    ExperimentReport rep = make_report("lem12", fs);
    rep.seed = seed;
    rep.columns = {"operator", "p_lower", "norm2", "inf_upper", "interpolation_bound"};
    // the lower-bound search runs on the shift-safe trusted block so the
    // certified interpolation bound for the underlying operator applies;
    // outside it, truncation alone pushes p-norm ratios past the bound.
    // The comparison tolerance matches the shift-block identity tolerance.
    const int block = std::min(fs.params().degree / 2,
                               shift_safe_degree(fs.params(), 1.0));
    struct Row {
        double lower, n2, ninf, bound;
    };
    std::vector<size_t> indices(ops.size());
    for (size_t i = 0; i < ops.size(); ++i) indices[i] = i;
    const std::vector<Row> out = ordered_parallel_map(indices, [&](size_t i) {
        const OperatorMatrix a = materialize(ops[i], fs);
        Row r;
        r.lower = op_norm_p_lower(a, p, trials, seed, fs, block);
        r.n2 = op_norm_2(a);
        r.ninf = inf_norm_upper(ops[i], fs);
        r.bound = std::pow(r.n2, 2.0 / p) * std::pow(r.ninf, 1.0 - 2.0 / p);
        return r;
    });
    for (size_t i = 0; i < ops.size(); ++i) {
        rep.rows.push_back(
            {static_cast<double>(i), out[i].lower, out[i].n2, out[i].ninf, out[i].bound});
        rep.assert_le("lower_le_bound/" + ops[i].name, out[i].lower, out[i].bound + 1e-5);
    }
    return rep;
}

// --- Section 7 spectral identity ----------------------------------------------

ExperimentReport run_sec7_spectral(const SymbolSpec& symbol, int k_max,
                                   const FockSpace& fs) {
    ExperimentReport rep = make_report("sec7", fs);
    rep.columns = {"k", "power_norm_root"};
    if (k_max < 1) throw std::invalid_argument("run_sec7_spectral: k_max must be >= 1");
    const OperatorMatrix a = toeplitz_from_symbol(symbol, fs);
    const double herm_dev = (a.entries - a.entries.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > 1e-10 * (1.0 + a.entries.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("run_sec7_spectral: symbol must be real-valued "
                                    "(assembled matrix is not Hermitian)");
    const double n2 = op_norm_2(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.entries);
    const double eig_max = es.eigenvalues().cwiseAbs().maxCoeff();
    // powers with norm-rescaled bookkeeping so nothing under/overflows
    Eigen::MatrixXcd m = a.entries;
    double logscale = 0.0;
    double last = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        if (k > 1) {
            m = (a.entries * m).eval();
            const double f = m.norm();
            if (f > 0.0) {
                m /= f;
                logscale += std::log(f);
            }
        }
        const double log_norm = std::log(op_norm_2(OperatorMatrix(fs.params(), m))) +
                                logscale;
        last = std::exp(log_norm / k);
        rep.rows.push_back({static_cast<double>(k), last});
    }
    rep.assert_close("power_root_vs_norm2", last, n2, 1e-6);
    rep.assert_close("power_root_vs_max_eigenvalue", last, eig_max, 1e-6);
    return rep;
}

// --- Lemma 2.1 equivalence audit ----------------------------------------------

ExperimentReport run_carleson_audit(const std::vector<double>& epsilons, double r,
                                    const FockSpace& fs, const Fixtures& fx) {
    ExperimentReport rep = make_report("carleson_audit", fs, &fx);
    rep.columns = {"epsilon", "star", "ball_sup", "toeplitz_norm", "star_ratio",
                   "ball_ratio"};
    const double cutoff = default_lattice_cutoff(fs);
    struct Row {
        CarlesonQuantities cq;
        double tn;
    };
    const std::vector<Row> out = ordered_parallel_map(epsilons, [&](double eps) {
        const MeasureSpec m = LatticeMeasure{eps, cutoff};
        return Row{carleson_quantities(m, r, fs.params()),
                   op_norm_2(toeplitz_from_measure(m, fs))};
    });
    double band = 0.0;
    for (size_t i = 0; i < epsilons.size(); ++i) {
        const double sr = out[i].cq.star / out[i].tn;
        const double br = out[i].cq.ball_sup / out[i].tn;
        rep.rows.push_back(
            {epsilons[i], out[i].cq.star, out[i].cq.ball_sup, out[i].tn, sr, br});
        for (double ratio : {sr, br})
            band = std::max(band, std::max(ratio, 1.0 / ratio));
    }
    rep.context["equivalence_band"] = band;
    fixture_check(rep, fx, "carleson/band/alpha=" + num_key(fs.params().alpha), band);
    return rep;
}

// --- core validation ----------------------------------------------------------

ExperimentReport run_core_validation(const FockSpace& fs,
                                     const std::map<std::string, double>& tol) {
    ExperimentReport rep = make_report("validate", fs);
    rep.columns = {"check", "deviation", "tolerance"};
    const double alpha = fs.params().alpha;
    auto tol_of = [&](const std::string& name, double dflt) {
        auto it = tol.find(name);
        return it == tol.end() ? dflt : it->second;
    };

    // orthonormality through the quadrature route
    const OperatorMatrix gram = toeplitz_from_symbol_quadrature(make_constant(1.0), fs);
    const double ortho =
        (gram.entries - Eigen::MatrixXcd::Identity(fs.size(), fs.size()))
            .cwiseAbs()
            .maxCoeff();
    rep.rows.push_back({0.0, ortho, tol_of("orthonormality", 1e-10)});
    rep.assert_le("orthonormality", ortho, tol_of("orthonormality", 1e-10));

    // reproducing property on random coefficient vectors
    std::mt19937_64 rng(0x5EED);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double reproducing = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::VectorXcd c(fs.size());
        for (int k = 0; k < fs.size(); ++k) c[k] = Complex(gauss(rng), gauss(rng));
        c.normalize();
        const CoeffVector f(fs.params(), c);
        for (double frac : {0.0, 0.25, 0.5}) {
            for (int q = 0; q < 4; ++q) {
                const Complex w =
                    std::polar(frac * 0.5 * fs.trust_radius(), 2.0 * kPi * q / 4.0);
                const Complex via_kernel =
                    fs.inner(f, fs.kernel_coeffs(w, false).coeffs);
                const Complex direct =
                    evaluate_weighted(f, w) * std::exp(0.5 * alpha * std::norm(w));
                reproducing = std::max(reproducing, std::abs(via_kernel - direct));
                if (frac == 0.0) break;
            }
        }
    }
    rep.rows.push_back({1.0, reproducing, tol_of("reproducing_property", 1e-9)});
    rep.assert_le("reproducing_property", reproducing,
                  tol_of("reproducing_property", 1e-9));

    // Gaussian moment identity across the declared grid
    double moment = 0.0;
    for (double s : {0.0, 0.5, 1.0}) {
        for (double zl : {0.0, 1.0, 2.0}) {
            const MomentCheck mc = fs.gaussian_moment_check(s, Complex(zl, 0.0));
            moment = std::max(moment, std::abs(mc.computed - mc.exact));
        }
    }
    rep.rows.push_back({2.0, moment, tol_of("gaussian_moment_identity", 1e-8)});
    rep.assert_le("gaussian_moment_identity", moment,
                  tol_of("gaussian_moment_identity", 1e-8));

    // normalized kernels are unit vectors in every p-norm
    double kerdev = 0.0;
    const Complex w0 = std::polar(0.25 * fs.trust_radius(), 0.7);
    for (double p : {2.0, 4.0}) {
        const double n = fs.norm(fs.kernel_coeffs(w0, true).coeffs, p);
        kerdev = std::max(kerdev, std::abs(n - 1.0));
    }
    rep.rows.push_back({3.0, kerdev, tol_of("kernel_unit_norms", 1e-8)});
    rep.assert_le("kernel_unit_norms", kerdev, tol_of("kernel_unit_norms", 1e-8));

    // empirical sub-mean-value constant at (r, p) = (1, 2): the bound is
    // existential, so the worst ratio over a random sweep is recorded rather
    // than asserted
    std::mt19937_64 rng24(0x24C0);
    double worst_c = 0.0;
    for (int t = 0; t < 100; ++t) {
        Eigen::VectorXcd c24(fs.size());
        for (int k = 0; k < fs.size(); ++k) c24[k] = Complex(gauss(rng24), gauss(rng24));
        const CoeffVector f24(fs.params(), c24);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const Complex z = std::polar(0.5 * fs.trust_radius() * std::sqrt(unif(rng24)),
                                     2.0 * kPi * unif(rng24));
        worst_c = std::max(worst_c, fs.submeanvalue_ratio(f24, z, 1.0, 2.0));
    }
    rep.context["lemma24_empirical_constant/r=1/p=2"] = worst_c;
    return rep;
}

} // namespace focklab
