#include "focklab/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace focklab {

namespace {

constexpr double kPi = std::numbers::pi;

bool nearly_real(Complex v, double tol = 1e-12) {
    double m = std::abs(std::imag(v));
    // arg may come back as a multiple of 2*pi from log-domain round trips
    double folded = std::fmod(m, 2.0 * kPi);
    return folded < tol || std::abs(folded - 2.0 * kPi) < tol;
}

} // namespace

GaussianTerm GaussianTerm::from_amp(Complex amp, Complex c1, Complex c2, double c3) {
    if (amp == Complex(0.0, 0.0))
        throw std::invalid_argument("GaussianTerm: zero amplitude");
    GaussianTerm t;
    t.log_amp = std::log(amp);
    t.c1 = c1;
    t.c2 = c2;
    t.c3 = c3;
    return t;
}

Complex GaussianTerm::eval(Complex z) const {
    const Complex zb = std::conj(z);
    return std::exp(log_amp + c1 * z + c2 * zb + c3 * std::norm(z));
}

bool GaussianTerm::is_bounded() const {
    if (c3 > 0.0) return false;
    if (c3 < 0.0) return true;
    return std::abs(c1 + std::conj(c2)) < 1e-14 * (1.0 + std::abs(c1));
}

bool GaussianTerm::is_real_nonneg() const {
    return c3 <= 0.0 && std::abs(c1 - std::conj(c2)) < 1e-12 * (1.0 + std::abs(c1)) &&
           nearly_real(log_amp);
}

SymbolSpec make_q_beta(double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("make_q_beta: beta must be positive");
    return GeneralizedGaussian{GaussianTerm::from_amp(beta / kPi, 0.0, 0.0, -beta)};
}

SymbolSpec make_s_w(double alpha, Complex w) {
    // 2 i Im(z conj(w)) = z conj(w) - conj(z) w
    GaussianTerm t;
    t.log_amp = Complex(0.5 * alpha * std::norm(w), 0.0);
    t.c1 = alpha * std::conj(w);
    t.c2 = -alpha * w;
    t.c3 = 0.0;
    return GeneralizedGaussian{t};
}

SymbolSpec make_constant(Complex c) {
    return GeneralizedGaussian{GaussianTerm::from_amp(c, 0.0, 0.0, 0.0)};
}

Complex eval_symbol(const SymbolSpec& s, Complex z) {
    return std::visit(
        [&](const auto& v) -> Complex {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GeneralizedGaussian>) {
                return v.term.eval(z);
            } else if constexpr (std::is_same_v<T, GaussianSum>) {
                Complex acc(0.0, 0.0);
                for (const auto& t : v.terms) acc += t.eval(z);
                return acc;
            } else if constexpr (std::is_same_v<T, BallIndicator>) {
                const bool inside = std::abs(z - v.center) <= v.radius;
                return (inside != v.complement) ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, RadialProfile>) {
                if (!v.grid) throw std::invalid_argument("RadialProfile: missing grid");
                const double rho = std::abs(z);
                // nearest radial node; profiles are defined by their node samples
                int best = 0;
                double bd = std::abs(v.grid->node_radius_at(0) - rho);
                for (int i = 1; i < v.grid->radial_count(); ++i) {
                    double d = std::abs(v.grid->node_radius_at(i) - rho);
                    if (d < bd) {
                        bd = d;
                        best = i;
                    }
                }
                return v.samples.at(best);
            } else {
                static_assert(std::is_same_v<T, GridSampled>);
                if (!v.grid) throw std::invalid_argument("GridSampled: missing grid");
                for (int n = 0; n < v.grid->node_count(); ++n)
                    if (std::abs(v.grid->node(n) - z) < 1e-12) return v.values[n];
                throw std::domain_error("GridSampled symbol: z is not a grid node");
            }
        },
        s);
}

SymbolSpec translate_symbol(const SymbolSpec& s, Complex w) {
    auto translate_term = [&](const GaussianTerm& t) {
        // s(z - w): recombine coefficients algebraically
        GaussianTerm r;
        r.c3 = t.c3;
        r.c1 = t.c1 - t.c3 * std::conj(w);
        r.c2 = t.c2 - t.c3 * w;
        r.log_amp = t.log_amp - t.c1 * w - t.c2 * std::conj(w) + t.c3 * std::norm(w);
        return r;
    };
    return std::visit(
        [&](const auto& v) -> SymbolSpec {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GeneralizedGaussian>) {
                return GeneralizedGaussian{translate_term(v.term)};
            } else if constexpr (std::is_same_v<T, GaussianSum>) {
                GaussianSum out;
                out.terms.reserve(v.terms.size());
                for (const auto& t : v.terms) out.terms.push_back(translate_term(t));
                return out;
            } else if constexpr (std::is_same_v<T, BallIndicator>) {
                BallIndicator out = v;
                out.center += w;
                return out;
            } else {
                throw std::invalid_argument("translate_symbol: unsupported variant");
            }
        },
        s);
}

namespace {

GaussianTerm heat_of_atom(const Atom& a, double t) {
    // (4 pi t)^{-1} w exp(-|z - sigma|^2 / 4t) expanded in z
    const double s = 1.0 / (4.0 * t);
    GaussianTerm g;
    g.log_amp = Complex(std::log(a.weight / (4.0 * kPi * t)) - s * std::norm(a.location), 0.0);
    g.c1 = s * std::conj(a.location);
    g.c2 = s * a.location;
    g.c3 = -s;
    return g;
}

GaussianTerm heat_of_term(const GaussianTerm& f, double t) {
    // Gaussian convolution algebra: s = 1/(4t), a = s - c3,
    // result amp' = A (s/a) e^{c1 c2 / a}, c' = (s/a) c.
    const double s = 1.0 / (4.0 * t);
    const double a = s - f.c3;
    GaussianTerm g;
    g.log_amp = f.log_amp + std::log(s / a) + f.c1 * f.c2 / a;
    g.c1 = s * f.c1 / a;
    g.c2 = s * f.c2 / a;
    g.c3 = s * f.c3 / a;
    return g;
}

} // namespace

SymbolSpec heat_transform(const MeasureSpec& m, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("heat_transform: t must be positive");
    return std::visit(
        [&](const auto& v) -> SymbolSpec {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PointMasses>) {
                if (v.atoms.size() == 1)
                    return GeneralizedGaussian{heat_of_atom(v.atoms[0], t)};
                GaussianSum out;
                out.terms.reserve(v.atoms.size());
                for (const auto& a : v.atoms) out.terms.push_back(heat_of_atom(a, t));
                return out;
            } else if constexpr (std::is_same_v<T, LatticeMeasure>) {
                GaussianSum out;
                const double c = v.cutoff_radius;
                const int n = static_cast<int>(std::floor(c / v.epsilon));
                for (int i = -n; i <= n; ++i) {
                    for (int j = -n; j <= n; ++j) {
                        Complex sigma(v.epsilon * i, v.epsilon * j);
                        if (std::abs(sigma) <= c)
                            out.terms.push_back(heat_of_atom({sigma, 1.0}, t));
                    }
                }
                if (out.terms.size() > 4096)
                    throw std::invalid_argument(
                        "heat_transform: lattice atom count exceeds the exact-sum limit");
                return out;
            } else {
                static_assert(std::is_same_v<T, LebesgueMeasure>);
                const auto& d = v.density;
                if (const auto* g = std::get_if<GeneralizedGaussian>(&d))
                    return GeneralizedGaussian{heat_of_term(g->term, t)};
                if (const auto* gs = std::get_if<GaussianSum>(&d)) {
                    GaussianSum out;
                    out.terms.reserve(gs->terms.size());
                    for (const auto& term : gs->terms)
                        out.terms.push_back(heat_of_term(term, t));
                    return out;
                }
                throw std::invalid_argument(
                    "heat_transform: only Gaussian Lebesgue densities have closed forms");
            }
        },
        m);
}

namespace {

struct LatticeKey {
    double eps;
    double cutoff;
    bool operator<(const LatticeKey& o) const {
        return eps < o.eps || (eps == o.eps && cutoff < o.cutoff);
    }
};

const std::vector<Atom>& lattice_atoms(double eps, double cutoff) {
    static std::mutex mu;
    static std::map<LatticeKey, std::vector<Atom>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({eps, cutoff});
    if (it != cache.end()) return it->second;
    std::vector<Atom> atoms;
    const int n = static_cast<int>(std::floor(cutoff / eps));
    for (int i = -n; i <= n; ++i)
        for (int j = -n; j <= n; ++j) {
            Complex sigma(eps * i, eps * j);
            if (std::abs(sigma) <= cutoff) atoms.push_back({sigma, 1.0});
        }
    return cache.emplace(LatticeKey{eps, cutoff}, std::move(atoms)).first->second;
}

} // namespace

std::vector<Atom> atoms_of(const MeasureSpec& m, const TruncationParams& params) {
    return std::visit(
        [&](const auto& v) -> std::vector<Atom> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PointMasses>) {
                for (const auto& a : v.atoms)
                    if (!(a.weight > 0.0))
                        throw std::invalid_argument("atoms_of: atom weights must be positive");
                return v.atoms;
            } else if constexpr (std::is_same_v<T, LatticeMeasure>) {
                if (!(v.epsilon > 0.0) || !(v.cutoff_radius > 0.0))
                    throw std::invalid_argument("atoms_of: bad lattice parameters");
                if (v.cutoff_radius < 2.0 * params.trust_radius())
                    throw std::invalid_argument(
                        "atoms_of: lattice cutoff_radius must be >= 2 * trust_radius");
                return lattice_atoms(v.epsilon, v.cutoff_radius);
            } else {
                throw std::invalid_argument("atoms_of: measure is not atomic");
            }
        },
        m);
}

namespace {

double star_of_atoms_at(const std::vector<Atom>& atoms, Complex z, double alpha) {
    double acc = 0.0;
    for (const auto& a : atoms)
        acc += a.weight * std::exp(-0.5 * alpha * std::norm(z - a.location));
    return acc;
}

double ball_mass_at(const std::vector<Atom>& atoms, Complex z, double r) {
    double acc = 0.0;
    for (const auto& a : atoms)
        if (std::abs(z - a.location) <= r) acc += a.weight;
    return acc;
}

std::vector<Complex> atom_search_candidates(const std::vector<Atom>& atoms, double alpha,
                                            double spacing) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& a : atoms) {
        const double x = a.location.real(), y = a.location.imag();
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        } else {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    const double margin = 3.0 / std::sqrt(alpha);
    xmin -= margin;
    xmax += margin;
    ymin -= margin;
    ymax += margin;
    std::vector<Complex> cands;
    const int nx = std::max(1, static_cast<int>(std::ceil((xmax - xmin) / spacing)));
    const int ny = std::max(1, static_cast<int>(std::ceil((ymax - ymin) / spacing)));
    cands.reserve(static_cast<size_t>(nx + 1) * (ny + 1) + atoms.size());
    for (int i = 0; i <= nx; ++i)
        for (int j = 0; j <= ny; ++j)
            cands.emplace_back(xmin + (xmax - xmin) * i / nx, ymin + (ymax - ymin) * j / ny);
    for (const auto& a : atoms) cands.push_back(a.location);
    return cands;
}

std::vector<Complex> lattice_cell_candidates(double eps) {
    // by periodicity the supremum over C is attained inside one cell
    std::vector<Complex> cands;
    const int n = 32;
    cands.reserve((n + 1) * (n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) cands.emplace_back(eps * i / n, eps * j / n);
    return cands;
}

} // namespace

CarlesonQuantities carleson_quantities(const MeasureSpec& m, double r,
                                       const TruncationParams& params) {
    if (!(r > 0.0)) throw std::invalid_argument("carleson_quantities: r must be positive");
    const double alpha = params.alpha;
    if (const auto* leb = std::get_if<LebesgueMeasure>(&m)) {
        std::vector<GaussianTerm> terms;
        if (const auto* g = std::get_if<GeneralizedGaussian>(&leb->density))
            terms.push_back(g->term);
        else if (const auto* gs = std::get_if<GaussianSum>(&leb->density))
            terms = gs->terms;
        else
            throw std::invalid_argument("carleson_quantities: unsupported Lebesgue density");
        for (const auto& t : terms)
            if (!t.is_real_nonneg())
                throw std::invalid_argument(
                    "carleson_quantities: density must be real nonnegative");
        // Convolve with e^{-(alpha/2)|z-w|^2}:  a = alpha/2 - c3.
        std::vector<GaussianTerm> conv;
        std::vector<Complex> centers;
        for (const auto& t : terms) {
            const double s = 0.5 * alpha;
            const double a = s - t.c3;
            GaussianTerm g;
            g.log_amp = t.log_amp + std::log(kPi / a) + t.c1 * t.c2 / a;
            g.c1 = s * t.c1 / a;
            g.c2 = s * t.c2 / a;
            g.c3 = s * t.c3 / a;
            conv.push_back(g);
            centers.push_back(g.c3 < 0.0 ? -g.c2 / g.c3 : Complex(0.0, 0.0));
        }
        auto conv_at = [&](Complex z) {
            double acc = 0.0;
            for (const auto& g : conv) acc += std::real(g.eval(z));
            return acc;
        };
        CarlesonQuantities out;
        if (conv.size() == 1) {
            out.star = conv_at(centers[0]);
        } else {
            double best = 0.0;
            for (const auto& c0 : centers) {
                // grid around each center
                for (int i = -24; i <= 24; ++i)
                    for (int j = -24; j <= 24; ++j)
                        best = std::max(best,
                                        conv_at(c0 + Complex(0.25 * i, 0.25 * j)));
            }
            out.star = best;
        }
        // nu(B(z, r)) for a density: disk-rule integral, maximized over centers
        DiskRule rule(0.0, r, 24, 64);
        auto mass_at = [&](Complex z) {
            double acc = 0.0;
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                Complex w = z + rule.nodes[i];
                double dens = 0.0;
                for (const auto& t : terms) dens += std::real(t.eval(w));
                acc += rule.weights[i] * dens;
            }
            return acc;
        };
        double best_mass = 0.0;
        for (const auto& c0 : centers) best_mass = std::max(best_mass, mass_at(c0));
        out.ball_sup = best_mass;
        return out;
    }

    const std::vector<Atom> atoms = atoms_of(m, params);
    CarlesonQuantities out;
    if (atoms.empty()) return out;
    std::vector<Complex> cands;
    if (const auto* lat = std::get_if<LatticeMeasure>(&m))
        cands = lattice_cell_candidates(lat->epsilon);
    else
        cands = atom_search_candidates(atoms, alpha, 0.25);
    for (const auto& z : cands) {
        out.star = std::max(out.star, star_of_atoms_at(atoms, z, alpha));
        out.ball_sup = std::max(out.ball_sup, ball_mass_at(atoms, z, r));
    }
    return out;
}

double band_decay(const MeasureSpec& m, double delta, const TruncationParams& params) {
    if (delta < 0.0) throw std::invalid_argument("band_decay: delta must be >= 0");
    const std::vector<Atom> atoms = atoms_of(m, params);
    if (atoms.empty()) return 0.0;
    const double alpha = params.alpha;
    auto mass_at = [&](Complex z) {
        double acc = 0.0;
        for (const auto& a : atoms)
            if (delta == 0.0 || std::abs(z - a.location) > delta)
                acc += a.weight * std::exp(-0.5 * alpha * std::norm(z - a.location));
        return acc;
    };
    std::vector<Complex> cands;
    if (const auto* lat = std::get_if<LatticeMeasure>(&m))
        cands = lattice_cell_candidates(lat->epsilon);
    else
        cands = atom_search_candidates(atoms, alpha, 0.25);
    if (delta > 0.0) {
        // the supremum can sit on an exclusion-ball boundary
        for (const auto& a : atoms)
            for (int q = 0; q < 16; ++q)
                cands.push_back(a.location +
                                std::polar(delta + 1e-9, 2.0 * kPi * q / 16.0));
    }
    double best = 0.0;
    for (const auto& z : cands) best = std::max(best, mass_at(z));
    return best;
}

} // namespace focklab
