#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "focklab/experiments.hpp"
#include "focklab/special.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace focklab;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

/// Pass status ignoring assertions that only fail for missing regression
/// fixtures (those are recorded by the fixture tool and asserted in the
/// acceptance suite).
bool passed_except_fixtures(const ExperimentReport& rep) {
    for (const auto& a : rep.assertions)
        if (!a.pass && a.detail != "missing fixture; record and commit") return false;
    return true;
}

const Fixtures& fx() { return Fixtures::builtin(); }

} // namespace

TEST_CASE("thm37: heat smoothing of a point mass, diagonal oracle") {
    FockSpace fs(TruncationParams(1.0, 40));
    const MeasureSpec d0 = PointMasses{{{Complex(0, 0), 1.0}}};
    const ExperimentReport rep = run_thm37(d0, {4, 40, 400, 4000}, fs);
    CHECK(rep.passed());
    // beta = 4 smooths delta_0 to q_1: (pi/alpha) T has diagonal 2^-(k+1),
    // so the error against 1 (x) 1 is exactly 1/2
    CHECK(rep.rows[0][1] == doctest::Approx(0.5).epsilon(1e-10));
    // k = 0 entry converges like beta'/(alpha + beta') with beta' = beta/4
    CHECK(rep.rows[3][1] <= 1e-2);

    const MeasureSpec two = PointMasses{{{Complex(1, 0), 1.0}, {Complex(-1, 0), 1.0}}};
    const ExperimentReport rep2 = run_thm37(two, {4, 40, 400, 4000}, fs);
    CHECK(rep2.passed());
}

TEST_CASE("lem38: normalized convergence and the unnormalized gap") {
    for (double alpha : {1.0, 2.0}) {
        FockSpace fs(TruncationParams(alpha, 40));
        const ExperimentReport rep = run_lem38({4, 40, 400, 4000}, fs);
        CHECK(rep.passed());
        // entry00 column equals beta/(alpha+beta)
        for (const auto& row : rep.rows)
            CHECK(row[3] == doctest::Approx(row[0] / (alpha + row[0])).epsilon(1e-12));
    }
    // beta = alpha gives d_0 = 1/2 after normalization
    FockSpace fs(TruncationParams(1.0, 40));
    const ExperimentReport rep = run_lem38({1}, fs);
    CHECK(rep.rows[0][3] == doctest::Approx(0.5).epsilon(1e-12));

    // beta = 1000 at alpha = 1, D = 40: normalized error below 2e-3
    const ExperimentReport rep1k = run_lem38({1000}, fs);
    CHECK(rep1k.rows[0][1] <= 2e-3);
}

TEST_CASE("thm39 reduces to lem38 at v = w = 0 and tracks unitary invariance") {
    FockSpace fs(TruncationParams(1.0, 40));
    const ExperimentReport r39 = run_thm39(Complex(0, 0), Complex(0, 0), {4, 400}, fs);
    const ExperimentReport r38 = run_lem38({4, 400}, fs);
    for (size_t i = 0; i < r39.rows.size(); ++i)
        CHECK(r39.rows[i][1] == doctest::Approx(r38.rows[i][1]).epsilon(1e-12));

    const ExperimentReport rep =
        run_thm39(Complex(0.5, 0), Complex(0, -0.5), {4, 40, 400, 4000}, fs);
    CHECK(rep.passed());
    CHECK(rep.rows.back()[4] <= 1e-3);
    CHECK_THROWS(run_thm39(Complex(9, 0), Complex(0, 0), {4}, fs));
}

TEST_CASE("lem43: lattice frame conditioning on the interior block") {
    FockSpace fs(TruncationParams(1.0, 40));
    const ExperimentReport rep = run_lem43({1.0, 0.5, 0.3}, fs, fx());
    CHECK(passed_except_fixtures(rep));
    CHECK(rep.rows[0][1] > 0.0);
    CHECK(rep.rows[1][1] > rep.rows[0][1]);
    CHECK(rep.rows[2][1] > rep.rows[1][1]);
    // a single atom cannot be a frame: rank one on the interior block
    const OperatorMatrix one =
        toeplitz_from_measure(MeasureSpec(PointMasses{{{Complex(0, 0), 1.0}}}), fs);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        one.entries.topLeftCorner(21, 21));
    CHECK(es.eigenvalues().minCoeff() <= 1e-14);
}

TEST_CASE("lem41: closed-form two-point norm, residuals, and the sweep") {
    FockSpace fs(TruncationParams(1.0, 40));
    // single point at the origin: g = 1 with norm 1
    const ExperimentReport single =
        run_lem41_interpolation({Complex(0, 0)}, 42, fs, fx());
    CHECK(single.rows[0][1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(passed_except_fixtures(single));

    // two points 0 and d: ||g||^2 = 1 / (1 - e^{-alpha d^2}) for k0 = 0
    const double d = 1.3;
    const ExperimentReport two =
        run_lem41_interpolation({Complex(0, 0), Complex(d, 0)}, 42, fs, fx());
    const double want = 1.0 / (1.0 - std::exp(-d * d));
    CHECK(two.rows[0][1] * two.rows[0][1] == doctest::Approx(want).epsilon(1e-9));
    CHECK(passed_except_fixtures(two));

    // near-coincident points trip the conditioning guard
    CHECK_THROWS(
        run_lem41_interpolation({Complex(0, 0), Complex(1e-9, 0)}, 42, fs, fx()));
}

TEST_CASE("lem26: single-atom closed form and full-lattice decay") {
    FockSpace fs(TruncationParams(1.0, 40));
    // single atom at the origin, delta = 1.5: only annuli j >= 2 keep the
    // atom, so the norm collapses to sqrt(mass of e^-|z|^2 outside |z|=2)
    const MeasureSpec d0 = PointMasses{{{Complex(0, 0), 1.0}}};
    ExperimentReport rep = run_lem26_band(d0, {1.5}, fs, fx());
    CHECK(rep.rows[0][1] == doctest::Approx(std::exp(-2.0)).epsilon(1e-6));
    // delta beyond every annulus distance kills the operator
    rep = run_lem26_band(d0, {40.0}, fs, fx());
    CHECK(rep.rows[0][1] == 0.0);

    const ExperimentReport lat = run_lem26_band(
        MeasureSpec(LatticeMeasure{0.5, default_lattice_cutoff(fs)}), {1, 2, 4, 6}, fs,
        fx());
    CHECK(passed_except_fixtures(lat));
}

TEST_CASE("lem33: single-cell cover is exact; partition sums to the identity") {
    FockSpace fs(TruncationParams(1.0, 16));
    // one huge box covers the effective support: the truncation telescopes
    const ExperimentReport rep = run_lem33_partition(make_q_beta(1.0), {16.0}, fs, fx());
    CHECK(rep.rows[0][1] <= 1e-8);
    CHECK(rep.context.at("partition_identity_deviation") <= 1e-8);

    // wider covers truncate less, including for the identity symbol
    const ExperimentReport repi =
        run_lem33_partition(make_constant(1.0), {1.0, 4.0}, fs, fx());
    CHECK(repi.rows[1][1] < repi.rows[0][1]);
}

TEST_CASE("thm62: gamma profile closed form for the identity") {
    FockSpace fs(TruncationParams(1.0, 24));
    const ExperimentReport rep =
        run_thm62_profiles(OperatorDesc::identity(), {0.5, 1.0, 1.5, 2.0}, 1.0, fs);
    CHECK(rep.passed());
    for (const auto& row : rep.rows) {
        const double want = std::sqrt(gamma_q(25.0, row[0] * row[0]));
        CHECK(row[1] == doctest::Approx(want).epsilon(1e-8));
    }
    // vacuum: gamma(r) = e^{-alpha r^2/2} (compact exhibit)
    const ExperimentReport repv =
        run_thm62_profiles(OperatorDesc::vacuum(), {0.5, 1.0, 2.0}, 1.0, fs);
    for (const auto& row : repv.rows)
        CHECK(row[1] == doctest::Approx(std::exp(-0.5 * row[0] * row[0])).epsilon(1e-8));

    // shift: non-vanishing gamma profile (non-compact exhibit)
    const ExperimentReport reps = run_thm62_profiles(
        OperatorDesc::shift(Complex(1, 0)), {0.5, 1.0, 2.0}, 1.0, fs);
    for (const auto& row : reps.rows) CHECK(row[1] >= 0.5 * std::exp(-0.5));
}

TEST_CASE("cor63: conjugation profiles for identity, vacuum, and a shift symbol") {
    FockSpace fs(TruncationParams(1.0, 40));
    const CoeffVector e0 = CoeffVector::basis(fs.params(), 0);
    const ExperimentReport ri =
        run_cor63(OperatorDesc::identity(), e0, {0, 1.0, 2.0, 3.0}, fs);
    for (const auto& row : ri.rows) CHECK(std::abs(row[1] - 1.0) <= 2e-2);

    const ExperimentReport rv =
        run_cor63(OperatorDesc::vacuum(), e0, {0, 1.0, 2.0, 3.0}, fs);
    for (const auto& row : rv.rows)
        CHECK(std::abs(row[1] - std::exp(-0.5 * row[0] * row[0])) <= 1e-3);

    const ExperimentReport rs = run_cor63(
        OperatorDesc::toeplitz("sw", make_s_w(1.0, Complex(1, 0))), e0, {0, 1.5, 3.0},
        fs);
    for (const auto& row : rs.rows) CHECK(std::abs(row[1] - 1.0) <= 2e-2);

    Eigen::VectorXcd big = Eigen::VectorXcd::Constant(fs.size(), 1.0);
    CHECK_THROWS(run_cor63(OperatorDesc::identity(), CoeffVector(fs.params(), big),
                           {1.0}, fs));
}

TEST_CASE("thm11 dichotomy gallery at alpha = 1") {
    FockSpace fs(TruncationParams(1.0, 40));
    const ExperimentReport rep = run_thm11_dichotomy(fs, fx());
    CHECK(passed_except_fixtures(rep));
}

TEST_CASE("lem12: interpolation bound with a small trial budget") {
    FockSpace fs(TruncationParams(1.0, 24));
    const ExperimentReport rep =
        run_lem12_interpolation_bound(dichotomy_gallery(fs), 4.0, 10, 1234, fs);
    CHECK(rep.passed());
    // identity row: 1 <= 1
    CHECK(rep.rows[3][1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.rows[3][4] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS(run_lem12_interpolation_bound(dichotomy_gallery(fs), 2.0, 1, 1, fs));
}

TEST_CASE("sec7: spectral identity for Hermitian Toeplitz exhibits") {
    FockSpace fs(TruncationParams(1.0, 30));
    const ExperimentReport rep =
        run_sec7_spectral(SymbolSpec(BallIndicator{Complex(0, 0), 1.0, false}), 32, fs);
    CHECK(rep.passed());
    // the limit is the top diagonal entry 1 - e^{-1}
    CHECK(rep.rows.back()[1] == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-9));

    // indefinite real symbol still works (sign-changing spectrum)
    GaussianSum mix;
    mix.terms.push_back(std::get<GeneralizedGaussian>(make_q_beta(1.0)).term);
    GaussianTerm neg = std::get<GeneralizedGaussian>(make_q_beta(2.0)).term;
    neg.log_amp += std::log(Complex(-3.0, 0.0));
    mix.terms.push_back(neg);
    const ExperimentReport rep2 = run_sec7_spectral(SymbolSpec(mix), 32, fs);
    CHECK(rep2.passed());

    // complex symbols are rejected
    CHECK_THROWS(run_sec7_spectral(make_s_w(1.0, Complex(1, 0)), 8, fs));
}

TEST_CASE("carleson audit: equivalence ratios form a band") {
    FockSpace fs(TruncationParams(1.0, 40));
    const ExperimentReport rep = run_carleson_audit({0.5, 1.0}, 1.0, fs, fx());
    CHECK(passed_except_fixtures(rep));
    for (const auto& row : rep.rows) {
        CHECK(row[4] > 0.0);
        CHECK(row[5] > 0.0);
    }
}

TEST_CASE("core validation passes by default and fails under-resolved grids") {
    FockSpace fs(TruncationParams(1.0, 40));
    CHECK(run_core_validation(fs).passed());

    GridOptions tiny;
    tiny.angular_count = 4;
    FockSpace bad(TruncationParams(1.0, 40), tiny);
    const ExperimentReport rep = run_core_validation(bad);
    CHECK(!rep.passed());
    CHECK(!rep.assertions[0].pass); // orthonormality is named first
    CHECK(rep.assertions[0].name == "orthonormality");
}

TEST_CASE("inf norm upper estimates are certified for the gallery") {
    FockSpace fs(TruncationParams(1.0, 24));
    CHECK(inf_norm_upper(OperatorDesc::identity(), fs) == 1.0);
    CHECK(inf_norm_upper(OperatorDesc::vacuum(), fs) == 1.0);
    CHECK(inf_norm_upper(OperatorDesc::shift(Complex(1, 0)), fs) == 1.0);
    // q_1 at alpha 1: alpha beta / (pi (beta + alpha/2)) = 1/(1.5 pi)
    const double est = inf_norm_upper(OperatorDesc::toeplitz("q1", make_q_beta(1.0)), fs);
    CHECK(est == doctest::Approx(1.0 / (1.5 * kPi)).epsilon(1e-12));
    // indicator ball radius 1: 2 (1 - e^{-1/2})
    const double estb = inf_norm_upper(
        OperatorDesc::toeplitz("ball", SymbolSpec(BallIndicator{Complex(0, 0), 1.0, false})),
        fs);
    CHECK(estb == doctest::Approx(2.0 * (1.0 - std::exp(-0.5))).epsilon(1e-12));
}
