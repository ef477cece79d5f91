#ifndef FOCKLAB_REPORT_HPP
#define FOCKLAB_REPORT_HPP

#include "focklab/truncation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace focklab {

/// Structured result of one desk-scale experiment: a parameter sweep with
/// measured quantities plus the machine-checked assertions that gate it.
struct ExperimentReport {
    std::string name;
    double alpha = 0.0;
    int degree = 0;
    double trust_radius = 0.0;
    std::uint64_t seed = 0;
    std::string fixture_version;

    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    struct Assertion {
        std::string name;
        bool pass = false;
        double measured = 0.0;
        double threshold = 0.0;
        std::string detail;
    };
    std::vector<Assertion> assertions;

    /// Extra recorded scalars (tolerances, empirical constants, ...).
    std::map<std::string, double> context;

    bool passed() const;
    void add_assertion(const std::string& name, bool pass, double measured,
                       double threshold, const std::string& detail = "");
    /// measured <= threshold
    void assert_le(const std::string& name, double measured, double threshold);
    /// measured >= threshold
    void assert_ge(const std::string& name, double measured, double threshold);
    /// |measured - expected| <= tol
    void assert_close(const std::string& name, double measured, double expected,
                      double tol);
    /// measured within the standard regression slack of the fixture value
    void assert_fixture(const std::string& name, double measured, double fixture_value);

    std::string to_csv() const;
    std::string to_manifest_json() const;
    /// Log-scale profile of column `ycol` against column 0.
    std::string to_profile_svg(int ycol = 1) const;
};

/// Deterministic shortest-roundtrip double formatting used by every CSV/JSON
/// artifact writer.
std::string format_double(double v);

} // namespace focklab

#endif
