#ifndef FOCKLAB_IO_HPP
#define FOCKLAB_IO_HPP

#include "focklab/experiments.hpp"
#include "focklab/operators.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace focklab {

/// Parsed CLI/experiment configuration.  The JSON schema is strict: unknown
/// keys are rejected, and a seed is mandatory for randomized experiments.
struct RunConfig {
    std::string experiment;
    double alpha = 1.0;
    int degree = 40;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out_dir = "results";
    GridOptions grid;

    std::vector<double> sweep;
    std::optional<SymbolSpec> symbol;
    std::optional<MeasureSpec> measure;
    std::optional<OperatorDesc> op;
    std::vector<Complex> points;
    Complex v{0.0, 0.0};
    Complex w{0.0, 0.0};
    double d = 1.0;
    double p = 4.0;
    int trials = 200;
    int k_max = 32;
    double r = 1.0;
    int vector_basis_index = 0;
    std::optional<Complex> vector_kernel_w;
    std::map<std::string, double> tolerances;
    std::string fixtures_path;
};

RunConfig parse_config_text(const std::string& json_text);
RunConfig parse_config_file(const std::string& path);

/// Symbol / measure / operator descriptors as JSON text (round-trip schema
/// used by the CLI config loader; sampled variants are runtime-only).
std::string symbol_to_json(const SymbolSpec& s);
SymbolSpec symbol_from_json(const std::string& text, double alpha);
std::string measure_to_json(const MeasureSpec& m);
MeasureSpec measure_from_json(const std::string& text, double alpha);

/// Binary-free serializations of operator data.
std::string operator_matrix_to_json(const OperatorMatrix& a);
OperatorMatrix operator_matrix_from_json(const std::string& text);
std::string operator_matrix_to_csv(const OperatorMatrix& a);
std::string berezin_field_to_csv(const BerezinField& f);
/// Radial profile (sup over angles of |B|) as a self-contained SVG.
std::string berezin_profile_svg(const BerezinField& f);

void write_text_file(const std::string& path, const std::string& content);
/// Writes manifest.json, rows.csv and profile.svg under dir (created if
/// needed).
void write_experiment_artifacts(const ExperimentReport& rep, const std::string& dir,
                                int profile_column = 1);

} // namespace focklab

#endif
