#include "focklab/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace focklab {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& ctx) {
    if (!j.is_object()) throw std::invalid_argument(ctx + ": expected a JSON object");
    for (const auto& [key, _] : j.items())
        if (!allowed.count(key))
            throw std::invalid_argument(ctx + ": unknown key '" + key + "'");
}

Complex complex_from(const json& j, const std::string& ctx) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2)
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw std::invalid_argument(ctx + ": expected number or [re, im]");
}

json complex_to(Complex z) { return json::array({z.real(), z.imag()}); }

GaussianTerm term_from(const json& j, const std::string& ctx) {
    check_keys(j, {"amp", "log_amp", "c1", "c2", "c3"}, ctx);
    GaussianTerm t;
    if (j.contains("log_amp"))
        t.log_amp = complex_from(j.at("log_amp"), ctx + ".log_amp");
    else if (j.contains("amp"))
        t.log_amp = std::log(complex_from(j.at("amp"), ctx + ".amp"));
    if (j.contains("c1")) t.c1 = complex_from(j.at("c1"), ctx + ".c1");
    if (j.contains("c2")) t.c2 = complex_from(j.at("c2"), ctx + ".c2");
    if (j.contains("c3")) t.c3 = j.at("c3").get<double>();
    if (t.c3 > 0.0)
        throw std::invalid_argument(ctx + ": c3 must be <= 0 for integrability");
    return t;
}

json term_to(const GaussianTerm& t) {
    json j;
    j["log_amp"] = complex_to(t.log_amp);
    j["c1"] = complex_to(t.c1);
    j["c2"] = complex_to(t.c2);
    j["c3"] = t.c3;
    return j;
}

SymbolSpec symbol_from(const json& j, double alpha) {
    const std::string ctx = "symbol";
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument(ctx + ": expected {type, ...}");
    const std::string type = j.at("type").get<std::string>();
    if (type == "gaussian") {
        json body = j;
        body.erase("type");
        return GeneralizedGaussian{term_from(body, ctx)};
    }
    if (type == "gaussian_sum") {
        check_keys(j, {"type", "terms"}, ctx);
        GaussianSum gs;
        for (const auto& tj : j.at("terms")) gs.terms.push_back(term_from(tj, ctx));
        return gs;
    }
    if (type == "q_beta") {
        check_keys(j, {"type", "beta"}, ctx);
        return make_q_beta(j.at("beta").get<double>());
    }
    if (type == "s_w") {
        check_keys(j, {"type", "w"}, ctx);
        return make_s_w(alpha, complex_from(j.at("w"), ctx + ".w"));
    }
    if (type == "constant") {
        check_keys(j, {"type", "value"}, ctx);
        return make_constant(complex_from(j.at("value"), ctx + ".value"));
    }
    if (type == "ball") {
        check_keys(j, {"type", "center", "radius", "complement"}, ctx);
        BallIndicator b;
        if (j.contains("center")) b.center = complex_from(j.at("center"), ctx + ".center");
        b.radius = j.at("radius").get<double>();
        if (j.contains("complement")) b.complement = j.at("complement").get<bool>();
        if (!(b.radius > 0.0))
            throw std::invalid_argument(ctx + ": ball radius must be positive");
        return b;
    }
    throw std::invalid_argument(ctx + ": unknown type '" + type +
                                "' (sampled variants are runtime-only)");
}

json symbol_to(const SymbolSpec& s) {
    json j;
    if (const auto* g = std::get_if<GeneralizedGaussian>(&s)) {
        j = term_to(g->term);
        j["type"] = "gaussian";
        return j;
    }
    if (const auto* gs = std::get_if<GaussianSum>(&s)) {
        j["type"] = "gaussian_sum";
        json terms = json::array();
        for (const auto& t : gs->terms) terms.push_back(term_to(t));
        j["terms"] = terms;
        return j;
    }
    if (const auto* b = std::get_if<BallIndicator>(&s)) {
        j["type"] = "ball";
        j["center"] = complex_to(b->center);
        j["radius"] = b->radius;
        j["complement"] = b->complement;
        return j;
    }
    throw std::invalid_argument("symbol_to_json: sampled variants are runtime-only");
}

MeasureSpec measure_from(const json& j, double alpha) {
    const std::string ctx = "measure";
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument(ctx + ": expected {type, ...}");
    const std::string type = j.at("type").get<std::string>();
    if (type == "lebesgue") {
        check_keys(j, {"type", "density"}, ctx);
        return LebesgueMeasure{symbol_from(j.at("density"), alpha)};
    }
    if (type == "point_masses") {
        check_keys(j, {"type", "atoms"}, ctx);
        PointMasses pm;
        for (const auto& aj : j.at("atoms")) {
            check_keys(aj, {"location", "weight"}, ctx + ".atom");
            Atom a;
            a.location = complex_from(aj.at("location"), ctx + ".atom.location");
            if (aj.contains("weight")) a.weight = aj.at("weight").get<double>();
            if (!(a.weight > 0.0))
                throw std::invalid_argument(ctx + ": atom weights must be positive");
            pm.atoms.push_back(a);
        }
        return pm;
    }
    if (type == "dirac") {
        check_keys(j, {"type", "location", "weight"}, ctx);
        Atom a;
        if (j.contains("location")) a.location = complex_from(j.at("location"), ctx);
        if (j.contains("weight")) a.weight = j.at("weight").get<double>();
        return PointMasses{{a}};
    }
    if (type == "lattice") {
        check_keys(j, {"type", "epsilon", "cutoff_radius"}, ctx);
        LatticeMeasure lm;
        lm.epsilon = j.at("epsilon").get<double>();
        lm.cutoff_radius = j.at("cutoff_radius").get<double>();
        return lm;
    }
    throw std::invalid_argument(ctx + ": unknown type '" + type + "'");
}

json measure_to(const MeasureSpec& m) {
    json j;
    if (const auto* leb = std::get_if<LebesgueMeasure>(&m)) {
        j["type"] = "lebesgue";
        j["density"] = symbol_to(leb->density);
        return j;
    }
    if (const auto* pm = std::get_if<PointMasses>(&m)) {
        j["type"] = "point_masses";
        json atoms = json::array();
        for (const auto& a : pm->atoms)
            atoms.push_back({{"location", complex_to(a.location)}, {"weight", a.weight}});
        j["atoms"] = atoms;
        return j;
    }
    const auto& lm = std::get<LatticeMeasure>(m);
    j["type"] = "lattice";
    j["epsilon"] = lm.epsilon;
    j["cutoff_radius"] = lm.cutoff_radius;
    return j;
}

OperatorDesc operator_from(const json& j, double alpha) {
    const std::string ctx = "operator";
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument(ctx + ": expected {kind, ...}");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "identity") {
        check_keys(j, {"kind"}, ctx);
        return OperatorDesc::identity();
    }
    if (kind == "vacuum") {
        check_keys(j, {"kind"}, ctx);
        return OperatorDesc::vacuum();
    }
    if (kind == "shift") {
        check_keys(j, {"kind", "w"}, ctx);
        return OperatorDesc::shift(complex_from(j.at("w"), ctx + ".w"));
    }
    if (kind == "toeplitz_symbol") {
        check_keys(j, {"kind", "name", "symbol"}, ctx);
        return OperatorDesc::toeplitz(
            j.contains("name") ? j.at("name").get<std::string>() : "toeplitz",
            symbol_from(j.at("symbol"), alpha));
    }
    if (kind == "toeplitz_measure") {
        check_keys(j, {"kind", "name", "measure"}, ctx);
        return OperatorDesc::toeplitz_measure(
            j.contains("name") ? j.at("name").get<std::string>() : "toeplitz_measure",
            measure_from(j.at("measure"), alpha));
    }
    throw std::invalid_argument(ctx + ": unknown kind '" + kind + "'");
}

} // namespace

std::string symbol_to_json(const SymbolSpec& s) { return symbol_to(s).dump(2); }

SymbolSpec symbol_from_json(const std::string& text, double alpha) {
    return symbol_from(json::parse(text), alpha);
}

std::string measure_to_json(const MeasureSpec& m) { return measure_to(m).dump(2); }

MeasureSpec measure_from_json(const std::string& text, double alpha) {
    return measure_from(json::parse(text), alpha);
}

RunConfig parse_config_text(const std::string& text) {
    json j = json::parse(text);
    check_keys(j,
               {"experiment", "alpha", "degree", "seed", "out", "grid", "sweep",
                "symbol", "measure", "operator", "points", "v", "w", "d", "p", "trials",
                "k_max", "r", "vector", "tolerances", "fixtures"},
               "config");
    RunConfig cfg;
    if (j.contains("experiment")) cfg.experiment = j.at("experiment").get<std::string>();
    if (j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
    if (j.contains("degree")) cfg.degree = j.at("degree").get<int>();
    // validate before touching anything expensive
    TruncationParams probe(cfg.alpha, cfg.degree);
    (void)probe;
    if (j.contains("seed")) {
        cfg.seed = j.at("seed").get<std::uint64_t>();
        cfg.seed_set = true;
    }
    if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
    if (j.contains("grid")) {
        check_keys(j.at("grid"), {"radial_nodes", "angular_count"}, "config.grid");
        if (j.at("grid").contains("radial_nodes"))
            cfg.grid.radial_nodes = j.at("grid").at("radial_nodes").get<int>();
        if (j.at("grid").contains("angular_count"))
            cfg.grid.angular_count = j.at("grid").at("angular_count").get<int>();
    }
    if (j.contains("sweep")) {
        for (const auto& v : j.at("sweep")) cfg.sweep.push_back(v.get<double>());
    }
    if (j.contains("symbol")) cfg.symbol = symbol_from(j.at("symbol"), cfg.alpha);
    if (j.contains("measure")) cfg.measure = measure_from(j.at("measure"), cfg.alpha);
    if (j.contains("operator")) cfg.op = operator_from(j.at("operator"), cfg.alpha);
    if (j.contains("points"))
        for (const auto& pj : j.at("points"))
            cfg.points.push_back(complex_from(pj, "config.points"));
    if (j.contains("v")) cfg.v = complex_from(j.at("v"), "config.v");
    if (j.contains("w")) cfg.w = complex_from(j.at("w"), "config.w");
    if (j.contains("d")) cfg.d = j.at("d").get<double>();
    if (j.contains("p")) cfg.p = j.at("p").get<double>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
    if (j.contains("k_max")) cfg.k_max = j.at("k_max").get<int>();
    if (j.contains("r")) cfg.r = j.at("r").get<double>();
    if (j.contains("vector")) {
        const json& vj = j.at("vector");
        check_keys(vj, {"kind", "k", "w"}, "config.vector");
        const std::string kind = vj.at("kind").get<std::string>();
        if (kind == "basis")
            cfg.vector_basis_index = vj.at("k").get<int>();
        else if (kind == "kernel")
            cfg.vector_kernel_w = complex_from(vj.at("w"), "config.vector.w");
        else
            throw std::invalid_argument("config.vector: unknown kind '" + kind + "'");
    }
    if (j.contains("tolerances")) {
        for (const auto& [k, v] : j.at("tolerances").items())
            cfg.tolerances[k] = v.get<double>();
    }
    if (j.contains("fixtures")) cfg.fixtures_path = j.at("fixtures").get<std::string>();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string operator_matrix_to_json(const OperatorMatrix& a) {
    json j;
    j["alpha"] = a.params.alpha;
    j["degree"] = a.params.degree;
    json rows = json::array();
    for (int k = 0; k < a.entries.rows(); ++k) {
        json row = json::array();
        for (int c = 0; c < a.entries.cols(); ++c) row.push_back(complex_to(a.entries(k, c)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j.dump();
}

OperatorMatrix operator_matrix_from_json(const std::string& text) {
    json j = json::parse(text);
    check_keys(j, {"alpha", "degree", "entries"}, "operator_matrix");
    TruncationParams p(j.at("alpha").get<double>(), j.at("degree").get<int>());
    Eigen::MatrixXcd m(p.size(), p.size());
    const json& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != p.size())
        throw std::invalid_argument("operator_matrix: row count mismatch");
    for (int k = 0; k < p.size(); ++k)
        for (int c = 0; c < p.size(); ++c)
            m(k, c) = complex_from(rows[k][c], "operator_matrix.entry");
    return OperatorMatrix(p, std::move(m));
}

std::string operator_matrix_to_csv(const OperatorMatrix& a) {
    std::ostringstream out;
    out << "row,col,re,im\n";
    for (int k = 0; k < a.entries.rows(); ++k)
        for (int c = 0; c < a.entries.cols(); ++c)
            out << k << "," << c << "," << format_double(a.entries(k, c).real()) << ","
                << format_double(a.entries(k, c).imag()) << "\n";
    return out.str();
}

std::string berezin_field_to_csv(const BerezinField& f) {
    std::ostringstream out;
    out << "z_re,z_im,B_re,B_im,kernel_tail\n";
    for (size_t i = 0; i < f.points.size(); ++i)
        out << format_double(f.points[i].real()) << "," << format_double(f.points[i].imag())
            << "," << format_double(f.values[i].real()) << ","
            << format_double(f.values[i].imag()) << "," << format_double(f.kernel_tail[i])
            << "\n";
    return out.str();
}

std::string berezin_profile_svg(const BerezinField& f) {
    // collapse to a radial profile of sup over angles
    std::map<double, double> prof;
    for (size_t i = 0; i < f.points.size(); ++i) {
        const double r = std::abs(f.points[i]);
        prof[r] = std::max(prof.count(r) ? prof[r] : 0.0, std::abs(f.values[i]));
    }
    ExperimentReport rep;
    rep.name = "berezin";
    rep.columns = {"r", "sup_abs_B"};
    for (const auto& [r, v] : prof) rep.rows.push_back({r, v});
    return rep.to_profile_svg(1);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void write_experiment_artifacts(const ExperimentReport& rep, const std::string& dir,
                                int profile_column) {
    std::filesystem::create_directories(dir);
    write_text_file(dir + "/manifest.json", rep.to_manifest_json());
    write_text_file(dir + "/rows.csv", rep.to_csv());
    write_text_file(dir + "/profile.svg", rep.to_profile_svg(profile_column));
}

} // namespace focklab
