#include "focklab/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace focklab {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool ExperimentReport::passed() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.pass; });
}

void ExperimentReport::add_assertion(const std::string& nm, bool pass, double measured,
                                     double threshold, const std::string& detail) {
    assertions.push_back({nm, pass, measured, threshold, detail});
}

void ExperimentReport::assert_le(const std::string& nm, double measured, double threshold) {
    add_assertion(nm, measured <= threshold, measured, threshold, "expect <=");
}

void ExperimentReport::assert_ge(const std::string& nm, double measured, double threshold) {
    add_assertion(nm, measured >= threshold, measured, threshold, "expect >=");
}

void ExperimentReport::assert_close(const std::string& nm, double measured,
                                    double expected, double tol) {
    add_assertion(nm, std::abs(measured - expected) <= tol, measured, expected,
                  "expect within " + format_double(tol));
}

void ExperimentReport::assert_fixture(const std::string& nm, double measured,
                                      double fixture_value) {
    const double slack = 0.10 * std::abs(fixture_value);
    add_assertion(nm, std::abs(measured - fixture_value) <= slack, measured,
                  fixture_value, "regression fixture, 10% slack");
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream out;
    auto needs_quote = [](const std::string& s) {
        return s.find_first_of(",\"\n") != std::string::npos;
    };
    auto field = [&](const std::string& s) {
        if (!needs_quote(s)) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            q += c;
        }
        q += "\"";
        return q;
    };
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) out << ",";
        out << field(columns[i]);
    }
    out << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << format_double(row[i]);
        }
        out << "\n";
    }
    return out.str();
}

std::string ExperimentReport::to_manifest_json() const {
    json j;
    j["experiment"] = name;
    j["params"] = {{"alpha", alpha}, {"degree", degree}, {"dim", 1}};
    j["trust_radius"] = trust_radius;
    j["seed"] = seed;
    j["fixture_version"] = fixture_version;
    j["columns"] = columns;
    j["row_count"] = rows.size();
    j["csv"] = "rows.csv";
    json as = json::array();
    for (const auto& a : assertions) {
        as.push_back({{"name", a.name},
                      {"pass", a.pass},
                      {"measured", a.measured},
                      {"threshold", a.threshold},
                      {"detail", a.detail}});
    }
    j["assertions"] = as;
    j["pass"] = passed();
    if (!context.empty()) {
        json ctx;
        for (const auto& [k, v] : context) ctx[k] = v;
        j["context"] = ctx;
    }
    return j.dump(2) + "\n";
}

std::string ExperimentReport::to_profile_svg(int ycol) const {
    const int width = 640, height = 420;
    const int ml = 70, mr = 20, mt = 30, mb = 50;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    std::vector<double> xs, ys;
    for (const auto& r : rows) {
        if (ycol < static_cast<int>(r.size())) {
            xs.push_back(r[0]);
            ys.push_back(r[static_cast<size_t>(ycol)]);
        }
    }
    const std::string ylabel = ycol < static_cast<int>(columns.size())
                                   ? columns[static_cast<size_t>(ycol)]
                                   : "value";
    if (xs.size() < 1) {
        out << "<text x=\"20\" y=\"40\">no data</text>\n</svg>\n";
        return out.str();
    }
    const bool logy = std::all_of(ys.begin(), ys.end(), [](double v) { return v > 0.0; });
    std::vector<double> py(ys.size());
    for (size_t i = 0; i < ys.size(); ++i) py[i] = logy ? std::log10(ys[i]) : ys[i];
    double xmin = *std::min_element(xs.begin(), xs.end());
    double xmax = *std::max_element(xs.begin(), xs.end());
    double ymin = *std::min_element(py.begin(), py.end());
    double ymax = *std::max_element(py.begin(), py.end());
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    auto sx = [&](double x) {
        return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
    };
    auto sy = [&](double y) {
        return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
    };
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    // y ticks
    for (int i = 0; i <= 4; ++i) {
        const double v = ymin + (ymax - ymin) * i / 4.0;
        const double yy = sy(v);
        out << "<line x1=\"" << ml - 4 << "\" y1=\"" << yy << "\" x2=\"" << ml
            << "\" y2=\"" << yy << "\" stroke=\"black\"/>\n";
        char lab[40];
        std::snprintf(lab, sizeof(lab), logy ? "1e%.2g" : "%.3g", v);
        out << "<text x=\"" << ml - 8 << "\" y=\"" << yy + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << lab << "</text>\n";
    }
    // x ticks
    for (int i = 0; i <= 4; ++i) {
        const double v = xmin + (xmax - xmin) * i / 4.0;
        const double xx = sx(v);
        out << "<line x1=\"" << xx << "\" y1=\"" << height - mb << "\" x2=\"" << xx
            << "\" y2=\"" << height - mb + 4 << "\" stroke=\"black\"/>\n";
        char lab[40];
        std::snprintf(lab, sizeof(lab), "%.4g", v);
        out << "<text x=\"" << xx << "\" y=\"" << height - mb + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << lab << "</text>\n";
    }
    out << "<text x=\"" << (width / 2) << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"12\">" << columns.front()
        << "</text>\n";
    out << "<text x=\"" << (width / 2) << "\" y=\"" << 18
        << "\" text-anchor=\"middle\" font-size=\"13\">" << name << ": " << ylabel
        << (logy ? " (log scale)" : "") << "</text>\n";
    // polyline + markers
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < xs.size(); ++i) out << sx(xs[i]) << "," << sy(py[i]) << " ";
    out << "\"/>\n";
    for (size_t i = 0; i < xs.size(); ++i)
        out << "<circle cx=\"" << sx(xs[i]) << "\" cy=\"" << sy(py[i])
            << "\" r=\"2.5\" fill=\"#1f77b4\"/>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace focklab
