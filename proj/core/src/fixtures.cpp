#include "focklab/fixtures.hpp"

#include "focklab_fixtures_data.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace focklab {

using nlohmann::json;

Fixtures Fixtures::from_json_text(const std::string& text) {
    Fixtures fx;
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("version") || !j.contains("values"))
        throw std::invalid_argument("Fixtures: expected {version, values}");
    fx.version_ = j.at("version").get<std::string>();
    for (const auto& [key, val] : j.at("values").items())
        fx.values_[key] = val.get<double>();
    return fx;
}

Fixtures Fixtures::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("Fixtures: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

const Fixtures& Fixtures::builtin() {
    static const Fixtures fx = from_json_text(detail::kFixturesJson);
    return fx;
}

double Fixtures::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end())
        throw std::out_of_range("Fixtures: missing regression constant '" + key + "'");
    return it->second;
}

std::optional<double> Fixtures::maybe(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

} // namespace focklab
