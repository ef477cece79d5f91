#ifndef FOCKLAB_FIXTURES_HPP
#define FOCKLAB_FIXTURES_HPP

#include <map>
#include <optional>
#include <string>

namespace focklab {

/// Regression constants produced by one-time oracle runs and committed to
/// fixtures/regression.json (embedded into the library at build time).
/// Regression assertions allow 10% relative slack around these values.
class Fixtures {
public:
    static const Fixtures& builtin();
    static Fixtures from_json_text(const std::string& text);
    static Fixtures from_file(const std::string& path);

    double get(const std::string& key) const;
    std::optional<double> maybe(const std::string& key) const;
    const std::string& version() const { return version_; }
    const std::map<std::string, double>& values() const { return values_; }

    static constexpr double kRelativeSlack = 0.10;

private:
    std::string version_ = "fixtures-v0";
    std::map<std::string, double> values_;
};

} // namespace focklab

#endif
