#ifndef ALGC_IO_HPP
#define ALGC_IO_HPP

#include "algc/charclass.hpp"
#include "algc/groupoid.hpp"
#include "algc/poisson.hpp"

#include <json.hpp>

namespace algc {

using Json = nlohmann::ordered_json;

// Parsed algebroid description file. Metrics are kept as raw matrices so a
// file can be loaded before anything is validated.
struct AlgebroidDescription {
    AlgebroidPtr algebroid;
    std::vector<std::pair<std::string, RepPtr>> representations;
    struct MetricEntry {
        std::string name;
        std::string representation;
        PolyMatrix entries;
    };
    std::vector<MetricEntry> metrics;

    RepPtr representation(const std::string& name) const;
    Metric metric(const std::string& name) const; // requires the rep validated
};

AlgebroidDescription parse_algebroid_description(const std::string& text);
AlgebroidDescription load_algebroid_description(const std::string& path);
std::string print_algebroid_description(const AlgebroidDescription& desc);

PoissonBivector parse_bivector_description(const std::string& text);
PoissonBivector load_bivector_description(const std::string& path);
std::string print_bivector_description(const PoissonBivector& pi);

// FNV-1a 64-bit content digest, hex.
std::string input_digest(const std::string& bytes);

Json to_json(const ValidationReport& report);
Json to_json(const BettiReport& report);
Json to_json(const CharClassResult& result);
Json to_json(const HarnessReport& report);
Json to_json(const ModularCrossCheck& check);

// Report envelope: command echo, digest, engine version, results. No
// wall-clock data, so identical inputs give identical bytes.
Json run_report(const std::string& command, const std::string& digest, Json results);

inline constexpr const char* kEngineVersion = "0.1.0";

} // namespace algc

#endif
