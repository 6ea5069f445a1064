#ifndef QCLAB_SCENARIO_HPP
#define QCLAB_SCENARIO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qclab/curves.hpp"

namespace qclab {

// Flat key-value scenario config with sections, parsed strictly: unknown
// sections or keys are rejected.
struct Scenario {
    std::string name;
    // section -> (key -> value), normalized echo of the config text
    std::map<std::string, std::map<std::string, std::string>> sections;

    static Scenario parse_file(const std::string& path);
    static Scenario parse_text(const std::string& text);

    std::string to_config_text() const;

    std::string get(const std::string& section, const std::string& key,
                    const std::string& fallback = "") const;
    bool has(const std::string& section, const std::string& key) const;
};

struct RunOptions {
    std::string out_dir = "out";
    int grid_override = 0;   // 0 = use the scenario's resolution
    uint64_t seed = 12345;   // randomized property diagnostics
    bool write_outputs = true;
};

struct RunResult {
    bool ok = false;
    std::string report_json;  // serialized report document
    std::string failure;      // non-empty when ok == false
};

RunResult run_scenario(const Scenario& s, const RunOptions& opt);

// Sorted "kind name - description" lines; filter is a substring match on the name.
std::vector<std::string> list_catalog(const std::string& filter = "");

struct SuiteEntry {
    std::string file;
    std::string name;
    bool ok = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<SuiteEntry> entries;
    bool all_ok() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }
};

SuiteResult run_suite(const std::string& dir, const RunOptions& opt);

extern const char* kVersion;

}  // namespace qclab

#endif
