#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dw/invariants.hpp"
#include "dw/report.hpp"

namespace dw {

struct CheckResult {
    std::string id;     // "1".."10" for the numbered criteria
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct CatalogPair {
    std::string group;
    std::string cocycle;
};

/// Group/cocycle pairs used by the orientable checks.
std::vector<CatalogPair> orientable_catalog();
/// {+1,-1}-valued pairs used by the non-orientable checks.
std::vector<CatalogPair> sign_catalog();

/// Runs one numbered criterion (1..10); throws std::out_of_range for other ids.
CheckResult run_criterion(int id, std::uint64_t seed = 0);
/// Labeling sums on the small simplicial surfaces against the direct count.
CheckResult run_labeling_check();

/// `theorems`, `oracles`, `invariance` or `all`; throws std::invalid_argument otherwise.
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed = 0);

struct SuiteEntry {
    std::string group;
    std::string cocycle;
    std::string surface;
    std::vector<std::string> methods;  // subset of direct, statesum, verlinde, oracle
    double tolerance = 1e-8;
    std::uint64_t seed = 0;
};

struct SuiteConfig {
    std::vector<SuiteEntry> entries;
};

/// {"entries": [{"group":..., "cocycle":..., "surface":..., "methods":[...], "tolerance":..., "seed":...}]}
SuiteConfig suite_config_from_json(const Json& j);
SuiteConfig read_suite_config(const std::string& path);
std::vector<InvariantReport> run_config(const SuiteConfig& cfg, int workers = 1);

CrossCheckOptions options_for_methods(const std::vector<std::string>& methods);

}  // namespace dw
