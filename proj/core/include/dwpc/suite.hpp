#ifndef DWPC_SUITE_HPP
#define DWPC_SUITE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dwpc/checks.hpp"
#include "dwpc/identities.hpp"

namespace dwpc {

struct SuiteConfig {
    std::vector<DwpSpec> manifolds;
    int samples = 50;
    std::uint64_t seed = 42;
    std::vector<std::string> include;  // key prefixes; empty = everything
    std::vector<std::string> exclude;
    std::map<std::string, double> tolerances;  // per-key overrides
    std::string out_path;
    std::string format = "text";  // text | json
};

struct RunRow {
    std::string identity;
    std::string manifold;
    int points = 0;
    std::uint64_t seed = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string verdict;  // pass | fail | errata-confirmed | convention-mismatch |
                          // oracle-invalid | info | not-einstein | hypothesis-not-instantiable
    std::string convention;
    std::string note;
    double paper_residual = -1.0;  // displayed-form residual for errata rows
};

struct SuiteReport {
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<RunRow> rows;

    int failures() const;  // fail + oracle-invalid + convention-mismatch
    std::string to_text() const;
    std::string to_json() const;  // stable field order, byte-deterministic
};

SuiteReport run_suite(const SuiteConfig& config);

/// True when `key` survives the include/exclude prefix filters.
bool key_selected(const SuiteConfig& config, const std::string& key);

/// Parallelism cap: DWP_THREADS when set, else hardware concurrency.
int suite_thread_count();

}  // namespace dwpc

#endif
