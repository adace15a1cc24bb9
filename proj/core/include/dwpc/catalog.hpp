#ifndef DWPC_CATALOG_HPP
#define DWPC_CATALOG_HPP

#include <string>

#include "dwpc/suite.hpp"

namespace dwpc {

/// Shipped manifold specs: a trivial product, the hyperbolic plane as a
/// warped product, genuinely doubly warped 2x2 entries with P on either
/// factor, interval-times-sphere entries (n1 = 1), and the round sphere.
const std::vector<DwpSpec>& builtin_catalog();

/// Default configuration running the full catalog.
SuiteConfig default_config();

/// Config file I/O (JSON). Throws ConfigError with diagnostics.
SuiteConfig load_config(const std::string& path);
SuiteConfig parse_config(const std::string& json_text);
std::string config_to_json(const SuiteConfig& cfg);

}  // namespace dwpc

#endif
