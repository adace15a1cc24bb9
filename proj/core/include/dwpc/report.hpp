#ifndef DWPC_REPORT_HPP
#define DWPC_REPORT_HPP

#include "dwpc/suite.hpp"

namespace dwpc {

/// Stable-order JSON rendering of a suite report; identical inputs produce
/// byte-identical output.
std::string report_to_json(const SuiteReport& report);

}  // namespace dwpc

#endif
