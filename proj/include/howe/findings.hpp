#pragma once

#include <functional>
#include <string>

namespace howe {

// Sink for observations worth surfacing (expected-field violations, skipped
// degenerate pairs). Defaults to stderr; tests may capture.
void report_finding(const std::string& msg);
void set_finding_sink(std::function<void(const std::string&)> sink);

} // namespace howe
