#include "howe/findings.hpp"

#include <iostream>
#include <mutex>
#include <set>

namespace howe {

namespace {
std::mutex g_mu;
std::function<void(const std::string&)> g_sink;
std::set<std::string> g_seen;
}

void report_finding(const std::string& msg) {
    std::lock_guard<std::mutex> lock(g_mu);
    if (g_sink) {
        g_sink(msg);
        return;
    }
    // repeated identical findings are printed once
    if (g_seen.insert(msg).second) std::cerr << "[finding] " << msg << "\n";
}

void set_finding_sink(std::function<void(const std::string&)> sink) {
    std::lock_guard<std::mutex> lock(g_mu);
    g_sink = std::move(sink);
}

} // namespace howe
