#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nlwave {

// One verification check: pass flag plus the measured and bound values that
// decided it. Ordered vectors keep serialization deterministic.
struct CheckRecord {
    std::string name;
    bool passed = false;
    std::vector<std::pair<std::string, double>> measured;
    std::vector<std::pair<std::string, double>> bounds;
    std::string note;

    double measured_value(const std::string& key) const;
    double bound_value(const std::string& key) const;
};

struct VerificationReport {
    std::vector<CheckRecord> checks;
    double measured_M = 0.0;
    double measured_eps = 0.0;
    double measured_xbar = 0.0;
    double R_used = 0.0;
    double Q_used = 0.0;

    bool all_passed() const;
    const CheckRecord* find(const std::string& name) const;
};

}  // namespace nlwave
