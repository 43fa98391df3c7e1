#include "nlwave/report.hpp"

#include <stdexcept>

namespace nlwave {

namespace {
double lookup(const std::vector<std::pair<std::string, double>>& kv, const std::string& key) {
    for (const auto& [k, v] : kv)
        if (k == key) return v;
    throw std::out_of_range("check record has no entry '" + key + "'");
}
}  // namespace

double CheckRecord::measured_value(const std::string& key) const { return lookup(measured, key); }
double CheckRecord::bound_value(const std::string& key) const { return lookup(bounds, key); }

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace nlwave
