#include "pms/report.hpp"

#include <cstdio>

namespace pms {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

const std::vector<double>* CheckReport::find_trace(const std::string& label) const {
    for (const auto& [name, values] : diagnostics_) {
        if (name == label) return &values;
    }
    return nullptr;
}

std::string CheckReport::summary() const {
    std::string line = name_ + ": " + outcome();
    if (!witnesses_.empty()) {
        line += " [" + witnesses_.front().first + ": " + witnesses_.front().second + "]";
    }
    return line;
}

}  // namespace pms
