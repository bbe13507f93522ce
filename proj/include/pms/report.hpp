#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pms {

// Shared pass/fail container for validators and theorem checks.
//
// A failed check always carries at least one witness (the offending pair,
// point or parameter); the only way to clear passed() is fail(), which
// records one. A check whose hypothesis could not be established is a
// vacuous pass: passed() stays true but vacuous() is set and the unmet
// hypothesis is named, so callers can keep substantive and vacuous passes
// apart.
class CheckReport {
public:
    using Witness = std::pair<std::string, std::string>;
    using Trace = std::pair<std::string, std::vector<double>>;

    explicit CheckReport(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    bool passed() const { return passed_; }
    bool hypothesis_met() const { return hypothesis_met_; }
    bool vacuous() const { return passed_ && !hypothesis_met_; }

    void fail(const std::string& label, const std::string& value) {
        passed_ = false;
        witnesses_.emplace_back(label, value);
    }
    void require(bool ok, const std::string& label, const std::string& value) {
        if (!ok) fail(label, value);
    }
    void hypothesis_unmet(const std::string& which) {
        hypothesis_met_ = false;
        witnesses_.emplace_back("unmet hypothesis", which);
    }
    // Informational witness; does not change the verdict.
    void note(const std::string& label, const std::string& value) {
        witnesses_.emplace_back(label, value);
    }
    void trace(const std::string& label, std::vector<double> values) {
        diagnostics_.emplace_back(label, std::move(values));
    }

    const std::vector<Witness>& witnesses() const { return witnesses_; }
    const std::vector<Trace>& diagnostics() const { return diagnostics_; }
    const std::vector<double>* find_trace(const std::string& label) const;

    // "pass", "vacuous-pass" or "fail".
    std::string outcome() const {
        if (!passed_) return "fail";
        return hypothesis_met_ ? "pass" : "vacuous-pass";
    }
    // One line: name, outcome and the first witness if any.
    std::string summary() const;

private:
    std::string name_;
    bool passed_ = true;
    bool hypothesis_met_ = true;
    std::vector<Witness> witnesses_;
    std::vector<Trace> diagnostics_;
};

// Compact 9-significant-digit rendering used in witnesses and documents.
std::string format_number(double v);

}  // namespace pms
