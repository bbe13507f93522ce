#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pms/ddf.hpp"
#include "pms/pmspace.hpp"
#include "pms/report.hpp"

namespace pms::io {

// Unreadable or structurally malformed input: JSON syntax errors, missing
// or mistyped fields. Maps to the usage/parse exit code.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input whose content violates a semantic invariant:
// non-monotone breakpoints, missing pairs, duplicate labels, axiom
// failures. Maps to the check-failure exit code.
struct ContentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical number formatting: 9 significant digits. Applied to every
// number emitted, so re-serialization is byte-stable.
double round9(double v);
std::string format9(double v);

nlohmann::json ddf_to_json(const Ddf& f);
Ddf ddf_from_json(const nlohmann::json& j);
Ddf load_ddf(const std::filesystem::path& path);
void save_ddf(const std::filesystem::path& path, const Ddf& f);

nlohmann::json space_to_json(const PmSpace& space);
// Axiom validation runs unless validate_axioms is false; failures raise
// ContentError carrying the witness.
PmSpace space_from_json(const nlohmann::json& j, bool validate_axioms = true);
PmSpace load_space(const std::filesystem::path& path, bool validate_axioms = true);
void save_space(const std::filesystem::path& path, const PmSpace& space);

nlohmann::json report_to_json(const CheckReport& report);

}  // namespace pms::io
