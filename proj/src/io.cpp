#include "pms/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>

namespace pms::io {

double round9(double v) {
    const std::string s = format9(v);
    return std::strtod(s.c_str(), nullptr) + 0.0;  // also normalizes -0
}

std::string format9(double v) { return format_number(v); }

nlohmann::json ddf_to_json(const Ddf& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& b : f.breakpoints()) {
        arr.push_back({{"x", round9(b.x)}, {"v", round9(b.v)}});
    }
    return nlohmann::json{{"breakpoints", arr}};
}

namespace {

double require_number(const nlohmann::json& j, const std::string& key,
                      const std::string& where) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(where + ": missing field '" + key + "'");
    }
    if (!j.at(key).is_number()) {
        throw ParseError(where + ": field '" + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

}  // namespace

Ddf ddf_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("breakpoints")) {
        throw ParseError("ddf: missing field 'breakpoints'");
    }
    const auto& arr = j.at("breakpoints");
    if (!arr.is_array()) throw ParseError("ddf: 'breakpoints' must be an array");

    std::vector<Breakpoint> pts;
    double prev_x = -1.0;
    double prev_v = 0.0;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "ddf: breakpoints[" + std::to_string(i) + "]";
        const double x = require_number(arr[i], "x", where);
        const double v = require_number(arr[i], "v", where);
        if (!std::isfinite(x) || x < 0.0) {
            throw ContentError("x must be finite and nonnegative at index " +
                               std::to_string(i));
        }
        if (!(v > 0.0) || !(v <= 1.0)) {
            throw ContentError("v must lie in (0,1] at index " + std::to_string(i));
        }
        if (i > 0 && !(x > prev_x)) {
            throw ContentError("x not strictly increasing at index " + std::to_string(i));
        }
        if (i > 0 && !(v > prev_v)) {
            throw ContentError("v not strictly increasing at index " + std::to_string(i));
        }
        prev_x = x;
        prev_v = v;
        pts.push_back({x, v});
    }
    return Ddf::from_breakpoints(std::move(pts));
}

namespace {

nlohmann::json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_file(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

}  // namespace

Ddf load_ddf(const std::filesystem::path& path) { return ddf_from_json(parse_file(path)); }

void save_ddf(const std::filesystem::path& path, const Ddf& f) {
    write_file(path, ddf_to_json(f));
}

nlohmann::json space_to_json(const PmSpace& space) {
    nlohmann::json tau;
    if (space.tau().is_convolution()) {
        tau = {{"kind", "convolution"}};
    } else {
        tau = {{"kind", "tau_T"}, {"tnorm", tnorm_tag(*space.tau().tnorm_kind())}};
    }
    nlohmann::json dist = nlohmann::json::object();
    for (std::size_t p = 0; p < space.size(); ++p) {
        for (std::size_t q = p + 1; q < space.size(); ++q) {
            dist[space.label(p) + "," + space.label(q)] = ddf_to_json(space.distance(p, q));
        }
    }
    return nlohmann::json{
        {"points", space.labels()}, {"tau", tau}, {"dist", dist}};
}

PmSpace space_from_json(const nlohmann::json& j, bool validate_axioms) {
    if (!j.is_object()) throw ParseError("space: document must be an object");
    if (!j.contains("points") || !j.at("points").is_array()) {
        throw ParseError("space: missing 'points' array");
    }
    std::vector<std::string> labels;
    for (const auto& p : j.at("points")) {
        if (!p.is_string()) throw ParseError("space: point labels must be strings");
        const std::string label = p.get<std::string>();
        if (label.empty()) throw ContentError("space: empty point label");
        if (label.find(',') != std::string::npos) {
            throw ContentError("space: point label may not contain a comma: " + label);
        }
        for (const auto& seen : labels) {
            if (seen == label) throw ContentError("space: duplicate label " + label);
        }
        labels.push_back(label);
    }
    if (labels.empty()) throw ContentError("space: at least one point required");

    if (!j.contains("tau") || !j.at("tau").is_object()) {
        throw ParseError("space: missing 'tau' object");
    }
    const auto& tau_j = j.at("tau");
    if (!tau_j.contains("kind") || !tau_j.at("kind").is_string()) {
        throw ParseError("space: tau.kind must be a string");
    }
    const std::string kind = tau_j.at("kind").get<std::string>();
    TriangleFn tau = TriangleFn::convolution();
    if (kind == "tau_T") {
        if (!tau_j.contains("tnorm") || !tau_j.at("tnorm").is_string()) {
            throw ParseError("space: tau.tnorm must name a t-norm");
        }
        const auto t = tnorm_from_tag(tau_j.at("tnorm").get<std::string>());
        if (!t || *t == TNorm::drastic) {
            throw ParseError("space: tau.tnorm must be one of T_M, T_P, T_L");
        }
        tau = TriangleFn::sup_tnorm(*t);
    } else if (kind != "convolution") {
        throw ParseError("space: tau.kind must be 'tau_T' or 'convolution'");
    }

    if (!j.contains("dist") || !j.at("dist").is_object()) {
        throw ParseError("space: missing 'dist' object");
    }
    const std::size_t n = labels.size();
    auto index_of = [&](const std::string& l) {
        for (std::size_t i = 0; i < n; ++i) {
            if (labels[i] == l) return i;
        }
        throw ContentError("space: unknown label in pair key: " + l);
    };

    std::vector<std::vector<Ddf>> dist(n, std::vector<Ddf>(n));
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (const auto& [key, value] : j.at("dist").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) {
            throw ParseError("space: pair key must be 'label,label': " + key);
        }
        const std::size_t p = index_of(key.substr(0, comma));
        const std::size_t q = index_of(key.substr(comma + 1));
        if (p == q) {
            throw ContentError("space: diagonal entries are implied, remove " + key);
        }
        if (seen[p][q]) throw ContentError("space: pair given twice: " + key);
        seen[p][q] = seen[q][p] = true;
        Ddf f;
        try {
            f = ddf_from_json(value);
        } catch (const ContentError& e) {
            throw ContentError("space: pair " + key + ": " + e.what());
        } catch (const ParseError& e) {
            throw ParseError("space: pair " + key + ": " + e.what());
        }
        dist[p][q] = f;
        dist[q][p] = f;
    }
    for (std::size_t p = 0; p < n; ++p) {
        dist[p][p] = Ddf::h0();
        for (std::size_t q = p + 1; q < n; ++q) {
            if (!seen[p][q]) {
                throw ContentError("space: missing pair " + labels[p] + "," + labels[q]);
            }
        }
    }

    PmSpace space(std::move(labels), std::move(dist), tau);
    if (validate_axioms) {
        const CheckReport report = validate(space);
        if (!report.passed()) {
            throw ContentError("space: " + report.summary());
        }
    }
    return space;
}

PmSpace load_space(const std::filesystem::path& path, bool validate_axioms) {
    return space_from_json(parse_file(path), validate_axioms);
}

void save_space(const std::filesystem::path& path, const PmSpace& space) {
    write_file(path, space_to_json(space));
}

nlohmann::json report_to_json(const CheckReport& report) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& [label, value] : report.witnesses()) {
        witnesses.push_back({{"label", label}, {"value", value}});
    }
    nlohmann::json diagnostics = nlohmann::json::object();
    for (const auto& [label, values] : report.diagnostics()) {
        nlohmann::json arr = nlohmann::json::array();
        for (double v : values) arr.push_back(round9(v));
        diagnostics[label] = arr;
    }
    return nlohmann::json{{"name", report.name()},
                          {"outcome", report.outcome()},
                          {"passed", report.passed()},
                          {"hypothesis_met", report.hypothesis_met()},
                          {"witnesses", witnesses},
                          {"diagnostics", diagnostics}};
}

}  // namespace pms::io
