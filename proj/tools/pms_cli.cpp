// Command-line front end: loads d.d.f. and space documents, dispatches the
// library operations and prints one JSON result document per invocation.
// Exit codes: 0 pass/success, 1 substantive check or content failure,
// 2 usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pms/io.hpp"
#include "pms/levy.hpp"
#include "pms/pmspace.hpp"
#include "pms/theorems.hpp"
#include "pms/triangle.hpp"

namespace {

using nlohmann::json;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int emit_report(const pms::CheckReport& report) {
    emit(pms::io::report_to_json(report));
    return report.passed() ? 0 : 1;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    for (char c : text) {
        if (c == sep) {
            out.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    out.push_back(item);
    return out;
}

std::size_t point_index(const pms::PmSpace& space, const std::string& label) {
    if (auto i = space.index_of(label)) return *i;
    throw std::domain_error("unknown point label: " + label);
}

pms::SubsetRef parse_subset(const pms::PmSpace& space, const std::string& text) {
    std::vector<std::size_t> idx;
    for (const auto& label : split(text, ',')) idx.push_back(point_index(space, label));
    return pms::SubsetRef::of(std::move(idx));
}

pms::PointSeq parse_sequence(const pms::PmSpace& space, const std::string& text) {
    pms::PointSeq seq;
    for (const auto& label : split(text, ',')) seq.points.push_back(point_index(space, label));
    return seq;
}

std::vector<double> parse_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::domain_error("grid must be start:stop:step");
    const double start = std::stod(parts[0]);
    const double stop = std::stod(parts[1]);
    const double step = std::stod(parts[2]);
    if (!(step > 0.0) || stop < start) throw std::domain_error("bad grid bounds");
    std::vector<double> grid;
    for (double x = start; x <= stop + 1e-12; x += step) grid.push_back(x);
    if (grid.empty()) throw std::domain_error("grid is empty");
    return grid;
}

pms::TNorm parse_tnorm(const std::string& tag, bool allow_drastic) {
    const auto t = pms::tnorm_from_tag(tag);
    if (!t || (!allow_drastic && *t == pms::TNorm::drastic)) {
        throw std::domain_error("unsupported t-norm tag: " + tag);
    }
    return *t;
}

struct SpaceArgs {
    std::string path;
    bool no_validate = false;

    pms::PmSpace load() const {
        if (no_validate) {
            pms::PmSpace space = pms::io::load_space(path, false);
            const pms::CheckReport report = pms::validate(space);
            if (!report.passed()) {
                std::cerr << "warning: " << report.summary() << "\n";
            }
            return space;
        }
        return pms::io::load_space(path, true);
    }
};

void add_space_options(CLI::App* cmd, SpaceArgs& args) {
    cmd->add_option("space", args.path, "space document (JSON)")->required();
    cmd->add_flag("--no-validate", args.no_validate,
                  "load even if the space axioms fail (warns on stderr)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"probabilistic metric space toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // --- distribution function commands -----------------------------------
    std::string ddf_a, ddf_b;
    auto* levy_cmd = app.add_subcommand("levy", "modified Levy distance between two d.d.f.s");
    levy_cmd->add_option("F", ddf_a, "first d.d.f. (JSON)")->required();
    levy_cmd->add_option("G", ddf_b, "second d.d.f. (JSON)")->required();
    levy_cmd->callback([&] {
        const double d = pms::levy_distance(pms::io::load_ddf(ddf_a), pms::io::load_ddf(ddf_b));
        emit(json{{"d_L", pms::io::round9(d)}});
    });

    auto* dist_cmd = app.add_subcommand("dist-h0", "distance to the unit step at 0");
    dist_cmd->add_option("F", ddf_a, "d.d.f. (JSON)")->required();
    dist_cmd->callback([&] {
        emit(json{{"dist_h0", pms::io::round9(pms::dist_to_h0(pms::io::load_ddf(ddf_a)))}});
    });

    std::string tau_tnorm = "T_M";
    int axiom_samples = 0;
    double tol = 1e-6;
    std::uint64_t seed = 1;
    auto* tau_cmd = app.add_subcommand("tau", "sup-T composition of two d.d.f.s");
    tau_cmd->add_option("--tnorm", tau_tnorm, "t-norm tag (T_M, T_P, T_L)")
        ->capture_default_str();
    tau_cmd->add_option("F", ddf_a, "first d.d.f. (JSON)")->required();
    tau_cmd->add_option("G", ddf_b, "second d.d.f. (JSON)")->required();
    tau_cmd->add_option("--axioms", axiom_samples,
                        "instead of composing, check the triangle-function axioms on "
                        "this many random samples");
    tau_cmd->add_option("--tol", tol, "tolerance for the axiom check")->capture_default_str();
    tau_cmd->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    tau_cmd->callback([&] {
        const auto tau = pms::TriangleFn::sup_tnorm(parse_tnorm(tau_tnorm, true));
        if (axiom_samples > 0) {
            exit_code = emit_report(pms::check_triangle_axioms(tau, axiom_samples, tol, seed));
            return;
        }
        emit(pms::io::ddf_to_json(tau(pms::io::load_ddf(ddf_a), pms::io::load_ddf(ddf_b))));
    });

    auto* conv_cmd = app.add_subcommand("conv", "convolution of two d.d.f.s");
    conv_cmd->add_option("F", ddf_a, "first d.d.f. (JSON)")->required();
    conv_cmd->add_option("G", ddf_b, "second d.d.f. (JSON)")->required();
    conv_cmd->add_option("--axioms", axiom_samples,
                         "instead of convolving, check the triangle-function axioms");
    conv_cmd->add_option("--tol", tol, "tolerance for the axiom check")->capture_default_str();
    conv_cmd->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    conv_cmd->callback([&] {
        const auto tau = pms::TriangleFn::convolution();
        if (axiom_samples > 0) {
            exit_code = emit_report(pms::check_triangle_axioms(tau, axiom_samples, tol, seed));
            return;
        }
        emit(pms::io::ddf_to_json(tau(pms::io::load_ddf(ddf_a), pms::io::load_ddf(ddf_b))));
    });

    std::string tnorm_tag_arg = "T_M";
    double x = 0.0, y = 0.0;
    bool conorm = false;
    auto* tnorm_cmd = app.add_subcommand("tnorm", "evaluate a t-norm or its dual conorm");
    tnorm_cmd->add_option("--tnorm", tnorm_tag_arg, "t-norm tag (T_M, T_P, T_L, T_D)")
        ->capture_default_str();
    tnorm_cmd->add_option("x", x, "first argument in [0,1]")->required();
    tnorm_cmd->add_option("y", y, "second argument in [0,1]")->required();
    tnorm_cmd->add_flag("--conorm", conorm, "evaluate the dual t-conorm instead");
    tnorm_cmd->add_option("--axioms", axiom_samples, "check the t-norm axioms instead");
    tnorm_cmd->add_option("--tol", tol, "tolerance for the axiom check")->capture_default_str();
    tnorm_cmd->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    tnorm_cmd->callback([&] {
        const pms::TNorm t = parse_tnorm(tnorm_tag_arg, true);
        if (axiom_samples > 0) {
            exit_code = emit_report(pms::check_tnorm_axioms(t, axiom_samples, tol, seed));
            return;
        }
        const double v = conorm ? pms::tconorm(t, x, y) : pms::tnorm(t, x, y);
        emit(json{{"value", pms::io::round9(v)}});
    });

    std::string grid_spec;
    auto* trace_cmd = app.add_subcommand("trace", "CSV evaluation of a d.d.f. on a grid");
    trace_cmd->add_option("F", ddf_a, "d.d.f. (JSON)")->required();
    trace_cmd->add_option("--grid", grid_spec, "grid start:stop:step")->required();
    trace_cmd->callback([&] {
        const pms::Ddf f = pms::io::load_ddf(ddf_a);
        std::cout << "x,value\n";
        for (double t : parse_grid(grid_spec)) {
            std::cout << pms::io::format9(t) << "," << pms::io::format9(f.value(t)) << "\n";
        }
    });

    // --- space commands ----------------------------------------------------
    SpaceArgs space_args;
    auto* validate_cmd = app.add_subcommand("validate", "check the space axioms");
    validate_cmd->add_option("space", space_args.path, "space document (JSON)")->required();
    validate_cmd->callback([&] {
        const pms::PmSpace space = pms::io::load_space(space_args.path, false);
        exit_code = emit_report(pms::validate(space));
    });

    std::string metric_path, out_path;
    std::string metric_tnorm = "T_M";
    auto* fm_cmd = app.add_subcommand("from-metric", "build a Dirac space from a metric");
    fm_cmd->add_option("metric", metric_path,
                       "metric document (JSON: points, d, optional tnorm)")
        ->required();
    fm_cmd->add_option("-o,--out", out_path, "write the space here instead of stdout");
    fm_cmd->add_option("--tnorm", metric_tnorm, "t-norm tag (T_M, T_P, T_L)")
        ->capture_default_str();
    fm_cmd->callback([&] {
        std::ifstream in(metric_path);
        if (!in) throw pms::io::ParseError("cannot open " + metric_path);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw pms::io::ParseError(metric_path + ": " + std::string(e.what()));
        }
        if (!doc.is_object() || !doc.contains("points") || !doc.contains("d")) {
            throw pms::io::ParseError("metric: needs 'points' and 'd'");
        }
        std::vector<std::string> labels;
        for (const auto& p : doc.at("points")) {
            if (!p.is_string()) throw pms::io::ParseError("metric: labels must be strings");
            labels.push_back(p.get<std::string>());
        }
        std::vector<std::vector<double>> d;
        for (const auto& row : doc.at("d")) {
            std::vector<double> r;
            for (const auto& v : row) {
                if (!v.is_number()) throw pms::io::ParseError("metric: d must be numeric");
                r.push_back(v.get<double>());
            }
            d.push_back(std::move(r));
        }
        if (doc.contains("tnorm")) metric_tnorm = doc.at("tnorm").get<std::string>();
        pms::PmSpace space = [&] {
            try {
                return pms::PmSpace::from_metric(std::move(labels), d,
                                                 parse_tnorm(metric_tnorm, false));
            } catch (const std::domain_error& e) {
                // a broken metric is a substantive failure, not a usage error
                throw pms::io::ContentError(e.what());
            }
        }();
        if (out_path.empty()) {
            emit(pms::io::space_to_json(space));
        } else {
            pms::io::save_space(out_path, space);
            emit(json{{"written", out_path}});
        }
    });

    std::string point_p, point_q, subset_spec, seq_spec, target;
    double radius = 0.0, eps = 0.0, lam = 0.0;
    auto* nb_cmd = app.add_subcommand("neighborhood", "strong neighborhood of a point");
    add_space_options(nb_cmd, space_args);
    nb_cmd->add_option("-p,--point", point_p, "center point label")->required();
    nb_cmd->add_option("-t,--radius", radius, "radius t > 0")->required();
    nb_cmd->callback([&] {
        const pms::PmSpace space = space_args.load();
        json labels = json::array();
        for (std::size_t q : pms::neighborhood(space, point_index(space, point_p), radius)) {
            labels.push_back(space.label(q));
        }
        emit(json{{"neighborhood", labels}});
    });

    auto* diam_cmd = app.add_subcommand("diameter", "probabilistic diameter of a subset");
    add_space_options(diam_cmd, space_args);
    diam_cmd->add_option("--subset", subset_spec, "comma-separated labels")->required();
    diam_cmd->callback([&] {
        const pms::PmSpace space = space_args.load();
        emit(pms::io::ddf_to_json(pms::prob_diameter(space, parse_subset(space, subset_spec))));
    });

    auto* classify_cmd = app.add_subcommand("classify", "boundedness class of a subset");
    add_space_options(classify_cmd, space_args);
    classify_cmd->add_option("--subset", subset_spec, "comma-separated labels")->required();
    classify_cmd->callback([&] {
        const pms::PmSpace space = space_args.load();
        const auto r = pms::classify_boundedness(space, parse_subset(space, subset_spec));
        emit(json{{"kind", pms::boundedness_tag(r.kind)},
                  {"sup", pms::io::round9(r.sup_value)}});
    });

    std::string tb_mode = "cover";
    auto* tb_cmd = app.add_subcommand("totally-bounded", "total boundedness of a subset");
    add_space_options(tb_cmd, space_args);
    tb_cmd->add_option("--subset", subset_spec, "comma-separated labels")->required();
    tb_cmd->add_option("--eps", eps, "scale eps > 0")->required();
    tb_cmd->add_option("--mode", tb_mode, "cover or strong")->capture_default_str();
    tb_cmd->callback([&] {
        const pms::PmSpace space = space_args.load();
        pms::TotalBoundednessMode mode;
        if (tb_mode == "cover") {
            mode = pms::TotalBoundednessMode::cover;
        } else if (tb_mode == "strong") {
            mode = pms::TotalBoundednessMode::strong;
        } else {
            throw std::domain_error("mode must be cover or strong");
        }
        exit_code = emit_report(
            pms::totally_bounded(space, parse_subset(space, subset_spec), eps, mode));
    });

    auto* sep_cmd = app.add_subcommand("separate", "disjoint neighborhoods of two points");
    add_space_options(sep_cmd, space_args);
    sep_cmd->add_option("-p", point_p, "first point")->required();
    sep_cmd->add_option("-q", point_q, "second point")->required();
    sep_cmd->callback([&] {
        const pms::PmSpace space = space_args.load();
        exit_code = emit_report(pms::separate_points(space, point_index(space, point_p),
                                                     point_index(space, point_q)));
    });

    auto* cauchy_cmd = app.add_subcommand("cauchy", "cauchy condition on a sequence prefix");
    add_space_options(cauchy_cmd, space_args);
    cauchy_cmd->add_option("--seq", seq_spec, "comma-separated labels")->required();
    cauchy_cmd->add_option("--eps", eps, "eps > 0")->required();
    cauchy_cmd->add_option("--lam", lam, "lambda in (0,1)")->required();
    cauchy_cmd->callback([&] {
        const pms::PmSpace space = space_args.load();
        exit_code = emit_report(pms::is_cauchy(space, parse_sequence(space, seq_spec), eps, lam));
    });

    auto* conv_seq_cmd = app.add_subcommand("converges", "convergence of a sequence prefix");
    add_space_options(conv_seq_cmd, space_args);
    conv_seq_cmd->add_option("--seq", seq_spec, "comma-separated labels")->required();
    conv_seq_cmd->add_option("--to", target, "target point label")->required();
    conv_seq_cmd->add_option("--eps", eps, "eps > 0")->required();
    conv_seq_cmd->add_option("--lam", lam, "lambda in (0,1)")->required();
    conv_seq_cmd->callback([&] {
        const pms::PmSpace space = space_args.load();
        exit_code = emit_report(pms::converges(space, parse_sequence(space, seq_spec),
                                               point_index(space, target), eps, lam));
    });

    // --- theorem checks ----------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "executable theorem checks");
    check_cmd->require_subcommand(1);

    std::size_t max_subset = 4;
    auto* chk_diam = check_cmd->add_subcommand("diameter", "diameter properties");
    add_space_options(chk_diam, space_args);
    chk_diam->add_option("--max-subset", max_subset, "largest subset size")
        ->capture_default_str();
    chk_diam->callback([&] {
        exit_code = emit_report(pms::diameter_report(space_args.load(), max_subset));
    });

    auto* chk_tb = check_cmd->add_subcommand("tb", "totally bounded implies bounded");
    add_space_options(chk_tb, space_args);
    chk_tb->add_option("--subset", subset_spec, "comma-separated labels")->required();
    chk_tb->add_option("--grid", grid_spec, "eps grid start:stop:step")->required();
    chk_tb->callback([&] {
        const pms::PmSpace space = space_args.load();
        exit_code = emit_report(pms::tb_bounded_report(
            space, parse_subset(space, subset_spec), parse_grid(grid_spec)));
    });

    std::string sub_spec;
    auto* chk_sub = check_cmd->add_subcommand("subsequence", "cauchy subsequence limit");
    add_space_options(chk_sub, space_args);
    chk_sub->add_option("--seq", seq_spec, "comma-separated labels")->required();
    chk_sub->add_option("--sub", sub_spec, "comma-separated positions into the sequence")
        ->required();
    chk_sub->add_option("--to", target, "proposed limit label")->required();
    chk_sub->add_option("--eps", eps, "eps > 0")->required();
    chk_sub->add_option("--lam", lam, "lambda in (0,1)")->required();
    chk_sub->callback([&] {
        const pms::PmSpace space = space_args.load();
        std::vector<std::size_t> sub;
        for (const auto& s : split(sub_spec, ',')) sub.push_back(std::stoul(s));
        exit_code = emit_report(pms::subsequence_check(space, parse_sequence(space, seq_spec),
                                                       sub, point_index(space, target), eps,
                                                       lam));
    });

    std::string chain_spec;
    auto* chk_cantor = check_cmd->add_subcommand("cantor", "nested closed chain intersection");
    add_space_options(chk_cantor, space_args);
    chk_cantor->add_option("--chain", chain_spec,
                           "semicolon-separated subsets, e.g. 'a,b,c;a,b;a'")
        ->required();
    chk_cantor->callback([&] {
        const pms::PmSpace space = space_args.load();
        std::vector<pms::SubsetRef> chain;
        for (const auto& s : split(chain_spec, ';')) chain.push_back(parse_subset(space, s));
        exit_code = emit_report(pms::cantor_check(space, chain));
    });

    std::string sets_spec;
    auto* chk_baire = check_cmd->add_subcommand("baire", "open dense family intersection");
    add_space_options(chk_baire, space_args);
    chk_baire->add_option("--sets", sets_spec, "semicolon-separated subsets")->required();
    chk_baire->callback([&] {
        const pms::PmSpace space = space_args.load();
        std::vector<pms::SubsetRef> sets;
        for (const auto& s : split(sets_spec, ';')) sets.push_back(parse_subset(space, s));
        exit_code = emit_report(pms::baire_check(space, sets));
    });

    std::string seqs_spec, covers_spec;
    auto* chk_hb = check_cmd->add_subcommand("heine-borel", "compactness facets");
    add_space_options(chk_hb, space_args);
    chk_hb->add_option("--subset", subset_spec, "the subset E")->required();
    chk_hb->add_option("--seqs", seqs_spec, "semicolon-separated sequences");
    chk_hb->add_option("--covers", covers_spec,
                       "semicolon-separated covers; sets within a cover separated by '|'");
    chk_hb->callback([&] {
        const pms::PmSpace space = space_args.load();
        std::vector<pms::PointSeq> seqs;
        if (!seqs_spec.empty()) {
            for (const auto& s : split(seqs_spec, ';')) seqs.push_back(parse_sequence(space, s));
        }
        std::vector<std::vector<pms::SubsetRef>> covers;
        if (!covers_spec.empty()) {
            for (const auto& c : split(covers_spec, ';')) {
                std::vector<pms::SubsetRef> cover;
                for (const auto& s : split(c, '|')) cover.push_back(parse_subset(space, s));
                covers.push_back(std::move(cover));
            }
        }
        exit_code = emit_report(pms::heine_borel_report(
            space, parse_subset(space, subset_spec), seqs, covers));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints help or the parse diagnostic
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const pms::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pms::io::ContentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
