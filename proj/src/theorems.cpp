#include "pms/theorems.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "pms/levy.hpp"

namespace pms {

namespace {

std::string subset_text(const PmSpace& space, const SubsetRef& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.indices.size(); ++i) {
        out += (i ? "," : "") + space.label(a.indices[i]);
    }
    return out + "}";
}

SubsetRef subset_from_mask(unsigned mask) {
    std::vector<std::size_t> idx;
    for (unsigned i = 0; mask >> i; ++i) {
        if ((mask >> i) & 1u) idx.push_back(i);
    }
    return SubsetRef{std::move(idx)};
}

SubsetRef complement_of(const PmSpace& space, const SubsetRef& a) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (!a.contains(i)) idx.push_back(i);
    }
    return SubsetRef{std::move(idx)};
}

bool subset_of(const SubsetRef& a, const SubsetRef& b) {
    return std::includes(b.indices.begin(), b.indices.end(), a.indices.begin(),
                         a.indices.end());
}

bool is_closed(const PmSpace& space, const SubsetRef& a) {
    const SubsetRef comp = complement_of(space, a);
    if (comp.indices.empty()) return true;
    return is_open(space, comp).passed();
}

}  // namespace

CheckReport diameter_report(const PmSpace& space, std::size_t max_subset_size) {
    if (max_subset_size < 2) {
        throw std::domain_error("diameter_report: max_subset_size must be at least 2");
    }
    if (space.size() > 20) {
        throw std::domain_error("diameter_report: space too large for subset enumeration");
    }
    CheckReport report("diameter properties");

    const unsigned full = (1u << space.size()) - 1u;
    std::vector<SubsetRef> subsets;
    std::vector<Ddf> diameters;
    for (unsigned mask = 1; mask <= full; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > max_subset_size) continue;
        subsets.push_back(subset_from_mask(mask));
        diameters.push_back(prob_diameter(space, subsets.back()));
    }

    const Ddf unit = Ddf::h0();
    std::vector<double> violations(7, 0.0);
    auto flag = [&](int item, const std::string& text) {
        if (violations[item - 1] == 0.0) {
            report.fail("item (" + std::to_string(item) + ")", text);
        }
        violations[item - 1] += 1.0;
    };

    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const SubsetRef& a = subsets[i];
        const Ddf& d = diameters[i];

        try {
            d.check_invariants();
        } catch (const std::logic_error& e) {
            flag(1, subset_text(space, a) + ": " + e.what());
        }
        if ((d == unit) != (a.indices.size() == 1)) {
            flag(2, subset_text(space, a) + " has unit-step diameter iff it is a singleton");
        }
        for (std::size_t p : a.indices) {
            for (std::size_t q : a.indices) {
                if (!leq(d, space.distance(p, q))) {
                    flag(4, subset_text(space, a) + " diameter exceeds F_" +
                                space.label(p) + "," + space.label(q));
                }
            }
        }
        if (a.indices.size() == 2 &&
            d != space.distance(a.indices[0], a.indices[1])) {
            flag(5, subset_text(space, a) + " diameter differs from the pair distance");
        }
        if (closure(space, a) != a) {
            const Ddf closed = prob_diameter(space, closure(space, a));
            if (closed != d) {
                flag(7, subset_text(space, a) + " diameter changes under closure");
            }
        }
    }

    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            if (i == j) continue;
            const SubsetRef& a = subsets[i];
            const SubsetRef& b = subsets[j];
            if (subset_of(a, b)) {
                if (!leq(diameters[j], diameters[i])) {
                    flag(3, subset_text(space, a) + " inside " + subset_text(space, b) +
                                " breaks antitonicity");
                }
            }
            std::vector<std::size_t> overlap;
            std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(),
                                  b.indices.end(), std::back_inserter(overlap));
            if (!overlap.empty()) {
                std::vector<std::size_t> both = a.indices;
                both.insert(both.end(), b.indices.begin(), b.indices.end());
                const Ddf d_union = prob_diameter(space, SubsetRef::of(std::move(both)));
                const Ddf composed = space.tau()(diameters[i], diameters[j]);
                // tau values carry rounding, hence the slack.
                if (find_exceedance(composed, d_union, 1e-9)) {
                    flag(6, "tau of diameters of " + subset_text(space, a) + " and " +
                                subset_text(space, b) + " exceeds the union diameter");
                }
            }
        }
    }

    report.trace("violations_per_item", violations);
    report.trace("subsets_checked", {static_cast<double>(subsets.size())});
    return report;
}

CheckReport tb_bounded_report(const PmSpace& space, const SubsetRef& a,
                              const std::vector<double>& eps_grid) {
    space.check_subset(a);
    if (eps_grid.empty()) throw std::domain_error("tb_bounded_report: empty eps grid");
    for (double e : eps_grid) {
        if (!(e > 0.0)) throw std::domain_error("tb_bounded_report: eps must be positive");
    }

    CheckReport report("totally bounded implies bounded");
    const BoundednessResult b = classify_boundedness(space, a);
    report.trace("sup_value", {b.sup_value});
    report.note("boundedness", boundedness_tag(b.kind));

    for (double e : eps_grid) {
        const CheckReport tb = totally_bounded(space, a, e, TotalBoundednessMode::strong);
        if (!tb.passed()) {
            report.hypothesis_unmet("strong total boundedness fails at eps = " +
                                    format_number(e));
            return report;
        }
    }
    report.require(b.kind == Boundedness::bounded, "conclusion",
                   "totally bounded at every grid eps, yet sup = " +
                       format_number(b.sup_value) + " (" + boundedness_tag(b.kind) + ")");
    return report;
}

CheckReport subsequence_check(const PmSpace& space, const PointSeq& seq,
                              const std::vector<std::size_t>& sub_indices,
                              std::size_t p0, double eps, double lam) {
    space.check_sequence(seq);
    if (p0 >= space.size()) throw std::domain_error("subsequence_check: p0 out of range");
    if (sub_indices.empty()) {
        throw std::domain_error("subsequence_check: empty subsequence");
    }
    for (std::size_t k = 0; k < sub_indices.size(); ++k) {
        if (sub_indices[k] >= seq.points.size()) {
            throw std::domain_error("subsequence_check: subsequence index out of range");
        }
        if (k > 0 && sub_indices[k] <= sub_indices[k - 1]) {
            throw std::domain_error("subsequence_check: indices must be strictly increasing");
        }
    }

    PointSeq sub;
    for (std::size_t k : sub_indices) sub.points.push_back(seq.points[k]);

    CheckReport report("cauchy subsequence limit");
    const CheckReport cauchy = is_cauchy(space, seq, eps, lam);
    if (!cauchy.passed()) {
        report.hypothesis_unmet("sequence is not cauchy at (eps, lambda)");
        return report;
    }
    const CheckReport sub_conv = converges(space, sub, p0, eps, lam);
    if (!sub_conv.passed()) {
        report.hypothesis_unmet("subsequence does not converge to the proposed limit");
        return report;
    }
    const CheckReport conv = converges(space, seq, p0, eps, lam);
    report.require(conv.passed(), "conclusion",
                   "cauchy sequence with convergent subsequence fails to converge to " +
                       space.label(p0));
    return report;
}

CheckReport cantor_check(const PmSpace& space, const std::vector<SubsetRef>& nested) {
    if (nested.empty()) throw std::domain_error("cantor_check: empty chain");
    for (const auto& s : nested) space.check_subset(s);

    CheckReport report("nested closed chain intersection");
    std::vector<double> diam_trace;
    for (const auto& s : nested) {
        diam_trace.push_back(dist_to_h0(prob_diameter(space, s)));
    }
    report.trace("diameter_to_unit", diam_trace);

    for (std::size_t k = 0; k < nested.size(); ++k) {
        if (!is_closed(space, nested[k])) {
            report.hypothesis_unmet("chain element " + std::to_string(k) +
                                    " is not closed");
            return report;
        }
        if (k > 0 && !subset_of(nested[k], nested[k - 1])) {
            report.hypothesis_unmet("chain is not nested at element " + std::to_string(k));
            return report;
        }
    }
    if (!(diam_trace.back() < 1e-6)) {
        report.hypothesis_unmet("final diameter stays away from the unit step (d = " +
                                format_number(diam_trace.back()) + ")");
        return report;
    }

    SubsetRef intersection = nested.front();
    for (const auto& s : nested) {
        std::vector<std::size_t> next;
        std::set_intersection(intersection.indices.begin(), intersection.indices.end(),
                              s.indices.begin(), s.indices.end(),
                              std::back_inserter(next));
        intersection.indices = std::move(next);
    }
    if (intersection.indices.size() == 1) {
        report.note("intersection", space.label(intersection.indices.front()));
    } else if (intersection.indices.empty()) {
        report.fail("conclusion", "intersection is empty");
    } else {
        report.fail("conclusion",
                    "intersection has " + std::to_string(intersection.indices.size()) +
                        " points: " + subset_text(space, intersection));
    }
    return report;
}

CheckReport baire_check(const PmSpace& space,
                        const std::vector<SubsetRef>& open_dense_sets) {
    if (open_dense_sets.empty()) throw std::domain_error("baire_check: empty family");
    for (const auto& s : open_dense_sets) space.check_subset(s);

    CheckReport report("open dense family intersection");
    for (std::size_t k = 0; k < open_dense_sets.size(); ++k) {
        if (!is_open(space, open_dense_sets[k]).passed()) {
            report.hypothesis_unmet("set " + std::to_string(k) + " is not open");
            return report;
        }
        if (!is_dense(space, open_dense_sets[k]).passed()) {
            report.hypothesis_unmet("set " + std::to_string(k) + " is not dense");
            return report;
        }
    }

    SubsetRef intersection = open_dense_sets.front();
    for (const auto& s : open_dense_sets) {
        std::vector<std::size_t> next;
        std::set_intersection(intersection.indices.begin(), intersection.indices.end(),
                              s.indices.begin(), s.indices.end(),
                              std::back_inserter(next));
        intersection.indices = std::move(next);
    }
    if (intersection.indices.empty()) {
        report.fail("conclusion", "intersection is empty");
        return report;
    }
    report.require(is_dense(space, intersection).passed(), "conclusion",
                   "intersection " + subset_text(space, intersection) + " is not dense");
    return report;
}

namespace {

struct EpsLam {
    double eps;
    double lam;
};
constexpr EpsLam kSequenceGrid[] = {{1.0, 0.5}, {0.5, 0.5}, {0.25, 0.25}};
constexpr double kCoverGrid[] = {1.0, 0.5, 0.25};

}  // namespace

CheckReport heine_borel_report(const PmSpace& space, const SubsetRef& e,
                               const std::vector<PointSeq>& seqs,
                               const std::vector<std::vector<SubsetRef>>& covers) {
    space.check_subset(e);
    for (const auto& s : seqs) {
        space.check_sequence(s);
        for (std::size_t p : s.points) {
            if (!e.contains(p)) {
                throw std::domain_error("heine_borel_report: sequence leaves the subset");
            }
        }
    }
    for (const auto& cover : covers) {
        if (cover.empty()) throw std::domain_error("heine_borel_report: empty cover");
        for (const auto& v : cover) {
            space.check_subset(v);
            if (!is_open(space, v).passed()) {
                throw std::domain_error("heine_borel_report: cover element is not open");
            }
        }
    }

    CheckReport report("compactness facets");

    // (a) completeness on the supplied sequences plus cover-mode total
    // boundedness on the eps grid.
    bool complete_tb = true;
    for (const auto& s : seqs) {
        for (const auto& [eps, lam] : kSequenceGrid) {
            if (!is_cauchy(space, s, eps, lam).passed()) continue;
            bool has_limit = false;
            for (std::size_t p : e.indices) {
                if (converges(space, s, p, eps, lam).passed()) {
                    has_limit = true;
                    break;
                }
            }
            if (!has_limit) {
                complete_tb = false;
                report.note("cauchy without limit",
                            "a sequence is cauchy at eps = " + format_number(eps) +
                                ", lambda = " + format_number(lam) +
                                " but converges to no point of the subset");
            }
        }
    }
    for (double eps : kCoverGrid) {
        if (!totally_bounded(space, e, eps, TotalBoundednessMode::cover).passed()) {
            complete_tb = false;
        }
    }

    // (b) every sequence has a convergent subsequence; the most frequent
    // point yields one by pigeonhole.
    bool bolzano = true;
    for (const auto& s : seqs) {
        std::map<std::size_t, std::size_t> counts;
        for (std::size_t p : s.points) ++counts[p];
        std::size_t star = s.points.front();
        for (const auto& [p, c] : counts) {
            if (c > counts[star]) star = p;
        }
        PointSeq sub;
        for (std::size_t p : s.points) {
            if (p == star) sub.points.push_back(p);
        }
        for (const auto& [eps, lam] : kSequenceGrid) {
            if (!converges(space, sub, star, eps, lam).passed()) {
                bolzano = false;
                report.note("no convergent subsequence",
                            "pigeonhole subsequence at " + space.label(star) +
                                " fails at eps = " + format_number(eps));
            }
        }
    }

    // (c) greedy finite subcover for each supplied cover.
    bool subcovers = true;
    std::vector<double> subcover_sizes;
    for (const auto& cover : covers) {
        std::vector<std::size_t> uncovered = e.indices;
        std::size_t used = 0;
        while (!uncovered.empty()) {
            std::size_t best = cover.size();
            std::size_t best_hits = 0;
            for (std::size_t k = 0; k < cover.size(); ++k) {
                std::size_t hits = 0;
                for (std::size_t p : uncovered) {
                    if (cover[k].contains(p)) ++hits;
                }
                if (hits > best_hits) {
                    best_hits = hits;
                    best = k;
                }
            }
            if (best == cover.size()) break;  // some point is not covered at all
            ++used;
            std::vector<std::size_t> rest;
            for (std::size_t p : uncovered) {
                if (!cover[best].contains(p)) rest.push_back(p);
            }
            uncovered = std::move(rest);
        }
        if (!uncovered.empty()) {
            report.hypothesis_unmet("supplied family does not cover the subset (misses " +
                                    space.label(uncovered.front()) + ")");
            return report;
        }
        subcover_sizes.push_back(static_cast<double>(used));
    }
    report.trace("subcover_sizes", subcover_sizes);

    report.trace("facets", {complete_tb ? 1.0 : 0.0, bolzano ? 1.0 : 0.0,
                            subcovers ? 1.0 : 0.0});
    if (complete_tb != bolzano || bolzano != subcovers) {
        report.fail("facets disagree",
                    std::string("complete+tb = ") + (complete_tb ? "yes" : "no") +
                        ", subsequences = " + (bolzano ? "yes" : "no") +
                        ", subcovers = " + (subcovers ? "yes" : "no"));
    }
    return report;
}

}  // namespace pms
