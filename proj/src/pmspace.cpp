#include "pms/pmspace.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "pms/levy.hpp"

namespace pms {

SubsetRef SubsetRef::of(std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return SubsetRef{std::move(idx)};
}

bool SubsetRef::contains(std::size_t i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

PmSpace::PmSpace(std::vector<std::string> labels, std::vector<std::vector<Ddf>> dist,
                 TriangleFn tau)
    : labels_(std::move(labels)), dist_(std::move(dist)), tau_(tau) {
    if (labels_.empty()) throw std::invalid_argument("PmSpace: at least one point");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw std::invalid_argument("PmSpace: empty point label");
        if (!seen.insert(l).second) {
            throw std::invalid_argument("PmSpace: duplicate point label " + l);
        }
    }
    if (dist_.size() != labels_.size()) {
        throw std::invalid_argument("PmSpace: distance matrix row count mismatch");
    }
    for (const auto& row : dist_) {
        if (row.size() != labels_.size()) {
            throw std::invalid_argument("PmSpace: distance matrix column count mismatch");
        }
    }
}

PmSpace PmSpace::from_metric(std::vector<std::string> labels,
                             const std::vector<std::vector<double>>& d, TNorm t) {
    const std::size_t n = labels.size();
    if (n == 0) throw std::domain_error("from_metric: at least one point");
    if (d.size() != n) throw std::domain_error("from_metric: matrix shape mismatch");
    for (const auto& row : d) {
        if (row.size() != n) throw std::domain_error("from_metric: matrix shape mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i][i] != 0.0) {
            throw std::domain_error("from_metric: zero diagonal violated at " + labels[i]);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(d[i][j]) || d[i][j] < 0.0) {
                throw std::domain_error("from_metric: nonnegativity violated at " +
                                        labels[i] + "," + labels[j]);
            }
            if (d[i][j] != d[j][i]) {
                throw std::domain_error("from_metric: symmetry violated at " + labels[i] +
                                        "," + labels[j]);
            }
            if (i != j && d[i][j] == 0.0) {
                throw std::domain_error("from_metric: positivity violated at " + labels[i] +
                                        "," + labels[j]);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (d[i][k] > d[i][j] + d[j][k]) {
                    throw std::domain_error("from_metric: triangle inequality violated at " +
                                            labels[i] + "," + labels[j] + "," + labels[k]);
                }
            }
        }
    }

    std::vector<std::vector<Ddf>> dist(n, std::vector<Ddf>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) dist[i][j] = Ddf::dirac(d[i][j]);
    }
    return PmSpace(std::move(labels), std::move(dist), TriangleFn::sup_tnorm(t));
}

std::optional<std::size_t> PmSpace::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

SubsetRef PmSpace::all_points() const {
    std::vector<std::size_t> idx(size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return SubsetRef{std::move(idx)};
}

void PmSpace::check_subset(const SubsetRef& a) const {
    if (a.indices.empty()) throw std::domain_error("subset must be nonempty");
    for (std::size_t i : a.indices) {
        if (i >= size()) throw std::domain_error("subset index out of range");
    }
}

void PmSpace::check_sequence(const PointSeq& s) const {
    if (s.points.empty()) throw std::domain_error("sequence must be nonempty");
    for (std::size_t i : s.points) {
        if (i >= size()) throw std::domain_error("sequence index out of range");
    }
}

CheckReport validate(const PmSpace& space) {
    CheckReport report("space axioms");
    const std::size_t n = space.size();
    const Ddf unit = Ddf::h0();

    for (std::size_t p = 0; p < n; ++p) {
        if (space.distance(p, p) != unit) {
            report.fail("axiom (a)", "F_" + space.label(p) + "," + space.label(p) +
                                         " is not the unit step at 0");
            return report;
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (space.distance(p, q) == unit) {
                report.fail("axiom (b)", "F_" + space.label(p) + "," + space.label(q) +
                                             " equals the unit step at 0");
                return report;
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (space.distance(p, q) != space.distance(q, p)) {
                report.fail("axiom (c)", "F_" + space.label(p) + "," + space.label(q) +
                                             " != F_" + space.label(q) + "," +
                                             space.label(p));
                return report;
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t r = 0; r < n; ++r) {
                const Ddf composed =
                    space.tau()(space.distance(p, q), space.distance(q, r));
                if (auto w = find_exceedance(composed, space.distance(p, r))) {
                    report.fail(
                        "axiom (d)",
                        "tau(F_" + space.label(p) + "," + space.label(q) + ", F_" +
                            space.label(q) + "," + space.label(r) + ") exceeds F_" +
                            space.label(p) + "," + space.label(r) + " near x = " +
                            format_number(w->x) + " (" + format_number(w->lhs) + " > " +
                            format_number(w->rhs) + ")");
                    report.note("witness triple", space.label(p) + "," + space.label(q) +
                                                      "," + space.label(r));
                    return report;
                }
            }
        }
    }
    return report;
}

std::vector<std::size_t> neighborhood(const PmSpace& space, std::size_t p, double t) {
    if (p >= space.size()) throw std::domain_error("neighborhood: point out of range");
    if (!(t > 0.0)) throw std::domain_error("neighborhood: t must be positive");
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < space.size(); ++q) {
        if (space.distance(p, q).value(t) > 1.0 - t) out.push_back(q);
    }
    return out;
}

namespace {

// Membership of q in N_p(t) switches exactly at t = dist_to_h0(F_pq), so a
// grid built from those thresholds (plus breakpoint abscissae, perturbed
// both ways) realizes every distinct neighborhood of p.
std::vector<double> radius_candidates(const PmSpace& space, std::size_t p) {
    constexpr double kNudge = 1e-6;
    std::set<double> ts{1.0};
    for (std::size_t q = 0; q < space.size(); ++q) {
        if (q == p) continue;
        const double d = dist_to_h0(space.distance(p, q));
        if (d > 0.0) {
            ts.insert(d / 2.0);
            ts.insert(d + kNudge);
            if (d - kNudge > 0.0) ts.insert(d - kNudge);
        }
        for (const auto& b : space.distance(p, q).breakpoints()) {
            ts.insert(b.x + kNudge);
            if (b.x - kNudge > 0.0) ts.insert(b.x - kNudge);
        }
    }
    return {ts.begin(), ts.end()};
}

bool neighborhood_inside(const PmSpace& space, std::size_t p, double t,
                         const SubsetRef& a, std::size_t* escaping) {
    for (std::size_t q : neighborhood(space, p, t)) {
        if (!a.contains(q)) {
            if (escaping) *escaping = q;
            return false;
        }
    }
    return true;
}

bool neighborhood_meets(const PmSpace& space, std::size_t p, double t,
                        const SubsetRef& a) {
    for (std::size_t q : neighborhood(space, p, t)) {
        if (a.contains(q)) return true;
    }
    return false;
}

}  // namespace

CheckReport is_open(const PmSpace& space, const SubsetRef& a) {
    space.check_subset(a);
    CheckReport report("open in strong topology");
    std::vector<double> chosen;
    for (std::size_t p : a.indices) {
        bool found = false;
        std::size_t escaping = 0;
        for (double t : radius_candidates(space, p)) {
            if (neighborhood_inside(space, p, t, a, &escaping)) {
                chosen.push_back(t);
                found = true;
                break;
            }
        }
        if (!found) {
            report.fail("no isolating radius",
                        "every candidate neighborhood of " + space.label(p) +
                            " leaves the set, e.g. through " + space.label(escaping));
            return report;
        }
    }
    report.trace("chosen_t", chosen);
    return report;
}

CheckReport is_dense(const PmSpace& space, const SubsetRef& a) {
    space.check_subset(a);
    CheckReport report("dense in strong topology");
    for (std::size_t p = 0; p < space.size(); ++p) {
        for (double t : radius_candidates(space, p)) {
            if (!neighborhood_meets(space, p, t, a)) {
                report.fail("empty neighborhood intersection",
                            "N_" + space.label(p) + "(" + format_number(t) +
                                ") misses the set");
                return report;
            }
        }
    }
    return report;
}

SubsetRef closure(const PmSpace& space, const SubsetRef& a) {
    space.check_subset(a);
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < space.size(); ++p) {
        bool touches = true;
        for (double t : radius_candidates(space, p)) {
            if (!neighborhood_meets(space, p, t, a)) {
                touches = false;
                break;
            }
        }
        if (touches) out.push_back(p);
    }
    return SubsetRef::of(std::move(out));
}

CheckReport converges(const PmSpace& space, const PointSeq& seq, std::size_t p,
                      double eps, double lam) {
    space.check_sequence(seq);
    if (p >= space.size()) throw std::domain_error("converges: target out of range");
    if (!(eps > 0.0)) throw std::domain_error("converges: eps must be positive");
    if (!(lam > 0.0) || !(lam < 1.0)) {
        throw std::domain_error("converges: lambda must lie in (0,1)");
    }

    const std::size_t n = seq.points.size();
    std::vector<double> trace;
    trace.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        trace.push_back(dist_to_h0(space.distance(seq.points[i], p)));
    }

    std::size_t tail_start = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(space.distance(seq.points[i], p).value(eps) > 1.0 - lam)) {
            tail_start = i + 1;
        }
    }

    CheckReport report("sequence convergence");
    report.trace("levy_to_target", trace);
    if (tail_start >= n) {
        report.fail("no converging tail",
                    "F_" + space.label(seq.points[n - 1]) + "," + space.label(p) + "(" +
                        format_number(eps) + ") = " +
                        format_number(space.distance(seq.points[n - 1], p).value(eps)) +
                        " <= " + format_number(1.0 - lam));
    } else {
        report.trace("tail_start", {static_cast<double>(tail_start)});
    }
    return report;
}

CheckReport is_cauchy(const PmSpace& space, const PointSeq& seq, double eps, double lam) {
    space.check_sequence(seq);
    if (!(eps > 0.0)) throw std::domain_error("is_cauchy: eps must be positive");
    if (!(lam > 0.0) || !(lam < 1.0)) {
        throw std::domain_error("is_cauchy: lambda must lie in (0,1)");
    }

    const std::size_t n = seq.points.size();
    CheckReport report("cauchy condition");
    if (n == 1) {
        report.trace("tail_start", {0.0});
        return report;
    }

    // trace[k] = worst pairwise distance-to-unit-step over the tail from k.
    std::vector<double> trace(n, 0.0);
    std::size_t tail_start = 0;
    std::size_t worst_i = 0, worst_j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Ddf& f = space.distance(seq.points[i], seq.points[j]);
            const double d = dist_to_h0(f);
            for (std::size_t k = 0; k <= i; ++k) trace[k] = std::max(trace[k], d);
            if (!(f.value(eps) > 1.0 - lam) && i + 1 > tail_start) {
                tail_start = i + 1;
                worst_i = i;
                worst_j = j;
            }
        }
    }

    report.trace("levy_pairwise_tail", trace);
    // A tail must contain at least two entries to constrain anything.
    if (tail_start > n - 2) {
        report.fail("witness pair",
                    space.label(seq.points[worst_i]) + "," + space.label(seq.points[worst_j]) +
                        " at positions " + std::to_string(worst_i) + "," +
                        std::to_string(worst_j));
    } else {
        report.trace("tail_start", {static_cast<double>(tail_start)});
    }
    return report;
}

Ddf prob_diameter(const PmSpace& space, const SubsetRef& a) {
    space.check_subset(a);
    std::vector<Ddf> fs;
    fs.reserve(a.indices.size() * a.indices.size());
    for (std::size_t p : a.indices) {
        for (std::size_t q : a.indices) fs.push_back(space.distance(p, q));
    }
    // The left-continuous regularization sup_{t<x} is the identity on the
    // step representation, so the pointwise infimum is already the diameter.
    return pointwise_inf(fs);
}

const char* boundedness_tag(Boundedness b) {
    switch (b) {
        case Boundedness::bounded: return "bounded";
        case Boundedness::semi_bounded: return "semi-bounded";
        case Boundedness::unbounded: return "unbounded";
    }
    return "?";
}

BoundednessResult classify_boundedness(const PmSpace& space, const SubsetRef& a) {
    const double s = prob_diameter(space, a).final_value();
    if (s == 1.0) return {Boundedness::bounded, s};
    if (s == 0.0) return {Boundedness::unbounded, s};
    return {Boundedness::semi_bounded, s};
}

CheckReport totally_bounded(const PmSpace& space, const SubsetRef& a, double eps,
                            TotalBoundednessMode mode) {
    space.check_subset(a);
    if (!(eps > 0.0)) throw std::domain_error("totally_bounded: eps must be positive");

    if (mode == TotalBoundednessMode::cover) {
        CheckReport report("totally bounded (cover)");
        std::vector<std::size_t> uncovered = a.indices;
        std::string centers;
        while (!uncovered.empty()) {
            const std::size_t c = uncovered.front();  // c covers itself
            centers += (centers.empty() ? "" : ",") + space.label(c);
            const std::vector<std::size_t> ball = neighborhood(space, c, eps);
            std::vector<std::size_t> rest;
            for (std::size_t q : uncovered) {
                if (!std::binary_search(ball.begin(), ball.end(), q)) rest.push_back(q);
            }
            uncovered = std::move(rest);
        }
        report.note("cover centers", centers);
        return report;
    }

    CheckReport report("totally bounded (strong)");
    // Some center must certainly reach every point of A at scale eps.
    std::size_t best_center = a.indices.front();
    std::size_t best_count = 0;
    std::size_t best_fail = a.indices.front();
    for (std::size_t c : a.indices) {
        std::size_t count = 0;
        std::size_t first_fail = c;
        for (std::size_t p : a.indices) {
            if (space.distance(c, p).value(eps) == 1.0) {
                ++count;
            } else if (first_fail == c) {
                first_fail = p;
            }
        }
        if (count == a.indices.size()) {
            report.note("center", space.label(c));
            return report;
        }
        if (count > best_count) {
            best_count = count;
            best_center = c;
            best_fail = first_fail;
        }
    }
    report.fail("no certain center",
                "best candidate " + space.label(best_center) + " has F(" +
                    format_number(eps) + ") = " +
                    format_number(space.distance(best_center, best_fail).value(eps)) +
                    " < 1 toward " + space.label(best_fail));
    return report;
}

CheckReport separate_points(const PmSpace& space, std::size_t p, std::size_t q) {
    if (p >= space.size() || q >= space.size()) {
        throw std::domain_error("separate_points: point out of range");
    }
    if (p == q) throw std::domain_error("separate_points: points must differ");

    std::set<double> ts;
    for (std::size_t owner : {p, q}) {
        for (double t : radius_candidates(space, owner)) ts.insert(t);
    }

    CheckReport report("point separation");
    for (double t : ts) {
        const auto np = neighborhood(space, p, t);
        const auto nq = neighborhood(space, q, t);
        std::vector<std::size_t> overlap;
        std::set_intersection(np.begin(), np.end(), nq.begin(), nq.end(),
                              std::back_inserter(overlap));
        if (overlap.empty()) {
            report.trace("t", {t});
            return report;
        }
    }
    std::string overlap_text;
    for (double t : ts) {
        const auto np = neighborhood(space, p, t);
        const auto nq = neighborhood(space, q, t);
        std::vector<std::size_t> overlap;
        std::set_intersection(np.begin(), np.end(), nq.begin(), nq.end(),
                              std::back_inserter(overlap));
        if (!overlap.empty()) {
            overlap_text = "t = " + format_number(t) + " shares " +
                           space.label(overlap.front());
            break;
        }
    }
    report.fail("no separating radius", overlap_text);
    return report;
}

}  // namespace pms
