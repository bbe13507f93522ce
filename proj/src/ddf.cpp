#include "pms/ddf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "pms/levy.hpp"

namespace pms {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Ddf Ddf::dirac(double a) {
    if (std::isnan(a) || a < 0.0) {
        throw std::domain_error("Ddf::dirac: parameter must be nonnegative or +inf");
    }
    if (a == kInf) return Ddf{};
    return Ddf{{{a, 1.0}}, canonical_tag{}};
}

Ddf Ddf::from_breakpoints(std::vector<Breakpoint> points) {
    for (const auto& b : points) {
        if (!std::isfinite(b.x) || b.x < 0.0) {
            throw std::domain_error("Ddf: breakpoint abscissa must be finite and nonnegative");
        }
        if (std::isnan(b.v) || b.v < 0.0 || b.v > 1.0) {
            throw std::domain_error("Ddf: breakpoint value must lie in [0,1]");
        }
    }
    std::sort(points.begin(), points.end(), [](const Breakpoint& a, const Breakpoint& b) {
        return a.x != b.x ? a.x < b.x : a.v < b.v;
    });
    // Duplicate abscissae keep the larger value; jumps of height zero are
    // dropped, which also removes v = 0 entries.
    std::vector<Breakpoint> merged;
    for (const auto& b : points) {
        if (!merged.empty() && merged.back().x == b.x) {
            merged.back().v = b.v;
        } else {
            merged.push_back(b);
        }
    }
    std::vector<Breakpoint> canon;
    double prev = 0.0;
    for (const auto& b : merged) {
        if (b.v > prev) {
            canon.push_back(b);
            prev = b.v;
        }
    }
    return Ddf{std::move(canon), canonical_tag{}};
}

double Ddf::value(double x) const {
    if (std::isnan(x)) throw std::domain_error("Ddf: evaluation at NaN");
    if (x == kInf) return 1.0;
    auto it = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const Breakpoint& b, double y) { return b.x < y; });
    return it == points_.begin() ? 0.0 : std::prev(it)->v;
}

double Ddf::right_limit(double x) const {
    if (std::isnan(x)) throw std::domain_error("Ddf: evaluation at NaN");
    if (x == kInf) return 1.0;
    auto it = std::upper_bound(points_.begin(), points_.end(), x,
                               [](double y, const Breakpoint& b) { return y < b.x; });
    return it == points_.begin() ? 0.0 : std::prev(it)->v;
}

void Ddf::check_invariants() const {
    double prev_x = -1.0;
    double prev_v = 0.0;
    for (const auto& b : points_) {
        if (!std::isfinite(b.x) || b.x < 0.0) {
            throw std::logic_error("Ddf invariant: abscissa finite and nonnegative");
        }
        if (!(b.x > prev_x)) throw std::logic_error("Ddf invariant: abscissae strictly increasing");
        if (!(b.v > prev_v)) throw std::logic_error("Ddf invariant: values strictly increasing");
        if (!(b.v <= 1.0)) throw std::logic_error("Ddf invariant: values at most 1");
        prev_x = b.x;
        prev_v = b.v;
    }
}

namespace {

std::vector<double> merged_abscissae(const Ddf& f, const Ddf& g) {
    std::vector<double> xs;
    xs.reserve(f.breakpoints().size() + g.breakpoints().size());
    for (const auto& b : f.breakpoints()) xs.push_back(b.x);
    for (const auto& b : g.breakpoints()) xs.push_back(b.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

}  // namespace

std::optional<PointwiseViolation> find_exceedance(const Ddf& f, const Ddf& g, double slack) {
    for (double x : merged_abscissae(f, g)) {
        if (f.value(x) > g.value(x) + slack) {
            return PointwiseViolation{x, f.value(x), g.value(x), false};
        }
        if (f.right_limit(x) > g.right_limit(x) + slack) {
            return PointwiseViolation{x, f.right_limit(x), g.right_limit(x), true};
        }
    }
    return std::nullopt;
}

bool leq(const Ddf& f, const Ddf& g) { return !find_exceedance(f, g).has_value(); }

double sup_exceedance(const Ddf& f, const Ddf& g) {
    double worst = 0.0;
    for (double x : merged_abscissae(f, g)) {
        worst = std::max(worst, f.value(x) - g.value(x));
        worst = std::max(worst, f.right_limit(x) - g.right_limit(x));
    }
    return worst;
}

double sup_norm_distance(const Ddf& f, const Ddf& g) {
    return std::max(sup_exceedance(f, g), sup_exceedance(g, f));
}

Ddf pointwise_combine(std::span<const Ddf> fs, bool take_max) {
    if (fs.empty()) {
        throw std::domain_error(take_max ? "sup_family: empty family"
                                         : "pointwise_inf: empty family");
    }
    std::set<double> xs;
    for (const auto& f : fs) {
        for (const auto& b : f.breakpoints()) xs.insert(b.x);
    }
    // On each interval between consecutive merged abscissae every input is
    // constant and equals its right limit at the left endpoint, so the
    // combined step is exact.
    std::vector<Breakpoint> steps;
    double prev = 0.0;
    for (double x : xs) {
        double w = fs.front().right_limit(x);
        for (std::size_t i = 1; i < fs.size(); ++i) {
            double v = fs[i].right_limit(x);
            w = take_max ? std::max(w, v) : std::min(w, v);
        }
        if (w > prev) {
            steps.push_back({x, w});
            prev = w;
        }
    }
    return Ddf{std::move(steps), Ddf::canonical_tag{}};
}

Ddf sup_family(std::span<const Ddf> fs) { return pointwise_combine(fs, true); }

Ddf pointwise_inf(std::span<const Ddf> fs) { return pointwise_combine(fs, false); }

std::vector<double> continuity_points(const Ddf& f) {
    const auto& bp = f.breakpoints();
    std::vector<double> pts;
    if (bp.empty()) return {0.5, 1.5};
    if (bp.front().x > 0.0) pts.push_back(bp.front().x / 2.0);
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        pts.push_back(0.5 * (bp[i].x + bp[i + 1].x));
    }
    pts.push_back(bp.back().x + 0.5);
    pts.push_back(bp.back().x + 1.5);
    return pts;
}

CheckReport weak_convergence_report(const std::vector<Ddf>& seq, const Ddf& limit,
                                    double tol) {
    if (!(tol > 0.0)) throw std::domain_error("weak_convergence_report: tol must be positive");
    if (seq.empty()) throw std::domain_error("weak_convergence_report: empty sequence");

    const std::vector<double> pts = continuity_points(limit);
    std::vector<double> pointwise;
    std::vector<double> levy;
    pointwise.reserve(seq.size());
    levy.reserve(seq.size());
    for (const auto& f : seq) {
        double gap = 0.0;
        for (double x : pts) gap = std::max(gap, std::fabs(f.value(x) - limit.value(x)));
        pointwise.push_back(gap);
        levy.push_back(levy_distance(f, limit));
    }

    const bool pointwise_ok = pointwise.back() < tol;
    const bool levy_ok = levy.back() < tol;

    CheckReport report("weak convergence vs metric convergence");
    report.trace("pointwise_sup", pointwise);
    report.trace("levy", levy);
    report.trace("converged", {pointwise_ok ? 1.0 : 0.0, levy_ok ? 1.0 : 0.0});
    if (pointwise_ok != levy_ok) {
        report.fail("diagnostics disagree",
                    "pointwise gap " + std::to_string(pointwise.back()) + " vs d_L " +
                        std::to_string(levy.back()) + " at tol " + std::to_string(tol));
    }
    return report;
}

Ddf random_ddf(std::mt19937_64& rng, const RandomDdfOptions& opts) {
    const int lo = opts.allow_flat_zero ? 0 : 1;
    std::uniform_int_distribution<int> count_dist(lo, opts.max_breakpoints);
    const int k = count_dist(rng);
    if (k == 0) return Ddf{};

    const int x_cells = std::max(k, static_cast<int>(opts.x_max * opts.x_denominator));
    std::set<int> x_ticks;
    std::uniform_int_distribution<int> x_dist(0, x_cells);
    while (static_cast<int>(x_ticks.size()) < k) x_ticks.insert(x_dist(rng));

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const bool capped = unit(rng) < opts.cap_probability;
    const int v_cells = opts.v_denominator;
    int top = v_cells;
    if (capped && v_cells - 1 >= k) {
        std::uniform_int_distribution<int> top_dist(k, v_cells - 1);
        top = top_dist(rng);
    }
    std::set<int> v_ticks{top};
    if (k > 1) {
        std::uniform_int_distribution<int> v_dist(1, top - 1);
        while (static_cast<int>(v_ticks.size()) < k) v_ticks.insert(v_dist(rng));
    }

    std::vector<Breakpoint> pts;
    auto xit = x_ticks.begin();
    auto vit = v_ticks.begin();
    for (int i = 0; i < k; ++i, ++xit, ++vit) {
        pts.push_back({static_cast<double>(*xit) / opts.x_denominator,
                       static_cast<double>(*vit) / v_cells});
    }
    return Ddf::from_breakpoints(std::move(pts));
}

}  // namespace pms
