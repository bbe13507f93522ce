#include "pms/levy.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pms {

namespace {

// A point where one of the three step functions in the band condition can
// change. Candidates derived from a breakpoint of F keep its index and the
// shift direction so the F-side values at that exact point come from the
// stored levels instead of a rounded x -/+ h round trip.
struct BandCandidate {
    double x;
    int f_index;  // -1: from G or the interval end
    int shift;    // +1: x = f.x + h, -1: x = f.x - h
};

double level_before(const Ddf& f, int i) {
    return i == 0 ? 0.0 : f.breakpoints()[static_cast<std::size_t>(i) - 1].v;
}

double level_at(const Ddf& f, int i) {
    return f.breakpoints()[static_cast<std::size_t>(i)].v;
}

}  // namespace

bool condition_holds(const Ddf& f, const Ddf& g, double h) {
    if (!(h > 0.0) || !(h <= 1.0)) {
        throw std::domain_error("condition_holds: h must lie in (0,1]");
    }
    const double lo = -1.0 / h;
    const double hi = 1.0 / h;

    std::vector<BandCandidate> candidates;
    candidates.push_back({lo, -1, 0});  // covers the piece just above the left end
    const auto& fb = f.breakpoints();
    for (std::size_t i = 0; i < fb.size(); ++i) {
        for (int shift : {+1, -1}) {
            const double x = fb[i].x + shift * h;
            if (lo < x && x < hi) candidates.push_back({x, static_cast<int>(i), shift});
        }
    }
    for (const auto& b : g.breakpoints()) {
        if (lo < b.x && b.x < hi) candidates.push_back({b.x, -1, 0});
    }

    for (const auto& c : candidates) {
        // Left values at c (skipped for the interval-end marker, which is
        // outside the open interval).
        if (c.x > lo) {
            const double low = (c.shift == +1) ? level_before(f, c.f_index)
                                               : f.value(c.x - h);
            const double mid = g.value(c.x);
            const double high = (c.shift == -1) ? level_before(f, c.f_index)
                                                : f.value(c.x + h);
            if (low - h > mid || mid > high + h) return false;
        }
        // Right limits at c cover the constant piece up to the next
        // candidate (all three functions are step functions).
        const double low = (c.shift == +1) ? level_at(f, c.f_index)
                                           : f.right_limit(c.x - h);
        const double mid = g.right_limit(c.x);
        const double high = (c.shift == -1) ? level_at(f, c.f_index)
                                            : f.right_limit(c.x + h);
        if (low - h > mid || mid > high + h) return false;
    }
    return true;
}

double levy_distance(const Ddf& f, const Ddf& g) {
    if (f == g) return 0.0;
    // The joint condition weakens as h grows and always holds at h = 1
    // (the band is wider than [0,1] there), so bisection applies.
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 60 && hi - lo > 1e-6; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (condition_holds(f, g, mid) && condition_holds(g, f, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double dist_to_h0(const Ddf& f) {
    const auto& bp = f.breakpoints();
    double best = 1.0;  // the condition set always contains h = 1
    for (std::size_t i = 0; i < bp.size(); ++i) {
        // On [x_i, x_{i+1}) the right limit is v_i; v_i > 1 - h means
        // h > 1 - v_i, contributing inf = max(x_i, 1 - v_i) if that meets
        // the piece.
        const double piece_lo = bp[i].x;
        const double piece_hi = (i + 1 < bp.size())
                                    ? bp[i + 1].x
                                    : std::numeric_limits<double>::infinity();
        const double threshold = 1.0 - bp[i].v;
        if (piece_hi > threshold) best = std::min(best, std::max(piece_lo, threshold));
    }
    return std::min(best, 1.0);
}

bool in_h0_ball(const Ddf& f, double t) {
    if (!(t > 0.0)) throw std::domain_error("in_h0_ball: t must be positive");
    return f.value(t) > 1.0 - t;
}

}  // namespace pms
