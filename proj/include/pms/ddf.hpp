#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "pms/report.hpp"

namespace pms {

// One jump of a step function: the function takes the value v just after x.
struct Breakpoint {
    double x;
    double v;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Distance distribution function in canonical left-continuous step form.
//
// With breakpoints (x_1,v_1) < ... < (x_n,v_n), both coordinates strictly
// increasing and v_i in (0,1]:
//
//   F(y) = 0    for y <= x_1,
//   F(y) = v_i  for y in (x_i, x_{i+1}],
//   F(y) = v_n  for finite y > x_n,   and F(+inf) = 1.
//
// If v_n < 1 the missing mass 1 - v_n sits at +infinity. The empty
// breakpoint list is the function that is 0 everywhere finite (all mass at
// +infinity); it is also what the default constructor builds. Canonical
// form makes structural equality coincide with pointwise equality.
class Ddf {
public:
    Ddf() = default;

    // Jump from 0 to 1 just after a; a may be +infinity (no finite jump).
    static Ddf dirac(double a);
    static Ddf h0() { return dirac(0.0); }

    // Sorts, merges duplicate abscissae (keeping the larger value) and
    // drops zero-height jumps, then validates the canonical invariants.
    static Ddf from_breakpoints(std::vector<Breakpoint> points);

    // Left-continuous evaluation; accepts +/-infinity.
    double value(double x) const;
    double operator()(double x) const { return value(x); }
    // Limit from the right, i.e. the step value just above x.
    double right_limit(double x) const;

    const std::vector<Breakpoint>& breakpoints() const { return points_; }
    // sup of F over the finite reals: v_n, or 0 without breakpoints.
    double final_value() const { return points_.empty() ? 0.0 : points_.back().v; }

    // Throws std::logic_error if the canonical invariants do not hold.
    void check_invariants() const;

    friend bool operator==(const Ddf&, const Ddf&) = default;

private:
    struct canonical_tag {};
    Ddf(std::vector<Breakpoint> points, canonical_tag) : points_(std::move(points)) {}

    std::vector<Breakpoint> points_;

    friend Ddf pointwise_combine(std::span<const Ddf> fs, bool take_max);
};

// Pointwise partial order: F(x) <= G(x) everywhere. Decided exactly on the
// union of breakpoints and their right limits.
bool leq(const Ddf& f, const Ddf& g);

// First point where f exceeds g by more than slack, if any. The reported
// abscissa is the breakpoint candidate; at_right_limit marks a violation on
// the open interval just above it.
struct PointwiseViolation {
    double x;
    double lhs;
    double rhs;
    bool at_right_limit;
};
std::optional<PointwiseViolation> find_exceedance(const Ddf& f, const Ddf& g,
                                                  double slack = 0.0);

// max(0, sup_x (f(x) - g(x))) over the candidate points.
double sup_exceedance(const Ddf& f, const Ddf& g);
// sup-norm distance between two step functions, exact on breakpoints.
double sup_norm_distance(const Ddf& f, const Ddf& g);

// Pointwise maximum; valid for any nonempty family (the supremum of
// d.d.f.s is again a d.d.f.).
Ddf sup_family(std::span<const Ddf> fs);
// Pointwise minimum as a step function; may leave mass at +infinity.
Ddf pointwise_inf(std::span<const Ddf> fs);

// Sampled continuity points of a step function: midpoints between
// consecutive breakpoints plus points beyond the last one.
std::vector<double> continuity_points(const Ddf& f);

// Compares two convergence diagnostics for seq -> limit: the largest
// pointwise gap at sampled continuity points of the limit, and the modified
// Levy distance. Passes when the two verdicts (below tol on the final
// element) agree; the full traces are attached.
CheckReport weak_convergence_report(const std::vector<Ddf>& seq, const Ddf& limit,
                                    double tol);

struct RandomDdfOptions {
    int max_breakpoints = 8;
    double x_max = 2.0;
    // Abscissae and values are drawn from dyadic grids so that sums and
    // complements stay exact in floating point.
    int x_denominator = 64;
    int v_denominator = 128;
    double cap_probability = 0.25;  // chance the function tops out below 1
    bool allow_flat_zero = false;   // admit the all-mass-at-infinity function
};
Ddf random_ddf(std::mt19937_64& rng, const RandomDdfOptions& opts = {});

}  // namespace pms
