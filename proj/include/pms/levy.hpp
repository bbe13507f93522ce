#pragma once

#include "pms/ddf.hpp"

namespace pms {

// The two-sided band condition (F,G;h): F(x-h) - h <= G(x) <= F(x+h) + h
// for all x in (-1/h, 1/h). Decided exactly by inspecting left values and
// right limits at every breakpoint of G, every breakpoint of F shifted by
// +/-h, and the left end of the interval. Requires h in (0,1].
bool condition_holds(const Ddf& f, const Ddf& g, double h);

// Modified Levy metric: inf over h in (0,1] of the joint condition
// (F,G;h) and (G,F;h). The condition is monotone in h and always holds at
// h = 1, so the infimum is located by bisection; the returned midpoint is
// accurate to within 1e-6. Identical canonical forms return exactly 0.
double levy_distance(const Ddf& f, const Ddf& g);

// Distance to the unit step at 0 in closed form:
// inf{ h | F(h+) > 1 - h }, capped at 1. On the piece [x_i, x_{i+1}) where
// the right limit equals v_i the inequality solves to h > 1 - v_i, so each
// piece contributes max(x_i, 1 - v_i) when that meets the piece.
double dist_to_h0(const Ddf& f);

// F(t) > 1 - t, which holds iff dist_to_h0(f) < t. Requires t > 0.
bool in_h0_ball(const Ddf& f, double t);

}  // namespace pms
