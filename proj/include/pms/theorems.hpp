#pragma once

#include "pms/pmspace.hpp"
#include "pms/report.hpp"

namespace pms {

// Desk-scale executable checks of the classical structure theorems on a
// finite space. Each check verifies an implication: when its hypothesis
// cannot be established the report is a flagged vacuous pass, never
// evidence.

// Properties of the probabilistic diameter over all subsets up to the
// given size: it is a valid d.d.f.; it equals the unit step at 0 exactly
// on singletons; it is antitone under inclusion; it bounds every F_pq from
// below; it equals F_pq on pairs; on overlapping subsets the diameter of
// the union dominates tau of the diameters; and it is invariant under
// closure.
CheckReport diameter_report(const PmSpace& space, std::size_t max_subset_size);

// Totally bounded (strong reading, at every grid eps) implies bounded.
CheckReport tb_bounded_report(const PmSpace& space, const SubsetRef& a,
                              const std::vector<double>& eps_grid);

// A Cauchy sequence with a convergent subsequence converges to the same
// limit. sub_indices are strictly increasing positions into seq.
CheckReport subsequence_check(const PmSpace& space, const PointSeq& seq,
                              const std::vector<std::size_t>& sub_indices,
                              std::size_t p0, double eps, double lam);

// Cantor intersection property: a nested chain of nonempty closed subsets
// whose final diameter has vanished (distance to the unit step below 1e-6)
// intersects in exactly one point.
CheckReport cantor_check(const PmSpace& space, const std::vector<SubsetRef>& nested);

// Baire property: a family of open dense subsets has nonempty, dense
// intersection.
CheckReport baire_check(const PmSpace& space,
                        const std::vector<SubsetRef>& open_dense_sets);

// Compactness facets on a subset E: (a) supplied Cauchy sequences converge
// in E and E is cover-mode totally bounded on an eps grid; (b) every
// supplied sequence has a convergent subsequence (pigeonhole on the most
// frequent point); (c) every supplied open cover of E admits a finite
// subcover (greedy). Passes when the three verdicts agree. Cover elements
// must be open; sequences must stay inside E.
CheckReport heine_borel_report(const PmSpace& space, const SubsetRef& e,
                               const std::vector<PointSeq>& seqs,
                               const std::vector<std::vector<SubsetRef>>& covers);

}  // namespace pms
