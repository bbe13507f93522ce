#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pms/ddf.hpp"
#include "pms/report.hpp"
#include "pms/triangle.hpp"

namespace pms {

// Nonempty set of point indices into a space, kept sorted and unique.
struct SubsetRef {
    std::vector<std::size_t> indices;

    static SubsetRef of(std::vector<std::size_t> idx);
    bool contains(std::size_t i) const;
    friend bool operator==(const SubsetRef&, const SubsetRef&) = default;
};

// Finite prefix of a point sequence, as indices into a space.
struct PointSeq {
    std::vector<std::size_t> points;
};

// A finite probabilistic metric space: labelled points, a matrix of
// distance distribution functions and a triangle function. Construction
// checks shape only; the defining axioms are checked by validate(), so a
// space violating them can still be represented and diagnosed.
class PmSpace {
public:
    PmSpace(std::vector<std::string> labels, std::vector<std::vector<Ddf>> dist,
            TriangleFn tau);

    // Dirac embedding of a classical metric: distance functions are unit
    // steps at d(p,q) and the triangle function is the sup-T composition.
    // The matrix must be a metric; violations raise std::domain_error
    // naming the broken axiom and a witness.
    static PmSpace from_metric(std::vector<std::string> labels,
                               const std::vector<std::vector<double>>& d, TNorm t);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;
    const Ddf& distance(std::size_t p, std::size_t q) const { return dist_[p][q]; }
    const TriangleFn& tau() const { return tau_; }

    SubsetRef all_points() const;
    void check_subset(const SubsetRef& a) const;    // throws std::domain_error
    void check_sequence(const PointSeq& s) const;   // throws std::domain_error

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Ddf>> dist_;
    TriangleFn tau_;
};

// Checks the four defining axioms: identity on the diagonal, no identity
// off it, symmetry, and the triangle inequality under the space's triangle
// function. On failure carries the axiom id, point tuple and a witness
// abscissa.
CheckReport validate(const PmSpace& space);

// Strong neighborhood of p at radius t > 0: every q with F_pq(t) > 1 - t,
// equivalently with dist_to_h0(F_pq) < t.
std::vector<std::size_t> neighborhood(const PmSpace& space, std::size_t p, double t);

// Openness of A in the strong topology, decided over the finite candidate
// radius set where neighborhoods can change.
CheckReport is_open(const PmSpace& space, const SubsetRef& a);
// Density of A: every candidate neighborhood of every point meets A.
CheckReport is_dense(const PmSpace& space, const SubsetRef& a);
// Smallest superset of A whose complement is open (strong-topology closure).
SubsetRef closure(const PmSpace& space, const SubsetRef& a);

// (eps, lambda)-convergence of the sequence prefix to point p: some tail
// satisfies F_{p_n,p}(eps) > 1 - lambda. The report carries the trace of
// distances to the unit step as a diagnostic.
CheckReport converges(const PmSpace& space, const PointSeq& seq, std::size_t p,
                      double eps, double lam);
// Cauchy condition on the prefix: some tail of length >= 2 satisfies the
// pairwise (eps, lambda) condition. A single-element prefix passes.
CheckReport is_cauchy(const PmSpace& space, const PointSeq& seq, double eps,
                      double lam);

// Probabilistic diameter of a nonempty subset: the left-continuous
// regularization of the pointwise infimum of F_pq over pairs in A (a no-op
// for step functions).
Ddf prob_diameter(const PmSpace& space, const SubsetRef& a);

enum class Boundedness { bounded, semi_bounded, unbounded };
const char* boundedness_tag(Boundedness b);

// s = sup over finite x of the diameter; bounded iff s = 1, unbounded iff
// s = 0, semi-bounded otherwise.
struct BoundednessResult {
    Boundedness kind;
    double sup_value;
};
BoundednessResult classify_boundedness(const PmSpace& space, const SubsetRef& a);

enum class TotalBoundednessMode { cover, strong };

// cover mode: greedy finite cover of A by neighborhoods N_p(eps) centered
// in A; always succeeds on a finite set and reports the cover found.
// strong mode: some center c in A has F_{c,p}(eps) = 1 for every p in A.
CheckReport totally_bounded(const PmSpace& space, const SubsetRef& a, double eps,
                            TotalBoundednessMode mode);

// Searches the candidate radius grid for t with disjoint neighborhoods of
// p and q; passes with the first such t (trace "t"), fails with the
// overlap witnesses otherwise. Requires p != q.
CheckReport separate_points(const PmSpace& space, std::size_t p, std::size_t q);

}  // namespace pms
