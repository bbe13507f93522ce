#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pms/ddf.hpp"
#include "pms/report.hpp"

namespace pms {

// The four standard t-norms. Wire tags follow the usual notation:
// T_M (minimum), T_P (product), T_L (Lukasiewicz), T_D (drastic).
enum class TNorm { minimum, product, lukasiewicz, drastic };

const char* tnorm_tag(TNorm t);
std::optional<TNorm> tnorm_from_tag(std::string_view tag);

// Both require x, y in [0,1].
double tnorm(TNorm t, double x, double y);
// De Morgan dual: S(x,y) = 1 - T(1-x, 1-y).
double tconorm(TNorm t, double x, double y);

// A binary operation on distance distribution functions that is
// commutative, associative, monotone and has the unit step at 0 as
// identity. Two constructions are provided: the sup-T composition for a
// left-continuous t-norm, and the probabilistic convolution.
class TriangleFn {
public:
    // The drastic t-norm is not left-continuous, so it is rejected here
    // (it stays available for pointwise evaluation).
    static TriangleFn sup_tnorm(TNorm t);
    static TriangleFn convolution();

    Ddf operator()(const Ddf& f, const Ddf& g) const;

    bool is_convolution() const { return !tnorm_.has_value(); }
    std::optional<TNorm> tnorm_kind() const { return tnorm_; }
    std::string name() const;

    friend bool operator==(const TriangleFn&, const TriangleFn&) = default;

private:
    explicit TriangleFn(std::optional<TNorm> t) : tnorm_(t) {}
    std::optional<TNorm> tnorm_;
};

// Samples triples from a dyadic grid in [0,1] (plus the corners) and
// reports the largest violation of commutativity, associativity,
// monotonicity and the unit law. Passes when all stay within tol.
CheckReport check_tnorm_axioms(TNorm t, int n_samples, double tol,
                               std::uint64_t seed = 1);

// Random step-function check of the triangle-function axioms:
// commutativity and identity exactly on canonical forms, associativity and
// monotonicity within sup-norm tol on merged breakpoints.
CheckReport check_triangle_axioms(const TriangleFn& tau, int n_samples, double tol,
                                  std::uint64_t seed = 1);

}  // namespace pms
