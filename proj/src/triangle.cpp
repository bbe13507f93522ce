#include "pms/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace pms {

const char* tnorm_tag(TNorm t) {
    switch (t) {
        case TNorm::minimum: return "T_M";
        case TNorm::product: return "T_P";
        case TNorm::lukasiewicz: return "T_L";
        case TNorm::drastic: return "T_D";
    }
    return "?";
}

std::optional<TNorm> tnorm_from_tag(std::string_view tag) {
    if (tag == "T_M") return TNorm::minimum;
    if (tag == "T_P") return TNorm::product;
    if (tag == "T_L") return TNorm::lukasiewicz;
    if (tag == "T_D") return TNorm::drastic;
    return std::nullopt;
}

namespace {

void require_unit_interval(double v, const char* what) {
    if (std::isnan(v) || v < 0.0 || v > 1.0) {
        throw std::domain_error(std::string(what) + " must lie in [0,1]");
    }
}

}  // namespace

double tnorm(TNorm t, double x, double y) {
    require_unit_interval(x, "tnorm: x");
    require_unit_interval(y, "tnorm: y");
    switch (t) {
        case TNorm::minimum:
            return std::min(x, y);
        case TNorm::product:
            return x * y;
        case TNorm::lukasiewicz:
            // Unit arguments are returned directly so that T(x,1) = x holds
            // bit-exactly (x + 1 - 1 rounds for general x).
            if (x == 1.0) return y;
            if (y == 1.0) return x;
            return std::max(x + y - 1.0, 0.0);
        case TNorm::drastic:
            return std::max(x, y) == 1.0 ? std::min(x, y) : 0.0;
    }
    throw std::logic_error("tnorm: unknown kind");
}

double tconorm(TNorm t, double x, double y) {
    require_unit_interval(x, "tconorm: x");
    require_unit_interval(y, "tconorm: y");
    return 1.0 - tnorm(t, 1.0 - x, 1.0 - y);
}

TriangleFn TriangleFn::sup_tnorm(TNorm t) {
    if (t == TNorm::drastic) {
        throw std::domain_error(
            "TriangleFn: the drastic t-norm is not left-continuous and has no sup-T "
            "triangle function here");
    }
    return TriangleFn{t};
}

TriangleFn TriangleFn::convolution() { return TriangleFn{std::nullopt}; }

std::string TriangleFn::name() const {
    return tnorm_ ? std::string("tau_") + tnorm_tag(*tnorm_) : "convolution";
}

namespace {

// tau_T(F,G)(x) = sup{ T(F(u), G(v)) : u + v = x }. For step functions the
// value on (c_k, c_{k+1}] is the max of T over post-jump level pairs whose
// abscissa sum is <= c_k, so a single sweep over pair sums suffices.
Ddf sup_tnorm_apply(TNorm t, const Ddf& f, const Ddf& g) {
    struct Term {
        double sum;
        double value;
    };
    std::vector<Term> terms;
    terms.reserve(f.breakpoints().size() * g.breakpoints().size());
    for (const auto& a : f.breakpoints()) {
        for (const auto& b : g.breakpoints()) {
            terms.push_back({a.x + b.x, tnorm(t, a.v, b.v)});
        }
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return std::tie(a.sum, a.value) < std::tie(b.sum, b.value);
    });

    std::vector<Breakpoint> steps;
    double running = 0.0;
    std::size_t i = 0;
    while (i < terms.size()) {
        const double sum = terms[i].sum;
        double batch = running;
        for (; i < terms.size() && terms[i].sum == sum; ++i) {
            batch = std::max(batch, terms[i].value);
        }
        if (batch > running) {
            steps.push_back({sum, batch});
            running = batch;
        }
    }
    return Ddf::from_breakpoints(std::move(steps));
}

// (F*G)(x) = sum of dF_i * dG_j over jump pairs with a_i + b_j < x, the
// Stieltjes sum against the jumps of G written symmetrically in F and G.
// Terms are accumulated in (sum, product) order, which is invariant under
// swapping the operands, so commutativity holds bit-exactly. A unit-step
// operand short-circuits: prefix sums of jump heights would otherwise
// reconstruct the other operand only up to rounding, and the identity law
// must be exact.
Ddf convolve(const Ddf& f, const Ddf& g) {
    const Ddf unit = Ddf::h0();
    if (f == unit) return g;
    if (g == unit) return f;
    struct Term {
        double sum;
        double mass;
    };
    std::vector<Term> terms;
    terms.reserve(f.breakpoints().size() * g.breakpoints().size());
    double prev_f = 0.0;
    for (const auto& a : f.breakpoints()) {
        const double df = a.v - prev_f;
        prev_f = a.v;
        double prev_g = 0.0;
        for (const auto& b : g.breakpoints()) {
            const double dg = b.v - prev_g;
            prev_g = b.v;
            terms.push_back({a.x + b.x, df * dg});
        }
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return std::tie(a.sum, a.mass) < std::tie(b.sum, b.mass);
    });

    std::vector<Breakpoint> steps;
    double running = 0.0;
    std::size_t i = 0;
    while (i < terms.size()) {
        const double sum = terms[i].sum;
        for (; i < terms.size() && terms[i].sum == sum; ++i) running += terms[i].mass;
        // Accumulation error can tip the total just past 1.
        steps.push_back({sum, std::min(running, 1.0)});
    }
    return Ddf::from_breakpoints(std::move(steps));
}

}  // namespace

Ddf TriangleFn::operator()(const Ddf& f, const Ddf& g) const {
    return tnorm_ ? sup_tnorm_apply(*tnorm_, f, g) : convolve(f, g);
}

namespace {

// Dyadic samples keep 1-x exact, so the duality and unit laws can be
// checked without rounding slack.
double dyadic_unit_sample(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(0, 1 << 20);
    return static_cast<double>(dist(rng)) / (1 << 20);
}

}  // namespace

CheckReport check_tnorm_axioms(TNorm t, int n_samples, double tol, std::uint64_t seed) {
    if (n_samples < 1) throw std::domain_error("check_tnorm_axioms: n_samples >= 1");
    std::mt19937_64 rng(seed);

    double worst_comm = 0.0;
    double worst_assoc = 0.0;
    double worst_mono = 0.0;
    double worst_unit = 0.0;
    const double corners[] = {0.0, 1.0, 0.5};
    for (int k = 0; k < n_samples; ++k) {
        double x, y, z;
        if (k < 27) {  // deterministic corner triples first
            x = corners[k % 3];
            y = corners[(k / 3) % 3];
            z = corners[(k / 9) % 3];
        } else {
            x = dyadic_unit_sample(rng);
            y = dyadic_unit_sample(rng);
            z = dyadic_unit_sample(rng);
        }
        worst_comm = std::max(worst_comm, std::fabs(tnorm(t, x, y) - tnorm(t, y, x)));
        worst_assoc = std::max(
            worst_assoc,
            std::fabs(tnorm(t, tnorm(t, x, y), z) - tnorm(t, x, tnorm(t, y, z))));
        worst_unit = std::max(worst_unit, std::fabs(tnorm(t, x, 1.0) - x));
        const double lo = std::min(x, z);
        const double hi = std::max(x, z);
        worst_mono = std::max(worst_mono, tnorm(t, lo, y) - tnorm(t, hi, y));
    }

    CheckReport report(std::string("t-norm axioms: ") + tnorm_tag(t));
    report.trace("max_violation",
                 {worst_comm, worst_assoc, worst_mono, worst_unit});
    report.require(worst_comm <= tol, "commutativity", std::to_string(worst_comm));
    report.require(worst_assoc <= tol, "associativity", std::to_string(worst_assoc));
    report.require(worst_mono <= tol, "monotonicity", std::to_string(worst_mono));
    report.require(worst_unit <= tol, "unit", std::to_string(worst_unit));
    return report;
}

CheckReport check_triangle_axioms(const TriangleFn& tau, int n_samples, double tol,
                                  std::uint64_t seed) {
    if (n_samples < 1) throw std::domain_error("check_triangle_axioms: n_samples >= 1");
    std::mt19937_64 rng(seed);
    RandomDdfOptions opts;
    opts.max_breakpoints = 5;

    const Ddf unit = Ddf::h0();
    double worst_assoc = 0.0;
    double worst_mono = 0.0;
    int comm_failures = 0;
    int ident_failures = 0;
    for (int k = 0; k < n_samples; ++k) {
        const Ddf f = random_ddf(rng, opts);
        const Ddf g = random_ddf(rng, opts);
        const Ddf h = random_ddf(rng, opts);

        if (tau(f, g) != tau(g, f)) ++comm_failures;
        if (tau(f, unit) != f || tau(unit, f) != f) ++ident_failures;
        worst_assoc =
            std::max(worst_assoc, sup_norm_distance(tau(tau(f, g), h), tau(f, tau(g, h))));

        const Ddf fs[] = {f, h};
        const Ddf larger = sup_family(fs);  // f <= larger by construction
        worst_mono = std::max(worst_mono, sup_exceedance(tau(f, g), tau(larger, g)));
    }

    CheckReport report("triangle-function axioms: " + tau.name());
    report.trace("max_violation", {static_cast<double>(comm_failures),
                                   static_cast<double>(ident_failures), worst_assoc,
                                   worst_mono});
    report.require(comm_failures == 0, "commutativity",
                   std::to_string(comm_failures) + " canonical mismatches");
    report.require(ident_failures == 0, "identity",
                   std::to_string(ident_failures) + " canonical mismatches");
    report.require(worst_assoc <= tol, "associativity", std::to_string(worst_assoc));
    report.require(worst_mono <= tol, "monotonicity", std::to_string(worst_mono));
    return report;
}

}  // namespace pms
