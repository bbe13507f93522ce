#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "pms/ddf.hpp"
#include "pms/levy.hpp"

using pms::Breakpoint;
using pms::Ddf;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

Ddf step(std::vector<Breakpoint> pts) { return Ddf::from_breakpoints(std::move(pts)); }

// Pointwise comparison oracle on the merged breakpoints and the open
// pieces around them.
bool pointwise_leq(const Ddf& f, const Ddf& g) {
    std::vector<double> xs;
    for (const auto& b : f.breakpoints()) xs.push_back(b.x);
    for (const auto& b : g.breakpoints()) xs.push_back(b.x);
    for (double x : xs) {
        if (f.value(x) > g.value(x)) return false;
        if (f.right_limit(x) > g.right_limit(x)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("dirac step functions") {
    const Ddf h0 = Ddf::h0();
    CHECK(h0.breakpoints() == std::vector<Breakpoint>{{0.0, 1.0}});
    CHECK(h0.value(-1.0) == 0.0);
    CHECK(h0.value(0.0) == 0.0);
    CHECK(h0.value(0.25) == 1.0);
    CHECK(h0.value(kInf) == 1.0);

    const Ddf h = Ddf::dirac(0.3);
    CHECK(h.breakpoints() == std::vector<Breakpoint>{{0.3, 1.0}});
    CHECK(h.value(0.3) == 0.0);
    CHECK(h.value(0.3000001) == 1.0);

    const Ddf hinf = Ddf::dirac(kInf);
    CHECK(hinf.breakpoints().empty());
    CHECK(hinf.value(1e12) == 0.0);
    CHECK(hinf.value(kInf) == 1.0);

    CHECK_THROWS_AS(Ddf::dirac(-0.1), std::domain_error);
}

TEST_CASE("evaluation is left-continuous") {
    CHECK(Ddf::h0().value(0.0) == 0.0);
    CHECK(Ddf::dirac(0.3).value(0.5) == 1.0);

    const Ddf f = step({{0.2, 0.6}});
    CHECK(f.value(0.2) == 0.0);  // value before the jump
    CHECK(f.value(0.21) == 0.6);
    CHECK(f.value(kInf) == 1.0);
    CHECK(f.value(-kInf) == 0.0);
}

TEST_CASE("right limits") {
    CHECK(Ddf::h0().right_limit(0.0) == 1.0);
    CHECK(Ddf::dirac(0.3).right_limit(0.2) == 0.0);
    const Ddf f = step({{0.2, 0.6}});
    CHECK(f.right_limit(0.2) == 0.6);
    CHECK(f.right_limit(0.19) == 0.0);
}

TEST_CASE("pointwise order") {
    const Ddf a = Ddf::dirac(0.3);
    const Ddf b = Ddf::dirac(0.5);
    // the larger Dirac parameter is pointwise smaller
    CHECK(pms::leq(b, a));
    CHECK(b.value(0.4) == 0.0);
    CHECK(a.value(0.4) == 1.0);
    CHECK_FALSE(pms::leq(a, b));
    CHECK(pms::leq(a, a));

    const auto w = pms::find_exceedance(a, b);
    REQUIRE(w.has_value());
    CHECK(w->lhs > w->rhs);
}

TEST_CASE("supremum of a family") {
    const Ddf f = step({{0.1, 0.4}, {1.0, 0.9}});
    const Ddf one[] = {f};
    CHECK(pms::sup_family(one) == f);

    const Ddf diracs[] = {Ddf::dirac(0.3), Ddf::dirac(0.5)};
    CHECK(pms::sup_family(diracs) == Ddf::dirac(0.3));

    const Ddf with_floor[] = {f, Ddf::dirac(kInf)};
    CHECK(pms::sup_family(with_floor) == f);

    const std::vector<Ddf> empty;
    CHECK_THROWS_AS(pms::sup_family(empty), std::domain_error);
}

TEST_CASE("pointwise infimum") {
    const Ddf f = step({{0.1, 0.4}, {1.0, 0.9}});
    const Ddf one[] = {f};
    CHECK(pms::pointwise_inf(one) == f);

    const Ddf diracs[] = {Ddf::dirac(0.3), Ddf::dirac(0.5)};
    CHECK(pms::pointwise_inf(diracs) == Ddf::dirac(0.5));

    // min of a Dirac at 0.3 and the 0.6-cap jumping at 0.2: zero on
    // (0.2, 0.3], then capped.
    const Ddf mixed[] = {Ddf::dirac(0.3), step({{0.2, 0.6}})};
    CHECK(pms::pointwise_inf(mixed) == step({{0.3, 0.6}}));

    const std::vector<Ddf> empty;
    CHECK_THROWS_AS(pms::pointwise_inf(empty), std::domain_error);
}

TEST_CASE("canonicalization") {
    // duplicate abscissae keep the larger value
    CHECK(step({{0.5, 0.2}, {0.5, 0.7}}) == step({{0.5, 0.7}}));
    // non-increasing values collapse
    CHECK(step({{0.1, 0.5}, {0.2, 0.5}, {0.3, 0.4}}) == step({{0.1, 0.5}}));
    // unsorted input is fine
    CHECK(step({{0.4, 0.9}, {0.1, 0.3}}) == step({{0.1, 0.3}, {0.4, 0.9}}));
    // zero-height entries vanish
    CHECK(step({{0.1, 0.0}, {0.2, 1.0}}) == Ddf::dirac(0.2));

    CHECK_THROWS_AS(step({{-0.1, 0.5}}), std::domain_error);
    CHECK_THROWS_AS(step({{0.1, 1.5}}), std::domain_error);
    CHECK_THROWS_AS(step({{kInf, 0.5}}), std::domain_error);
}

TEST_CASE("random operations keep the canonical invariants") {
    std::mt19937_64 rng(7);
    pms::RandomDdfOptions opts;
    opts.allow_flat_zero = true;
    for (int k = 0; k < 1000; ++k) {
        const Ddf a = pms::random_ddf(rng, opts);
        const Ddf b = pms::random_ddf(rng, opts);
        a.check_invariants();
        const Ddf fam[] = {a, b};
        const Ddf hi = pms::sup_family(fam);
        const Ddf lo = pms::pointwise_inf(fam);
        hi.check_invariants();
        lo.check_invariants();
        CHECK(pointwise_leq(a, hi));
        CHECK(pointwise_leq(b, hi));
        CHECK(pointwise_leq(lo, a));
        CHECK(pointwise_leq(lo, b));
    }
}

TEST_CASE("leq is a partial order") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
        const Ddf a = pms::random_ddf(rng);
        const Ddf b = pms::random_ddf(rng);
        const Ddf c = pms::random_ddf(rng);
        CHECK(pms::leq(a, a));
        if (pms::leq(a, b) && pms::leq(b, a)) CHECK(a == b);
        if (pms::leq(a, b) && pms::leq(b, c)) CHECK(pms::leq(a, c));
    }
}

TEST_CASE("value and right limit agree away from breakpoints") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> xs(-0.5, 3.0);
    for (int k = 0; k < 200; ++k) {
        const Ddf f = pms::random_ddf(rng);
        for (int j = 0; j < 20; ++j) {
            const double x = xs(rng);
            bool is_breakpoint = false;
            for (const auto& b : f.breakpoints()) {
                if (b.x == x) is_breakpoint = true;
            }
            if (!is_breakpoint) CHECK(f.value(x) == f.right_limit(x));
        }
    }
}

TEST_CASE("left continuity at breakpoints") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; ++k) {
        const Ddf f = pms::random_ddf(rng);
        const auto& bp = f.breakpoints();
        for (std::size_t i = 0; i < bp.size(); ++i) {
            const double prev_x = i == 0 ? bp[i].x - 1.0 : bp[i - 1].x;
            const double just_below = prev_x + (bp[i].x - prev_x) / 2.0;
            CHECK(f.value(bp[i].x) == f.value(just_below));
        }
    }
}

TEST_CASE("weak convergence report") {
    SUBCASE("shrinking diracs converge") {
        const std::vector<Ddf> seq = {Ddf::dirac(0.5), Ddf::dirac(0.25), Ddf::dirac(0.125)};
        const auto report = pms::weak_convergence_report(seq, Ddf::h0(), 0.2);
        CHECK(report.passed());
        const auto* levy = report.find_trace("levy");
        REQUIRE(levy != nullptr);
        CHECK(levy->back() == doctest::Approx(0.125).epsilon(1e-4));
        const auto* verdict = report.find_trace("converged");
        REQUIRE(verdict != nullptr);
        CHECK((*verdict)[0] == 1.0);
        CHECK((*verdict)[1] == 1.0);
    }
    SUBCASE("constant sequence at the target") {
        const Ddf f = step({{0.2, 0.4}, {0.9, 1.0}});
        const auto report = pms::weak_convergence_report({f, f, f}, f, 1e-9);
        CHECK(report.passed());
        CHECK(report.find_trace("levy")->back() == 0.0);
        CHECK(report.find_trace("pointwise_sup")->back() == 0.0);
    }
    SUBCASE("far diracs do not converge, and both diagnostics agree") {
        const std::vector<Ddf> seq = {Ddf::dirac(1.0), Ddf::dirac(1.0)};
        const auto report = pms::weak_convergence_report(seq, Ddf::h0(), 0.1);
        CHECK(report.passed());  // agreement, not convergence
        const auto* verdict = report.find_trace("converged");
        CHECK((*verdict)[0] == 0.0);
        CHECK((*verdict)[1] == 0.0);
        CHECK(report.find_trace("levy")->back() == doctest::Approx(1.0).epsilon(1e-4));
    }
    SUBCASE("preconditions") {
        const std::vector<Ddf> empty;
        const std::vector<Ddf> one = {Ddf::h0()};
        CHECK_THROWS_AS(pms::weak_convergence_report(empty, Ddf::h0(), 0.1),
                        std::domain_error);
        CHECK_THROWS_AS(pms::weak_convergence_report(one, Ddf::h0(), 0.0),
                        std::domain_error);
    }
}
