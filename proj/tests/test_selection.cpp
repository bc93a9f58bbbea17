#include <vector>

#include "doctest.h"
#include "pps/selection.hpp"

using pps::ConstraintHandler;
using pps::Individual;
using pps::WeightVector;

namespace {

// With weight (0.5, 0.5) and ideal (0, 0) the scalarized value is
// 2 * max(f1, f2), so objective pairs map to easily readable ranks.
const WeightVector kWeight{0.5, 0.5};
const pps::ObjectiveVector kIdeal{0.0, 0.0};

Individual make(double f1, double f2, double violation) {
    Individual ind;
    ind.f = {f1, f2};
    ind.violation = violation;
    return ind;
}

} // namespace

TEST_CASE("handler names round-trip through the registry") {
    using pps::handler_from_name;
    using pps::handler_name;
    CHECK(handler_from_name("pps") == ConstraintHandler::Pps);
    CHECK(handler_from_name("cdp") == ConstraintHandler::Cdp);
    CHECK(handler_from_name("sr") == ConstraintHandler::Sr);
    CHECK(handler_from_name("epsilon") == ConstraintHandler::StaticEpsilon);
    CHECK_FALSE(handler_from_name("nope").has_value());
    for (auto h : {ConstraintHandler::Pps, ConstraintHandler::Cdp, ConstraintHandler::Sr,
                   ConstraintHandler::StaticEpsilon})
        CHECK(handler_from_name(handler_name(h)) == h);
}

TEST_CASE("push replacement compares scalarized objectives only") {
    using pps::push_replace;
    CHECK(push_replace(make(1.0, 1.0, 0.0), make(0.5, 0.5, 0.0), kWeight, kIdeal));
    CHECK(push_replace(make(0.5, 0.5, 0.0), make(0.5, 0.5, 0.0), kWeight, kIdeal));  // ties go to the child
    // A feasible child loses to an infeasible incumbent on objectives alone.
    CHECK_FALSE(push_replace(make(0.5, 0.5, 5.0), make(1.0, 1.0, 0.0), kWeight, kIdeal));
}

TEST_CASE("pull replacement follows the three epsilon branches") {
    using pps::pull_replace;
    // Both within epsilon: objectives decide.
    CHECK(pull_replace(make(1.0, 1.0, 0.4), make(0.5, 0.5, 0.3), kWeight, kIdeal, 0.5));
    CHECK_FALSE(pull_replace(make(0.5, 0.5, 0.4), make(1.0, 1.0, 0.3), kWeight, kIdeal, 0.5));
    // Equal violations above epsilon: objectives decide.
    CHECK_FALSE(pull_replace(make(0.5, 0.5, 0.7), make(1.0, 1.0, 0.7), kWeight, kIdeal, 0.5));
    CHECK(pull_replace(make(1.0, 1.0, 0.7), make(0.5, 0.5, 0.7), kWeight, kIdeal, 0.5));
    // Otherwise the smaller violation wins regardless of objectives.
    CHECK_FALSE(pull_replace(make(1.0, 1.0, 0.6), make(0.1, 0.1, 0.9), kWeight, kIdeal, 0.5));
    CHECK(pull_replace(make(0.1, 0.1, 0.9), make(1.0, 1.0, 0.6), kWeight, kIdeal, 0.5));
}

TEST_CASE("feasibility-first replacement matches its three rules") {
    using pps::cdp_replace;
    CHECK(cdp_replace(make(0.1, 0.1, 0.5), make(1.0, 1.0, 0.0), kWeight, kIdeal));
    CHECK(cdp_replace(make(1.0, 1.0, 0.5), make(2.0, 2.0, 0.2), kWeight, kIdeal));
    CHECK_FALSE(cdp_replace(make(0.5, 0.5, 0.0), make(1.0, 1.0, 0.0), kWeight, kIdeal));
    CHECK(cdp_replace(make(1.0, 1.0, 0.0), make(0.5, 0.5, 0.0), kWeight, kIdeal));
}

TEST_CASE("stochastic ranking blends objective-only and feasibility-first paths") {
    using pps::cdp_replace;
    using pps::push_replace;
    using pps::sr_replace;

    // p_f = 0 always takes the feasibility-first path.
    pps::Rng rng(31);
    for (int it = 0; it < 200; ++it) {
        const auto inc = make(rng.uniform(), rng.uniform(), rng.uniform_int(2) ? 0.0 : rng.uniform());
        const auto child = make(rng.uniform(), rng.uniform(), rng.uniform_int(2) ? 0.0 : rng.uniform());
        CHECK(sr_replace(inc, child, kWeight, kIdeal, 0.0, rng) ==
              cdp_replace(inc, child, kWeight, kIdeal));
    }

    // p_f = 1 ignores feasibility: an infeasible child with better objectives wins.
    pps::Rng rng_pf1(32);
    CHECK(sr_replace(make(1.0, 1.0, 0.0), make(0.5, 0.5, 3.0), kWeight, kIdeal, 1.0, rng_pf1));

    // Intermediate p_f takes whichever path the single uniform draw selects.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        pps::Rng probe(seed);
        const double u = probe.uniform();
        pps::Rng rng_sr(seed);
        const auto inc = make(1.0, 1.0, 0.0);     // feasible, worse objectives
        const auto child = make(0.5, 0.5, 2.0);   // infeasible, better objectives
        const bool expected = u < 0.5 ? push_replace(inc, child, kWeight, kIdeal)
                                      : cdp_replace(inc, child, kWeight, kIdeal);
        CHECK(sr_replace(inc, child, kWeight, kIdeal, 0.5, rng_sr) == expected);
    }
}

TEST_CASE("pull replacement reduces to the named comparators at its extremes") {
    using pps::cdp_replace;
    using pps::pull_replace;
    using pps::push_replace;
    pps::Rng rng(33);
    for (int it = 0; it < 10000; ++it) {
        const double w0 = rng.uniform();
        const WeightVector w{w0, 1.0 - w0};
        auto draw_violation = [&rng] {
            const int kind = rng.uniform_int(3);
            return kind == 0 ? 0.0 : rng.uniform();
        };
        auto inc = make(rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0), draw_violation());
        auto child = make(rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0), draw_violation());
        if (rng.uniform() < 0.25) child.f = inc.f;             // exercise objective ties
        if (rng.uniform() < 0.25) child.violation = inc.violation;  // and violation ties
        CHECK(pull_replace(inc, child, w, kIdeal, 0.0) == cdp_replace(inc, child, w, kIdeal));
        CHECK(pull_replace(inc, child, w, kIdeal, 1e9) == push_replace(inc, child, w, kIdeal));
    }
}
