#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "pps/engine.hpp"
#include "pps/problems.hpp"

using pps::EngineConfig;
using pps::Individual;
using pps::IdealNadirPair;
using pps::StageHistory;

namespace {

Individual feasible_point(double f1, double f2) {
    Individual ind;
    ind.f = {f1, f2};
    ind.violation = 0.0;
    return ind;
}

EngineConfig small_config() {
    EngineConfig cfg;
    cfg.population = 20;
    cfg.neighborhood = 5;
    cfg.max_evals = 1200;
    cfg.seed = 7;
    return cfg;
}

} // namespace

TEST_CASE("the switch detector reports 1.0 until its window fills") {
    StageHistory history(3);
    for (int i = 0; i < 3; ++i) {
        CHECK_FALSE(history.ready());
        CHECK(history.max_change_rate() == 1.0);
        history.record({{1.0, 1.0}, {2.0, 2.0}});
    }
    history.record({{1.0, 1.0}, {2.0, 2.0}});
    CHECK(history.ready());
    CHECK(history.max_change_rate() == 0.0);
}

TEST_CASE("the switch detector measures relative change across the window") {
    StageHistory history(1);
    history.record({{1.0, 1.0}, {2.0, 2.0}});
    history.record({{0.5, 1.0}, {2.0, 2.0}});
    CHECK(history.max_change_rate() == 0.5);

    // The denominator is floored, so tiny old values still give finite rates.
    StageHistory floored(1);
    floored.record({{0.0, 1.0}, {2.0, 2.0}});
    floored.record({{0.001, 1.0}, {2.0, 2.0}});
    CHECK(floored.max_change_rate() == doctest::Approx(1000.0).epsilon(1e-12));

    // Nadir movement counts just like ideal movement.
    StageHistory nadir_side(1);
    nadir_side.record({{1.0, 1.0}, {2.0, 2.0}});
    nadir_side.record({{1.0, 1.0}, {2.0, 3.0}});
    CHECK(nadir_side.max_change_rate() == 0.5);
}

TEST_CASE("the detector window slides over the newest entries") {
    StageHistory history(1);
    history.record({{4.0, 4.0}, {4.0, 4.0}});
    history.record({{2.0, 2.0}, {2.0, 2.0}});
    history.record({{1.0, 1.0}, {1.0, 1.0}});  // compares 2 -> 1, not 4 -> 1
    CHECK(history.max_change_rate() == 0.5);
    CHECK_THROWS_AS(StageHistory(0), pps::ConfigError);
}

TEST_CASE("the epsilon schedule follows its three branches") {
    EngineConfig cfg;  // tc = 800, alpha = 0.95, tau = 0.1, cp = 2
    CHECK(pps::update_epsilon(0.7, 1.0, 1.0, 800, cfg) == 0.0);
    CHECK(pps::update_epsilon(0.7, 1.0, 0.0, 1200, cfg) == 0.0);
    CHECK(pps::update_epsilon(1.0, 1.0, 0.5, 100, cfg) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(pps::update_epsilon(0.7, 1.0, 1.0, 400, cfg) == 0.25);
    // A recovered feasible ratio may not loosen an already-tight level.
    CHECK(pps::update_epsilon(0.1, 1.0, 1.0, 400, cfg) == 0.1);
}

TEST_CASE("crowding distances mark extremes infinite and spread interior points") {
    const std::vector<pps::ObjectiveVector> points{
        {0.0, 4.0}, {1.0, 3.0}, {2.0, 2.0}, {3.5, 0.5}, {4.0, 0.0}};
    const auto d = pps::crowding_distances(points);
    const double inf = std::numeric_limits<double>::infinity();
    REQUIRE(d.size() == 5);
    CHECK(d[0] == inf);
    CHECK(d[4] == inf);
    CHECK(d[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d[2] == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(d[3] == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(pps::crowding_distances({{1.0, 2.0}}) == std::vector<double>{inf});
    CHECK(pps::crowding_distances({{1.0, 2.0}, {2.0, 1.0}}) == std::vector<double>{inf, inf});
    CHECK(pps::crowding_distances({}).empty());
}

TEST_CASE("archive selection keeps the feasible non-dominated subset") {
    using pps::nd_select;
    CHECK(nd_select({}, {}, 10).empty());

    Individual infeasible = feasible_point(0.0, 0.0);
    infeasible.violation = 0.5;
    CHECK(nd_select({}, {infeasible}, 10).empty());

    const auto kept = nd_select({}, {feasible_point(1.0, 1.0), feasible_point(2.0, 2.0)}, 10);
    REQUIRE(kept.size() == 1);
    CHECK(kept.front().f == pps::ObjectiveVector{1.0, 1.0});
}

TEST_CASE("archive truncation keeps extremes plus the widest-spaced interior point") {
    const std::vector<Individual> population{
        feasible_point(0.0, 4.0), feasible_point(1.0, 3.0), feasible_point(2.0, 2.0),
        feasible_point(3.5, 0.5), feasible_point(4.0, 0.0)};
    const auto kept = pps::nd_select({}, population, 3);
    REQUIRE(kept.size() == 3);
    CHECK(kept[0].f == pps::ObjectiveVector{0.0, 4.0});
    CHECK(kept[1].f == pps::ObjectiveVector{2.0, 2.0});
    CHECK(kept[2].f == pps::ObjectiveVector{4.0, 0.0});
}

TEST_CASE("archive selection drops exact objective duplicates keeping the first copy") {
    Individual from_archive = feasible_point(1.0, 1.0);
    from_archive.x = {1.0};
    Individual from_population = feasible_point(1.0, 1.0);
    from_population.x = {2.0};
    const auto kept = pps::nd_select({from_archive}, {from_population}, 10);
    REQUIRE(kept.size() == 1);
    CHECK(kept.front().x == pps::DecisionVector{1.0});
    CHECK_THROWS_AS(pps::nd_select({}, {}, 0), pps::ConfigError);
}

TEST_CASE("runs are deterministic under a fixed seed") {
    const auto problem = pps::make_problem("deskcmop-partial", 5);
    const EngineConfig cfg = small_config();
    const auto a = pps::run(*problem, cfg, pps::ConstraintHandler::Pps);
    const auto b = pps::run(*problem, cfg, pps::ConstraintHandler::Pps);
    CHECK(a.switch_generation == b.switch_generation);
    CHECK(a.evals == b.evals);
    REQUIRE(a.archive.size() == b.archive.size());
    for (std::size_t i = 0; i < a.archive.size(); ++i) {
        CHECK(a.archive[i].x == b.archive[i].x);
        CHECK(a.archive[i].f == b.archive[i].f);
        CHECK(a.archive[i].violation == b.archive[i].violation);
    }
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].r_k == b.trace[i].r_k);
        CHECK(a.trace[i].epsilon == b.trace[i].epsilon);
        CHECK(a.trace[i].feasible_ratio == b.trace[i].feasible_ratio);
    }
}

TEST_CASE("an infinite switch threshold flips to pull at the first eligible generation") {
    const auto problem = pps::make_problem("deskcmop-boundary", 5);
    EngineConfig cfg = small_config();
    cfg.max_evals = 20 + 20 * 25;
    cfg.switch_threshold = std::numeric_limits<double>::infinity();
    const auto record = pps::run(*problem, cfg, pps::ConstraintHandler::Pps);
    CHECK(record.switch_generation == cfg.change_window);
    for (const auto& row : record.trace) {
        if (row.generation < cfg.change_window) {
            CHECK(row.push_stage);
            CHECK(row.r_k == 1.0);   // detector idle until the window fills
            CHECK(row.epsilon == 0.0);
        } else {
            CHECK_FALSE(row.push_stage);
        }
    }
}

TEST_CASE("the evaluation budget bounds the generation loop") {
    const auto problem = pps::make_problem("deskcmop-partial", 5);
    EngineConfig cfg = small_config();
    cfg.max_evals = 1210;  // room for init + 59 full generations, partial ones skipped
    const auto record = pps::run(*problem, cfg, pps::ConstraintHandler::Cdp);
    CHECK(record.evals == 1200);
    CHECK(record.evals == 20 * (static_cast<long>(record.trace.size()) + 1));
    CHECK(record.switch_generation == -1);  // only the push-pull handler switches

    cfg.max_evals = cfg.population;  // not enough for a single generation
    CHECK_THROWS_AS(pps::run(*problem, cfg, pps::ConstraintHandler::Cdp), pps::ConfigError);
}

TEST_CASE("the static epsilon schedule decays without a switch") {
    const auto problem = pps::make_problem("deskcmop-boundary", 5);
    EngineConfig cfg = small_config();
    cfg.tc = 30;
    cfg.max_evals = 20 + 20 * 40;
    const auto record = pps::run(*problem, cfg, pps::ConstraintHandler::StaticEpsilon);
    CHECK(record.switch_generation == -1);
    for (const auto& row : record.trace) {
        CHECK_FALSE(row.push_stage);
        if (row.generation >= cfg.tc) CHECK(row.epsilon == 0.0);
    }
    for (std::size_t i = 1; i < record.trace.size(); ++i)
        CHECK(record.trace[i].epsilon <= record.trace[i - 1].epsilon + 1e-15);
}

TEST_CASE("per-generation invariants hold on a short run") {
    const auto problem = pps::make_problem("deskcmop-partial", 5);
    EngineConfig cfg = small_config();
    cfg.max_evals = 20 + 20 * 60;
    pps::ObjectiveVector previous_ideal;
    int observed = 0;
    int stage_flips = 0;
    bool last_stage = true;
    const auto record = pps::run(
        *problem, cfg, pps::ConstraintHandler::Pps, [&](const pps::GenerationView& view) {
            CHECK(view.generation == observed);
            ++observed;
            if (view.push_stage != last_stage) ++stage_flips;
            last_stage = view.push_stage;
            if (!previous_ideal.empty())
                for (std::size_t j = 0; j < view.ideal.size(); ++j)
                    CHECK(view.ideal[j] <= previous_ideal[j]);
            previous_ideal = view.ideal;
            for (const auto& member : view.archive) {
                CHECK(member.feasible());
                for (const auto& other : view.archive)
                    if (&member != &other) CHECK_FALSE(pps::dominates(other.f, member.f));
            }
            CHECK(static_cast<int>(view.population.size()) == cfg.population);
        });
    CHECK(observed == static_cast<int>(record.trace.size()));
    CHECK(stage_flips <= 1);
}

TEST_CASE("trace igd is filled only when requested") {
    const auto problem = pps::make_problem("deskcmop-partial", 5);
    EngineConfig cfg = small_config();
    const auto without = pps::run(*problem, cfg, pps::ConstraintHandler::Cdp);
    CHECK(std::isnan(without.trace.back().igd));
    cfg.record_igd = true;
    const auto with = pps::run(*problem, cfg, pps::ConstraintHandler::Cdp);
    CHECK(std::isfinite(with.trace.back().igd));
}
