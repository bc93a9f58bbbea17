#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pps/metrics.hpp"
#include "pps/problems.hpp"
#include "pps/rng.hpp"

using pps::hypervolume;
using pps::hypervolume_reference;
using pps::igd;
using pps::ObjectiveVector;
using pps::ReferenceFront;

namespace {

ReferenceFront front_of(std::vector<ObjectiveVector> points) {
    ReferenceFront front;
    front.points = std::move(points);
    return front;
}

std::vector<ObjectiveVector> random_points(pps::Rng& rng, int count, int m, double scale) {
    std::vector<ObjectiveVector> points(static_cast<std::size_t>(count));
    for (auto& p : points) {
        p.resize(static_cast<std::size_t>(m));
        for (auto& v : p) v = rng.uniform() * scale;
    }
    return points;
}

} // namespace

TEST_CASE("igd matches hand-computed values") {
    CHECK(igd(front_of({{0.0, 0.0}, {1.0, 1.0}}), {{0.0, 0.0}, {1.0, 1.0}}) == 0.0);
    CHECK(igd(front_of({{0.0, 0.0}, {1.0, 1.0}}), {{0.0, 0.0}}) ==
          doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    CHECK(igd(front_of({{0.0, 1.0}, {1.0, 0.0}}), {{0.0, 0.0}}) == 1.0);
}

TEST_CASE("igd validates its inputs") {
    CHECK_THROWS_AS(igd(front_of({{0.0, 0.0}}), {}), pps::UndefinedMetricError);
    CHECK_THROWS_AS(igd(front_of({}), {{0.0, 0.0}}), pps::ContractError);
    CHECK_THROWS_AS(igd(front_of({{0.0, 0.0}}), {{0.0, 0.0, 0.0}}), pps::ContractError);
}

TEST_CASE("igd agrees with a brute-force oracle on random instances") {
    pps::Rng rng(51);
    for (int it = 0; it < 300; ++it) {
        const int m = 2 + rng.uniform_int(2);
        const auto front = front_of(random_points(rng, 1 + rng.uniform_int(60), m, 5.0));
        const auto approx = random_points(rng, 1 + rng.uniform_int(60), m, 5.0);
        CHECK(igd(front, approx) ==
              doctest::Approx(oracle::igd(front.points, approx)).epsilon(1e-12));
    }
}

TEST_CASE("igd never increases when the approximation gains a front point") {
    pps::Rng rng(52);
    for (int it = 0; it < 200; ++it) {
        const auto front = front_of(random_points(rng, 20, 2, 1.0));
        auto approx = random_points(rng, 5, 2, 1.0);
        const double before = igd(front, approx);
        approx.push_back(front.points[static_cast<std::size_t>(rng.uniform_int(20))]);
        CHECK(igd(front, approx) <= before + 1e-15);
    }
}

TEST_CASE("two-objective hypervolume matches hand-computed areas") {
    CHECK(hypervolume({{0.0, 0.0}}, {1.0, 1.0}) == 1.0);
    CHECK(hypervolume({{0.5, 0.5}}, {1.0, 1.0}) == 0.25);
    CHECK(hypervolume({{0.0, 0.5}, {0.5, 0.0}}, {1.0, 1.0}) == 0.75);
    // Points on or beyond the reference point contribute nothing.
    CHECK(hypervolume({{1.0, 0.0}}, {1.0, 1.0}) == 0.0);
    CHECK(hypervolume({{2.0, 2.0}}, {1.0, 1.0}) == 0.0);
    CHECK(hypervolume({}, {1.0, 1.0}) == 0.0);
}

TEST_CASE("three-objective hypervolume matches hand-computed volumes") {
    CHECK(hypervolume({{0.0, 0.0, 0.0}}, {1.0, 1.0, 1.0}) == 1.0);
    CHECK(hypervolume({{0.0, 0.0, 0.5}, {0.5, 0.5, 0.0}}, {1.0, 1.0, 1.0}) ==
          doctest::Approx(0.625).epsilon(1e-15));
    CHECK_THROWS_AS(hypervolume({{0.0, 0.0, 0.0, 0.0}}, {1.0, 1.0, 1.0, 1.0}),
                    pps::UnsupportedError);
}

TEST_CASE("hypervolume is monotone under added points") {
    pps::Rng rng(53);
    for (int it = 0; it < 100; ++it) {
        const int m = 2 + rng.uniform_int(2);
        ObjectiveVector ref(static_cast<std::size_t>(m), 1.0);
        auto points = random_points(rng, 6, m, 1.0);
        const double before = hypervolume(points, ref);
        // A dominated duplicate changes nothing.
        ObjectiveVector shifted = points.front();
        for (auto& v : shifted) v = std::min(1.0, v + 0.1);
        points.push_back(shifted);
        CHECK(hypervolume(points, ref) == doctest::Approx(before).epsilon(1e-12));
        // A fresh point never shrinks the volume.
        points.push_back(random_points(rng, 1, m, 1.0).front());
        CHECK(hypervolume(points, ref) >= before - 1e-15);
    }
}

TEST_CASE("hypervolume agrees with a Monte Carlo estimate") {
    pps::Rng rng(54);
    for (int it = 0; it < 10; ++it) {
        const int m = it % 2 == 0 ? 2 : 3;
        ObjectiveVector ref(static_cast<std::size_t>(m), 1.1);
        const auto points = random_points(rng, 8, m, 1.0);
        const double exact = hypervolume(points, ref);
        const auto mc = oracle::mc_hypervolume(points, ref, 200000, 1000 + it);
        CHECK(std::fabs(exact - mc.estimate) <= 4.0 * mc.standard_error + 1e-12);
    }
}

TEST_CASE("the reference point sits 1.2 spans beyond the ideal") {
    const auto simple = hypervolume_reference(front_of({{0.0, 0.0}, {1.0, 1.0}}));
    CHECK(simple[0] == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(simple[1] == doctest::Approx(1.2).epsilon(1e-15));

    const auto boundary_front = pps::make_problem("deskcmop-boundary", 5)->reference_front(1000);
    const auto ref = hypervolume_reference(boundary_front);
    CHECK(ref[0] == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(ref[1] == doctest::Approx(1.3).epsilon(1e-12));
}

TEST_CASE("degenerate reference coordinates fall back to a tiny span") {
    std::vector<int> degenerate;
    const auto ref = hypervolume_reference(front_of({{0.5, 0.5}}), &degenerate);
    CHECK(degenerate == std::vector<int>{0, 1});
    CHECK(ref[0] == doctest::Approx(0.5 + 1.2e-6).epsilon(1e-12));
    CHECK(ref[1] == doctest::Approx(0.5 + 1.2e-6).epsilon(1e-12));
}
