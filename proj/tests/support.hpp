#ifndef TPC_TESTS_SUPPORT_HPP
#define TPC_TESTS_SUPPORT_HPP

#include "tpc/experiments.hpp"
#include "tpc/geometry.hpp"
#include "tpc/network.hpp"
#include "tpc/parallel.hpp"
#include "tpc/radio.hpp"

#include <cstdint>
#include <vector>

namespace tpc::testing {

// Factory-hall link budget: PL0 39.87 dB, n 1.78, G 5.15 dB, M 12 dB,
// THLD -68 dBm, -5..7 dBm in 1 dB steps, heights 2 m / 1.4 m.
radio::RadioModel hallModel();

geometry::Environment emptyEnv(double xMax, double yMax, double gs = 1.0);

geometry::Obstacle rack(double x, double y, geometry::Orientation o = geometry::Orientation::Horizontal,
                        double lossDb = 7.37);

// Small random scenario: 12-40 m by 8-24 m, 2-6 APs, 0-3 racks, random
// power range. Every scenario passes validation.
experiments::Scenario randomScenario(Rng& rng);

radio::PowerVector randomLevels(Rng& rng, int apCount, int levelCount);

// Received power recomputed from the raw formula and raw geometry with no
// Network or table involvement.
double directRxPower(const geometry::Environment& env, const radio::RadioModel& model, const geometry::GridPoint& gp,
                     int ap, int level);

struct DirectEval {
    int covered = 0;
    int eligible = 0;
    double interferenceMw = 0.0;
    double objectivePct = 0.0;
};

// Coverage, connection and normalized interference recomputed from
// directRxPower over every eligible GP.
DirectEval directEvaluate(const experiments::Scenario& s, const radio::PowerVector& levels);

} // namespace tpc::testing

#endif // TPC_TESTS_SUPPORT_HPP
