#ifndef TPC_EXPERIMENTS_HPP
#define TPC_EXPERIMENTS_HPP

#include "tpc/ga.hpp"
#include "tpc/geometry.hpp"
#include "tpc/network.hpp"
#include "tpc/radio.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tpc::experiments {

enum class Provenance { HandWritten, Generated };

struct Scenario {
    geometry::Environment env;
    radio::RadioModel model;
    ga::GaConfig ga;  // ga.mu and ga.seed are the scenario's mu and seed
    Provenance provenance = Provenance::HandWritten;

    double mu() const noexcept { return ga.mu; }
    std::uint64_t seed() const noexcept { return ga.seed; }
    void validate() const;
};

radio::Network makeNetwork(const Scenario& s, radio::EvalMode mode = radio::EvalMode::Fast,
                           std::size_t memoryCapBytes = tables::kDefaultMemoryCapBytes);

// Regular AP lattice: ceil(width / spacingX) columns by ceil(height / spacingY)
// rows, one AP at the centre of each cell, in lexicographic order.
std::vector<geometry::Point2> gridPlaceAps(const geometry::Environment& env, double spacingX, double spacingY);
std::vector<geometry::Point2> gridPlaceAps(const geometry::Environment& env, double spacing);

struct RackSpec {
    int count = 0;
    double length = 20.0;
    double width = 3.0;
    double height = 9.0;
    double lossDb = 7.37;
    std::uint64_t seed = 0;
    // Resample placements until full power meets the scenario's mu.
    bool requireFeasibleAtFullPower = false;
};

inline constexpr int kPlacementRetryCap = 10000;

// Adds `racks.count` uniformly placed racks (uniform orientation) to a copy of
// `base`. Racks may overlap each other but never enclose an AP.
Scenario generateObstructedScenario(const Scenario& base, const RackSpec& racks);

struct RunRecord {
    std::string scheme;
    int run = 0;
    std::uint64_t seed = 0;
    radio::PowerVector levels;
    radio::Evaluation eval;
    double seconds = 0.0;
};

struct Aggregate {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct ExperimentReport {
    std::vector<RunRecord> records;
    Aggregate objectivePct;
    Aggregate interferenceDbm;
    Aggregate coverageRate;

    void aggregate();
};

RunRecord fullPowerOn(const radio::Network& net, double mu);
ExperimentReport rtpcBaseline(const radio::Network& net, double mu, int runs, std::uint64_t seed, unsigned workers);

struct GatpcOutcome {
    RunRecord record;
    std::vector<ga::TraceEntry> trace;
};

GatpcOutcome solveGatpc(const radio::Network& net, const ga::GaConfig& config);

struct OracleResult {
    radio::PowerVector levels;
    radio::Evaluation eval;
    std::uint64_t enumerated = 0;
};

// (levelCount + 1)^apCount, saturating at UINT64_MAX.
std::uint64_t searchSpaceSize(int apCount, int levelCount) noexcept;

// Exhaustive search; the lexicographically smallest level vector wins ties.
// Throws ResourceError when the space exceeds `cap`.
OracleResult bruteForceOracle(const radio::Network& net, double mu, std::uint64_t cap);

struct QualificationPoint {
    double mu = 0.0;
    std::string orientation;  // "horizontal", "vertical" or "combined"
    int placements = 0;
    int qualified = 0;

    double rate() const noexcept { return placements == 0 ? 0.0 : static_cast<double>(qualified) / placements; }
};

// One rack shifted over every grid-aligned anchor in both orientations; for
// each mu, the share of placements whose full-power solution meets mu.
std::vector<QualificationPoint> qualificationSweep(const Scenario& base, const RackSpec& rack,
                                                   const std::vector<double>& muValues, unsigned workers);

struct InterferencePoint {
    double mu = 0.0;
    int racks = 0;
    int runs = 0;
    double meanObjectivePct = 0.0;
    double stdObjectivePct = 0.0;
    double meanInterferenceDbm = 0.0;
    double meanApsOn = 0.0;
    int feasibleRuns = 0;
};

// For each rack count and run, one generated layout is solved at every mu.
std::vector<InterferencePoint> interferenceSweep(const Scenario& base, const RackSpec& rack,
                                                 const std::vector<double>& muValues,
                                                 const std::vector<int>& rackCounts, int runsPerPoint,
                                                 unsigned workers);

struct BenchReport {
    double fastSeconds = 0.0;
    double naiveSeconds = 0.0;
    ga::RunResult fast;
    ga::RunResult naive;

    bool identical() const { return fast.best == naive.best && fast.trace == naive.trace; }
    double ratio() const { return fastSeconds > 0.0 ? naiveSeconds / fastSeconds : 0.0; }
};

// Same seed in both modes. Fast mode builds the lookup tables and uses
// `workers`; naive mode recomputes everything on one thread.
BenchReport speedupBenchmark(const Scenario& s, unsigned workers,
                             std::size_t memoryCapBytes = tables::kDefaultMemoryCapBytes);

int poweredOn(const radio::PowerVector& levels) noexcept;

} // namespace tpc::experiments

#endif // TPC_EXPERIMENTS_HPP
