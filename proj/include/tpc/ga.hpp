#ifndef TPC_GA_HPP
#define TPC_GA_HPP

#include "tpc/network.hpp"
#include "tpc/parallel.hpp"
#include "tpc/radio.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tpc::ga {

using radio::PowerVector;

struct GaConfig {
    int populationSize = 60;
    double elitismRate = 0.04;
    double crossoverRate = 0.70;
    double mutationRate = 0.40;
    int stopIterations = 50;
    double mu = 1.0;
    std::uint64_t seed = 1;
    unsigned workers = 1;

    int eliteCount() const;
    void validate() const;
};

// Ordered lexicographically: coverage shortfall first, then normalized
// interference.
struct Fitness {
    int shortfall = 0;
    double objectivePct = 0.0;

    friend bool operator<(const Fitness& a, const Fitness& b) noexcept
    {
        return a.shortfall < b.shortfall || (a.shortfall == b.shortfall && a.objectivePct < b.objectivePct);
    }
    friend bool operator==(const Fitness&, const Fitness&) = default;
};

struct Individual {
    PowerVector levels;
    Fitness fitness;
    bool evaluated = false;

    friend bool operator==(const Individual&, const Individual&) = default;
};

Fitness evaluateFitness(const PowerVector& levels, const radio::Network& net, double mu);
void evaluate(Individual& ind, const radio::Network& net, double mu);

// What the coverage repair left behind. `linkless` lists the GPs dropped
// because no AP below the top level could ever cover them.
struct RepairReport {
    int coveredCount = 0;
    int required = 0;
    int iterations = 0;
    std::vector<int> linkless;

    bool satisfied() const noexcept { return coveredCount >= required; }
};

// Nearest AP (planar distance, lowest index on ties) below the top level that
// covers `gp` at the top level; radio::kNoAp if none.
int nearestPotentialAp(int gp, const PowerVector& levels, const radio::Network& net);

// Raises AP levels until mu of the eligible GPs are covered or every
// remaining blank GP has been shown to be unreachable. Levels only go up.
RepairReport repair(PowerVector& levels, const radio::Network& net, double mu, Rng& rng);

// Random levels followed by repair (the RTPC generator).
Individual rtpcGenerate(const radio::Network& net, double mu, Rng& rng);

// Gene swap around a random vertical line that leaves at least one AP on each
// side. Falls back to an index cut when all APs share one x coordinate.
std::pair<PowerVector, PowerVector> geographicSplit(const PowerVector& a, const PowerVector& b,
                                                    std::span<const geometry::Point2> aps, Rng& rng);

std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, const radio::Network& net,
                                            double mu, Rng& rng);

// Powers off one AP among those at the highest level present, then repairs.
Individual mutate(const Individual& child, const radio::Network& net, double mu, Rng& rng);

// Expects `population` sorted best first. Returns the next generation,
// unsorted, with every member evaluated.
std::vector<Individual> evolve(const std::vector<Individual>& population, const GaConfig& config,
                               const radio::Network& net, int generation);

void sortPopulation(std::vector<Individual>& population);

struct TraceEntry {
    int generation = 0;
    Fitness best;
    double meanObjectivePct = 0.0;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct RunResult {
    Individual best;
    std::vector<TraceEntry> trace;
};

RunResult runGatpc(const radio::Network& net, const GaConfig& config);

} // namespace tpc::ga

#endif // TPC_GA_HPP
