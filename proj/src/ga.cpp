#include "tpc/ga.hpp"

#include "tpc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tpc::ga {

namespace {

// Blank GP set with O(1) random pick and removal.
class BlankSet {
public:
    BlankSet(std::size_t gridSize) : where_(gridSize, kAbsent) {}

    void insert(int pos)
    {
        where_[static_cast<std::size_t>(pos)] = items_.size();
        items_.push_back(pos);
    }

    void erase(int pos)
    {
        const std::size_t at = where_[static_cast<std::size_t>(pos)];
        if (at == kAbsent)
            return;
        const int last = items_.back();
        items_[at] = last;
        where_[static_cast<std::size_t>(last)] = at;
        items_.pop_back();
        where_[static_cast<std::size_t>(pos)] = kAbsent;
    }

    bool contains(int pos) const { return where_[static_cast<std::size_t>(pos)] != kAbsent; }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    int operator[](std::size_t i) const { return items_[i]; }
    const std::vector<int>& items() const { return items_; }

private:
    static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
    std::vector<int> items_;
    std::vector<std::size_t> where_;
};

int pickNearest(int gp, const std::vector<int>& candidates, const radio::Network& net)
{
    int nearest = radio::kNoAp;
    double bestSq = std::numeric_limits<double>::infinity();
    for (int j : candidates) {
        const double d = net.planarDistanceSq(gp, j);
        if (d < bestSq) {
            bestSq = d;
            nearest = j;
        }
    }
    return nearest;
}

// Without the lookup tables the GP-AP links of every AP below the top level
// are rebuilt against the whole blank set on each pass, as the plain
// algorithm does.
int nearestByFullLinks(int gp, const PowerVector& levels, const BlankSet& blank, const radio::Network& net)
{
    const int top = net.levelCount();
    std::vector<std::vector<int>> links(static_cast<std::size_t>(net.apCount()));
    for (int j = 0; j < net.apCount(); ++j) {
        if (levels[static_cast<std::size_t>(j)] >= top)
            continue;
        for (int pos : blank.items()) {
            if (net.covers(pos, j, top))
                links[static_cast<std::size_t>(j)].push_back(pos);
        }
    }

    std::vector<int> linked;
    for (int j = 0; j < net.apCount(); ++j) {
        const auto& l = links[static_cast<std::size_t>(j)];
        if (std::find(l.begin(), l.end(), gp) != l.end())
            linked.push_back(j);
    }
    return pickNearest(gp, linked, net);
}

double uniform01(Rng& rng)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

std::size_t uniformIndex(Rng& rng, std::size_t size)
{
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

} // namespace

int GaConfig::eliteCount() const
{
    const int rounded = static_cast<int>(std::lround(elitismRate * populationSize));
    return std::clamp(rounded, 1, populationSize);
}

void GaConfig::validate() const
{
    if (populationSize < 2)
        throw ConfigError("population size must be at least 2", "ga.populationSize");
    auto rate = [](double v, const char* path) {
        if (!(v >= 0.0 && v <= 1.0))
            throw ConfigError("rate must lie in [0, 1]", path);
    };
    rate(elitismRate, "ga.elitismRate");
    rate(crossoverRate, "ga.crossoverRate");
    rate(mutationRate, "ga.mutationRate");
    if (stopIterations < 1)
        throw ConfigError("at least one iteration is required", "ga.stopIterations");
    if (!(mu > 0.0 && mu <= 1.0))
        throw ConfigError("coverage rate must lie in (0, 1]", "mu");
}

Fitness evaluateFitness(const PowerVector& levels, const radio::Network& net, double mu)
{
    const auto e = net.evaluate(levels, mu);
    return {e.shortfall, e.objectivePct};
}

void evaluate(Individual& ind, const radio::Network& net, double mu)
{
    ind.fitness = evaluateFitness(ind.levels, net, mu);
    ind.evaluated = true;
}

int nearestPotentialAp(int gp, const PowerVector& levels, const radio::Network& net)
{
    const int top = net.levelCount();
    std::vector<int> linked;
    for (int j = 0; j < net.apCount(); ++j) {
        if (levels[static_cast<std::size_t>(j)] < top && net.covers(gp, j, top))
            linked.push_back(j);
    }
    return pickNearest(gp, linked, net);
}

RepairReport repair(PowerVector& levels, const radio::Network& net, double mu, Rng& rng)
{
    const auto& grid = net.grid();
    std::vector<std::uint8_t> covered(grid.size(), 0);
    RepairReport report;

    for (int j = 0; j < net.apCount(); ++j) {
        const int level = levels[static_cast<std::size_t>(j)];
        net.forEachCandidate(j, level, [&](int pos) {
            if (!covered[static_cast<std::size_t>(pos)] && net.covers(pos, j, level)) {
                covered[static_cast<std::size_t>(pos)] = 1;
                ++report.coveredCount;
            }
        });
    }
    report.required = radio::requiredCovered(mu, net.eligibleCount());

    BlankSet blank(grid.size());
    for (int pos : net.eligiblePositions()) {
        if (!covered[static_cast<std::size_t>(pos)])
            blank.insert(pos);
    }

    const int top = net.levelCount();
    const bool fullLinks = net.mode() == radio::EvalMode::Naive;
    while (!blank.empty() && report.coveredCount < report.required) {
        ++report.iterations;
        const int gp = blank[uniformIndex(rng, blank.size())];
        const int ap = fullLinks ? nearestByFullLinks(gp, levels, blank, net) : nearestPotentialAp(gp, levels, net);
        if (ap == radio::kNoAp) {
            blank.erase(gp);
            report.linkless.push_back(gp);
            continue;
        }

        // Lowest level at or above the current one that reaches gp.
        int level = std::max(levels[static_cast<std::size_t>(ap)], 1);
        while (level < top && !net.covers(gp, ap, level))
            ++level;
        levels[static_cast<std::size_t>(ap)] = level;

        net.forEachCandidate(ap, level, [&](int pos) {
            if (!covered[static_cast<std::size_t>(pos)] && net.covers(pos, ap, level)) {
                covered[static_cast<std::size_t>(pos)] = 1;
                ++report.coveredCount;
                blank.erase(pos);
            }
        });
    }
    return report;
}

Individual rtpcGenerate(const radio::Network& net, double mu, Rng& rng)
{
    Individual ind;
    std::uniform_int_distribution<int> draw(0, net.levelCount());
    ind.levels.resize(static_cast<std::size_t>(net.apCount()));
    for (auto& l : ind.levels)
        l = draw(rng);
    repair(ind.levels, net, mu, rng);
    return ind;
}

std::pair<PowerVector, PowerVector> geographicSplit(const PowerVector& a, const PowerVector& b,
                                                    std::span<const geometry::Point2> aps, Rng& rng)
{
    const std::size_t count = a.size();
    std::vector<std::uint8_t> fromFirst(count, 0);

    if (count > 1) {
        const auto [lo, hi] = std::minmax_element(aps.begin(), aps.end(),
                                                  [](const auto& p, const auto& q) { return p.x < q.x; });
        const double minX = lo->x;
        const double maxX = hi->x;
        if (maxX > minX) {
            // Line in (minX, maxX]: the leftmost AP falls left, the rightmost right.
            double line = maxX - uniform01(rng) * (maxX - minX);
            if (line <= minX)
                line = std::nextafter(minX, maxX);
            for (std::size_t j = 0; j < count; ++j)
                fromFirst[j] = aps[j].x < line ? 1 : 0;
        } else {
            const std::size_t cut = 1 + uniformIndex(rng, count - 1);
            for (std::size_t j = 0; j < cut; ++j)
                fromFirst[j] = 1;
        }
    }

    PowerVector c1(count);
    PowerVector c2(count);
    for (std::size_t j = 0; j < count; ++j) {
        c1[j] = fromFirst[j] ? a[j] : b[j];
        c2[j] = fromFirst[j] ? b[j] : a[j];
    }
    return {std::move(c1), std::move(c2)};
}

std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, const radio::Network& net,
                                            double mu, Rng& rng)
{
    auto [l1, l2] = geographicSplit(a.levels, b.levels, net.environment().aps, rng);
    Individual c1{std::move(l1), {}, false};
    Individual c2{std::move(l2), {}, false};
    repair(c1.levels, net, mu, rng);
    repair(c2.levels, net, mu, rng);
    return {std::move(c1), std::move(c2)};
}

Individual mutate(const Individual& child, const radio::Network& net, double mu, Rng& rng)
{
    const int highest = child.levels.empty() ? 0 : *std::max_element(child.levels.begin(), child.levels.end());
    if (highest == 0)
        return child;

    std::vector<std::size_t> selected;
    for (std::size_t j = 0; j < child.levels.size(); ++j) {
        if (child.levels[j] == highest)
            selected.push_back(j);
    }
    Individual out{child.levels, {}, false};
    out.levels[selected[uniformIndex(rng, selected.size())]] = 0;
    repair(out.levels, net, mu, rng);
    return out;
}

void sortPopulation(std::vector<Individual>& population)
{
    std::stable_sort(population.begin(), population.end(),
                     [](const Individual& x, const Individual& y) { return x.fitness < y.fitness; });
}

std::vector<Individual> evolve(const std::vector<Individual>& population, const GaConfig& config,
                               const radio::Network& net, int generation)
{
    const auto size = population.size();
    const auto elites = static_cast<std::size_t>(std::min<int>(config.eliteCount(), static_cast<int>(size)));
    const std::size_t offspring = size - elites;
    const std::size_t pairs = (offspring + 1) / 2;

    auto tournament = [&](Rng& rng) -> const Individual& {
        const std::size_t i = uniformIndex(rng, size);
        const std::size_t k = uniformIndex(rng, size);
        const std::size_t lo = std::min(i, k);
        const std::size_t hi = std::max(i, k);
        return population[hi].fitness < population[lo].fitness ? population[hi] : population[lo];
    };

    std::vector<std::pair<Individual, Individual>> bred(pairs);
    parallelFor(pairs, config.workers, [&](std::size_t p) {
        Rng rng = streamRng(config.seed, static_cast<std::uint64_t>(generation), p);
        const Individual& mother = tournament(rng);
        const Individual& father = tournament(rng);

        std::pair<Individual, Individual> kids;
        if (uniform01(rng) < config.crossoverRate)
            kids = crossover(mother, father, net, config.mu, rng);
        else
            kids = {mother, father};

        for (Individual* kid : {&kids.first, &kids.second}) {
            if (uniform01(rng) < config.mutationRate)
                *kid = mutate(*kid, net, config.mu, rng);
            if (!kid->evaluated)
                evaluate(*kid, net, config.mu);
        }
        bred[p] = std::move(kids);
    });

    std::vector<Individual> next(population.begin(), population.begin() + static_cast<std::ptrdiff_t>(elites));
    next.reserve(size);
    for (auto& [first, second] : bred) {
        next.push_back(std::move(first));
        if (next.size() < size)
            next.push_back(std::move(second));
    }
    return next;
}

RunResult runGatpc(const radio::Network& net, const GaConfig& config)
{
    config.validate();
    const auto size = static_cast<std::size_t>(config.populationSize);

    std::vector<Individual> population(size);
    parallelFor(size, config.workers, [&](std::size_t slot) {
        Rng rng = streamRng(config.seed, 0, slot);
        population[slot] = rtpcGenerate(net, config.mu, rng);
        evaluate(population[slot], net, config.mu);
    });
    sortPopulation(population);

    RunResult result;
    auto record = [&](int generation) {
        double sum = 0.0;
        for (const auto& ind : population)
            sum += ind.fitness.objectivePct;
        result.trace.push_back({generation, population.front().fitness, sum / static_cast<double>(size)});
        if (generation == 0 || population.front().fitness < result.best.fitness)
            result.best = population.front();
    };
    record(0);

    for (int generation = 1; generation <= config.stopIterations; ++generation) {
        population = evolve(population, config, net, generation);
        sortPopulation(population);
        record(generation);
    }
    return result;
}

} // namespace tpc::ga
