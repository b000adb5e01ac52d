#include "tpc/experiments.hpp"

#include "tpc/errors.hpp"
#include "tpc/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace tpc::experiments {

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool enclosesAnyAp(const geometry::Obstacle& rack, const std::vector<geometry::Point2>& aps)
{
    return std::any_of(aps.begin(), aps.end(), [&](const auto& p) { return rack.footprintContains(p); });
}

geometry::Obstacle makeRack(const RackSpec& spec, double x, double y, geometry::Orientation o)
{
    return {x, y, spec.length, spec.width, spec.height, o, spec.lossDb};
}

Aggregate summarize(const std::vector<double>& values)
{
    Aggregate a;
    if (values.empty())
        return a;
    double sum = 0.0;
    a.min = values.front();
    a.max = values.front();
    for (double v : values) {
        sum += v;
        a.min = std::min(a.min, v);
        a.max = std::max(a.max, v);
    }
    a.mean = sum / static_cast<double>(values.size());
    return a;
}

} // namespace

void Scenario::validate() const
{
    env.validate();
    model.validate();
    ga.validate();
    if (env.aps.empty())
        throw ConfigError("at least one AP is required", "aps");
}

radio::Network makeNetwork(const Scenario& s, radio::EvalMode mode, std::size_t memoryCapBytes)
{
    s.validate();
    return radio::Network(s.env, s.model, mode, memoryCapBytes);
}

std::vector<geometry::Point2> gridPlaceAps(const geometry::Environment& env, double spacingX, double spacingY)
{
    if (!(spacingX > 0.0) || !(spacingY > 0.0))
        throw ConfigError("AP spacing must be positive", "aps.spacing");
    const double width = env.xMax - env.xMin;
    const double height = env.yMax - env.yMin;
    const int cols = std::max(1, geometry::cellCount(width, spacingX));
    const int rows = std::max(1, geometry::cellCount(height, spacingY));

    std::vector<geometry::Point2> aps;
    aps.reserve(static_cast<std::size_t>(cols) * static_cast<std::size_t>(rows));
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r)
            aps.push_back({env.xMin + (c + 0.5) * width / cols, env.yMin + (r + 0.5) * height / rows});
    }
    return aps;
}

std::vector<geometry::Point2> gridPlaceAps(const geometry::Environment& env, double spacing)
{
    return gridPlaceAps(env, spacing, spacing);
}

Scenario generateObstructedScenario(const Scenario& base, const RackSpec& racks)
{
    if (racks.count <= 0)
        return base;
    if (!(racks.length > 0.0 && racks.width > 0.0 && racks.height > 0.0))
        throw ConfigError("rack dimensions must be positive", "obstacles.dims");

    Rng rng = streamRng(racks.seed, 0x7261636bULL);
    std::uniform_real_distribution<double> ux(base.env.xMin, base.env.xMax);
    std::uniform_real_distribution<double> uy(base.env.yMin, base.env.yMax);
    std::bernoulli_distribution vertical(0.5);

    int draws = 0;
    while (true) {
        Scenario out = base;
        out.provenance = Provenance::Generated;
        for (int k = 0; k < racks.count; ++k) {
            while (true) {
                if (++draws > kPlacementRetryCap)
                    throw ConfigError("could not place racks after " + std::to_string(kPlacementRetryCap) +
                                          " draws; environment too small",
                                      "obstacles");
                const auto o = vertical(rng) ? geometry::Orientation::Vertical : geometry::Orientation::Horizontal;
                const double x = ux(rng);
                const double y = uy(rng);
                const auto rack = makeRack(racks, x, y, o);
                if (out.env.encloses(rack) && !enclosesAnyAp(rack, out.env.aps)) {
                    out.env.obstacles.push_back(rack);
                    break;
                }
            }
        }
        if (!racks.requireFeasibleAtFullPower)
            return out;
        const auto net = makeNetwork(out);
        if (net.feasible(net.fullPower(), out.mu()).feasible)
            return out;
    }
}

void ExperimentReport::aggregate()
{
    std::vector<double> obj, dbm, cov;
    for (const auto& r : records) {
        obj.push_back(r.eval.objectivePct);
        dbm.push_back(r.eval.interferenceDbm());
        cov.push_back(r.eval.coverageRate);
    }
    objectivePct = summarize(obj);
    interferenceDbm = summarize(dbm);
    coverageRate = summarize(cov);
}

RunRecord fullPowerOn(const radio::Network& net, double mu)
{
    const auto start = Clock::now();
    RunRecord r;
    r.scheme = "full";
    r.levels = net.fullPower();
    r.eval = net.evaluate(r.levels, mu);
    r.seconds = secondsSince(start);
    return r;
}

ExperimentReport rtpcBaseline(const radio::Network& net, double mu, int runs, std::uint64_t seed, unsigned workers)
{
    ExperimentReport report;
    report.records.resize(static_cast<std::size_t>(std::max(runs, 0)));
    parallelFor(report.records.size(), workers, [&](std::size_t i) {
        const auto start = Clock::now();
        RunRecord& r = report.records[i];
        r.scheme = "rtpc";
        r.run = static_cast<int>(i);
        r.seed = splitmix64(seed ^ (0x52545043ULL + i));
        Rng rng{r.seed};
        r.levels = ga::rtpcGenerate(net, mu, rng).levels;
        r.eval = net.evaluate(r.levels, mu);
        r.seconds = secondsSince(start);
    });
    report.aggregate();
    return report;
}

GatpcOutcome solveGatpc(const radio::Network& net, const ga::GaConfig& config)
{
    const auto start = Clock::now();
    auto result = ga::runGatpc(net, config);
    GatpcOutcome out;
    out.record.scheme = "gatpc";
    out.record.seed = config.seed;
    out.record.levels = result.best.levels;
    out.record.eval = net.evaluate(out.record.levels, config.mu);
    out.record.seconds = secondsSince(start);
    out.trace = std::move(result.trace);
    return out;
}

std::uint64_t searchSpaceSize(int apCount, int levelCount) noexcept
{
    const auto base = static_cast<std::uint64_t>(levelCount) + 1;
    std::uint64_t size = 1;
    for (int j = 0; j < apCount; ++j) {
        if (size > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        size *= base;
    }
    return size;
}

OracleResult bruteForceOracle(const radio::Network& net, double mu, std::uint64_t cap)
{
    const std::uint64_t space = searchSpaceSize(net.apCount(), net.levelCount());
    if (space > cap) {
        throw ResourceError("search space of " + std::to_string(space) + " solutions exceeds cap " +
                                std::to_string(cap),
                            static_cast<std::size_t>(space));
    }

    OracleResult best;
    ga::Fitness bestFitness;
    radio::PowerVector levels(static_cast<std::size_t>(net.apCount()), 0);
    const int top = net.levelCount();
    for (std::uint64_t k = 0; k < space; ++k) {
        const auto e = net.evaluate(levels, mu);
        const ga::Fitness f{e.shortfall, e.objectivePct};
        if (k == 0 || f < bestFitness) {
            bestFitness = f;
            best.levels = levels;
            best.eval = e;
        }
        for (std::size_t j = levels.size(); j-- > 0;) {
            if (++levels[j] <= top)
                break;
            levels[j] = 0;
        }
    }
    best.enumerated = space;
    return best;
}

std::vector<QualificationPoint> qualificationSweep(const Scenario& base, const RackSpec& rack,
                                                   const std::vector<double>& muValues, unsigned workers)
{
    struct Placement {
        geometry::Obstacle rack;
        std::size_t covered = 0;
        std::size_t eligible = 0;
    };

    const geometry::Grid grid(base.env);
    std::vector<Placement> placements;
    for (auto o : {geometry::Orientation::Horizontal, geometry::Orientation::Vertical}) {
        for (const auto& gp : grid.points()) {
            const auto r = makeRack(rack, gp.x, gp.y, o);
            if (base.env.encloses(r) && !enclosesAnyAp(r, base.env.aps))
                placements.push_back({r, 0, 0});
        }
    }

    parallelFor(placements.size(), workers, [&](std::size_t i) {
        auto env = base.env;
        env.obstacles.push_back(placements[i].rack);
        const radio::Network net(std::move(env), base.model);
        const auto state = net.connect(net.fullPower());
        placements[i].covered = state.coveredCount;
        placements[i].eligible = state.eligibleCount;
    });

    std::vector<QualificationPoint> curve;
    for (double mu : muValues) {
        QualificationPoint h{mu, "horizontal"}, v{mu, "vertical"}, all{mu, "combined"};
        for (const auto& p : placements) {
            const bool ok = static_cast<int>(p.covered) >= radio::requiredCovered(mu, p.eligible);
            auto& side = p.rack.orientation == geometry::Orientation::Horizontal ? h : v;
            ++side.placements;
            ++all.placements;
            side.qualified += ok ? 1 : 0;
            all.qualified += ok ? 1 : 0;
        }
        curve.push_back(h);
        curve.push_back(v);
        curve.push_back(all);
    }
    return curve;
}

std::vector<InterferencePoint> interferenceSweep(const Scenario& base, const RackSpec& rack,
                                                 const std::vector<double>& muValues,
                                                 const std::vector<int>& rackCounts, int runsPerPoint,
                                                 unsigned workers)
{
    struct Sample {
        double objectivePct = 0.0;
        double interferenceMw = 0.0;
        int apsOn = 0;
        bool feasible = false;
    };

    const std::size_t runs = static_cast<std::size_t>(std::max(runsPerPoint, 0));
    const std::size_t tasks = rackCounts.size() * runs;
    std::vector<std::vector<Sample>> samples(tasks, std::vector<Sample>(muValues.size()));

    parallelFor(tasks, workers, [&](std::size_t t) {
        const std::size_t c = t / runs;
        const std::size_t r = t % runs;
        RackSpec spec = rack;
        spec.count = rackCounts[c];
        spec.seed = splitmix64(base.seed() ^ splitmix64((c << 32) | r));
        const auto scenario = generateObstructedScenario(base, spec);
        const auto net = makeNetwork(scenario);
        for (std::size_t m = 0; m < muValues.size(); ++m) {
            ga::GaConfig cfg = scenario.ga;
            cfg.mu = muValues[m];
            cfg.seed = spec.seed;
            cfg.workers = 1;
            const auto best = ga::runGatpc(net, cfg).best;
            const auto e = net.evaluate(best.levels, cfg.mu);
            samples[t][m] = {e.objectivePct, e.interferenceMw, poweredOn(best.levels), e.feasible()};
        }
    });

    std::vector<InterferencePoint> surface;
    for (std::size_t c = 0; c < rackCounts.size(); ++c) {
        for (std::size_t m = 0; m < muValues.size(); ++m) {
            InterferencePoint p;
            p.mu = muValues[m];
            p.racks = rackCounts[c];
            p.runs = static_cast<int>(runs);
            double sumObj = 0.0, sumMw = 0.0, sumOn = 0.0;
            for (std::size_t r = 0; r < runs; ++r) {
                const auto& s = samples[c * runs + r][m];
                sumObj += s.objectivePct;
                sumMw += s.interferenceMw;
                sumOn += s.apsOn;
                p.feasibleRuns += s.feasible ? 1 : 0;
            }
            if (runs > 0) {
                const double n = static_cast<double>(runs);
                p.meanObjectivePct = sumObj / n;
                p.meanInterferenceDbm = radio::mwToDbm(sumMw / n);
                p.meanApsOn = sumOn / n;
                double sq = 0.0;
                for (std::size_t r = 0; r < runs; ++r) {
                    const double d = samples[c * runs + r][m].objectivePct - p.meanObjectivePct;
                    sq += d * d;
                }
                p.stdObjectivePct = runs > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
            }
            surface.push_back(p);
        }
    }
    return surface;
}

BenchReport speedupBenchmark(const Scenario& s, unsigned workers, std::size_t memoryCapBytes)
{
    BenchReport report;

    auto start = Clock::now();
    {
        const auto net = makeNetwork(s, radio::EvalMode::Fast, memoryCapBytes);
        ga::GaConfig cfg = s.ga;
        cfg.workers = workers;
        report.fast = ga::runGatpc(net, cfg);
    }
    report.fastSeconds = secondsSince(start);

    start = Clock::now();
    {
        const auto net = makeNetwork(s, radio::EvalMode::Naive);
        ga::GaConfig cfg = s.ga;
        cfg.workers = 1;
        report.naive = ga::runGatpc(net, cfg);
    }
    report.naiveSeconds = secondsSince(start);
    return report;
}

int poweredOn(const radio::PowerVector& levels) noexcept
{
    return static_cast<int>(std::count_if(levels.begin(), levels.end(), [](int l) { return l > 0; }));
}

} // namespace tpc::experiments
