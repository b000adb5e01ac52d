// Acceptance suite: one PASS/FAIL line per criterion. Exits 0 once every
// criterion has been evaluated; with --strict, any FAIL gives exit status 1.

#include "support.hpp"

#include "tpc/cli.hpp"
#include "tpc/config.hpp"
#include "tpc/experiments.hpp"
#include "tpc/ga.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace tpc;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

fs::path configDir()
{
    const char* dir = std::getenv("TPC_CONFIG_DIR");
    return dir ? fs::path(dir) : fs::path("configs");
}

experiments::Scenario load(const char* name)
{
    return config::loadScenario(configDir() / name);
}

// Criterion 1: GATPC reaches the exhaustive optimum.
Outcome oracleOptimality()
{
    const auto start = Clock::now();
    const auto s = load("oracle_small.json");
    const auto net = experiments::makeNetwork(s);
    const auto opt = experiments::bruteForceOracle(net, s.mu(), 1000000);

    int matched = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto cfg = s.ga;
        cfg.seed = seed;
        cfg.workers = 1;
        const auto best = ga::runGatpc(net, cfg).best;
        if (best.fitness.shortfall == opt.eval.shortfall &&
            std::abs(best.fitness.objectivePct - opt.eval.objectivePct) <= 1e-9)
            ++matched;
    }
    const double secs = since(start);
    return {matched >= 19 && secs < 10.0,
            std::to_string(matched) + "/20 runs hit the optimum " + fmt("%.6f", opt.eval.objectivePct) + " % over " +
                std::to_string(opt.enumerated) + " solutions, " + fmt("%.2f", secs) + " s"};
}

// Criterion 2: GATPC <= RTPC <= full power.
Outcome schemeOrdering()
{
    const auto start = Clock::now();
    const auto small = load("small_empty.json");
    auto medium = small;
    medium.env.xMax = 120;
    medium.env.yMax = 60;
    medium.env.aps = experiments::gridPlaceAps(medium.env, 30);

    int objectiveOk = 0;
    int dbmOk = 0;
    for (int i = 0; i < 30; ++i) {
        experiments::RackSpec spec;
        spec.count = i % 4;
        spec.seed = 1000 + static_cast<std::uint64_t>(i);
        const auto s = experiments::generateObstructedScenario(i < 15 ? small : medium, spec);
        const auto net = experiments::makeNetwork(s);

        auto cfg = s.ga;
        cfg.seed = static_cast<std::uint64_t>(i) + 1;
        cfg.workers = 1;
        const auto gatpc = experiments::solveGatpc(net, cfg).record.eval;
        const auto rtpc = experiments::rtpcBaseline(net, s.mu(), 30, cfg.seed, 1);
        const auto full = experiments::fullPowerOn(net, s.mu()).eval;

        if (gatpc.objectivePct <= rtpc.objectivePct.mean && rtpc.objectivePct.mean <= 100.0)
            ++objectiveOk;
        if (gatpc.interferenceDbm() < rtpc.interferenceDbm.mean &&
            rtpc.interferenceDbm.mean < full.interferenceDbm())
            ++dbmOk;
    }
    const double secs = since(start);
    return {objectiveOk == 30 && dbmOk >= 27 && secs < 300.0,
            "objective order " + std::to_string(objectiveOk) + "/30, dBm order " + std::to_string(dbmOk) + "/30, " +
                fmt("%.1f", secs) + " s"};
}

// Criterion 3: objective endpoints.
Outcome objectiveEndpoints()
{
    Rng rng{3003};
    int ok = 0;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const auto s = testing::randomScenario(rng);
        const auto net = experiments::makeNetwork(s);
        const auto full = net.evaluate(net.fullPower(), s.mu());
        radio::PowerVector one(static_cast<std::size_t>(net.apCount()), 0);
        const auto j = std::uniform_int_distribution<std::size_t>(0, one.size() - 1)(rng);
        one[j] = std::uniform_int_distribution<int>(1, net.levelCount())(rng);
        const auto single = net.evaluate(one, s.mu());
        worst = std::max(worst, std::abs(full.objectivePct - 100.0));
        if (std::abs(full.objectivePct - 100.0) <= 1e-9 && single.objectivePct == 0.0)
            ++ok;
    }
    return {ok == 50, std::to_string(ok) + "/50 scenarios, max |full - 100| = " + fmt("%.3g", worst)};
}

// Criterion 4: table-backed and naive evaluation agree bit for bit.
Outcome fastPathEquivalence()
{
    Rng rng{4004};
    int ok = 0;
    for (int i = 0; i < 100; ++i) {
        const auto s = testing::randomScenario(rng);
        const auto fast = experiments::makeNetwork(s, radio::EvalMode::Fast);
        const auto naive = experiments::makeNetwork(s, radio::EvalMode::Naive);
        const auto levels = testing::randomLevels(rng, fast.apCount(), fast.levelCount());

        const auto a = fast.connect(levels);
        const auto b = naive.connect(levels);
        const auto ea = fast.evaluate(levels, s.mu());
        const auto eb = naive.evaluate(levels, s.mu());
        bool same = a.bestRxDbm == b.bestRxDbm && a.connectedAp == b.connectedAp && a.covered == b.covered &&
                    a.interferenceMw == b.interferenceMw && ea.coveredCount == eb.coveredCount &&
                    ea.interferenceMw == eb.interferenceMw && ea.objectivePct == eb.objectivePct &&
                    ea.shortfall == eb.shortfall;
        for (int j = 0; same && j < fast.apCount(); ++j) {
            const int l = levels[static_cast<std::size_t>(j)];
            for (int pos : fast.eligiblePositions())
                same = same && fast.covers(pos, j, l) == naive.covers(pos, j, l);
        }
        ok += same ? 1 : 0;
    }
    return {ok == 100, std::to_string(ok) + "/100 pairs identical"};
}

// Criterion 5: fast mode is at least 5x faster with the same answer.
Outcome speedup()
{
    const auto s = load("bench_medium.json");
    const auto r = experiments::speedupBenchmark(s, defaultWorkers());
    return {r.identical() && r.ratio() >= 5.0 && r.fastSeconds <= 1800.0 && r.naiveSeconds <= 1800.0,
            fmt("fast %.2f s", r.fastSeconds) + fmt(", naive %.2f s", r.naiveSeconds) +
                fmt(", ratio %.2fx", r.ratio()) + (r.identical() ? ", identical" : ", DIFFERENT")};
}

// True if some eligible GP hears no AP above threshold even at full power,
// using the raw link formula.
bool shadowsSomeGp(const experiments::Scenario& s)
{
    const int top = s.model.levelCount();
    for (const auto& gp : geometry::buildGrid(s.env)) {
        if (!gp.eligible())
            continue;
        bool heard = false;
        for (std::size_t j = 0; j < s.env.aps.size() && !heard; ++j)
            heard = testing::directRxPower(s.env, s.model, gp, static_cast<int>(j), top) >= s.model.thld;
        if (!heard)
            return true;
    }
    return false;
}

// Criterion 6: qualification curve shape.
Outcome qualificationShape()
{
    const auto base = load("small_empty.json");
    experiments::RackSpec rack;
    const std::vector<double> mus{0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.98, 0.99, 1.0};
    const auto curve = experiments::qualificationSweep(base, rack, mus, defaultWorkers());

    bool monotone = true;
    double lowMu = -1.0;
    double atOne = -1.0;
    for (const char* o : {"horizontal", "vertical", "combined"}) {
        double previous = 2.0;
        for (const auto& p : curve) {
            if (p.orientation != o)
                continue;
            monotone = monotone && p.rate() <= previous;
            previous = p.rate();
            if (std::string(o) == "combined" && p.mu == mus.front())
                lowMu = p.rate();
            if (std::string(o) == "combined" && p.mu == 1.0)
                atOne = p.rate();
        }
    }

    // Look for one shadowing placement with the raw formula.
    bool shadowing = false;
    const geometry::Grid grid(base.env);
    for (auto o : {geometry::Orientation::Horizontal, geometry::Orientation::Vertical}) {
        for (const auto& gp : grid.points()) {
            if (shadowing)
                break;
            geometry::Obstacle r{gp.x, gp.y, rack.length, rack.width, rack.height, o, rack.lossDb};
            if (!base.env.encloses(r))
                continue;
            bool holdsAp = false;
            for (const auto& ap : base.env.aps)
                holdsAp = holdsAp || r.footprintContains(ap);
            if (holdsAp)
                continue;
            auto s = base;
            s.env.obstacles = {r};
            shadowing = shadowsSomeGp(s);
        }
    }

    const bool drop = !shadowing || atOne < 1.0;
    return {monotone && lowMu == 1.0 && drop,
            std::string(monotone ? "monotone" : "NOT monotone") + fmt(", rate(mu=0.5) %.4f", lowMu) +
                fmt(", rate(mu=1) %.4f", atOne) +
                (shadowing ? ", a shadowing placement exists" : ", no placement shadows a GP")};
}

// Criterion 7: lower mu gives lower interference; rack count matters less
// than seed noise.
Outcome interferenceTrend()
{
    const auto start = Clock::now();
    auto base = load("small_empty.json");
    base.env.obstacles.clear();
    experiments::RackSpec rack;
    const auto surface = experiments::interferenceSweep(base, rack, {0.5, 1.0}, {1, 3}, 10, defaultWorkers());

    auto at = [&](int racks, double mu) {
        for (const auto& p : surface) {
            if (p.racks == racks && p.mu == mu)
                return p;
        }
        return experiments::InterferencePoint{};
    };

    bool trend = true;
    bool close = true;
    std::ostringstream d;
    for (int racks : {1, 3}) {
        const auto lo = at(racks, 0.5);
        const auto hi = at(racks, 1.0);
        trend = trend && lo.meanObjectivePct < hi.meanObjectivePct;
        d << racks << " rack(s): " << fmt("%.3f", lo.meanObjectivePct) << " % < " << fmt("%.3f", hi.meanObjectivePct)
          << " %; ";
    }
    for (double mu : {0.5, 1.0}) {
        const auto a = at(1, mu);
        const auto b = at(3, mu);
        const double gap = std::abs(a.meanObjectivePct - b.meanObjectivePct);
        const double spread = std::max(a.stdObjectivePct, b.stdObjectivePct);
        close = close && gap < spread;
        d << "mu " << mu << " gap " << fmt("%.3f", gap) << " vs spread " << fmt("%.3f", spread) << "; ";
    }
    d << fmt("%.1f s", since(start));
    return {trend && close, d.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Wall-clock columns are the only permitted difference between runs.
std::string maskRuntime(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    std::string out;
    int column = -1;
    bool header = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        for (std::size_t i = 0; header && i < cells.size(); ++i) {
            if (cells[i] == "runtime_s")
                column = static_cast<int>(i);
        }
        header = false;
        for (std::size_t i = 0; i < cells.size(); ++i)
            out += (static_cast<int>(i) == column ? std::string("*") : cells[i]) + ",";
        out += '\n';
    }
    return out;
}

bool sameOutputs(const fs::path& a, const fs::path& b)
{
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(a))
        files.push_back(e.path().filename());
    if (files.empty())
        return false;
    for (const auto& f : files) {
        if (!fs::exists(b / f))
            return false;
        const auto x = slurp(a / f);
        const auto y = slurp(b / f);
        if (f == "summary.csv" || f == "report.csv" ? maskRuntime(x) != maskRuntime(y) : x != y)
            return false;
    }
    return true;
}

// Criterion 8: reruns and worker counts do not change outputs.
Outcome determinism()
{
    const auto root = fs::temp_directory_path() / ("tpc_acceptance_" + std::to_string(std::random_device{}()));
    const auto dir = configDir();
    struct Command {
        std::string name;
        std::vector<std::string> args;
    };
    const std::vector<Command> commands{
        {"solve", {"solve", "--config", (dir / "small_obstructed.json").string()}},
        {"baseline", {"baseline", "--config", (dir / "small_obstructed.json").string(), "--scheme", "rtpc", "--runs",
                      "10"}},
        {"oracle", {"oracle", "--config", (dir / "oracle_small.json").string()}},
        {"sweep", {"sweep", "--config", (dir / "small_empty.json").string(), "--kind", "interference", "--mu-values",
                   "0.8,1.0", "--rack-counts", "1,2", "--runs", "2"}},
    };

    int ok = 0;
    std::string failed;
    for (const auto& c : commands) {
        bool same = true;
        for (const char* tag : {"w1a", "w1b", "wN"}) {
            auto args = c.args;
            args.insert(args.begin(), "tpc");
            args.insert(args.end(), {"--out", (root / c.name / tag).string(), "--workers",
                                     std::string(tag) == "wN" ? "4" : "1"});
            std::ostringstream out;
            std::ostringstream err;
            same = same && cli::run(args, out, err) == cli::kExitOk;
        }
        same = same && sameOutputs(root / c.name / "w1a", root / c.name / "w1b") &&
               sameOutputs(root / c.name / "w1a", root / c.name / "wN");
        if (same)
            ++ok;
        else
            failed += " " + c.name;
    }
    fs::remove_all(root);
    return {ok == static_cast<int>(commands.size()),
            std::to_string(ok) + "/" + std::to_string(commands.size()) +
                " commands identical across reruns and --workers 1 vs 4" + (failed.empty() ? "" : "; failed:" + failed)};
}

// Criterion 9: every repair ends satisfied or with a link-less certificate,
// checked with the raw link formula.
Outcome repairCertificates()
{
    Rng rng{9009};
    int ok = 0;
    int satisfied = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto s = testing::randomScenario(rng);
        const auto mode = i % 2 == 0 ? radio::EvalMode::Fast : radio::EvalMode::Naive;
        const auto net = experiments::makeNetwork(s, mode);
        const double mu = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
        const auto before = testing::randomLevels(rng, net.apCount(), net.levelCount());
        auto levels = before;
        Rng r{rng()};
        const auto report = ga::repair(levels, net, mu, r);

        bool good = true;
        for (std::size_t j = 0; j < levels.size(); ++j)
            good = good && levels[j] >= before[j] && levels[j] <= net.levelCount();

        // Coverage recount from the raw formula.
        const int top = net.levelCount();
        const auto points = geometry::buildGrid(s.env);
        int covered = 0;
        std::vector<const geometry::GridPoint*> blank;
        for (const auto& gp : points) {
            if (!gp.eligible())
                continue;
            bool hit = false;
            for (std::size_t j = 0; j < levels.size() && !hit; ++j) {
                if (levels[j] > 0)
                    hit = testing::directRxPower(s.env, s.model, gp, static_cast<int>(j), levels[j]) >= s.model.thld;
            }
            if (hit)
                ++covered;
            else
                blank.push_back(&gp);
        }
        good = good && covered == report.coveredCount;

        const int required = radio::requiredCovered(mu, net.eligibleCount());
        if (covered >= required) {
            ++satisfied;
        } else {
            for (const auto* gp : blank) {
                for (std::size_t j = 0; j < levels.size(); ++j) {
                    if (levels[j] < top)
                        good = good && testing::directRxPower(s.env, s.model, *gp, static_cast<int>(j), top) <
                                           s.model.thld;
                }
            }
        }
        ok += good ? 1 : 0;
    }
    return {ok == 1000, std::to_string(ok) + "/1000 certificates valid (" + std::to_string(satisfied) +
                            " satisfied, " + std::to_string(1000 - satisfied) + " link-less)"};
}

} // namespace

int main(int argc, char** argv)
{
    bool strict = false;
    for (int i = 1; i < argc; ++i)
        strict = strict || std::string(argv[i]) == "--strict";

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"1 oracle optimality", oracleOptimality},
        {"2 scheme ordering", schemeOrdering},
        {"3 objective endpoints", objectiveEndpoints},
        {"4 fast path equivalence", fastPathEquivalence},
        {"5 speedup", speedup},
        {"6 qualification shape", qualificationShape},
        {"7 interference trend", interferenceTrend},
        {"8 determinism", determinism},
        {"9 repair certificate", repairCertificates},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return strict && failures > 0 ? 1 : 0;
}
