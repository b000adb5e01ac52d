#include "tpc/cli.hpp"

#include "tpc/config.hpp"
#include "tpc/errors.hpp"
#include "tpc/experiments.hpp"
#include "tpc/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

namespace tpc::cli {

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
    std::string config;
    std::string out = "out";
    std::optional<std::uint64_t> seed;
    std::optional<double> mu;
    unsigned workers = defaultWorkers();
    double memoryCapMb = static_cast<double>(tables::kDefaultMemoryCapBytes >> 20);

    std::size_t memoryCapBytes() const { return static_cast<std::size_t>(memoryCapMb * 1024.0 * 1024.0); }
};

void addCommon(CLI::App& cmd, CommonOptions& o)
{
    cmd.add_option("--config", o.config, "Scenario file (JSON)")->required()->check(CLI::ExistingFile);
    cmd.add_option("--out", o.out, "Output directory")->capture_default_str();
    cmd.add_option("--seed", o.seed, "Override the scenario seed");
    cmd.add_option("--mu", o.mu, "Override the required coverage rate")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--workers", o.workers, "Worker threads (1 = serial reference)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--memory-cap-mb", o.memoryCapMb, "Lookup table memory cap in MiB")->capture_default_str();
}

experiments::Scenario loadWithOverrides(const CommonOptions& o)
{
    auto s = config::loadScenario(o.config);
    if (o.seed)
        s.ga.seed = *o.seed;
    if (o.mu)
        s.ga.mu = *o.mu;
    s.ga.workers = o.workers;
    s.validate();
    return s;
}

std::vector<double> parseList(const std::string& text, const char* flag)
{
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("not a number: '" + item + "'", flag);
        }
    }
    if (values.empty())
        throw ConfigError("expected a comma separated list", flag);
    return values;
}

void printRecord(std::ostream& out, const experiments::RunRecord& r)
{
    out << r.scheme << ": objective " << report::fixed(r.eval.objectivePct) << " %, interference "
        << report::fixed(r.eval.interferenceDbm()) << " dBm, coverage " << report::fixed(100.0 * r.eval.coverageRate)
        << " %, shortfall " << r.eval.shortfall << ", levels [" << report::levelsString(r.levels) << "]\n";
    if (r.eval.shortfall > 0)
        out << "  coverage requirement NOT met: " << r.eval.shortfall << " more GPs needed\n";
    if (r.eval.degenerate)
        out << "  warning: reference interference is zero; objective reported as 0 %\n";
}

int cmdSolve(const CommonOptions& o, std::ostream& out)
{
    const auto s = loadWithOverrides(o);
    const auto net = experiments::makeNetwork(s, radio::EvalMode::Fast, o.memoryCapBytes());
    const auto result = experiments::solveGatpc(net, s.ga);

    const fs::path dir = o.out;
    report::writeCoverageMap(dir / "coverage_map.csv", net, result.record.levels);
    report::writeSolution(dir / "solution.csv", net, result.record.levels);
    report::writeSummary(dir / "summary.csv", {result.record}, net);
    report::writeTrace(dir / "trace.csv", result.trace);
    printRecord(out, result.record);
    out << "wrote " << dir.string() << "/{coverage_map,solution,summary,trace}.csv\n";
    return kExitOk;
}

int cmdBaseline(const CommonOptions& o, const std::string& scheme, int runs, std::ostream& out)
{
    const auto s = loadWithOverrides(o);
    const auto net = experiments::makeNetwork(s, radio::EvalMode::Fast, o.memoryCapBytes());

    experiments::ExperimentReport rep;
    if (scheme == "full") {
        rep.records.push_back(experiments::fullPowerOn(net, s.mu()));
        rep.aggregate();
    } else {
        rep = experiments::rtpcBaseline(net, s.mu(), runs, s.seed(), o.workers);
    }

    const auto best = std::min_element(rep.records.begin(), rep.records.end(), [](const auto& a, const auto& b) {
        return ga::Fitness{a.eval.shortfall, a.eval.objectivePct} < ga::Fitness{b.eval.shortfall, b.eval.objectivePct};
    });

    const fs::path dir = o.out;
    report::writeRunReport(dir / "report.csv", rep);
    report::writeSummary(dir / "summary.csv", rep.records, net);
    report::writeCoverageMap(dir / "coverage_map.csv", net, best->levels);
    report::writeSolution(dir / "solution.csv", net, best->levels);
    out << scheme << " over " << rep.records.size() << " run(s): mean objective "
        << report::fixed(rep.objectivePct.mean) << " % (min " << report::fixed(rep.objectivePct.min) << ", max "
        << report::fixed(rep.objectivePct.max) << ")\n";
    printRecord(out, *best);
    return kExitOk;
}

struct SweepOptions {
    std::string kind;
    std::string muValues = "0.5,0.55,0.6,0.65,0.7,0.75,0.8,0.85,0.9,0.95,1.0";
    std::string rackCounts = "1,3";
    std::string rackDims = "20,3,9";
    double rackLoss = 7.37;
    int runs = 30;
};

int cmdSweep(const CommonOptions& o, const SweepOptions& so, std::ostream& out)
{
    auto base = loadWithOverrides(o);
    base.env.obstacles.clear();

    const auto mus = parseList(so.muValues, "--mu-values");
    for (double mu : mus) {
        if (!(mu > 0.0 && mu <= 1.0))
            throw ConfigError("coverage rates must lie in (0, 1]", "--mu-values");
    }
    const auto dims = parseList(so.rackDims, "--rack-dims");
    if (dims.size() != 3)
        throw ConfigError("expected length,width,height", "--rack-dims");
    experiments::RackSpec rack;
    rack.length = dims[0];
    rack.width = dims[1];
    rack.height = dims[2];
    rack.lossDb = so.rackLoss;

    const fs::path dir = o.out;
    if (so.kind == "qualification") {
        const auto curve = experiments::qualificationSweep(base, rack, mus, o.workers);
        report::writeQualification(dir / "qualification.csv", curve);
        for (const auto& p : curve) {
            if (p.orientation == "combined")
                out << "mu " << report::fixed(p.mu) << ": " << report::fixed(100.0 * p.rate()) << " % of "
                    << p.placements << " placements qualified\n";
        }
        return kExitOk;
    }

    if (so.runs < 1)
        throw ConfigError("at least one run per point is required", "--runs");
    std::vector<int> counts;
    for (double c : parseList(so.rackCounts, "--rack-counts")) {
        if (c < 0 || c != std::floor(c))
            throw ConfigError("rack counts must be non-negative integers", "--rack-counts");
        counts.push_back(static_cast<int>(c));
    }
    const auto surface = experiments::interferenceSweep(base, rack, mus, counts, so.runs, o.workers);
    report::writeInterference(dir / "interference.csv", surface);
    for (const auto& p : surface)
        out << "racks " << p.racks << ", mu " << report::fixed(p.mu) << ": mean objective "
            << report::fixed(p.meanObjectivePct) << " %, mean interference " << report::fixed(p.meanInterferenceDbm)
            << " dBm, mean APs on " << report::fixed(p.meanApsOn) << '\n';
    return kExitOk;
}

int cmdOracle(const CommonOptions& o, double cap, std::ostream& out)
{
    const auto s = loadWithOverrides(o);
    const auto net = experiments::makeNetwork(s, radio::EvalMode::Fast, o.memoryCapBytes());
    const auto opt = experiments::bruteForceOracle(net, s.mu(), static_cast<std::uint64_t>(cap));

    experiments::RunRecord rec;
    rec.scheme = "oracle";
    rec.levels = opt.levels;
    rec.eval = opt.eval;
    rec.seed = s.seed();
    const fs::path dir = o.out;
    report::writeSolution(dir / "oracle.csv", net, opt.levels);
    report::writeSummary(dir / "summary.csv", {rec}, net);
    report::writeCoverageMap(dir / "coverage_map.csv", net, opt.levels);
    out << "enumerated " << opt.enumerated << " solutions\n";
    printRecord(out, rec);
    return kExitOk;
}

int cmdBench(const CommonOptions& o, std::ostream& out)
{
    const auto s = loadWithOverrides(o);
    const auto bench = experiments::speedupBenchmark(s, o.workers, o.memoryCapBytes());
    report::writeBench(fs::path(o.out) / "bench.csv", bench);
    out << "fast " << report::fixed(bench.fastSeconds) << " s, naive " << report::fixed(bench.naiveSeconds)
        << " s, speedup " << report::fixed(bench.ratio()) << "x, identical "
        << (bench.identical() ? "yes" : "NO") << '\n';
    return bench.identical() ? kExitOk : kExitFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Transmit power control for dense indoor WLANs"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string scheme = "rtpc";
    int runs = 30;
    SweepOptions sweep;
    double cap = 1e6;

    auto* solve = app.add_subcommand("solve", "Run the genetic algorithm on a scenario");
    addCommon(*solve, common);

    auto* baseline = app.add_subcommand("baseline", "Evaluate the RTPC or full power-on scheme");
    addCommon(*baseline, common);
    baseline->add_option("--scheme", scheme, "rtpc or full")
        ->check(CLI::IsMember({"rtpc", "full"}))
        ->capture_default_str();
    baseline->add_option("--runs", runs, "RTPC repetitions")->check(CLI::PositiveNumber)->capture_default_str();

    auto* sw = app.add_subcommand("sweep", "Qualification-rate or interference sweep over mu");
    addCommon(*sw, common);
    sw->add_option("--kind", sweep.kind, "qualification or interference")
        ->required()
        ->check(CLI::IsMember({"qualification", "interference"}));
    sw->add_option("--mu-values", sweep.muValues, "Comma separated coverage rates")->capture_default_str();
    sw->add_option("--rack-counts", sweep.rackCounts, "Comma separated rack counts")->capture_default_str();
    sw->add_option("--rack-dims", sweep.rackDims, "Rack length,width,height in m")->capture_default_str();
    sw->add_option("--rack-loss", sweep.rackLoss, "Rack penetration loss in dB")->capture_default_str();
    sw->add_option("--runs", sweep.runs, "Runs per sweep point")->capture_default_str();

    auto* oracle = app.add_subcommand("oracle", "Exhaustive search for the optimum");
    addCommon(*oracle, common);
    oracle->add_option("--cap", cap, "Maximum number of solutions to enumerate")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Time the fast and naive evaluation paths");
    addCommon(*bench, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed())
            return cmdSolve(common, out);
        if (baseline->parsed())
            return cmdBaseline(common, scheme, runs, out);
        if (sw->parsed())
            return cmdSweep(common, sweep, out);
        if (oracle->parsed())
            return cmdOracle(common, cap, out);
        if (bench->parsed())
            return cmdBench(common, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << " (required " << e.required() << ")\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace tpc::cli
