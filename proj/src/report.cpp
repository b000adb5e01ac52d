#include "tpc/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tpc::report {

namespace {

std::string format(const char* fmt, double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    std::string s = buf;
    if (s == "-0.000000")
        s = "0.000000";
    return s;
}

std::ofstream open(const std::filesystem::path& file)
{
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + file.string());
    return out;
}

} // namespace

std::string fixed(double v)
{
    return format("%.6f", v);
}

std::string sci(double v)
{
    return format("%.6e", v);
}

std::string levelsString(const radio::PowerVector& levels)
{
    std::string s;
    for (std::size_t j = 0; j < levels.size(); ++j) {
        if (j)
            s += ' ';
        s += std::to_string(levels[j]);
    }
    return s;
}

void writeCoverageMap(const std::filesystem::path& file, const radio::Network& net,
                      const radio::PowerVector& levels)
{
    const auto state = net.connect(levels);
    auto out = open(file);
    out << "gp_index,x,y,best_rx_dbm,connected_ap,covered,interference_mw\n";
    for (int pos : net.eligiblePositions()) {
        const auto p = static_cast<std::size_t>(pos);
        const auto& gp = net.grid()[p];
        const int ap = state.connectedAp[p];
        out << gp.index << ',' << fixed(gp.x) << ',' << fixed(gp.y) << ',';
        if (ap != radio::kNoAp)
            out << fixed(state.bestRxDbm[p]) << ',' << ap + 1;
        else
            out << ',';
        out << ',' << int{state.covered[p]} << ',' << sci(state.interferenceMw[p]) << '\n';
    }
}

void writeSolution(const std::filesystem::path& file, const radio::Network& net,
                   const radio::PowerVector& levels)
{
    auto out = open(file);
    out << "ap_index,x,y,level,tx_dbm,state\n";
    for (std::size_t j = 0; j < levels.size(); ++j) {
        const auto& ap = net.environment().aps[j];
        out << j + 1 << ',' << fixed(ap.x) << ',' << fixed(ap.y) << ',' << levels[j] << ',';
        if (levels[j] > 0)
            out << fixed(net.model().txDbm(levels[j])) << ",on\n";
        else
            out << ",off\n";
    }
}

void writeSummary(const std::filesystem::path& file, const std::vector<experiments::RunRecord>& records,
                  const radio::Network& net)
{
    auto out = open(file);
    out << "scheme,objective_pct,interference_dbm,coverage_rate,covered,eligible,shortfall,feasible,degenerate,"
           "aps_on,runtime_s,seed\n";
    for (const auto& r : records) {
        out << r.scheme << ',' << fixed(r.eval.objectivePct) << ',' << fixed(r.eval.interferenceDbm()) << ','
            << fixed(r.eval.coverageRate) << ',' << r.eval.coveredCount << ',' << net.eligibleCount() << ','
            << r.eval.shortfall << ',' << (r.eval.feasible() ? 1 : 0) << ',' << (r.eval.degenerate ? 1 : 0) << ','
            << experiments::poweredOn(r.levels) << ',' << fixed(r.seconds) << ',' << r.seed << '\n';
    }
}

void writeTrace(const std::filesystem::path& file, const std::vector<ga::TraceEntry>& trace)
{
    auto out = open(file);
    out << "generation,best,mean\n";
    for (const auto& t : trace)
        out << t.generation << ',' << fixed(t.best.objectivePct) << ',' << fixed(t.meanObjectivePct) << '\n';
}

void writeRunReport(const std::filesystem::path& file, const experiments::ExperimentReport& report)
{
    auto out = open(file);
    out << "scheme,run,seed,objective_pct,interference_dbm,coverage_rate,shortfall,levels,runtime_s\n";
    for (const auto& r : report.records) {
        out << r.scheme << ',' << r.run << ',' << r.seed << ',' << fixed(r.eval.objectivePct) << ','
            << fixed(r.eval.interferenceDbm()) << ',' << fixed(r.eval.coverageRate) << ',' << r.eval.shortfall
            << ',' << levelsString(r.levels) << ',' << fixed(r.seconds) << '\n';
    }
    const std::string scheme = report.records.empty() ? "" : report.records.front().scheme;
    auto row = [&](const char* stat, double obj, double dbm, double cov) {
        out << scheme << ',' << stat << ",," << fixed(obj) << ',' << fixed(dbm) << ',' << fixed(cov) << ",,,\n";
    };
    row("mean", report.objectivePct.mean, report.interferenceDbm.mean, report.coverageRate.mean);
    row("min", report.objectivePct.min, report.interferenceDbm.min, report.coverageRate.min);
    row("max", report.objectivePct.max, report.interferenceDbm.max, report.coverageRate.max);
}

void writeQualification(const std::filesystem::path& file,
                        const std::vector<experiments::QualificationPoint>& curve)
{
    auto out = open(file);
    out << "mu,orientation,placements,qualified,rate\n";
    for (const auto& p : curve)
        out << fixed(p.mu) << ',' << p.orientation << ',' << p.placements << ',' << p.qualified << ','
            << fixed(p.rate()) << '\n';
}

void writeInterference(const std::filesystem::path& file,
                       const std::vector<experiments::InterferencePoint>& surface)
{
    auto out = open(file);
    out << "mu,racks,runs,mean_objective_pct,std_objective_pct,mean_interference_dbm,mean_aps_on,feasible_runs\n";
    for (const auto& p : surface)
        out << fixed(p.mu) << ',' << p.racks << ',' << p.runs << ',' << fixed(p.meanObjectivePct) << ','
            << fixed(p.stdObjectivePct) << ',' << fixed(p.meanInterferenceDbm) << ',' << fixed(p.meanApsOn) << ','
            << p.feasibleRuns << '\n';
}

void writeBench(const std::filesystem::path& file, const experiments::BenchReport& bench)
{
    auto out = open(file);
    out << "mode,runtime_s,best_objective_pct,best_shortfall,levels\n";
    out << "fast," << fixed(bench.fastSeconds) << ',' << fixed(bench.fast.best.fitness.objectivePct) << ','
        << bench.fast.best.fitness.shortfall << ',' << levelsString(bench.fast.best.levels) << '\n';
    out << "naive," << fixed(bench.naiveSeconds) << ',' << fixed(bench.naive.best.fitness.objectivePct) << ','
        << bench.naive.best.fitness.shortfall << ',' << levelsString(bench.naive.best.levels) << '\n';
    out << "ratio," << fixed(bench.ratio()) << ",,,\n";
    out << "identical," << (bench.identical() ? 1 : 0) << ",,,\n";
}

} // namespace tpc::report
