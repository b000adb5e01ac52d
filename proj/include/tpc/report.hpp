#ifndef TPC_REPORT_HPP
#define TPC_REPORT_HPP

#include "tpc/experiments.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace tpc::report {

// Fixed six-decimal formatting; infinities print as "inf" / "-inf".
std::string fixed(double v);
// Six-digit scientific, used for linear milliwatts.
std::string sci(double v);

// One row per eligible GP:
// gp_index,x,y,best_rx_dbm,connected_ap,covered,interference_mw
// connected_ap is 1-based and empty when no AP is on; best_rx_dbm is empty
// in that case too.
void writeCoverageMap(const std::filesystem::path& file, const radio::Network& net,
                      const radio::PowerVector& levels);

// ap_index,x,y,level,tx_dbm,state
void writeSolution(const std::filesystem::path& file, const radio::Network& net,
                   const radio::PowerVector& levels);

// scheme,objective_pct,interference_dbm,coverage_rate,covered,eligible,
// shortfall,feasible,degenerate,aps_on,runtime_s,seed
void writeSummary(const std::filesystem::path& file, const std::vector<experiments::RunRecord>& records,
                  const radio::Network& net);

// generation,best,mean
void writeTrace(const std::filesystem::path& file, const std::vector<ga::TraceEntry>& trace);

// One row per run plus mean/min/max rows.
void writeRunReport(const std::filesystem::path& file, const experiments::ExperimentReport& report);

void writeQualification(const std::filesystem::path& file,
                        const std::vector<experiments::QualificationPoint>& curve);
void writeInterference(const std::filesystem::path& file,
                       const std::vector<experiments::InterferencePoint>& surface);
void writeBench(const std::filesystem::path& file, const experiments::BenchReport& bench);

std::string levelsString(const radio::PowerVector& levels);

} // namespace tpc::report

#endif // TPC_REPORT_HPP
