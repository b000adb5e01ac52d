#ifndef TPC_CONFIG_HPP
#define TPC_CONFIG_HPP

#include "tpc/experiments.hpp"

#include <filesystem>
#include <string>

namespace tpc::config {

// Scenario file (JSON). Top-level keys:
//
//   environment  {xMin, yMin, xMax, yMax, gs}                          required
//   radio        {pl0, n, gainAp, gainRx, marginShadowing, marginFading,
//                 marginInterference, thld, pMin, pMax, deltaP,
//                 apHeight, rxHeight}                                   required
//   aps          [{x, y}, ...]  or  {spacing}  or  {spacingX, spacingY} required
//   obstacles    [{x, y, length, width, height, lossDb, orientation}]
//                or {count, dims: [l, w, h], lossDb, seed, requireFeasible}
//   ga           {populationSize, elitismRate, crossoverRate,
//                 mutationRate, stopIterations}
//   mu, seed
//
// Unknown keys are rejected. Every failure is a ConfigError whose path names
// the offending field, e.g. "radio.deltaP" or "obstacles[2].orientation".
experiments::Scenario parseScenario(const std::string& text);
experiments::Scenario loadScenario(const std::filesystem::path& path);

// The factory-hall configuration (102 m x 24 m, four APs, no racks).
std::string defaultScenarioText();

} // namespace tpc::config

#endif // TPC_CONFIG_HPP
