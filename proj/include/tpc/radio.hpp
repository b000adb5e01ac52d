#ifndef TPC_RADIO_HPP
#define TPC_RADIO_HPP

#include <vector>

namespace tpc::radio {

// Discrete transmit power levels of every AP, in AP order. Level 0 is
// powered off; level l >= 1 transmits at pMin + (l - 1) * deltaP dBm.
using PowerVector = std::vector<int>;

// One-slope link budget parameters shared by all APs.
struct RadioModel {
    double pl0 = 39.87;       // dB at 1 m
    double n = 1.78;          // path loss exponent
    double gainTotal = 5.15;  // AP gain + Rx gain, dB
    double marginTotal = 12;  // shadowing + fading + interference margins, dB
    double thld = -68.0;      // Rx sensitivity, dBm
    double pMin = -5.0;
    double pMax = 7.0;
    double deltaP = 1.0;
    double apHeight = 2.0;
    double rxHeight = 1.4;

    // N_p: number of powered-on levels.
    int levelCount() const;
    double txDbm(int level) const;

    // Throws ConfigError.
    void validate() const;
};

double dbmToMw(double dbm) noexcept;
double mwToDbm(double mw) noexcept;

// PL0 + 10 n log10(max(d, 1)) + ol. The stochastic deviation term is not
// modelled; the shadowing margin in RadioModel::marginTotal stands for it.
double pathLoss(double distance, double obstacleLossDb, const RadioModel& model) noexcept;

// P_j + G - M - PL for a powered-on level.
double receivedPower(int level, double distance, double obstacleLossDb, const RadioModel& model);

// Largest unobstructed distance at which `level` still meets the sensitivity
// threshold; 0 for level 0.
double maxCoverageDistance(int level, const RadioModel& model);

bool validLevels(const PowerVector& levels, int levelCount) noexcept;

} // namespace tpc::radio

#endif // TPC_RADIO_HPP
