#include "tpc/radio.hpp"

#include "tpc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tpc::radio {

int RadioModel::levelCount() const
{
    return 1 + static_cast<int>(std::lround((pMax - pMin) / deltaP));
}

double RadioModel::txDbm(int level) const
{
    if (level < 1 || level > levelCount())
        throw std::out_of_range("power level " + std::to_string(level) + " has no transmit power");
    return pMin + (level - 1) * deltaP;
}

void RadioModel::validate() const
{
    if (!(n > 0.0))
        throw ConfigError("path loss exponent must be positive", "radio.n");
    if (!(deltaP > 0.0))
        throw ConfigError("power step must be positive", "radio.deltaP");
    if (!(pMax >= pMin))
        throw ConfigError("pMax must not be below pMin", "radio.pMax");
    const double steps = (pMax - pMin) / deltaP;
    if (std::abs(steps - std::round(steps)) > 1e-9)
        throw ConfigError("(pMax - pMin) must be a whole number of power steps", "radio.deltaP");
    if (!(apHeight >= 0.0))
        throw ConfigError("AP height must be non-negative", "radio.apHeight");
    if (!(rxHeight >= 0.0))
        throw ConfigError("Rx height must be non-negative", "radio.rxHeight");
}

double dbmToMw(double dbm) noexcept
{
    return std::pow(10.0, dbm / 10.0);
}

double mwToDbm(double mw) noexcept
{
    return 10.0 * std::log10(mw);
}

double pathLoss(double distance, double obstacleLossDb, const RadioModel& model) noexcept
{
    return model.pl0 + 10.0 * model.n * std::log10(std::max(distance, 1.0)) + obstacleLossDb;
}

double receivedPower(int level, double distance, double obstacleLossDb, const RadioModel& model)
{
    return model.txDbm(level) + model.gainTotal - model.marginTotal - pathLoss(distance, obstacleLossDb, model);
}

double maxCoverageDistance(int level, const RadioModel& model)
{
    if (level == 0)
        return 0.0;
    const double budget = model.txDbm(level) + model.gainTotal - model.marginTotal - model.thld - model.pl0;
    return std::pow(10.0, budget / (10.0 * model.n));
}

bool validLevels(const PowerVector& levels, int levelCount) noexcept
{
    return std::all_of(levels.begin(), levels.end(), [&](int l) { return l >= 0 && l <= levelCount; });
}

} // namespace tpc::radio
