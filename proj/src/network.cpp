#include "tpc/network.hpp"

#include "tpc/errors.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace tpc::radio {

int requiredCovered(double mu, std::size_t eligibleCount)
{
    // mu * N is often a hair above an integer (0.9 * 100); do not round it up.
    return static_cast<int>(std::ceil(mu * static_cast<double>(eligibleCount) - 1e-9));
}

Network::Network(geometry::Environment env, RadioModel model, EvalMode mode, std::size_t memoryCapBytes)
    : env_(std::move(env)), model_(model), mode_(mode), grid_(env_), levelCount_(0)
{
    model_.validate();
    if (env_.aps.empty())
        throw ConfigError("at least one AP is required", "aps");
    levelCount_ = model_.levelCount();

    if (mode_ == EvalMode::Fast) {
        auto t = tables::precompute(env_, grid_, model_, memoryCapBytes);
        tables::fillLinks(t, grid_.size(), [&](int gp, int ap, int level) {
            return receivedPower(level, distance(gp, ap), t.lossAt(gp, ap), model_);
        });
        tables_ = std::move(t);
    }

    eligible_.reserve(grid_.eligibleCount());
    for (std::size_t pos = 0; pos < grid_.size(); ++pos) {
        if (grid_[pos].eligible())
            eligible_.push_back(static_cast<int>(pos));
    }

    referenceMw_ = totalInterference(connect(fullPower()));
}

geometry::Point3 Network::apTop(int ap) const noexcept
{
    const auto& p = env_.aps[static_cast<std::size_t>(ap)];
    return {p.x, p.y, model_.apHeight};
}

geometry::Point3 Network::rxTop(int gp) const noexcept
{
    const auto& p = grid_[static_cast<std::size_t>(gp)];
    return {p.x, p.y, model_.rxHeight};
}

double Network::distance(int gp, int ap) const noexcept
{
    const auto& g = grid_[static_cast<std::size_t>(gp)];
    const auto& a = env_.aps[static_cast<std::size_t>(ap)];
    const double dx = g.x - a.x;
    const double dy = g.y - a.y;
    const double dz = model_.rxHeight - model_.apHeight;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double Network::planarDistanceSq(int gp, int ap) const noexcept
{
    const auto& g = grid_[static_cast<std::size_t>(gp)];
    const auto& a = env_.aps[static_cast<std::size_t>(ap)];
    const double dx = g.x - a.x;
    const double dy = g.y - a.y;
    return dx * dx + dy * dy;
}

double Network::obstacleLoss(int gp, int ap) const noexcept
{
    if (tables_)
        return tables_->lossAt(gp, ap);
    return geometry::obstacleLoss(apTop(ap), rxTop(gp), env_.obstacles);
}

double Network::dMax(int level) const
{
    if (tables_)
        return tables_->dMaxByLevel.at(static_cast<std::size_t>(level));
    return maxCoverageDistance(level, model_);
}

double Network::rxPower(int gp, int ap, int level) const
{
    if (tables_ && tables_->hasLinks() && level >= 1 && level <= levelCount_)
        return tables_->rxDbm[tables_->linkAt(gp, ap, level)];
    return receivedPower(level, distance(gp, ap), obstacleLoss(gp, ap), model_);
}

bool Network::covers(int gp, int ap, int level) const
{
    if (level < 1)
        return false;
    if (tables_) {
        const double half = tables::paddedHalfSide(tables_->dMaxByLevel[static_cast<std::size_t>(level)]);
        const auto& g = grid_[static_cast<std::size_t>(gp)];
        const auto& a = env_.aps[static_cast<std::size_t>(ap)];
        if (std::abs(g.x - a.x) > half || std::abs(g.y - a.y) > half)
            return false;
    }
    return rxPower(gp, ap, level) >= model_.thld;
}

CoverageState Network::connect(const PowerVector& levels) const
{
    const std::size_t n = grid_.size();
    CoverageState state;
    state.bestRxDbm.assign(n, -std::numeric_limits<double>::infinity());
    state.connectedAp.assign(n, kNoAp);
    state.covered.assign(n, 0);
    state.interferenceMw.assign(n, 0.0);
    state.eligibleCount = eligible_.size();

    std::vector<std::pair<int, int>> on;
    for (int j = 0; j < apCount(); ++j) {
        if (levels[static_cast<std::size_t>(j)] > 0)
            on.emplace_back(j, levels[static_cast<std::size_t>(j)]);
    }
    if (on.empty())
        return state;

    const bool linked = tables_ && tables_->hasLinks();
    std::vector<double> power(on.size());
    std::vector<double> mw(on.size());
    for (int pos : eligible_) {
        std::size_t best = 0;
        for (std::size_t k = 0; k < on.size(); ++k) {
            if (linked) {
                const auto at = tables_->linkAt(pos, on[k].first, on[k].second);
                power[k] = tables_->rxDbm[at];
                mw[k] = tables_->rxMw[at];
            } else {
                power[k] = rxPower(pos, on[k].first, on[k].second);
                mw[k] = dbmToMw(power[k]);
            }
            if (power[k] > power[best])
                best = k;
        }
        double interference = 0.0;
        for (std::size_t k = 0; k < on.size(); ++k) {
            if (k != best)
                interference += mw[k];
        }
        const auto p = static_cast<std::size_t>(pos);
        state.bestRxDbm[p] = power[best];
        state.connectedAp[p] = on[best].first;
        state.interferenceMw[p] = interference;
        if (power[best] >= model_.thld) {
            state.covered[p] = 1;
            ++state.coveredCount;
        }
    }
    return state;
}

double Network::interferenceAt(int gp, const CoverageState& state, const PowerVector& levels) const
{
    const int connected = state.connectedAp[static_cast<std::size_t>(gp)];
    double sum = 0.0;
    for (int j = 0; j < apCount(); ++j) {
        const int level = levels[static_cast<std::size_t>(j)];
        if (level > 0 && j != connected)
            sum += dbmToMw(rxPower(gp, j, level));
    }
    return sum;
}

double Network::totalInterference(const CoverageState& state) const
{
    double total = 0.0;
    for (int pos : eligible_) {
        if (state.connectedAp[static_cast<std::size_t>(pos)] != kNoAp)
            total += state.interferenceMw[static_cast<std::size_t>(pos)];
    }
    return total;
}

Feasibility Network::feasible(const PowerVector& levels, double mu) const
{
    const auto state = connect(levels);
    const int need = requiredCovered(mu, state.eligibleCount);
    const int shortfall = std::max(0, need - static_cast<int>(state.coveredCount));
    return {shortfall == 0, shortfall};
}

Evaluation Network::evaluate(const PowerVector& levels, double mu) const
{
    const auto state = connect(levels);
    Evaluation e;
    e.coveredCount = state.coveredCount;
    e.coverageRate = state.coverageRate();
    e.shortfall = std::max(0, requiredCovered(mu, state.eligibleCount) - static_cast<int>(state.coveredCount));
    e.interferenceMw = totalInterference(state);
    if (referenceMw_ > 0.0) {
        e.objectivePct = 100.0 * e.interferenceMw / referenceMw_;
    } else {
        e.objectivePct = 0.0;
        e.degenerate = true;
    }
    return e;
}

} // namespace tpc::radio
