#include "tpc/tables.hpp"

#include "tpc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tpc::tables {

std::vector<int> GridWindow::positions() const
{
    std::vector<int> out;
    if (!empty())
        out.reserve(static_cast<std::size_t>(ix1 - ix0 + 1) * static_cast<std::size_t>(iy1 - iy0 + 1));
    forEach([&](int pos) { out.push_back(pos); });
    return out;
}

double paddedHalfSide(double dMax) noexcept
{
    return dMax * (1.0 + 1e-9) + 1e-9;
}

GridWindow squareWindow(const geometry::Grid& grid, const geometry::Point2& center, double halfSide)
{
    GridWindow w;
    w.ny = grid.ny();
    if (!(halfSide > 0.0))
        return w;
    const double gs = grid.gs();
    const double lo = std::ceil((center.x - halfSide - grid.xMin()) / gs);
    const double hi = std::floor((center.x + halfSide - grid.xMin()) / gs);
    const double bottom = std::ceil((center.y - halfSide - grid.yMin()) / gs);
    const double top = std::floor((center.y + halfSide - grid.yMin()) / gs);
    w.ix0 = static_cast<int>(std::max(lo, 0.0));
    w.ix1 = static_cast<int>(std::min(hi, static_cast<double>(grid.nx() - 1)));
    w.iy0 = static_cast<int>(std::max(bottom, 0.0));
    w.iy1 = static_cast<int>(std::min(top, static_cast<double>(grid.ny() - 1)));
    return w;
}

std::size_t estimateBytes(std::size_t gpCount, std::size_t apCount, int levelCount) noexcept
{
    return gpCount * apCount * sizeof(double) + static_cast<std::size_t>(levelCount + 1) * sizeof(double);
}

std::size_t estimateLinkBytes(std::size_t gpCount, std::size_t apCount, int levelCount) noexcept
{
    return gpCount * apCount * static_cast<std::size_t>(std::max(levelCount, 0)) * 2 * sizeof(double);
}

LookupTables precompute(const geometry::Environment& env, const geometry::Grid& grid,
                        const radio::RadioModel& model, std::size_t memoryCapBytes)
{
    const std::size_t apCount = env.aps.size();
    const int levels = model.levelCount();
    const std::size_t required = estimateBytes(grid.size(), apCount, levels);
    if (required > memoryCapBytes) {
        throw ResourceError("lookup tables need " + std::to_string(required) + " bytes, cap is " +
                                std::to_string(memoryCapBytes),
                            required);
    }

    LookupTables t;
    t.apCount = apCount;
    t.dMaxByLevel.resize(static_cast<std::size_t>(levels) + 1);
    for (int level = 0; level <= levels; ++level)
        t.dMaxByLevel[static_cast<std::size_t>(level)] = radio::maxCoverageDistance(level, model);

    const std::size_t links = estimateLinkBytes(grid.size(), apCount, levels);
    if (links <= memoryCapBytes - required) {
        t.linkLevels = levels;
        t.rxDbm.assign(links / (2 * sizeof(double)), 0.0);
        t.rxMw.assign(t.rxDbm.size(), 0.0);
    }

    t.obstacleLoss.assign(grid.size() * apCount, 0.0);
    if (env.obstacles.empty())
        return t;

    for (std::size_t pos = 0; pos < grid.size(); ++pos) {
        const auto& gp = grid[pos];
        const geometry::Point3 rx{gp.x, gp.y, model.rxHeight};
        for (std::size_t j = 0; j < apCount; ++j) {
            const geometry::Point3 top{env.aps[j].x, env.aps[j].y, model.apHeight};
            t.obstacleLoss[pos * apCount + j] = geometry::obstacleLoss(top, rx, env.obstacles);
        }
    }
    return t;
}

GridWindow gpCandidates(const geometry::Grid& grid, const geometry::Point2& ap, int level,
                        const LookupTables& tables)
{
    return squareWindow(grid, ap, paddedHalfSide(tables.dMaxByLevel[static_cast<std::size_t>(level)]));
}

} // namespace tpc::tables
