#include "tpc/geometry.hpp"

#include "tpc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace tpc::geometry {

bool lexLess(const Point2& a, const Point2& b) noexcept
{
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

bool Obstacle::footprintContains(const Point2& p) const noexcept
{
    return p.x >= x && p.x <= xHi() && p.y >= y && p.y <= yHi();
}

bool Environment::contains(const Point2& p) const noexcept
{
    return p.x >= xMin && p.x <= xMax && p.y >= yMin && p.y <= yMax;
}

bool Environment::encloses(const Obstacle& o) const noexcept
{
    return o.x >= xMin && o.y >= yMin && o.xHi() <= xMax && o.yHi() <= yMax;
}

void Environment::validate() const
{
    if (!(std::isfinite(xMin) && std::isfinite(yMin) && std::isfinite(xMax) && std::isfinite(yMax)))
        throw ConfigError("bounds must be finite", "environment");
    if (!(xMax > xMin))
        throw ConfigError("xMax must exceed xMin", "environment.xMax");
    if (!(yMax > yMin))
        throw ConfigError("yMax must exceed yMin", "environment.yMax");
    if (!(gs > 0.0) || !std::isfinite(gs))
        throw ConfigError("grid size must be positive", "environment.gs");

    for (std::size_t k = 0; k < obstacles.size(); ++k) {
        const auto& o = obstacles[k];
        const std::string path = "obstacles[" + std::to_string(k) + "]";
        if (!(o.length > 0.0 && o.width > 0.0 && o.height > 0.0))
            throw ConfigError("dimensions must be positive", path);
        if (!(o.lossDb >= 0.0))
            throw ConfigError("lossDb must be non-negative", path + ".lossDb");
        if (!encloses(o))
            throw ConfigError("footprint must be enclosed in the environment", path);
    }
    for (std::size_t j = 0; j < aps.size(); ++j) {
        if (!contains(aps[j]))
            throw ConfigError("AP lies outside the environment", "aps[" + std::to_string(j) + "]");
    }
}

int cellCount(double span, double gs)
{
    const double ratio = span / gs;
    const double nearest = std::round(ratio);
    if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, nearest))
        return static_cast<int>(nearest);
    return static_cast<int>(std::ceil(ratio));
}

Grid::Grid(const Environment& env)
    : xMin_(env.xMin), yMin_(env.yMin), gs_(env.gs)
{
    env.validate();
    nx_ = cellCount(env.xMax - env.xMin, env.gs);
    ny_ = cellCount(env.yMax - env.yMin, env.gs);

    points_.reserve(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_));
    for (int ix = 0; ix < nx_; ++ix) {
        for (int iy = 0; iy < ny_; ++iy) {
            GridPoint gp;
            gp.index = static_cast<int>(points_.size()) + 1;
            gp.x = xMin_ + ix * gs_;
            gp.y = yMin_ + iy * gs_;
            const Point2 p{gp.x, gp.y};
            gp.occupiedByObstacle = std::any_of(env.obstacles.begin(), env.obstacles.end(),
                                                [&](const Obstacle& o) { return o.footprintContains(p); });
            points_.push_back(gp);
        }
    }

    apCells_.reserve(env.aps.size());
    for (const auto& ap : env.aps) {
        const int pos = position(columnOf(ap.x), rowOf(ap.y));
        points_[static_cast<std::size_t>(pos)].occupiedByAp = true;
        apCells_.push_back(pos);
    }

    eligibleCount_ = static_cast<std::size_t>(
        std::count_if(points_.begin(), points_.end(), [](const GridPoint& gp) { return gp.eligible(); }));
}

int Grid::columnOf(double x) const noexcept
{
    const int ix = static_cast<int>(std::floor((x - xMin_) / gs_ + 1e-9));
    return std::clamp(ix, 0, nx_ - 1);
}

int Grid::rowOf(double y) const noexcept
{
    const int iy = static_cast<int>(std::floor((y - yMin_) / gs_ + 1e-9));
    return std::clamp(iy, 0, ny_ - 1);
}

std::vector<GridPoint> buildGrid(const Environment& env)
{
    const Grid grid(env);
    return {grid.points().begin(), grid.points().end()};
}

bool segmentHitsBox(const Point3& a, const Point3& b, const Point3& boxLo, const Point3& boxHi) noexcept
{
    const double start[3] = {a.x, a.y, a.z};
    const double delta[3] = {b.x - a.x, b.y - a.y, b.z - a.z};
    const double lo[3] = {boxLo.x, boxLo.y, boxLo.z};
    const double hi[3] = {boxHi.x, boxHi.y, boxHi.z};

    double tEnter = 0.0;
    double tExit = 1.0;
    for (int axis = 0; axis < 3; ++axis) {
        if (delta[axis] == 0.0) {
            if (start[axis] < lo[axis] || start[axis] > hi[axis])
                return false;
            continue;
        }
        double t0 = (lo[axis] - start[axis]) / delta[axis];
        double t1 = (hi[axis] - start[axis]) / delta[axis];
        if (t0 > t1)
            std::swap(t0, t1);
        tEnter = std::max(tEnter, t0);
        tExit = std::min(tExit, t1);
        if (tEnter > tExit)
            return false;
    }
    return true;
}

bool losBlocked(const Point3& ap, const Point3& rx, const Obstacle& obstacle) noexcept
{
    return segmentHitsBox(ap, rx, Point3{obstacle.x, obstacle.y, 0.0},
                          Point3{obstacle.xHi(), obstacle.yHi(), obstacle.height});
}

double obstacleLoss(const Point3& ap, const Point3& rx, std::span<const Obstacle> obstacles) noexcept
{
    double loss = 0.0;
    for (const auto& o : obstacles) {
        if (losBlocked(ap, rx, o))
            loss += o.lossDb;
    }
    return loss;
}

} // namespace tpc::geometry
