#ifndef TPC_GEOMETRY_HPP
#define TPC_GEOMETRY_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace tpc::geometry {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Strict lexicographic order on (x, y): x first, then y.
bool lexLess(const Point2& a, const Point2& b) noexcept;

enum class Orientation { Horizontal, Vertical };

// Axis-aligned metal obstacle. The anchor is the footprint corner with the
// smallest (x, y). Horizontal racks run their length along x, vertical ones
// along y. The box spans z in [0, height].
struct Obstacle {
    double x = 0.0;
    double y = 0.0;
    double length = 0.0;
    double width = 0.0;
    double height = 0.0;
    Orientation orientation = Orientation::Horizontal;
    double lossDb = 0.0;

    double extentX() const noexcept { return orientation == Orientation::Horizontal ? length : width; }
    double extentY() const noexcept { return orientation == Orientation::Horizontal ? width : length; }
    double xHi() const noexcept { return x + extentX(); }
    double yHi() const noexcept { return y + extentY(); }

    // Inclusive footprint test.
    bool footprintContains(const Point2& p) const noexcept;
};

struct Environment {
    double xMin = 0.0;
    double yMin = 0.0;
    double xMax = 0.0;
    double yMax = 0.0;
    double gs = 1.0;
    std::vector<Obstacle> obstacles;
    std::vector<Point2> aps;

    bool contains(const Point2& p) const noexcept;
    bool encloses(const Obstacle& o) const noexcept;

    // Throws ConfigError naming the offending field.
    void validate() const;
};

struct GridPoint {
    int index = 0;  // 1-based, lexicographic
    double x = 0.0;
    double y = 0.0;
    bool occupiedByObstacle = false;
    bool occupiedByAp = false;

    bool eligible() const noexcept { return !occupiedByObstacle && !occupiedByAp; }
};

// ceil(span / gs), tolerant to representation error when span is an exact
// multiple of gs.
int cellCount(double span, double gs);

// The ordered set of grid points of an environment. Position k in points()
// holds the GP with index k + 1; with nx columns and ny rows the GP at
// column ix, row iy sits at position ix * ny + iy.
class Grid {
public:
    explicit Grid(const Environment& env);

    int nx() const noexcept { return nx_; }
    int ny() const noexcept { return ny_; }
    double gs() const noexcept { return gs_; }
    double xMin() const noexcept { return xMin_; }
    double yMin() const noexcept { return yMin_; }
    std::size_t size() const noexcept { return points_.size(); }

    std::span<const GridPoint> points() const noexcept { return points_; }
    const GridPoint& operator[](std::size_t pos) const noexcept { return points_[pos]; }

    int position(int ix, int iy) const noexcept { return ix * ny_ + iy; }
    // Column/row of the cell containing (x, y), clamped to the grid.
    int columnOf(double x) const noexcept;
    int rowOf(double y) const noexcept;

    // Positions of the GPs hosting each AP, in AP order.
    std::span<const int> apCells() const noexcept { return apCells_; }

    std::size_t eligibleCount() const noexcept { return eligibleCount_; }

private:
    double xMin_;
    double yMin_;
    double gs_;
    int nx_;
    int ny_;
    std::vector<GridPoint> points_;
    std::vector<int> apCells_;
    std::size_t eligibleCount_ = 0;
};

std::vector<GridPoint> buildGrid(const Environment& env);

// Inclusive segment / axis-aligned box intersection (parametric slab clip).
bool segmentHitsBox(const Point3& a, const Point3& b, const Point3& boxLo, const Point3& boxHi) noexcept;

// Whether `obstacle` blocks the line from the AP top to the Rx top.
bool losBlocked(const Point3& ap, const Point3& rx, const Obstacle& obstacle) noexcept;

// Summed penetration loss in dB of every obstacle blocking ap -> rx.
double obstacleLoss(const Point3& ap, const Point3& rx, std::span<const Obstacle> obstacles) noexcept;

} // namespace tpc::geometry

#endif // TPC_GEOMETRY_HPP
