#ifndef TPC_TABLES_HPP
#define TPC_TABLES_HPP

#include "tpc/geometry.hpp"
#include "tpc/radio.hpp"

#include <cstddef>
#include <vector>

namespace tpc::tables {

inline constexpr std::size_t kDefaultMemoryCapBytes = std::size_t{2} << 30;

// Rectangle of grid columns [ix0, ix1] x rows [iy0, iy1]; empty when
// ix0 > ix1 or iy0 > iy1.
struct GridWindow {
    int ix0 = 0;
    int ix1 = -1;
    int iy0 = 0;
    int iy1 = -1;
    int ny = 0;

    bool empty() const noexcept { return ix0 > ix1 || iy0 > iy1; }

    // Visits grid positions in increasing (lexicographic) order.
    template <typename Fn>
    void forEach(Fn&& fn) const
    {
        for (int ix = ix0; ix <= ix1; ++ix) {
            const int base = ix * ny;
            for (int iy = iy0; iy <= iy1; ++iy)
                fn(base + iy);
        }
    }

    std::vector<int> positions() const;
};

// Axis-aligned square of half-side `halfSide` centred at `center`, clipped to
// the grid. Always contains every GP whose planar offset from the centre is
// within halfSide on both axes.
GridWindow squareWindow(const geometry::Grid& grid, const geometry::Point2& center, double halfSide);

struct LookupTables {
    std::size_t apCount = 0;
    std::vector<double> dMaxByLevel;    // index = level, entry 0 is 0 m
    std::vector<double> obstacleLoss;   // row per grid position, one column per AP

    // Received power per (GP, AP, level), dBm and mW side by side. Only
    // built when it fits under the memory cap; linkLevels is 0 otherwise.
    int linkLevels = 0;
    std::vector<double> rxDbm;
    std::vector<double> rxMw;

    double lossAt(int gp, int ap) const noexcept
    {
        return obstacleLoss[static_cast<std::size_t>(gp) * apCount + static_cast<std::size_t>(ap)];
    }

    bool hasLinks() const noexcept { return linkLevels > 0; }

    std::size_t linkAt(int gp, int ap, int level) const noexcept
    {
        return (static_cast<std::size_t>(gp) * apCount + static_cast<std::size_t>(ap)) *
                   static_cast<std::size_t>(linkLevels) +
               static_cast<std::size_t>(level - 1);
    }

    bool operator==(const LookupTables&) const = default;
};

std::size_t estimateBytes(std::size_t gpCount, std::size_t apCount, int levelCount) noexcept;
std::size_t estimateLinkBytes(std::size_t gpCount, std::size_t apCount, int levelCount) noexcept;

// Builds d_max per level and the dense obstacle-loss table. Throws
// ResourceError when the estimate exceeds memoryCapBytes. If the link table
// also fits, it is sized here (linkLevels set) and left for fillLinks.
LookupTables precompute(const geometry::Environment& env, const geometry::Grid& grid,
                        const radio::RadioModel& model,
                        std::size_t memoryCapBytes = kDefaultMemoryCapBytes);

// rx(gp, ap, level) must be the on-the-fly received power so that lookups
// and recomputation agree bit for bit.
template <typename Fn>
void fillLinks(LookupTables& t, std::size_t gpCount, Fn&& rx)
{
    if (!t.hasLinks())
        return;
    for (std::size_t pos = 0; pos < gpCount; ++pos) {
        for (std::size_t j = 0; j < t.apCount; ++j) {
            for (int level = 1; level <= t.linkLevels; ++level) {
                const auto at = t.linkAt(static_cast<int>(pos), static_cast<int>(j), level);
                t.rxDbm[at] = rx(static_cast<int>(pos), static_cast<int>(j), level);
                t.rxMw[at] = radio::dbmToMw(t.rxDbm[at]);
            }
        }
    }
}

// GPs inside the d_max(level) square around an AP (half-side d_max, padded
// by a relative 1e-9 so rounding can never exclude a coverable GP).
GridWindow gpCandidates(const geometry::Grid& grid, const geometry::Point2& ap, int level,
                        const LookupTables& tables);

double paddedHalfSide(double dMax) noexcept;

} // namespace tpc::tables

#endif // TPC_TABLES_HPP
