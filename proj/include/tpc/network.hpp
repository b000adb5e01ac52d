#ifndef TPC_NETWORK_HPP
#define TPC_NETWORK_HPP

#include "tpc/geometry.hpp"
#include "tpc/radio.hpp"
#include "tpc/tables.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tpc::radio {

// Fast uses the precomputed d_max vector, the obstacle-loss table and the
// d_max square prefilter. Naive recomputes all three on every query. Both
// produce bit-identical results.
enum class EvalMode { Fast, Naive };

inline constexpr int kNoAp = -1;

// Per grid position; ineligible positions keep the "none" values.
struct CoverageState {
    std::vector<double> bestRxDbm;       // -inf when no AP is on
    std::vector<int> connectedAp;        // kNoAp when no AP is on
    std::vector<std::uint8_t> covered;
    std::vector<double> interferenceMw;  // 0 for unconnected positions
    std::size_t coveredCount = 0;
    std::size_t eligibleCount = 0;

    double coverageRate() const noexcept
    {
        return eligibleCount == 0 ? 0.0 : static_cast<double>(coveredCount) / static_cast<double>(eligibleCount);
    }
};

struct Evaluation {
    int shortfall = 0;
    std::size_t coveredCount = 0;
    double coverageRate = 0.0;
    double objectivePct = 0.0;     // normalized interference
    double interferenceMw = 0.0;   // absolute total at connected GPs
    bool degenerate = false;       // reference interference is zero

    double interferenceDbm() const noexcept { return mwToDbm(interferenceMw); }
    bool feasible() const noexcept { return shortfall == 0; }
};

struct Feasibility {
    bool feasible = false;
    int shortfall = 0;
};

// Number of eligible GPs that must be covered for coverage rate mu.
int requiredCovered(double mu, std::size_t eligibleCount);

// A scenario's static radio environment: grid, APs, link budget and (in fast
// mode) the lookup tables. Immutable after construction.
class Network {
public:
    Network(geometry::Environment env, RadioModel model, EvalMode mode = EvalMode::Fast,
            std::size_t memoryCapBytes = tables::kDefaultMemoryCapBytes);

    const geometry::Environment& environment() const noexcept { return env_; }
    const geometry::Grid& grid() const noexcept { return grid_; }
    const RadioModel& model() const noexcept { return model_; }
    EvalMode mode() const noexcept { return mode_; }
    const tables::LookupTables* tables() const noexcept { return tables_ ? &*tables_ : nullptr; }

    int apCount() const noexcept { return static_cast<int>(env_.aps.size()); }
    int levelCount() const noexcept { return levelCount_; }
    std::size_t eligibleCount() const noexcept { return grid_.eligibleCount(); }
    const std::vector<int>& eligiblePositions() const noexcept { return eligible_; }

    geometry::Point3 apTop(int ap) const noexcept;
    geometry::Point3 rxTop(int gp) const noexcept;
    double distance(int gp, int ap) const noexcept;
    double planarDistanceSq(int gp, int ap) const noexcept;

    double obstacleLoss(int gp, int ap) const noexcept;
    double dMax(int level) const;
    // level >= 1; throws std::out_of_range for level 0.
    double rxPower(int gp, int ap, int level) const;
    bool covers(int gp, int ap, int level) const;

    // Eligible GPs that AP `ap` might cover at `level`, in increasing order.
    // Fast mode walks the d_max square; naive mode scans the whole grid.
    template <typename Fn>
    void forEachCandidate(int ap, int level, Fn&& fn) const
    {
        if (level < 1)
            return;
        if (tables_) {
            tables::gpCandidates(grid_, env_.aps[static_cast<std::size_t>(ap)], level, *tables_)
                .forEach([&](int pos) {
                    if (grid_[static_cast<std::size_t>(pos)].eligible())
                        fn(pos);
                });
        } else {
            for (int pos : eligible_)
                fn(pos);
        }
    }

    CoverageState connect(const PowerVector& levels) const;
    double interferenceAt(int gp, const CoverageState& state, const PowerVector& levels) const;
    Feasibility feasible(const PowerVector& levels, double mu) const;
    Evaluation evaluate(const PowerVector& levels, double mu) const;

    PowerVector fullPower() const { return PowerVector(env_.aps.size(), levelCount_); }
    double referenceInterferenceMw() const noexcept { return referenceMw_; }

private:
    double totalInterference(const CoverageState& state) const;

    geometry::Environment env_;
    RadioModel model_;
    EvalMode mode_;
    geometry::Grid grid_;
    int levelCount_;
    std::optional<tables::LookupTables> tables_;
    std::vector<int> eligible_;
    double referenceMw_ = 0.0;
};

} // namespace tpc::radio

#endif // TPC_NETWORK_HPP
