#include "support.hpp"

#include <cmath>
#include <utility>

namespace tpc::testing {

radio::RadioModel hallModel()
{
    radio::RadioModel m;
    m.pl0 = 39.87;
    m.n = 1.78;
    m.gainTotal = 3.0 + 2.15;
    m.marginTotal = 7.0 + 5.0 + 0.0;
    m.thld = -68.0;
    m.pMin = -5.0;
    m.pMax = 7.0;
    m.deltaP = 1.0;
    m.apHeight = 2.0;
    m.rxHeight = 1.4;
    return m;
}

geometry::Environment emptyEnv(double xMax, double yMax, double gs)
{
    geometry::Environment env;
    env.xMax = xMax;
    env.yMax = yMax;
    env.gs = gs;
    return env;
}

geometry::Obstacle rack(double x, double y, geometry::Orientation o, double lossDb)
{
    return {x, y, 20.0, 3.0, 9.0, o, lossDb};
}

experiments::Scenario randomScenario(Rng& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> apCount(2, 6);
    std::uniform_int_distribution<int> rackCount(0, 3);

    experiments::Scenario s;
    s.env = emptyEnv(std::round(12.0 + 28.0 * u(rng)), std::round(8.0 + 16.0 * u(rng)), u(rng) < 0.7 ? 1.0 : 2.0);
    s.model = hallModel();
    s.model.pMin = -8.0 + std::round(6.0 * u(rng));
    s.model.deltaP = u(rng) < 0.5 ? 1.0 : 2.0;
    s.model.pMax = s.model.pMin + s.model.deltaP * std::uniform_int_distribution<int>(1, 6)(rng);

    const int aps = apCount(rng);
    for (int j = 0; j < aps; ++j)
        s.env.aps.push_back({s.env.xMin + u(rng) * (s.env.xMax - s.env.xMin),
                             s.env.yMin + u(rng) * (s.env.yMax - s.env.yMin)});

    const int racks = rackCount(rng);
    for (int k = 0, tries = 0; k < racks && tries < 1000; ++tries) {
        geometry::Obstacle o;
        o.orientation = u(rng) < 0.5 ? geometry::Orientation::Horizontal : geometry::Orientation::Vertical;
        o.length = 3.0 + 7.0 * u(rng);
        o.width = 1.0 + 2.0 * u(rng);
        o.height = u(rng) < 0.3 ? 1.5 : 9.0;
        o.lossDb = 3.0 + 8.0 * u(rng);
        o.x = s.env.xMin + u(rng) * (s.env.xMax - s.env.xMin);
        o.y = s.env.yMin + u(rng) * (s.env.yMax - s.env.yMin);
        if (!s.env.encloses(o))
            continue;
        s.env.obstacles.push_back(o);
        ++k;
    }
    s.ga.seed = rng();
    return s;
}

radio::PowerVector randomLevels(Rng& rng, int apCount, int levelCount)
{
    std::uniform_int_distribution<int> draw(0, levelCount);
    radio::PowerVector v(static_cast<std::size_t>(apCount));
    for (auto& l : v)
        l = draw(rng);
    return v;
}

double directRxPower(const geometry::Environment& env, const radio::RadioModel& model, const geometry::GridPoint& gp,
                     int ap, int level)
{
    const auto& a = env.aps[static_cast<std::size_t>(ap)];
    const double d = std::sqrt((gp.x - a.x) * (gp.x - a.x) + (gp.y - a.y) * (gp.y - a.y) +
                               (model.rxHeight - model.apHeight) * (model.rxHeight - model.apHeight));
    double ol = 0.0;
    for (const auto& o : env.obstacles) {
        if (geometry::losBlocked({a.x, a.y, model.apHeight}, {gp.x, gp.y, model.rxHeight}, o))
            ol += o.lossDb;
    }
    const double tx = model.pMin + (level - 1) * model.deltaP;
    return tx + model.gainTotal - model.marginTotal - (model.pl0 + 10.0 * model.n * std::log10(std::max(d, 1.0)) + ol);
}

namespace {

std::pair<int, double> directInterference(const experiments::Scenario& s, const radio::PowerVector& levels,
                                          int& eligible)
{
    const auto points = geometry::buildGrid(s.env);
    int covered = 0;
    double sum = 0.0;
    eligible = 0;
    for (const auto& gp : points) {
        if (!gp.eligible())
            continue;
        ++eligible;
        int best = -1;
        double bestRx = 0.0;
        std::vector<double> rx(levels.size(), 0.0);
        for (std::size_t j = 0; j < levels.size(); ++j) {
            if (levels[j] == 0)
                continue;
            rx[j] = directRxPower(s.env, s.model, gp, static_cast<int>(j), levels[j]);
            if (best < 0 || rx[j] > bestRx) {
                best = static_cast<int>(j);
                bestRx = rx[j];
            }
        }
        if (best < 0)
            continue;
        // Connected but uncovered GPs still sense interference.
        if (bestRx >= s.model.thld)
            ++covered;
        for (std::size_t j = 0; j < levels.size(); ++j) {
            if (levels[j] != 0 && static_cast<int>(j) != best)
                sum += std::pow(10.0, rx[j] / 10.0);
        }
    }
    return {covered, sum};
}

} // namespace

DirectEval directEvaluate(const experiments::Scenario& s, const radio::PowerVector& levels)
{
    DirectEval out;
    const auto [covered, sum] = directInterference(s, levels, out.eligible);
    const int top = s.model.levelCount();
    int eligible = 0;
    const auto ref = directInterference(s, radio::PowerVector(levels.size(), top), eligible).second;
    out.covered = covered;
    out.interferenceMw = sum;
    out.objectivePct = ref > 0.0 ? 100.0 * sum / ref : 0.0;
    return out;
}

} // namespace tpc::testing
