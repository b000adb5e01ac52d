#include "tpc/config.hpp"

#include "tpc/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>

namespace tpc::config {

namespace {

using nlohmann::json;

class Node {
public:
    Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

    const std::string& path() const { return path_; }
    const json& raw() const { return j_; }

    void requireObject() const
    {
        if (!j_.is_object())
            throw ConfigError("expected an object", path_);
    }

    void allowOnly(std::initializer_list<const char*> keys) const
    {
        requireObject();
        for (const auto& [key, value] : j_.items()) {
            bool known = false;
            for (const char* k : keys)
                known = known || key == k;
            if (!known)
                throw ConfigError("unknown key", child(key));
        }
    }

    bool has(const char* key) const { return j_.contains(key); }
    Node at(const char* key) const
    {
        if (!j_.contains(key))
            throw ConfigError("missing required field", child(key));
        return {j_.at(key), child(key)};
    }

    double number(const char* key) const { return at(key).asNumber(); }
    double number(const char* key, double fallback) const { return has(key) ? number(key) : fallback; }

    double asNumber() const
    {
        if (!j_.is_number())
            throw ConfigError("expected a number", path_);
        return j_.get<double>();
    }

    long long integer(const char* key, long long fallback) const
    {
        if (!has(key))
            return fallback;
        const Node n = at(key);
        if (!n.j_.is_number_integer())
            throw ConfigError("expected an integer", n.path_);
        return n.j_.get<long long>();
    }

    std::uint64_t seed(const char* key, std::uint64_t fallback) const
    {
        if (!has(key))
            return fallback;
        const Node n = at(key);
        if (n.j_.is_number_unsigned())
            return n.j_.get<std::uint64_t>();
        if (n.j_.is_number_integer() && n.j_.get<long long>() >= 0)
            return static_cast<std::uint64_t>(n.j_.get<long long>());
        throw ConfigError("expected a non-negative integer", n.path_);
    }

    bool boolean(const char* key, bool fallback) const
    {
        if (!has(key))
            return fallback;
        const Node n = at(key);
        if (!n.j_.is_boolean())
            throw ConfigError("expected true or false", n.path_);
        return n.j_.get<bool>();
    }

    std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

private:
    const json& j_;
    std::string path_;
};

geometry::Environment parseEnvironment(const Node& n)
{
    n.allowOnly({"xMin", "yMin", "xMax", "yMax", "gs"});
    geometry::Environment env;
    env.xMin = n.number("xMin");
    env.yMin = n.number("yMin");
    env.xMax = n.number("xMax");
    env.yMax = n.number("yMax");
    env.gs = n.number("gs");
    return env;
}

radio::RadioModel parseRadio(const Node& n)
{
    n.allowOnly({"pl0", "n", "gainAp", "gainRx", "marginShadowing", "marginFading", "marginInterference", "thld",
                 "pMin", "pMax", "deltaP", "apHeight", "rxHeight"});
    radio::RadioModel m;
    m.pl0 = n.number("pl0");
    m.n = n.number("n");
    m.gainTotal = n.number("gainAp") + n.number("gainRx");
    m.marginTotal = n.number("marginShadowing") + n.number("marginFading") + n.number("marginInterference");
    m.thld = n.number("thld");
    m.pMin = n.number("pMin");
    m.pMax = n.number("pMax");
    m.deltaP = n.number("deltaP");
    m.apHeight = n.number("apHeight");
    m.rxHeight = n.number("rxHeight");
    return m;
}

std::vector<geometry::Point2> parseAps(const Node& n, const geometry::Environment& env)
{
    if (n.raw().is_array()) {
        std::vector<geometry::Point2> aps;
        for (std::size_t i = 0; i < n.raw().size(); ++i) {
            const Node ap(n.raw()[i], n.path() + "[" + std::to_string(i) + "]");
            ap.allowOnly({"x", "y"});
            aps.push_back({ap.number("x"), ap.number("y")});
        }
        return aps;
    }
    n.allowOnly({"spacing", "spacingX", "spacingY"});
    if (n.has("spacing")) {
        if (n.has("spacingX") || n.has("spacingY"))
            throw ConfigError("give either spacing or spacingX/spacingY", n.path());
        return experiments::gridPlaceAps(env, n.number("spacing"));
    }
    return experiments::gridPlaceAps(env, n.number("spacingX"), n.number("spacingY"));
}

geometry::Orientation parseOrientation(const Node& n)
{
    if (n.raw() == "horizontal")
        return geometry::Orientation::Horizontal;
    if (n.raw() == "vertical")
        return geometry::Orientation::Vertical;
    throw ConfigError("expected \"horizontal\" or \"vertical\"", n.path());
}

void parseGa(const Node& n, ga::GaConfig& cfg)
{
    n.allowOnly({"populationSize", "elitismRate", "crossoverRate", "mutationRate", "stopIterations"});
    cfg.populationSize = static_cast<int>(n.integer("populationSize", cfg.populationSize));
    cfg.elitismRate = n.number("elitismRate", cfg.elitismRate);
    cfg.crossoverRate = n.number("crossoverRate", cfg.crossoverRate);
    cfg.mutationRate = n.number("mutationRate", cfg.mutationRate);
    cfg.stopIterations = static_cast<int>(n.integer("stopIterations", cfg.stopIterations));
}

experiments::Scenario build(const json& doc)
{
    const Node root(doc, "");
    root.allowOnly({"environment", "radio", "aps", "obstacles", "ga", "mu", "seed"});

    experiments::Scenario s;
    s.env = parseEnvironment(root.at("environment"));
    s.model = parseRadio(root.at("radio"));
    s.env.validate();
    s.env.aps = parseAps(root.at("aps"), s.env);
    if (root.has("ga"))
        parseGa(root.at("ga"), s.ga);
    s.ga.mu = root.number("mu", 1.0);
    s.ga.seed = root.seed("seed", 1);

    std::optional<experiments::RackSpec> generated;
    if (root.has("obstacles")) {
        const Node obs = root.at("obstacles");
        if (obs.raw().is_array()) {
            for (std::size_t i = 0; i < obs.raw().size(); ++i) {
                const Node o(obs.raw()[i], obs.path() + "[" + std::to_string(i) + "]");
                o.allowOnly({"x", "y", "length", "width", "height", "lossDb", "orientation"});
                geometry::Obstacle rack;
                rack.x = o.number("x");
                rack.y = o.number("y");
                rack.length = o.number("length");
                rack.width = o.number("width");
                rack.height = o.number("height");
                rack.lossDb = o.number("lossDb");
                rack.orientation = o.has("orientation") ? parseOrientation(o.at("orientation"))
                                                        : geometry::Orientation::Horizontal;
                s.env.obstacles.push_back(rack);
            }
        } else {
            obs.allowOnly({"count", "dims", "lossDb", "seed", "requireFeasible"});
            experiments::RackSpec spec;
            spec.count = static_cast<int>(obs.integer("count", 0));
            if (spec.count < 0)
                throw ConfigError("count must be non-negative", obs.child("count"));
            if (obs.has("dims")) {
                const Node dims = obs.at("dims");
                if (!dims.raw().is_array() || dims.raw().size() != 3)
                    throw ConfigError("expected [length, width, height]", dims.path());
                spec.length = Node(dims.raw()[0], dims.path() + "[0]").asNumber();
                spec.width = Node(dims.raw()[1], dims.path() + "[1]").asNumber();
                spec.height = Node(dims.raw()[2], dims.path() + "[2]").asNumber();
            }
            spec.lossDb = obs.number("lossDb", spec.lossDb);
            spec.seed = obs.seed("seed", s.ga.seed);
            spec.requireFeasibleAtFullPower = obs.boolean("requireFeasible", false);
            generated = spec;
        }
    }

    s.validate();
    if (generated)
        s = experiments::generateObstructedScenario(s, *generated);
    return s;
}

} // namespace

experiments::Scenario parseScenario(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what(), "");
    }
    return build(doc);
}

experiments::Scenario loadScenario(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file " + path.string(), "");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseScenario(buf.str());
}

std::string defaultScenarioText()
{
    return R"({
  "environment": {"xMin": 0, "yMin": 0, "xMax": 102, "yMax": 24, "gs": 1},
  "radio": {
    "pl0": 39.87, "n": 1.78,
    "gainAp": 3, "gainRx": 2.15,
    "marginShadowing": 7, "marginFading": 5, "marginInterference": 0,
    "thld": -68,
    "pMin": -5, "pMax": 7, "deltaP": 1,
    "apHeight": 2, "rxHeight": 1.4
  },
  "aps": {"spacing": 30},
  "obstacles": [],
  "ga": {"populationSize": 60, "elitismRate": 0.04, "crossoverRate": 0.7, "mutationRate": 0.4, "stopIterations": 50},
  "mu": 1.0,
  "seed": 1
}
)";
}

} // namespace tpc::config
