#include "dwpc/catalog.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dwpc {

namespace {

using nlohmann::ordered_json;

ChartManifold chart(std::vector<std::string> coords, std::vector<std::vector<std::string>> g,
                    std::vector<std::array<double, 2>> box) {
    std::vector<std::vector<Expr>> ge;
    for (auto& row : g) {
        std::vector<Expr> re;
        for (auto& s : row) re.push_back(parse_expr(s, coords));
        ge.push_back(std::move(re));
    }
    Box b;
    b.ranges = std::move(box);
    return ChartManifold::make(std::move(coords), std::move(ge), std::move(b));
}

DwpSpec make_spec(std::string id, ChartManifold base, ChartManifold fiber, const std::string& h,
                  const std::string& f, PSide side, std::vector<std::string> p) {
    DwpSpec s;
    s.id = std::move(id);
    s.base = std::move(base);
    s.fiber = std::move(fiber);
    s.h = parse_expr(h, s.base.coords);
    s.f = parse_expr(f, s.fiber.coords);
    s.side = side;
    if (side != PSide::None) {
        const auto& coords = side == PSide::Base ? s.base.coords : s.fiber.coords;
        for (auto& comp : p) s.p.components.push_back(parse_expr(comp, coords));
    }
    return s;
}

}  // namespace

const std::vector<DwpSpec>& builtin_catalog() {
    static const std::vector<DwpSpec> specs = [] {
        std::vector<DwpSpec> v;

        v.push_back(make_spec("trivial-product",
                              chart({"x1"}, {{"1"}}, {{-1.0, 1.0}}),
                              chart({"y1"}, {{"1"}}, {{-1.0, 1.0}}),
                              "1", "1", PSide::None, {}));

        v.push_back(make_spec("hyperbolic-plane",
                              chart({"t"}, {{"1"}}, {{-1.0, 1.0}}),
                              chart({"u1"}, {{"1"}}, {{-1.0, 1.0}}),
                              "exp(t)", "1", PSide::Base, {"0"}));

        v.push_back(make_spec(
            "generic-pb",
            chart({"x1", "x2"}, {{"1", "0"}, {"0", "1"}}, {{-1.0, 1.0}, {-1.0, 1.0}}),
            chart({"y1", "y2"}, {{"1", "0"}, {"0", "1"}}, {{-1.0, 1.0}, {-1.0, 1.0}}),
            "1 + (x1^2 + x2^2)/8", "1 + (y1^2 + y2^2)/8", PSide::Base, {"1", "0"}));

        v.push_back(make_spec(
            "generic-pf",
            chart({"x1", "x2"}, {{"1", "0"}, {"0", "1"}}, {{-1.0, 1.0}, {-1.0, 1.0}}),
            chart({"y1", "y2"}, {{"1", "0"}, {"0", "1"}}, {{-1.0, 1.0}, {-1.0, 1.0}}),
            "1 + (x1^2 + x2^2)/8", "1 + (y1^2 + y2^2)/8", PSide::Fiber, {"1", "0"}));

        v.push_back(make_spec(
            "interval-sphere",
            chart({"t"}, {{"1"}}, {{-1.0, 1.0}}),
            chart({"theta", "phi"}, {{"1", "0"}, {"0", "sin(theta)^2"}},
                  {{0.4, 2.7}, {0.2, 6.0}}),
            "2 + tanh(t)", "1", PSide::Base, {"1"}));

        v.push_back(make_spec(
            "interval-sphere-warped",
            chart({"t"}, {{"1"}}, {{-1.0, 1.0}}),
            chart({"theta", "phi"}, {{"1", "0"}, {"0", "sin(theta)^2"}},
                  {{0.4, 2.7}, {0.2, 6.0}}),
            "2 + tanh(t)", "1 + cos(theta)/4", PSide::Base, {"1"}));

        // unit two-sphere as the warped product of an interval and a circle
        v.push_back(make_spec("round-sphere",
                              chart({"t"}, {{"1"}}, {{0.4, 2.7}}),
                              chart({"phi"}, {{"1"}}, {{0.2, 6.0}}),
                              "sin(t)", "1", PSide::None, {}));

        return v;
    }();
    return specs;
}

SuiteConfig default_config() {
    SuiteConfig cfg;
    cfg.manifolds = builtin_catalog();
    return cfg;
}

// ---------------------------------------------------------------------------
// config (de)serialization
// ---------------------------------------------------------------------------

namespace {

ChartManifold chart_from_json(const ordered_json& j) {
    std::vector<std::string> coords = j.at("coords").get<std::vector<std::string>>();
    std::vector<std::vector<Expr>> g;
    for (const auto& row : j.at("metric")) {
        std::vector<Expr> re;
        for (const auto& cell : row) re.push_back(parse_expr(cell.get<std::string>(), coords));
        g.push_back(std::move(re));
    }
    Box b;
    for (const auto& r : j.at("box"))
        b.ranges.push_back({r.at(0).get<double>(), r.at(1).get<double>()});
    return ChartManifold::make(std::move(coords), std::move(g), std::move(b));
}

ordered_json chart_to_json(const ChartManifold& m) {
    ordered_json j;
    j["coords"] = m.coords;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < m.dim(); ++k) row.push_back(m.g(i, k).str(m.coords));
        rows.push_back(std::move(row));
    }
    j["metric"] = std::move(rows);
    ordered_json box = ordered_json::array();
    for (const auto& r : m.box.ranges) box.push_back(ordered_json::array({r[0], r[1]}));
    j["box"] = std::move(box);
    return j;
}

DwpSpec spec_from_json(const ordered_json& j) {
    DwpSpec s;
    s.id = j.at("id").get<std::string>();
    s.base = chart_from_json(j.at("base"));
    s.fiber = chart_from_json(j.at("fiber"));
    s.h = parse_expr(j.at("h").get<std::string>(), s.base.coords);
    s.f = parse_expr(j.at("f").get<std::string>(), s.fiber.coords);
    s.side = PSide::None;
    if (j.contains("p")) {
        std::string side = j.at("p").at("side").get<std::string>();
        if (side == "base")
            s.side = PSide::Base;
        else if (side == "fiber")
            s.side = PSide::Fiber;
        else if (side != "none")
            throw ConfigError("p.side must be base, fiber, or none");
        if (s.side != PSide::None) {
            const auto& coords = s.side == PSide::Base ? s.base.coords : s.fiber.coords;
            for (const auto& comp : j.at("p").at("components"))
                s.p.components.push_back(parse_expr(comp.get<std::string>(), coords));
        }
    }
    return s;
}

ordered_json spec_to_json(const DwpSpec& s) {
    ordered_json j;
    j["id"] = s.id;
    j["base"] = chart_to_json(s.base);
    j["fiber"] = chart_to_json(s.fiber);
    j["h"] = s.h.str(s.base.coords);
    j["f"] = s.f.str(s.fiber.coords);
    ordered_json p;
    p["side"] = s.side == PSide::Base ? "base" : s.side == PSide::Fiber ? "fiber" : "none";
    if (s.side != PSide::None) {
        const auto& coords = s.side == PSide::Base ? s.base.coords : s.fiber.coords;
        ordered_json comps = ordered_json::array();
        for (const auto& c : s.p.components) comps.push_back(c.str(coords));
        p["components"] = std::move(comps);
    }
    j["p"] = std::move(p);
    return j;
}

}  // namespace

SuiteConfig parse_config(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    try {
        SuiteConfig cfg;
        for (const auto& m : j.at("manifolds")) cfg.manifolds.push_back(spec_from_json(m));
        if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("identities")) {
            const auto& f = j.at("identities");
            if (f.contains("include")) cfg.include = f.at("include").get<std::vector<std::string>>();
            if (f.contains("exclude")) cfg.exclude = f.at("exclude").get<std::vector<std::string>>();
        }
        if (j.contains("tolerances"))
            for (const auto& [k, v] : j.at("tolerances").items())
                cfg.tolerances[k] = v.get<double>();
        if (j.contains("output")) {
            const auto& o = j.at("output");
            if (o.contains("path")) cfg.out_path = o.at("path").get<std::string>();
            if (o.contains("format")) cfg.format = o.at("format").get<std::string>();
        }
        if (cfg.samples <= 0) throw ConfigError("samples must be positive");
        return cfg;
    } catch (const ConfigError&) {
        throw;
    } catch (const ParseError& e) {
        throw ConfigError(std::string("config expression error: ") + e.what());
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config error: ") + e.what());
    }
}

SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("file not found: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_to_json(const SuiteConfig& cfg) {
    ordered_json j;
    j["schema_version"] = 1;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    ordered_json ms = ordered_json::array();
    for (const auto& s : cfg.manifolds) ms.push_back(spec_to_json(s));
    j["manifolds"] = std::move(ms);
    j["identities"] = {{"include", cfg.include}, {"exclude", cfg.exclude}};
    ordered_json tols = ordered_json::object();
    for (const auto& [k, v] : cfg.tolerances) tols[k] = v;
    j["tolerances"] = std::move(tols);
    j["output"] = {{"path", cfg.out_path}, {"format", cfg.format}};
    return j.dump(2) + "\n";
}

}  // namespace dwpc
