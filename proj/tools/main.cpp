// dwpc: chart-based tensor calculus for doubly warped products under
// semi-symmetric metric connections, with an identity verification harness.
//
// Subcommands:
//   verify    run the identity suite over a manifold catalog
//   curvature dump oracle and closed-form values at a single point
//   catalog   list shipped manifolds and identity keys
//
// Exit codes: 0 all good, 1 identity failures, 2 usage/config errors.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dwpc/catalog.hpp"
#include "dwpc/report.hpp"

using namespace dwpc;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int samples = 0;
    std::vector<std::string> only;
    std::vector<std::string> tol_kv;
    std::string out_path;
    bool json = false;
};

SuiteConfig resolve_config(const CommonOpts& o) {
    SuiteConfig cfg = o.config_path.empty() ? default_config() : load_config(o.config_path);
    if (o.seed_set) cfg.seed = o.seed;
    if (o.samples > 0) cfg.samples = o.samples;
    if (!o.only.empty()) cfg.include = o.only;
    for (const auto& kv : o.tol_kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--tol expects KEY=VALUE, got '" + kv + "'");
        cfg.tolerances[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    if (!o.out_path.empty()) cfg.out_path = o.out_path;
    if (o.json) cfg.format = "json";
    return cfg;
}

int cmd_verify(const CommonOpts& opts) {
    SuiteConfig cfg = resolve_config(opts);
    SuiteReport report = run_suite(cfg);
    std::string body = cfg.format == "json" ? report.to_json() : report.to_text();
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) throw ConfigError("cannot write " + cfg.out_path);
        out << body;
        std::cerr << "report written to " << cfg.out_path << "\n";
    } else {
        std::cout << body;
    }
    return report.failures() == 0 ? 0 : 1;
}

ordered_json tensor_json(const TensorValue& t) {
    ordered_json a = ordered_json::array();
    for (double v : t.data()) a.push_back(v);
    return a;
}

int cmd_curvature(const CommonOpts& opts, const std::string& manifold_id,
                  const std::string& point_csv) {
    SuiteConfig cfg = resolve_config(opts);
    const DwpSpec* spec = nullptr;
    for (const auto& s : cfg.manifolds)
        if (s.id == manifold_id) spec = &s;
    if (!spec) throw ConfigError("manifold '" + manifold_id + "' not in the catalog");

    DwpModel model(*spec);
    Vec p = model.product().chart().box.center();
    if (!point_csv.empty()) {
        p.clear();
        std::string tok;
        std::istringstream ss(point_csv);
        while (std::getline(ss, tok, ',')) p.push_back(std::stod(tok));
        if (static_cast<int>(p.size()) != spec->n())
            throw ConfigError("point needs " + std::to_string(spec->n()) + " coordinates");
        if (!model.product().chart().box.contains(p))
            throw ConfigError("point is outside the domain box");
    }
    DwpPoint pt = model.at(p);

    // closed-form scalars side by side with the oracle at this point
    const Convention cv{true, true, false};
    Rng rng(derive_seed(cfg.seed, "curvature-cmd", spec->id, 0));
    ArgDraw args = draw_args(rng, spec->n1(), spec->n2());
    ordered_json forms = ordered_json::array();
    for (const auto& def : identity_registry()) {
        if (def.side != PSide::None && def.side != spec->side) continue;
        ValuePair vp = def.eval(pt, args, cv, true);
        ordered_json f;
        f["identity"] = def.key;
        if (vp.closed.size() == 1) {
            f["closed"] = vp.closed[0];
            f["oracle"] = vp.oracle[0];
        }
        f["residual"] = vp.residual();
        forms.push_back(std::move(f));
    }

    if (opts.json) {
        ordered_json j;
        j["schema_version"] = 1;
        j["manifold"] = spec->id;
        j["point"] = p;
        ordered_json g = ordered_json::array();
        for (int i = 0; i < pt.n(); ++i) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < pt.n(); ++k) row.push_back(pt.g(i, k));
            g.push_back(std::move(row));
        }
        j["metric"] = std::move(g);
        j["gamma_lc"] = tensor_json(pt.gamma_lc);
        j["gamma_ssmc"] = tensor_json(pt.gamma_sm);
        j["riemann_lc"] = tensor_json(pt.R_lc);
        j["riemann_ssmc"] = tensor_json(pt.R_sm);
        j["ricci_lc"] = tensor_json(pt.S_lc);
        j["ricci_ssmc"] = tensor_json(pt.S_sm);
        j["scalar_lc"] = pt.r_lc;
        j["scalar_ssmc"] = pt.r_sm;
        j["closed_forms"] = std::move(forms);
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::printf("manifold %s at (", spec->id.c_str());
    for (std::size_t i = 0; i < p.size(); ++i) std::printf("%s%.6g", i ? ", " : "", p[i]);
    std::printf(")\n\nmetric g_ij:\n");
    for (int i = 0; i < pt.n(); ++i) {
        for (int k = 0; k < pt.n(); ++k) std::printf(" % .10g", pt.g(i, k));
        std::printf("\n");
    }
    auto print3 = [&](const char* name, const TensorValue& t) {
        std::printf("\n%s (nonzero components):\n", name);
        for (int k = 0; k < pt.n(); ++k)
            for (int i = 0; i < pt.n(); ++i)
                for (int j = 0; j < pt.n(); ++j)
                    if (std::abs(t({k, i, j})) > 1e-14)
                        std::printf("  [%d,%d,%d] = % .10g\n", k, i, j, t({k, i, j}));
    };
    print3("Gamma (Levi-Civita)", pt.gamma_lc);
    print3("Gamma~ (semi-symmetric)", pt.gamma_sm);
    std::printf("\nRicci (Levi-Civita):\n");
    for (int i = 0; i < pt.n(); ++i) {
        for (int k = 0; k < pt.n(); ++k) std::printf(" % .10g", pt.S_lc({i, k}));
        std::printf("\n");
    }
    std::printf("\nRicci (semi-symmetric):\n");
    for (int i = 0; i < pt.n(); ++i) {
        for (int k = 0; k < pt.n(); ++k) std::printf(" % .10g", pt.S_sm({i, k}));
        std::printf("\n");
    }
    std::printf("\nscalar curvature: levi-civita % .10g, semi-symmetric % .10g\n", pt.r_lc,
                pt.r_sm);
    std::printf("\nclosed forms vs oracle (random arguments, corrected forms):\n");
    for (const auto& f : forms) {
        if (f.contains("closed"))
            std::printf("  %-34s closed % .10g  oracle % .10g\n",
                        f["identity"].get<std::string>().c_str(), f["closed"].get<double>(),
                        f["oracle"].get<double>());
        else
            std::printf("  %-34s residual %.3e\n", f["identity"].get<std::string>().c_str(),
                        f["residual"].get<double>());
    }
    return 0;
}

int cmd_catalog(const CommonOpts& opts, bool identities, bool manifolds, bool emit_config,
                const std::string& filter) {
    SuiteConfig cfg = resolve_config(opts);
    if (emit_config) {
        std::cout << config_to_json(cfg);
        return 0;
    }
    if (!identities && !manifolds) identities = manifolds = true;

    if (manifolds) {
        std::printf("manifolds (%zu):\n", cfg.manifolds.size());
        for (const auto& s : cfg.manifolds) {
            const char* side = s.side == PSide::Base ? "base" : s.side == PSide::Fiber ? "fiber" : "none";
            std::printf("  %-24s n1=%d n2=%d  h=%s  f=%s  P-side=%s\n", s.id.c_str(), s.n1(),
                        s.n2(), s.h.str(s.base.coords).c_str(), s.f.str(s.fiber.coords).c_str(),
                        side);
        }
    }
    if (identities) {
        int count = 0;
        for (const auto& d : identity_registry()) {
            if (!filter.empty() && d.key.rfind(filter, 0) != 0) continue;
            ++count;
        }
        std::printf("identities (%d):\n", count);
        for (const auto& d : identity_registry()) {
            if (!filter.empty() && d.key.rfind(filter, 0) != 0) continue;
            std::printf("  %-34s %s%s\n", d.key.c_str(), d.errata ? "[errata-candidate] " : "",
                        d.statement.c_str());
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"doubly-warped-product curvature identities vs a coordinate oracle"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config_path, "JSON catalog/config file");
        sub->add_option("--seed", opts.seed, "PRNG seed")->each([&](const std::string&) {
            opts.seed_set = true;
        });
        sub->add_option("--samples", opts.samples, "points per manifold");
        sub->add_option("--only", opts.only, "restrict to identity-key prefixes");
        sub->add_option("--tol", opts.tol_kv, "per-identity tolerance override KEY=VALUE");
        sub->add_option("--out", opts.out_path, "write the report to a file");
        sub->add_flag("--json", opts.json, "machine-readable output");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify);

    CLI::App* curvature = app.add_subcommand("curvature", "inspect one point");
    add_common(curvature);
    std::string manifold_id, point_csv;
    curvature->add_option("--manifold", manifold_id, "manifold id from the catalog")->required();
    curvature->add_option("--point", point_csv, "comma-separated coordinates (default: box center)");

    CLI::App* catalog = app.add_subcommand("catalog", "list manifolds and identities");
    add_common(catalog);
    bool list_identities = false, list_manifolds = false, emit_config = false;
    std::string filter;
    catalog->add_flag("--identities", list_identities, "list identity keys");
    catalog->add_flag("--manifolds", list_manifolds, "list shipped manifolds");
    catalog->add_flag("--emit-config", emit_config, "dump the active config as JSON");
    catalog->add_option("--filter", filter, "identity key prefix filter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(opts);
        if (curvature->parsed()) return cmd_curvature(opts, manifold_id, point_csv);
        if (catalog->parsed())
            return cmd_catalog(opts, list_identities, list_manifolds, emit_config, filter);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
