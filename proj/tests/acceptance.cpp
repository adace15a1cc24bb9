// Acceptance suite: runs the full catalog and checks every gate the project
// promises, printing one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dwpc/catalog.hpp"
#include "dwpc/report.hpp"
#include "dwpc/rng.hpp"

using namespace dwpc;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++g_failures;
}

const RunRow* find_row(const SuiteReport& r, const std::string& id, const std::string& manifold) {
    for (const auto& row : r.rows)
        if (row.identity == id && row.manifold == manifold) return &row;
    return nullptr;
}

std::vector<const RunRow*> rows_with(const SuiteReport& r,
                                     const std::function<bool(const RunRow&)>& pred) {
    std::vector<const RunRow*> out;
    for (const auto& row : r.rows)
        if (pred(row)) out.push_back(&row);
    return out;
}

// identity rows count as satisfied when they pass outright or when the
// displayed form was adjudicated against the oracle and the recorded
// correction meets the tolerance (the report keeps both residuals)
bool row_ok(const RunRow& row) {
    if (row.verdict == "pass") return true;
    if (row.verdict == "errata-confirmed") return row.residual <= row.tolerance + 1e-9;
    return false;
}

double central_fd(const Expr& e, int var, Vec p, double step) {
    Vec hi = p, lo = p;
    hi[static_cast<std::size_t>(var)] += step;
    lo[static_cast<std::size_t>(var)] -= step;
    return (e.evaluate(hi) - e.evaluate(lo)) / (2.0 * step);
}

Expr random_expr(Rng& rng, int depth) {
    if (depth == 0) {
        if (rng.uniform() < 0.5) return Expr::variable(static_cast<int>(rng.next() % 3));
        return Expr::constant(rng.uniform(0.5, 2.5));
    }
    switch (rng.next() % 12) {
        case 0: return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
        case 1: return random_expr(rng, depth - 1) - random_expr(rng, depth - 1);
        case 2: return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
        case 3: return random_expr(rng, depth - 1) / random_expr(rng, depth - 1);
        case 4: {
            static const double exps[] = {2.0, 3.0, 0.5, -1.0};
            return pow(random_expr(rng, depth - 1), Expr::constant(exps[rng.next() % 4]));
        }
        case 5: return -random_expr(rng, depth - 1);
        case 6: return sin(random_expr(rng, depth - 1));
        case 7: return cos(random_expr(rng, depth - 1));
        case 8: return exp(random_expr(rng, depth - 1) * Expr::constant(0.3));
        case 9: return sqrt(Expr::constant(1.0) + square(random_expr(rng, depth - 1)));
        case 10: return tanh(random_expr(rng, depth - 1));
        default: return sinh(random_expr(rng, depth - 1) * Expr::constant(0.2));
    }
}

}  // namespace

int main() {
    SuiteConfig cfg = default_config();  // 50 samples, seed 42, full catalog
    SuiteReport report = run_suite(cfg);

    const std::vector<std::string> all_ids = {
        "trivial-product", "hyperbolic-plane", "generic-pb",    "generic-pf",
        "interval-sphere", "interval-sphere-warped", "round-sphere"};
    // the core catalog: trivial product, hyperbolic plane, the generic
    // doubly warped pair, and the interval-times-sphere entry
    const std::vector<std::string> core_ids = {"trivial-product", "hyperbolic-plane", "generic-pb",
                                               "generic-pf", "interval-sphere"};

    // 1. oracle self-validation: curvature relation on every entry
    {
        bool ok = true;
        double worst = 0.0;
        for (const auto& id : all_ids) {
            const RunRow* row = find_row(report, "oracle.curvature-relation", id);
            ok = ok && row && row->verdict == "pass" && row->residual <= 1e-7;
            if (row) worst = std::max(worst, row->residual);
        }
        char d[64];
        std::snprintf(d, sizeof d, "max residual %.3e over %zu manifolds", worst, all_ids.size());
        criterion(1, "curvature relation links the two connections' oracles", ok, d);
    }

    // 2. connection laws: torsion form, metric compatibility, P=0 collapse
    {
        bool ok = true;
        for (const auto& id : all_ids) {
            const RunRow* t = find_row(report, "oracle.torsion-ssmc-form", id);
            const RunRow* m1 = find_row(report, "oracle.metric-compat-lc", id);
            const RunRow* m2 = find_row(report, "oracle.metric-compat-ssmc", id);
            const RunRow* g0 = find_row(report, "ssmc.gamma-p0", id);
            ok = ok && t && t->residual <= 1e-10 && m1 && m1->residual <= 1e-9 && m2 &&
                 m2->residual <= 1e-9 && g0 && g0->residual <= 1e-12;
        }
        criterion(2, "torsion form <=1e-10, metric compatibility <=1e-9, P=0 collapse <=1e-12", ok);
    }

    // 3. Levi-Civita closed forms on the core catalog
    {
        bool ok = true;
        int direct = 0, adjudicated = 0;
        for (const auto& id : core_ids)
            for (const auto* row : rows_with(report, [&](const RunRow& r) {
                     return r.manifold == id && (r.identity.rfind("lemma", 0) == 0);
                 })) {
                if (!row_ok(*row)) ok = false;
                row->verdict == "pass" ? ++direct : ++adjudicated;
            }
        char d[160];
        std::snprintf(d, sizeof d,
                      "%d matched as displayed, %d via oracle-confirmed cross-term corrections "
                      "(displayed residuals recorded)",
                      direct, adjudicated);
        criterion(3, "Levi-Civita connection/curvature/Ricci/scalar identities <=1e-6", ok, d);
    }

    // 4. semi-symmetric closed forms: connection components, curvature cases,
    //    Ricci corollaries (errata adjudicated), scalar corollaries
    {
        bool conn_ok = true, curv_ok = true, ricci_ok = true, scalar_ok = true;
        int adjudicated = 0;
        for (const auto* row : rows_with(report, [](const RunRow& r) {
                 return r.identity.rfind("prop-ssmc-conn", 0) == 0;
             }))
            conn_ok = conn_ok && row->verdict == "pass" && row->residual <= 1e-6 + 1e-9;
        for (const auto* row : rows_with(report, [](const RunRow& r) {
                 return r.identity.rfind("prop-ssmc-curv", 0) == 0;
             })) {
            if (!row_ok(*row)) curv_ok = false;
            if (row->verdict == "errata-confirmed") ++adjudicated;
        }
        for (const auto* row : rows_with(report, [](const RunRow& r) {
                 return r.identity.rfind("cor-ricci", 0) == 0;
             })) {
            if (!row_ok(*row)) ricci_ok = false;
            if (row->verdict == "errata-confirmed") {
                ++adjudicated;
                // the report must show the displayed form's residual and the
                // correction must be consistent with the Levi-Civita mixed
                // Ricci at P=0 (coefficient n-2), met at the tolerance
                if (row->paper_residual < 0.0) ricci_ok = false;
                if (row->residual > 1e-6) ricci_ok = false;
            }
        }
        for (const auto* row : rows_with(report, [](const RunRow& r) {
                 return r.identity.rfind("cor-scalar", 0) == 0;
             }))
            scalar_ok = scalar_ok && row->verdict == "pass" && row->residual <= 1e-6 + 1e-9;
        bool ok = conn_ok && curv_ok && ricci_ok && scalar_ok;
        char d[128];
        std::snprintf(d, sizeof d, "%d rows adjudicated with oracle-confirmed corrections",
                      adjudicated);
        criterion(4, "semi-symmetric connection/curvature/Ricci/scalar identities <=1e-6", ok, d);
    }

    // 5. known geometries
    {
        DwpModel sphere([&] {
            for (const auto& s : builtin_catalog())
                if (s.id == "round-sphere") return s;
            throw ConfigError("missing round-sphere");
        }());
        double worst_scalar = 0.0;
        std::vector<DwpPoint> spts;
        for (const auto& p : sphere.sample_points(cfg.seed, 50)) spts.push_back(sphere.at(p));
        for (const auto& pt : spts) worst_scalar = std::max(worst_scalar, std::abs(pt.r_lc - 2.0));
        bool s2_ok = worst_scalar <= 1e-9;

        DwpModel hyp([&] {
            for (const auto& s : builtin_catalog())
                if (s.id == "hyperbolic-plane") return s;
            throw ConfigError("missing hyperbolic-plane");
        }());
        std::vector<DwpPoint> hpts;
        for (const auto& p : hyp.sample_points(cfg.seed, 50)) hpts.push_back(hyp.at(p));
        double worst_h = 0.0;
        for (const auto& pt : hpts) worst_h = std::max(worst_h, std::abs(pt.r_lc + 2.0));
        EinsteinCheck fit = einstein_fit(hpts, false);
        bool hyp_ok = worst_h <= 1e-8 && std::abs(fit.mu + 1.0) <= 1e-7;
        char d[128];
        std::snprintf(d, sizeof d, "sphere scalar-2 <= %.2e, hyperbolic scalar+2 <= %.2e, mu=%.9f",
                      worst_scalar, worst_h, fit.mu);
        criterion(5, "unit sphere r=2 (1e-9); hyperbolic plane r=-2 (1e-8), mu=-1 (1e-7)",
                  s2_ok && hyp_ok, d);
    }

    // 6. reduction properties
    {
        bool ok = true;
        for (const auto& id : all_ids) {
            const RunRow* red = find_row(report, "reduction.p0-closed-forms", id);
            if (red && !(red->verdict == "pass" && red->residual <= 1e-10)) ok = false;
            const RunRow* f1 = find_row(report, "reduction.f1-warped-product", id);
            if (f1 && !(f1->verdict == "pass" && f1->residual <= 1e-7)) ok = false;
        }
        // the sided entries must actually carry the P=0 row
        for (const auto& id : {"hyperbolic-plane", "generic-pb", "generic-pf", "interval-sphere",
                               "interval-sphere-warped"})
            if (!find_row(report, "reduction.p0-closed-forms", id)) ok = false;
        criterion(6, "P=0 collapse of closed forms <=1e-10; f=1 warped degeneration <=1e-7", ok);
    }

    // 7. section-5 checks
    {
        const RunRow* fac = find_row(report, "dichotomy.factorization", "interval-sphere-warped");
        const RunRow* cb = find_row(report, "dichotomy.f-const-branch", "interval-sphere");
        bool dich_ok = fac && fac->verdict == "pass" && fac->residual <= 1e-7 && cb &&
                       cb->verdict == "pass";
        const RunRow* ca_s = find_row(report, "class-a.lc", "round-sphere");
        const RunRow* ca_f = find_row(report, "class-a.lc", "trivial-product");
        bool ca_ok = ca_s && ca_s->residual <= 1e-8 && ca_f && ca_f->residual <= 1e-8;
        const RunRow* eq = find_row(report, "einstein.equivalence", "hyperbolic-plane");
        bool eq_ok = eq && eq->verdict == "pass";
        criterion(7, "dichotomy factorization, class-A vanishing, Einstein biconditional",
                  dich_ok && ca_ok && eq_ok);
    }

    // 8. parser: randomized derivative property and print round trip
    {
        Rng rng(424242);
        int kept = 0, attempts = 0;
        bool fd_ok = true;
        while (kept < 200 && attempts < 8000) {
            ++attempts;
            Expr e = random_expr(rng, 1 + static_cast<int>(rng.next() % 5));
            Vec p = {rng.uniform(0.2, 1.7), rng.uniform(0.2, 1.7), rng.uniform(0.2, 1.7)};
            int var = static_cast<int>(rng.next() % 3);
            double step = 1e-5 * (1.0 + std::abs(p[static_cast<std::size_t>(var)]));
            double exact, fd1, fd2;
            try {
                exact = e.derivative(var).evaluate(p);
                fd1 = central_fd(e, var, p, step);
                fd2 = central_fd(e, var, p, step / 2.0);
            } catch (const EvalError&) {
                continue;
            }
            if (std::abs(fd1 - fd2) > 0.25e-6 * (1.0 + std::abs(exact))) continue;
            ++kept;
            if (std::abs(exact - fd2) > 1e-6 * (1.0 + std::abs(exact))) fd_ok = false;
        }
        fd_ok = fd_ok && kept == 200;

        bool rt_ok = true;
        const std::vector<std::string> names = {"a", "b", "c"};
        for (int i = 0; i < 50; ++i) {
            Expr e = random_expr(rng, 1 + static_cast<int>(rng.next() % 4));
            Expr back = parse_expr(e.str(names), names);
            for (int k = 0; k < 50; ++k) {
                Vec p = {rng.uniform(0.2, 1.7), rng.uniform(0.2, 1.7), rng.uniform(0.2, 1.7)};
                double a, b;
                try {
                    a = e.evaluate(p);
                    b = back.evaluate(p);
                } catch (const EvalError&) {
                    continue;
                }
                if (std::abs(a - b) > 1e-14 * (1.0 + std::abs(a))) rt_ok = false;
            }
        }
        criterion(8, "200 random derivatives within 1e-6 of finite differences; round trip 1e-14",
                  fd_ok && rt_ok);
    }

    // 9. determinism: identical config and seed give byte-identical reports
    {
        SuiteConfig small = default_config();
        small.samples = 10;
        std::string a = report_to_json(run_suite(small));
        std::string b = report_to_json(run_suite(small));
        criterion(9, "byte-identical JSON reports for identical config and seed", a == b);
    }

    // overall suite health: nothing failed outright in the full run
    {
        bool ok = report.failures() == 0;
        criterion(0, "full suite reports zero failures", ok,
                  ok ? "" : std::to_string(report.failures()) + " failing rows");
    }

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
