#include "catgate/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace catgate {

namespace {

using nlohmann::json;

json record_json(const SweepRecord& r) {
    return json{{"tier", tier_name(r.result.tier)},
                {"theta_rad", r.result.theta},
                {"phi_rad", r.result.phi},
                {"alpha", r.result.alpha},
                {"kappa_inv_us", r.result.kappa_inv},
                {"fidelity", r.result.fidelity},
                {"t1_us", r.result.t1},
                {"t2_us", r.result.t2},
                {"trace_drift", r.result.diag.trace_drift},
                {"leakage_ef", r.result.diag.leakage_ef},
                {"runtime_s", r.result.runtime_s},
                {"status", r.status}};
}

} // namespace

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "tier,theta_rad,phi_rad,alpha,kappa_inv_us,fidelity,t1_us,t2_us,"
           "trace_drift,leakage_ef,runtime_s,status\n";
    for (const auto& r : records) {
        out << tier_name(r.result.tier) << ',' << format_full(r.result.theta) << ','
            << format_full(r.result.phi) << ',' << format_full(r.result.alpha) << ','
            << format_full(r.result.kappa_inv) << ',' << format_full(r.result.fidelity) << ','
            << format_full(r.result.t1) << ',' << format_full(r.result.t2) << ','
            << format_full(r.result.diag.trace_drift) << ','
            << format_full(r.result.diag.leakage_ef) << ','
            << format_full(r.result.runtime_s) << ',' << r.status << '\n';
    }
    return out.str();
}

std::string sweep_json(const std::vector<SweepRecord>& records) {
    json out;
    out["records"] = json::array();
    for (const auto& r : records) out["records"].push_back(record_json(r));
    out["gaps"] = json::array();
    for (const auto& g : tier_gaps(records))
        out["gaps"].push_back(json{{"theta_rad", g.theta},
                                   {"phi_rad", g.phi},
                                   {"kappa_inv_us", g.kappa_inv},
                                   {"fidelity_blue", g.fidelity_blue},
                                   {"fidelity_red", g.fidelity_red},
                                   {"gap", g.gap}});
    return out.dump(2) + "\n";
}

std::string truth_table_csv(const std::array<TruthTableRow, 4>& rows, ModelTier tier) {
    std::ostringstream out;
    out << "tier,input,phase_rad,magnitude\n";
    for (const auto& r : rows)
        out << tier_name(tier) << ',' << to_string(r.input) << ',' << format_full(r.phase)
            << ',' << format_full(r.magnitude) << '\n';
    return out.str();
}

std::string trajectory_csv(const TrajectorySink& sink) {
    std::ostringstream out;
    out << "t_us,trace,n_a,n_b,pop_g,pop_e,pop_f\n";
    for (const auto& r : sink.rows)
        out << format_full(r.t) << ',' << format_full(r.trace) << ',' << format_full(r.n_a)
            << ',' << format_full(r.n_b) << ',' << format_full(r.pop_g) << ','
            << format_full(r.pop_e) << ',' << format_full(r.pop_f) << '\n';
    return out.str();
}

std::string manifest_json(const Config& config, const DerivedParams& d,
                          const std::vector<SweepRecord>& records) {
    json m;
    m["tool"] = "catgate";
    m["version"] = tool_version;
    m["config"] = config.snapshot;
    m["derived"] = json{{"delta_a_ghz", rad_us_to_ghz(d.delta_a)},
                        {"delta_b_ghz", rad_us_to_ghz(d.delta_b)},
                        {"delta_a_p_ghz", rad_us_to_ghz(d.delta_a_p)},
                        {"delta_b_p_ghz", rad_us_to_ghz(d.delta_b_p)},
                        {"delta_a_t_ghz", rad_us_to_ghz(d.delta_a_t)},
                        {"delta_a_tp_ghz", rad_us_to_ghz(d.delta_a_tp)},
                        {"Delta_mhz", rad_us_to_mhz(d.Delta)},
                        {"Delta_ab_ghz", rad_us_to_ghz(d.Delta_ab)},
                        {"Delta_ab_t_ghz", rad_us_to_ghz(d.Delta_ab_t)},
                        {"lambda_a_mhz", rad_us_to_mhz(d.lambda_a)},
                        {"lambda_b_mhz", rad_us_to_mhz(d.lambda_b)},
                        {"lambda_mhz", rad_us_to_mhz(d.lambda)},
                        {"chi_mhz", rad_us_to_mhz(d.chi)},
                        {"lambda_a_t_mhz", rad_us_to_mhz(d.lambda_a_t)},
                        {"g_t_mhz", rad_us_to_mhz(d.g_t)},
                        {"t1_us", d.t1},
                        {"t2_us", d.t2},
                        {"stark_residual", d.stark_residual()}};
    m["simulation"] = json{{"n_a", config.sim.n_a},
                           {"n_b", config.sim.n_b},
                           {"alpha", config.sim.alpha},
                           {"tail_epsilon", config.sim.tail_epsilon},
                           {"samples_per_period", config.sim.samples_per_period},
                           {"max_step_us", config.sim.max_step},
                           {"leakage_bound", config.sim.leakage_bound}};
    m["cell_runtimes_s"] = json::array();
    for (const auto& r : records) m["cell_runtimes_s"].push_back(r.result.runtime_s);
    return m.dump(2) + "\n";
}

void write_with_manifest(const std::string& path, const std::string& text,
                         const std::string& manifest) {
    {
        std::ofstream out(path);
        if (!out) throw InputError("cannot write output file '" + path + "'");
        out << text;
    }
    const size_t dot = path.find_last_of('.');
    const std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
    std::ofstream mout(stem + ".manifest.json");
    if (!mout) throw InputError("cannot write manifest next to '" + path + "'");
    mout << manifest;
}

std::string derived_table(const DerivedParams& d) {
    std::ostringstream out;
    auto row = [&](const char* name, double value, const char* unit) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "  %-22s %18.12g %s\n", name, value, unit);
        out << buf;
    };
    row("delta_a/2pi", rad_us_to_ghz(d.delta_a), "GHz");
    row("delta_b/2pi", rad_us_to_ghz(d.delta_b), "GHz");
    row("delta_a'/2pi", rad_us_to_ghz(d.delta_a_p), "GHz");
    row("delta_b'/2pi", rad_us_to_ghz(d.delta_b_p), "GHz");
    row("delta_a~/2pi", rad_us_to_ghz(d.delta_a_t), "GHz");
    row("delta_a~'/2pi", rad_us_to_ghz(d.delta_a_tp), "GHz");
    row("Delta/2pi", rad_us_to_mhz(d.Delta), "MHz");
    row("Delta_ab/2pi", rad_us_to_ghz(d.Delta_ab), "GHz");
    row("Delta_ab~/2pi", rad_us_to_ghz(d.Delta_ab_t), "GHz");
    row("lambda_a/2pi", rad_us_to_mhz(d.lambda_a), "MHz");
    row("lambda_b/2pi", rad_us_to_mhz(d.lambda_b), "MHz");
    row("lambda/2pi", rad_us_to_mhz(d.lambda), "MHz");
    row("chi/2pi", rad_us_to_mhz(d.chi), "MHz");
    row("lambda_a~/2pi", rad_us_to_mhz(d.lambda_a_t), "MHz");
    row("g~/2pi", rad_us_to_mhz(d.g_t), "MHz");
    row("g'/2pi", rad_us_to_mhz(d.g_p), "MHz");
    row("mu'/2pi", rad_us_to_mhz(d.mu_p), "MHz");
    row("g~'/2pi", rad_us_to_mhz(d.g_tp), "MHz");
    row("t1", d.t1, "us");
    row("t2", d.t2, "us");
    row("stark residual", d.stark_residual(), "rad per photon");
    return out.str();
}

std::string regime_table(const RegimeReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "  %-22s %10.3f   %s\n", c.name.c_str(), c.ratio,
                      to_string(c.status));
        out << buf;
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "  %-22s %10.3e   %s\n", "stark residual",
                  report.stark_residual,
                  report.g_t_explicit ? "(explicit g~)" : "(auto-solved g~)");
    out << buf;
    return out.str();
}

} // namespace catgate
