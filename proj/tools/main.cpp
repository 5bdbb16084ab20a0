// zzlattice CLI: coupled-transmon ZZ spectroscopy and lattice routing
// benchmarks. Every command writes <out>.csv and <out>.json atomically; the
// JSON embeds the full effective configuration so a run can be reproduced
// bit-for-bit from its own output.
//
// Exit codes: 0 success, 1 validation error, 2 physics error (labeling /
// empty result), 3 verification failure. Errors print one line to stderr
// with the machine-parsable prefix ERROR:<code>:.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zzlattice/bench.hpp"
#include "zzlattice/config_io.hpp"
#include "zzlattice/errors.hpp"
#include "zzlattice/stark.hpp"
#include "zzlattice/zz.hpp"

namespace {

using nlohmann::json;
using namespace zzlattice;

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 1) throw ConfigError("points: must be >= 1");
    std::vector<double> xs(points);
    if (points == 1) {
        xs[0] = lo;
        return xs;
    }
    const double step = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i) xs[i] = lo + step * i;
    return xs;
}

struct CommonOpts {
    std::string config_path;
    std::string out_prefix = "out";
    std::uint64_t seed = 0;
};

struct LoadedConfig {
    ClusterSpec spec;
    std::vector<std::string> applied_defaults;
};

LoadedConfig load_config(const CommonOpts& opts) {
    LoadedConfig lc;
    lc.spec = parse_cluster_config(opts.config_path, &lc.applied_defaults);
    return lc;
}

json run_metadata(const std::string& command, const CommonOpts& opts,
                  const json& params) {
    return json{{"command", command},
                {"seed", opts.seed},
                {"params", params}};
}

void write_outputs(const CommonOpts& opts, const std::string& csv,
                   json output) {
    write_text_atomic(opts.out_prefix + ".csv", csv);
    write_text_atomic(opts.out_prefix + ".json", output.dump(2) + "\n");
}

json sweep_output(const std::string& command, const CommonOpts& opts,
                  const json& params, const LoadedConfig& lc,
                  const SweepResult& r) {
    json out = sweep_to_json(r);
    out["run"] = run_metadata(command, opts, params);
    out["effective_config"] = cluster_to_json(lc.spec);
    out["applied_defaults"] = lc.applied_defaults;
    return out;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_config = true) {
    if (with_config)
        cmd->add_option("--config", opts.config_path,
                        "cluster config JSON path")
            ->required();
    cmd->add_option("--out", opts.out_prefix,
                    "output prefix (writes <out>.csv and <out>.json)");
    cmd->add_option("--seed", opts.seed, "seed echoed into outputs");
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int dispatch(CLI::App& app) {
    static CommonOpts opts;

    // ---- zz ----
    auto* zz_cmd = app.add_subcommand("zz", "single static/driven ZZ rate");
    static std::vector<int> pair{0, 1};
    add_common(zz_cmd, opts);
    zz_cmd->add_option("--pair", pair, "qubit pair p q")->expected(2);
    zz_cmd->callback([&] {
        const LoadedConfig lc = load_config(opts);
        const double zeta = zz_rate(lc.spec, pair[0], pair[1]);
        std::string csv = "p,q,zeta_MHz\n" + std::to_string(pair[0]) + "," +
                          std::to_string(pair[1]) + "," + fmt_g9(zeta) + "\n";
        json out{{"zeta_MHz", zeta}, {"pair", {pair[0], pair[1]}}};
        out["run"] = run_metadata("zz", opts, {{"pair", pair}});
        out["effective_config"] = cluster_to_json(lc.spec);
        out["applied_defaults"] = lc.applied_defaults;
        write_outputs(opts, csv, out);
        std::cout << "zeta_MHz = " << fmt_g9(zeta) << "\n";
    });

    // ---- sweep-phase ----
    auto* sp_cmd =
        app.add_subcommand("sweep-phase", "ZZ vs relative drive phase");
    static std::vector<int> sp_pair{0, 1};
    static int sp_points = 64;
    static double sp_min = 0.0, sp_max = 2.0 * M_PI;
    add_common(sp_cmd, opts);
    sp_cmd->add_option("--pair", sp_pair, "qubit pair p q")->expected(2);
    sp_cmd->add_option("--points", sp_points, "number of phase samples");
    sp_cmd->add_option("--phase-min", sp_min, "first phase, rad");
    sp_cmd->add_option("--phase-max", sp_max, "last phase, rad");
    sp_cmd->callback([&] {
        const LoadedConfig lc = load_config(opts);
        const auto phases = linspace(sp_min, sp_max, sp_points);
        const SweepResult r =
            sweep_phase(lc.spec, sp_pair[0], sp_pair[1], phases);
        const json params{{"pair", sp_pair},
                          {"points", sp_points},
                          {"phase_min", sp_min},
                          {"phase_max", sp_max}};
        write_outputs(opts, sweep_to_csv(r),
                      sweep_output("sweep-phase", opts, params, lc, r));
        std::cout << "sweep-phase: " << r.n_points() << " points, "
                  << r.zero_crossings.size() << " zero crossings\n";
    });

    // ---- sweep-coupler ----
    auto* sc_cmd =
        app.add_subcommand("sweep-coupler", "ZZ vs coupler frequency");
    static std::vector<int> sc_pair{0, 1};
    static int sc_points = 41;
    static double sc_min = 5.5, sc_max = 6.5, sc_phi = 0.0;
    add_common(sc_cmd, opts);
    sc_cmd->add_option("--pair", sc_pair, "qubit pair p q")->expected(2);
    sc_cmd->add_option("--points", sc_points, "number of frequency samples");
    sc_cmd->add_option("--omega-min", sc_min, "lowest omega_c, GHz");
    sc_cmd->add_option("--omega-max", sc_max, "highest omega_c, GHz");
    sc_cmd->add_option("--phi-d", sc_phi, "relative drive phase, rad");
    sc_cmd->callback([&] {
        const LoadedConfig lc = load_config(opts);
        const auto omegas = linspace(sc_min, sc_max, sc_points);
        const SweepResult r =
            sweep_coupler(lc.spec, sc_pair[0], sc_pair[1], omegas, sc_phi);
        const json params{{"pair", sc_pair},
                          {"points", sc_points},
                          {"omega_min", sc_min},
                          {"omega_max", sc_max},
                          {"phi_d", sc_phi}};
        write_outputs(opts, sweep_to_csv(r),
                      sweep_output("sweep-coupler", opts, params, lc, r));
        std::cout << "sweep-coupler: " << r.n_points() << " points, "
                  << r.zero_crossings.size() << " zero crossings\n";
    });

    // ---- sweep-2d ----
    auto* s2_cmd = app.add_subcommand(
        "sweep-2d", "ZZ over the (coupler frequency, phase) grid");
    static std::vector<int> s2_pair{0, 1};
    static int s2_wpoints = 21, s2_ppoints = 32;
    static double s2_wmin = 5.5, s2_wmax = 6.5;
    static double s2_pmin = 0.0, s2_pmax = 2.0 * M_PI;
    add_common(s2_cmd, opts);
    s2_cmd->add_option("--pair", s2_pair, "qubit pair p q")->expected(2);
    s2_cmd->add_option("--omega-points", s2_wpoints, "frequency samples");
    s2_cmd->add_option("--omega-min", s2_wmin, "lowest omega_c, GHz");
    s2_cmd->add_option("--omega-max", s2_wmax, "highest omega_c, GHz");
    s2_cmd->add_option("--phase-points", s2_ppoints, "phase samples");
    s2_cmd->add_option("--phase-min", s2_pmin, "first phase, rad");
    s2_cmd->add_option("--phase-max", s2_pmax, "last phase, rad");
    s2_cmd->callback([&] {
        const LoadedConfig lc = load_config(opts);
        const auto omegas = linspace(s2_wmin, s2_wmax, s2_wpoints);
        const auto phases = linspace(s2_pmin, s2_pmax, s2_ppoints);
        const SweepResult r =
            sweep_2d(lc.spec, s2_pair[0], s2_pair[1], omegas, phases);
        const json params{{"pair", s2_pair},
                          {"omega_points", s2_wpoints},
                          {"omega_min", s2_wmin},
                          {"omega_max", s2_wmax},
                          {"phase_points", s2_ppoints},
                          {"phase_min", s2_pmin},
                          {"phase_max", s2_pmax}};
        write_outputs(opts, sweep_to_csv(r),
                      sweep_output("sweep-2d", opts, params, lc, r));
        std::cout << "sweep-2d: " << r.n_points() << " points, "
                  << r.zero_crossings.size() << " zero crossings\n";
    });

    // ---- pair-matrix ----
    auto* pm_cmd = app.add_subcommand(
        "pair-matrix", "peak |ZZ| over phase for every pair (4 qubits)");
    static int pm_points = 64;
    add_common(pm_cmd, opts);
    pm_cmd->add_option("--points", pm_points, "phase samples per pair");
    pm_cmd->callback([&] {
        const LoadedConfig lc = load_config(opts);
        const auto phases = linspace(0.0, 2.0 * M_PI, pm_points);
        const Eigen::MatrixXd peak = pair_peak_matrix(lc.spec, phases);
        std::string csv = "p,q,peak_abs_zeta_MHz\n";
        json jm = json::array();
        for (int p = 0; p < 4; ++p) {
            json row = json::array();
            for (int q = 0; q < 4; ++q)
                row.push_back(std::isnan(peak(p, q)) ? json(nullptr)
                                                     : json(peak(p, q)));
            jm.push_back(std::move(row));
        }
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                csv += std::to_string(p) + "," + std::to_string(q) + ",";
                if (!std::isnan(peak(p, q))) csv += fmt_g9(peak(p, q));
                csv += "\n";
            }
        json out{{"peak_abs_zeta_MHz", jm}};
        out["run"] = run_metadata("pair-matrix", opts, {{"points", pm_points}});
        out["effective_config"] = cluster_to_json(lc.spec);
        out["applied_defaults"] = lc.applied_defaults;
        write_outputs(opts, csv, out);
        std::cout << "pair-matrix: done\n";
    });

    // ---- stark ----
    auto* st_cmd = app.add_subcommand(
        "stark", "closed-form Stark-shift ZZ model (units: MHz)");
    static double st_eps0 = 0.0, st_eps1 = 0.0, st_epst = 0.0, st_delta = 0.0;
    add_common(st_cmd, opts, /*with_config=*/false);
    st_cmd->add_option("--eps0", st_eps0, "eps~ for control |0>, MHz")
        ->required();
    st_cmd->add_option("--eps1", st_eps1, "eps~ for control |1>, MHz")
        ->required();
    st_cmd->add_option("--epst", st_epst, "direct target tone, MHz");
    st_cmd->add_option("--delta", st_delta, "drive-target detuning, MHz")
        ->required();
    st_cmd->callback([&] {
        const stark::StarkInputs in{st_eps0, st_eps1, st_epst, st_delta};
        const stark::StarkReport rep = stark::evaluate(in);
        json out = stark_report_to_json(in, rep);
        out["run"] = run_metadata("stark", opts,
                                  {{"eps0", st_eps0},
                                   {"eps1", st_eps1},
                                   {"epst", st_epst},
                                   {"delta", st_delta}});
        write_outputs(opts, stark_report_to_csv(in, rep), out);
        std::cout << "zeta_mu_form_MHz = " << fmt_g9(rep.zeta_mu_form)
                  << ", zeta_with_target_MHz = "
                  << fmt_g9(rep.zeta_with_target) << "\n";
    });

    // ---- bench-grover ----
    auto* bg_cmd = app.add_subcommand(
        "bench-grover", "routed Grover depth across topologies");
    static std::string bg_range = "2..6";
    static std::string bg_topos = "hybrid,heavyhex";
    static int bg_seeds = 8;
    static std::string bg_contention = "default";
    add_common(bg_cmd, opts, /*with_config=*/false);
    bg_cmd->add_option("--n", bg_range, "qubit range, e.g. 2..6");
    bg_cmd->add_option("--topologies", bg_topos,
                       "comma list: hybrid,heavyhex,alltoall");
    bg_cmd->add_option("--seeds", bg_seeds, "number of layout seeds (0..k-1)");
    bg_cmd->add_option("--contention", bg_contention,
                       "coupler contention: default|on|off");
    bg_cmd->callback([&] {
        const auto [n_min, n_max] = parse_range(bg_range);
        const auto topologies = split_csv(bg_topos);
        if (bg_seeds < 1) throw ConfigError("seeds: must be >= 1");
        std::vector<std::uint64_t> seeds(bg_seeds);
        for (int i = 0; i < bg_seeds; ++i) seeds[i] = i;
        std::optional<bool> override;
        if (bg_contention == "on") override = true;
        else if (bg_contention == "off") override = false;
        else if (bg_contention != "default")
            throw ConfigError("contention: expected default, on, or off");
        const DepthReport rep =
            benchmark_grover(n_min, n_max, topologies, seeds, override);
        json out = bench_report_to_json(rep);
        out["run"] = run_metadata("bench-grover", opts,
                                  {{"n", bg_range},
                                   {"topologies", bg_topos},
                                   {"seeds", bg_seeds},
                                   {"contention", bg_contention}});
        write_outputs(opts, bench_report_to_csv(rep), out);
        for (const auto& s : rep.reductions)
            std::cout << "n=" << s.n << ": hybrid " << s.depth_hybrid
                      << " vs heavyhex " << s.depth_heavyhex << " ("
                      << fmt_g9(s.reduction_pct) << "% reduction)\n";
    });

    // ---- gen-map ----
    auto* gm_cmd =
        app.add_subcommand("gen-map", "emit a coupling map (csv + json)");
    static std::string gm_topo = "hybrid";
    static int gm_rows = 3, gm_cols = 3, gm_n = 0;
    add_common(gm_cmd, opts, /*with_config=*/false);
    gm_cmd->add_option("--topology", gm_topo, "hybrid|heavyhex|alltoall")
        ->required();
    gm_cmd->add_option("--rows", gm_rows, "hybrid grid rows");
    gm_cmd->add_option("--cols", gm_cols, "hybrid grid cols");
    gm_cmd->add_option("--n", gm_n, "qubit count (heavyhex / alltoall)");
    gm_cmd->callback([&] {
        CouplingMap map;
        json params;
        if (gm_topo == "hybrid") {
            map = hybrid_grid_map(gm_rows, gm_cols);
            params = {{"topology", gm_topo}, {"rows", gm_rows}, {"cols", gm_cols}};
        } else if (gm_topo == "heavyhex") {
            map = heavy_hex_map(gm_n);
            params = {{"topology", gm_topo}, {"n", gm_n}};
        } else if (gm_topo == "alltoall") {
            map = all_to_all_map(gm_n);
            params = {{"topology", gm_topo}, {"n", gm_n}};
        } else {
            throw ConfigError("topology: expected hybrid, heavyhex, or "
                              "alltoall, got \"" + gm_topo + "\"");
        }
        json out = coupling_map_to_json(map);
        out["run"] = run_metadata("gen-map", opts, params);
        write_outputs(opts, coupling_map_to_csv(map), out);
        std::cout << "gen-map: " << map.n_qubits << " qubits, "
                  << map.edges.size() << " edges, " << map.clusters.size()
                  << " clusters\n";
    });

    // ---- verify ----
    auto* vf_cmd = app.add_subcommand(
        "verify", "check a routed circuit against its source circuit");
    static std::string vf_original, vf_routed;
    add_common(vf_cmd, opts, /*with_config=*/false);
    vf_cmd->add_option("--original", vf_original, "source circuit JSON")
        ->required();
    vf_cmd->add_option("--routed", vf_routed, "routed circuit JSON")
        ->required();
    vf_cmd->callback([&] {
        json jo, jr;
        try {
            jo = json::parse(read_text(vf_original));
            jr = json::parse(read_text(vf_routed));
        } catch (const json::parse_error& e) {
            throw ConfigError(std::string("JSON parse error: ") + e.what());
        }
        const Circuit original = circuit_from_json(jo);
        const RoutedCircuit routed = routed_from_json(jr);
        const VerifyResult vr = verify_routed(original, routed);
        std::string csv = "ok,max_deviation,method\n" +
                          std::to_string(int(vr.ok)) + "," +
                          fmt_g9(vr.max_deviation) + "," + vr.method + "\n";
        json out{{"ok", vr.ok},
                 {"max_deviation", vr.max_deviation},
                 {"method", vr.method}};
        out["run"] = run_metadata("verify", opts,
                                  {{"original", vf_original},
                                   {"routed", vf_routed}});
        write_outputs(opts, csv, out);
        if (!vr.ok)
            throw VerificationError("routed circuit is not equivalent "
                                    "(max deviation " +
                                    fmt_g9(vr.max_deviation) + ")");
        std::cout << "verify: ok (max deviation " << fmt_g9(vr.max_deviation)
                  << ", " << vr.method << ")\n";
    });

    app.require_subcommand(1);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coupled-transmon ZZ spectroscopy and lattice routing tools"};
    dispatch(app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) {
            std::cerr << "ERROR:validation:" << e.what() << "\n";
            return 1;
        }
        return app.exit(e);  // --help and friends
    } catch (const zzlattice::VerificationError& e) {
        std::cerr << "ERROR:verification:" << e.what() << "\n";
        return 3;
    } catch (const zzlattice::LabelingAmbiguous& e) {
        std::cerr << "ERROR:physics:" << e.what() << "\n";
        return 2;
    } catch (const zzlattice::EmptyResultError& e) {
        std::cerr << "ERROR:physics:" << e.what() << "\n";
        return 2;
    } catch (const zzlattice::ResourceError& e) {
        std::cerr << "ERROR:validation:" << e.what() << "\n";
        return 1;
    } catch (const zzlattice::ConfigError& e) {
        std::cerr << "ERROR:validation:" << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "ERROR:validation:" << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "ERROR:validation:" << e.what() << "\n";
        return 1;
    }
    return 0;
}
