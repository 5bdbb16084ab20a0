#include "zzlattice/config_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace zzlattice {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* field, const char* ctx) {
    if (!j.contains(field))
        throw ConfigError(std::string(ctx) + ": missing required field \"" +
                          field + "\"");
    return j.at(field);
}

double as_number(const json& j, const std::string& where) {
    if (!j.is_number())
        throw ConfigError(where + ": expected a number, got " +
                          std::string(j.type_name()));
    return j.get<double>();
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ConfigError(where + ": expected an integer, got " +
                          std::string(j.type_name()));
    return j.get<int>();
}

}  // namespace

ClusterSpec cluster_from_json(const json& j,
                              std::vector<std::string>* applied_defaults) {
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    ClusterSpec spec;
    std::vector<std::string> defaults;

    const json& jq = require(j, "qubits", "config");
    if (!jq.is_array() || jq.empty())
        throw ConfigError("qubits: expected a non-empty array");
    for (size_t i = 0; i < jq.size(); ++i) {
        const std::string at = "qubits[" + std::to_string(i) + "]";
        const json& q = jq[i];
        TransmonSpec t;
        t.omega = as_number(require(q, "omega_GHz", at.c_str()),
                            at + ".omega_GHz");
        t.eta = as_number(require(q, "eta_GHz", at.c_str()), at + ".eta_GHz");
        if (q.contains("levels")) {
            t.levels = as_int(q.at("levels"), at + ".levels");
        } else {
            t.levels = 3;
            defaults.push_back(at + ".levels = 3");
        }
        spec.qubits.push_back(t);
    }

    const json& jc = require(j, "coupler", "config");
    spec.coupler.eta_c =
        as_number(require(jc, "eta_c_GHz", "coupler"), "coupler.eta_c_GHz");
    if (jc.contains("omega_c_GHz")) {
        spec.coupler.omega_c =
            as_number(jc.at("omega_c_GHz"), "coupler.omega_c_GHz");
        if (jc.contains("omega_c_max_GHz"))
            spec.coupler.omega_c_max = as_number(jc.at("omega_c_max_GHz"),
                                                 "coupler.omega_c_max_GHz");
    } else if (jc.contains("omega_c_max_GHz") && jc.contains("flux")) {
        spec.coupler.omega_c_max =
            as_number(jc.at("omega_c_max_GHz"), "coupler.omega_c_max_GHz");
        spec.coupler.flux = as_number(jc.at("flux"), "coupler.flux");
        spec.coupler.omega_c =
            flux_to_frequency(spec.coupler, *spec.coupler.flux);
        defaults.push_back("coupler.omega_c_GHz = " +
                           fmt_g9(spec.coupler.omega_c) +
                           " (from omega_c_max_GHz and flux)");
    } else {
        throw ConfigError("coupler: needs omega_c_GHz, or omega_c_max_GHz "
                          "together with flux");
    }

    if (j.contains("couplings")) {
        const json& jk = j.at("couplings");
        if (!jk.is_array()) throw ConfigError("couplings: expected an array");
        for (size_t i = 0; i < jk.size(); ++i) {
            const std::string at = "couplings[" + std::to_string(i) + "]";
            CouplingSpec c;
            c.qubit = as_int(require(jk[i], "qubit", at.c_str()), at + ".qubit");
            c.j = as_number(require(jk[i], "J_GHz", at.c_str()), at + ".J_GHz");
            spec.couplings.push_back(c);
        }
    } else {
        for (int i = 0; i < spec.n_qubits(); ++i)
            spec.couplings.push_back({i, 0.08});
        defaults.push_back("couplings = all qubits at J_GHz = 0.08");
    }

    if (j.contains("drives")) {
        const json& jd = j.at("drives");
        if (!jd.is_array()) throw ConfigError("drives: expected an array");
        for (size_t i = 0; i < jd.size(); ++i) {
            const std::string at = "drives[" + std::to_string(i) + "]";
            const json& d = jd[i];
            DriveSpec ds;
            ds.target = as_int(require(d, "target", at.c_str()), at + ".target");
            if (ds.target < 0 ||
                ds.target >= static_cast<int>(spec.qubits.size()))
                throw ConfigError(at + ".target: index out of range");
            if (d.contains("amp_GHz")) {
                ds.amp = as_number(d.at("amp_GHz"), at + ".amp_GHz");
            } else {
                ds.amp = 0.020;
                defaults.push_back(at + ".amp_GHz = 0.02");
            }
            if (d.contains("phase_rad")) {
                ds.phase = as_number(d.at("phase_rad"), at + ".phase_rad");
            } else {
                ds.phase = 0.0;
                defaults.push_back(at + ".phase_rad = 0");
            }
            if (d.contains("omega_d_GHz")) {
                ds.omega_d = as_number(d.at("omega_d_GHz"), at + ".omega_d_GHz");
            } else {
                ds.omega_d = spec.qubits[ds.target].omega - 0.1;
                defaults.push_back(at + ".omega_d_GHz = " + fmt_g9(ds.omega_d) +
                                   " (omega_target - 0.1)");
            }
            spec.drives.push_back(ds);
        }
    }

    spec.validate();
    if (applied_defaults) *applied_defaults = std::move(defaults);
    return spec;
}

ClusterSpec parse_cluster_config(const std::string& path,
                                 std::vector<std::string>* applied_defaults) {
    json j;
    try {
        j = json::parse(read_text(path));
    } catch (const json::parse_error& e) {
        throw ConfigError("config " + path + ": JSON parse error: " + e.what());
    }
    return cluster_from_json(j, applied_defaults);
}

json cluster_to_json(const ClusterSpec& spec) {
    json j;
    j["qubits"] = json::array();
    for (const auto& q : spec.qubits)
        j["qubits"].push_back({{"omega_GHz", q.omega},
                               {"eta_GHz", q.eta},
                               {"levels", q.levels}});
    j["coupler"] = {{"omega_c_GHz", spec.coupler.omega_c},
                    {"eta_c_GHz", spec.coupler.eta_c}};
    if (spec.coupler.omega_c_max)
        j["coupler"]["omega_c_max_GHz"] = *spec.coupler.omega_c_max;
    if (spec.coupler.flux) j["coupler"]["flux"] = *spec.coupler.flux;
    j["couplings"] = json::array();
    for (const auto& c : spec.couplings)
        j["couplings"].push_back({{"qubit", c.qubit}, {"J_GHz", c.j}});
    j["drives"] = json::array();
    for (const auto& d : spec.drives)
        j["drives"].push_back({{"target", d.target},
                               {"amp_GHz", d.amp},
                               {"phase_rad", d.phase},
                               {"omega_d_GHz", d.omega_d}});
    return j;
}

json circuit_to_json(const Circuit& c) {
    json j;
    j["n_qubits"] = c.n_qubits;
    j["gates"] = json::array();
    for (const Gate& g : c.gates) {
        json jg = {{"kind", kind_name(g.kind)}, {"qubits", g.qubits}};
        if (g.kind == GateKind::RZ) jg["theta"] = g.theta;
        j["gates"].push_back(std::move(jg));
    }
    return j;
}

Circuit circuit_from_json(const json& j) {
    Circuit c;
    c.n_qubits = as_int(require(j, "n_qubits", "circuit"), "circuit.n_qubits");
    const json& jg = require(j, "gates", "circuit");
    if (!jg.is_array()) throw ConfigError("circuit.gates: expected an array");
    for (size_t i = 0; i < jg.size(); ++i) {
        const std::string at = "gates[" + std::to_string(i) + "]";
        const json& e = jg[i];
        Gate g;
        g.kind = kind_from_name(
            require(e, "kind", at.c_str()).get<std::string>());
        for (const json& q : require(e, "qubits", at.c_str()))
            g.qubits.push_back(as_int(q, at + ".qubits"));
        if (g.kind == GateKind::RZ)
            g.theta = as_number(require(e, "theta", at.c_str()), at + ".theta");
        c.gates.push_back(std::move(g));
    }
    validate_circuit(c);
    return c;
}

json coupling_map_to_json(const CouplingMap& map) {
    json j;
    j["n_qubits"] = map.n_qubits;
    j["edges"] = json::array();
    for (const Edge& e : map.edges) j["edges"].push_back({e.a, e.b});
    j["clusters"] = json::array();
    for (const auto& c : map.clusters) {
        json jc = {{"id", c.id}, {"members", c.members}};
        jc["edges"] = json::array();
        for (const Edge& e : c.edges) jc["edges"].push_back({e.a, e.b});
        j["clusters"].push_back(std::move(jc));
    }
    return j;
}

CouplingMap coupling_map_from_json(const json& j) {
    CouplingMap map;
    map.n_qubits = as_int(require(j, "n_qubits", "map"), "map.n_qubits");
    for (const json& e : require(j, "edges", "map")) {
        if (!e.is_array() || e.size() != 2)
            throw ConfigError("map.edges: each edge is a [a, b] pair");
        map.edges.push_back({as_int(e[0], "map.edges"), as_int(e[1], "map.edges")});
    }
    if (j.contains("clusters")) {
        for (const json& jc : j.at("clusters")) {
            CouplerCluster c;
            c.id = as_int(require(jc, "id", "map.clusters"), "cluster.id");
            for (const json& m : require(jc, "members", "map.clusters"))
                c.members.push_back(as_int(m, "cluster.members"));
            for (const json& e : require(jc, "edges", "map.clusters"))
                c.edges.push_back(
                    {as_int(e[0], "cluster.edges"), as_int(e[1], "cluster.edges")});
            map.clusters.push_back(std::move(c));
        }
    }
    return map;
}

json routed_to_json(const RoutedCircuit& r) {
    return json{{"circuit", circuit_to_json(r.circuit)},
                {"initial_layout", r.initial_layout.phys_of},
                {"final_layout", r.final_layout.phys_of},
                {"swaps_inserted", r.swaps_inserted}};
}

RoutedCircuit routed_from_json(const json& j) {
    RoutedCircuit r;
    r.circuit = circuit_from_json(require(j, "circuit", "routed"));
    for (const json& p : require(j, "initial_layout", "routed"))
        r.initial_layout.phys_of.push_back(as_int(p, "routed.initial_layout"));
    for (const json& p : require(j, "final_layout", "routed"))
        r.final_layout.phys_of.push_back(as_int(p, "routed.final_layout"));
    r.swaps_inserted = as_int(require(j, "swaps_inserted", "routed"),
                              "routed.swaps_inserted");
    return r;
}

namespace {

json drives_to_json(const std::vector<DriveSpec>& drives) {
    json out = json::array();
    for (const auto& d : drives)
        out.push_back({{"target", d.target},
                       {"amp_GHz", d.amp},
                       {"phase_rad", d.phase},
                       {"omega_d_GHz", d.omega_d}});
    return out;
}

json nan_to_null(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

}  // namespace

json sweep_to_json(const SweepResult& r) {
    json j;
    j["axis1"] = {{"name", r.axis1.name}, {"values", r.axis1.values}};
    if (r.axis2)
        j["axis2"] = {{"name", r.axis2->name}, {"values", r.axis2->values}};
    else
        j["axis2"] = nullptr;

    if (r.axis2) {
        const size_t n2 = r.axis2->values.size();
        json rows = json::array();
        json oks = json::array();
        for (size_t i1 = 0; i1 < r.axis1.values.size(); ++i1) {
            json zrow = json::array(), orow = json::array();
            for (size_t i2 = 0; i2 < n2; ++i2) {
                zrow.push_back(nan_to_null(r.zeta_mhz[i1 * n2 + i2]));
                orow.push_back(static_cast<bool>(r.label_ok[i1 * n2 + i2]));
            }
            rows.push_back(std::move(zrow));
            oks.push_back(std::move(orow));
        }
        j["zeta_MHz"] = std::move(rows);
        j["label_ok"] = std::move(oks);
    } else {
        json zs = json::array(), oks = json::array();
        for (int i = 0; i < r.n_points(); ++i) {
            zs.push_back(nan_to_null(r.zeta_mhz[i]));
            oks.push_back(static_cast<bool>(r.label_ok[i]));
        }
        j["zeta_MHz"] = std::move(zs);
        j["label_ok"] = std::move(oks);
    }

    j["zero_crossings"] = json::array();
    for (const auto& zc : r.zero_crossings) {
        json e;
        e[r.axis1.name] = zc.axis1;
        if (zc.axis2) e[r.axis2->name] = *zc.axis2;
        j["zero_crossings"].push_back(std::move(e));
    }

    j["metadata"] = {{"pair", {r.meta.pair_p, r.meta.pair_q}},
                     {"drives_defaulted", r.meta.drives_defaulted},
                     {"effective_drives", drives_to_json(r.meta.effective_drives)}};
    return j;
}

std::string fmt_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string sweep_to_csv(const SweepResult& r) {
    std::ostringstream os;
    if (r.axis2) {
        os << r.axis1.name << "," << r.axis2->name << ",zeta_MHz,label_ok\n";
        const size_t n2 = r.axis2->values.size();
        for (size_t i1 = 0; i1 < r.axis1.values.size(); ++i1)
            for (size_t i2 = 0; i2 < n2; ++i2) {
                const double z = r.zeta_mhz[i1 * n2 + i2];
                os << fmt_g9(r.axis1.values[i1]) << ","
                   << fmt_g9(r.axis2->values[i2]) << ","
                   << (std::isnan(z) ? "" : fmt_g9(z)) << ","
                   << int(r.label_ok[i1 * n2 + i2]) << "\n";
            }
    } else {
        os << r.axis1.name << ",zeta_MHz,label_ok\n";
        for (int i = 0; i < r.n_points(); ++i) {
            const double z = r.zeta_mhz[i];
            os << fmt_g9(r.axis1.values[i]) << ","
               << (std::isnan(z) ? "" : fmt_g9(z)) << ","
               << int(r.label_ok[i]) << "\n";
        }
    }
    return os.str();
}

json stark_report_to_json(const stark::StarkInputs& in,
                          const stark::StarkReport& rep) {
    return json{
        {"inputs",
         {{"eps0_MHz", in.eps0},
          {"eps1_MHz", in.eps1},
          {"eps_t_MHz", in.eps_t},
          {"delta_t_MHz", in.delta_t}}},
        {"delta0_MHz", rep.delta0},
        {"delta1_MHz", rep.delta1},
        {"mu_MHz", rep.mu},
        {"zeta_diff_form_MHz", rep.zeta_diff_form},
        {"zeta_mu_form_MHz", rep.zeta_mu_form},
        {"form_discrepancy_MHz", rep.form_discrepancy},
        {"zeta_with_target_MHz", rep.zeta_with_target},
        {"perturbative_warning", rep.perturbative_warning},
        {"target_tone_warning", rep.target_tone_warning}};
}

std::string stark_report_to_csv(const stark::StarkInputs& in,
                                const stark::StarkReport& rep) {
    std::ostringstream os;
    os << "eps0_MHz,eps1_MHz,eps_t_MHz,delta_t_MHz,delta0_MHz,delta1_MHz,"
          "mu_MHz,zeta_diff_form_MHz,zeta_mu_form_MHz,form_discrepancy_MHz,"
          "zeta_with_target_MHz,perturbative_warning,target_tone_warning\n";
    os << fmt_g9(in.eps0) << "," << fmt_g9(in.eps1) << "," << fmt_g9(in.eps_t)
       << "," << fmt_g9(in.delta_t) << "," << fmt_g9(rep.delta0) << ","
       << fmt_g9(rep.delta1) << "," << fmt_g9(rep.mu) << ","
       << fmt_g9(rep.zeta_diff_form) << "," << fmt_g9(rep.zeta_mu_form) << ","
       << fmt_g9(rep.form_discrepancy) << "," << fmt_g9(rep.zeta_with_target)
       << "," << int(rep.perturbative_warning) << ","
       << int(rep.target_tone_warning) << "\n";
    return os.str();
}

json bench_report_to_json(const DepthReport& rep) {
    json j;
    j["seeds"] = rep.seeds;
    j["rows"] = json::array();
    for (const auto& r : rep.rows)
        j["rows"].push_back({{"n", r.n},
                             {"topology", r.topology},
                             {"seed", r.seed},
                             {"depth", r.depth},
                             {"depth_2q_only", r.depth_2q},
                             {"swaps", r.swaps},
                             {"verified", r.verified},
                             {"depth_contention_on", r.depth_contention_on},
                             {"depth_contention_off", r.depth_contention_off}});
    j["reductions"] = json::array();
    for (const auto& s : rep.reductions)
        j["reductions"].push_back({{"n", s.n},
                                   {"depth_hybrid", s.depth_hybrid},
                                   {"depth_heavyhex", s.depth_heavyhex},
                                   {"reduction_pct", s.reduction_pct}});
    j["notes"] = "depth counts gate layers only; measurement excluded";
    return j;
}

std::string bench_report_to_csv(const DepthReport& rep) {
    std::ostringstream os;
    os << "n,topology,seed,depth,depth_2q_only,swaps,verified\n";
    for (const auto& r : rep.rows)
        os << r.n << "," << r.topology << "," << r.seed << "," << r.depth
           << "," << r.depth_2q << "," << r.swaps << "," << int(r.verified)
           << "\n";
    return os.str();
}

std::string coupling_map_to_csv(const CouplingMap& map) {
    std::ostringstream os;
    os << "a,b,cluster_id\n";
    for (const Edge& e : map.edges) {
        const int cid = map.cluster_of_edge(e.a, e.b);
        os << e.a << "," << e.b << ",";
        if (cid >= 0) os << cid;
        os << "\n";
    }
    return os.str();
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out << content;
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw std::runtime_error("write failed: " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        const int err = errno;
        std::remove(tmp.c_str());
        throw std::runtime_error("rename failed for " + path + ": " +
                                 std::strerror(err));
    }
}

}  // namespace zzlattice
