#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zzlattice/config_io.hpp"
#include "zzlattice/coupling_map.hpp"
#include "zzlattice/router.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* p = std::getenv("ZZLATTICE_CLI");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    const auto d = fs::temp_directory_path() / "zzl_cli_tests";
    fs::create_directories(d);
    return d;
}

RunResult run_cli(const std::string& args) {
    const auto d = work_dir();
    const auto out_f = d / "stdout.txt";
    const auto err_f = d / "stderr.txt";
    const std::string cmd = cli_path() + " " + args + " >" + out_f.string() +
                            " 2>" + err_f.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    r.out = zzlattice::read_text(out_f.string());
    r.err = zzlattice::read_text(err_f.string());
    return r;
}

std::string write_two_qubit_config(const std::string& name,
                                   double eta0 = -0.215) {
    const json j = {
        {"qubits", {{{"omega_GHz", 5.24}, {"eta_GHz", eta0}, {"levels", 3}},
                    {{"omega_GHz", 5.02}, {"eta_GHz", -0.209}, {"levels", 3}}}},
        {"coupler", {{"omega_c_GHz", 6.2}, {"eta_c_GHz", -0.2}}},
        {"couplings", {{{"qubit", 0}, {"J_GHz", 0.08}},
                       {{"qubit", 1}, {"J_GHz", 0.08}}}},
    };
    const auto path = work_dir() / name;
    std::ofstream(path) << j.dump(2);
    return path.string();
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char ch : s) n += ch == '\n';
    return n;
}

}  // namespace

TEST_CASE("zz subcommand reports the static rate", "[cli]") {
    const auto cfg = write_two_qubit_config("cfg_zz.json");
    const auto out = (work_dir() / "zz_out").string();
    const auto r = run_cli("zz --config " + cfg + " --out " + out);
    CHECK(r.exit_code == 0);
    const auto j = json::parse(zzlattice::read_text(out + ".json"));
    const double zeta = j["zeta_MHz"].get<double>();
    CHECK(zeta < -4.0);
    CHECK(zeta > -6.0);
    CHECK(j["run"]["command"] == "zz");
    CHECK(j.contains("effective_config"));
    // CSV twin exists with a header and one data row
    const auto csv = zzlattice::read_text(out + ".csv");
    CHECK(count_lines(csv) == 2);
}

TEST_CASE("sweep-phase writes one CSV row per point", "[cli]") {
    const auto cfg = write_two_qubit_config("cfg_sweep.json");
    const auto out = (work_dir() / "sweep_out").string();
    const auto r =
        run_cli("sweep-phase --config " + cfg + " --points 64 --out " + out);
    CHECK(r.exit_code == 0);
    const auto csv = zzlattice::read_text(out + ".csv");
    CHECK(count_lines(csv) == 65);  // header + 64 points
    std::istringstream is(csv);
    std::string header;
    std::getline(is, header);
    CHECK(header == "phase_rad,zeta_MHz,label_ok");
    const auto j = json::parse(zzlattice::read_text(out + ".json"));
    CHECK(j["axis1"]["values"].size() == 64);
    CHECK(j["metadata"]["drives_defaulted"].get<bool>());
    CHECK(j["run"]["params"]["points"].get<int>() == 64);
    // defaults that were applied are disclosed
    CHECK(j.contains("applied_defaults"));
}

TEST_CASE("stark subcommand needs no config and nulls exactly", "[cli]") {
    const auto out = (work_dir() / "stark_out").string();
    // eps_t = -(10+14)/2 = -12 cancels the rate exactly
    const auto r = run_cli(
        "stark --eps0 10 --eps1 14 --delta -80 --epst -12 --out " + out);
    CHECK(r.exit_code == 0);
    const auto j = json::parse(zzlattice::read_text(out + ".json"));
    CHECK(j["zeta_mu_form_MHz"].get<double>() == -42.0);
    CHECK(j["zeta_with_target_MHz"].get<double>() == 0.0);
}

TEST_CASE("validation failures exit 1 with the expected prefix", "[cli]") {
    const auto cfg = write_two_qubit_config("cfg_bad.json", +0.215);
    const auto out = (work_dir() / "bad_out").string();
    const auto r = run_cli("zz --config " + cfg + " --out " + out);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("ERROR:validation:") != std::string::npos);
    CHECK(r.err.find("eta") != std::string::npos);
    // no output artifacts on failure
    CHECK_FALSE(fs::exists(out + ".json"));

    // unknown flags and missing subcommands are validation failures too
    CHECK(run_cli("zz --config " + cfg + " --bogus-flag 3").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);

    // resonant stark model is a validation error
    const auto r2 = run_cli("stark --eps0 10 --eps1 14 --delta 0 --out " +
                            (work_dir() / "x").string());
    CHECK(r2.exit_code == 1);
    CHECK(r2.err.find("ERROR:validation:") != std::string::npos);
}

TEST_CASE("gen-map emits the hybrid grid", "[cli]") {
    const auto out = (work_dir() / "map_out").string();
    const auto r = run_cli("gen-map --topology hybrid --rows 3 --cols 3 --out " + out);
    CHECK(r.exit_code == 0);
    const auto j = json::parse(zzlattice::read_text(out + ".json"));
    CHECK(j["n_qubits"].get<int>() == 9);
    CHECK(j["edges"].size() == 20);
    CHECK(j["clusters"].size() == 4);
    const auto csv = zzlattice::read_text(out + ".csv");
    CHECK(count_lines(csv) == 21);  // header + 20 edges
}

TEST_CASE("bench-grover small run produces rows and reductions", "[cli]") {
    const auto out = (work_dir() / "bench_out").string();
    const auto r = run_cli(
        "bench-grover --n 2..3 --topologies hybrid,heavyhex --seeds 2 --out " +
        out);
    CHECK(r.exit_code == 0);
    const auto j = json::parse(zzlattice::read_text(out + ".json"));
    CHECK(j["rows"].size() == 8);  // 2 sizes x 2 topologies x 2 seeds
    CHECK(j["reductions"].size() == 2);
    for (const auto& row : j["rows"]) CHECK(row["verified"].get<bool>());
    const auto csv = zzlattice::read_text(out + ".csv");
    CHECK(count_lines(csv) == 9);
}

TEST_CASE("verify accepts a faithful routing and rejects a corrupted one",
          "[cli]") {
    using namespace zzlattice;
    const auto d = work_dir();
    const auto c = grover_circuit(3, "110");
    const auto m = heavy_hex_map(5);
    const auto routed = route(c, m, std::nullopt, 4);

    const auto orig_p = (d / "verify_orig.json").string();
    const auto routed_p = (d / "verify_routed.json").string();
    write_text_atomic(orig_p, circuit_to_json(c).dump(2) + "\n");
    write_text_atomic(routed_p, routed_to_json(routed).dump(2) + "\n");

    const auto out = (d / "verify_out").string();
    const auto ok = run_cli("verify --original " + orig_p + " --routed " +
                            routed_p + " --out " + out);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("verify: ok") != std::string::npos);
    const auto j = json::parse(read_text(out + ".json"));
    CHECK(j["ok"].get<bool>());
    CHECK(j["max_deviation"].get<double>() < 1e-9);

    // tamper: drop the first inserted SWAP (or flip a gate if swap-free)
    RoutedCircuit broken = routed;
    bool removed = false;
    for (size_t i = 0; i < broken.circuit.gates.size(); ++i)
        if (broken.circuit.gates[i].kind == GateKind::Swap) {
            broken.circuit.gates.erase(broken.circuit.gates.begin() + i);
            removed = true;
            break;
        }
    if (!removed) broken.circuit.gates[0].kind = GateKind::X;
    write_text_atomic(routed_p, routed_to_json(broken).dump(2) + "\n");
    const auto bad = run_cli("verify --original " + orig_p + " --routed " +
                             routed_p + " --out " + out);
    CHECK(bad.exit_code == 3);
    CHECK(bad.err.find("ERROR:verification:") != std::string::npos);
    // the report artifact is still written for diagnosis
    const auto jbad = json::parse(read_text(out + ".json"));
    CHECK_FALSE(jbad["ok"].get<bool>());
}

TEST_CASE("sweep-coupler supports explicit window and static configs",
          "[cli]") {
    const auto cfg = write_two_qubit_config("cfg_coupler.json");
    const auto out = (work_dir() / "coupler_out").string();
    const auto r = run_cli("sweep-coupler --config " + cfg +
                           " --points 5 --omega-min 6.0 --omega-max 6.4 "
                           "--out " + out);
    CHECK(r.exit_code == 0);
    const auto j = json::parse(zzlattice::read_text(out + ".json"));
    REQUIRE(j["axis1"]["values"].size() == 5);
    CHECK(j["axis1"]["values"][0].get<double>() == 6.0);
    CHECK(j["axis1"]["values"][4].get<double>() == 6.4);
    CHECK_FALSE(j["metadata"]["drives_defaulted"].get<bool>());
}
