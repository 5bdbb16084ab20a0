#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "support/fixtures.hpp"
#include "support/reference.hpp"
#include "zzlattice/zz.hpp"

using namespace zzlattice;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
    return v;
}

}  // namespace

TEST_CASE("uncoupled qubits have zero ZZ", "[zz]") {
    ClusterSpec spec = fixtures::two_qubit();
    spec.couplings.clear();
    CHECK_THAT(zz_rate(spec, 0, 1), WithinAbs(0.0, 1e-9));
}

TEST_CASE("static ZZ matches the independent reference pipeline", "[zz]") {
    std::mt19937_64 rng(2026);
    int checked = 0;
    for (int trial = 0; trial < 12 && checked < 8; ++trial) {
        const auto spec = fixtures::random_spec(rng, 2 + int(rng() % 3), 3,
                                                trial % 3 == 0);
        bool ok = false;
        const double ref = oracle::ref_zz_rate(spec, 0, 1, &ok);
        if (!ok) continue;  // oracle hit an ambiguous labeling; skip point
        const double lib = zz_rate(spec, 0, 1);
        // Both values are in MHz; agreement well below any physical scale.
        CHECK_THAT(lib, WithinAbs(ref, 1e-6));
        ++checked;
    }
    CHECK(checked >= 5);
}

TEST_CASE("device-regime static ZZ is finite and negative at 6.2 GHz", "[zz]") {
    const auto spec = fixtures::two_qubit(6.2);
    const double z = zz_rate(spec, 0, 1);
    CHECK(std::isfinite(z));
    CHECK(z < 0.0);          // straddled coupler regime
    CHECK(std::abs(z) < 50.0);  // MHz scale sanity
}

TEST_CASE("ZZ is symmetric under pair exchange", "[zz]") {
    const auto spec = fixtures::three_qubit();
    CHECK_THAT(zz_rate(spec, 0, 1), WithinAbs(zz_rate(spec, 1, 0), 1e-9));
    CHECK_THAT(zz_rate(spec, 1, 2), WithinAbs(zz_rate(spec, 2, 1), 1e-9));
}

TEST_CASE("bad pair indices are rejected", "[zz]") {
    const auto spec = fixtures::two_qubit();
    CHECK_THROWS_AS(zz_rate(spec, 0, 0), ConfigError);  // equal members
    CHECK_THROWS_AS(zz_rate(spec, 0, 5), std::out_of_range);
    CHECK_THROWS_AS(zz_rate(spec, -1, 1), std::out_of_range);
}

TEST_CASE("phase sweep is 2pi-periodic and honors defaults", "[zz]") {
    ClusterSpec spec = fixtures::two_qubit();  // no drives in the config
    const auto res = sweep_phase(spec, 0, 1, linspace(0.0, 2 * M_PI, 9));
    REQUIRE(res.n_points() == 9);
    CHECK(res.meta.drives_defaulted);
    REQUIRE(res.meta.effective_drives.size() == 2);
    CHECK_THAT(res.meta.effective_drives[0].amp, WithinAbs(0.020, 1e-15));
    // omega_d defaults to omega(second member) - 0.1
    CHECK_THAT(res.meta.effective_drives[0].omega_d,
               WithinAbs(spec.qubits[1].omega - 0.1, 1e-12));
    for (int i = 0; i < 9; ++i) CHECK(res.label_ok[i] == 1);
    // endpoints are the same physical point
    CHECK_THAT(res.zeta_mhz.front(), WithinAbs(res.zeta_mhz.back(), 1e-6));
    // the drive actually moves zeta across the sweep
    const auto [mn, mx] =
        std::minmax_element(res.zeta_mhz.begin(), res.zeta_mhz.end());
    CHECK(*mx - *mn > 1e-6);
}

TEST_CASE("explicit drives are kept, not replaced by defaults", "[zz]") {
    ClusterSpec spec = fixtures::two_qubit();
    spec.drives = fixtures::pair_drives(spec, 0, 1, 0.015, -0.12);
    const auto res = sweep_phase(spec, 0, 1, linspace(0.0, M_PI, 5));
    CHECK_FALSE(res.meta.drives_defaulted);
    CHECK_THAT(res.meta.effective_drives[0].amp, WithinAbs(0.015, 1e-15));
}

TEST_CASE("zero-amplitude drives give a phase-independent sweep", "[zz]") {
    ClusterSpec spec = fixtures::two_qubit();
    spec.drives = fixtures::pair_drives(spec, 0, 1, 0.0, -0.1);
    const auto res = sweep_phase(spec, 0, 1, linspace(0.0, 2 * M_PI, 7));
    for (int i = 1; i < res.n_points(); ++i)
        CHECK_THAT(res.zeta_mhz[i], WithinAbs(res.zeta_mhz[0], 1e-9));
}

TEST_CASE("phase sweep point matches a direct zz_rate call", "[zz]") {
    ClusterSpec spec = fixtures::two_qubit();
    const double phi = 1.25;
    const auto res = sweep_phase(spec, 0, 1, {phi});
    ClusterSpec manual = spec;
    manual.drives = default_pair_drives(spec, 0, 1);
    manual.drives[1].phase = phi;
    CHECK_THAT(res.zeta_mhz[0], WithinAbs(zz_rate(manual, 0, 1), 1e-9));
}

TEST_CASE("static coupler sweep is smooth and crossing-free here", "[zz]") {
    // With purely coupler-mediated coupling the static zeta keeps its sign
    // as the coupler detunes away; the detector must not report spurious
    // crossings on a monotone curve.
    const auto spec = fixtures::two_qubit();
    const auto omegas = linspace(5.6, 7.4, 19);
    const auto res = sweep_coupler(spec, 0, 1, omegas, 0.0);
    REQUIRE(res.n_points() == 19);
    CHECK_FALSE(res.meta.drives_defaulted);
    CHECK(res.zero_crossings.empty());
    for (int i = 0; i < res.n_points(); ++i) {
        CHECK(res.label_ok[i] == 1);
        CHECK(res.zeta_mhz[i] < 0.0);
    }
    // |zeta| decreases as the coupler detunes upward
    for (int i = 1; i < res.n_points(); ++i)
        CHECK(std::abs(res.zeta_mhz[i]) < std::abs(res.zeta_mhz[i - 1]));
}

TEST_CASE("strong drive cancels the static ZZ at two phases", "[zz]") {
    // 45 MHz tones detuned 100 MHz below qubit 1: the drive-induced term
    // overcomes the -5 MHz static zeta near phi = pi, giving a pair of
    // cancellation phases symmetric about pi.
    ClusterSpec spec = fixtures::two_qubit();
    spec.drives = fixtures::pair_drives(spec, 0, 1, 0.045, -0.1);
    const auto res = sweep_phase(spec, 0, 1, linspace(0.0, 2 * M_PI, 33));
    REQUIRE(res.zero_crossings.size() == 2);
    const double p0 = res.zero_crossings[0].axis1;
    const double p1 = res.zero_crossings[1].axis1;
    // symmetric about pi
    CHECK_THAT(p0 + p1, WithinAbs(2 * M_PI, 0.05));
    // re-evaluating at the interpolated crossing gives a near-null zeta
    for (double phi : {p0, p1}) {
        ClusterSpec at = spec;
        at.drives[1].phase = phi;
        CHECK(std::abs(zz_rate(at, 0, 1)) < 0.2);  // MHz
    }
}

TEST_CASE("far-detuned coupler suppresses |zeta|", "[zz]") {
    const auto near = fixtures::two_qubit(6.2);
    ClusterSpec far = fixtures::two_qubit(9.5);
    const double z_near = std::abs(zz_rate(near, 0, 1));
    const double z_far = std::abs(zz_rate(far, 0, 1));
    CHECK(z_far < z_near / 5.0);
}

TEST_CASE("2D sweep rows agree with 1D phase sweeps", "[zz]") {
    ClusterSpec spec = fixtures::two_qubit();
    const auto omegas = linspace(6.1, 6.3, 3);
    const auto phases = linspace(0.0, M_PI, 4);
    const auto grid = sweep_2d(spec, 0, 1, omegas, phases);
    REQUIRE(grid.n_points() == 12);
    REQUIRE(grid.axis2.has_value());
    for (int r = 0; r < 3; ++r) {
        ClusterSpec row_spec = spec;
        row_spec.coupler.omega_c = omegas[r];
        const auto row = sweep_phase(row_spec, 0, 1, phases);
        for (int cidx = 0; cidx < 4; ++cidx)
            CHECK_THAT(grid.zeta_mhz[r * 4 + cidx],
                       WithinAbs(row.zeta_mhz[cidx], 1e-9));
    }
}

TEST_CASE("pair matrix is symmetric with zero diagonal", "[zz]") {
    // At J = 0.08 the 3- and 4-excitation labels of this crowded 4-qubit
    // stack sit so close to the 0.5 threshold that default drives tip some
    // pairs into all-gap sweeps; J = 0.06 keeps every pair labelable.
    auto spec = fixtures::four_qubit();
    for (auto& c : spec.couplings) c.j = 0.06;
    const auto m = pair_peak_matrix(spec, linspace(0.0, 2 * M_PI, 8));
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK_THAT(m(i, i), WithinAbs(0.0, 1e-15));
        for (int j = i + 1; j < 4; ++j) {
            CHECK_THAT(m(i, j), WithinAbs(m(j, i), 1e-12));
            CHECK(std::isfinite(m(i, j)));
            CHECK(m(i, j) >= 0.0);  // peak magnitude
        }
    }
}

TEST_CASE("pair matrix marks unlabelable pairs as gaps, not errors", "[zz]") {
    // the same stack at J = 0.08: several pairs lose every phase point to
    // ambiguous labeling and must come back NaN rather than throwing
    const auto spec = fixtures::four_qubit();
    const auto m = pair_peak_matrix(spec, linspace(0.0, M_PI, 3));
    int finite = 0, gaps = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            (std::isfinite(m(i, j)) ? finite : gaps) += 1;
    CHECK(finite + gaps == 6);
    CHECK(gaps > 0);
    CHECK(finite > 0);
}

TEST_CASE("pair matrix requires a 4-qubit cluster", "[zz]") {
    const auto spec = fixtures::two_qubit();
    CHECK_THROWS_AS(pair_peak_matrix(spec, {0.0}), ConfigError);
}

TEST_CASE("truncation is converged at the reporting precision", "[zz]") {
    ClusterSpec s3 = fixtures::two_qubit();
    ClusterSpec s4 = s3;
    for (auto& q : s4.qubits) q.levels = 4;
    const double z3 = zz_rate(s3, 0, 1);
    const double z4 = zz_rate(s4, 0, 1);
    // 3 -> 4 levels moves the static zeta by well under a percent
    CHECK(std::abs(z4 - z3) < 0.01 * std::max(1.0, std::abs(z3)));
}

TEST_CASE("flux-specified coupler resolves through the junction map", "[zz]") {
    ClusterSpec spec = fixtures::two_qubit();
    const double target = spec.coupler.omega_c;
    ClusterSpec via_flux = spec;
    via_flux.coupler.omega_c = 0.0;
    via_flux.coupler.omega_c_max = 6.8;
    // choose flux so omega_c_max*sqrt(cos(pi*f)) = target
    const double ratio = target / 6.8;
    via_flux.coupler.flux = std::acos(ratio * ratio) / M_PI;
    // config loader resolves flux; here emulate by direct evaluation
    via_flux.coupler.omega_c =
        flux_to_frequency(via_flux.coupler, *via_flux.coupler.flux);
    CHECK_THAT(zz_rate(via_flux, 0, 1), WithinAbs(zz_rate(spec, 0, 1), 1e-6));
}
