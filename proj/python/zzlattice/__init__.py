"""Coupled-transmon ZZ spectroscopy and lattice routing tools."""

from ._core import (  # noqa: F401
    ClusterSpec,
    CouplerCluster,
    CouplerSpec,
    CouplingMap,
    CouplingSpec,
    Circuit,
    DriveSpec,
    Gate,
    Layout,
    RoutedCircuit,
    TransmonSpec,
    ConfigError,
    EmptyResultError,
    LabelingAmbiguousError,
    ResourceError,
    VerificationError,
    all_to_all_map,
    benchmark_grover,
    bitstring_index,
    build_cluster_hamiltonian,
    decompose_mcx,
    diagonalize,
    distance_matrix,
    flux_to_frequency,
    gates_on_edges,
    grover_circuit,
    grover_iterations,
    heavy_hex_map,
    hybrid_grid_map,
    is_connected,
    mcx_decompose,
    pair_peak_matrix,
    route,
    schedule_depth,
    schedule_depth_2q,
    simulate_statevector,
    stark_cancellation_drive,
    stark_report,
    sweep_2d,
    sweep_coupler,
    sweep_phase,
    unitary_of,
    verify_routed,
    zz_rate,
)

__version__ = "0.1.0"
